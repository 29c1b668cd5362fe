#include "bracekit/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>

#include "bracekit/parallel.hpp"
#include "bracekit/small_groups.hpp"
#include "bracekit/version.hpp"

namespace bracekit {

HolomorphElement holomorph_compose(const FiniteGroup& add, const AutGroup& auts,
                                   const HolomorphElement& x, const HolomorphElement& y) {
  const auto& phi = auts.perms[x.automorphism];
  std::vector<int> comp(add.n);
  const auto& psi = auts.perms[y.automorphism];
  for (int t = 0; t < add.n; ++t) comp[t] = phi[psi[t]];
  int idx = auts.index_of(comp);
  if (idx < 0) throw Error(Errc::ValidationFailed, "automorphism set not closed");
  return HolomorphElement{add.op(x.translation, phi[y.translation]), idx};
}

FiniteGroup holomorph_group(const FiniteGroup& add, const AutGroup& auts, int size_bound) {
  long long order = static_cast<long long>(add.n) * auts.size();
  if (order > size_bound)
    throw Error(Errc::OrderBoundExceeded,
                "holomorph of order " + std::to_string(order) + " exceeds bound " +
                    std::to_string(size_bound));
  int n = static_cast<int>(order);
  int a = auts.size();
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int g = 0; g < add.n; ++g)
    for (int p = 0; p < a; ++p)
      for (int h = 0; h < add.n; ++h)
        for (int q = 0; q < a; ++q) {
          HolomorphElement z =
              holomorph_compose(add, auts, HolomorphElement{g, p}, HolomorphElement{h, q});
          table[(g * a + p) * n + (h * a + q)] = z.translation * a + z.automorphism;
        }
  return validate_group(n, table);
}

namespace {

// The search state maps each carrier element x to the automorphism index of
// its lambda map, or -1. A total consistent assignment is exactly a regular
// subgroup of the holomorph: { (x, lambda_x) }.
struct LambdaSearch {
  const FiniteGroup& add;
  const AutGroup& auts;
  std::vector<std::vector<int>> comp_table;  // aut composition, if small enough
  std::vector<std::vector<int>> results;     // completed assignments

  LambdaSearch(const FiniteGroup& g, const AutGroup& a) : add(g), auts(a) {
    if (auts.size() <= 512) {
      comp_table.assign(auts.size(), std::vector<int>(auts.size()));
      std::vector<int> comp(add.n);
      for (int i = 0; i < auts.size(); ++i)
        for (int j = 0; j < auts.size(); ++j) {
          for (int x = 0; x < add.n; ++x) comp[x] = auts.perms[i][auts.perms[j][x]];
          comp_table[i][j] = auts.index_of(comp);
        }
    }
  }

  int compose(int i, int j) const {
    if (!comp_table.empty()) return comp_table[i][j];
    std::vector<int> comp(add.n);
    for (int x = 0; x < add.n; ++x) comp[x] = auts.perms[i][auts.perms[j][x]];
    return auts.index_of(comp);
  }

  // Sets asg[x] = f and closes under the subgroup condition
  //   lambda_{p (+) lambda_p(q)} = lambda_p . lambda_q.
  bool assign_and_close(std::vector<int>& asg, std::vector<int>& defined, int x, int f) const {
    if (asg[x] >= 0) return asg[x] == f;
    asg[x] = f;
    defined.push_back(x);
    std::size_t head = defined.size() - 1;
    while (head < defined.size()) {
      int u = defined[head++];
      std::size_t count = defined.size();
      for (std::size_t i = 0; i < count; ++i) {
        int v = defined[i];
        for (auto [p, q] : {std::pair{u, v}, std::pair{v, u}}) {
          int z = add.op(p, auts.perms[asg[p]][q]);
          int w = compose(asg[p], asg[q]);
          if (asg[z] >= 0) {
            if (asg[z] != w) return false;
          } else {
            asg[z] = w;
            defined.push_back(z);
          }
        }
      }
    }
    return true;
  }

  void search(std::vector<int>& asg, std::vector<int>& defined) {
    int pivot = -1;
    for (int x = 0; x < add.n; ++x)
      if (asg[x] < 0) {
        pivot = x;
        break;
      }
    if (pivot < 0) {
      results.push_back(asg);
      return;
    }
    for (int f = 0; f < auts.size(); ++f) {
      std::vector<int> asg_copy = asg;
      std::vector<int> defined_copy = defined;
      if (assign_and_close(asg_copy, defined_copy, pivot, f)) search(asg_copy, defined_copy);
    }
  }
};

std::vector<int> mul_table_from_assignment(const FiniteGroup& add, const AutGroup& auts,
                                           const std::vector<int>& asg) {
  int n = add.n;
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    const auto& perm = auts.perms[asg[a]];
    for (int b = 0; b < n; ++b) mul[a * n + b] = add.op(a, perm[b]);
  }
  return mul;
}

}  // namespace

std::vector<SkewBrace> enumerate_braces(const FiniteGroup& add, int order_bound) {
  if (add.n > order_bound)
    throw Error(Errc::OrderBoundExceeded,
                "additive group order " + std::to_string(add.n) + " exceeds bound " +
                    std::to_string(order_bound));
  AutGroup auts = automorphism_group(add);
  LambdaSearch search(add, auts);
  {
    std::vector<int> asg(add.n, -1);
    std::vector<int> defined;
    // lambda_0 is forced to the identity.
    if (!search.assign_and_close(asg, defined, 0, 0))
      throw Error(Errc::ValidationFailed, "identity assignment failed");
    search.search(asg, defined);
  }
  std::vector<std::vector<int>> tables;
  tables.reserve(search.results.size());
  for (const auto& asg : search.results)
    tables.push_back(mul_table_from_assignment(add, auts, asg));
  std::sort(tables.begin(), tables.end());
  std::vector<SkewBrace> braces;
  braces.reserve(tables.size());
  for (const auto& mul : tables) braces.push_back(validate_skew_brace(add.n, add.table, mul));
  return braces;
}

bool brace_isomorphic(const SkewBrace& a, const SkewBrace& b) {
  if (a.order() != b.order()) return false;
  bool found = false;
  for_each_group_isomorphism(a.add, b.add, [&](const std::vector<int>& perm) {
    for (int x = 0; x < a.order(); ++x)
      for (int y = 0; y < a.order(); ++y)
        if (perm[a.mulop(x, y)] != b.mul.op(perm[x], perm[y])) return true;  // keep looking
    found = true;
    return false;
  });
  return found;
}

namespace {

// Braces sharing one additive table are isomorphic exactly when an additive
// automorphism carries one multiplicative table to the other, so the orbit
// minimum is a canonical representative.
std::vector<int> canonical_mul_table(const FiniteGroup& add, const AutGroup& auts,
                                     const std::vector<int>& mul) {
  int n = add.n;
  std::vector<int> best = mul;
  std::vector<int> mapped(static_cast<std::size_t>(n) * n);
  std::vector<int> inv_perm(n);
  for (const auto& perm : auts.perms) {
    for (int x = 0; x < n; ++x) inv_perm[perm[x]] = x;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        mapped[x * n + y] = perm[mul[inv_perm[x] * n + inv_perm[y]]];
    if (mapped < best) best = mapped;
  }
  return best;
}

std::string iso_timestamp_now() {
  std::time_t tt;
  // Honor SOURCE_DATE_EPOCH so corpus builds can be made reproducible.
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
    tt = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  } else {
    tt = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  }
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

BraceCorpus build_corpus(const std::vector<int>& orders, int order_bound, int jobs) {
  std::vector<int> sorted_orders = orders;
  std::sort(sorted_orders.begin(), sorted_orders.end());
  sorted_orders.erase(std::unique(sorted_orders.begin(), sorted_orders.end()),
                      sorted_orders.end());
  for (int o : sorted_orders) {
    if (o < 1 || o > order_bound)
      throw Error(Errc::OrderBoundExceeded,
                  "corpus order " + std::to_string(o) + " outside 1.." +
                      std::to_string(order_bound));
    if (o > kCatalogMaxOrder)
      throw Error(Errc::OrderBoundExceeded, "no additive-group catalog beyond order " +
                                                std::to_string(kCatalogMaxOrder));
  }

  struct Task {
    int order;
    int group_index;
    const NamedGroup* group;
  };
  std::vector<Task> tasks;
  for (int o : sorted_orders) {
    auto groups = groups_of_order(o);
    for (std::size_t i = 0; i < groups.size(); ++i)
      tasks.push_back(Task{o, static_cast<int>(i), groups[i]});
  }

  std::vector<std::vector<CorpusEntry>> per_task(tasks.size());
  parallel_for_index(tasks.size(), jobs, [&](std::size_t t) {
    const Task& task = tasks[t];
    const FiniteGroup& add = task.group->group;
    AutGroup auts = automorphism_group(add);
    std::vector<SkewBrace> braces = enumerate_braces(add, order_bound);
    std::vector<std::vector<int>> seen_canonical;
    int brace_index = 0;
    for (const SkewBrace& brace : braces) {
      std::vector<int> canon = canonical_mul_table(add, auts, brace.mul.table);
      if (std::find(seen_canonical.begin(), seen_canonical.end(), canon) !=
          seen_canonical.end())
        continue;
      seen_canonical.push_back(canon);
      CorpusEntry entry;
      entry.order = task.order;
      entry.group_index = task.group_index;
      entry.brace_index = brace_index++;
      entry.id = "o" + std::to_string(task.order) + "-g" + std::to_string(task.group_index) +
                 "-b" + std::to_string(entry.brace_index);
      entry.add_iso_class = task.group->name;
      const NamedGroup* mul_class = identify_group(brace.mul);
      entry.mul_iso_class = mul_class ? mul_class->name : "?";
      entry.brace = brace;
      per_task[t].push_back(std::move(entry));
    }
  });

  BraceCorpus corpus;
  corpus.generator = kGeneratorName;
  corpus.orders = sorted_orders;
  corpus.timestamp = iso_timestamp_now();
  for (auto& chunk : per_task)
    for (auto& entry : chunk) corpus.entries.push_back(std::move(entry));
  return corpus;
}

}  // namespace bracekit
