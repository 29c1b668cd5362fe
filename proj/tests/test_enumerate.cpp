#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "bracekit/enumerate.hpp"
#include "bracekit/small_groups.hpp"
#include "bracekit/version.hpp"
#include "support/oracle.hpp"

using namespace bracekit;

TEST_CASE("the trivial group has exactly one brace") {
  auto braces = enumerate_braces(cyclic_group(1));
  REQUIRE(braces.size() == 1);
  CHECK(braces[0].order() == 1);
}

TEST_CASE("holomorph enumeration equals the direct table search up to order 6") {
  for (int order = 1; order <= 6; ++order) {
    for (const auto* entry : groups_of_order(order)) {
      auto expected = testing::direct_brace_mul_tables(entry->group);
      auto braces = enumerate_braces(entry->group);
      std::vector<std::vector<int>> actual;
      for (const SkewBrace& b : braces) actual.push_back(b.mul.table);
      CHECK_MESSAGE(actual == expected, entry->name);
    }
  }
}

TEST_CASE("raw brace counts per additive group") {
  std::map<std::string, std::size_t> expected = {
      {"Z1", 1},  {"Z2", 1},    {"Z3", 1},        {"Z4", 2},  {"Z2xZ2", 4},
      {"Z5", 1},  {"Z6", 2},    {"S3", 8},        {"Z7", 1},  {"Z8", 6},
      {"Z4xZ2", 28}, {"Z2xZ2xZ2", 232}, {"D4", 20}, {"Q8", 28}};
  for (const auto& [name, count] : expected) {
    const NamedGroup* entry = nullptr;
    for (const NamedGroup& g : small_groups_catalog())
      if (g.name == name) entry = &g;
    REQUIRE(entry != nullptr);
    CHECK_MESSAGE(enumerate_braces(entry->group).size() == count, name);
  }
}

TEST_CASE("enumeration respects the order bound") {
  CHECK_THROWS_AS(enumerate_braces(direct_product(cyclic_group(4), cyclic_group(4))), Error);
  CHECK_NOTHROW(enumerate_braces(cyclic_group(13), 16));
}

TEST_CASE("every enumerated structure embeds as a regular subgroup of the holomorph") {
  for (const FiniteGroup& add :
       {cyclic_group(6), symmetric_group(3), direct_product(cyclic_group(4), cyclic_group(2))}) {
    AutGroup auts = automorphism_group(add);
    FiniteGroup hol = holomorph_group(add, auts);
    CHECK_NOTHROW(validate_group(hol.n, hol.table));
    for (const SkewBrace& b : enumerate_braces(add)) {
      // Recover each lambda map and locate (a, lambda_a) inside Hol.
      std::vector<int> members;
      std::set<int> translations;
      for (int a = 0; a < add.n; ++a) {
        std::vector<int> perm(add.n);
        for (int x = 0; x < add.n; ++x) perm[x] = add.op(add.inv[a], b.mul.op(a, x));
        int phi = auts.index_of(perm);
        REQUIRE(phi >= 0);
        members.push_back(a * auts.size() + phi);
        translations.insert(a);
      }
      CHECK(translations.size() == static_cast<std::size_t>(add.n));
      CHECK_NOTHROW(make_subgroup(hol, members));  // closed, hence a regular subgroup
    }
  }
}

TEST_CASE("brace isomorphism is reflexive and survives relabeling") {
  FiniteGroup z4xz2 = direct_product(cyclic_group(4), cyclic_group(2));
  auto braces = enumerate_braces(z4xz2);
  REQUIRE(braces.size() >= 2);
  const SkewBrace& b = braces[3];
  CHECK(brace_isomorphic(b, b));

  // Relabel the carrier by a fixed permutation fixing 0.
  std::vector<int> sigma = {0, 3, 5, 1, 7, 2, 6, 4};
  SkewBrace relabeled;
  int n = b.order();
  std::vector<int> add_t(n * n), mul_t(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      add_t[sigma[x] * n + sigma[y]] = sigma[b.addop(x, y)];
      mul_t[sigma[x] * n + sigma[y]] = sigma[b.mulop(x, y)];
    }
  relabeled = validate_skew_brace(n, add_t, mul_t);
  CHECK(brace_isomorphic(b, relabeled));
  CHECK(brace_isomorphic(relabeled, b));

  // Transitivity spot check through a second relabeling.
  std::vector<int> sigma2 = {0, 5, 1, 6, 2, 7, 3, 4};
  std::vector<int> add_t2(n * n), mul_t2(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      add_t2[sigma2[x] * n + sigma2[y]] = sigma2[relabeled.addop(x, y)];
      mul_t2[sigma2[x] * n + sigma2[y]] = sigma2[relabeled.mulop(x, y)];
    }
  SkewBrace twice = validate_skew_brace(n, add_t2, mul_t2);
  CHECK(brace_isomorphic(relabeled, twice));
  CHECK(brace_isomorphic(b, twice));
}

TEST_CASE("braces over non-isomorphic additive groups are never isomorphic") {
  SkewBrace a = trivial_brace(cyclic_group(4));
  SkewBrace b = trivial_brace(direct_product(cyclic_group(2), cyclic_group(2)));
  CHECK_FALSE(brace_isomorphic(a, b));
}

TEST_CASE("isomorphism classes match pairwise reduction at order 8") {
  FiniteGroup z4xz2 = direct_product(cyclic_group(4), cyclic_group(2));
  auto braces = enumerate_braces(z4xz2);

  // Greedy pairwise reduction with the search-based test.
  std::vector<const SkewBrace*> reps;
  for (const SkewBrace& b : braces) {
    bool duplicate = false;
    for (const SkewBrace* r : reps)
      if (brace_isomorphic(*r, b)) {
        duplicate = true;
        break;
      }
    if (!duplicate) reps.push_back(&b);
  }

  BraceCorpus corpus = build_corpus({8});
  std::size_t via_corpus = 0;
  for (const auto& entry : corpus.entries)
    if (entry.add_iso_class == "Z4xZ2") ++via_corpus;
  CHECK(via_corpus == reps.size());
}

TEST_CASE("corpus construction, ids and iso-class counts") {
  BraceCorpus tiny = build_corpus({1});
  REQUIRE(tiny.entries.size() == 1);
  CHECK(tiny.entries[0].id == "o1-g0-b0");
  CHECK(tiny.generator == kGeneratorName);

  BraceCorpus corpus = build_corpus({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
  std::map<int, int> per_order;
  for (const auto& e : corpus.entries) ++per_order[e.order];
  std::map<int, int> expected = {{1, 1}, {2, 1}, {3, 1}, {4, 4},  {5, 1},  {6, 6},
                                 {7, 1}, {8, 47}, {9, 4}, {10, 6}, {11, 1}, {12, 38}};
  CHECK(per_order == expected);
  CHECK(corpus.entries.size() == 111);

  // Canonical ordering and unique ids.
  std::set<std::string> ids;
  const CorpusEntry* prev = nullptr;
  for (const auto& e : corpus.entries) {
    CHECK(ids.insert(e.id).second);
    if (prev) {
      bool ordered = std::tuple(prev->order, prev->group_index, prev->brace_index) <
                     std::tuple(e.order, e.group_index, e.brace_index);
      CHECK(ordered);
    }
    prev = &e;
    CHECK(e.id == "o" + std::to_string(e.order) + "-g" + std::to_string(e.group_index) +
                      "-b" + std::to_string(e.brace_index));
  }
}

TEST_CASE("the order-6 corpus lists the expected multiplicative classes") {
  BraceCorpus corpus = build_corpus({6});
  std::vector<std::pair<std::string, std::string>> classes;
  for (const auto& e : corpus.entries) classes.emplace_back(e.add_iso_class, e.mul_iso_class);
  std::vector<std::pair<std::string, std::string>> expected = {
      {"Z6", "S3"}, {"Z6", "Z6"}, {"S3", "Z6"}, {"S3", "S3"}, {"S3", "S3"}, {"S3", "Z6"}};
  CHECK(classes == expected);
}

TEST_CASE("build_corpus rejects orders outside the bound") {
  CHECK_THROWS_AS(build_corpus({13}), Error);
  CHECK_THROWS_AS(build_corpus({0}), Error);
  CHECK_NOTHROW(build_corpus({13}, 16));
}
