#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bracekit {

enum class Errc {
  NotAssociative,
  NoIdentity,
  NoInverse,
  NotLatin,
  NotNormal,
  NotAbelian,
  NotCyclic,
  NotCharacteristic,
  NotCoprime,
  OrderBoundExceeded,
  ArityTooLarge,
  AxiomFails,
  ClosureFails,
  HypothesisFails,
  BadInput,
  Io,
  ValidationFailed,
};

const char* errc_name(Errc c);

/// Library-wide error type. `witness()` carries the offending indices
/// (e.g. the (a,b,c) triple for an associativity failure) when there is one.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::vector<int> witness = {})
      : std::runtime_error(message), code_(code), witness_(std::move(witness)) {}

  Errc code() const { return code_; }
  const std::vector<int>& witness() const { return witness_; }

 private:
  Errc code_;
  std::vector<int> witness_;
};

}  // namespace bracekit
