// Error vocabulary for precondition violations and malformed input.
// An infeasible extension is a normal result, not an error.
#pragma once

#include <stdexcept>
#include <string>

namespace arcx {

enum class ErrorKind {
  InvalidInput,
  Disconnected,
  SharedEndpoints,
  NotHellyCandidate,
  LimitExceeded,
  CyclicPrec,
  OrderMismatch,
  PlacementFailed,
  NoNontrivialIsland,
  BoundsExceeded,
  InvalidInstance,
  TTooSmall,
  InvalidPartition,
  MalformedCertificate,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace arcx
