#include "arcx/errors.hpp"

namespace arcx {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::SharedEndpoints: return "SharedEndpoints";
    case ErrorKind::NotHellyCandidate: return "NotHellyCandidate";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::CyclicPrec: return "CyclicPrec";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::PlacementFailed: return "PlacementFailed";
    case ErrorKind::NoNontrivialIsland: return "NoNontrivialIsland";
    case ErrorKind::BoundsExceeded: return "BoundsExceeded";
    case ErrorKind::InvalidInstance: return "InvalidInstance";
    case ErrorKind::TTooSmall: return "TTooSmall";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::MalformedCertificate: return "MalformedCertificate";
  }
  return "Unknown";
}

}  // namespace arcx
