// Result of a representation-extension solver.
#pragma once

#include <optional>
#include <string>

#include "arcx/core.hpp"

namespace arcx {

/// Either a representation, or a reason why no extension exists.
struct Extension {
  std::optional<Representation> representation;
  std::string reason;

  bool ok() const { return representation.has_value(); }
  static Extension yes(Representation r) { return {std::move(r), {}}; }
  static Extension no(std::string why) { return {std::nullopt, std::move(why)}; }
};

}  // namespace arcx
