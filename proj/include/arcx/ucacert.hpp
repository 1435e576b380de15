// Certificate checking for unit extension: a vertex order and a set of wrap edges fix a
// system of difference constraints on the tail coordinates, decided exactly.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arcx/core.hpp"
#include "arcx/verify.hpp"

namespace arcx {

/// Coordinates are in arc-length units: every arc has length 1 and the circle has
/// length `circumference`. Predrawn tails are scaled from the unit circle.
struct UcaCertificate {
  LinearOrder order;
  std::vector<std::pair<VertexId, VertexId>> wrap_edges;
  Rational circumference;
};

struct CertificateResult {
  bool feasible = false;
  std::vector<Rational> x;
  std::optional<Representation> representation;
  /// check(UCA) of the realized representation against the predrawn arcs.
  Report verification;
  std::string reason;
};

/// Throws Error(MalformedCertificate). With `relax_strict` every < becomes <=.
CertificateResult check_certificate(const Graph& g, const PartialRepresentation& partial, const UcaCertificate& cert,
                                    bool relax_strict = false);

/// Whether `x` satisfies every constraint of the system exactly.
bool satisfies(const Graph& g, const PartialRepresentation& partial, const UcaCertificate& cert,
               const std::vector<Rational>& x, bool relax_strict = false);

/// Arc [x_i, x_i + 1] scaled onto the unit circle.
Representation witness_to_representation(const Graph& g, const UcaCertificate& cert, const std::vector<Rational>& x);

}  // namespace arcx
