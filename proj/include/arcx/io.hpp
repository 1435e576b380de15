// JSON instance, representation and certificate files with exact rational strings.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arcx/core.hpp"
#include "arcx/ucacert.hpp"
#include "arcx/verify.hpp"

namespace arcx {

/// {"vertices": [names], "edges": [[a, b], ...],
///  "predrawn": {name: {"tail": "p/q", "head": "p/q"}}, "class": "nhca",
///  "representation": {name: {...}}}. Only "vertices" is required.
struct InstanceFile {
  std::vector<std::string> names;
  Graph graph;
  PartialRepresentation partial;
  std::optional<RepClass> cls;
  std::optional<Representation> representation;
};

/// Throws Error(InvalidInput) with a message naming the offending entry.
InstanceFile parse_instance(const std::string& text);
/// Vertices in id order, edges sorted, arcs keyed in id order.
std::string serialize_instance(const InstanceFile& file);

/// "n vertices, m edges, p predrawn, k shared predrawn endpoints".
std::string instance_summary(const InstanceFile& file);
/// Predrawn endpoint values that occur more than once.
std::size_t shared_predrawn_endpoints(const PartialRepresentation& partial);

/// {"order": [names], "wrap_edges": [[a, b], ...], "circumference": "p/q"}.
UcaCertificate parse_certificate(const std::string& text, const std::vector<std::string>& names);
std::string serialize_certificate(const UcaCertificate& cert, const std::vector<std::string>& names);

}  // namespace arcx
