// Ground-truth checks for representations: realization, extension and class properties.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "arcx/core.hpp"

namespace arcx {

enum class RepClass { CA, NCA, HCA, PCA, UCA, NHCA, PHCA, NPHCA };

const char* to_string(RepClass c);
std::optional<RepClass> parse_rep_class(std::string_view name);

struct ClassTraits {
  bool normal = false;
  bool helly = false;
  bool proper = false;
  bool unit = false;
};
ClassTraits traits(RepClass c);

/// Intersection graph of the arcs, computed by a sorted sweep over tails.
Graph intersection_graph(const Representation& r);

bool realizes(const Graph& g, const Representation& r);
bool extends(const Representation& r, const PartialRepresentation& partial);
bool is_proper(const Representation& r);
bool is_normal(const Representation& r);
/// All lengths equal and positive.
bool is_unit(const Representation& r);
/// Every maximal clique of the intersection graph has a common point; the witness
/// search only needs to try member tails.
bool is_helly(const Representation& r);

struct Report {
  struct Failure {
    std::string predicate;
    std::string detail;
  };
  std::vector<Failure> failures;

  bool ok() const { return failures.empty(); }
  bool failed(std::string_view predicate) const;
  std::string to_text() const;
};

Report check(const Graph& g, const Representation& r, const PartialRepresentation& partial, RepClass cls);

/// Checks the partial representation alone against the subgraph it draws.
Report check_partial(const Graph& g, const PartialRepresentation& partial, RepClass cls);

}  // namespace arcx
