// Random representations and extension instances for tests and benchmarks.
#pragma once

#include <cstdint>
#include <random>

#include "arcx/core.hpp"
#include "arcx/verify.hpp"

namespace arcx {

using Rng = std::mt19937_64;

struct Instance {
  Graph graph;
  PartialRepresentation partial;
};

/// Connected normal proper Helly representation with n arcs. Endpoints lie on a grid
/// of 4n points, so touching and shared endpoints occur.
Representation random_nphca(int n, Rng& rng);

/// Connected NPHCA representation with about `degree` neighbors per arc, built in
/// linear time for large n.
Representation sparse_nphca(int n, int degree, Rng& rng);

/// Connected normal Helly representation; sometimes contains a universal arc.
Representation random_nhca(int n, Rng& rng);

/// Connected Helly representation with all 2n endpoints distinct.
Representation random_hca_distinct(int n, Rng& rng);

/// Connected proper Helly representation containing two arcs in non-normal position.
/// Requires n >= 4.
Representation random_phca_non_normal(int n, Rng& rng);

/// Random representation of the given class (CA classes only through their generators above).
Representation random_of_class(RepClass cls, int n, Rng& rng);

/// Intersection graph of r plus r restricted to a random vertex subset; each vertex is
/// kept with probability keep_num/keep_den.
Instance erase_random(const Representation& r, int keep_num, int keep_den, Rng& rng);

/// Keeps exactly the listed vertices predrawn.
Instance instance_from(const Representation& r, const std::vector<VertexId>& predrawn);

}  // namespace arcx
