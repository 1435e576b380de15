#include "arcx/hca.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>
#include <stdexcept>

#include "arcx/cliques.hpp"
#include "arcx/errors.hpp"
#include "arcx/nhca.hpp"
#include "arcx/parallel.hpp"
#include "arcx/regions.hpp"
#include "arcx/verify.hpp"

namespace arcx {
namespace {

struct Setup {
  CliqueStructure cs;
  RegionMap rm;
  std::optional<PCTree> tree;
  CliqueId anchor = 0;
};

std::optional<Extension> set_up(const Graph& g, const PartialRepresentation& partial, Setup& s) {
  std::set<Rational> ends;
  for (const auto& [v, a] : partial) {
    if (v < 0 || v >= g.size()) throw Error(ErrorKind::InvalidInput, "predrawn vertex out of range");
    if (!ends.insert(a.tail.pos()).second || !ends.insert(a.head.pos()).second)
      throw Error(ErrorKind::SharedEndpoints, "predrawn arcs share an endpoint");
  }
  if (g.size() == 0) return Extension::yes(Representation{});
  if (!g.is_connected()) throw Error(ErrorKind::Disconnected, "graph is disconnected");
  Report valid = check_partial(g, partial, RepClass::HCA);
  if (!valid.ok()) return Extension::no("predrawn arcs are not a valid HCA representation: " + valid.to_text());

  try {
    s.cs = enumerate_maximal_cliques(g);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotHellyCandidate) throw;
    return Extension::no("more maximal cliques than vertices, so no Helly representation");
  }
  auto rm = compute_regions(s.cs, partial);
  if (!rm) return Extension::no("a maximal clique has an empty region");
  s.rm = std::move(*rm);
  for (const auto& cls : s.rm.classes)
    for (const Island& i : cls.islands)
      if (i.single_point()) throw std::logic_error("single-point island despite distinct endpoints");

  const int k = s.cs.clique_count();
  std::vector<int> ground(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) ground[static_cast<std::size_t>(i)] = i;
  std::set<std::vector<int>> sets(s.cs.membership.begin(), s.cs.membership.end());
  for (const GapSet& gap : gap_sets(s.rm)) sets.insert(gap.cliques);
  std::vector<std::vector<int>> constraints;
  for (const auto& c : sets)
    if (c.size() >= 2 && static_cast<int>(c.size()) < k) constraints.push_back(c);
  s.tree = PCTree::build(ground, constraints);
  if (!s.tree) return Extension::no("the clique consecutivity constraints admit no cyclic order");

  for (CliqueId c = 1; c < k; ++c)
    if (s.rm.region_of(c).islands.size() < s.rm.region_of(s.anchor).islands.size()) s.anchor = c;
  return std::nullopt;
}

Extension trial(const Graph& g, const PartialRepresentation& partial, const Setup& s, const Island& island) {
  const CirclePoint p_d = island.middle();
  PartialPrec prec;
  for (auto [a, b] : build_prec(s.rm, s.anchor, p_d))
    if (a != s.anchor) prec.emplace_back(a, b);
  auto rest = s.tree->reorder(s.anchor, prec);
  if (!rest) return Extension::no("no clique order agrees with the positions of the regions");
  LinearOrder order{s.anchor};
  order.insert(order.end(), rest->begin(), rest->end());
  if (auto r = realize_order(g, partial, s.cs, s.rm, order, p_d, true, RepClass::HCA)) return Extension::yes(std::move(*r));
  return Extension::no("constructed representation fails verification");
}

}  // namespace

std::size_t hca_anchor_islands(const Graph& g, const PartialRepresentation& partial) {
  Setup s;
  if (set_up(g, partial, s)) return 0;
  return s.rm.region_of(s.anchor).islands.size();
}

Extension solve_hca_from_island(const Graph& g, const PartialRepresentation& partial, std::size_t island) {
  Setup s;
  if (auto early = set_up(g, partial, s)) return *early;
  const auto& islands = s.rm.region_of(s.anchor).islands;
  if (island >= islands.size()) throw Error(ErrorKind::InvalidInput, "no such island");
  return trial(g, partial, s, islands[island]);
}

Extension solve_hca_distinct(const Graph& g, const PartialRepresentation& partial) {
  Setup s;
  if (auto early = set_up(g, partial, s)) return *early;
  const auto& islands = s.rm.region_of(s.anchor).islands;
  const std::size_t m = islands.size();
  std::vector<Extension> results(m);
  std::atomic<std::size_t> next{0}, best{m};
  auto work = [&] {
    for (std::size_t i; (i = next++) < m;) {
      if (i > best.load()) continue;
      results[i] = trial(g, partial, s, islands[i]);
      if (!results[i].ok()) continue;
      for (std::size_t b = best.load(); i < b && !best.compare_exchange_weak(b, i);) {
      }
    }
  };
  const std::size_t workers = std::min<std::size_t>(m, thread_cap());
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  // The lowest succeeding island wins, whatever the thread count.
  if (best < m) return std::move(results[best]);
  if (m == 0) return Extension::no("the anchor clique has no island");
  return std::move(results[m - 1]);
}

}  // namespace arcx
