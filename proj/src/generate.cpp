#include "arcx/generate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace arcx {
namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rational grid(long k, long den) { return ratio(k, den); }

bool usable(const Representation& r, RepClass cls) {
  Graph g = intersection_graph(r);
  if (!g.is_connected()) return false;
  ClassTraits t = traits(cls);
  if (t.normal && !is_normal(r)) return false;
  if (t.proper && !is_proper(r)) return false;
  if (t.helly && !is_helly(r)) return false;
  return true;
}

Representation shuffled(std::vector<Arc> arcs, Rng& rng) {
  std::shuffle(arcs.begin(), arcs.end(), rng);
  return Representation(std::move(arcs));
}

}  // namespace

Representation random_nphca(int n, Rng& rng) {
  if (n <= 0) return {};
  if (n == 1) {
    long t = uniform(rng, 0, 7);
    return Representation({Arc(grid(t, 8), grid(t + 1, 8))});
  }
  const long den = std::max<long>(24, 4L * n);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<long> slots(static_cast<std::size_t>(den));
    std::iota(slots.begin(), slots.end(), 0);
    std::shuffle(slots.begin(), slots.end(), rng);
    int distinct = n - static_cast<int>(uniform(rng, 0, n / 4));
    std::vector<long> tails(slots.begin(), slots.begin() + distinct);
    std::sort(tails.begin(), tails.end());
    std::vector<long> heads(tails.size());
    long max_len = std::max<long>(2, den / 3 - 1);
    long prev = -1;
    for (std::size_t i = 0; i < tails.size(); ++i) {
      long h = tails[i] + uniform(rng, 1, std::min<long>(max_len, 3 * den / n + 2));
      h = std::max(h, prev + 1);
      heads[i] = h;
      prev = h;
    }
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < tails.size(); ++i) arcs.emplace_back(grid(tails[i], den), grid(heads[i], den));
    while (static_cast<int>(arcs.size()) < n) arcs.push_back(arcs[static_cast<std::size_t>(uniform(rng, 0, distinct - 1))]);
    Representation r = shuffled(std::move(arcs), rng);
    if (usable(r, RepClass::NPHCA)) return r;
  }
  throw std::runtime_error("random_nphca: no sample found");
}

Representation sparse_nphca(int n, int degree, Rng& rng) {
  // Tails at (4i + jitter)/(4n); all arcs share one length, so the result is proper,
  // and lengths below 1/3 keep it normal and Helly.
  const long den = 4L * n;
  const long len = 4L * std::max(1, degree / 2) + 2;
  if (n < 8 || 3 * len >= den) throw std::invalid_argument("sparse_nphca: n too small for the degree");
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    long t = 4 * i + uniform(rng, 0, 2);
    arcs.emplace_back(grid(t, den), grid(t + len, den));
  }
  return shuffled(std::move(arcs), rng);
}

Representation random_nhca(int n, Rng& rng) {
  if (n <= 0) return {};
  const long den = std::max<long>(24, 4L * n);
  for (int attempt = 0; attempt < 20000; ++attempt) {
    std::vector<Arc> arcs;
    bool with_universal = n >= 3 && uniform(rng, 0, 3) == 0;
    for (int i = 0; i < n; ++i) {
      long t = uniform(rng, 0, den - 1);
      long len = (with_universal && i == 0) ? uniform(rng, den / 2, den - 2) : uniform(rng, 0, den / 3);
      arcs.emplace_back(grid(t, den), grid(t + len, den));
    }
    Representation r = shuffled(std::move(arcs), rng);
    if (usable(r, RepClass::NHCA)) return r;
  }
  throw std::runtime_error("random_nhca: no sample found");
}

Representation random_hca_distinct(int n, Rng& rng) {
  if (n <= 0) return {};
  const long den = std::max<long>(16, 4L * n);
  for (int attempt = 0; attempt < 20000; ++attempt) {
    std::vector<long> slots(static_cast<std::size_t>(den));
    std::iota(slots.begin(), slots.end(), 0);
    std::shuffle(slots.begin(), slots.end(), rng);
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
      arcs.emplace_back(grid(slots[static_cast<std::size_t>(2 * i)], den), grid(slots[static_cast<std::size_t>(2 * i + 1)], den));
    Representation r(std::move(arcs));
    if (usable(r, RepClass::HCA)) return r;
  }
  throw std::runtime_error("random_hca_distinct: no sample found");
}

Representation random_phca_non_normal(int n, Rng& rng) {
  if (n < 4) throw std::invalid_argument("random_phca_non_normal: need n >= 4");
  // u = [0,5/8] and v = [1/2,1/8] cross twice; side A = [1/2,5/8], side B = [0,1/8].
  const long den = 1024;
  std::vector<Arc> arcs{Arc(Rational(0), Rational(5, 8)), Arc(Rational(1, 2), Rational(1, 8))};
  int rest = n - 2;
  int extra_universal = static_cast<int>(uniform(rng, 0, std::max(0, rest - 2)));
  int side = rest - extra_universal;
  int na = static_cast<int>(uniform(rng, 1, side - 1));
  int nb = side - na;
  auto monotone = [&](int k, long tlo, long thi, long hlo, long hhi) {
    std::vector<long> ts, hs;
    for (int i = 0; i < k; ++i) {
      ts.push_back(uniform(rng, tlo, thi));
      hs.push_back(uniform(rng, hlo, hhi));
    }
    std::sort(ts.begin(), ts.end());
    std::sort(hs.begin(), hs.end());
    for (int i = 0; i < k; ++i) arcs.emplace_back(grid(ts[static_cast<std::size_t>(i)], den), grid(hs[static_cast<std::size_t>(i)], den));
  };
  monotone(na, 320, 448, 704, 768);          // tail in C, head in D: contains A
  monotone(nb, 832, 896, 192, 256);          // tail in D, head in C: contains B
  monotone(extra_universal, 32, 127, 641, 671);  // contains C and A, crosses u and v
  Representation r = shuffled(std::move(arcs), rng);
  if (!usable(r, RepClass::PHCA)) return random_phca_non_normal(n, rng);
  return r;
}

Representation random_of_class(RepClass cls, int n, Rng& rng) {
  switch (cls) {
    case RepClass::NPHCA: return random_nphca(n, rng);
    case RepClass::PHCA: return (n >= 4 && uniform(rng, 0, 1)) ? random_phca_non_normal(n, rng) : random_nphca(n, rng);
    case RepClass::NHCA: return random_nhca(n, rng);
    case RepClass::HCA: return random_hca_distinct(n, rng);
    default: throw std::invalid_argument(std::string("no generator for class ") + to_string(cls));
  }
}

Instance erase_random(const Representation& r, int keep_num, int keep_den, Rng& rng) {
  std::vector<VertexId> kept;
  for (VertexId v = 0; v < r.size(); ++v)
    if (uniform(rng, 0, keep_den - 1) < keep_num) kept.push_back(v);
  return instance_from(r, kept);
}

Instance instance_from(const Representation& r, const std::vector<VertexId>& predrawn) {
  return Instance{intersection_graph(r), r.restrict_to(predrawn)};
}

}  // namespace arcx
