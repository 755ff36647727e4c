#pragma once

// Fixed-seed generators for the randomized invariants, shared by the property
// tests and the acceptance runner.

#include <cstdint>

#include "mwa/lattice.hpp"
#include "mwa/reps.hpp"

namespace props {

using namespace mwa;
using namespace mwa::lattice;

// splitmix64
struct Rng {
  std::uint64_t s;
  explicit Rng(std::uint64_t seed) : s(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
};

inline DCoord random_d(Rng& r, long span) { return {r.range(-span, span), r.range(-span, span), r.range(-span, span)}; }

inline HVec random_h(Rng& r) {
  return hvec(Q(r.range(-2, 2)), Q(r.range(-2, 2)), frac(r.range(-3, 3), 2), frac(r.range(-3, 3), 2));
}

// A random state: up to two terms, each a short Heisenberg monomial times e^g.
// The screening charge -(sigma, g)/3 = n2 + n3 is kept in [lo, hi], which bounds
// the size of Q applied to products.
inline State random_state(Rng& r, long lo = -2, long hi = 2) {
  State out;
  const int terms = static_cast<int>(r.range(1, 2));
  for (int t = 0; t < terms; ++t) {
    State mono = State::vacuum();
    const int len = static_cast<int>(r.range(0, 2));
    for (int i = 0; i < len; ++i) mono = multiply(State::heis(random_h(r), static_cast<int>(r.range(1, 2))), mono);
    DCoord g = random_d(r, 1);
    while (g[1] + g[2] < lo || g[1] + g[2] > hi) g = random_d(r, 1);
    out += Q(r.range(1, 3)) * multiply(mono, State::exp(g));
  }
  return out;
}

inline DCoord sum(const DCoord& a, const DCoord& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

inline State power_translation(State a, int j) {
  for (int i = 0; i < j; ++i) a = translation(a);
  Q fact = 1;
  for (int i = 2; i <= j; ++i) fact *= i;
  return (1 / fact) * a;
}

// b_(n) a from the products a_(m) b, m >= n, by skew-symmetry.
inline State skew_rhs(const std::map<int, State>& ab, int n) {
  State rhs;
  for (const auto& [m, v] : ab) {
    if (m < n) continue;
    const int j = m - n;
    rhs += Q((n + j + 1) % 2 == 0 ? 1 : -1) * power_translation(v, j);
  }
  return rhs;
}

inline AlgebraData random_algebra(Rng& r, const std::vector<std::string>& names) {
  return build_algebra(names[static_cast<size_t>(r.range(0, static_cast<long>(names.size()) - 1))]);
}

inline Labels random_labels(Rng& r, int rank, long max) {
  Labels l(static_cast<size_t>(rank));
  for (auto& x : l) x = r.range(0, max);
  return l;
}

}  // namespace props
