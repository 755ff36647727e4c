#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mwa/rational.hpp"

namespace mwa::lattice {

// Vector of h = C (x) L in coordinates (alpha, beta, delta, phi).
using HVec = std::array<Q, 4>;
using LatticePoint = HVec;

HVec hvec(const Q& a, const Q& b, const Q& d, const Q& p);
// Gram diag(1, -1, 2/3, -2/3).
Q pairing(const HVec& x, const HVec& y);

// Coordinates (n1, n2, n3) over alpha1 = a+b, alpha2 = 3/2(d+p), alpha3 = 3/2(d-p).
using DCoord = std::array<long, 3>;
std::optional<DCoord> d_coords(const LatticePoint& g);
LatticePoint from_d(const DCoord& n);
bool in_D(const LatticePoint& g);
bool in_L(const LatticePoint& g);
long d_pairing(const DCoord& x, const DCoord& y);

// Bimultiplicative cocycle on D fixed by its values on alpha1..alpha3.
int cocycle(const DCoord& x, const DCoord& y);
int cocycle(const LatticePoint& x, const LatticePoint& y);  // throws outside D

// Oscillators are stored over the basis (alpha + beta, alpha, sigma, phi) with
// sigma = alpha + beta - 3 delta, the screening momentum. An oscillator is
// encoded as mode * 4 + index; monomials are sorted code lists.
using Monomial = std::vector<std::uint16_t>;

struct Key {
  DCoord g{0, 0, 0};
  Monomial mono;
  auto operator<=>(const Key&) const = default;
};

class State {
 public:
  State() = default;
  static State vacuum();
  static State exp(const LatticePoint& g);  // e^g, g in D
  static State exp(const DCoord& g);
  // h_(-mode) applied to the vacuum.
  static State heis(const HVec& h, int mode = 1);

  void add(const Key& k, const Q& c);
  const std::map<Key, Q>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  State& operator+=(const State& o);
  State& operator-=(const State& o);
  State& operator*=(const Q& c);
  bool operator==(const State& o) const = default;

 private:
  std::map<Key, Q> terms_;
};

State operator+(State a, const State& b);
State operator-(State a, const State& b);
State operator-(State a);
State operator*(const Q& c, State a);

// h_(n) acting on a state, any integer n.
State apply_mode(const HVec& h, int n, const State& s);
// Plain product of Heisenberg polynomials (both at exponent 0 for the left factor).
State multiply(const State& heis_poly, const State& s);

// Schur polynomial S_n(g) = coefficient of z^n in exp(sum g_(-k) z^k / k).
State schur(const HVec& g, int n);
State S2(const HVec& g);
State S3(const HVec& g);

// a_(n) b by the Borcherds recursion on the oscillators of a.
State nth_product(const State& a, const State& b, int n);
// Every nonzero a_(n) b with n >= nmin, keyed by n.
std::map<int, State> nth_products(const State& a, const State& b, int nmin);
// Oracle: a_(n) b from the normally ordered series expansion of Y(a, z) b.
State nth_product_series(const State& a, const State& b, int n);

// Largest n with a_(n) b possibly nonzero (-infinity as nullopt when a or b is zero).
std::optional<int> truncation_bound(const State& a, const State& b);

// [a_lambda b] = sum_i lambda^i / i! a_(i) b; entry i holds a_(i) b / i!.
using LambdaPoly = std::map<int, State>;
LambdaPoly lambda_bracket(const State& a, const State& b);
bool lambda_equal(const LambdaPoly& x, const LambdaPoly& y);
LambdaPoly lambda_scale(const Q& c, const LambdaPoly& p);
LambdaPoly lambda_add(const LambdaPoly& x, const LambdaPoly& y);

State normally_ordered(const State& a, const State& b);
State translation(const State& a);

// Q = e^{a+b-3d}_(0).
LatticePoint screening_momentum();
State screening_Q(const State& a);

struct R3 {
  State e, h, f, j, E1, E2, F1, F2, omega;
};
const R3& r3_generators();

struct BracketCheck {
  std::string name;
  bool pass = false;
  std::string expected, actual;
};
// The ten generator brackets [X_lambda Y] with X, Y among E1, E2, F1, F2
// compared with their closed forms in e, h, f, j and omega.
std::vector<BracketCheck> verify_r3();

// lambda with x_(0) v = lambda v, if v is an eigenvector.
std::optional<Q> zero_mode_eigenvalue(const State& x, const State& v);
// Eigenvalue of omega_(1) if a is homogeneous.
std::optional<Q> conformal_weight(const State& a);
State L0(const State& a);
State zhu_circ(const State& a, const State& b);

State singular_vector(int l, int j);
bool is_singular(const State& v);

// "3/2*a(-1)b(-2)E[a+b-3d] - s(-1)"; oscillator symbols a, b, d, p and the
// shorthands c = a+b, s = a+b-3d. Output uses c, a, s, p. Exponents E[...] use a, b, d, p.
State parse_state(const std::string& text);
std::string format_state(const State& s);
std::string format_lambda(const LambdaPoly& p);

}  // namespace mwa::lattice
