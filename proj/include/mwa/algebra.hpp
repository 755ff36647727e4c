#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mwa/rational.hpp"

namespace mwa {

enum class Family { A, B, C, D, E, F, G, SL, OSP, SPO, D21A };

// Family plus parameters. Lie types use m as the rank; sl/osp use (m|n);
// spo(n|m) stores n in m and m in n so that the even sp part always comes first.
struct AlgebraSpec {
  Family family = Family::A;
  int m = 0;
  int n = 0;
  Q a = 0;
};

// "A3", "E7", "sl(4)", "sl4", "so(8)", "sp(6)", "sl(2|1)", "osp(4|2)",
// "spo(2|3)", "D(2,1;1/2)". Throws std::invalid_argument.
AlgebraSpec parse_algebra(const std::string& s);
std::string algebra_name(const AlgebraSpec& s);

struct Basis {
  std::vector<std::string> labels;
  Mat gram;  // normalized so that (theta|theta) = 2
};

struct Weight {
  Vec c;

  Weight() = default;
  explicit Weight(size_t n) : c(n, Q(0)) {}
  explicit Weight(Vec v) : c(std::move(v)) {}

  size_t size() const { return c.size(); }
  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight& operator*=(const Q& s);
  bool is_zero() const;
  auto operator<=>(const Weight& o) const = default;
};

Weight operator+(Weight a, const Weight& b);
Weight operator-(Weight a, const Weight& b);
Weight operator-(Weight a);
Weight operator*(const Q& s, Weight a);

struct AlgebraData {
  std::string name;
  AlgebraSpec spec;
  Basis basis;
  std::vector<Weight> simple;
  std::vector<bool> simple_odd;
  std::vector<Weight> pos_even;  // lexicographic order on coordinates
  std::vector<Weight> pos_odd;
  Weight rho;
  Weight highest_root;
  Q dual_coxeter;
  // Positive roots are exactly those with order(root) > 0.
  Vec order;
  // Lie algebras only.
  Mat cartan;  // cartan[i][j] = 2(a_i|a_j)/(a_j|a_j)
  std::vector<Weight> fundamental;

  bool is_lie() const { return spec.family <= Family::G; }
  int rank() const { return static_cast<int>(simple.size()); }
  size_t dim() const;   // Lie algebras only
  Q sdim() const;       // even dimension minus odd dimension
};

AlgebraData build_algebra(const AlgebraSpec& spec);
AlgebraData build_algebra(const std::string& spec);

// Superalgebra with a custom positive system: `ordering` lists basis labels
// from largest to smallest in the defining linear functional.
AlgebraData build_algebra(const AlgebraSpec& spec, const std::vector<std::string>& ordering);

Q inner(const Basis& b, const Weight& x, const Weight& y);
Q inner(const AlgebraData& alg, const Weight& x, const Weight& y);

// (mu, mu + 2 rho). Lie weights are first projected onto the span of the roots.
Q casimir_shifted(const AlgebraData& alg, const Weight& mu);
Weight weyl_vector(const AlgebraData& alg);

// Basis vector by label ("e1", "d2"); throws on an unknown label.
Weight basis_vector(const AlgebraData& alg, const std::string& label);
// Splits "2e1+e2-1/2d3" into (coefficient, symbol) pairs; "0" gives no terms.
std::vector<std::pair<Q, std::string>> parse_terms(const std::string& s);

// Parses "2e1+e2-d3", "1/2e1", "0" over the basis labels.
Weight parse_weight(const AlgebraData& alg, const std::string& s);
std::string format_weight(const AlgebraData& alg, const Weight& w);

// Coordinates of w in the simple-root basis (w must lie in their span).
Vec simple_coords(const AlgebraData& alg, const Weight& w);
bool is_positive_root(const AlgebraData& alg, const Weight& w);

// Lie algebras only.
Vec dynkin_labels(const AlgebraData& alg, const Weight& w);
Weight from_dynkin(const AlgebraData& alg, const Vec& labels);
Weight reflect(const AlgebraData& alg, const Weight& w, int i);
// Parses "3w1+w2" or "0" into Dynkin labels.
Vec parse_dynkin(const AlgebraData& alg, const std::string& s);
std::string format_dynkin(const Vec& labels);

}  // namespace mwa
