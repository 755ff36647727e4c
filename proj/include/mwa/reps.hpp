#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mwa/algebra.hpp"

namespace mwa {

// Dynkin labels of an integral weight.
using Labels = std::vector<long>;

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr size_t kDefaultCap = 200000;

struct DominantCharacter {
  Labels highest;
  std::map<Labels, long> mult;  // dominant weight -> multiplicity
};

using Decomposition = std::vector<std::pair<Labels, long>>;

// Integer tables for a simple Lie algebra in the Dynkin-label basis.
class LieTables {
 public:
  explicit LieTables(const AlgebraData& alg);

  int rank() const { return r_; }
  const std::vector<Labels>& positive_roots() const { return pos_; }
  // Scaled form: form(x, y) = scale() * (x|y).
  long form(const Labels& x, const Labels& y) const;
  long scale() const { return scale_; }
  // Sum of simple-root coordinates, times det of the Cartan matrix.
  long height(const Labels& x) const;
  // Moves x to the dominant chamber; returns the sign of the Weyl element.
  int to_dominant(Labels& x) const;
  std::vector<Labels> orbit(const Labels& dominant) const;
  const Labels& simple_root(int i) const { return cartan_[i]; }

 private:
  int r_ = 0;
  std::vector<Labels> cartan_;  // row i = Dynkin labels of simple root i
  std::vector<Labels> pos_;
  std::vector<std::vector<long>> gram_;  // scaled (w_i|w_j)
  long scale_ = 1;
  std::vector<long> height_row_;  // det(C) * row sums of C^{-1}
  long det_ = 1;
};

Labels to_labels(const AlgebraData& alg, const Weight& w);  // throws unless integral
bool is_dominant(const Labels& l);

// Weyl dimension formula. Throws for non-dominant input or superalgebras.
mpz_class weyl_dim(const AlgebraData& alg, const Weight& lambda);
mpz_class weyl_dim(const LieTables& t, const Labels& lambda);

// Freudenthal recursion over the dominant weights of V(lambda).
DominantCharacter dominant_character(const LieTables& t, const Labels& lambda, size_t cap = kDefaultCap);
DominantCharacter dominant_character(const AlgebraData& alg, const Weight& lambda, size_t cap = kDefaultCap);
// Every weight with multiplicity.
std::map<Labels, long> full_character(const LieTables& t, const DominantCharacter& ch);

// Klimyk decomposition; output sorted by decreasing height, then labels.
Decomposition tensor_decompose(const LieTables& t, const Labels& lambda, const Labels& mu,
                               size_t cap = kDefaultCap);
Decomposition tensor_decompose(const AlgebraData& alg, const Weight& lambda, const Weight& mu,
                               size_t cap = kDefaultCap);

// Oracle: multiply full characters and peel off highest weights.
Decomposition tensor_decompose_brute(const LieTables& t, const Labels& lambda, const Labels& mu);

}  // namespace mwa
