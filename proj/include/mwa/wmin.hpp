#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mwa/lattice.hpp"
#include "mwa/rational.hpp"

namespace mwa::wmin {

// Polynomial in the level k with rational coefficients (power -> coefficient).
class Poly {
 public:
  Poly() = default;
  Poly(const Q& c);  // NOLINT: constants convert implicitly
  static Poly k();
  const std::map<int, Q>& coeffs() const { return c_; }
  int degree() const;  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  Q lead() const;
  Q eval(const Q& k) const;
  Poly& operator+=(const Poly& o);
  Poly& operator*=(const Poly& o);
  bool operator==(const Poly& o) const = default;
  std::string str() const;

 private:
  void trim();
  std::map<int, Q> c_;
};
Poly operator+(Poly a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(Poly a, const Poly& b);
// Euclidean division; returns {quotient, remainder}.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

// Rational function in k, reduced with a monic denominator.
class Coef {
 public:
  Coef() : num_(), den_(Q(1)) {}
  Coef(const Q& c) : num_(c), den_(Q(1)) {}  // NOLINT
  Coef(const Poly& p) : num_(p), den_(Q(1)) {}  // NOLINT
  Coef(const Poly& num, const Poly& den);
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  // Throws std::domain_error at a pole.
  Q eval(const Q& k) const;
  bool operator==(const Coef& o) const = default;
  std::string str() const;

 private:
  Poly num_, den_;
};
Coef operator+(const Coef& a, const Coef& b);
Coef operator-(const Coef& a);
Coef operator-(const Coef& a, const Coef& b);
Coef operator*(const Coef& a, const Coef& b);
Coef operator/(const Coef& a, const Coef& b);

// A generator J^a, G^u or omega with a number of derivatives.
struct Letter {
  int gen = 0;
  int deriv = 0;
  auto operator<=>(const Letter&) const = default;
};
// Right-nested normally ordered word; length 0 is the vacuum. Words of length
// two are kept with letters in ascending order.
using Word = std::vector<Letter>;

class Expr {
 public:
  Expr() = default;
  static Expr vacuum(const Coef& c = Coef(Q(1)));
  static Expr gen(int g, int deriv = 0);
  void add(const Word& w, const Coef& c);
  const std::map<Word, Coef>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Expr& operator+=(const Expr& o);
  bool operator==(const Expr& o) const = default;

 private:
  std::map<Word, Coef> t_;
};
Expr operator+(Expr a, const Expr& b);
Expr operator-(const Expr& a);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Coef& c, const Expr& a);

// lambda power -> coefficient (plain lambda^i coefficients).
using LambdaExpr = std::map<int, Expr>;
LambdaExpr lambda_add(const LambdaExpr& a, const LambdaExpr& b);
LambdaExpr lambda_scale(const Coef& c, const LambdaExpr& a);
bool lambda_equal(const LambdaExpr& a, const LambdaExpr& b);

// Minimal-gradation data for sl(n) realized by matrix units.
struct OpeContext {
  int n = 0;
  Q hvee;
  Mat e_theta, e_mtheta, x;
  std::vector<Mat> jbasis;        // basis of g^natural: c, e_ij (1 < i != j < n), h_i
  std::vector<std::string> jnames;
  std::vector<int> jcomponent;    // 0 = centre, 1 = sl(n-2)
  std::vector<Q> component_hvee;  // dual Coxeter number of each component for (.|.)
  std::vector<Mat> gbasis;        // basis of g_{-1/2}: e_i1, then e_ni
  std::vector<std::string> gnames;
  std::vector<Mat> half;          // basis of g_{1/2}
  std::vector<Mat> half_dual;     // dual basis for <u,v>_ne = (e_{-theta}|[u,v])
  Mat jgram;                      // (a|b) on g^natural
  Mat kappa0;                     // Killing form of g_0 restricted to g^natural
  Poly p;                         // monic p(k)
  std::vector<Q> component_shift; // k_i = k + shift_i
  int num_j() const { return static_cast<int>(jbasis.size()); }
  int num_g() const { return static_cast<int>(gbasis.size()); }
  int omega() const { return num_j() + num_g(); }
  std::string name(int gen) const;
  int find(const std::string& name) const;  // -1 if absent
};

OpeContext make_sl(int n);

// Trace form (a|b) = tr(ab), normalized so that (theta|theta) = 2, and the commutator.
Q trace_form(const Mat& a, const Mat& b);
Mat commutator(const Mat& a, const Mat& b);

class OpeTable {
 public:
  // k empty means formal k; a rational k must avoid the critical level.
  OpeTable(OpeContext ctx, std::optional<Q> k);
  const OpeContext& context() const { return ctx_; }
  const std::optional<Q>& level() const { return k_; }
  // Level coefficient: the formal variable or the fixed value.
  Coef kcoef() const;
  Coef central_charge() const;
  // Bracket of two generators.
  const LambdaExpr& entry(int a, int b) const;
  // Bracket of arbitrary expressions with words of length <= 2 (one side a letter).
  LambdaExpr bracket(const Expr& a, const Expr& b) const;
  // Normal form of :a b: with a and b expressions of length <= 1.
  Expr normal_order(const Expr& a, const Expr& b) const;
  Expr derivative(const Expr& a) const;
  // J^{m} for an element of g^natural given as a matrix.
  Expr J(const Mat& m) const;
  Expr G(const Mat& m) const;
  // Sugawara vector of g^natural; needs k off the pole set.
  Expr sugawara() const;

 private:
  LambdaExpr letter_bracket(const Letter& a, const Letter& b) const;
  LambdaExpr wick(const Letter& a, const Letter& b, const Letter& c) const;
  LambdaExpr skew(const LambdaExpr& l) const;
  Expr reorder(const Letter& a, const Letter& b) const;
  OpeContext ctx_;
  std::optional<Q> k_;
  std::map<std::pair<int, int>, LambdaExpr> table_;
};

OpeTable build_ope(const OpeContext& ctx, std::optional<Q> k);

std::string format_expr(const OpeContext& ctx, const Expr& e);
std::string format_lambda(const OpeContext& ctx, const LambdaExpr& l);

// The G-G brackets printed for sl(4), as (u, v, bracket) with formal k.
struct PrintedEntry {
  std::string u, v;
  LambdaExpr value;
};
std::vector<PrintedEntry> printed_sl4_table(const OpeTable& formal);

// Elements of Q(sqrt 2) (x) lattice states: rational + sqrt2 parts.
struct R2State {
  lattice::State r, s;
  bool operator==(const R2State& o) const = default;
  bool is_zero() const { return r.is_zero() && s.is_zero(); }
};
using R2Lambda = std::map<int, R2State>;

// Image of a generator of W_{-8/3}(sl(4), theta) in the lattice algebra.
R2State phi(const OpeContext& ctx, int gen);
R2State phi_expr(const OpeTable& table, const Expr& e);
R2Lambda lattice_bracket(const R2State& a, const R2State& b);

struct PhiCheck {
  std::string left, right;
  bool pass = false;
  std::string expected, actual;
};
// Compares phi of every table entry with the lattice bracket of the images.
std::vector<PhiCheck> verify_phi();

std::string format_r2(const R2State& v);
std::string format_r2(const R2Lambda& l);

}  // namespace mwa::wmin
