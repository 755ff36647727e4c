#include "mwa/wmin.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mwa::wmin {

// ---- Poly ----

Poly::Poly(const Q& c) {
  if (c != 0) c_[0] = c;
}

Poly Poly::k() {
  Poly p;
  p.c_[1] = 1;
  return p;
}

void Poly::trim() { std::erase_if(c_, [](const auto& kv) { return kv.second == 0; }); }

int Poly::degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }

Q Poly::lead() const { return c_.empty() ? Q(0) : c_.rbegin()->second; }

Q Poly::eval(const Q& k) const {
  Q acc = 0;
  for (int d = degree(); d >= 0; --d) {
    acc *= k;
    if (auto it = c_.find(d); it != c_.end()) acc += it->second;
  }
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [d, c] : o.c_) c_[d] += c;
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  std::map<int, Q> r;
  for (const auto& [d1, c1] : c_)
    for (const auto& [d2, c2] : o.c_) r[d1 + d2] += c1 * c2;
  c_ = std::move(r);
  trim();
  return *this;
}

std::string Poly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const auto& [d, c] = *it;
    Q a = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? "-" : "+";
    if (d == 0) {
      out += to_string(a);
      continue;
    }
    if (a != 1) out += to_string(a);
    out += "k";
    if (d > 1) out += "^" + std::to_string(d);
  }
  return out;
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(const Poly& a) { return a * Poly(Q(-1)); }
Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
Poly operator*(Poly a, const Poly& b) { return a *= b; }

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly q, r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    Poly t;
    Poly mono(r.lead() / b.lead());
    for (int i = 0; i < r.degree() - b.degree(); ++i) mono *= Poly::k();
    q += mono;
    r = r - mono * b;
  }
  return {q, r};
}

namespace {

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return Poly(Q(1));
  return a * Poly(Q(1) / a.lead());
}

}  // namespace

// ---- Coef ----

Coef::Coef(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  if (num.is_zero()) {
    num_ = Poly();
    den_ = Poly(Q(1));
    return;
  }
  Poly g = poly_gcd(num, den);
  num_ = divmod(num, g).first;
  den_ = divmod(den, g).first;
  Q l = den_.lead();
  num_ = num_ * Poly(Q(1) / l);
  den_ = den_ * Poly(Q(1) / l);
}

Q Coef::eval(const Q& k) const {
  Q d = den_.eval(k);
  if (d == 0) throw std::domain_error("coefficient has a pole at k = " + to_string(k));
  return num_.eval(k) / d;
}

std::string Coef::str() const {
  if (den_ == Poly(Q(1))) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

Coef operator+(const Coef& a, const Coef& b) {
  if (a.den() == b.den()) return Coef(a.num() + b.num(), a.den());
  return Coef(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}
Coef operator-(const Coef& a) { return Coef(-a.num(), a.den()); }
Coef operator-(const Coef& a, const Coef& b) { return a + (-b); }
Coef operator*(const Coef& a, const Coef& b) {
  if (a.is_zero() || b.is_zero()) return Coef();
  if (a.den() == Poly(Q(1)) && b.den() == Poly(Q(1))) return Coef(a.num() * b.num());
  return Coef(a.num() * b.num(), a.den() * b.den());
}
Coef operator/(const Coef& a, const Coef& b) {
  if (b.is_zero()) throw std::domain_error("division by zero coefficient");
  return Coef(a.num() * b.den(), a.den() * b.num());
}

// ---- Expr ----

Expr Expr::vacuum(const Coef& c) {
  Expr e;
  e.add({}, c);
  return e;
}

Expr Expr::gen(int g, int deriv) {
  Expr e;
  e.add({Letter{g, deriv}}, Coef(Q(1)));
  return e;
}

void Expr::add(const Word& w, const Coef& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.try_emplace(w, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

Expr& Expr::operator+=(const Expr& o) {
  for (const auto& [w, c] : o.t_) add(w, c);
  return *this;
}

Expr operator+(Expr a, const Expr& b) { return a += b; }
Expr operator-(const Expr& a) { return Coef(Q(-1)) * a; }
Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }
Expr operator*(const Coef& c, const Expr& a) {
  Expr out;
  for (const auto& [w, v] : a.terms()) out.add(w, c * v);
  return out;
}

LambdaExpr lambda_add(const LambdaExpr& a, const LambdaExpr& b) {
  LambdaExpr out = a;
  for (const auto& [i, e] : b) {
    out[i] += e;
    if (out[i].is_zero()) out.erase(i);
  }
  return out;
}

LambdaExpr lambda_scale(const Coef& c, const LambdaExpr& a) {
  LambdaExpr out;
  for (const auto& [i, e] : a) {
    Expr v = c * e;
    if (!v.is_zero()) out[i] = v;
  }
  return out;
}

bool lambda_equal(const LambdaExpr& a, const LambdaExpr& b) {
  return lambda_add(a, lambda_scale(Coef(Q(-1)), b)).empty();
}

// ---- matrices ----

namespace {

Mat zero(int n) { return Mat(n, Vec(n, Q(0))); }

Mat unit(int n, int i, int j) {
  Mat m = zero(n);
  m[i][j] = 1;
  return m;
}

Mat mul(const Mat& a, const Mat& b) {
  const size_t n = a.size();
  Mat r(n, Vec(n, Q(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

Mat lin(const Mat& a, const Q& s, const Mat& b, const Q& t) {
  Mat r = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) r[i][j] = s * a[i][j] + t * b[i][j];
  return r;
}

Mat scaled(const Mat& a, const Q& s) { return lin(a, s, a, 0); }

Mat transpose(const Mat& a) {
  Mat t = a;
  for (size_t r = 0; r < a.size(); ++r)
    for (size_t c = 0; c < a.size(); ++c) t[r][c] = a[c][r];
  return t;
}

bool is_zero_mat(const Mat& a) {
  for (const auto& row : a)
    for (const auto& v : row)
      if (v != 0) return false;
  return true;
}

// Coordinates of m in a basis, via the Gram matrix of the trace form.
Vec coords(const std::vector<Mat>& basis, const Mat& gram, const Mat& m) {
  Vec rhs;
  for (const auto& b : basis) rhs.push_back(trace_form(b, m));
  Vec c = solve(gram, rhs);
  Mat back = zero(static_cast<int>(m.size()));
  for (size_t i = 0; i < basis.size(); ++i) back = lin(back, 1, basis[i], c[i]);
  if (back != m) throw std::logic_error("matrix outside the span of the basis");
  return c;
}

Mat gram_of(const std::vector<Mat>& a, const std::vector<Mat>& b) {
  Mat g(a.size(), Vec(b.size(), Q(0)));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) g[i][j] = trace_form(a[i], b[j]);
  return g;
}

std::string idx_name(int n, int i, int j) {
  if (n <= 9) return std::to_string(i + 1) + std::to_string(j + 1);
  return std::to_string(i + 1) + "," + std::to_string(j + 1);
}

}  // namespace

Q trace_form(const Mat& a, const Mat& b) {
  Q t = 0;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < a.size(); ++k) t += a[i][k] * b[k][i];
  return t;
}

Mat commutator(const Mat& a, const Mat& b) { return lin(mul(a, b), 1, mul(b, a), -1); }

std::string OpeContext::name(int gen) const {
  if (gen < num_j()) return "J[" + jnames[gen] + "]";
  if (gen < omega()) return "G[" + gnames[gen - num_j()] + "]";
  if (gen == omega()) return "L";
  throw std::out_of_range("generator index");
}

int OpeContext::find(const std::string& nm) const {
  for (int g = 0; g <= omega(); ++g)
    if (name(g) == nm) return g;
  return -1;
}

OpeContext make_sl(int n) {
  if (n < 3) throw std::invalid_argument("sl(n) needs n >= 3");
  OpeContext c;
  c.n = n;
  c.hvee = n;
  const int last = n - 1;
  c.e_mtheta = unit(n, last, 0);
  c.e_theta = scaled(unit(n, 0, last), Q(1, 2));
  c.x = lin(unit(n, 0, 0), Q(1, 2), unit(n, last, last), Q(-1, 2));

  Mat cen = zero(n);
  for (int i = 0; i < n; ++i) cen[i][i] = (i == 0 || i == last) ? Q(n - 2) : Q(-2);
  c.jbasis.push_back(scaled(cen, Q(1, 2 * (n - 2))));
  c.jnames.push_back("c");
  c.jcomponent.push_back(0);
  for (int i = 1; i < last; ++i)
    for (int j = 1; j < last; ++j)
      if (i != j) {
        c.jbasis.push_back(unit(n, i, j));
        c.jnames.push_back("e" + idx_name(n, i, j));
        c.jcomponent.push_back(1);
      }
  for (int i = 1; i + 1 < last; ++i) {
    c.jbasis.push_back(lin(unit(n, i, i), 1, unit(n, i + 1, i + 1), -1));
    c.jnames.push_back("h" + idx_name(n, i, i + 1));
    c.jcomponent.push_back(1);
  }
  c.component_hvee = {Q(0), Q(n - 2)};
  c.component_shift = {frac(n, 2), Q(1)};

  for (int i = 1; i < last; ++i) {
    c.gbasis.push_back(unit(n, i, 0));
    c.gnames.push_back("e" + idx_name(n, i, 0));
  }
  for (int i = 1; i < last; ++i) {
    c.gbasis.push_back(unit(n, last, i));
    c.gnames.push_back("e" + idx_name(n, last, i));
  }
  for (int i = 1; i < last; ++i) c.half.push_back(unit(n, 0, i));
  for (int i = 1; i < last; ++i) c.half.push_back(unit(n, i, last));

  // Dual basis: <u^g, v_h>_ne = delta_gh.
  const size_t h = c.half.size();
  Mat ne(h, Vec(h, Q(0)));
  for (size_t a = 0; a < h; ++a)
    for (size_t b = 0; b < h; ++b) ne[a][b] = trace_form(c.e_mtheta, commutator(c.half[a], c.half[b]));
  Mat inv = inverse(ne);
  for (size_t g = 0; g < h; ++g) {
    Mat d = zero(n);
    for (size_t b = 0; b < h; ++b) d = lin(d, 1, c.half[b], inv[b][g]);
    c.half_dual.push_back(d);
  }

  c.jgram = gram_of(c.jbasis, c.jbasis);
  // Killing form of g_0 = g^natural + C x, as the trace of ad a ad b on g_0.
  std::vector<Mat> g0 = c.jbasis;
  g0.push_back(c.x);
  const Mat g0gram = gram_of(g0, g0);
  auto ad = [&](const Mat& a) {
    Mat m(g0.size(), Vec(g0.size(), Q(0)));
    for (size_t j = 0; j < g0.size(); ++j) {
      Vec col = coords(g0, g0gram, commutator(a, g0[j]));
      for (size_t i = 0; i < g0.size(); ++i) m[i][j] = col[i];
    }
    return m;
  };
  std::vector<Mat> ads;
  for (const auto& b : c.jbasis) ads.push_back(ad(b));
  c.kappa0 = Mat(c.jbasis.size(), Vec(c.jbasis.size(), Q(0)));
  for (size_t a = 0; a < ads.size(); ++a)
    for (size_t b = 0; b < ads.size(); ++b) {
      Mat pr = mul(ads[a], ads[b]);
      Q t = 0;
      for (size_t i = 0; i < pr.size(); ++i) t += pr[i][i];
      c.kappa0[a][b] = t;
    }
  c.p = (Poly::k() + Poly(Q(1))) * (Poly::k() + Poly(frac(n, 2)));
  return c;
}

// ---- OPE table ----

namespace {

Mat natural_part(const OpeContext& c, const Mat& a) {
  return lin(a, 1, c.x, -trace_form(a, c.x) / trace_form(c.x, c.x));
}

}  // namespace

Coef OpeTable::kcoef() const { return k_ ? Coef(*k_) : Coef(Poly::k()); }

Coef OpeTable::central_charge() const {
  const Coef k = kcoef();
  const Q sdim = ctx_.n * ctx_.n - 1;
  const Coef h(ctx_.hvee);
  return k * Coef(sdim) / (k + h) - Coef(Q(6)) * k + h - Coef(Q(4));
}

Expr OpeTable::J(const Mat& m) const {
  Vec c = coords(ctx_.jbasis, ctx_.jgram, m);
  Expr e;
  for (size_t i = 0; i < c.size(); ++i) e.add({Letter{static_cast<int>(i), 0}}, Coef(c[i]));
  return e;
}

Expr OpeTable::G(const Mat& m) const {
  Expr e;
  Mat rest = m;
  for (size_t i = 0; i < ctx_.gbasis.size(); ++i) {
    // Matrix-unit basis: the coordinate is the pairing with the transpose.
    const Q v = trace_form(m, transpose(ctx_.gbasis[i]));
    e.add({Letter{ctx_.num_j() + static_cast<int>(i), 0}}, Coef(v));
    rest = lin(rest, 1, ctx_.gbasis[i], -v);
  }
  if (!is_zero_mat(rest)) throw std::logic_error("matrix outside g_{-1/2}");
  return e;
}

OpeTable::OpeTable(OpeContext ctx, std::optional<Q> k) : ctx_(std::move(ctx)), k_(k) {
  const Coef K = kcoef();
  if (k_ && *k_ == -ctx_.hvee) throw std::domain_error("critical level");
  const int nj = ctx_.num_j(), ng = ctx_.num_g(), om = ctx_.omega();
  const Coef half_h(ctx_.hvee / 2);
  // [J_a lambda J_b] = J^{[a,b]} + lambda((k + h/2)(a|b) - kappa0(a,b)/4)
  for (int a = 0; a < nj; ++a)
    for (int b = 0; b < nj; ++b) {
      LambdaExpr l;
      Expr e0 = J(commutator(ctx_.jbasis[a], ctx_.jbasis[b]));
      if (!e0.is_zero()) l[0] = e0;
      Coef lev = (K + half_h) * Coef(ctx_.jgram[a][b]) - Coef(ctx_.kappa0[a][b] / 4);
      if (!lev.is_zero()) l[1] = Expr::vacuum(lev);
      table_[{a, b}] = l;
    }
  // [J_a lambda G_u] = G^{[a,u]}, and its skew partner.
  for (int a = 0; a < nj; ++a)
    for (int u = 0; u < ng; ++u) {
      Expr g = G(commutator(ctx_.jbasis[a], ctx_.gbasis[u]));
      LambdaExpr l, r;
      if (!g.is_zero()) {
        l[0] = g;
        r[0] = -g;
      }
      table_[{a, nj + u}] = l;
      table_[{nj + u, a}] = r;
    }
  // [G_u lambda G_v]
  Mat ginv = inverse(ctx_.jgram);
  for (int u = 0; u < ng; ++u)
    for (int v = 0; v < ng; ++v) {
      const Mat& U = ctx_.gbasis[u];
      const Mat& V = ctx_.gbasis[v];
      const Q t = trace_form(ctx_.e_theta, commutator(U, V));
      LambdaExpr l;
      Expr e0;
      if (t != 0) {
        e0 += Coef(Q(-2) * t) * (K + Coef(ctx_.hvee)) * Expr::gen(om);
        Expr cas;
        for (int a = 0; a < nj; ++a)
          for (int b = 0; b < nj; ++b)
            if (ginv[a][b] != 0)
              cas += Coef(ginv[a][b]) * normal_order(Expr::gen(a), Expr::gen(b));
        e0 += Coef(t) * cas;
      }
      for (size_t g = 0; g < ctx_.half.size(); ++g) {
        Mat left = natural_part(ctx_, commutator(U, ctx_.half_dual[g]));
        Mat right = natural_part(ctx_, commutator(ctx_.half[g], V));
        if (is_zero_mat(left) || is_zero_mat(right)) continue;
        e0 += normal_order(J(left), J(right));
      }
      Mat w = natural_part(ctx_, commutator(commutator(ctx_.e_theta, U), V));
      if (!is_zero_mat(w)) e0 += (Coef(Q(2)) * (K + Coef(Q(1)))) * derivative(J(w));
      if (!e0.is_zero()) l[0] = e0;
      // 4 lambda sum_i p(k)/k_i J^{w_i}; each k_i divides p(k).
      Vec wc = is_zero_mat(w) ? Vec(nj, Q(0)) : coords(ctx_.jbasis, ctx_.jgram, w);
      Expr e1;
      for (int a = 0; a < nj; ++a) {
        if (wc[a] == 0) continue;
        const auto [quot, rem] = divmod(ctx_.p, Poly::k() + Poly(ctx_.component_shift[ctx_.jcomponent[a]]));
        if (!rem.is_zero()) throw std::logic_error("k_i does not divide p(k)");
        const Coef qc = k_ ? Coef(quot.eval(*k_)) : Coef(quot);
        e1.add({Letter{a, 0}}, Coef(Q(4) * wc[a]) * qc);
      }
      if (!e1.is_zero()) l[1] = e1;
      if (t != 0) {
        Coef pk = k_ ? Coef(ctx_.p.eval(*k_)) : Coef(ctx_.p);
        l[2] = Expr::vacuum(Coef(Q(2) * t) * pk);
      }
      table_[{nj + u, nj + v}] = l;
    }
  // Virasoro: J primary of weight 1, G of weight 3/2.
  for (int g = 0; g < om; ++g) {
    const Q wt = g < nj ? Q(1) : Q(3, 2);
    LambdaExpr l, r;
    l[0] = Expr::gen(g, 1);
    l[1] = Coef(wt) * Expr::gen(g);
    table_[{om, g}] = l;
    if (wt != 1) r[0] = Coef(wt - 1) * Expr::gen(g, 1);
    r[1] = Coef(wt) * Expr::gen(g);
    table_[{g, om}] = r;
  }
  LambdaExpr vir;
  vir[0] = Expr::gen(om, 1);
  vir[1] = Coef(Q(2)) * Expr::gen(om);
  vir[3] = Expr::vacuum(central_charge() / Coef(Q(12)));
  table_[{om, om}] = vir;
}

const LambdaExpr& OpeTable::entry(int a, int b) const { return table_.at({a, b}); }

// (lambda + d)^n then (-lambda)^m applied to the generator bracket.
LambdaExpr OpeTable::letter_bracket(const Letter& a, const Letter& b) const {
  LambdaExpr cur = entry(a.gen, b.gen);
  for (int s = 0; s < b.deriv; ++s) {
    LambdaExpr next;
    for (const auto& [i, e] : cur) {
      next[i + 1] += e;
      next[i] += derivative(e);
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    cur = std::move(next);
  }
  if (a.deriv == 0) return cur;
  LambdaExpr out;
  const Coef sign(Q(a.deriv % 2 ? -1 : 1));
  for (const auto& [i, e] : cur) out[i + a.deriv] = sign * e;
  return out;
}

// [X_lambda Y] = -[Y_{-lambda-d} X]; every generator here is even.
LambdaExpr OpeTable::skew(const LambdaExpr& l) const {
  LambdaExpr out;
  for (const auto& [i, e] : l) {
    Expr de = e;
    for (int r = 0; r <= i; ++r) {
      // term C(i, r) (-lambda)^{i-r} (-d)^r e
      const int j = i - r;
      Q c = binomial(Q(i), r) * Q(((i) % 2) ? 1 : -1);
      out[j] += Coef(c) * de;
      de = derivative(de);
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

// :ab: = :ba: + int_{-d}^0 [a_lambda b] d lambda.
Expr OpeTable::reorder(const Letter& a, const Letter& b) const {
  Expr out;
  out.add({b, a}, Coef(Q(1)));
  for (const auto& [i, e] : letter_bracket(a, b)) {
    Expr d = e;
    for (int r = 0; r <= i; ++r) d = derivative(d);
    out += Coef(Q(i % 2 ? -1 : 1) / Q(i + 1)) * d;
  }
  return out;
}

Expr OpeTable::normal_order(const Expr& a, const Expr& b) const {
  Expr out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      const Coef c = ca * cb;
      if (wa.empty()) {
        out.add(wb, c);
      } else if (wb.empty()) {
        out.add(wa, c);
      } else if (wa.size() == 1 && wb.size() == 1) {
        if (wa[0] <= wb[0])
          out.add({wa[0], wb[0]}, c);
        else
          out += c * reorder(wa[0], wb[0]);
      } else {
        throw std::invalid_argument("normal ordering beyond quadratic words");
      }
    }
  return out;
}

Expr OpeTable::derivative(const Expr& a) const {
  Expr out;
  for (const auto& [w, c] : a.terms()) {
    if (w.size() == 1) {
      out.add({Letter{w[0].gen, w[0].deriv + 1}}, c);
    } else if (w.size() == 2) {
      out += c * normal_order(Expr::gen(w[0].gen, w[0].deriv + 1), Expr::gen(w[1].gen, w[1].deriv));
      out += c * normal_order(Expr::gen(w[0].gen, w[0].deriv), Expr::gen(w[1].gen, w[1].deriv + 1));
    } else if (w.size() > 2) {
      throw std::invalid_argument("derivative beyond quadratic words");
    }
  }
  return out;
}

// [a_lambda :bc:] = :[a_lambda b] c: + :b [a_lambda c]: + int_0^lambda [[a_lambda b]_mu c] d mu.
LambdaExpr OpeTable::wick(const Letter& a, const Letter& b, const Letter& c) const {
  LambdaExpr out;
  const Expr eb = Expr::gen(b.gen, b.deriv), ec = Expr::gen(c.gen, c.deriv);
  const LambdaExpr ab = letter_bracket(a, b);
  for (const auto& [i, e] : ab) out[i] += normal_order(e, ec);
  for (const auto& [i, e] : letter_bracket(a, c)) out[i] += normal_order(eb, e);
  for (const auto& [i, e] : ab)
    for (const auto& [j, f] : bracket(e, ec)) out[i + j + 1] += Coef(Q(1, j + 1)) * f;
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

LambdaExpr OpeTable::bracket(const Expr& a, const Expr& b) const {
  LambdaExpr out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      if (wa.empty() || wb.empty()) continue;
      LambdaExpr part;
      if (wa.size() == 1 && wb.size() == 1)
        part = letter_bracket(wa[0], wb[0]);
      else if (wa.size() == 1 && wb.size() == 2)
        part = wick(wa[0], wb[0], wb[1]);
      else if (wa.size() == 2 && wb.size() == 1)
        part = skew(wick(wb[0], wa[0], wa[1]));
      else
        throw std::invalid_argument("bracket of two composite words");
      out = lambda_add(out, lambda_scale(ca * cb, part));
    }
  return out;
}

Expr OpeTable::sugawara() const {
  const Coef K = kcoef();
  Expr out;
  const Mat inv = inverse(ctx_.jgram);
  for (int comp = 0; comp < 2; ++comp) {
    Expr cas;
    bool any = false;
    for (int a = 0; a < ctx_.num_j(); ++a)
      for (int b = 0; b < ctx_.num_j(); ++b)
        if (ctx_.jcomponent[a] == comp && ctx_.jcomponent[b] == comp && inv[a][b] != 0) {
          cas += Coef(inv[a][b]) * normal_order(Expr::gen(a), Expr::gen(b));
          any = true;
        }
    if (!any) continue;
    const Coef denom = Coef(Q(2)) * (K + Coef(ctx_.component_shift[comp] + ctx_.component_hvee[comp]));
    out += (Coef(Q(1)) / denom) * cas;
  }
  return out;
}

OpeTable build_ope(const OpeContext& ctx, std::optional<Q> k) { return OpeTable(ctx, k); }

std::string format_expr(const OpeContext& ctx, const Expr& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : e.terms()) {
    std::string body;
    auto letter = [&](const Letter& l) {
      std::string s = ctx.name(l.gen);
      for (int i = 0; i < l.deriv; ++i) s = "d" + s;
      return s;
    };
    if (w.empty())
      body = "1";
    else if (w.size() == 1)
      body = letter(w[0]);
    else
      body = ":" + letter(w[0]) + " " + letter(w[1]) + ":";
    std::string cs = c.str();
    if (!out.empty()) out += " + ";
    out += (cs == "1") ? body : "(" + cs + ")*" + body;
  }
  return out;
}

std::string format_lambda(const OpeContext& ctx, const LambdaExpr& l) {
  if (l.empty()) return "0";
  std::string out;
  for (const auto& [i, e] : l) {
    if (!out.empty()) out += " + ";
    std::string lam = i == 0 ? "" : (i == 1 ? "lambda*" : "lambda^" + std::to_string(i) + "*");
    out += lam + "(" + format_expr(ctx, e) + ")";
  }
  return out;
}

std::vector<PrintedEntry> printed_sl4_table(const OpeTable& t) {
  const OpeContext& c = t.context();
  if (c.n != 4) throw std::invalid_argument("printed table exists for sl(4) only");
  auto g = [&](const std::string& nm) {
    int i = c.find(nm);
    if (i < 0) throw std::logic_error("unknown generator " + nm);
    return i;
  };
  const Coef k(Poly::k());
  const Coef one(Q(1));
  auto C = [](long p, long q = 1) { return Coef(frac(p, q)); };
  const int Jc = g("J[c]"), Je = g("J[e23]"), Jf = g("J[e32]"), Jh = g("J[h23]"), L = g("L");
  auto word = [](int a, int b) {
    Expr e;
    e.add({Letter{a, 0}, Letter{b, 0}}, Coef(Q(1)));
    return e;
  };
  std::vector<PrintedEntry> out;
  for (const auto& [u, v] : std::vector<std::pair<std::string, std::string>>{
           {"e21", "e21"}, {"e31", "e31"}, {"e42", "e42"}, {"e43", "e43"}, {"e21", "e31"}, {"e43", "e42"}})
    out.push_back({u, v, {}});
  {
    LambdaExpr l;
    l[0] = C(2) * word(Jc, Je) - (k + C(2)) * Expr::gen(Je, 1);
    l[1] = -(C(2) * (k + C(2))) * Expr::gen(Je);
    out.push_back({"e21", "e43", l});
  }
  {
    LambdaExpr l;
    l[0] = C(2) * word(Jc, Jf) - (k + C(2)) * Expr::gen(Jf, 1);
    l[1] = -(C(2) * (k + C(2))) * Expr::gen(Jf);
    out.push_back({"e31", "e42", l});
  }
  for (int sgn : {1, -1}) {
    const Coef s{Q(sgn)};
    LambdaExpr l;
    l[0] = s * (k + C(4)) * Expr::gen(L) - s * C(2) * word(Je, Jf) - s * C(1, 2) * word(Jh, Jh) -
           s * C(3, 2) * word(Jc, Jc) + word(Jc, Jh) + (k + one) * Expr::gen(Jc, 1) -
           s * (k / C(2)) * Expr::gen(Jh, 1);
    l[1] = C(2) * (k + one) * Expr::gen(Jc) - s * (k + C(2)) * Expr::gen(Jh);
    l[2] = Expr::vacuum(-(s * (k + one) * (k + C(2))));
    out.push_back({sgn == 1 ? "e21" : "e43", sgn == 1 ? "e42" : "e31", l});
  }
  return out;
}

// ---- lattice image ----

namespace {

R2State r2(const lattice::State& r, const lattice::State& s = lattice::State()) { return {r, s}; }

R2State r2_scale(const Q& c, const R2State& v) { return {c * v.r, c * v.s}; }

R2State r2_add(const R2State& a, const R2State& b) { return {a.r + b.r, a.s + b.s}; }

template <class F>
R2State r2_product(const R2State& a, const R2State& b, F f) {
  return {f(a.r, b.r) + Q(2) * f(a.s, b.s), f(a.r, b.s) + f(a.s, b.r)};
}

}  // namespace

R2State phi(const OpeContext& ctx, int gen) {
  if (ctx.n != 4) throw std::invalid_argument("phi is defined for sl(4)");
  const lattice::R3& r = lattice::r3_generators();
  const std::string nm = ctx.name(gen);
  const Q g(1, 3);  // G images carry sqrt2/3
  if (nm == "J[e23]") return r2(r.e);
  if (nm == "J[e32]") return r2(r.f);
  if (nm == "J[h23]") return r2(r.h);
  if (nm == "J[c]") return r2(r.j);
  if (nm == "G[e21]") return r2({}, g * r.E1);
  if (nm == "G[e31]") return r2({}, g * r.F1);
  if (nm == "G[e43]") return r2({}, g * r.E2);
  if (nm == "G[e42]") return r2({}, -g * r.F2);
  if (nm == "L") return r2(r.omega);
  throw std::invalid_argument("no image for " + nm);
}

R2State phi_expr(const OpeTable& t, const Expr& e) {
  if (!t.level() || *t.level() != Q(-8, 3)) throw std::domain_error("phi needs k = -8/3");
  R2State out;
  auto letter = [&](const Letter& l) {
    R2State v = phi(t.context(), l.gen);
    for (int i = 0; i < l.deriv; ++i) v = {lattice::translation(v.r), lattice::translation(v.s)};
    return v;
  };
  for (const auto& [w, c] : e.terms()) {
    const Q cv = c.eval(*t.level());
    R2State term;
    if (w.empty())
      term = r2(lattice::State::vacuum());
    else if (w.size() == 1)
      term = letter(w[0]);
    else
      term = r2_product(letter(w[0]), letter(w[1]), [](const lattice::State& x, const lattice::State& y) {
        return lattice::normally_ordered(x, y);
      });
    out = r2_add(out, r2_scale(cv, term));
  }
  return out;
}

R2Lambda lattice_bracket(const R2State& a, const R2State& b) {
  std::map<int, R2State> out;
  auto acc = [&](const lattice::LambdaPoly& p, const Q& c, bool root) {
    for (const auto& [i, s] : p) {
      if (root)
        out[i].s += c * s;
      else
        out[i].r += c * s;
    }
  };
  acc(lattice::lambda_bracket(a.r, b.r), 1, false);
  acc(lattice::lambda_bracket(a.s, b.s), 2, false);
  acc(lattice::lambda_bracket(a.r, b.s), 1, true);
  acc(lattice::lambda_bracket(a.s, b.r), 1, true);
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

std::string format_r2(const R2State& v) {
  if (v.is_zero()) return "0";
  std::string out;
  if (!v.r.is_zero()) out = lattice::format_state(v.r);
  if (!v.s.is_zero()) out += (out.empty() ? "" : " + ") + std::string("sqrt2*(") + lattice::format_state(v.s) + ")";
  return out;
}

std::string format_r2(const R2Lambda& l) {
  if (l.empty()) return "0";
  std::string out;
  for (const auto& [i, v] : l) {
    if (!out.empty()) out += " + ";
    std::string lam = i == 0 ? "" : (i == 1 ? "lambda*" : "lambda^" + std::to_string(i) + "*");
    out += lam + "[" + format_r2(v) + "]";
  }
  return out;
}

std::vector<PhiCheck> verify_phi() {
  const OpeTable t(make_sl(4), Q(-8, 3));
  const OpeContext& c = t.context();
  std::vector<PhiCheck> out;
  for (int a = 0; a <= c.omega(); ++a)
    for (int b = 0; b <= c.omega(); ++b) {
      R2Lambda expected;
      for (const auto& [i, e] : t.entry(a, b)) {
        R2State v = phi_expr(t, e);
        if (!v.is_zero()) expected[i] = v;
      }
      const R2Lambda actual = lattice_bracket(phi(c, a), phi(c, b));
      out.push_back({c.name(a), c.name(b), expected == actual, format_r2(expected), format_r2(actual)});
    }
  return out;
}

}  // namespace mwa::wmin
