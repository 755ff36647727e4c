#include "mwa/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <initializer_list>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace mwa::lattice {

namespace {

const Q kThird = Q(1, 3);

// Oscillator basis in (a, b, d, p) coordinates: alpha + beta, alpha, sigma, phi.
// With alpha + beta and sigma as basis vectors, e^{+-(a+b)} and the screening
// charge expand into single-variable Schur polynomials.
const std::array<HVec, 4>& osc_basis() {
  static const std::array<HVec, 4> b = {HVec{1, 1, 0, 0}, HVec{1, 0, 0, 0}, HVec{1, 1, -3, 0},
                                        HVec{0, 0, 0, 1}};
  return b;
}

const char kOscSym[4] = {'c', 'a', 's', 'p'};

std::array<Q, 4> to_osc(const HVec& h) {
  return {h[1] + h[2] * kThird, h[0] - h[1], -h[2] * kThird, h[3]};
}

std::uint16_t code(int mode, int idx) { return static_cast<std::uint16_t>(mode * 4 + idx); }
int mode_of(std::uint16_t c) { return c / 4; }
int idx_of(std::uint16_t c) { return c % 4; }

Monomial merge(const Monomial& x, const Monomial& y) {
  Monomial out;
  out.reserve(x.size() + y.size());
  std::merge(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

Monomial insert(Monomial m, std::uint16_t c) {
  m.insert(std::upper_bound(m.begin(), m.end(), c), c);
  return m;
}

long degree(const Monomial& m) {
  long d = 0;
  for (auto c : m) d += mode_of(c);
  return d;
}

DCoord add(const DCoord& x, const DCoord& y) { return {x[0] + y[0], x[1] + y[1], x[2] + y[2]}; }

Q pair_osc(const HVec& h, int idx) { return pairing(h, osc_basis()[idx]); }

// Substitutes b_(-k) -> b_(-k) + c_b z^{-k} in a monomial; returns power d' -> polynomial.
std::map<long, std::map<Monomial, Q>> shift_annihilators(const Monomial& mono, const HVec& g) {
  std::array<Q, 4> c;
  for (int i = 0; i < 4; ++i) c[i] = -pair_osc(g, i);
  std::map<long, std::map<Monomial, Q>> cur;
  cur[0][Monomial{}] = 1;
  size_t i = 0;
  while (i < mono.size()) {
    size_t t = i;
    while (t < mono.size() && mono[t] == mono[i]) ++t;
    const long mult = static_cast<long>(t - i);
    const std::uint16_t osc = mono[i];
    const Q& cb = c[idx_of(osc)];
    std::map<long, std::map<Monomial, Q>> next;
    for (const auto& [dp, poly] : cur) {
      for (const auto& [m, coef] : poly) {
        Q pw = 1;
        for (long s = 0; s <= mult; ++s) {
          if (s > 0) {
            pw *= cb;
            if (pw == 0) break;
          }
          Monomial nm = m;
          nm.insert(nm.end(), mult - s, osc);
          Q v = coef * binomial(Q(mult), s) * pw;
          auto& slot = next[dp + s * mode_of(osc)][nm];
          slot += v;
        }
      }
    }
    cur = std::move(next);
    i = t;
  }
  // Groups are visited in ascending code order, so the appended monomials stay sorted.
  for (auto& [dp, poly] : cur) std::erase_if(poly, [](const auto& kv) { return kv.second == 0; });
  return cur;
}

State single(const Key& k, const Q& c) {
  State s;
  s.add(k, c);
  return s;
}

long term_bound(const Key& a, const Key& b) {
  return degree(a.mono) + degree(b.mono) - 1 - d_pairing(a.g, b.g);
}

using Modes = std::map<long, State>;

// Products a_(n) w with the creation factor S_d(g) of the exponential part of a
// held back: entry (n, d) stands for S_d(g) * state. The held-back factor
// commutes with every creation operator applied later, and multiplying it in
// last lets intermediate terms cancel before the Schur polynomial expands them.
using Deferred = std::map<std::pair<long, long>, State>;

void exp_all(const DCoord& g, const Q& ca, const State& w, long nmin, long nmax, Deferred& out) {
  const HVec gv = from_d(g);
  for (const auto& [wk, wc] : w.terms()) {
    const long P = d_pairing(g, wk.g);
    const Q coef = Q(cocycle(g, wk.g)) * ca * wc;
    const DCoord tgt = add(g, wk.g);
    for (const auto& [dp, poly] : shift_annihilators(wk.mono, gv)) {
      for (long d = std::max(0L, dp - 1 - P - nmax); dp - 1 - P - d >= nmin; ++d) {
        State& slot = out[{dp - 1 - P - d, d}];
        for (const auto& [m, pc] : poly) slot.add(Key{tgt, m}, coef * pc);
      }
    }
  }
}

// All a_(n) w for n >= nmin with a a single term. Oscillators of a are peeled
// one at a time with the Borcherds identity for (u_(p) a')_(n) w, p = -mode:
// sum_j (-1)^j C(p,j) [u_(p-j)(a'_(n+j) w) - (-1)^p a'_(p+n-j)(u_(j) w)].
Deferred deferred_all(const Key& a, const Q& ca, const State& w, long nmin, long nmax) {
  Deferred out;
  if (w.is_zero()) return out;
  if (a.mono.empty()) {
    exp_all(a.g, ca, w, nmin, nmax, out);
  } else {
    const long unbounded = std::numeric_limits<long>::max() / 4;
    const std::uint16_t first = a.mono.front();
    const long m = mode_of(first);
    const HVec& u = osc_basis()[idx_of(first)];
    const Key rest{a.g, Monomial(a.mono.begin() + 1, a.mono.end())};
    const Q p(-m);
    for (const auto& [nd, st] : deferred_all(rest, ca, w, nmin, unbounded)) {
      const auto [mm, d] = nd;
      for (long j = 0; mm - j >= nmin; ++j) {
        if (mm - j > nmax) continue;
        Q c = binomial(p, j);
        if (j % 2) c = -c;
        out[{mm - j, d}] += c * apply_mode(u, static_cast<int>(-m - j), st);
      }
    }
    long max_w = 0;
    for (const auto& [wk, wc] : w.terms())
      for (auto c : wk.mono) max_w = std::max<long>(max_w, mode_of(c));
    const Q sign_p = (m % 2) ? Q(1) : Q(-1);
    for (long j = 0; j <= max_w; ++j) {
      State uw = apply_mode(u, static_cast<int>(j), w);
      if (uw.is_zero()) continue;
      Q c = binomial(p, j) * sign_p;
      if (j % 2) c = -c;
      const long shift = m + j;
      const long hi = nmax >= unbounded ? unbounded : nmax - shift;
      for (const auto& [nd, st] : deferred_all(rest, ca, uw, nmin - shift, hi))
        out[{nd.first + shift, nd.second}] += c * st;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

Modes products_all(const Key& a, const Q& ca, const State& w, long nmin,
                   long nmax = std::numeric_limits<long>::max() / 4) {
  Modes out;
  const HVec gv = from_d(a.g);
  for (const auto& [nd, st] : deferred_all(a, ca, w, nmin, nmax))
    out[nd.first] += multiply(schur(gv, static_cast<int>(nd.second)), st);
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

// ---- Laurent series in z with State coefficients (oracle path) ----

using Series = std::map<long, State>;

void series_add(Series& s, long pw, const State& v) {
  if (v.is_zero()) return;
  s[pw] += v;
  if (s[pw].is_zero()) s.erase(pw);
}

// Annihilation part of the field of oscillator (m, u): sum_{k>=0} C(-k-1, m-1) u_(k) z^{-k-m}.
Series annihilation(const Series& in, int m, const HVec& u) {
  Series out;
  for (const auto& [pw, st] : in) {
    long max_mode = 0;
    for (const auto& [k, c] : st.terms())
      for (auto o : k.mono) max_mode = std::max<long>(max_mode, mode_of(o));
    for (long k = 0; k <= max_mode; ++k) {
      Q c = binomial(Q(-k - 1), m - 1);
      if (c == 0) continue;
      series_add(out, pw - k - m, c * apply_mode(u, static_cast<int>(k), st));
    }
  }
  return out;
}

// Creation part: sum_{k<0} C(-k-1, m-1) u_(k) z^{-k-m}, keeping powers <= cap.
Series creation(const Series& in, int m, const HVec& u, long cap) {
  Series out;
  for (const auto& [pw, st] : in) {
    for (long k = -1;; --k) {
      const long np = pw - k - m;
      if (np > cap) break;
      Q c = binomial(Q(-k - 1), m - 1);
      if (c == 0) continue;
      series_add(out, np, c * apply_mode(u, static_cast<int>(k), st));
    }
  }
  return out;
}

// Y(e^g, z) on a series, keeping powers <= cap.
Series vertex_exp(const DCoord& g, const Series& in, long cap) {
  Series out;
  const HVec gv = from_d(g);
  for (const auto& [pw, st] : in) {
    for (const auto& [wk, wc] : st.terms()) {
      const long P = d_pairing(g, wk.g);
      const int eps = cocycle(g, wk.g);
      for (const auto& [dp, poly] : shift_annihilators(wk.mono, gv)) {
        for (long d = 0; pw + P + d - dp <= cap; ++d) {
          State piece;
          const State S = schur(gv, static_cast<int>(d));
          for (const auto& [sk, sc] : S.terms())
            for (const auto& [m, pc] : poly)
              piece.add(Key{add(g, wk.g), merge(sk.mono, m)}, Q(eps) * wc * sc * pc);
          series_add(out, pw + P + d - dp, piece);
        }
      }
    }
  }
  return out;
}

}  // namespace

HVec hvec(const Q& a, const Q& b, const Q& d, const Q& p) { return {a, b, d, p}; }

Q pairing(const HVec& x, const HVec& y) {
  return x[0] * y[0] - x[1] * y[1] + Q(2, 3) * x[2] * y[2] - Q(2, 3) * x[3] * y[3];
}

std::optional<DCoord> d_coords(const LatticePoint& g) {
  if (g[0] != g[1]) return std::nullopt;
  Q n2 = (g[2] + g[3]) * kThird, n3 = (g[2] - g[3]) * kThird;
  if (!is_integer(g[0]) || !is_integer(n2) || !is_integer(n3)) return std::nullopt;
  return DCoord{g[0].get_num().get_si(), n2.get_num().get_si(), n3.get_num().get_si()};
}

LatticePoint from_d(const DCoord& n) {
  Q n1(n[0]), n2(n[1]), n3(n[2]);
  return {n1, n1, Q(3, 2) * (n2 + n3), Q(3, 2) * (n2 - n3)};
}

bool in_D(const LatticePoint& g) { return d_coords(g).has_value(); }

bool in_L(const LatticePoint& g) {
  return std::all_of(g.begin(), g.end(), [](const Q& x) { return is_integer(x); });
}

long d_pairing(const DCoord& x, const DCoord& y) { return 3 * (x[1] * y[2] + x[2] * y[1]); }

int cocycle(const DCoord& x, const DCoord& y) {
  // Only eps(alpha3, alpha2) = -1 among the generator values.
  return ((x[2] * y[1]) % 2 == 0) ? 1 : -1;
}

int cocycle(const LatticePoint& x, const LatticePoint& y) {
  auto a = d_coords(x), b = d_coords(y);
  if (!a || !b) throw std::domain_error("cocycle is defined on D only");
  return cocycle(*a, *b);
}

// ---- State ----

State State::vacuum() { return single(Key{}, 1); }

State State::exp(const DCoord& g) { return single(Key{g, {}}, 1); }

State State::exp(const LatticePoint& g) {
  auto d = d_coords(g);
  if (!d) throw std::domain_error("exponent outside the lattice D");
  return exp(*d);
}

State State::heis(const HVec& h, int mode) { return apply_mode(h, -mode, vacuum()); }

void State::add(const Key& k, const Q& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

State& State::operator+=(const State& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

State& State::operator-=(const State& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

State& State::operator*=(const Q& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

State operator+(State a, const State& b) { return a += b; }
State operator-(State a, const State& b) { return a -= b; }
State operator-(State a) { return a *= Q(-1); }
State operator*(const Q& c, State a) { return a *= c; }

State apply_mode(const HVec& h, int n, const State& s) {
  State out;
  if (n < 0) {
    const auto c = to_osc(h);
    for (const auto& [k, v] : s.terms())
      for (int i = 0; i < 4; ++i)
        if (c[i] != 0) out.add(Key{k.g, insert(k.mono, code(-n, i))}, v * c[i]);
  } else if (n == 0) {
    for (const auto& [k, v] : s.terms()) out.add(k, v * pairing(h, from_d(k.g)));
  } else {
    std::array<Q, 4> pr;
    for (int i = 0; i < 4; ++i) pr[i] = Q(n) * pair_osc(h, i);
    for (const auto& [k, v] : s.terms()) {
      for (size_t t = 0; t < k.mono.size(); ++t) {
        if (mode_of(k.mono[t]) != n || pr[idx_of(k.mono[t])] == 0) continue;
        Monomial m = k.mono;
        m.erase(m.begin() + static_cast<long>(t));
        out.add(Key{k.g, std::move(m)}, v * pr[idx_of(k.mono[t])]);
      }
    }
  }
  return out;
}

State multiply(const State& p, const State& s) {
  State out;
  for (const auto& [pk, pc] : p.terms()) {
    if (pk.g != DCoord{0, 0, 0}) throw std::invalid_argument("left factor must be a Heisenberg polynomial");
    for (const auto& [sk, sc] : s.terms()) out.add(Key{sk.g, merge(pk.mono, sk.mono)}, pc * sc);
  }
  return out;
}

State schur(const HVec& g, int n) {
  static thread_local std::map<std::pair<HVec, int>, State> cache;
  if (n < 0) return State();
  if (n == 0) return State::vacuum();
  auto key = std::make_pair(g, n);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  State acc;
  for (int k = 1; k <= n; ++k) acc += apply_mode(g, -k, schur(g, n - k));
  acc *= Q(1, n);
  cache.emplace(key, acc);
  return acc;
}

State S2(const HVec& g) { return schur(g, 2); }
State S3(const HVec& g) { return schur(g, 3); }

std::optional<int> truncation_bound(const State& a, const State& b) {
  std::optional<int> best;
  for (const auto& [ak, ac] : a.terms())
    for (const auto& [bk, bc] : b.terms()) {
      int t = static_cast<int>(term_bound(ak, bk));
      if (!best || t > *best) best = t;
    }
  return best;
}

std::map<int, State> nth_products(const State& a, const State& b, int nmin) {
  std::map<int, State> out;
  for (const auto& [ak, ac] : a.terms())
    for (const auto& [n, st] : products_all(ak, ac, b, nmin)) out[static_cast<int>(n)] += st;
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

State nth_product(const State& a, const State& b, int n) {
  State out;
  for (const auto& [ak, ac] : a.terms()) {
    Modes all = products_all(ak, ac, b, n, n);
    if (auto it = all.find(n); it != all.end()) out += it->second;
  }
  return out;
}

State nth_product_series(const State& a, const State& b, int n) {
  const long target = -static_cast<long>(n) - 1;
  State out;
  for (const auto& [ak, ac] : a.terms()) {
    const size_t r = ak.mono.size();
    // Each oscillator contributes either its creation part (left) or its
    // annihilation part (right of Y(e^g, z)).
    for (size_t mask = 0; mask < (size_t{1} << r); ++mask) {
      Series s;
      s[0] = b;
      for (size_t i = 0; i < r; ++i)
        if (!(mask >> i & 1)) s = annihilation(s, mode_of(ak.mono[i]), osc_basis()[idx_of(ak.mono[i])]);
      s = vertex_exp(ak.g, s, target);
      for (size_t i = 0; i < r; ++i)
        if (mask >> i & 1) s = creation(s, mode_of(ak.mono[i]), osc_basis()[idx_of(ak.mono[i])], target);
      if (auto it = s.find(target); it != s.end()) out += ac * it->second;
    }
  }
  return out;
}

LambdaPoly lambda_bracket(const State& a, const State& b) {
  LambdaPoly out;
  for (auto& [i, v] : nth_products(a, b, 0)) {
    Q fact = 1;
    for (int t = 2; t <= i; ++t) fact *= t;
    out[i] = Q(1) / fact * v;
  }
  return out;
}

bool lambda_equal(const LambdaPoly& x, const LambdaPoly& y) {
  auto clean = [](const LambdaPoly& p) {
    LambdaPoly q;
    for (const auto& [i, s] : p)
      if (!s.is_zero()) q[i] = s;
    return q;
  };
  return clean(x) == clean(y);
}

LambdaPoly lambda_scale(const Q& c, const LambdaPoly& p) {
  LambdaPoly out;
  for (const auto& [i, s] : p) {
    State v = c * s;
    if (!v.is_zero()) out[i] = v;
  }
  return out;
}

LambdaPoly lambda_add(const LambdaPoly& x, const LambdaPoly& y) {
  LambdaPoly out = x;
  for (const auto& [i, s] : y) {
    out[i] += s;
    if (out[i].is_zero()) out.erase(i);
  }
  return out;
}

State normally_ordered(const State& a, const State& b) { return nth_product(a, b, -1); }

State translation(const State& a) {
  State out;
  for (const auto& [k, c] : a.terms()) {
    out += apply_mode(from_d(k.g), -1, single(k, c));
    for (size_t t = 0; t < k.mono.size(); ++t) {
      const int m = mode_of(k.mono[t]);
      Monomial mono = k.mono;
      mono.erase(mono.begin() + static_cast<long>(t));
      mono = insert(mono, code(m + 1, idx_of(k.mono[t])));
      out.add(Key{k.g, mono}, c * m);
    }
  }
  return out;
}

LatticePoint screening_momentum() { return {1, 1, -3, 0}; }

State screening_Q(const State& a) { return nth_product(State::exp(screening_momentum()), a, 0); }

const R3& r3_generators() {
  static const R3 r = [] {
    R3 g;
    const HVec al{1, 0, 0, 0}, be{0, 1, 0, 0}, de{0, 0, 1, 0}, ph{0, 0, 0, 1};
    const HVec sig = screening_momentum();
    auto H = [](const HVec& v, int m) { return State::heis(v, m); };
    auto mul = [](const State& x, const State& y) { return multiply(x, y); };
    g.e = State::exp(hvec(1, 1, 0, 0));
    g.h = H(hvec(0, -2, 1, 0), 1);
    // The alpha_(-2) term enters with a plus sign; with a minus sign e_(0)f != h.
    State fpoly = Q(-2, 3) * (mul(H(al, 1), H(al, 1)) - H(al, 2)) - mul(H(al, 1), H(de, 1)) +
                  Q(1, 3) * mul(H(al, 1), H(be, 1));
    g.f = mul(fpoly, State::exp(hvec(-1, -1, 0, 0)));
    g.j = H(ph, 1);
    g.E1 = State::exp(hvec(0, 0, Q(3, 2), Q(3, 2)));
    g.E2 = mul(S2(sig), State::exp(hvec(1, 1, Q(-3, 2), Q(-3, 2))));
    g.F1 = -mul(H(al, 1), State::exp(hvec(-1, -1, Q(3, 2), Q(3, 2))));
    g.F2 = mul(S3(sig) - mul(H(al, 1), S2(sig)), State::exp(hvec(0, 0, Q(-3, 2), Q(-3, 2))));
    g.omega = Q(1, 2) * (mul(H(al, 1), H(al, 1)) - H(al, 2) - mul(H(be, 1), H(be, 1)) + H(be, 2)) +
              Q(3, 4) * (mul(H(de, 1), H(de, 1)) - Q(2) * H(de, 2) - mul(H(ph, 1), H(ph, 1)));
    return g;
  }();
  return r;
}

std::vector<BracketCheck> verify_r3() {
  const R3& r = r3_generators();
  auto d = [](const State& a) { return translation(a); };
  auto no = [](const State& a, const State& b) { return normally_ordered(a, b); };
  const State& j = r.j;
  auto poly = [](std::initializer_list<State> cs) {
    LambdaPoly p;
    int i = 0;
    for (const State& c : cs) {
      if (!c.is_zero()) p[i] = c;
      ++i;
    }
    return p;
  };
  const State one = State::vacuum();
  struct Case {
    std::string name;
    const State *a, *b;
    LambdaPoly want;
  };
  const std::vector<Case> cases = {
      {"E1 E1", &r.E1, &r.E1, {}},
      {"E2 E2", &r.E2, &r.E2, {}},
      {"F1 F1", &r.F1, &r.F1, {}},
      {"F2 F2", &r.F2, &r.F2, {}},
      {"E1 E2", &r.E1, &r.E2, poly({Q(3) * (d(r.e) + Q(3) * no(j, r.e)), Q(6) * r.e})},
      {"F1 F2", &r.F1, &r.F2, poly({Q(-3) * (d(r.f) + Q(3) * no(j, r.f)), Q(-6) * r.f})},
      {"E1 F1", &r.E1, &r.F1, {}},
      {"E1 F2", &r.E1, &r.F2,
       poly({Q(-3) * (r.omega + Q(1, 2) * (d(r.h) + Q(3) * no(j, r.h) - Q(6) * no(j, j) - Q(5) * d(j))),
             Q(3) * (Q(5) * j - r.h), Q(5) * one})},
      {"E2 F1", &r.E2, &r.F1,
       poly({Q(-3) * (r.omega + Q(1, 2) * (d(r.h) - Q(3) * no(j, r.h) - Q(6) * no(j, j) + Q(5) * d(j))),
             Q(-3) * (r.h + Q(5) * j), Q(5) * one})},
      {"E2 F2", &r.E2, &r.F2, {}},
  };
  std::vector<BracketCheck> out;
  for (const auto& c : cases) {
    const LambdaPoly got = lambda_bracket(*c.a, *c.b);
    out.push_back({c.name, lambda_equal(got, c.want), format_lambda(c.want), format_lambda(got)});
  }
  return out;
}

State L0(const State& a) { return nth_product(r3_generators().omega, a, 1); }

namespace {

std::optional<Q> eigenvalue_of(const State& image, const State& a) {
  if (a.is_zero()) return std::nullopt;
  const auto& [k0, c0] = *a.terms().begin();
  auto it = image.terms().find(k0);
  Q w = it == image.terms().end() ? Q(0) : it->second / c0;
  if (!(image == w * a)) return std::nullopt;
  return w;
}

}  // namespace

std::optional<Q> zero_mode_eigenvalue(const State& x, const State& v) {
  return eigenvalue_of(nth_product(x, v, 0), v);
}

std::optional<Q> conformal_weight(const State& a) { return eigenvalue_of(L0(a), a); }

State zhu_circ(const State& a, const State& b) {
  auto w = conformal_weight(a);
  if (!w) throw std::invalid_argument("zhu_circ needs a homogeneous left argument");
  State out;
  const bool integral = is_integer(*w);
  if (!integral && !is_integer(*w - Q(1, 2)))
    throw std::invalid_argument("conformal weight must lie in 1/2 Z");
  const Q top = integral ? *w : *w - Q(1, 2);
  const int shift = integral ? 2 : 1;
  for (const auto& [n, st] : nth_products(a, b, -shift)) out += binomial(top, n + shift) * st;
  return out;
}

State singular_vector(int l, int j) {
  if (j < 0) throw std::invalid_argument("j must be non-negative");
  // l >= 0: Q^j e^{l alpha2 + j(alpha2 + alpha3)}; l <= 0: Q^{j-l} e^{-l alpha3 + j(alpha2 + alpha3)}.
  DCoord g = l >= 0 ? DCoord{0, l + j, j} : DCoord{0, j, -l + j};
  const int reps = l >= 0 ? j : j - l;
  State v = State::exp(g);
  for (int i = 0; i < reps; ++i) v = screening_Q(v);
  return v;
}

bool is_singular(const State& v) {
  if (v.is_zero()) return false;
  const R3& r = r3_generators();
  if (!nth_product(r.e, v, 0).is_zero()) return false;
  for (const State* x : {&r.e, &r.h, &r.f, &r.j})
    if (!nth_products(*x, v, 1).empty()) return false;
  return true;
}

// ---- text I/O ----

namespace {

std::string format_exponent(const DCoord& g) {
  const HVec v = from_d(g);
  const char sym[4] = {'a', 'b', 'd', 'p'};
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (v[i] == 0) continue;
    Q a = abs(v[i]);
    if (v[i] < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (a != 1) out += to_string(a);
    out += sym[i];
  }
  return out;
}

struct Cursor {
  const std::string& s;
  size_t i = 0;
  bool done() const { return i >= s.size(); }
  char peek() const { return done() ? '\0' : s[i]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("malformed state at position " + std::to_string(i) + ": " + what);
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++i;
  }
  std::string number() {
    size_t st = i;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++i;
    if (peek() == '/') {
      ++i;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++i;
    }
    if (st == i) fail("expected a number");
    return s.substr(st, i - st);
  }
};

HVec sym_vec(char c) {
  switch (c) {
    case 'a': return {1, 0, 0, 0};
    case 'b': return {0, 1, 0, 0};
    case 'd': return {0, 0, 1, 0};
    case 'p': return {0, 0, 0, 1};
    case 's': return {1, 1, -3, 0};
    case 'c': return {1, 1, 0, 0};
    default: throw std::invalid_argument(std::string("unknown symbol '") + c + "'");
  }
}

HVec parse_exponent(Cursor& c) {
  HVec v{0, 0, 0, 0};
  bool first = true;
  while (c.peek() != ']') {
    Q sign = 1;
    if (c.peek() == '+' || c.peek() == '-') {
      sign = c.peek() == '-' ? -1 : 1;
      ++c.i;
    } else if (!first) {
      c.fail("expected sign");
    }
    Q coef = 1;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coef = parse_rational(c.number());
      if (c.peek() == '*') ++c.i;
    }
    if (c.done()) c.fail("expected symbol");
    HVec e = sym_vec(c.peek());
    ++c.i;
    for (int k = 0; k < 4; ++k) v[k] += sign * coef * e[k];
    first = false;
  }
  return v;
}

}  // namespace

State parse_state(const std::string& raw) {
  std::string text;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
  if (text.empty()) throw std::invalid_argument("empty state");
  if (text == "0") return State();
  Cursor c{text};
  State out;
  while (!c.done()) {
    Q sign = 1;
    if (c.peek() == '+' || c.peek() == '-') {
      sign = c.peek() == '-' ? -1 : 1;
      ++c.i;
    } else if (c.i != 0) {
      c.fail("expected '+' or '-'");
    }
    Q coef = 1;
    bool has_coef = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coef = parse_rational(c.number());
      has_coef = true;
      if (c.peek() == '*') ++c.i;
    }
    State term = State::vacuum();
    bool has_factor = false;
    while (!c.done() && c.peek() != '+' && c.peek() != '-') {
      if (c.peek() == 'E') {
        ++c.i;
        c.expect('[');
        HVec g = parse_exponent(c);
        c.expect(']');
        term = multiply(term, State::exp(g));
      } else {
        HVec h = sym_vec(c.peek());
        ++c.i;
        c.expect('(');
        c.expect('-');
        int mode = std::stoi(c.number());
        if (mode < 1) c.fail("modes must be negative");
        c.expect(')');
        term = apply_mode(h, -mode, term);
      }
      has_factor = true;
    }
    if (!has_coef && !has_factor) c.fail("empty term");
    out += (sign * coef) * term;
  }
  return out;
}

std::string format_state(const State& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : s.terms()) {
    Q a = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    std::string body;
    for (auto o : k.mono) body += std::string(1, kOscSym[idx_of(o)]) + "(-" + std::to_string(mode_of(o)) + ")";
    if (k.g != DCoord{0, 0, 0}) body += "E[" + format_exponent(k.g) + "]";
    if (body.empty())
      out += to_string(a);
    else if (a == 1)
      out += body;
    else
      out += to_string(a) + "*" + body;
  }
  return out;
}

std::string format_lambda(const LambdaPoly& p) {
  if (p.empty()) return "0";
  std::string out;
  for (const auto& [i, s] : p) {
    if (!out.empty()) out += " + ";
    std::string lam = i == 0 ? "" : (i == 1 ? "lambda" : "lambda^" + std::to_string(i));
    out += lam.empty() ? "(" + format_state(s) + ")" : lam + "*(" + format_state(s) + ")";
  }
  return out;
}

}  // namespace mwa::lattice
