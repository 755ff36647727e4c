#include "mwa/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <regex>
#include <set>
#include <stdexcept>

namespace mwa {

Weight& Weight::operator+=(const Weight& o) {
  if (o.size() != size()) throw std::invalid_argument("weight size mismatch");
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.size() != size()) throw std::invalid_argument("weight size mismatch");
  for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
  return *this;
}

Weight& Weight::operator*=(const Q& s) {
  for (auto& x : c) x *= s;
  return *this;
}

bool Weight::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Q& x) { return x == 0; });
}

Weight operator+(Weight a, const Weight& b) { return a += b; }
Weight operator-(Weight a, const Weight& b) { return a -= b; }
Weight operator-(Weight a) { return a *= Q(-1); }
Weight operator*(const Q& s, Weight a) { return a *= s; }

AlgebraSpec parse_algebra(const std::string& raw) {
  std::string s;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  std::smatch m;
  auto bad = [&]() { return std::invalid_argument("unsupported algebra: '" + raw + "'"); };
  AlgebraSpec r;
  if (std::regex_match(s, m, std::regex("([ABCDEFG])([0-9]+)"))) {
    static const std::map<char, Family> fam = {{'A', Family::A}, {'B', Family::B}, {'C', Family::C},
                                               {'D', Family::D}, {'E', Family::E}, {'F', Family::F},
                                               {'G', Family::G}};
    r.family = fam.at(m[1].str()[0]);
    r.m = std::stoi(m[2]);
    return r;
  }
  if (std::regex_match(s, m, std::regex("(sl|so|sp)\\(?([0-9]+)\\)?"))) {
    int n = std::stoi(m[2]);
    std::string t = m[1];
    if (t == "sl") {
      r.family = Family::A;
      r.m = n - 1;
    } else if (t == "sp") {
      if (n % 2) throw bad();
      r.family = Family::C;
      r.m = n / 2;
    } else {
      r.family = n % 2 ? Family::B : Family::D;
      r.m = n / 2;
    }
    return r;
  }
  if (std::regex_match(s, m, std::regex("(sl|osp|spo)\\(([0-9]+)\\|([0-9]+)\\)"))) {
    std::string t = m[1];
    r.m = std::stoi(m[2]);
    r.n = std::stoi(m[3]);
    r.family = t == "sl" ? Family::SL : t == "osp" ? Family::OSP : Family::SPO;
    return r;
  }
  if (std::regex_match(s, m, std::regex("D\\(2,1;([-+0-9/]+)\\)"))) {
    r.family = Family::D21A;
    r.a = parse_rational(m[1]);
    return r;
  }
  throw bad();
}

std::string algebra_name(const AlgebraSpec& s) {
  switch (s.family) {
    case Family::A: return "A" + std::to_string(s.m);
    case Family::B: return "B" + std::to_string(s.m);
    case Family::C: return "C" + std::to_string(s.m);
    case Family::D: return "D" + std::to_string(s.m);
    case Family::E: return "E" + std::to_string(s.m);
    case Family::F: return "F" + std::to_string(s.m);
    case Family::G: return "G" + std::to_string(s.m);
    case Family::SL: return "sl(" + std::to_string(s.m) + "|" + std::to_string(s.n) + ")";
    case Family::OSP: return "osp(" + std::to_string(s.m) + "|" + std::to_string(s.n) + ")";
    case Family::SPO: return "spo(" + std::to_string(s.m) + "|" + std::to_string(s.n) + ")";
    case Family::D21A: return "D(2,1;" + to_string(s.a) + ")";
  }
  return "?";
}

Q inner(const Basis& b, const Weight& x, const Weight& y) {
  if (x.size() != b.labels.size() || y.size() != b.labels.size())
    throw std::invalid_argument("weight does not match basis");
  Q r = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    if (x.c[i] == 0) continue;
    for (size_t j = 0; j < y.size(); ++j)
      if (b.gram[i][j] != 0 && y.c[j] != 0) r += x.c[i] * b.gram[i][j] * y.c[j];
  }
  return r;
}

Q inner(const AlgebraData& alg, const Weight& x, const Weight& y) { return inner(alg.basis, x, y); }

namespace {

Weight unit(size_t n, size_t i, const Q& s = 1) {
  Weight w(n);
  w.c[i] = s;
  return w;
}

Basis diagonal_basis(std::vector<std::string> labels, const Vec& diag) {
  Basis b;
  b.labels = std::move(labels);
  size_t n = diag.size();
  b.gram.assign(n, Vec(n, Q(0)));
  for (size_t i = 0; i < n; ++i) b.gram[i][i] = diag[i];
  return b;
}

std::vector<std::string> labels(const std::string& p, int n) {
  std::vector<std::string> r;
  for (int i = 1; i <= n; ++i) r.push_back(p + std::to_string(i));
  return r;
}

Mat simple_gram(const AlgebraData& alg) {
  size_t r = alg.simple.size();
  Mat g(r, Vec(r));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) g[i][j] = inner(alg, alg.simple[i], alg.simple[j]);
  return g;
}

// Connected Dynkin diagrams of E/F/G in Bourbaki labelling; returns the
// Gram matrix of simple roots with long roots of square length 2.
Mat exceptional_gram(Family f, int r) {
  Mat g(r, Vec(r, Q(0)));
  auto link = [&](int i, int j, Q v) { g[i - 1][j - 1] = g[j - 1][i - 1] = v; };
  if (f == Family::E) {
    for (int i = 0; i < r; ++i) g[i][i] = 2;
    link(1, 3, -1);
    link(2, 4, -1);
    for (int i = 3; i < r; ++i) link(i, i + 1, -1);
  } else if (f == Family::F) {
    g[0][0] = g[1][1] = 2;
    g[2][2] = g[3][3] = 1;
    link(1, 2, -1);
    link(2, 3, -1);
    link(3, 4, Q(-1, 2));
  } else {
    g[0][0] = Q(2, 3);
    g[1][1] = 2;
    link(1, 2, -1);
  }
  return g;
}

void finish_lie(AlgebraData& a) {
  size_t r = a.simple.size();
  a.simple_odd.assign(r, false);
  a.cartan.assign(r, Vec(r));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j)
      a.cartan[i][j] = 2 * inner(a, a.simple[i], a.simple[j]) / inner(a, a.simple[j], a.simple[j]);
  // Closure of the simple roots under simple reflections gives all roots.
  std::set<Weight> roots(a.simple.begin(), a.simple.end());
  std::vector<Weight> frontier(a.simple.begin(), a.simple.end());
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& w : frontier)
      for (size_t i = 0; i < r; ++i) {
        Weight v = reflect(a, w, static_cast<int>(i));
        if (roots.insert(v).second) next.push_back(v);
      }
    frontier = std::move(next);
  }
  for (const auto& w : roots)
    if (is_positive_root(a, w)) a.pos_even.push_back(w);
  Mat inv = inverse(a.cartan);
  for (size_t i = 0; i < r; ++i) {
    Weight w(a.basis.labels.size());
    for (size_t j = 0; j < r; ++j) w += inv[i][j] * a.simple[j];
    a.fundamental.push_back(w);
  }
  Q best = -1;
  for (const auto& w : a.pos_even) {
    Vec sc = simple_coords(a, w);
    Q h = 0;
    for (auto& x : sc) h += x;
    if (h > best) {
      best = h;
      a.highest_root = w;
    }
  }
}

AlgebraData build_lie(const AlgebraSpec& s) {
  AlgebraData a;
  a.spec = s;
  int r = s.m;
  auto need = [&](bool ok) {
    if (!ok) throw std::invalid_argument("unsupported algebra: " + algebra_name(s));
  };
  switch (s.family) {
    case Family::A:
      need(r >= 1);
      a.basis = diagonal_basis(labels("e", r + 1), Vec(r + 1, Q(1)));
      for (int i = 0; i < r; ++i) a.simple.push_back(unit(r + 1, i) - unit(r + 1, i + 1));
      break;
    case Family::B:
    case Family::C:
    case Family::D: {
      need(r >= (s.family == Family::D ? 3 : 1));
      Q g = s.family == Family::C ? Q(1, 2) : Q(1);
      a.basis = diagonal_basis(labels("e", r), Vec(r, g));
      for (int i = 0; i + 1 < r; ++i) a.simple.push_back(unit(r, i) - unit(r, i + 1));
      if (s.family == Family::B) a.simple.push_back(unit(r, r - 1));
      if (s.family == Family::C) a.simple.push_back(unit(r, r - 1, 2));
      if (s.family == Family::D) a.simple.push_back(unit(r, r - 2) + unit(r, r - 1));
      break;
    }
    case Family::E:
    case Family::F:
    case Family::G: {
      need((s.family == Family::E && r >= 6 && r <= 8) || (s.family == Family::F && r == 4) ||
           (s.family == Family::G && r == 2));
      a.basis.labels = labels("a", r);
      a.basis.gram = exceptional_gram(s.family, r);
      for (int i = 0; i < r; ++i) a.simple.push_back(unit(r, i));
      break;
    }
    default:
      need(false);
  }
  a.name = algebra_name(s);
  finish_lie(a);
  a.rho = weyl_vector(a);
  a.dual_coxeter = casimir_shifted(a, a.highest_root) / 2;
  return a;
}

struct SuperLayout {
  Basis basis;
  std::vector<std::pair<Weight, bool>> roots;  // (root, odd)
  std::vector<std::string> default_order;
};

SuperLayout super_layout(const AlgebraSpec& s) {
  SuperLayout L;
  auto bad = [&](const std::string& why) {
    return std::invalid_argument(algebra_name(s) + ": " + why);
  };
  if (s.family == Family::SL) {
    if (s.m == s.n) throw bad("sl(n|n) is not simple");
    if (s.m < 0 || s.n < 0 || s.m + s.n < 2) throw bad("bad parameters");
    auto lab = labels("e", s.m);
    auto dl = labels("d", s.n);
    lab.insert(lab.end(), dl.begin(), dl.end());
    Vec diag(s.m, Q(1));
    diag.insert(diag.end(), s.n, Q(-1));
    L.basis = diagonal_basis(lab, diag);
    size_t N = lab.size();
    for (size_t i = 0; i < N; ++i)
      for (size_t j = 0; j < N; ++j)
        if (i != j) {
          bool odd = (i < size_t(s.m)) != (j < size_t(s.m));
          L.roots.push_back({unit(N, i) - unit(N, j), odd});
        }
    L.default_order = lab;
    return L;
  }
  if (s.family == Family::OSP || s.family == Family::SPO) {
    // Orthogonal part of size mo, symplectic part of size ns.
    int mo = s.family == Family::OSP ? s.m : s.n;
    int ns = s.family == Family::OSP ? s.n : s.m;
    if (ns % 2 || ns < 0 || mo < 0 || mo + ns < 2) throw bad("bad parameters");
    int p = mo / 2, q = ns / 2;
    Q ge = s.family == Family::OSP ? Q(1) : Q(-1, 2);
    Q gd = s.family == Family::OSP ? Q(-1) : Q(1, 2);
    std::vector<std::string> lab;
    Vec diag;
    std::vector<bool> is_e;
    auto add = [&](const std::string& pre, int cnt, const Q& g, bool e) {
      for (int i = 1; i <= cnt; ++i) {
        lab.push_back(pre + std::to_string(i));
        diag.push_back(g);
        is_e.push_back(e);
      }
    };
    if (s.family == Family::OSP) {
      add("e", p, ge, true);
      add("d", q, gd, false);
    } else {
      add("d", q, gd, false);
      add("e", p, ge, true);
    }
    L.basis = diagonal_basis(lab, diag);
    size_t N = lab.size();
    for (size_t i = 0; i < N; ++i) {
      for (size_t j = i + 1; j < N; ++j) {
        bool odd = is_e[i] != is_e[j];
        for (int si : {1, -1})
          for (int sj : {1, -1}) L.roots.push_back({unit(N, i, si) + unit(N, j, sj), odd});
      }
      if (!is_e[i]) {
        L.roots.push_back({unit(N, i, 2), false});
        L.roots.push_back({unit(N, i, -2), false});
      }
      if (mo % 2) {
        bool odd = !is_e[i];
        L.roots.push_back({unit(N, i), odd});
        L.roots.push_back({unit(N, i, -1), odd});
      }
    }
    L.default_order = lab;
    return L;
  }
  if (s.family == Family::D21A) {
    if (s.a == 0 || s.a == -1) throw bad("degenerate parameter");
    L.basis = diagonal_basis({"e1", "e2", "e3"}, {-(1 + s.a) / 2, Q(1, 2), s.a / 2});
    for (size_t i = 0; i < 3; ++i) {
      L.roots.push_back({unit(3, i, 2), false});
      L.roots.push_back({unit(3, i, -2), false});
    }
    for (int a : {1, -1})
      for (int b : {1, -1})
        for (int c : {1, -1}) {
          Weight w(3);
          w.c = {Q(a), Q(b), Q(c)};
          L.roots.push_back({w, true});
        }
    L.default_order = {"e2", "e1", "e3"};
    return L;
  }
  throw bad("not a superalgebra family");
}

}  // namespace

AlgebraData build_algebra(const AlgebraSpec& spec, const std::vector<std::string>& ordering) {
  if (spec.family <= Family::G) return build_lie(spec);
  if (spec.family == Family::SL && spec.n == 0) {
    AlgebraSpec l;
    l.family = Family::A;
    l.m = spec.m - 1;
    return build_lie(l);
  }
  SuperLayout L = super_layout(spec);
  AlgebraData a;
  a.spec = spec;
  a.name = algebra_name(spec);
  a.basis = L.basis;
  std::vector<std::string> ord = ordering.empty() ? L.default_order : ordering;
  if (ord.size() != a.basis.labels.size())
    throw std::invalid_argument(a.name + ": ordering must list every basis label once");
  // Powers of two keep every root off the kernel of the functional.
  a.order.assign(ord.size(), Q(0));
  std::set<std::string> seen;
  for (size_t pos = 0; pos < ord.size(); ++pos) {
    auto it = std::find(a.basis.labels.begin(), a.basis.labels.end(), ord[pos]);
    if (it == a.basis.labels.end() || !seen.insert(ord[pos]).second)
      throw std::invalid_argument(a.name + ": bad ordering label " + ord[pos]);
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, ord.size() - 1 - pos);
    a.order[it - a.basis.labels.begin()] = Q(p);
  }
  std::vector<std::pair<Weight, bool>> pos;
  for (auto& [w, odd] : L.roots)
    if (is_positive_root(a, w)) pos.push_back({w, odd});
  std::sort(pos.begin(), pos.end());
  for (auto& [w, odd] : pos) (odd ? a.pos_odd : a.pos_even).push_back(w);
  std::set<Weight> posset;
  for (auto& pr : pos) posset.insert(pr.first);
  for (auto& [w, odd] : pos) {
    bool decomposable = false;
    for (auto& pr : pos) {
      Weight rest = w - pr.first;
      if (posset.count(rest)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) {
      a.simple.push_back(w);
      a.simple_odd.push_back(odd);
    }
  }
  Q best;
  bool first = true;
  for (auto& [w, odd] : pos) {
    Q f = 0;
    for (size_t i = 0; i < w.size(); ++i) f += a.order[i] * w.c[i];
    if (first || f > best) {
      best = f;
      a.highest_root = w;
      first = false;
    }
  }
  a.rho = weyl_vector(a);
  a.dual_coxeter = casimir_shifted(a, a.highest_root) / 2;
  return a;
}

AlgebraData build_algebra(const AlgebraSpec& spec) { return build_algebra(spec, {}); }

AlgebraData build_algebra(const std::string& spec) { return build_algebra(parse_algebra(spec)); }

size_t AlgebraData::dim() const {
  return 2 * (pos_even.size() + pos_odd.size()) + basis.labels.size() -
         (spec.family == Family::SL || spec.family == Family::A ? 1 : 0);
}

Q AlgebraData::sdim() const {
  long cartan = static_cast<long>(basis.labels.size()) -
                (spec.family == Family::SL || spec.family == Family::A ? 1 : 0);
  return Q(2 * static_cast<long>(pos_even.size()) + cartan - 2 * static_cast<long>(pos_odd.size()));
}

Weight weyl_vector(const AlgebraData& alg) {
  Weight r(alg.basis.labels.size());
  for (const auto& w : alg.pos_even) r += w;
  for (const auto& w : alg.pos_odd) r -= w;
  return Q(1, 2) * r;
}

Q casimir_shifted(const AlgebraData& alg, const Weight& mu) {
  Weight m = mu;
  if (alg.is_lie()) m = from_dynkin(alg, dynkin_labels(alg, mu));
  return inner(alg, m, m + 2 * alg.rho);
}

Vec simple_coords(const AlgebraData& alg, const Weight& w) {
  size_t r = alg.simple.size();
  Vec b(r);
  for (size_t i = 0; i < r; ++i) b[i] = inner(alg, alg.simple[i], w);
  Vec c = solve(simple_gram(alg), b);
  Weight back(alg.basis.labels.size());
  for (size_t i = 0; i < r; ++i) back += c[i] * alg.simple[i];
  if (back != w) throw std::invalid_argument("weight not in the root span");
  return c;
}

bool is_positive_root(const AlgebraData& alg, const Weight& w) {
  if (!alg.order.empty()) {
    Q f = 0;
    for (size_t i = 0; i < w.size(); ++i) f += alg.order[i] * w.c[i];
    return f > 0;
  }
  Vec c = simple_coords(alg, w);
  bool nonneg = std::all_of(c.begin(), c.end(), [](const Q& x) { return x >= 0; });
  return nonneg && !w.is_zero();
}

Vec dynkin_labels(const AlgebraData& alg, const Weight& w) {
  if (!alg.is_lie()) throw std::invalid_argument("Dynkin labels need a Lie algebra");
  Vec r;
  for (const auto& a : alg.simple) r.push_back(2 * inner(alg, w, a) / inner(alg, a, a));
  return r;
}

Weight from_dynkin(const AlgebraData& alg, const Vec& labels) {
  if (labels.size() != alg.fundamental.size()) throw std::invalid_argument("label count mismatch");
  Weight w(alg.basis.labels.size());
  for (size_t i = 0; i < labels.size(); ++i) w += labels[i] * alg.fundamental[i];
  return w;
}

Weight reflect(const AlgebraData& alg, const Weight& w, int i) {
  const Weight& a = alg.simple.at(i);
  return w - (2 * inner(alg, w, a) / inner(alg, a, a)) * a;
}

Weight basis_vector(const AlgebraData& alg, const std::string& label) {
  auto it = std::find(alg.basis.labels.begin(), alg.basis.labels.end(), label);
  if (it == alg.basis.labels.end())
    throw std::invalid_argument(alg.name + ": unknown basis label " + label);
  return unit(alg.basis.labels.size(), it - alg.basis.labels.begin());
}

std::vector<std::pair<Q, std::string>> parse_terms(const std::string& raw) {
  std::string s;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  std::vector<std::pair<Q, std::string>> out;
  if (s.empty() || s == "0") return out;
  static const std::regex term("([+-]?)([0-9]+(?:/[0-9]+)?)?\\*?([A-Za-z][A-Za-z]*[0-9]+)");
  auto begin = std::sregex_iterator(s.begin(), s.end(), term);
  size_t consumed = 0;
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    if (static_cast<size_t>(it->position()) != consumed)
      throw std::invalid_argument("malformed weight: '" + raw + "'");
    if (consumed > 0 && (*it)[1].length() == 0)
      throw std::invalid_argument("malformed weight: '" + raw + "'");
    Q c = (*it)[2].matched ? parse_rational((*it)[2]) : Q(1);
    if ((*it)[1] == "-") c = -c;
    out.push_back({c, (*it)[3]});
    consumed += it->length();
  }
  if (consumed != s.size()) throw std::invalid_argument("malformed weight: '" + raw + "'");
  return out;
}

Weight parse_weight(const AlgebraData& alg, const std::string& s) {
  Weight w(alg.basis.labels.size());
  for (auto& [c, sym] : parse_terms(s)) w += c * basis_vector(alg, sym);
  return w;
}

namespace {

std::string format_terms(const std::vector<std::pair<Q, std::string>>& terms) {
  std::string out;
  for (auto& [c, sym] : terms) {
    if (c == 0) continue;
    Q a = abs(c);
    if (c < 0) out += "-";
    else if (!out.empty()) out += "+";
    if (a != 1) out += to_string(a);
    out += sym;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string format_weight(const AlgebraData& alg, const Weight& w) {
  std::vector<std::pair<Q, std::string>> t;
  for (size_t i = 0; i < w.size(); ++i) t.push_back({w.c[i], alg.basis.labels[i]});
  return format_terms(t);
}

Vec parse_dynkin(const AlgebraData& alg, const std::string& s) {
  Vec l(alg.rank(), Q(0));
  for (auto& [c, sym] : parse_terms(s)) {
    if (sym[0] != 'w') throw std::invalid_argument("expected fundamental weight symbol wN: " + sym);
    int i = std::stoi(sym.substr(1));
    if (i < 1 || i > alg.rank()) throw std::invalid_argument("fundamental weight out of range: " + sym);
    l[i - 1] += c;
  }
  return l;
}

std::string format_dynkin(const Vec& labels) {
  std::vector<std::pair<Q, std::string>> t;
  for (size_t i = 0; i < labels.size(); ++i) t.push_back({labels[i], "w" + std::to_string(i + 1)});
  return format_terms(t);
}

}  // namespace mwa
