#include "mwa/embed.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "mwa/reps.hpp"

namespace mwa {

namespace {

using AlgPtr = std::shared_ptr<const AlgebraData>;

std::string lbl(char c, int i) { return std::string(1, c) + std::to_string(i); }

AlgPtr lie(Family f, int rank) {
  AlgebraSpec s;
  s.family = f;
  s.m = rank;
  return std::make_shared<const AlgebraData>(build_algebra(s));
}

AlgPtr super(Family f, int m, int n, const std::vector<std::string>& ordering) {
  AlgebraSpec s;
  s.family = f;
  s.m = m;
  s.n = n;
  return std::make_shared<const AlgebraData>(build_algebra(s, ordering));
}

Component center(const Q& h_dual) {
  Component c;
  c.label = "C";
  c.center = true;
  c.shift = h_dual / 2;
  c.sdim = 1;
  return c;
}

Component simple_comp(AlgPtr alg, const Q& scale, const Q& h_dual) {
  Component c;
  c.label = alg->name;
  c.alg = std::move(alg);
  c.scale = scale;
  c.h0 = scale * c.alg->dual_coxeter;
  c.shift = (h_dual - c.h0) / 2;
  c.sdim = c.alg->sdim();
  return c;
}

// Maps ambient prefix{i + offset} to local prefix{i}, i = 1..count, with a sign.
void add_relabel(Component& c, char from, char to, int count, int offset, int sign = 1) {
  for (int i = 1; i <= count; ++i) c.relabel[lbl(from, i + offset)] = {lbl(to, i), sign};
}

Weight dyn(const AlgebraData& alg, const std::string& text) {
  return from_dynkin(alg, parse_dynkin(alg, text));
}

std::vector<std::string> ordering(char first, int nf, char second, int ns) {
  std::vector<std::string> out;
  for (int i = 1; i <= nf; ++i) out.push_back(lbl(first, i));
  for (int i = 1; i <= ns; ++i) out.push_back(lbl(second, i));
  return out;
}

int parse_int(const std::string& s) {
  size_t pos = 0;
  int v = std::stoi(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad integer '" + s + "'");
  return v;
}

std::string strip(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }),
          s.end());
  return s;
}

// Lie-type shortcut ids: A3 -> sl4, B3 -> so7, C3 -> sp6, D4 -> so8.
std::string normalize_id(const std::string& raw) {
  std::string s = strip(raw);
  static const std::regex lie_re("([ABCD])([0-9]+)");
  std::smatch m;
  if (std::regex_match(s, m, lie_re)) {
    int r = std::stoi(m[2]);
    switch (m[1].str()[0]) {
      case 'A': return "sl" + std::to_string(r + 1);
      case 'B': return "so" + std::to_string(2 * r + 1);
      case 'C': return "sp" + std::to_string(2 * r);
      default: return "so" + std::to_string(2 * r);
    }
  }
  return s;
}

void finish_excluded(EmbeddingCase& c, const std::string& why) {
  c.excluded = true;
  c.exclusion = why;
}

void build_sl(EmbeddingCase& c) {
  const int m = c.m, n = c.n;
  if (m < 2) throw std::invalid_argument("sl(m|n) needs m >= 2");
  if (m == n) throw std::invalid_argument("sl(n|n) is not simple; use psl(n|n)");
  c.h_dual = m - n;
  c.sdim = Q((m - n) * (m - n) - 1);
  c.p_root1 = -1;
  c.p_root2 = frac(-(m - n), 2);
  c.table = n == 0 ? 1 : (m == 2 ? 2 : 3);
  if (n == 0) {
    c.g_name = "sl(" + std::to_string(m) + ")";
    c.gnat_name = "gl(" + std::to_string(m - 2) + ")";
  } else {
    c.g_name = "sl(" + std::to_string(m) + "|" + std::to_string(n) + ")";
    c.gnat_name = "gl(" + std::to_string(m - 2) + "|" + std::to_string(n) + ")";
  }
  c.ghalf_name = "U+ (+) U-";
  if (m == 2 && n == 0) return finish_excluded(c, "sl(2) is excluded");
  if (m == n + 2 && n > 0) return finish_excluded(c, "sl(n+2|n) is excluded");
  c.has_center = true;
  c.comps.push_back(center(c.h_dual));
  c.half_plus.emplace_back();
  c.half_minus.emplace_back();
  c.square_known = true;
  if (m == 2) {
    if (n >= 2) {
      Component s = simple_comp(lie(Family::A, n - 1), -1, c.h_dual);
      add_relabel(s, 'd', 'e', n, 0);
      Weight up = basis_vector(*s.alg, "e1");
      Weight dn = -basis_vector(*s.alg, lbl('e', n));
      c.half_plus.push_back(up);
      c.half_minus.push_back(dn);
      c.comps.push_back(std::move(s));
    }
    return;
  }
  if (n == 0) {
    if (m >= 4) {
      Component s = simple_comp(lie(Family::A, m - 3), 1, c.h_dual);
      add_relabel(s, 'e', 'e', m - 2, 1);
      c.half_plus.push_back(basis_vector(*s.alg, "e1"));
      c.half_minus.push_back(-basis_vector(*s.alg, lbl('e', m - 2)));
      c.comps.push_back(std::move(s));
    }
    return;
  }
  Component s = simple_comp(super(Family::SL, m - 2, n, ordering('d', n, 'e', m - 2)), 1, c.h_dual);
  add_relabel(s, 'e', 'e', m - 2, 1);
  add_relabel(s, 'd', 'd', n, 0);
  c.half_plus.emplace_back();
  c.half_minus.emplace_back();
  c.comps.push_back(std::move(s));
  c.square_is_fixture = true;
}

void build_psl(EmbeddingCase& c) {
  const int m = c.m;
  if (m < 2) throw std::invalid_argument("psl(m|m) needs m >= 2");
  c.h_dual = 0;
  c.sdim = -2;
  c.p_root1 = 0;
  c.p_root2 = -1;
  c.table = m == 2 ? 2 : 3;
  c.g_name = "psl(" + std::to_string(m) + "|" + std::to_string(m) + ")";
  if (m == 2) {
    c.gnat_name = "sl(2)";
    c.ghalf_name = "C^2 (+) C^2";
    Component s = simple_comp(lie(Family::A, 1), -1, c.h_dual);
    add_relabel(s, 'd', 'e', 2, 0);
    c.comps.push_back(std::move(s));
    return;
  }
  c.gnat_name = "sl(" + std::to_string(m - 2) + "|" + std::to_string(m) + ")";
  c.ghalf_name = "C^{m-2|m} (+) dual";
  Component s = simple_comp(super(Family::SL, m - 2, m, ordering('d', m, 'e', m - 2)), 1, c.h_dual);
  add_relabel(s, 'e', 'e', m - 2, 1);
  add_relabel(s, 'd', 'd', m, 0);
  c.comps.push_back(std::move(s));
}

void build_osp(EmbeddingCase& c) {
  const int m = c.m, n = c.n;
  if (n % 2 != 0) throw std::invalid_argument("osp(m|n) needs n even");
  if (n == 0 && m < 7)
    throw std::invalid_argument("so(n) is instantiated for n >= 7 (so(5) = sp(4), so(6) = sl(4))");
  if (m < 4 || (m == 4 && n == 0))
    throw std::invalid_argument("osp(m|n) with m < 4 has theta in the sp part; use spo(n|m)");
  c.h_dual = m - n - 2;
  c.sdim = Q((m - n) * (m - n - 1) / 2);
  c.p_root1 = -2;
  c.p_root2 = frac(-(m - n - 4), 2);
  c.table = n == 0 ? 1 : (m == 4 ? 2 : 3);
  const std::string ms = std::to_string(m), ns = std::to_string(n);
  c.g_name = n == 0 ? "so(" + ms + ")" : "osp(" + ms + "|" + ns + ")";
  if (n == 0)
    c.gnat_name = "sl(2) + so(" + std::to_string(m - 4) + ")";
  else if (m == 4)
    c.gnat_name = "sl(2) + sp(" + ns + ")";
  else
    c.gnat_name = "osp(" + std::to_string(m - 4) + "|" + ns + ") + sl(2)";
  c.ghalf_name = "C^2 (x) C^{m-4|n}";
  c.square_known = true;

  Component a1 = simple_comp(lie(Family::A, 1), 1, c.h_dual);
  a1.relabel = {{"e1", {"e1", 1}}, {"e2", {"e2", 1}}};
  Weight a1_half = basis_vector(*a1.alg, "e1");

  const int r = m - 4;  // so(r) side of the other component
  if (m == 4) {
    Component s = simple_comp(lie(Family::C, n / 2), -2, c.h_dual);
    add_relabel(s, 'd', 'e', n / 2, 0);
    c.half_plus.push_back(dyn(*s.alg, "w1"));
    c.comps.push_back(std::move(s));
  } else if (n == 0 && r == 3) {
    Component s = simple_comp(lie(Family::B, 1), 1, c.h_dual);
    add_relabel(s, 'e', 'e', 1, 2);
    c.half_plus.push_back(dyn(*s.alg, "2w1"));
    c.comps.push_back(std::move(s));
  } else if (n == 0 && r == 4) {
    // so(4) = sl(2) + sl(2) via e3 +- e4.
    Component s1 = simple_comp(lie(Family::A, 1), 1, c.h_dual);
    s1.relabel = {{"e3", {"e1", 1}}, {"e4", {"e2", 1}}};
    Component s2 = simple_comp(lie(Family::A, 1), 1, c.h_dual);
    s2.relabel = {{"e3", {"e1", 1}}, {"e4", {"e2", -1}}};
    c.half_plus.push_back(dyn(*s1.alg, "w1"));
    c.half_plus.push_back(dyn(*s2.alg, "w1"));
    c.comps.push_back(std::move(s1));
    c.comps.push_back(std::move(s2));
  } else if (n == 0) {
    Component s = simple_comp(lie(r % 2 ? Family::B : Family::D, r / 2), 1, c.h_dual);
    add_relabel(s, 'e', 'e', r / 2, 2);
    c.half_plus.push_back(dyn(*s.alg, "w1"));
    c.comps.push_back(std::move(s));
  } else {
    Component s = simple_comp(super(Family::OSP, r, n, ordering('e', r / 2, 'd', n / 2)), 1, c.h_dual);
    add_relabel(s, 'e', 'e', r / 2, 2);
    add_relabel(s, 'd', 'd', n / 2, 0);
    c.half_plus.emplace_back();
    c.comps.push_back(std::move(s));
    c.square_is_fixture = true;
  }
  c.half_plus.push_back(a1_half);
  c.comps.push_back(std::move(a1));
  c.half_minus = c.half_plus;
}

// spo(n|m): n is the sp size, m the so size.
void build_spo(EmbeddingCase& c) {
  const int n = c.n, m = c.m;
  if (n % 2 != 0 || n < 2) throw std::invalid_argument("spo(n|m) needs n even and >= 2");
  c.h_dual = frac(n - m, 2) + 1;
  c.sdim = Q((n - m) * (n - m + 1) / 2);
  c.p_root1 = frac(-1, 2);
  c.p_root2 = frac(-(n - m + 4), 4);
  c.table = m == 0 ? 1 : (n == 2 ? 2 : 3);
  const std::string ms = std::to_string(m), ns = std::to_string(n);
  c.g_name = m == 0 ? "sp(" + ns + ")" : "spo(" + ns + "|" + ms + ")";
  if (m == 0)
    c.gnat_name = "sp(" + std::to_string(n - 2) + ")";
  else if (n == 2)
    c.gnat_name = "so(" + ms + ")";
  else
    c.gnat_name = "spo(" + std::to_string(n - 2) + "|" + ms + ")";
  c.ghalf_name = "C^{n-2|m}";
  if (n == 2 && m == 0) return finish_excluded(c, "sl(2) is excluded");
  c.square_known = true;
  const Q s_so = frac(-1, 2);
  if (n == 2) {
    if (m == 2) {
      c.has_center = true;
      c.comps.push_back(center(c.h_dual));
      c.half_plus.emplace_back();
    } else if (m == 3) {
      Component s = simple_comp(lie(Family::B, 1), s_so, c.h_dual);
      add_relabel(s, 'e', 'e', 1, 0);
      c.half_plus.push_back(dyn(*s.alg, "2w1"));
      c.comps.push_back(std::move(s));
    } else if (m == 4) {
      Component s1 = simple_comp(lie(Family::A, 1), s_so, c.h_dual);
      s1.relabel = {{"e1", {"e1", 1}}, {"e2", {"e2", 1}}};
      Component s2 = simple_comp(lie(Family::A, 1), s_so, c.h_dual);
      s2.relabel = {{"e1", {"e1", 1}}, {"e2", {"e2", -1}}};
      c.half_plus.push_back(dyn(*s1.alg, "w1"));
      c.half_plus.push_back(dyn(*s2.alg, "w1"));
      c.comps.push_back(std::move(s1));
      c.comps.push_back(std::move(s2));
    } else if (m >= 5) {
      Component s = simple_comp(lie(m % 2 ? Family::B : Family::D, m / 2), s_so, c.h_dual);
      add_relabel(s, 'e', 'e', m / 2, 0);
      c.half_plus.push_back(dyn(*s.alg, "w1"));
      c.comps.push_back(std::move(s));
    }
  } else if (m == 0) {
    Component s = simple_comp(lie(Family::C, (n - 2) / 2), 1, c.h_dual);
    add_relabel(s, 'e', 'e', (n - 2) / 2, 1);
    c.half_plus.push_back(dyn(*s.alg, "w1"));
    c.comps.push_back(std::move(s));
  } else {
    Component s =
        simple_comp(super(Family::SPO, n - 2, m, ordering('d', (n - 2) / 2, 'e', m / 2)), 1, c.h_dual);
    add_relabel(s, 'd', 'd', (n - 2) / 2, 1);
    add_relabel(s, 'e', 'e', m / 2, 0);
    c.half_plus.emplace_back();
    c.comps.push_back(std::move(s));
    c.square_is_fixture = true;
  }
  c.half_minus = c.half_plus;
}

void build_d21a(EmbeddingCase& c) {
  if (c.a == 0 || c.a == -1) throw std::invalid_argument("degenerate parameter for D(2,1;a)");
  c.h_dual = 0;
  c.sdim = 1;
  c.p_root1 = c.a;
  c.p_root2 = -1 - c.a;
  c.table = 2;
  c.g_name = "D(2,1;" + to_string(c.a) + ")";
  c.gnat_name = "sl(2) + sl(2)";
  c.ghalf_name = "C^2 (x) C^2";
  c.square_known = true;
  Component s1 = simple_comp(lie(Family::A, 1), c.a, c.h_dual);
  s1.label = "A1 (2e3)";
  Component s2 = simple_comp(lie(Family::A, 1), -1 - c.a, c.h_dual);
  s2.label = "A1 (2e1)";
  c.half_plus = {dyn(*s1.alg, "w1"), dyn(*s2.alg, "w1")};
  c.half_minus = c.half_plus;
  c.comps.push_back(std::move(s1));
  c.comps.push_back(std::move(s2));
}

struct ExcRow {
  CaseKind kind;
  const char* id;
  int table;
  const char* g;
  const char* gnat;
  const char* ghalf;
  Q h_dual, sdim, r1, r2;
  Family fam;
  int rank;
  Q scale;
  const char* half;
};

const std::vector<ExcRow>& exceptional_rows() {
  static const std::vector<ExcRow> rows = {
      {CaseKind::G2, "G2", 1, "G2", "sl(2)", "S^3 C^2", 4, 14, frac(-4, 3), frac(-5, 3), Family::A, 1,
       frac(1, 3), "3w1"},
      {CaseKind::F4, "F4", 1, "F4", "sp(6)", "wedge^3_0 C^6", 9, 52, frac(-5, 2), -3, Family::C, 3, 1,
       "w3"},
      {CaseKind::E6, "E6", 1, "E6", "sl(6)", "wedge^3 C^6", 12, 78, -3, -4, Family::A, 5, 1, "w3"},
      {CaseKind::E7, "E7", 1, "E7", "so(12)", "spin_12", 18, 133, -4, -6, Family::D, 6, 1, "w6"},
      {CaseKind::E8, "E8", 1, "E8", "E7", "dim = 56", 30, 248, -6, -10, Family::E, 7, 1, "w7"},
      {CaseKind::F4_SO7, "F(4)", 2, "F(4)", "so(7)", "spin_7", -2, 8, frac(-2, 3), frac(2, 3), Family::B,
       3, frac(-2, 3), "w3"},
      {CaseKind::G3_G2, "G(3)", 2, "G(3)", "G2", "Dim = 0|7", frac(-3, 2), 3, frac(1, 2), frac(-3, 4),
       Family::G, 2, frac(-3, 4), "w1"},
  };
  return rows;
}

void build_exceptional(EmbeddingCase& c, const ExcRow& r) {
  c.kind = r.kind;
  c.table = r.table;
  c.g_name = r.g;
  c.gnat_name = r.gnat;
  c.ghalf_name = r.ghalf;
  c.h_dual = r.h_dual;
  c.sdim = r.sdim;
  c.p_root1 = r.r1;
  c.p_root2 = r.r2;
  c.square_known = true;
  Component s = simple_comp(lie(r.fam, r.rank), r.scale, c.h_dual);
  c.half_plus.push_back(dyn(*s.alg, r.half));
  c.half_minus = c.half_plus;
  c.comps.push_back(std::move(s));
}

// --- fixture file -----------------------------------------------------------

struct FixtureRow {
  std::string family;
  std::string condition;
  std::vector<std::string> weights;
  std::vector<std::string> parts;
  std::string source;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(strip(cur));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

const std::vector<FixtureRow>& fixture_rows() {
  static const std::vector<FixtureRow> rows = [] {
    std::vector<FixtureRow> out;
    std::ifstream in(data_dir() + "/super_tensor.txt");
    if (!in) throw std::runtime_error("cannot open " + data_dir() + "/super_tensor.txt");
    std::string line;
    while (std::getline(in, line)) {
      if (strip(line).empty() || strip(line)[0] == '#') continue;
      auto f = split(line, '|');
      if (f.size() != 5) throw std::runtime_error("malformed fixture line: " + line);
      out.push_back({f[0], f[1], split(f[2], ';'), split(f[3], ';'), f[4]});
    }
    return out;
  }();
  return rows;
}

bool condition_holds(const std::string& cond, int m, int n) {
  if (cond == "*") return true;
  static const std::regex clause("([mn])(==|>=|<=)(-?[0-9]+)");
  for (const auto& part : split(cond, ',')) {
    std::smatch mt;
    if (!std::regex_match(part, mt, clause)) throw std::runtime_error("bad fixture condition: " + cond);
    int v = mt[1] == "m" ? m : n;
    int x = std::stoi(mt[3]);
    bool ok = mt[2] == "==" ? v == x : (mt[2] == ">=" ? v >= x : v <= x);
    if (!ok) return false;
  }
  return true;
}

// Replaces "{m-1}"-style placeholders.
std::string substitute(const std::string& s, int m, int n) {
  static const std::regex ph(R"(\{([mn])([+-][0-9]+)?\})");
  std::string out;
  auto it = std::sregex_iterator(s.begin(), s.end(), ph);
  size_t last = 0;
  for (; it != std::sregex_iterator(); ++it) {
    const auto& mt = *it;
    out += s.substr(last, mt.position() - last);
    int v = mt[1] == "m" ? m : n;
    if (mt[2].matched) v += std::stoi(mt[2]);
    out += std::to_string(v);
    last = mt.position() + mt.length();
  }
  return out + s.substr(last);
}

// Super dimension of the defining module of a superalgebra component.
Q defining_sdim(const AlgebraData& alg) {
  const AlgebraSpec& s = alg.spec;
  switch (s.family) {
    case Family::SL: return s.m - s.n;
    case Family::OSP: return s.m - s.n;
    case Family::SPO: return s.m - s.n;  // sp size minus so size
    default: throw std::logic_error("no defining module for " + alg.name);
  }
}

Q part_sdim(const Component& comp, const std::string& part) {
  if (part == "triv") return 1;
  if (part == "adj") return comp.sdim;
  Q d = defining_sdim(*comp.alg);
  if (part == "S2rest") return d * (d + 1) / 2 - 1;
  if (part == "L2rest") return d * (d - 1) / 2 - 1;
  throw std::runtime_error("unknown fixture part '" + part + "'");
}

std::string fixture_family(const EmbeddingCase& c) {
  switch (c.kind) {
    case CaseKind::SL: return "sl";
    case CaseKind::OSP: return "osp";
    case CaseKind::SPO: return "spo";
    default: return "";
  }
}

std::vector<size_t> simple_indices(const EmbeddingCase& c) {
  std::vector<size_t> idx;
  for (size_t i = 0; i < c.comps.size(); ++i)
    if (!c.comps[i].center) idx.push_back(i);
  return idx;
}

std::vector<Summand> fixture_square(const EmbeddingCase& c) {
  const auto idx = simple_indices(c);
  const std::string fam = fixture_family(c);
  std::vector<Summand> out;
  for (const auto& row : fixture_rows()) {
    if (row.family != fam || !condition_holds(row.condition, c.m, c.n)) continue;
    if (row.weights.size() != idx.size() || row.parts.size() != idx.size())
      throw std::runtime_error("fixture row arity mismatch for " + c.id);
    Summand s;
    s.mu.resize(c.comps.size());
    s.sdim = 1;
    s.source = row.source;
    std::string label;
    for (size_t j = 0; j < idx.size(); ++j) {
      const std::string text = substitute(row.weights[j], c.m, c.n);
      s.mu[idx[j]] = component_weight(c, idx[j], text);
      s.sdim *= part_sdim(c.comps[idx[j]], row.parts[j]);
      label += (j ? " ; " : "") + text;
    }
    if (c.has_center) s.mu[0] = Weight();
    s.label = label;
    out.push_back(std::move(s));
  }
  // Super-dimension conservation: sum of summands equals (sdim of the odd part)^2.
  Q module = 1;
  for (size_t i : idx) {
    const Component& comp = c.comps[i];
    module *= comp.alg->is_lie() ? Q(static_cast<long>(weyl_dim(*comp.alg, c.half_plus[i]).get_si()))
                                 : defining_sdim(*comp.alg);
  }
  Q total = 0;
  for (const auto& s : out) total += s.sdim;
  if (total != module * module)
    throw std::logic_error("fixture for " + c.id + " violates super-dimension conservation: " +
                           to_string(total) + " != " + to_string(module * module));
  return out;
}

std::vector<Summand> lie_square(const EmbeddingCase& c) {
  std::vector<Summand> out(1);
  out[0].mu.resize(c.comps.size());
  out[0].sdim = 1;
  out[0].source = "computed";
  std::vector<std::string> labels(1);
  for (size_t i = 0; i < c.comps.size(); ++i) {
    const Component& comp = c.comps[i];
    if (comp.center) continue;
    Decomposition d = tensor_decompose(*comp.alg, c.half_plus[i], c.half_minus[i]);
    LieTables t(*comp.alg);
    std::vector<Summand> next;
    std::vector<std::string> next_labels;
    for (size_t s = 0; s < out.size(); ++s) {
      for (const auto& [lab, mult] : d) {
        Vec v(lab.begin(), lab.end());
        Weight w = from_dynkin(*comp.alg, v);
        Q dim(static_cast<long>(weyl_dim(t, lab).get_si()));
        for (long r = 0; r < mult; ++r) {
          Summand x = out[s];
          x.mu[i] = w;
          x.sdim *= dim;
          next.push_back(std::move(x));
          next_labels.push_back(labels[s] + (labels[s].empty() ? "" : " ; ") + format_dynkin(v));
        }
      }
    }
    out = std::move(next);
    labels = std::move(next_labels);
  }
  for (size_t s = 0; s < out.size(); ++s) out[s].label = labels[s].empty() ? "0" : labels[s];
  return out;
}

bool is_zero_mu(const std::vector<Weight>& mu) {
  return std::all_of(mu.begin(), mu.end(), [](const Weight& w) { return w.c.empty() || w.is_zero(); });
}

struct Special {
  std::string status;
  std::string note;
};

std::optional<Special> special_case(const EmbeddingCase& c, const Q& k) {
  const Q B = -2 * c.h_dual / 3;
  auto infinite = Special{"conformal-infinite", "decomposes into an infinite direct sum"};
  auto fusion = Special{"conformal-semisimple-finite", "via fusion-rule argument"};
  auto open = [](const std::string& why) { return Special{"conformal-undecided", why}; };
  switch (c.kind) {
    case CaseKind::SL:
      if (c.n == 0 && c.m == 4 && k == frac(-8, 3)) return infinite;
      if (c.n == 0 && c.m == 6 && k == -4) return open("open case (sl(6), k = -4)");
      break;
    case CaseKind::PSL:
      if (c.m == 2 && k == frac(1, 2)) return infinite;
      if (c.m > 2) return open("g_{-1/2} is reducible and the centre is trivial; no criterion applies");
      break;
    case CaseKind::OSP:
      if (c.n == 0 && c.m == 8 && k == frac(-5, 2)) return fusion;
      if (c.m == 4 && c.n == 2 && k == frac(1, 2)) return fusion;
      if (c.n == 0 && c.m == 11 && k == -4) return open("open case (so(11), k = -4)");
      if (c.n == 0 && k == B) return open("so(n) at k = -2h/3 is left open");
      if (c.m == 4 && c.n > 2 && c.n != 8 && k == B) return open("osp(4|n) at k = -2h/3 is left open");
      break;
    case CaseKind::D21A:
      if ((c.a == 1 || c.a == frac(1, 4)) && k == frac(1, 2)) return fusion;
      if (k == frac(1, 2)) return open("D(2,1;a) at k = 1/2 is open for generic a");
      break;
    case CaseKind::G3_G2:
      if (k == frac(5, 4)) return open("open case (G(3), k = 5/4)");
      break;
    default: break;
  }
  return std::nullopt;
}

}  // namespace

std::string data_dir() { return MWA_DATA_DIR; }

std::vector<TableRow> catalog() {
  return {
      {1, "sl(n), n >= 3", "gl(n-2)", "C^{n-2} (+) (C^{n-2})*", "n", "(k+1)(k+n/2)", "sl{n}"},
      {1, "so(n), n >= 7", "sl(2) + so(n-4)", "C^2 (x) C^{n-4}", "n-2", "(k+2)(k+(n-4)/2)", "so{n}"},
      {1, "sp(n), n >= 4", "sp(n-2)", "C^{n-2}", "n/2+1", "(k+1/2)(k+(n+4)/4)", "sp{n}"},
      {1, "G2", "sl(2)", "S^3 C^2", "4", "(k+4/3)(k+5/3)", "G2"},
      {1, "F4", "sp(6)", "wedge^3_0 C^6", "9", "(k+5/2)(k+3)", "F4"},
      {1, "E6", "sl(6)", "wedge^3 C^6", "12", "(k+3)(k+4)", "E6"},
      {1, "E7", "so(12)", "spin_12", "18", "(k+4)(k+6)", "E7"},
      {1, "E8", "E7", "dim = 56", "30", "(k+6)(k+10)", "E8"},
      {2, "sl(2|m), m != 2", "gl(m)", "C^m (+) (C^m)*", "2-m", "(k+1)(k+(2-m)/2)", "sl(2|{m})"},
      {2, "psl(2|2)", "sl(2)", "C^2 (+) C^2", "0", "k(k+1)", "psl(2|2)"},
      {2, "spo(2|m)", "so(m)", "C^m", "2-m/2", "(k+1/2)(k+(6-m)/4)", "spo(2|{m})"},
      {2, "osp(4|m)", "sl(2) + sp(m)", "C^2 (x) C^m", "2-m", "(k+2)(k-m/2)", "osp(4|{m})"},
      {2, "D(2,1;a)", "sl(2) + sl(2)", "C^2 (x) C^2", "0", "(k-a)(k+1+a)", "D(2,1;{a})"},
      {2, "F(4)", "so(7)", "spin_7", "-2", "(k+2/3)(k-2/3)", "F(4)"},
      {2, "G(3)", "G2", "Dim = 0|7", "-3/2", "(k-1/2)(k+3/4)", "G(3)"},
      {3, "sl(m|n), m != n, m > 2", "gl(m-2|n)", "C^{m-2|n} (+) dual", "m-n", "(k+1)(k+(m-n)/2)",
       "sl({m}|{n})"},
      {3, "psl(m|m), m > 2", "sl(m-2|m)", "C^{m-2|m} (+) dual", "0", "k(k+1)", "psl({m}|{m})"},
      {3, "spo(n|m), n >= 4", "spo(n-2|m)", "C^{n-2|m}", "(n-m)/2+1", "(k+1/2)(k+(n-m+4)/4)",
       "spo({n}|{m})"},
      {3, "osp(m|n), m >= 5", "osp(m-4|n) + sl(2)", "C^{m-4|n} (x) C^2", "m-n-2", "(k+2)(k+(m-n-4)/2)",
       "osp({m}|{n})"},
      {3, "F(4)", "D(2,1;2)", "Dim = 6|4", "3", "(k+3/2)(k+1)", "F(4)/D(2,1;2)"},
      {3, "G(3)", "osp(3|2)", "Dim = 4|4", "2", "(k+2/3)(k+4/3)", "G(3)/osp(3|2)"},
  };
}

EmbeddingCase make_case(const std::string& raw) {
  const std::string id = normalize_id(raw);
  EmbeddingCase c;
  std::smatch mt;
  static const std::regex sl_lie(R"(sl\(?([0-9]+)\)?)"), so_lie(R"(so\(?([0-9]+)\)?)"),
      sp_lie(R"(sp\(?([0-9]+)\)?)"), sl_re(R"(sl\(([0-9]+)\|([0-9]+)\))"),
      psl_re(R"(psl\(([0-9]+)\|([0-9]+)\))"), osp_re(R"(osp\(([0-9]+)\|([0-9]+)\))"),
      spo_re(R"(spo\(([0-9]+)\|([0-9]+)\))"), d21_re(R"(D\(2,1;([^)]+)\))");
  if (std::regex_match(id, mt, sl_lie)) {
    c.kind = CaseKind::SL;
    c.m = parse_int(mt[1]);
    build_sl(c);
  } else if (std::regex_match(id, mt, sl_re)) {
    c.kind = CaseKind::SL;
    c.m = parse_int(mt[1]);
    c.n = parse_int(mt[2]);
    build_sl(c);
  } else if (std::regex_match(id, mt, psl_re)) {
    c.kind = CaseKind::PSL;
    c.m = parse_int(mt[1]);
    c.n = parse_int(mt[2]);
    if (c.m != c.n) throw std::invalid_argument("psl(m|n) needs m == n");
    build_psl(c);
  } else if (std::regex_match(id, mt, so_lie)) {
    c.kind = CaseKind::OSP;
    c.m = parse_int(mt[1]);
    build_osp(c);
  } else if (std::regex_match(id, mt, osp_re)) {
    c.kind = CaseKind::OSP;
    c.m = parse_int(mt[1]);
    c.n = parse_int(mt[2]);
    build_osp(c);
  } else if (std::regex_match(id, mt, sp_lie)) {
    c.kind = CaseKind::SPO;
    c.n = parse_int(mt[1]);
    build_spo(c);
  } else if (std::regex_match(id, mt, spo_re)) {
    c.kind = CaseKind::SPO;
    c.n = parse_int(mt[1]);
    c.m = parse_int(mt[2]);
    build_spo(c);
  } else if (std::regex_match(id, mt, d21_re)) {
    c.kind = CaseKind::D21A;
    c.a = parse_rational(mt[1]);
    build_d21a(c);
  } else if (id == "F(4)/D(2,1;2)") {
    c.kind = CaseKind::F4_D21;
    c.table = 3;
    c.g_name = "F(4)";
    c.gnat_name = "D(2,1;2)";
    c.ghalf_name = "Dim = 6|4";
    c.h_dual = 3;
    c.sdim = 8;
    c.p_root1 = frac(-3, 2);
    c.p_root2 = -1;
    AlgebraSpec s;
    s.family = Family::D21A;
    s.a = 2;
    Component comp;
    comp.label = "D(2,1;2)";
    comp.alg = std::make_shared<const AlgebraData>(build_algebra(s));
    comp.scale = 1;
    comp.h0 = 0;
    comp.shift = c.h_dual / 2;
    comp.sdim = comp.alg->sdim();
    c.comps.push_back(std::move(comp));
  } else if (id == "G(3)/osp(3|2)") {
    c.kind = CaseKind::G3_OSP;
    c.table = 3;
    c.g_name = "G(3)";
    c.gnat_name = "osp(3|2)";
    c.ghalf_name = "Dim = 4|4";
    c.h_dual = 2;
    c.sdim = 3;
    c.p_root1 = frac(-2, 3);
    c.p_root2 = frac(-4, 3);
    c.comps.push_back(simple_comp(super(Family::OSP, 3, 2, {"e1", "d1"}), frac(2, 3), c.h_dual));
  } else {
    std::string key = id;
    if (key == "F(4)/so(7)") key = "F(4)";
    if (key == "G(3)/G2") key = "G(3)";
    auto& rows = exceptional_rows();
    auto it = std::find_if(rows.begin(), rows.end(), [&](const ExcRow& r) { return key == r.id; });
    if (it == rows.end()) throw std::invalid_argument("unknown case '" + raw + "'");
    build_exceptional(c, *it);
  }
  // Canonical id.
  switch (c.kind) {
    case CaseKind::SL:
      c.id = c.n == 0 ? "sl" + std::to_string(c.m)
                      : "sl(" + std::to_string(c.m) + "|" + std::to_string(c.n) + ")";
      break;
    case CaseKind::PSL: c.id = "psl(" + std::to_string(c.m) + "|" + std::to_string(c.m) + ")"; break;
    case CaseKind::OSP:
      c.id = c.n == 0 ? "so" + std::to_string(c.m)
                      : "osp(" + std::to_string(c.m) + "|" + std::to_string(c.n) + ")";
      break;
    case CaseKind::SPO:
      c.id = c.m == 0 ? "sp" + std::to_string(c.n)
                      : "spo(" + std::to_string(c.n) + "|" + std::to_string(c.m) + ")";
      break;
    case CaseKind::D21A: c.id = "D(2,1;" + to_string(c.a) + ")"; break;
    case CaseKind::F4_D21: c.id = "F(4)/D(2,1;2)"; break;
    case CaseKind::G3_OSP: c.id = "G(3)/osp(3|2)"; break;
    default: c.id = c.g_name; break;
  }
  return c;
}

std::vector<EmbeddingCase> grid_cases(int pf) {
  std::vector<std::string> ids;
  auto take = [&](std::function<std::string(int)> make, int start, int step,
                  std::function<bool(int)> legal) {
    int count = 0;
    for (int v = start; count < pf; v += step) {
      if (!legal(v)) continue;
      ids.push_back(make(v));
      ++count;
    }
  };
  auto any = [](int) { return true; };
  auto I = [](int v) { return std::to_string(v); };
  take([&](int v) { return "sl" + I(v); }, 3, 1, any);
  take([&](int v) { return "so" + I(v); }, 7, 1, any);
  take([&](int v) { return "sp" + I(v); }, 4, 2, any);
  for (const char* e : {"G2", "F4", "E6", "E7", "E8"}) ids.push_back(e);
  take([&](int v) { return "sl(2|" + I(v) + ")"; }, 1, 1, [](int v) { return v != 2; });
  ids.push_back("psl(2|2)");
  take([&](int v) { return "spo(2|" + I(v) + ")"; }, 1, 1, any);
  take([&](int v) { return "osp(4|" + I(v) + ")"; }, 2, 2, any);
  for (const char* a : {"1", "2", "1/4", "1/2", "-1/2", "-3/2", "3", "1/3"})
    ids.push_back(std::string("D(2,1;") + a + ")");
  for (const char* e : {"F(4)", "G(3)", "F(4)/D(2,1;2)", "G(3)/osp(3|2)"}) ids.push_back(e);
  // Two-parameter families: the first pf legal values of each parameter.
  for (int m = 3, cm = 0; cm < pf; ++m, ++cm)
    for (int n = 1, cn = 0; cn < pf; ++n) {
      if (m == n || m == n + 2) continue;
      ids.push_back("sl(" + I(m) + "|" + I(n) + ")");
      ++cn;
    }
  take([&](int v) { return "psl(" + I(v) + "|" + I(v) + ")"; }, 3, 1, any);
  for (int n = 4, cn = 0; cn < pf; n += 2, ++cn)
    for (int m = 1; m <= pf; ++m) ids.push_back("spo(" + I(n) + "|" + I(m) + ")");
  for (int m = 5, cm = 0; cm < pf; ++m, ++cm)
    for (int n = 2, cn = 0; cn < pf; n += 2, ++cn) ids.push_back("osp(" + I(m) + "|" + I(n) + ")");
  std::vector<EmbeddingCase> out;
  out.reserve(ids.size());
  for (const auto& id : ids) out.push_back(make_case(id));
  return out;
}

Q p_of(const EmbeddingCase& c, const Q& k) { return (k - c.p_root1) * (k - c.p_root2); }

std::vector<Q> collapsing_levels(const EmbeddingCase& c) {
  std::vector<Q> out;
  for (const Q& r : {c.p_root1, c.p_root2})
    if (r != -c.h_dual && std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Q> component_levels(const EmbeddingCase& c, const Q& k) {
  if (k == -c.h_dual) throw std::domain_error("critical level");
  std::vector<Q> out;
  for (const auto& comp : c.comps) out.push_back(k + comp.shift);
  return out;
}

bool in_K(const EmbeddingCase& c, const Q& k) {
  if (k == -c.h_dual) return false;
  for (const auto& comp : c.comps) {
    Q ki = k + comp.shift;
    if (ki != 0 && !comp.center && ki + comp.h0 == 0) return false;
  }
  return true;
}

std::vector<Q> conformal_levels(const EmbeddingCase& c) {
  if (c.excluded) return {};
  const Q A = -(c.h_dual - 1) / 2;
  const Q B = -2 * c.h_dual / 3;
  const int m = c.m, n = c.n;
  std::vector<Q> cand;
  switch (c.kind) {
    case CaseKind::SL:
      if ((m == 2 && n == 1) || (m == n - 1 && m >= 2) || (m == n + 1 && m >= 3))
        cand = {B};
      else if ((m == 3 && n == 0) || (m == n + 3 && m >= 4))
        cand = {};
      else
        cand = {A, B};
      break;
    case CaseKind::PSL: cand = {A}; break;
    case CaseKind::OSP: {
      const int r = m - n;
      if (r == 5 && n >= 2)
        cand = {};
      else if (r == 8 || (r == 2 && n >= 2) || (r == -4 && n >= 8))
        cand = {A};
      else if (r == 7 || (r == 1 && n >= 4))
        cand = {B};
      else
        cand = {A, B};
      break;
    }
    case CaseKind::SPO:
      if ((m == n + 2 && n >= 2) || (m == n - 1 && n >= 2) || (m == n - 4 && n >= 4))
        cand = {};
      else
        cand = {B};
      break;
    case CaseKind::D21A:
      if (c.a == frac(1, 2) || c.a == frac(-1, 2) || c.a == frac(-3, 2))
        cand = {};
      else
        cand = {A};
      break;
    case CaseKind::F4_D21: cand = {}; break;
    default: cand = {A}; break;
  }
  std::vector<Q> out;
  for (const Q& k : cand) {
    if (p_of(c, k) == 0 || !in_K(c, k)) continue;
    if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CentralCharges central_charges(const EmbeddingCase& c, const Q& k) {
  if (!in_K(c, k)) throw std::domain_error("level " + to_string(k) + " is not in K for " + c.id);
  CentralCharges cc;
  cc.c_w = k * c.sdim / (k + c.h_dual) - 6 * k + c.h_dual - 4;
  cc.c_sug = 0;
  for (const auto& comp : c.comps) {
    Q ki = k + comp.shift;
    if (ki == 0) continue;
    cc.c_sug += comp.center ? Q(1) : ki * comp.sdim / (ki + comp.h0);
  }
  return cc;
}

Q h_mu(const EmbeddingCase& c, const Q& k, const std::vector<Weight>& mu) {
  if (mu.size() != c.comps.size()) throw std::invalid_argument("one weight per component expected");
  Q h = 0;
  for (size_t i = 0; i < c.comps.size(); ++i) {
    const Component& comp = c.comps[i];
    Q ki = k + comp.shift;
    if (comp.center) {
      if (!mu[i].c.empty() && !mu[i].is_zero())
        throw std::invalid_argument("centre weights are not supported");
      continue;
    }
    if (ki == 0) continue;
    if (ki + comp.h0 == 0) throw std::domain_error("component " + comp.label + " is at critical level");
    if (mu[i].c.empty()) continue;
    h += comp.scale * casimir_shifted(*comp.alg, mu[i]) / (2 * (ki + comp.h0));
  }
  return h;
}

Weight component_weight(const EmbeddingCase& c, size_t i, const std::string& text) {
  const Component& comp = c.comps.at(i);
  if (comp.center) throw std::invalid_argument("centre component has no weights");
  const AlgebraData& alg = *comp.alg;
  if (text.find('w') != std::string::npos) {
    if (!alg.is_lie()) throw std::invalid_argument("Dynkin labels need a Lie component");
    return dyn(alg, text);
  }
  Weight w(alg.basis.labels.size());
  for (const auto& [coef, sym] : parse_terms(text)) {
    std::string local = sym;
    int sign = 1;
    if (!comp.relabel.empty()) {
      auto it = comp.relabel.find(sym);
      if (it == comp.relabel.end())
        throw std::invalid_argument("label " + sym + " does not belong to " + comp.label);
      local = it->second.first;
      sign = it->second.second;
    }
    w += (coef * sign) * basis_vector(alg, local);
  }
  return w;
}

std::vector<Summand> tensor_square(const EmbeddingCase& c) {
  if (c.excluded || !c.square_known) return {};
  if (c.square_is_fixture) return fixture_square(c);
  return lie_square(c);
}

Verdict criterion_report(const EmbeddingCase& c, const Q& k) {
  Verdict v;
  v.case_id = c.id;
  v.k = k;
  if (c.excluded) {
    v.status = "excluded";
    v.notes.push_back(c.exclusion);
    return v;
  }
  if (k == -c.h_dual) {
    v.status = "excluded";
    v.notes.push_back("critical level");
    return v;
  }
  if (p_of(c, k) == 0) {
    v.status = "collapsing";
    if (in_K(c, k)) v.charges = central_charges(c, k);
    return v;
  }
  if (!in_K(c, k)) {
    v.status = "excluded";
    v.notes.push_back("level outside K: a component is at its critical level");
    return v;
  }
  v.charges = central_charges(c, k);
  auto conf = conformal_levels(c);
  if (std::find(conf.begin(), conf.end(), k) == conf.end()) {
    v.status = "non-conformal";
    return v;
  }
  if (auto sp = special_case(c, k)) {
    v.status = sp->status;
    v.notes.push_back(sp->note);
    return v;
  }
  auto square = tensor_square(c);
  if (square.empty()) {
    v.status = "conformal-undecided";
    v.notes.push_back("no decomposition of the odd part square is available");
    return v;
  }
  bool any_integral = false;
  for (const auto& s : square) {
    if (is_zero_mu(s.mu)) continue;
    Evidence e;
    e.mu = s.label;
    e.h = h_mu(c, k, s.mu);
    e.integral = is_positive_integer(e.h);
    any_integral = any_integral || e.integral;
    v.evidence.push_back(std::move(e));
  }
  if (any_integral) {
    v.status = "conformal-undecided";
    v.notes.push_back("some h_mu is a positive integer");
  } else {
    v.status = "conformal-semisimple-finite";
  }
  return v;
}

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json j;
  j["case"] = v.case_id;
  j["k"] = to_string(v.k);
  j["status"] = v.status;
  if (v.charges) {
    j["c_w"] = to_string(v.charges->c_w);
    j["c_sug"] = to_string(v.charges->c_sug);
  } else {
    j["c_w"] = nullptr;
    j["c_sug"] = nullptr;
  }
  j["evidence"] = nlohmann::json::array();
  for (const auto& e : v.evidence)
    j["evidence"].push_back({{"mu", e.mu}, {"h", to_string(e.h)}, {"integral", e.integral}});
  j["notes"] = v.notes;
  return j;
}

const char* const kReportSchema = R"({
  "type": "object",
  "required": ["case", "k", "status", "c_w", "c_sug", "evidence"],
  "properties": {
    "case": {"type": "string"},
    "k": {"type": "string", "pattern": "^-?[0-9]+(/[0-9]+)?$"},
    "status": {"enum": ["collapsing", "conformal-semisimple-finite", "conformal-infinite", "conformal-undecided", "non-conformal", "excluded"]},
    "c_w": {"type": ["string", "null"], "pattern": "^-?[0-9]+(/[0-9]+)?$"},
    "c_sug": {"type": ["string", "null"], "pattern": "^-?[0-9]+(/[0-9]+)?$"},
    "evidence": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["mu", "h", "integral"],
        "properties": {
          "mu": {"type": "string"},
          "h": {"type": "string", "pattern": "^-?[0-9]+(/[0-9]+)?$"},
          "integral": {"type": "boolean"}
        }
      }
    },
    "notes": {"type": "array", "items": {"type": "string"}}
  }
})";

namespace {

// Reduced p/q with positive denominator, as emitted by to_string.
bool canonical_rational(const nlohmann::json& v) {
  if (!v.is_string()) return false;
  const std::string s = v.get<std::string>();
  try {
    return to_string(parse_rational(s)) == s;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace

std::vector<std::string> report_schema_errors(const nlohmann::json& r) {
  std::vector<std::string> err;
  if (!r.is_object()) return {"report is not an object"};
  for (const char* key : {"case", "k", "status", "c_w", "c_sug", "evidence"})
    if (!r.contains(key)) err.push_back(std::string("missing ") + key);
  if (!err.empty()) return err;
  if (!r["case"].is_string()) err.push_back("case is not a string");
  if (!canonical_rational(r["k"])) err.push_back("k is not a reduced rational");
  static const std::vector<std::string> statuses = {"collapsing", "conformal-semisimple-finite", "conformal-infinite",
                                                    "conformal-undecided", "non-conformal", "excluded"};
  if (!r["status"].is_string() ||
      std::find(statuses.begin(), statuses.end(), r["status"].get<std::string>()) == statuses.end())
    err.push_back("unknown status");
  for (const char* key : {"c_w", "c_sug"})
    if (!r[key].is_null() && !canonical_rational(r[key])) err.push_back(std::string(key) + " is not a reduced rational");
  if (!r["evidence"].is_array()) {
    err.push_back("evidence is not an array");
  } else {
    for (const auto& e : r["evidence"]) {
      if (!e.is_object() || !e.contains("mu") || !e.contains("h") || !e.contains("integral")) {
        err.push_back("evidence entry lacks mu, h or integral");
        continue;
      }
      if (!e["mu"].is_string()) err.push_back("evidence mu is not a string");
      if (!canonical_rational(e["h"])) err.push_back("evidence h is not a reduced rational");
      if (!e["integral"].is_boolean()) err.push_back("evidence integral is not a boolean");
    }
  }
  if (r.contains("notes") && !r["notes"].is_array()) err.push_back("notes is not an array");
  return err;
}

nlohmann::json to_json(const EmbeddingCase& c) {
  nlohmann::json j;
  j["case"] = c.id;
  j["table"] = c.table;
  j["g"] = c.g_name;
  j["g_natural"] = c.gnat_name;
  j["g_half"] = c.ghalf_name;
  j["h_dual"] = to_string(c.h_dual);
  j["sdim"] = to_string(c.sdim);
  j["p_roots"] = {to_string(c.p_root1), to_string(c.p_root2)};
  j["excluded"] = c.excluded;
  if (c.excluded) j["exclusion"] = c.exclusion;
  j["components"] = nlohmann::json::array();
  for (const auto& comp : c.comps)
    j["components"].push_back({{"label", comp.label},
                               {"center", comp.center},
                               {"h0", to_string(comp.h0)},
                               {"shift", to_string(comp.shift)},
                               {"sdim", to_string(comp.sdim)}});
  auto coll = collapsing_levels(c);
  auto conf = conformal_levels(c);
  j["collapsing"] = nlohmann::json::array();
  for (const Q& k : coll) j["collapsing"].push_back(to_string(k));
  j["conformal"] = nlohmann::json::array();
  for (const Q& k : conf) j["conformal"].push_back(to_string(k));
  return j;
}

std::string markdown_catalog() {
  std::ostringstream out;
  int table = 0;
  for (const auto& r : catalog()) {
    if (r.table != table) {
      table = r.table;
      out << (table > 1 ? "\n" : "") << "### Table " << table << "\n\n"
          << "| g | g^natural | g_{1/2} | h^vee | p(k) |\n|---|---|---|---|---|\n";
    }
    out << "| " << r.g << " | " << r.gnat << " | " << r.ghalf << " | " << r.hdual << " | " << r.p
        << " |\n";
  }
  return out.str();
}

std::string markdown_levels(const std::vector<EmbeddingCase>& cases) {
  std::ostringstream out;
  out << "| case | h^vee | collapsing | conformal | verdicts |\n|---|---|---|---|---|\n";
  auto join = [](const std::vector<Q>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
    return s.empty() ? std::string("-") : s;
  };
  for (const auto& c : cases) {
    auto conf = conformal_levels(c);
    std::string verdicts;
    for (const Q& k : conf)
      verdicts += (verdicts.empty() ? "" : "; ") + to_string(k) + ": " + criterion_report(c, k).status;
    out << "| " << c.id << " | " << to_string(c.h_dual) << " | "
        << (c.excluded ? "excluded" : join(collapsing_levels(c))) << " | " << join(conf) << " | "
        << (verdicts.empty() ? "-" : verdicts) << " |\n";
  }
  return out.str();
}

Weight super_square_highest(const AlgebraData& alg, bool symmetric) {
  struct W {
    Weight w;
    bool odd;
  };
  std::vector<W> ws;
  const size_t dim = alg.basis.labels.size();
  bool so_even = alg.spec.family != Family::SPO;  // parity of the orthogonal side
  int so_size = 0;
  for (size_t i = 0; i < dim; ++i) {
    Weight e(dim);
    e.c[i] = 1;
    const bool is_e = alg.basis.labels[i][0] == 'e';
    const bool odd = alg.spec.family == Family::SL ? !is_e : (is_e ? !so_even : so_even);
    ws.push_back({e, odd});
    if (alg.spec.family != Family::SL) ws.push_back({-e, odd});
  }
  if (alg.spec.family == Family::OSP) so_size = alg.spec.m;
  if (alg.spec.family == Family::SPO) so_size = alg.spec.n;
  if (alg.spec.family != Family::SL && so_size % 2 == 1) ws.push_back({Weight(dim), !so_even});
  if (alg.spec.family != Family::SL && alg.spec.family != Family::OSP && alg.spec.family != Family::SPO)
    throw std::invalid_argument("super_square_highest needs sl, osp or spo");
  std::optional<Weight> best;
  Q best_val;
  for (size_t i = 0; i < ws.size(); ++i)
    for (size_t j = i; j < ws.size(); ++j) {
      const bool even_pair = !ws[i].odd && !ws[j].odd, odd_pair = ws[i].odd && ws[j].odd;
      if (i == j) {
        if (even_pair && !symmetric) continue;
        if (odd_pair && symmetric) continue;
      }
      Weight s = ws[i].w + ws[j].w;
      Q val = 0;
      for (size_t t = 0; t < dim; ++t) val += alg.order[t] * s.c[t];
      if (!best || val > best_val) {
        best = s;
        best_val = val;
      }
    }
  return *best;
}

}  // namespace mwa
