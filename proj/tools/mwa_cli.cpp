// Batch front end: level tables, criterion reports, tensor products and the
// symbolic checks of the sl(4) realization.

#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mwa/algebra.hpp"
#include "mwa/embed.hpp"
#include "mwa/lattice.hpp"
#include "mwa/reps.hpp"
#include "mwa/wmin.hpp"

namespace {

using nlohmann::json;

enum Exit { kPass = 0, kFail = 1, kUsage = 2 };

struct Config {
  std::string format = "markdown";
  int grid = 6;
  bool quiet = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

mwa::Q rational_arg(const std::string& s) {
  try {
    return mwa::parse_rational(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

mwa::EmbeddingCase case_arg(const std::string& id) {
  try {
    return mwa::make_case(id);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void emit(const Config& cfg, const json& j, const std::string& md) {
  if (cfg.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << md;
}

int cmd_catalog(const Config& cfg) {
  json rows = json::array();
  for (const auto& r : mwa::catalog())
    rows.push_back({{"table", r.table}, {"g", r.g}, {"g_natural", r.gnat}, {"g_half", r.ghalf},
                    {"h_dual", r.hdual}, {"p", r.p}, {"family", r.family}});
  emit(cfg, rows, mwa::markdown_catalog());
  return kPass;
}

int cmd_levels(const Config& cfg) {
  if (cfg.grid < 1) throw UsageError("--grid must be at least 1");
  const auto cases = mwa::grid_cases(cfg.grid);
  if (cfg.format != "json") {
    std::cout << mwa::markdown_levels(cases);
    return kPass;
  }
  json out = json::array();
  for (const auto& c : cases) {
    json j = mwa::to_json(c);
    j["verdicts"] = json::array();
    for (const auto& k : mwa::conformal_levels(c)) j["verdicts"].push_back(mwa::to_json(mwa::criterion_report(c, k)));
    out.push_back(std::move(j));
  }
  std::cout << out.dump(2) << "\n";
  return kPass;
}

int cmd_criterion(const Config& cfg, const std::string& id, const std::string& k_text) {
  const auto c = case_arg(id);
  const mwa::Q k = rational_arg(k_text);
  const mwa::Verdict v = mwa::criterion_report(c, k);
  const json j = mwa::to_json(v);
  if (auto errs = mwa::report_schema_errors(j); !errs.empty()) {
    for (const auto& e : errs) std::cerr << "schema: " << e << "\n";
    return kFail;
  }
  std::ostringstream md;
  md << "## " << v.case_id << " at k = " << mwa::to_string(v.k) << "\n\n";
  md << "status: " << v.status << "\n";
  if (v.charges)
    md << "c_w = " << mwa::to_string(v.charges->c_w) << ", c_sug = " << mwa::to_string(v.charges->c_sug) << "\n";
  if (!cfg.quiet && !v.evidence.empty()) {
    md << "\n| mu | h_mu | positive integer |\n|---|---|---|\n";
    for (const auto& e : v.evidence) md << "| " << e.mu << " | " << mwa::to_string(e.h) << " | " << (e.integral ? "yes" : "no") << " |\n";
  }
  for (const auto& n : v.notes) md << "note: " << n << "\n";
  emit(cfg, j, md.str());
  return kPass;
}

int cmd_tensor(const Config& cfg, const std::string& alg_text, const std::string& l_text, const std::string& m_text) {
  mwa::AlgebraData alg;
  mwa::Weight lambda, mu;
  try {
    alg = mwa::build_algebra(alg_text);
    lambda = mwa::from_dynkin(alg, mwa::parse_dynkin(alg, l_text));
    mu = mwa::from_dynkin(alg, mwa::parse_dynkin(alg, m_text));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  mwa::Decomposition d;
  try {
    d = mwa::tensor_decompose(alg, lambda, mu);
  } catch (const mwa::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kFail;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  json j = json::array();
  std::string md = "{";
  bool first = true;
  for (const auto& [labels, mult] : d) {
    mwa::Vec v(labels.begin(), labels.end());
    const std::string name = mwa::format_dynkin(v);
    const std::string dim = mwa::weyl_dim(alg, mwa::from_dynkin(alg, v)).get_str();
    j.push_back({{"highest", name}, {"multiplicity", mult}, {"dim", dim}});
    md += (first ? "" : ", ") + (mult == 1 ? "" : std::to_string(mult) + "*") + name;
    first = false;
  }
  md += "}\n";
  emit(cfg, j, md);
  return kPass;
}

template <class Check>
int report_checks(const Config& cfg, const std::string& title, const std::vector<Check>& checks,
                  const std::function<std::string(const Check&)>& name) {
  json j = json::array();
  std::ostringstream md;
  md << "## " << title << "\n\n";
  int failed = 0;
  for (const auto& c : checks) {
    failed += c.pass ? 0 : 1;
    j.push_back({{"check", name(c)}, {"pass", c.pass}, {"expected", c.expected}, {"actual", c.actual}});
    if (cfg.quiet && c.pass) continue;
    md << (c.pass ? "PASS " : "FAIL ") << name(c) << "\n";
    if (!c.pass) md << "  expected: " << c.expected << "\n  actual:   " << c.actual << "\n";
  }
  md << checks.size() - failed << "/" << checks.size() << " passed\n";
  emit(cfg, j, md.str());
  return failed ? kFail : kPass;
}

int cmd_verify_r3(const Config& cfg) {
  const auto checks = mwa::lattice::verify_r3();
  return report_checks<mwa::lattice::BracketCheck>(cfg, "lambda-brackets of R3", checks,
                                                   [](const auto& c) { return "[" + c.name + "]"; });
}

struct OpeCheck {
  std::string label;
  bool pass = false;
  std::string expected, actual;
};

int cmd_verify_sl4_ope(const Config& cfg) {
  using namespace mwa::wmin;
  std::vector<OpeCheck> checks;
  const OpeTable formal(make_sl(4), std::nullopt);
  const auto& ctx = formal.context();
  for (const auto& e : printed_sl4_table(formal)) {
    const auto& got = formal.entry(ctx.find("G[" + e.u + "]"), ctx.find("G[" + e.v + "]"));
    checks.push_back({"table [G[" + e.u + "] G[" + e.v + "]]", lambda_equal(got, e.value),
                      format_lambda(ctx, e.value), format_lambda(ctx, got)});
  }
  for (const auto& p : verify_phi())
    checks.push_back({"phi [" + p.left + " " + p.right + "]", p.pass, p.expected, p.actual});
  return report_checks<OpeCheck>(cfg, "W^k(sl(4), theta) table and phi at k = -8/3", checks,
                                 [](const OpeCheck& c) { return c.label; });
}

int cmd_singular(const Config& cfg, int l, int j) {
  using namespace mwa::lattice;
  if (j < 0) throw UsageError("j must be non-negative");
  const State v = singular_vector(l, j);
  const R3& r = r3_generators();
  const bool singular = is_singular(v);
  const auto n = zero_mode_eigenvalue(r.h, v), m = zero_mode_eigenvalue(r.j, v);
  const auto w = conformal_weight(v);
  std::optional<mwa::Q> predicted;
  if (n && m) predicted = mwa::Q(3) * *n * (*n + 2) / 4 - mwa::Q(3) * *m * *m / 4;
  const bool pass = singular && w && predicted && *w == *predicted;
  auto str = [](const std::optional<mwa::Q>& q) { return q ? mwa::to_string(*q) : std::string("none"); };
  json out = {{"l", l},           {"j", j},          {"terms", v.size()},   {"singular", singular},
              {"h0", str(n)},     {"j0", str(m)},    {"L0", str(w)},        {"L0_predicted", str(predicted)},
              {"pass", pass}};
  if (!cfg.quiet) out["state"] = format_state(v);
  std::ostringstream md;
  md << "v(" << l << "," << j << "): " << v.size() << " terms, singular " << (singular ? "yes" : "no")
     << ", h_(0) = " << str(n) << ", j_(0) = " << str(m) << ", L_0 = " << str(w) << " (predicted "
     << str(predicted) << ")\n";
  if (!cfg.quiet) md << format_state(v) << "\n";
  emit(cfg, out, md.str());
  return pass ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conformal embeddings in minimal W-algebras and the R3 realization"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "markdown"}));
  app.add_option("--grid", cfg.grid, "Members per parametric family");
  app.add_flag("--quiet", cfg.quiet, "Print failures and summaries only");

  std::string id, k, alg, lam, mu;
  int l = 0, j = 0;
  auto* catalog = app.add_subcommand("catalog", "Tables of minimal gradations");
  auto* levels = app.add_subcommand("levels", "Collapsing and conformal levels over the grid");
  auto* criterion = app.add_subcommand("criterion", "Verdict for one case and level");
  criterion->add_option("case", id)->required();
  criterion->add_option("k", k)->required();
  auto* tensor = app.add_subcommand("tensor", "Tensor product decomposition");
  tensor->add_option("algebra", alg)->required();
  tensor->add_option("lambda", lam)->required();
  tensor->add_option("mu", mu)->required();
  auto* r3 = app.add_subcommand("verify-r3", "Check the R3 lambda-brackets");
  auto* ope = app.add_subcommand("verify-sl4-ope", "Check the sl(4) OPE table and phi");
  auto* sing = app.add_subcommand("singular", "Build and check v(l, j)");
  sing->add_option("l", l)->required();
  sing->add_option("j", j)->required();
  for (auto* sub : {catalog, levels, criterion, tensor, r3, ope, sing}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*catalog) return cmd_catalog(cfg);
    if (*levels) return cmd_levels(cfg);
    if (*criterion) return cmd_criterion(cfg, id, k);
    if (*tensor) return cmd_tensor(cfg, alg, lam, mu);
    if (*r3) return cmd_verify_r3(cfg);
    if (*ope) return cmd_verify_sl4_ope(cfg);
    if (*sing) return cmd_singular(cfg, l, j);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
