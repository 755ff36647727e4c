#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mwa/algebra.hpp"

namespace mwa {

enum class CaseKind { SL, PSL, OSP, SPO, D21A, G2, F4, E6, E7, E8, F4_SO7, F4_D21, G3_G2, G3_OSP };

// One ideal of the centralizer. Levels are k_i = k + shift.
struct Component {
  std::string label;
  bool center = false;
  std::shared_ptr<const AlgebraData> alg;  // null for the center
  // Restricted form divided by the form of `alg`; h0 = scale * alg->dual_coxeter.
  Q scale = 1;
  Q h0 = 0;
  Q shift = 0;
  Q sdim = 1;
  // Ambient label -> (local label, sign), used to read fixture weights.
  std::map<std::string, std::pair<std::string, int>> relabel;
};

struct Summand {
  std::vector<Weight> mu;  // one entry per component (the center entry is empty)
  std::string label;
  Q sdim = 0;
  std::string source;
};

struct EmbeddingCase {
  std::string id;
  CaseKind kind = CaseKind::SL;
  int table = 0;
  int m = 0, n = 0;  // family parameters
  Q a = 0;           // D(2,1;a)
  std::string g_name, gnat_name, ghalf_name;
  Q h_dual;
  Q sdim;
  std::vector<Component> comps;
  Q p_root1, p_root2;  // p(k) = (k - p_root1)(k - p_root2)
  bool has_center = false;
  bool excluded = false;
  std::string exclusion;
  // Weights of g_{1/2} per component (and of its dual for the centre pathway).
  std::vector<Weight> half_plus, half_minus;
  bool square_is_fixture = false;
  bool square_known = false;
};

// Table rows with symbolic parameters.
struct TableRow {
  int table;
  std::string g, gnat, ghalf, hdual, p;
  std::string family;  // id template
};

std::vector<TableRow> catalog();

// Builds a case from an id such as "sl4", "so(8)", "sp(6)", "sl(2|3)", "psl(2|2)",
// "spo(4|1)", "osp(9|2)", "D(2,1;1/4)", "G2", "F(4)", "F(4)/D(2,1;2)", "G(3)",
// "G(3)/osp(3|2)". Throws std::invalid_argument for unknown ids.
EmbeddingCase make_case(const std::string& id);

// The instantiation grid: the `per_family` smallest legal members of each family.
std::vector<EmbeddingCase> grid_cases(int per_family = 6);

Q p_of(const EmbeddingCase& c, const Q& k);
std::vector<Q> collapsing_levels(const EmbeddingCase& c);
bool in_K(const EmbeddingCase& c, const Q& k);
std::vector<Q> conformal_levels(const EmbeddingCase& c);
std::vector<Q> component_levels(const EmbeddingCase& c, const Q& k);

struct CentralCharges {
  Q c_w;
  Q c_sug;
};
CentralCharges central_charges(const EmbeddingCase& c, const Q& k);

// Sum over components with k_i != 0 of scale_i (mu, mu + 2 rho)/(2 (k_i + h0_i)).
Q h_mu(const EmbeddingCase& c, const Q& k, const std::vector<Weight>& mu);

// Reads a component weight written in the ambient basis of g (fixture notation)
// or as Dynkin labels ("2w1") for Lie components.
Weight component_weight(const EmbeddingCase& c, size_t comp, const std::string& text);

// Decomposition of g_{-1/2} (x) g_{-1/2} (or U+ (x) U-). Empty if unknown.
std::vector<Summand> tensor_square(const EmbeddingCase& c);

struct Evidence {
  std::string mu;
  Q h;
  bool integral = false;  // h is a positive integer
};

struct Verdict {
  std::string case_id;
  Q k;
  std::string status;
  std::optional<CentralCharges> charges;
  std::vector<Evidence> evidence;
  std::vector<std::string> notes;
};

Verdict criterion_report(const EmbeddingCase& c, const Q& k);

nlohmann::json to_json(const Verdict& v);

// JSON Schema of a criterion report, and a checker for the subset it uses.
extern const char* const kReportSchema;
std::vector<std::string> report_schema_errors(const nlohmann::json& report);
nlohmann::json to_json(const EmbeddingCase& c);
std::string markdown_catalog();
std::string markdown_levels(const std::vector<EmbeddingCase>& cases);

// Highest weight of the super-symmetric (or super-antisymmetric) square of the
// defining module of an sl/osp/spo algebra, under its positive system.
Weight super_square_highest(const AlgebraData& alg, bool symmetric);

std::string data_dir();

}  // namespace mwa
