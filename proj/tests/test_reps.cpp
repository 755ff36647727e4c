#include "catch_amalgamated.hpp"

#include <numeric>

#include "mwa/reps.hpp"

using namespace mwa;

namespace {

Labels dl(const AlgebraData& a, const std::string& s) { return to_labels(a, from_dynkin(a, parse_dynkin(a, s))); }

mpz_class character_dim(const LieTables& t, const DominantCharacter& ch) {
  mpz_class d = 0;
  for (const auto& [wt, m] : full_character(t, ch)) d += m;
  return d;
}

Decomposition decompose(const std::string& alg, const std::string& l, const std::string& m) {
  auto a = build_algebra(alg);
  return tensor_decompose(a, from_dynkin(a, parse_dynkin(a, l)), from_dynkin(a, parse_dynkin(a, m)));
}

std::vector<std::string> names(const Decomposition& d) {
  std::vector<std::string> out;
  for (const auto& [l, m] : d) out.push_back(format_dynkin(Vec(l.begin(), l.end())) + (m == 1 ? "" : "^" + std::to_string(m)));
  return out;
}

}  // namespace

TEST_CASE("Weyl dimension formula") {
  auto e7 = build_algebra("E7");
  CHECK(weyl_dim(e7, e7.fundamental[6]) == 56);
  CHECK(weyl_dim(e7, Weight(e7.basis.labels.size())) == 1);
  auto a1 = build_algebra("A1");
  CHECK(weyl_dim(a1, 3 * a1.fundamental[0]) == 4);
  CHECK(weyl_dim(build_algebra("E8"), build_algebra("E8").highest_root) == 248);
  CHECK(weyl_dim(build_algebra("G2"), build_algebra("G2").fundamental[0]) == 7);
  CHECK(weyl_dim(build_algebra("F4"), build_algebra("F4").fundamental[3]) == 26);
  CHECK(weyl_dim(build_algebra("E6"), build_algebra("E6").fundamental[0]) == 27);
  CHECK_THROWS(weyl_dim(build_algebra("sl(2|1)"), Weight(3)));
}

TEST_CASE("Freudenthal characters") {
  auto a1 = build_algebra("A1");
  auto ch = dominant_character(a1, 2 * a1.fundamental[0]);
  CHECK(ch.mult == std::map<Labels, long>{{{2}, 1}, {{0}, 1}});

  auto c3 = build_algebra("C3");
  LieTables t3(c3);
  auto ch3 = dominant_character(t3, dl(c3, "w3"));
  CHECK(character_dim(t3, ch3) == 14);
  CHECK(weyl_dim(c3, c3.fundamental[2]) == 14);
  CHECK(ch3.mult.at(dl(c3, "w1")) == 1);

  auto e7 = build_algebra("E7");
  LieTables t7(e7);
  CHECK(character_dim(t7, dominant_character(t7, dl(e7, "w7"))) == 56);
  // Adjoint: the zero weight has multiplicity equal to the rank.
  auto adj = dominant_character(t7, to_labels(e7, e7.highest_root));
  CHECK(adj.mult.at(Labels(7, 0)) == 7);
  CHECK(character_dim(t7, adj) == 133);
}

TEST_CASE("character cap is enforced") {
  auto e8 = build_algebra("E8");
  CHECK_THROWS_AS(dominant_character(e8, 3 * e8.highest_root, 5), CapExceeded);
}

TEST_CASE("tensor products printed in the finite decomposition proofs") {
  CHECK(names(decompose("A1", "3w1", "3w1")) == std::vector<std::string>{"6w1", "4w1", "2w1", "0"});
  CHECK(names(decompose("E7", "w7", "w7")) == std::vector<std::string>{"2w7", "w6", "w1", "0"});
  CHECK(names(decompose("C3", "w2", "0")) == std::vector<std::string>{"w2"});
}

TEST_CASE("E7 square of the 56 conserves dimension") {
  auto e7 = build_algebra("E7");
  mpz_class total = 0;
  for (const auto& [l, m] : decompose("E7", "w7", "w7")) total += m * weyl_dim(e7, from_dynkin(e7, Vec(l.begin(), l.end())));
  CHECK(total == 56 * 56);
}

TEST_CASE("Klimyk agrees with the brute-force product on small cases") {
  for (auto [alg, l, m] : {std::tuple{"A2", "w1+w2", "w1+w2"}, std::tuple{"B2", "w1", "w2"},
                           std::tuple{"G2", "w1", "w1"}, std::tuple{"C2", "2w1", "w2"}}) {
    auto a = build_algebra(alg);
    LieTables t(a);
    INFO(alg);
    CHECK(tensor_decompose(t, dl(a, l), dl(a, m)) == tensor_decompose_brute(t, dl(a, l), dl(a, m)));
  }
}

TEST_CASE("dominance moves and orbits") {
  auto a = build_algebra("A2");
  LieTables t(a);
  Labels x{-1, 2};
  int sign = t.to_dominant(x);
  CHECK(is_dominant(x));
  CHECK(x == Labels{1, 1});
  CHECK(sign == -1);
  CHECK(t.orbit(Labels{1, 1}).size() == 6);
  CHECK(t.orbit(Labels{1, 0}).size() == 3);
}
