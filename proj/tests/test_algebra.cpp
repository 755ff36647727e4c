#include "catch_amalgamated.hpp"

#include "mwa/algebra.hpp"

using namespace mwa;

namespace {

Weight w(const AlgebraData& a, const std::string& s) { return parse_weight(a, s); }

}  // namespace

TEST_CASE("rationals serialize reduced with the sign on the numerator") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(parse_rational("8/4")) == "2");
  CHECK(to_string(frac(3, -6)) == "-1/2");
  CHECK(frac(4, 2) == Q(2));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
}

TEST_CASE("algebra names parse and print") {
  CHECK(algebra_name(parse_algebra("sl4")) == "A3");
  CHECK(algebra_name(parse_algebra("so(8)")) == "D4");
  CHECK(algebra_name(parse_algebra("sl(3|2)")) == "sl(3|2)");
  CHECK(algebra_name(parse_algebra("D(2,1;1/2)")) == "D(2,1;1/2)");
  CHECK_THROWS_AS(parse_algebra("Z9"), std::invalid_argument);
}

TEST_CASE("rank-one data") {
  auto a = build_algebra("A1");
  CHECK(a.pos_even.size() == 1);
  CHECK(a.dual_coxeter == 2);
  CHECK(a.rho == Q(1, 2) * a.simple[0]);
}

TEST_CASE("dual Coxeter numbers") {
  CHECK(build_algebra("sl(4)").dual_coxeter == 4);
  CHECK(build_algebra("so(8)").dual_coxeter == 6);
  CHECK(build_algebra("C3").dual_coxeter == 4);
  CHECK(build_algebra("G2").dual_coxeter == 4);
  CHECK(build_algebra("F4").dual_coxeter == 9);
  CHECK(build_algebra("E6").dual_coxeter == 12);
  CHECK(build_algebra("E7").dual_coxeter == 18);
  CHECK(build_algebra("E8").dual_coxeter == 30);
  // osp(m|n): m - n - 2; spo(n|m) as (n - m)/2 + 1 on the symplectic form.
  CHECK(build_algebra("osp(3|2)").dual_coxeter == -1);
  CHECK(build_algebra("osp(9|2)").dual_coxeter == 5);
  CHECK(build_algebra("sl(3|2)").dual_coxeter == 1);
  CHECK(build_algebra("spo(2|3)").dual_coxeter == frac(1, 2));
}

TEST_CASE("dimension counts for simple Lie algebras") {
  for (const char* s : {"A1", "A4", "B3", "C3", "D4", "G2", "F4", "E6", "E7", "E8"}) {
    auto a = build_algebra(s);
    INFO(s);
    CHECK(a.dim() == 2 * a.pos_even.size() + static_cast<size_t>(a.rank()));
    CHECK(a.sdim() == Q(static_cast<long>(a.dim())));
  }
  CHECK(build_algebra("E7").dim() == 133);
  CHECK(build_algebra("E8").dim() == 248);
}

TEST_CASE("superdimensions") {
  CHECK(build_algebra("sl(2|1)").sdim() == 0);
  CHECK(build_algebra("sl(3|2)").sdim() == 0);
  CHECK(build_algebra("osp(3|2)").sdim() == 0);
  CHECK(build_algebra("D(2,1;1/2)").sdim() == 1);
}

TEST_CASE("normalized form has (theta|theta) = 2") {
  for (const char* s : {"A1", "sl(4)", "B2", "C3", "G2", "F4", "E6", "E7", "E8", "so(8)"}) {
    auto a = build_algebra(s);
    INFO(s);
    CHECK(inner(a, a.highest_root, a.highest_root) == 2);
    // (theta, theta + 2 rho) = 2 h^vee
    CHECK(casimir_shifted(a, a.highest_root) == 2 * a.dual_coxeter);
  }
}

TEST_CASE("inner product basics") {
  auto a = build_algebra("sl(4)");
  CHECK(inner(a, Weight(4), a.highest_root) == 0);
  auto s = build_algebra("sl(2|1)");
  CHECK(inner(s, w(s, "e1"), w(s, "d1")) == 0);
  CHECK(inner(s, w(s, "e1"), w(s, "e1")) == -inner(s, w(s, "d1"), w(s, "d1")));
}

TEST_CASE("Casimir of the adjoint of sl(2) is 4") {
  auto a = build_algebra("A1");
  CHECK(casimir_shifted(a, Weight(2)) == 0);
  CHECK(casimir_shifted(a, a.highest_root) == 4);
}

TEST_CASE("Weyl vector pairs to one with every simple coroot") {
  for (const char* s : {"A1", "B2", "C3", "G2", "F4", "E6", "E7", "E8", "so(8)"}) {
    auto a = build_algebra(s);
    INFO(s);
    for (const auto& al : a.simple) CHECK(2 * inner(a, a.rho, al) / inner(a, al, al) == 1);
  }
  auto b2 = build_algebra("B2");
  CHECK(b2.rho == w(b2, "3/2e1+1/2e2"));
}

TEST_CASE("Weyl vector of sl(m-2|n) with the odd-first positive system") {
  // (d1 - e_{m-2}, 2 rho) = 2(m - n - 2) when every d_k lies above every e_i.
  for (auto [m, n] : {std::pair{5, 2}, std::pair{6, 1}, std::pair{7, 3}, std::pair{6, 2}, std::pair{9, 2}}) {
    std::vector<std::string> ord;
    for (int k = 1; k <= n; ++k) ord.push_back("d" + std::to_string(k));
    for (int i = 1; i <= m - 2; ++i) ord.push_back("e" + std::to_string(i));
    auto a = build_algebra(AlgebraSpec{Family::SL, m - 2, n, 0}, ord);
    INFO(m << " " << n);
    CHECK(inner(a, w(a, "d1-e" + std::to_string(m - 2)), 2 * a.rho) == 2 * (m - n - 2));
  }
}

TEST_CASE("weight text round trip") {
  auto a = build_algebra("sl(3|2)");
  for (const char* s : {"e1-d2", "2e1+e2", "-1/2d1+3e3", "0"}) {
    Weight x = w(a, s);
    CHECK(parse_weight(a, format_weight(a, x)) == x);
  }
  auto e7 = build_algebra("E7");
  Vec l = parse_dynkin(e7, "2w7+w1");
  CHECK(format_dynkin(l) == "w1+2w7");
  CHECK(dynkin_labels(e7, from_dynkin(e7, l)) == l);
  CHECK_THROWS_AS(parse_dynkin(e7, "w8"), std::invalid_argument);
}

TEST_CASE("simple reflections are involutions fixing the form") {
  auto a = build_algebra("F4");
  Weight x = from_dynkin(a, parse_dynkin(a, "w1+2w3"));
  for (int i = 0; i < a.rank(); ++i) {
    Weight y = reflect(a, x, i);
    CHECK(reflect(a, y, i) == x);
    CHECK(inner(a, y, y) == inner(a, x, x));
  }
}
