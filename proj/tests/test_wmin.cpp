#include "catch_amalgamated.hpp"

#include "mwa/wmin.hpp"

using namespace mwa;
using namespace mwa::wmin;

namespace {

const Poly K = Poly::k();

Expr J(const OpeContext& ctx, const std::string& name) { return Expr::gen(ctx.find("J[" + name + "]")); }

}  // namespace

TEST_CASE("polynomials in k") {
  const Poly p = (K + Q(1)) * (K + Q(2));
  CHECK(p.str() == "k^2+3k+2");
  CHECK(p.eval(Q(-1)) == 0);
  auto [q, r] = divmod(p, K + Q(1));
  CHECK(q == K + Q(2));
  CHECK(r.is_zero());
  auto [q2, r2] = divmod(p, K);
  CHECK(r2 == Poly(Q(2)));
  CHECK(Poly().degree() == -1);
  CHECK(p.degree() == 2);
}

TEST_CASE("rational functions reduce to a monic denominator") {
  const Coef a(K * K - Poly(Q(1)), Poly(Q(2)) * (K - Poly(Q(1))));
  CHECK(a == Coef(frac(1, 2) * (K + Q(1))));
  const Coef b(Poly(Q(3)), K + Q(4));
  CHECK(b.eval(Q(-1)) == 1);
  CHECK_THROWS_AS(b.eval(Q(-4)), std::domain_error);
  CHECK((b - b).is_zero());
  CHECK(b * (Coef(Poly(Q(1))) / b) == Coef(Q(1)));
  CHECK(b.den().lead() == 1);
}

TEST_CASE("sl(4) minimal gradation data") {
  const auto ctx = make_sl(4);
  CHECK(ctx.num_j() == 4);
  CHECK(ctx.num_g() == 4);
  CHECK(ctx.hvee == 4);
  CHECK(ctx.p == (K + Q(1)) * (K + Q(2)));
  CHECK(ctx.component_shift == std::vector<Q>{Q(2), Q(1)});
  // [e_theta, e_-theta] = x with (e_theta|e_-theta) = 1/2 and (x|x) = 1/2.
  CHECK(trace_form(ctx.e_theta, ctx.e_mtheta) == frac(1, 2));
  CHECK(commutator(ctx.e_theta, ctx.e_mtheta) == ctx.x);
  CHECK(trace_form(ctx.x, ctx.x) == frac(1, 2));
  // Dual bases pair to the identity under the neutral form.
  for (int a = 0; a < ctx.num_g(); ++a)
    for (int b = 0; b < ctx.num_g(); ++b)
      CHECK(trace_form(ctx.e_mtheta, commutator(ctx.half[a], ctx.half_dual[b])) == (a == b ? 1 : 0));
}

TEST_CASE("central charge of W^k(sl(n), theta)") {
  for (int n = 3; n <= 6; ++n) {
    const OpeTable t(make_sl(n), std::nullopt);
    const Q h(n), sdim(n * n - 1);
    for (const Q& k : {Q(1), frac(-1, 2), Q(7), frac(-8, 3)}) {
      if (k + h == 0) continue;
      INFO(n << " " << to_string(k));
      CHECK(t.central_charge().eval(k) == k * sdim / (k + h) - 6 * k + h - 4);
    }
  }
  const OpeTable t4(make_sl(4), std::nullopt);
  CHECK(t4.central_charge() == Coef(Poly(Q(-6)) * K * K - Poly(Q(9)) * K, K + Q(4)));
  CHECK(t4.central_charge().eval(frac(-8, 3)) == -14);
}

TEST_CASE("current brackets carry the component levels") {
  const auto ctx = make_sl(4);
  const OpeTable t(ctx, std::nullopt);
  const auto& ee = t.entry(ctx.find("J[e23]"), ctx.find("J[e32]"));
  CHECK(ee.at(0) == J(ctx, "h23"));
  CHECK(ee.at(1) == Coef(K + Q(1)) * Expr::vacuum());
  const auto& cc = t.entry(ctx.find("J[c]"), ctx.find("J[c]"));
  CHECK(cc.count(0) == 0);
  CHECK_FALSE(cc.at(1).is_zero());
}

TEST_CASE("Virasoro bracket in the table") {
  const auto ctx = make_sl(4);
  const OpeTable t(ctx, std::nullopt);
  const auto& ll = t.entry(ctx.omega(), ctx.omega());
  const Expr L = Expr::gen(ctx.omega());
  CHECK(ll.at(0) == t.derivative(L));
  CHECK(ll.at(1) == Coef(Q(2)) * L);
  CHECK(ll.at(3) == (Coef(Q(1, 12)) * t.central_charge()) * Expr::vacuum());
}

TEST_CASE("sl(4) G-G table matches the printed entries") {
  const OpeTable formal(make_sl(4), std::nullopt);
  const auto& ctx = formal.context();
  const auto printed = printed_sl4_table(formal);
  CHECK(printed.size() == 10);
  for (const auto& e : printed) {
    INFO(e.u << " " << e.v);
    CHECK(lambda_equal(formal.entry(ctx.find("G[" + e.u + "]"), ctx.find("G[" + e.v + "]")), e.value));
  }
}

TEST_CASE("Sugawara vector at k = -8/3") {
  const auto ctx = make_sl(4);
  const OpeTable t(ctx, frac(-8, 3));
  const auto& c = J(ctx, "c");
  const auto& h = J(ctx, "h23");
  const Expr want = Coef(frac(-3, 4)) * t.normal_order(c, c) +
                    Coef(Q(3)) * t.normal_order(J(ctx, "e23"), J(ctx, "e32")) +
                    Coef(frac(3, 4)) * t.normal_order(h, h) + Coef(frac(-3, 2)) * t.derivative(h);
  const Expr sug = t.sugawara();
  CHECK(sug == want);
  // Currents are primary of weight one for the Sugawara vector.
  const auto jl = t.bracket(J(ctx, "e23"), sug);
  CHECK(jl.size() == 1);
  CHECK(jl.at(1) == J(ctx, "e23"));
  // [L_lambda L_sug] has lambda^3 coefficient c/12 with c = -14.
  const auto ls = t.bracket(Expr::gen(ctx.omega()), sug);
  CHECK(ls.at(3) == Coef(frac(-7, 6)) * Expr::vacuum());
}

TEST_CASE("phi is a homomorphism on every generator pair") {
  const auto checks = verify_phi();
  CHECK(checks.size() == 81);
  for (const auto& c : checks) {
    INFO(c.left << " " << c.right << "\nexpected " << c.expected << "\nactual   " << c.actual);
    CHECK(c.pass);
  }
}

TEST_CASE("phi images are homogeneous of the right weight") {
  const auto ctx = make_sl(4);
  for (int g = 0; g <= ctx.omega(); ++g) {
    const R2State v = phi(ctx, g);
    INFO(ctx.name(g));
    CHECK_FALSE(v.is_zero());
    const Q want = g < ctx.num_j() ? Q(1) : (g < ctx.omega() ? frac(3, 2) : Q(2));
    if (!v.r.is_zero()) CHECK(*lattice::conformal_weight(v.r) == want);
    if (!v.s.is_zero()) CHECK(*lattice::conformal_weight(v.s) == want);
  }
  CHECK(phi(ctx, ctx.omega()).r == lattice::r3_generators().omega);
}
