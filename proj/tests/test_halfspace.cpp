// Half-space model: density fields, the degenerate Laplacian realization,
// boundary-expansion solvers, GJMS constants, Q-curvature, and the
// interior-scale dictionary.

#include <slcalc/verify.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace slcalc;

namespace {
DensityField monomial(const Rational& w, int n, std::vector<int> mono,
                      const Rational& c = Rational(1)) {
    DensityField f(w, n);
    f.add_term(0, 0, std::move(mono), c);
    return f;
}
} // namespace

TEST_CASE("density field algebra and printing round-trip", "[model]") {
    DensityField f = monomial(Rational(0), 2, {2, 0});
    f.add_term(1, 0, {0, 1}, Rational(-3, 2));
    std::string s = f.str();
    DensityField g = parse_field_expr(s, 2);
    g.set_weight(f.weight());
    CHECK(g == f);
    CHECK(parse_field_expr("0", 2).is_zero());
    std::mt19937_64 rng(12);
    for (int t = 0; t < 30; ++t) {
        DensityField h = random_polynomial_field(rng, 3, Rational(0), 3, 2);
        DensityField back = parse_field_expr(h.str(), 3);
        CHECK(back == h);
    }
}

TEST_CASE("calculus operations on fields", "[model]") {
    DensityField f = monomial(Rational(1), 2, {1, 0}).times_r(); // r x1, weight 2
    CHECK(f.d_r().str() == "x1");
    CHECK(f.d_x(0).restrict_boundary().is_zero()); // d/dx1 (r x1) = r, restricts to 0
    DensityField q = monomial(Rational(0), 2, {2, 0});
    CHECK(q.laplacian().str() == "2");
    DensityField lg = DensityField::constant(Rational(1), Rational(0), 2).times_logr();
    CHECK(lg.has_log_terms());
    CHECK_THROWS_AS(lg.restrict_boundary(), DomainError);
}

TEST_CASE("the degenerate operator and its sl(2) partner", "[model]") {
    // I.D f = -r (Lap f) + (d + 2w - 2) dr f on weight-w fields
    DensityField one = DensityField::constant(Rational(1), Rational(0), 3);
    CHECK(idotd_apply(one, 4).is_zero());
    CHECK(idotd_apply(one.times_r(), 4) ==
          DensityField::constant(Rational(4), Rational(0), 3));
    DensityField x1sq = monomial(Rational(0), 3, {2, 0, 0});
    CHECK(idotd_apply(x1sq, 4) ==
          monomial(Rational(-2), 3, {0, 0, 0}, Rational(-2)).times_r());
    CHECK_THROWS_AS(idotd_apply(one, 5), DomainError); // d must equal n+1
}

TEST_CASE("sl(2) realization in every dimension", "[model]") {
    for (int d : {3, 4, 5, 6}) {
        auto rep = sl2_realization_check(d, 25, 500 + static_cast<uint64_t>(d));
        INFO(rep.witness);
        CHECK(rep.ok);
        CHECK(rep.cases > 0);
    }
}

TEST_CASE("odd powers of y vanish identically on even-dim boundaries", "[model]") {
    // flat-model specialty: the weight ladder crosses the zero coefficient
    std::mt19937_64 rng(8);
    for (int t = 0; t < 10; ++t) {
        int d = 4; // n = 3
        Rational w0((3 - 3), 2);
        DensityField f = random_polynomial_field(rng, 3, Rational(0), 3, 0);
        // y^3 on weight (3-n)/2 = 0 fields: middle step hits d+2w-2 = 0
        CHECK(y_pow_apply(3, f, d).is_zero());
    }
}

TEST_CASE("first-kind solver: exact termination and truncation", "[model]") {
    DensityField f0 = monomial(Rational(-1, 4), 3, {2, 0, 0});
    auto sol = solve_first_kind(f0, 4, 6);
    CHECK(sol.exact);
    CHECK(sol.assembled.str() == "x1^2+2*r^2");
    CHECK(sol.residual.is_zero());
    auto part = solve_first_kind(f0, 4, 1);
    CHECK_FALSE(part.exact);
    REQUIRE(part.residual_order.has_value());
    CHECK(*part.residual_order == Rational(1));
    CHECK(part.residual.str() == "-2/3*r");
}

TEST_CASE("second-kind solver: pure power solution", "[model]") {
    DensityField fb = DensityField::constant(Rational(1), Rational(-11, 4), 3);
    auto sol = solve_second_kind(fb, 4, 4);
    CHECK(sol.exact);
    CHECK(sol.assembled.str() == "r^(5/2)");
    CHECK(sol.w0 == Rational(-1, 4));
    // nonpositive integer h0 is rejected
    DensityField bad = DensityField::constant(Rational(1), Rational(1), 3);
    bad.set_weight(Rational(1 - 4) - Rational(-2)); // w0 = -2 -> h0 = 0
    CHECK_THROWS_AS(solve_second_kind(bad, 4, 3), PoleError);
}

TEST_CASE("first-kind solver reports the exceptional weight", "[model]") {
    DensityField f0 = monomial(Rational(-1, 2), 3, {2, 0, 0}); // h0 = 3
    try {
        solve_first_kind(f0, 4, 5);
        FAIL("expected ExceptionalWeightError");
    } catch (const ExceptionalWeightError& e) {
        CHECK(e.h0 == Rational(3));
        CHECK(e.level == 1); // h0 - 2
    }
}

TEST_CASE("log solver produces the obstruction-led log term", "[model]") {
    DensityField f0 = monomial(Rational(-1, 2), 3, {2, 0, 0}); // h0 = 3
    auto sol = solve_log_kind(f0, 4, 6);
    CHECK(sol.has_log_part());
    CHECK(sol.exact);
    // residual of the assembled solution vanishes identically
    CHECK(idotd_apply(sol.assembled, 4).is_zero());
    // log coefficient at sigma^{h0-1} equals -obstruction / c1
    BoundaryField lead;
    for (const auto& t : sol.terms)
        if (t.log && t.sigma_power == Rational(2))
            lead = t.field.restrict_boundary();
    BoundaryField want = obstruction(f0, 4).scaled(Rational(-1, 2));
    want.set_weight(lead.weight());
    CHECK(lead == want);
}

TEST_CASE("GJMS constants and odd-order vanishing", "[model]") {
    auto g2 = gjms_constant(2, 3);
    CHECK(g2.consistent);
    CHECK(abs(g2.c) == Rational(1));
    auto g4 = gjms_constant(4, 5);
    CHECK(g4.consistent);
    CHECK(abs(g4.c) == Rational(9));
    CHECK(g2.c * g4.c > Rational(0)); // consistent sign convention
    for (long long k : {1LL, 3LL, 5LL}) {
        auto g = gjms_constant(k, static_cast<int>(k) + 1);
        CHECK(g.zero_restriction);
    }
}

TEST_CASE("tangentiality of the boundary operators", "[model]") {
    for (long long k = 1; k <= 6; ++k) {
        auto rep = tangentiality_check(k, 5, 20, 300 + static_cast<uint64_t>(k));
        INFO(rep.witness);
        CHECK(rep.ok);
    }
}

TEST_CASE("Q-curvature: flat scale, Gauss oracle, transformation law", "[model]") {
    CHECK(q_holographic(DensityField(Rational(0), 2), 2).is_zero());
    DensityField om = monomial(Rational(0), 2, {2, 0});
    BoundaryField q = q_holographic(om.scaled(Rational(-1)), 2);
    BoundaryField want = om.restrict_boundary().laplacian({1, 1}).scaled(Rational(-1));
    want.set_weight(q.weight());
    CHECK(q == want); // q(-x1^2) = -2
    // weight guard
    CHECK_THROWS_AS(q_holographic(monomial(Rational(1), 2, {1, 0}), 2), WeightMismatchError);
}

TEST_CASE("log-density expansion reproduces the Q coefficient", "[model]") {
    DensityField om = monomial(Rational(0), 2, {2, 0});
    om.add_term(0, 0, {1, 1}, Rational(3));
    DensityField U0 = om.scaled(Rational(-1));
    auto sol = solve_log_density(U0, 3, 6);
    CHECK(sol.kind == OpKind::LogDensity);
    BoundaryField lead;
    for (const auto& t : sol.terms)
        if (t.log && t.sigma_power == Rational(2))
            lead = t.field.restrict_boundary();
    BoundaryField want = q_holographic(U0, 2).scaled(Rational(-1, 2));
    want.set_weight(lead.weight());
    CHECK(lead == want);
    // odd boundary dimension: no log terms
    DensityField om3 = monomial(Rational(0), 3, {2, 0, 0});
    CHECK_FALSE(solve_log_density(om3.scaled(Rational(-1)), 4, 6).has_log_part());
}

TEST_CASE("interior-scale dictionary round-trips", "[model]") {
    DensityField f0 = monomial(Rational(-1, 4), 3, {2, 0, 0});
    auto sol = solve_first_kind(f0, 4, 6);
    auto isf = interior_scale_form(sol, sol.w0 + Rational(3));
    CHECK(isf.certificate);
    CHECK(isf.F.str() == sol.assembled.str());
    CHECK(isf.G.is_zero());
    DensityField fb = DensityField::constant(Rational(1), Rational(-11, 4), 3);
    auto sol2 = solve_second_kind(fb, 4, 4);
    auto isf2 = interior_scale_form(sol2, sol2.w0 + Rational(3));
    CHECK(isf2.F.is_zero());
    CHECK_FALSE(isf2.G.is_zero());
    // wrong scale parameter is rejected
    CHECK_THROWS_AS(interior_scale_form(sol, sol.w0 + Rational(2)), DomainError);
}

TEST_CASE("built-in model verification suite passes", "[model][suite]") {
    Report rep = verify_model();
    INFO(emit_report(rep, ReportFormat::Text, true));
    CHECK(rep.passed());
}
