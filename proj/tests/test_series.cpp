// Formal-series layer: the K, G, F and H coefficient tables, their defining
// recursions, and the ODE residual checkers.

#include <slcalc/series_ops.hpp>
#include <slcalc/verify.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace slcalc;

namespace {
RatFunc H0() { return RatFunc::h0(); }
} // namespace

TEST_CASE("K series leading coefficients at generic weight", "[series]") {
    auto K = k_series(WeightParam::generic(), 4);
    CHECK(K.coeff(0) == RatFunc(1));
    CHECK(K.coeff(1) == RatFunc(1) / (H0() - RatFunc(2)));
    CHECK(K.coeff(2) == RatFunc(1) / (RatFunc(2) * (H0() - RatFunc(2)) * (H0() - RatFunc(3))));
}

TEST_CASE("K recursion: k(k-h0+1) a_k + a_{k-1} = 0", "[series]") {
    auto K = k_series(WeightParam::generic(), 12);
    for (int k = 1; k <= 12; ++k) {
        RatFunc lhs = RatFunc(k) * (RatFunc(k) - H0() + RatFunc(1)) * K.coeff(k) + K.coeff(k - 1);
        CHECK(lhs.is_zero());
    }
    CHECK(ode_residual(K, OdeKind::First, WeightParam::generic()).is_zero());
}

TEST_CASE("K at specialized h0 = 5 and pole at small integers", "[series]") {
    auto K = k_series(WeightParam::at(Rational(5)), 2);
    CHECK(K.coeff(0).constant_value() == Rational(1));
    CHECK(K.coeff(1).constant_value() == Rational(1, 3));
    CHECK(K.coeff(2).constant_value() == Rational(1, 12));
    // h0 = 2 degenerates the first step
    CHECK_THROWS_AS(k_series(WeightParam::at(Rational(2)), 2), PoleError);
}

TEST_CASE("G series is K at the dual weight 2 - h0", "[series]") {
    auto G = g_series(WeightParam::at(Rational(1)), 2);
    CHECK(G.coeff(0).constant_value() == Rational(1));
    CHECK(G.coeff(1).constant_value() == Rational(-1));
    CHECK(G.coeff(2).constant_value() == Rational(1, 4));
    // pointwise: G(h0) == K(2-h0) at sampled non-exceptional weights
    auto Gg = g_series(WeightParam::generic(), 8);
    auto Kg = k_series(WeightParam::generic(), 8);
    for (const Rational& w : {Rational(1, 3), Rational(-5, 2), Rational(9, 4)})
        for (int k = 0; k <= 8; ++k)
            CHECK(Gg.coeff(k).eval(w) == Kg.coeff(k).eval(Rational(2) - w));
    CHECK(ode_residual(Gg, OdeKind::Second, WeightParam::generic()).is_zero());
}

TEST_CASE("F is the polynomial truncation with factorial-square top", "[series]") {
    auto F = f_polynomial(4);
    REQUIRE(F.order() == 2);
    CHECK(F.coeff(0).constant_value() == Rational(1));
    CHECK(F.coeff(1).constant_value() == Rational(1, 2));
    CHECK(F.coeff(2).constant_value() == Rational(1, 4));
    // top coefficient = 1/((h0-2)!)^2
    for (long long h0 = 2; h0 <= 9; ++h0) {
        auto Fk = f_polynomial(h0);
        Rational top = Rational(1) / (factorial(h0 - 2) * factorial(h0 - 2));
        CHECK(Fk.coeff(static_cast<int>(h0) - 2).constant_value() == top);
    }
    CHECK_THROWS_AS(f_polynomial(1), DomainError);
}

TEST_CASE("H series generic leading coefficients", "[series]") {
    auto H = h_series(WeightParam::generic(), 3);
    RatFunc h = H0();
    CHECK(H.coeff(0) == (h + RatFunc(1)) / (h * h));
    CHECK(H.coeff(1) == RatFunc(0) - (h + RatFunc(2)) * (RatFunc(3) * h + RatFunc(1)) /
                                        (RatFunc(4) * h * h * (h + RatFunc(1)) * (h + RatFunc(1))));
}

TEST_CASE("H recurrence equals closed form for integer weights", "[series]") {
    for (long long h0 = 1; h0 <= 10; ++h0) {
        auto H = h_series(WeightParam::at(Rational(h0)), 12);
        for (long long k = 0; k <= 12; ++k)
            CHECK(H.coeff(static_cast<int>(k)).constant_value() == h_series_closed_form(h0, k));
    }
    CHECK(h_series_closed_form(2, 0) == Rational(3, 4));
    CHECK(h_series_closed_form(2, 1) == Rational(-7, 36));
    CHECK(h_series_closed_form(1, 0) == Rational(2));
    CHECK_THROWS_AS(h_series_closed_form(0, 1), DomainError);
}

TEST_CASE("z H(z) solves the inhomogeneous ODE", "[series]") {
    CHECK(inhom_residual(h_series(WeightParam::generic(), 8), WeightParam::generic()).is_zero());
    for (long long h0 : {1LL, 2LL, 5LL, 9LL}) {
        WeightParam p = WeightParam::at(Rational(h0));
        CHECK(inhom_residual(h_series(p, 8), p).is_zero());
    }
    // a corrupted series is caught
    auto H = h_series(WeightParam::at(Rational(3)), 6);
    FormalSeries bad = H;
    bad.coeff(2) += RatFunc(1);
    CHECK_FALSE(inhom_residual(bad, WeightParam::at(Rational(3))).is_zero());
}

TEST_CASE("residual checkers reject corrupted K and G", "[series]") {
    auto K = k_series(WeightParam::generic(), 6);
    FormalSeries bad = K;
    bad.coeff(3) *= RatFunc(2);
    CHECK_FALSE(ode_residual(bad, OdeKind::First, WeightParam::generic()).is_zero());
}

TEST_CASE("built-in series verification suite passes", "[series][suite]") {
    Report rep = verify_series();
    INFO(emit_report(rep, ReportFormat::Text, true));
    CHECK(rep.passed());
}
