// Rewriting engine: commutation axioms, enveloping-algebra identities,
// normal-ordered series operators, the Weyl-averaged log block, and the
// annihilation properties of the assembled solution operators.

#include <slcalc/verify.hpp>
#include <slcalc/word_parse.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace slcalc;

namespace {

const OpFactor X = OpFactor::plain(Gen::X);
const OpFactor Y = OpFactor::plain(Gen::Y);
const OpFactor H = OpFactor::plain(Gen::H);
const OpFactor LX = OpFactor::plain(Gen::LogX);
const OpFactor LT = OpFactor::plain(Gen::LogTau);

bool forms_equal(const Form& a, const Form& b) {
    return (a + scaled(b, RatFunc(-1))).empty();
}

} // namespace

TEST_CASE("defining commutators on a generic-weight section", "[sl2]") {
    Sl2Engine eng;
    Section f0 = eng.make_section("f0", RatFunc::h0());
    CHECK(forms_equal(eng.commutator({H}, {X}, f0), scaled(eng.reduce({X}, f0), RatFunc(2))));
    CHECK(forms_equal(eng.commutator({H}, {Y}, f0), scaled(eng.reduce({Y}, f0), RatFunc(-2))));
    CHECK(forms_equal(eng.commutator({X}, {Y}, f0), scaled(eng.reduce({}, f0), RatFunc::h0())));
    CHECK(forms_equal(eng.commutator({H}, {LX}, f0), scaled(eng.reduce({}, f0), RatFunc(2))));
    CHECK(forms_equal(eng.commutator({H}, {LT}, f0), scaled(eng.reduce({}, f0), RatFunc(2))));
    CHECK(eng.commutator({X}, {LT}, f0).empty());
}

TEST_CASE("y x reduction introduces the acting weight", "[sl2]") {
    // y x f0 = x y f0 - h0 f0 (leftmost factor acts last)
    Sl2Engine eng;
    Section f0 = eng.make_section("f0", RatFunc::h0());
    Form got = eng.reduce({Y, X}, f0);
    Form want = eng.reduce({X, Y}, f0) + scaled(eng.reduce({}, f0), RatFunc(0) - RatFunc::h0());
    CHECK(forms_equal(got, want));
}

TEST_CASE("y x x reduction (two-step commutator expansion)", "[sl2]") {
    // y x^2 f0 = x^2 y f0 - 2(h0+1) x f0, from [x^2,y] = 2x(h+1)
    Sl2Engine eng;
    Section f0 = eng.make_section("f0", RatFunc::h0());
    Form got = eng.reduce({Y, X, X}, f0);
    Form want = eng.reduce({X, X, Y}, f0) +
                scaled(eng.reduce({X}, f0),
                       RatFunc(-2) * (RatFunc::h0() + RatFunc(1)));
    CHECK(forms_equal(got, want));
}

TEST_CASE("y logx on a dual-weight section", "[sl2]") {
    // y logx fbar0 = logx y fbar0 - x^{-1}(h-1) fbar0, h acting at weight 2-h0
    Sl2Engine eng;
    Section fb = eng.make_section("fbar0", RatFunc(2) - RatFunc::h0());
    Form got = eng.reduce({Y, LX}, fb);
    Form corr = scaled(eng.reduce({}, fb), RatFunc(1) - RatFunc::h0()); // (2-h0)-1
    for (auto& t : corr)
        t.xexp.a += Rational(-1);
    Form want = eng.reduce({LX, Y}, fb) + scaled(std::move(corr), RatFunc(-1));
    CHECK(forms_equal(got, want));
}

TEST_CASE("enveloping identities [x^k,y] and [x,y^k]", "[sl2]") {
    Sl2Engine eng;
    Section f0 = eng.make_section("f0", RatFunc::h0());
    for (int k = 1; k <= 12; ++k) {
        // [x^k,y] f0 = k x^{k-1}(h0+k-1) f0
        Word xk(static_cast<size_t>(k), X);
        Form lhs = eng.commutator(xk, {Y}, f0);
        Form rhs = scaled(eng.reduce({}, f0),
                          RatFunc(k) * (RatFunc::h0() + RatFunc(k - 1)));
        for (auto& t : rhs)
            t.xexp.a += Rational(k - 1);
        CHECK(forms_equal(lhs, rhs));
        // [x,y^k] f0 = k y^{k-1}(h0-k+1) f0
        Word yk(static_cast<size_t>(k), Y);
        Form lhs2 = eng.commutator({X}, yk, f0);
        Form base = eng.apply_y_pow(k - 1, eng.reduce({}, f0));
        Form rhs2 = scaled(std::move(base), RatFunc(k) * (RatFunc::h0() - RatFunc(k - 1)));
        CHECK(forms_equal(lhs2, rhs2));
    }
}

TEST_CASE("formal x-exponent x^(h0-1) obeys the alpha rule", "[sl2]") {
    // [x^{h0-1}, y] = x^{h0-2}(h0-1)(h0 + h0 - 2) on a weight-h0 section
    Sl2Engine eng;
    Section f0 = eng.make_section("f0", RatFunc::h0());
    Word xa = {OpFactor::x_pow(XExp{Rational(0), 1})};
    Form lhs = eng.commutator(xa, {Y}, f0);
    RatFunc alpha = RatFunc::h0() - RatFunc(1);
    Form rhs = scaled(eng.reduce({}, f0), alpha * (RatFunc::h0() + alpha - RatFunc(1)));
    for (auto& t : rhs)
        t.xexp = t.xexp + XExp{Rational(-1), 1};
    CHECK(forms_equal(lhs, rhs));
}

TEST_CASE("words in y and logtau are irreducible", "[sl2]") {
    Sl2Engine eng;
    Section f0 = eng.make_section("f0", RatFunc::h0());
    Form f = eng.reduce({Y, LT, Y}, f0);
    REQUIRE(f.size() == 1);
    CHECK(f[0].tail == std::vector<TailSym>{TailSym::Y, TailSym::LogTau, TailSym::Y});
    // distinct orderings stay distinct
    Form g = eng.reduce({LT, Y, Y}, f0);
    CHECK_FALSE(forms_equal(f, g));
}

TEST_CASE("normal-ordered series operator application", "[sl2]") {
    Sl2Engine eng;
    Section f0 = eng.make_section("f0", RatFunc::h0());
    auto K = k_series(WeightParam::generic(), 2);
    // truncation keeps x-degree < 3, so all three contributions survive
    Form got = eng.apply_series_operator(K, f0, 3);
    Form want = eng.reduce({}, f0);
    Form xy = eng.reduce({X, Y}, f0);
    Form xxyy = eng.reduce({X, X, Y, Y}, f0);
    want = want + scaled(std::move(xy), K.coeff(1)) + scaled(std::move(xxyy), K.coeff(2));
    CHECK(forms_equal(got, want));
    // the same application truncated to x-degree < 2 drops the top term
    Form low = eng.apply_series_operator(K, f0, 2);
    Form want_low = Sl2Engine::filter_below_degree(want, 2);
    CHECK(forms_equal(low, want_low));
    // identity series acts as the identity
    FormalSeries one(2);
    one.coeff(0) = RatFunc(1);
    CHECK(forms_equal(eng.apply_series_operator(one, f0, 3), eng.reduce({}, f0)));
}

TEST_CASE("y annihilates :K: f0 at generic weight", "[sl2]") {
    Sl2Engine eng;
    Section f0 = eng.make_section("f0", RatFunc::h0());
    auto spec = make_first_kind_spec(WeightParam::generic(), 12);
    auto v = verify_zero(eng, with_left({Y}, solution_op_expr(eng, spec)), f0, 12);
    INFO(v.first_offender());
    CHECK(v.zero);
}

TEST_CASE(":K: x f1 vanishes (extension independence)", "[sl2]") {
    Sl2Engine eng;
    Section f1 = eng.make_section("f1", RatFunc::h0() - RatFunc(2));
    auto spec = make_first_kind_spec(WeightParam::generic(), 12);
    auto v = verify_zero(eng, with_right(solution_op_expr(eng, spec), {X}), f1, 12);
    INFO(v.first_offender());
    CHECK(v.zero);
}

TEST_CASE("log operator O annihilated by y and kills x f1", "[sl2]") {
    for (long long h0 : {2LL, 3LL, 4LL, 5LL}) {
        Sl2Engine eng({WeightParam::at(Rational(h0)), false});
        Section f0 = eng.make_section("f0", RatFunc(Rational(h0)));
        Section f1 = eng.make_section("f1", RatFunc(Rational(h0 - 2)));
        auto spec = assemble_log_operator(h0, 10);
        auto v1 = verify_zero(eng, with_left({Y}, solution_op_expr(eng, spec)), f0, 10);
        auto v2 = verify_zero(eng, with_right(solution_op_expr(eng, spec), {X}), f1, 10);
        INFO("h0 = " << h0 << ": " << v1.first_offender() << " / " << v2.first_offender());
        CHECK(v1.zero);
        CHECK(v2.zero);
    }
}

TEST_CASE("unaveraged ordering fails with the predicted leftover", "[sl2]") {
    const long long h0 = 4;
    Sl2Engine eng({WeightParam::at(Rational(h0)), false});
    Section f1 = eng.make_section("f1", RatFunc(Rational(h0 - 2)));
    auto spec = assemble_log_operator(h0, 10);
    auto bad = with_right(solution_op_expr(eng, spec, LogOpVariant::Unaveraged), {X});
    auto vfail = verify_zero(eng, bad, f1, 10);
    CHECK_FALSE(vfail.zero);
    auto diff = combined(bad, unaveraged_leftover_expr(spec), RatFunc(-1));
    auto vres = verify_zero(eng, diff, f1, 10);
    INFO(vres.first_offender());
    CHECK(vres.zero);
}

TEST_CASE("h0 = 1 operator annihilated by y", "[sl2]") {
    Sl2Engine eng({WeightParam::at(Rational(1)), false});
    Section fb = eng.make_section("fbar0", RatFunc(1));
    auto spec = assemble_log_operator(1, 10);
    auto v = verify_zero(eng, with_left({Y}, solution_op_expr(eng, spec)), fb, 10);
    INFO(v.first_offender());
    CHECK(v.zero);
}

TEST_CASE("contraction mode kills [x,y] but keeps [h,x], [h,y]", "[sl2]") {
    Sl2Engine eng({WeightParam::generic(), true});
    Section f0 = eng.make_section("f0", RatFunc::h0());
    CHECK(eng.commutator({X}, {Y}, f0).empty());
    CHECK(forms_equal(eng.commutator({H}, {X}, f0), scaled(eng.reduce({X}, f0), RatFunc(2))));
    CHECK(forms_equal(eng.commutator({H}, {Y}, f0), scaled(eng.reduce({Y}, f0), RatFunc(-2))));
}

TEST_CASE("operator word grammar drives the engine", "[sl2][parser]") {
    Sl2Engine eng;
    WeightParam g = WeightParam::generic();
    Section f0 = eng.make_section("f", RatFunc::h0());
    OpExpr e = parse_operator_expr("y K[h0]", eng, g, 10);
    CHECK(Sl2Engine::filter_below_degree(eng.reduce_expr(e, f0), 10).empty());
    OpExpr yx = parse_operator_expr("y x", eng, g, 10);
    CHECK(forms_equal(eng.reduce_expr(yx, f0), eng.reduce({Y, X}, f0)));
    CHECK_THROWS_AS(parse_operator_expr("q", eng, g, 4), ParseError);
    CHECK_THROWS_AS(parse_operator_expr("O", eng, g, 4), ParseError);
    // weight expressions
    CHECK(parse_weight_expr("h0-2") == RatFunc::h0() - RatFunc(2));
    CHECK(parse_weight_expr("2-h0") == RatFunc(2) - RatFunc::h0());
    CHECK(parse_weight_expr("-1/4") == RatFunc(Rational(-1, 4)));
    CHECK_THROWS_AS(parse_weight_expr("h0^2"), ParseError);
}

TEST_CASE("built-in sl2 and logops verification suites pass", "[sl2][suite]") {
    Report a = verify_sl2();
    INFO(emit_report(a, ReportFormat::Text, true));
    CHECK(a.passed());
    Report b = verify_logops();
    INFO(emit_report(b, ReportFormat::Text, true));
    CHECK(b.passed());
}
