#include "slh/functionals.hpp"
#include "slh/series.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace slh;

namespace {

const FunctionalId kH31{FunctionalTag::H3_1}, kH23{FunctionalTag::H2_3}, kZal{FunctionalTag::ZALCMAN_3};

std::vector<Rational> koebe(int n) {
    std::vector<Rational> a;
    for (int k = 0; k <= n; ++k) a.emplace_back(k);
    return a;
}

Rational eval_on(const FunctionalId& id, const std::vector<Rational>& a) {
    return evaluate_functional<Rational>(id, std::span<const Rational>(a));
}

Rational small(std::mt19937_64& gen) { return make_rational(static_cast<long>(gen() % 13) - 6, 12); }

}  // namespace

TEST(Functional, KoebeValues) {
    auto a = koebe(6);
    EXPECT_EQ(eval_on({FunctionalTag::H2_1}, a), Rational(-1));
    EXPECT_EQ(eval_on(kH31, a), Rational(0));
    EXPECT_EQ(eval_on(kZal, a), Rational(4));
    EXPECT_EQ(eval_on(kH23, a), Rational(3 * 5 - 16));
    EXPECT_EQ(eval_on(FunctionalId::hankel(2, 2), a), Rational(2 * 4 - 9));
}

TEST(Functional, ParsingAndShapes) {
    EXPECT_EQ(parse_functional("h31"), kH31);
    EXPECT_EQ(parse_functional("hankel:3,1"), FunctionalId::hankel(3, 1));
    EXPECT_EQ(parse_functional("hankel:2,3").max_index(), 5);
    EXPECT_EQ(kZal.max_index(), 5);
    EXPECT_THROW(parse_functional("h99"), std::invalid_argument);
    EXPECT_THROW(FunctionalId::hankel(0, 1), std::invalid_argument);
    std::vector<Rational> short_a{0, 1, 0, 0};
    EXPECT_THROW(eval_on(kH31, short_a), std::invalid_argument);
}

TEST(Functional, DeterminantByHand) {
    std::vector<std::vector<Rational>> m{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
    EXPECT_EQ(determinant(m), Rational(2 * 11 - 4));
}

TEST(Functional, ExtremalValues) {
    auto f = extremal_sl(3, 8);
    std::vector<Rational> a(f.coefficients().begin(), f.coefficients().end());
    EXPECT_EQ(eval_on(kH31, a), Rational(-1, 36));
    EXPECT_EQ(eval_on(kH23, a), Rational(-1, 36));
    auto g = extremal_sl(4, 8);
    std::vector<Rational> b(g.coefficients().begin(), g.coefficients().end());
    EXPECT_EQ(eval_on(kZal, b), Rational(-1, 8));
}

TEST(Expansion, RawMatchesDisplayedForms) {
    for (const auto& id : {kH31, kH23, kZal}) EXPECT_EQ(raw_p_expansion(id), printed_raw_expansion(id)) << id.name();
}

TEST(ComplexForm, CorrectedReassemblesExactly) {
    EXPECT_TRUE(reassembly_residual(kH31, Transcription::corrected).is_zero());
    EXPECT_TRUE(reassembly_residual(kH23, Transcription::corrected).is_zero());
    EXPECT_FALSE(reassembly_residual(kH31, Transcription::printed).is_zero());
    EXPECT_FALSE(reassembly_residual(kH23, Transcription::printed).is_zero());
}

TEST(ComplexForm, PointValuesAgreeWithCoefficientRoute) {
    std::mt19937_64 gen(17);
    for (int i = 0; i < 25; ++i) {
        auto pt = make_param_point(make_rational(static_cast<long>(gen() % 9), 4), ExactComplex(small(gen), small(gen)),
                                   ExactComplex(small(gen), small(gen)), ExactComplex(small(gen), small(gen)));
        for (const auto& id : {kH31, kH23}) {
            auto a = coefficients_from_tail(tail_from_params(pt));
            auto direct = evaluate_functional<ExactComplex>(id, a);
            EXPECT_EQ(complex_form_value(id, Transcription::corrected, pt), direct) << id.name();
            EXPECT_EQ(functional_at(id, pt), direct) << id.name();
        }
    }
}

TEST(Surrogate, CornerValueAndMajorization) {
    std::map<std::string, Rational> corner{{"p", 0}, {"x", 0}, {"y", 1}};
    EXPECT_EQ(bound_surrogate(kH31).surrogate.eval(corner), Rational(1, 36));
    EXPECT_EQ(bound_surrogate(kH23).surrogate.eval(corner), Rational(1, 36));
    EXPECT_THROW(bound_surrogate(kZal), std::invalid_argument);

    // gamma = 3/5 + 4/5 i has modulus exactly 1, eta = 1/2.
    auto pt = make_param_point(Rational(1, 2), ExactComplex(Rational(3, 5), Rational(4, 5)),
                               ExactComplex(Rational(1, 2)), ExactComplex(Rational(-1, 3)));
    for (const auto& id : {kH31, kH23}) {
        auto s = bound_surrogate(id);
        auto m = majorization_at(id, s, Transcription::corrected, pt, 1, Rational(1, 2));
        EXPECT_TRUE(m.holds) << id.name();
        for (bool b : m.part_holds) EXPECT_TRUE(b) << id.name();
    }
    EXPECT_THROW(majorization_at(kH31, bound_surrogate(kH31), Transcription::corrected, pt, Rational(1, 2), Rational(1, 2)),
                 std::invalid_argument);
}

TEST(HermitianCondition, ZalcmanParameters) {
    auto v = hermitian_condition(zalcman_hermitian_params());
    EXPECT_TRUE(v.holds);
    EXPECT_EQ(v.margin, Rational(892289, 23887872));
    EXPECT_EQ(zalcman_bound_via_hermitian(), Rational(1, 8));
}

TEST(HermitianCondition, HandComputedCases) {
    // a = b = 0, c = d = 1/2: lhs = 2*(1/4) + (1/4)*(1/4) = 9/16, rhs = 4*(1/4)*(1/4)*(1/4) = 1/16.
    auto v = hermitian_condition({0, 0, Rational(1, 2), Rational(1, 2)});
    EXPECT_EQ(v.lhs, Rational(9, 16));
    EXPECT_EQ(v.rhs, Rational(1, 16));
    EXPECT_FALSE(v.holds);
    EXPECT_THROW(hermitian_condition({0, 0, 0, Rational(1, 2)}), std::domain_error);
    EXPECT_THROW(hermitian_condition({0, 0, Rational(1, 2), 1}), std::domain_error);
}
