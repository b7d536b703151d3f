#include <spinweil/fieldtower.hpp>

#include <gtest/gtest.h>

#include <algorithm>

using namespace spinweil;

namespace {

const Tower* tower(long p, long q) { return make_tower(TowerSpec{p, Rational(q)}); }

}  // namespace

TEST(FieldTower, IotaConjugatesSqrtMinusQ)
{
    const Tower* t = tower(1, 2);
    const FieldElem a(t, 3, 0, 2, 0);
    EXPECT_EQ(a.iota(), FieldElem(t, 3, 0, -2, 0));
}

TEST(FieldTower, IotaFixesF)
{
    const Tower* t = tower(2, 1);
    EXPECT_EQ(FieldElem::sqrt_p(t).iota(), FieldElem::sqrt_p(t));
    EXPECT_TRUE(FieldElem::sqrt_p(t).in(Subfield::F));
    EXPECT_FALSE(FieldElem::sqrt_minus_q(t).in(Subfield::F));
}

TEST(FieldTower, DefiningRelations)
{
    const Tower* t = tower(2, 3);
    const FieldElem s = FieldElem::sqrt_minus_q(t), r = FieldElem::sqrt_p(t);
    EXPECT_EQ(s * s, FieldElem(-3));
    EXPECT_EQ(r * r, FieldElem(2));
    EXPECT_EQ(r * s, s * r);
}

TEST(FieldTower, Inverse)
{
    const Tower* t = tower(2, 1);
    const FieldElem a(t, 1, 2, -1, frac(1, 3));
    EXPECT_EQ(a * a.inv(), FieldElem(1));
    EXPECT_THROW(FieldElem(t, 0).inv(), DivisionByZero);
}

TEST(FieldTower, Traces)
{
    const Tower* t = tower(2, 1);
    EXPECT_EQ(trace_to_Q(FieldElem::sqrt_p(t), Subfield::F), Rational(0));
    EXPECT_EQ(trace_to_Q(FieldElem(t, 1), Subfield::F), Rational(2));
    EXPECT_EQ(trace_to_Q(FieldElem::sqrt_minus_q(t), Subfield::K), Rational(0));
    EXPECT_EQ(trace_to_Q(FieldElem::sqrt_minus_q(tower(1, 5)), Subfield::K), Rational(0));
}

TEST(FieldTower, EmbeddingsSendGeneratorsToSignedRoots)
{
    const Tower* t = tower(2, 1);
    const auto emb = embeddings_of_K(t);
    ASSERT_EQ(emb.size(), 4u);
    for (const auto& s : emb) {
        const FieldElem x = FieldElem::sqrt_minus_q(t).apply(s);
        EXPECT_TRUE(x == FieldElem::sqrt_minus_q(t) || x == -FieldElem::sqrt_minus_q(t));
    }
}

TEST(FieldTower, CMTypeCounts)
{
    const auto two = enumerate_cm_types(tower(1, 2));
    ASSERT_EQ(two.size(), 2u);
    EXPECT_EQ(two[0].conjugate(), two[1]);
    // two F-embeddings, one choice from each conjugate pair: 2 * 2
    const auto four = enumerate_cm_types(tower(2, 1));
    EXPECT_EQ(four.size(), 4u);
    for (const auto& T : four) {
        EXPECT_EQ(overlap(T, T), 2);
        EXPECT_EQ(overlap(T, T.conjugate()), 0);
    }
}

TEST(FieldTower, RejectsBadSpecs)
{
    EXPECT_THROW(validate_tower(TowerSpec{1, Rational(0)}), std::invalid_argument);
    EXPECT_THROW(validate_tower(TowerSpec{1, Rational(-2)}), std::invalid_argument);
    EXPECT_THROW(validate_tower(TowerSpec{4, Rational(1)}), std::invalid_argument);
}
