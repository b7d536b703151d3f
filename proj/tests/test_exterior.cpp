#include <spinweil/exterior.hpp>

#include <gtest/gtest.h>

using namespace spinweil;

namespace {

struct Ext : ::testing::Test {
    SpacePtr sp = spinor_space(1);  // x1, x2
    RMV x1 = RMV::generator(sp, 0), x2 = RMV::generator(sp, 1);
    RMV one = RMV::scalar(sp, 1);
};

}  // namespace

TEST_F(Ext, WedgeBasics)
{
    EXPECT_EQ(wedge(one, x1), x1);
    EXPECT_TRUE(wedge(x1, x1).is_zero());
    EXPECT_EQ(wedge(x2, x1), -wedge(x1, x2));
}

TEST_F(Ext, Contraction)
{
    const RMV x12 = wedge(x1, x2);
    EXPECT_EQ(contract_gen(0, x12), x2);
    EXPECT_EQ(contract_gen(1, x12), -x1);
    EXPECT_TRUE(contract_gen(0, one).is_zero());
}

TEST_F(Ext, Tau)
{
    EXPECT_EQ(tau(one), one);
    EXPECT_EQ(tau(wedge(x1, x2)), -wedge(x1, x2));
    EXPECT_EQ(tau(x1), x1);
}

TEST_F(Ext, Pairing)
{
    const RMV top = wedge(x1, x2);
    EXPECT_EQ(s_pairing(one, top), Rational(1));
    // tau(x1 x2) = -x1 x2
    EXPECT_EQ(s_pairing(top, one), Rational(-1));
    // n = 1: antisymmetric
    EXPECT_EQ(s_pairing(x1, x2), -s_pairing(x2, x1));
}

TEST(Exterior, PairingSymmetricForEvenN)
{
    const SpacePtr sp = spinor_space(2);
    for (Mask a = 0; a < 16; ++a)
        for (Mask b = 0; b < 16; ++b)
            EXPECT_EQ(s_pairing(RMV::basis(sp, a), RMV::basis(sp, b)), s_pairing(RMV::basis(sp, b), RMV::basis(sp, a)));
}

TEST_F(Ext, ExpEven)
{
    EXPECT_EQ(exp_even(RMV(sp)), one);
    const RMV th = wedge(x1, x2) * Rational(5);
    EXPECT_EQ(exp_even(th), one + th);
}

TEST(Exterior, ExpOfThetaAtGenusThree)
{
    const SpacePtr sp = spinor_space(3);
    RMV th(sp);
    for (int i = 0; i < 3; ++i) th += wedge(RMV::generator(sp, i), RMV::generator(sp, i + 3));
    const RMV t2 = wedge(th, th), t3 = wedge(t2, th);
    const RMV e = exp_even(th);
    EXPECT_EQ(e, RMV::scalar(sp, 1) + th + t2 * frac(1, 2) + t3 * frac(1, 6));
    // Theta^3 = 3! x1 x2 x3 x4 x5 x6 up to the sign of the reordering
    EXPECT_EQ(t3.size(), 1u);
    EXPECT_EQ(abs(t3.coeff(full_mask(6))), Rational(6));
}

TEST(Exterior, Kunneth)
{
    const SpacePtr s = spinor_space(1);
    const SpacePtr j = join_spaces(s, s);
    const RMV a = RMV::generator(s, 0);
    EXPECT_EQ(kunneth(RMV::scalar(s, 1), a, j), RMV::generator(j, 2));
    EXPECT_EQ(kunneth(a, a, j), wedge(RMV::generator(j, 0), RMV::generator(j, 2)));
    const RMV top = RMV::basis(s, 0b11);
    const RMV odd = RMV::generator(s, 1);
    EXPECT_EQ(kunneth(odd, odd, j), wedge(embed(odd, j, 0), embed(odd, j, 2)));
    EXPECT_EQ(kunneth(top, top, j), RMV::basis(j, 0b1111));
}

TEST(Exterior, SpaceChecks)
{
    EXPECT_THROW(make_space({"a", "a"}), std::invalid_argument);
    const RMV a = RMV::scalar(spinor_space(1), 1), b = RMV::scalar(spinor_space(2), 1);
    EXPECT_THROW(a + b, std::invalid_argument);
    RMV c(spinor_space(1));
    EXPECT_THROW(c.add_term(0b100, Rational(1)), std::out_of_range);
}
