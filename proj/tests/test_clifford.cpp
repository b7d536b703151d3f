#include <spinweil/clifford.hpp>

#include <gtest/gtest.h>

using namespace spinweil;

namespace {

using CE = CliffordElem<Rational>;

std::vector<Rational> vec(std::initializer_list<long> v)
{
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

}  // namespace

TEST(Clifford, GeneratorsActOnOne)
{
    const HyperbolicSpace& h = hyperbolic(1);
    const RMV one = RMV::scalar(h.S, 1);
    EXPECT_EQ(clifford_action(h, CE::generator(h.V, 0), one), RMV::generator(h.S, 0));
    // y1 contracts x1 ^ x2 to x2
    EXPECT_EQ(clifford_action(h, CE::generator(h.V, 2), RMV::basis(h.S, 0b11)), RMV::generator(h.S, 1));
}

TEST(Clifford, AnticommutatorIsPairing)
{
    for (int n = 1; n <= 3; ++n) {
        const HyperbolicSpace& h = hyperbolic(n);
        for (int a = 0; a < h.dim(); ++a)
            for (int b = 0; b < h.dim(); ++b) {
                const CE ga = CE::generator(h.V, a), gb = CE::generator(h.V, b);
                const CE ac = clifford_mul(h, ga, gb) + clifford_mul(h, gb, ga);
                EXPECT_EQ(ac, CE::scalar(h.V, Rational(h.gram(a, b))));
            }
    }
}

TEST(Clifford, OperatorRelationOnRandomSpinor)
{
    const HyperbolicSpace& h = hyperbolic(2);
    RMV lam(h.S);
    lam.add_term(0b0000, 3);
    lam.add_term(0b0110, -2);
    lam.add_term(0b1011, 1);
    const CE x1 = CE::generator(h.V, 0), y1 = CE::generator(h.V, h.N());
    EXPECT_EQ(clifford_action(h, x1, clifford_action(h, y1, lam)) + clifford_action(h, y1, clifford_action(h, x1, lam)), lam);
}

TEST(Clifford, NormalForm)
{
    const HyperbolicSpace& h = hyperbolic(1);
    const CE x1 = CE::generator(h.V, 0), x2 = CE::generator(h.V, 1), y1 = CE::generator(h.V, 2);
    EXPECT_EQ(clifford_mul(h, x1, x2), CE::basis(h.V, 0b0011));
    EXPECT_EQ(clifford_mul(h, x1, y1) + clifford_mul(h, y1, x1), CE::scalar(h.V, 1));
}

TEST(Clifford, Involutions)
{
    const HyperbolicSpace& h = hyperbolic(1);
    const CE x1 = CE::generator(h.V, 0), y1 = CE::generator(h.V, 2);
    const CE x1y1 = clifford_mul(h, x1, y1);
    EXPECT_EQ(main_antiinv(h, x1y1), CE::scalar(h.V, 1) - x1y1);
    EXPECT_EQ(main_inv(h, x1), -x1);
    CE a(h.V);
    a.add_term(0b0101, 2);
    a.add_term(0b1110, -1);
    a.add_term(0, 4);
    EXPECT_EQ(star(h, star(h, a)), a);
}

TEST(Clifford, Reflection)
{
    const HyperbolicSpace& h = hyperbolic(1);
    const auto v = vec({1, 0, 1, 0});
    EXPECT_EQ(reflection(h, v, vec({1, 0, 0, 0})), vec({0, 0, 1, 0}));
    EXPECT_EQ(reflection(h, v, vec({0, 1, 0, 0})), vec({0, -1, 0, 0}));
    EXPECT_THROW(reflection(h, vec({1, 0, 0, 0}), v), std::invalid_argument);
}

TEST(Clifford, AdjointMatchesBracket)
{
    const HyperbolicSpace& h = hyperbolic(1);
    const RMV xi = RMV::basis(h.V, 0b0011);
    const auto sp = so_pair(h, xi);
    // ad_{x1 x2}(y1) = -x2
    EXPECT_EQ(sp.ad(1, 2), Rational(-1));
    EXPECT_EQ(sp.ad(0, 2), Rational(0));
    for (int g = 0; g < h.dim(); ++g) {
        const CE v = CE::generator(h.V, g);
        const CE br = clifford_mul(h, xi, v) - clifford_mul(h, v, xi);
        CE ad(h.V);
        for (int i = 0; i < h.dim(); ++i) ad.add_term(Mask{1} << i, sp.ad(static_cast<std::size_t>(i), static_cast<std::size_t>(g)));
        EXPECT_EQ(br, ad);
    }
}

TEST(Clifford, SpinActionIsTraceless)
{
    // x1 y1 acts with a normal-ordering constant; the spin action removes it
    const HyperbolicSpace& h = hyperbolic(1);
    const auto sp = so_pair(h, RMV::basis(h.V, 0b0101));
    EXPECT_EQ(sp.constant, frac(1, 2));
    const RMat M = operator_matrix(h, CE::basis(h.V, 0b0101));
    Rational tr = 0;
    for (std::size_t i = 0; i < M.rows(); ++i) tr += M(i, i);
    EXPECT_EQ(tr, Rational(2));
}

TEST(Clifford, Desymbol)
{
    const HyperbolicSpace& h = hyperbolic(1);
    const SpinorOperator<Rational> id = [&](Mask C) { return RMV::basis(h.S, C); };
    EXPECT_EQ(desymbol(h, id), CE::scalar(h.V, 1));
    const SpinorOperator<Rational> mx1 = [&](Mask C) { return clifford_action(h, CE::generator(h.V, 0), RMV::basis(h.S, C)); };
    EXPECT_EQ(desymbol(h, mx1), CE::generator(h.V, 0));
}

TEST(Clifford, DesymbolInvertsAction)
{
    const HyperbolicSpace& h = hyperbolic(2);
    CE a(h.V);
    a.add_term(0b00010001, 1);
    a.add_term(0b10100100, -3);
    a.add_term(0b00001111, 2);
    const SpinorOperator<Rational> op = [&](Mask C) { return clifford_action(h, a, RMV::basis(h.S, C)); };
    EXPECT_EQ(desymbol(h, op), a);
}
