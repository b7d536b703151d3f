#include <spinweil/fm.hpp>

#include <gtest/gtest.h>

using namespace spinweil;

namespace {

const WeilStructure& six()
{
    static const WeilStructure ws = build_weil(preset_datum("sixfold-q2"));
    return ws;
}

}  // namespace

TEST(FM, PushforwardNormalization)
{
    const ProductAlgebra& P = product_XX(1);
    const SpacePtr A = P.factors[0], B = P.factors[1];
    const RMV b = RMV::generator(B, 1) + RMV::scalar(B, 2);
    const RMV topA = pullback_factor(P, 0, RMV::basis(A, 0b11));
    EXPECT_EQ(pushforward_factor(P, wedge(topA, pullback_factor(P, 1, b)), 0, B), b);
    EXPECT_TRUE(pushforward_factor(P, pullback_factor(P, 1, b), 0, B).is_zero());
    EXPECT_THROW(pullback_factor(P, 2, b), UndeclaredFactor);
}

TEST(FM, PoincareClass)
{
    const RMV c = poincare_class(1);
    // x1 ^ y1 + x2 ^ y2 on (x1, x2, y1, y2)
    RMV expect(hyperbolic(1).V);
    expect.add_term(0b0101, 1);
    expect.add_term(0b1010, 1);
    EXPECT_EQ(c, expect);
    for (const auto& [m, v] : c.terms()) {
        EXPECT_EQ(popcount(m), 2);
        EXPECT_NE(m & 0b11, 0u);
        EXPECT_NE(m & 0b1100, 0u);
    }
}

TEST(FM, TransformOfOneIsTop)
{
    const auto th = fm_poincare(1, FMDirection::ToXhat);
    const RMV img = th.apply(RMV::scalar(hyperbolic(1).S, 1));
    ASSERT_EQ(img.size(), 1u);
    EXPECT_EQ(img.terms().begin()->first, 0b11u);
    EXPECT_EQ(abs(img.terms().begin()->second), Rational(1));
}

TEST(FM, MukaiInversion)
{
    for (int n = 1; n <= 2; ++n) {
        const auto tx = fm_poincare(n, FMDirection::ToX), th = fm_poincare(n, FMDirection::ToXhat);
        const SpacePtr S = hyperbolic(n).S;
        for (Mask m = 0; m <= full_mask(2 * n); ++m) {
            const Rational sg = ((n + popcount(m)) & 1) ? -1 : 1;
            EXPECT_EQ(tx.apply(th.apply(RMV::basis(S, m))), RMV::basis(S, m) * sg);
        }
    }
}

TEST(FM, OrlovOfUnitAtGenusOne)
{
    // hand expansion: exp(c1(P)) pushed along x', then mu_*, leaves y1 ^ y2
    const ProductAlgebra& XX = product_XX(1);
    const SpacePtr S = hyperbolic(1).S;
    const RMV one = orlov_phiH(1).apply(kunneth(RMV::scalar(S, 1), RMV::scalar(S, 1), XX.joint));
    EXPECT_EQ(one, RMV::basis(hyperbolic(1).V, 0b1100));
}

TEST(FM, OrlovRoundTrip)
{
    const auto phi = orlov_phiH(2), psi = orlov_forward(2);
    const SpacePtr V = hyperbolic(2).V;
    for (Mask m : {0u, 0b1u, 0b10010011u, 0b11111111u, 0b01100110u}) EXPECT_EQ(phi.apply(psi.apply(RMV::basis(V, m))), RMV::basis(V, m));
}

TEST(FM, PhiTildeExtremes)
{
    const auto pt = phi_tilde(1);
    const ProductAlgebra& XX = product_XX(1);
    const SpacePtr S = hyperbolic(1).S;
    const RMV one = RMV::scalar(S, 1), top = RMV::basis(S, 0b11);
    const RMV a = pt.apply(kunneth(one, one, XX.joint));
    ASSERT_EQ(a.size(), 1u);
    EXPECT_EQ(a.terms().begin()->first, 0b1100u);
    EXPECT_EQ(filtration_level(pt.apply(kunneth(one, top, XX.joint))), 0);
    EXPECT_EQ(filtration_level(pt.apply(kunneth(top, one, XX.joint))), 0);
    // regression: scalar parts of the two extreme images
    EXPECT_EQ(pt.apply(kunneth(one, top, XX.joint)).coeff(0), Rational(1));
    EXPECT_EQ(pt.apply(kunneth(top, one, XX.joint)).coeff(0), Rational(-1));
}

TEST(FM, EquivarianceAtGenusOne)
{
    const HyperbolicSpace& h = hyperbolic(1);
    const auto pt = phi_tilde(1);
    for (Mask xm : degree_masks(h.dim(), 2)) {
        const auto sp = so_pair(h, RMV::basis(h.V, xm));
        for (Mask m = 0; m < 16; ++m) {
            const RMV c = RMV::basis(product_XX(1).joint, m);
            EXPECT_EQ(pt.apply(diagonal_spin_action(h, sp, c)), derivation(sp.ad, pt.apply(c)));
        }
    }
}

TEST(FM, ChevalleyScalar)
{
    EXPECT_EQ(compare_with_chevalley(1).scalar, Rational(-1));
    EXPECT_TRUE(compare_with_chevalley(1).proportional);
    EXPECT_EQ(compare_with_chevalley(2).scalar, Rational(1));
}

TEST(FM, FiltrationLevel)
{
    const SpacePtr S = hyperbolic(1).S;
    EXPECT_EQ(filtration_level(RMV::scalar(S, 1) + RMV::generator(S, 0)), 0);
    EXPECT_EQ(filtration_level(RMV::basis(S, 0b11)), 2);
    EXPECT_THROW(filtration_level(RMV(S)), std::domain_error);
}

TEST(FM, BBDimensionsAndPi)
{
    const WeilStructure& ws = six();
    const BBData bb = bb_data(ws);
    ASSERT_EQ(bb.BB.size(), 2u);
    EXPECT_EQ(bb.BB[0].dim(), 2u);
    EXPECT_EQ(bb.BB[1].dim(), 2u);
    std::vector<std::vector<Rational>> imgs;
    const auto masks = degree_masks(ws.h->dim(), ws.d);
    for (const auto& v : bb.BB[1].basis()) {
        const RMV img = Pi(ws, v);
        std::vector<Rational> row;
        for (Mask m : masks) row.push_back(img.coeff(m));
        imgs.push_back(row);
    }
    std::vector<std::vector<Rational>> hw;
    for (const auto& c : ws.HW) {
        std::vector<Rational> row;
        for (Mask m : masks) row.push_back(c.coeff(m));
        hw.push_back(row);
    }
    const RSub I = RSub::span(masks.size(), imgs), H = RSub::span(masks.size(), hw);
    EXPECT_EQ(I.dim(), 2u);
    EXPECT_TRUE(I.contains(H) && H.contains(I));
}

TEST(FM, OverlapLevels)
{
    const WeilStructure& ws = six();
    for (std::size_t T = 0; T < ws.types.size(); ++T)
        for (std::size_t U = 0; U < ws.types.size(); ++U) {
            const auto o = overlap_filtration(ws, T, U);
            EXPECT_TRUE(o.level_ok);
            EXPECT_TRUE(o.line_ok);
            EXPECT_EQ(o.level, ws.d * o.k);
        }
}
