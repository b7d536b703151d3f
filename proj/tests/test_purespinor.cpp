#include <spinweil/purespinor.hpp>

#include <gtest/gtest.h>

using namespace spinweil;

namespace {

using KVec = std::vector<FieldElem>;

const Tower* gaussian() { return make_tower(TowerSpec{1, Rational(1)}); }

KVec kv(const Tower* t, std::initializer_list<std::pair<long, long>> v)
{
    KVec out;
    for (auto [a, b] : v) out.emplace_back(t, a, 0, b, 0);
    return out;
}

}  // namespace

TEST(PureSpinor, AnnihilatorOfOneIsY)
{
    const HyperbolicSpace& h = hyperbolic(2);
    const auto ann = annihilator(h, RMV::scalar(h.S, 1));
    ASSERT_EQ(ann.dim(), 4u);
    for (int k = 0; k < 4; ++k) {
        std::vector<Rational> y(8, Rational(0));
        y[static_cast<std::size_t>(4 + k)] = 1;
        EXPECT_TRUE(ann.space.contains(y));
    }
}

TEST(PureSpinor, AnnihilatorOfTopIsX)
{
    const HyperbolicSpace& h = hyperbolic(2);
    const auto ann = annihilator(h, RMV::basis(h.S, 0b1111));
    ASSERT_EQ(ann.dim(), 4u);
    for (int k = 0; k < 4; ++k) {
        std::vector<Rational> x(8, Rational(0));
        x[static_cast<std::size_t>(k)] = 1;
        EXPECT_TRUE(ann.space.contains(x));
    }
}

TEST(PureSpinor, AnnihilatorOverGaussianField)
{
    const Tower* t = gaussian();
    const HyperbolicSpace& h = hyperbolic(1);
    KMV lam(h.S);
    lam.add_term(0, FieldElem(1));
    lam.add_term(0b11, FieldElem(t, 0, 0, 1, 0));
    const auto ann = annihilator(h, lam);
    ASSERT_EQ(ann.dim(), 2u);
    EXPECT_TRUE(ann.maximal());
    // y1 - i x2 and y2 + i x1
    EXPECT_TRUE(ann.space.contains(kv(t, {{0, 0}, {0, -1}, {1, 0}, {0, 0}})));
    EXPECT_TRUE(ann.space.contains(kv(t, {{0, 1}, {0, 0}, {0, 0}, {1, 0}})));
}

TEST(PureSpinor, Purity)
{
    const HyperbolicSpace& h = hyperbolic(2);
    EXPECT_TRUE(is_pure(h, RMV::scalar(h.S, 1)).pure);
    RMV lam = RMV::scalar(h.S, 1);
    lam.add_term(0b1111, 1);
    const auto p = is_pure(h, lam);
    EXPECT_FALSE(p.pure);
    EXPECT_LT(p.certificate.dim(), 4u);
}

TEST(PureSpinor, ExpOfNondegenerateThetaIsPure)
{
    const Tower* t = make_tower(TowerSpec{1, Rational(2)});
    const HyperbolicSpace& h = hyperbolic(3);
    RMV th(h.S);
    for (int i = 0; i < 3; ++i) th.add_term((Mask{1} << i) | (Mask{1} << (i + 3)), 1);
    const KMV e = exp_even(to_field(th) * FieldElem::sqrt_minus_q(t));
    EXPECT_TRUE(is_pure(h, e).pure);
    EXPECT_EQ(parity(e), 1);
}

TEST(PureSpinor, PureSpinorOfSubspace)
{
    const HyperbolicSpace& h = hyperbolic(1);
    std::vector<std::vector<Rational>> ys = {{0, 0, 1, 0}, {0, 0, 0, 1}};
    EXPECT_EQ(pure_spinor_of(h, ys), RMV::scalar(h.S, 1));
    const Tower* t = gaussian();
    const std::vector<KVec> W = {kv(t, {{0, 0}, {0, -1}, {1, 0}, {0, 0}}), kv(t, {{0, 1}, {0, 0}, {0, 0}, {1, 0}})};
    KMV expect(h.S);
    expect.add_term(0, FieldElem(1));
    expect.add_term(0b11, FieldElem(t, 0, 0, 1, 0));
    EXPECT_EQ(pure_spinor_of(h, W), expect);
    std::vector<std::vector<Rational>> bad = {{1, 0, 1, 0}, {0, 0, 0, 1}};
    EXPECT_THROW(pure_spinor_of(h, bad), NotMaximalIsotropic);
}

TEST(PureSpinor, Subspaces)
{
    const std::vector<std::vector<Rational>> xs = {{1, 0, 0, 0}, {0, 1, 0, 0}}, ys = {{0, 0, 1, 0}, {0, 0, 0, 1}};
    const RSub X = RSub::span(4, xs), Y = RSub::span(4, ys);
    EXPECT_EQ(X.intersect(X).dim(), 2u);
    EXPECT_EQ(X.intersect(Y).dim(), 0u);
    EXPECT_EQ(X.sum(Y).dim(), 4u);
}

TEST(PureSpinor, ReflectionTransportsAnnihilator)
{
    const HyperbolicSpace& h = hyperbolic(1);
    const std::vector<Rational> v = {1, 0, 1, 0};
    const RMV lam = RMV::scalar(h.S, 1);
    const RMV moved = vector_action(h, v, lam);
    const auto a0 = annihilator(h, lam), a1 = annihilator(h, moved);
    std::vector<std::vector<Rational>> img;
    for (const auto& w : a0.space.basis()) img.push_back(reflection(h, v, w));
    const RSub R = RSub::span(4, img);
    EXPECT_TRUE(R.contains(a1.space) && a1.space.contains(R));
}
