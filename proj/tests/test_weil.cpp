#include <spinweil/weil.hpp>

#include <gtest/gtest.h>

using namespace spinweil;

namespace {

const WeilStructure& six()
{
    static const WeilStructure ws = build_weil(preset_datum("sixfold-q2"));
    return ws;
}

const WeilStructure& four()
{
    static const WeilStructure ws = build_weil(preset_datum("fourfold-rm2"));
    return ws;
}

RMV theta3(const SpacePtr& sp)
{
    RMV th(sp);
    for (int i = 0; i < 3; ++i) th.add_term((Mask{1} << i) | (Mask{1} << (i + 3)), 1);
    return th;
}

}  // namespace

TEST(Weil, PresetsExist)
{
    for (const auto& name : preset_names()) EXPECT_NO_THROW(preset_datum(name));
    EXPECT_THROW(preset_datum("no-such"), std::out_of_range);
}

TEST(Weil, AlphaBetaAtQ2)
{
    const WeilStructure& ws = six();
    const RMV th = theta3(ws.h->S);
    const RMV t2 = wedge(th, th), t3 = wedge(t2, th);
    EXPECT_EQ(ws.theta, th);
    EXPECT_EQ(ws.alpha, RMV::scalar(ws.h->S, 1) - t2);
    EXPECT_EQ(ws.beta, th - t3 * frac(1, 3));
}

TEST(Weil, SpinorIsPure)
{
    for (const WeilStructure* ws : {&six(), &four()}) {
        const auto p = is_pure(*ws->h, ws->spinor);
        EXPECT_TRUE(p.pure);
        EXPECT_TRUE(p.certificate.space.contains(KSub::span(static_cast<std::size_t>(ws->h->dim()), ws->W)));
    }
}

TEST(Weil, WMeetsIotaWTrivially)
{
    for (const WeilStructure* ws : {&six(), &four()}) {
        const std::size_t D = static_cast<std::size_t>(ws->h->dim());
        std::vector<std::vector<FieldElem>> iw;
        for (const auto& w : ws->W) {
            std::vector<FieldElem> v;
            for (const auto& x : w) v.push_back(x.iota());
            iw.push_back(v);
        }
        EXPECT_EQ(KSub::span(D, ws->W).intersect(KSub::span(D, iw)).dim(), 0u);
    }
}

TEST(Weil, Dimensions)
{
    // dim B = 2^{e/2}, dim HW = e, dim Xi(K_-) = e/2
    EXPECT_EQ(six().B.size(), 2u);
    EXPECT_EQ(six().HW.size(), 2u);
    EXPECT_EQ(six().A2.size(), 1u);
    EXPECT_EQ(four().B.size(), 4u);
    EXPECT_EQ(four().HW.size(), 4u);
    EXPECT_EQ(four().A2.size(), 2u);
    EXPECT_EQ(six().d, 6);
    EXPECT_EQ(four().d, 2);
}

TEST(Weil, LieAlgebraDimension)
{
    // (e/2)(d^2 - 1): special unitary factors, one per CM pair
    EXPECT_EQ(six().gB.size(), 35u);
    EXPECT_EQ(four().gB.size(), 6u);
}

TEST(Weil, TypeSubspacesIntersectTrivially)
{
    const WeilStructure& ws = six();
    ASSERT_EQ(ws.types.size(), 2u);
    EXPECT_EQ(ws.WT[0].intersect(ws.WT[1]).dim(), 0u);
    EXPECT_EQ(ws.WT[0].dim(), 6u);
}

TEST(Weil, XiIsAlternating)
{
    for (const WeilStructure* ws : {&six(), &four()})
        for (const auto& m : ws->xi_matrix)
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) EXPECT_EQ(m(i, j), -m(j, i));
}

TEST(Weil, HermitianSymmetry)
{
    const WeilStructure& ws = four();
    const FieldElem t = FieldElem::sqrt_minus_q(ws.tower);
    const std::size_t D = static_cast<std::size_t>(ws.h->dim());
    std::vector<Rational> x(D, Rational(0)), y(D, Rational(0));
    x[0] = 1;
    x[5] = 2;
    y[1] = -1;
    y[6] = 3;
    y[3] = 1;
    EXPECT_EQ(hermitian_form(ws, t, y, x), hermitian_form(ws, t, x, y).iota());
}

TEST(Weil, SplitType)
{
    const auto s6 = split_check(six(), FieldElem::sqrt_minus_q(six().tower));
    EXPECT_TRUE(s6.found);
    EXPECT_EQ(s6.k_dim, 3u);
    const auto s4 = split_check(four(), FieldElem::sqrt_minus_q(four().tower));
    EXPECT_TRUE(s4.found);
    EXPECT_EQ(s4.k_dim, 1u);
}

TEST(Weil, OddInvariantsVanish)
{
    const auto r = invariants_and_generation(four(), 3);
    EXPECT_EQ(r.invariant_dim, 0u);
    const auto r2 = invariants_and_generation(four(), 2);
    EXPECT_TRUE(r2.certified_equal);
    EXPECT_EQ(r2.generated_dim, r2.invariant_dim);
}

TEST(Weil, RejectsDegenerateTheta)
{
    WeilDatum d = preset_datum("sixfold-q2");
    for (auto& row : d.theta)
        for (auto& c : row) c = FCoeff{};
    EXPECT_THROW(build_weil(d), DatumError);
}
