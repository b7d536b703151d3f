#include <spinweil/secant.hpp>

#include <gtest/gtest.h>

using namespace spinweil;
using nlohmann::json;

namespace {

const WeilStructure& ws_for(int q)
{
    static std::map<int, WeilStructure> cache;
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, build_weil(preset_datum("sixfold-q" + std::to_string(q)))).first;
    return it->second;
}

RMV theta3(const SpacePtr& sp)
{
    RMV th(sp);
    for (int i = 0; i < 3; ++i) th.add_term((Mask{1} << i) | (Mask{1} << (i + 3)), 1);
    return th;
}

json good_datum() { return datum_to_json(preset_datum("fourfold-rm2")); }

}  // namespace

TEST(Secant, ChernCharacterAtQ2)
{
    const WeilStructure& ws = ws_for(2);
    const RMV th = theta3(ws.h->S), t2 = wedge(th, th), t3 = wedge(t2, th);
    const SheafClass c = preset_ch_ideal_curves(ws);
    EXPECT_EQ(c.ch, RMV::scalar(ws.h->S, 1) + th - t2 - t3 * frac(1, 3));
    EXPECT_EQ(dualize(c).ch, ws.alpha - ws.beta);
    EXPECT_TRUE(b_coords(ws, dualize(c).ch).has_value());
    EXPECT_FALSE(b_coords(ws, th).has_value());
}

// Values from an independent Fraction-based prototype of the same transform.
TEST(Secant, RankIsEightQ)
{
    for (int q : {2, 3, 5}) {
        const WeilStructure& ws = ws_for(q);
        const SheafClass c1 = preset_ch_ideal_curves(ws);
        const RMV G = transform_pair(ws, c1, c1, PairVariant::G);
        EXPECT_EQ(G.coeff(0), Rational(-8 * q)) << "q = " << q;
        const RMV E = transform_pair(ws, c1, dualize(c1), PairVariant::E);
        EXPECT_EQ(E, G);
        // the pair F2 = F1 has rank zero
        EXPECT_EQ(transform_pair(ws, c1, c1, PairVariant::E).coeff(0), Rational(0));
    }
}

TEST(Secant, KappaNeedsRank)
{
    const SpacePtr S = hyperbolic(1).S;
    EXPECT_THROW(kappa(RMV::basis(S, 0b11)), ZeroRank);
    const RMV k = kappa(RMV::scalar(S, 2) + RMV::basis(S, 0b11) * Rational(4));
    EXPECT_EQ(k, RMV::scalar(S, 2));
}

TEST(Secant, HeadlineDecomposition)
{
    const WeilStructure& ws = ws_for(2);
    const SheafClass c1 = preset_ch_ideal_curves(ws);
    const RMV E = transform_pair(ws, c1, dualize(c1), PairVariant::E);
    const RMV k = kappa(E);
    const KappaSplit s = decompose_kappa(ws, degree_part(k, ws.d));
    EXPECT_TRUE(s.direct);
    EXPECT_TRUE(s.member);
    EXPECT_FALSE(s.gamma.is_zero());
    EXPECT_EQ(s.gamma + s.delta, degree_part(k, ws.d));
}

TEST(Secant, NonvanishingCriterion)
{
    const WeilStructure& ws = ws_for(2);
    const BBData bb = bb_data(ws);
    const SheafClass c1 = preset_ch_ideal_curves(ws);
    EXPECT_TRUE(nonvanish_criterion(ws, bb, c1, dualize(c1)).value);
    // 2(alpha (x) alpha + q beta (x) beta) lies in BB_0
    RMat deg(2, 2);
    deg(0, 0) = 2;
    deg(1, 1) = 4;
    const auto nv = nonvanish_on(ws, bb, deg);
    EXPECT_FALSE(nv.value);
    EXPECT_FALSE(nv.gamma1_nonzero);
}

TEST(Report, ParseRoundTrip)
{
    const WeilDatum d = parse_datum(good_datum());
    const WeilDatum p = preset_datum("fourfold-rm2");
    EXPECT_EQ(d.n, p.n);
    EXPECT_EQ(d.tower, p.tower);
    EXPECT_EQ(d.eta_hat, p.eta_hat);
    EXPECT_EQ(d.theta, p.theta);
}

TEST(Report, RationalForms)
{
    json j = good_datum();
    j["tower"]["q"] = "3/2";
    EXPECT_EQ(parse_datum(j).tower.q, frac(3, 2));
    j["tower"]["q"] = {{"num", 5}, {"den", 1}};
    EXPECT_EQ(parse_datum(j).tower.q, Rational(5));
}

TEST(Report, SchemaErrorsCarryPaths)
{
    json j = good_datum();
    j["tower"].erase("q");
    try {
        parse_datum(j);
        FAIL() << "missing q accepted";
    } catch (const SchemaError& e) {
        EXPECT_EQ(e.path, "/tower/q");
    }
    j = good_datum();
    j["eta_hat"][1][2] = "x";
    try {
        parse_datum(j);
        FAIL() << "bad eta_hat entry accepted";
    } catch (const SchemaError& e) {
        EXPECT_EQ(e.path, "/eta_hat/1/2");
    }
    EXPECT_THROW(parse_datum(json::array()), SchemaError);
    j = good_datum();
    j["n"] = 9;
    EXPECT_THROW(parse_datum(j), SchemaError);
}

TEST(Report, FourfoldSuitePasses)
{
    const Report r = run_all("fourfold-rm2");
    EXPECT_EQ(r.failed(), 0);
    EXPECT_GT(r.passed(), 30);
    const json j = r.to_json();
    EXPECT_EQ(j["summary"]["pass"], r.passed());
    for (const auto& c : j["checks"]) {
        EXPECT_TRUE(c.contains("name") && c.contains("anchor") && c.contains("status") && c.contains("witness"));
        EXPECT_EQ(c["name"].get<std::string>().rfind("secant.", 0), std::string::npos);
    }
}

TEST(Report, FilterAndSeed)
{
    RunOptions o;
    o.filter = "tower.";
    o.seed = 11;
    const Report a = run_all("fourfold-rm2", o), b = run_all("fourfold-rm2", o);
    EXPECT_EQ(a.checks.size(), 3u);
    EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
}
