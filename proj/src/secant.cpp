#include <spinweil/secant.hpp>

#include <algorithm>
#include <unordered_map>

namespace spinweil {

SheafClass preset_ch_ideal_curves(const WeilStructure& ws)
{
    SheafClass c;
    c.ch = ws.alpha + ws.beta;
    c.label = "ch(F1)";
    return c;
}

SheafClass dualize(const SheafClass& c)
{
    return {tau(c.ch), c.label + "^vee"};
}

std::optional<std::vector<Rational>> b_coords(const WeilStructure& ws, const RMV& c)
{
    const std::size_t D = std::size_t{1} << ws.h->N(), m = ws.B.size();
    RMat M(D, m);
    for (std::size_t i = 0; i < m; ++i)
        for (const auto& [mask, v] : ws.B[i].terms()) M(mask, i) = v;
    return solve(M, spinor_coords(c));
}

RMV transform_pair(const WeilStructure& ws, const SheafClass& c1, const SheafClass& c2, PairVariant v)
{
    const ProductAlgebra& XX = product_XX(ws.n);
    const RMV boxed = v == PairVariant::E ? kunneth(c1.ch, tau(c2.ch), XX.joint) : kunneth(c2.ch, c1.ch, XX.joint);
    return orlov_phiH(ws.n).apply(boxed);
}

RMV kappa(const RMV& c)
{
    const Rational r = c.coeff(0);
    if (sgn(r) == 0) throw ZeroRank();
    const RMV c1 = degree_part(c, 2);
    return wedge(c, exp_even(c1 * Rational(-1 / r)));
}

namespace {

// Products of multisets of size r drawn from gens.
void sym_products(const std::vector<RMV>& gens, std::size_t start, int r, const RMV& acc, std::vector<RMV>& out)
{
    if (r == 0) {
        out.push_back(acc);
        return;
    }
    for (std::size_t i = start; i < gens.size(); ++i) sym_products(gens, i, r - 1, wedge(acc, gens[i]), out);
}

}  // namespace

KappaSplit decompose_kappa(const WeilStructure& ws, const RMV& kd)
{
    std::vector<RMV> sym;
    sym_products(ws.A2, 0, ws.d / 2, RMV::scalar(ws.h->V, 1), sym);
    const std::vector<Mask> masks = degree_masks(ws.h->dim(), ws.d);
    std::unordered_map<Mask, std::size_t> row;
    for (std::size_t i = 0; i < masks.size(); ++i) row[masks[i]] = i;
    const std::size_t nh = ws.HW.size(), ns = sym.size();
    RMat M(masks.size(), nh + ns);
    auto fill = [&](const RMV& v, std::size_t col) {
        for (const auto& [m, c] : v.terms()) {
            auto it = row.find(m);
            if (it == row.end()) throw std::invalid_argument("decompose_kappa: generator outside the middle degree");
            M(it->second, col) = c;
        }
    };
    for (std::size_t i = 0; i < nh; ++i) fill(ws.HW[i], i);
    for (std::size_t j = 0; j < ns; ++j) fill(sym[j], nh + j);

    KappaSplit out;
    out.gamma = RMV(ws.h->V);
    out.delta = RMV(ws.h->V);
    out.direct = rank(M) == nh + ns;
    std::vector<Rational> rhs(masks.size(), Rational(0));
    for (const auto& [m, c] : kd.terms()) {
        auto it = row.find(m);
        if (it == row.end()) return out;
        rhs[it->second] = c;
    }
    const auto x = solve(M, rhs);
    if (!x) return out;
    out.member = true;
    out.hw_coords.assign(x->begin(), x->begin() + static_cast<long>(nh));
    out.sym_coords.assign(x->begin() + static_cast<long>(nh), x->end());
    for (std::size_t i = 0; i < nh; ++i) out.gamma += ws.HW[i] * out.hw_coords[i];
    for (std::size_t j = 0; j < ns; ++j) out.delta += sym[j] * out.sym_coords[j];
    return out;
}

Nonvanishing nonvanish_on(const WeilStructure& ws, const BBData& bb, const RMat& c)
{
    const BBDecomposition dec = bb_decompose(ws, bb, c);
    const std::size_t t = ws.types.size();
    Nonvanishing out;
    for (std::size_t T = 0; T < t; ++T)
        for (std::size_t U = 0; U < t; ++U)
            if (bb.overlap[T][U] == 1 && !dec.gamma_TT[T][U].is_zero()) out.gamma1_nonzero = true;
    for (const Embedding& sigma : ws.characters) {
        KMV sum(ws.h->V);
        for (std::size_t T = 0; T < t; ++T)
            for (std::size_t U = 0; U < t; ++U) {
                if (bb.overlap[T][U] != 1 || dec.gamma_TT[T][U].is_zero()) continue;
                const auto mt = ws.types[T].members(), mu = ws.types[U].members();
                if (std::find(mt.begin(), mt.end(), sigma) == mt.end() || std::find(mu.begin(), mu.end(), sigma) == mu.end())
                    continue;
                sum += Pi_TT(ws, T, U) * dec.gamma_TT[T][U];
            }
        out.per_character.push_back(!sum.is_zero());
        if (!sum.is_zero()) out.value = true;
    }
    return out;
}

Nonvanishing nonvanish_criterion(const WeilStructure& ws, const BBData& bb, const SheafClass& c1, const SheafClass& c2)
{
    const auto a = b_coords(ws, c1.ch), b = b_coords(ws, c2.ch);
    if (!a || !b) throw std::invalid_argument("nonvanish_criterion: class outside the secant space");
    RMat c(bb.m, bb.m);
    for (std::size_t i = 0; i < bb.m; ++i)
        for (std::size_t j = 0; j < bb.m; ++j) c(i, j) = (*a)[i] * (*b)[j];
    return nonvanish_on(ws, bb, c);
}

std::string rat_str(const Rational& r) { return to_string(r); }

nlohmann::json field_json(const FieldElem& a)
{
    if (a.is_rational()) return rat_str(a.to_rational());
    return nlohmann::json::array({rat_str(a[0]), rat_str(a[1]), rat_str(a[2]), rat_str(a[3])});
}

nlohmann::json mv_json(const RMV& a)
{
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [m, c] : a.terms()) out[mask_label(*a.space(), m)] = rat_str(c);
    return out;
}

}  // namespace spinweil
