#include "suite.hpp"

#include <unordered_map>

namespace spinweil::suite {

namespace {

const char* kSpinor = "the element $\\exp(\\sqrt{-q}\\Theta)$ is an even pure spinor corresponding to a maximal isotropic";
const char* kRhoG = "$\\rho_g(y_j)=(-\\sqrt{-q}(y_j\\rfloor \\Theta),y_j)$";
const char* kAdjoint = "The endomorphism $\\eta_{\\iota(t)}$ is the adjoint of $\\eta_t$";
const char* kCap = "$W_T\\cap W_{T'}=\\oplus_{\\hat{\\sigma}\\in T\\cap T'}V_{T(\\hat{\\sigma})}$";
const char* kB = "of dimension $2^{e/2}$";
const char* kXi = "$\\Xi(K_-)$ is an $e/2$-dimensional subspace";
const char* kHerm = "Then $H_t$ is a ${\\rm Spin}(V_{\\mathbb Q})_B$-invariant hermitian form.";
const char* kSplit = "$H_t$ is of split-type";
const char* kSplitValue = "(\\hat{\\eta}_{t\\sqrt{-q}}(-y_j\\rfloor\\Theta,0),(0,y_k))_V=-t\\sqrt{-q}\\Theta(y_j,y_k)";
const char* kHW = "is an $e$-dimensional subspace";
const char* kSU = "maps ${\\rm Spin}(V_{\\mathbb R})_B$ isomorphically onto $\\prod_{\\hat{\\sigma}\\in\\hat{\\Sigma}}SU(V_{\\hat{\\sigma},{\\mathbb R}})$";
const char* kCommute = "consisting of elements commuting with $\\eta(K)$";
const char* kBB1 = "In particular, $\\dim(BB_1)=e2^{(\\frac{e}{2}-1)}$.";
const char* kA = "The subalgebra ${\\mathcal A}$ is generated by $\\Xi(K_-)$ and $HW(X\\times\\hat{X},\\eta)$.";

KVec scale(const KVec& v, const FieldElem& s)
{
    KVec out = v;
    for (auto& x : out) x *= s;
    return out;
}

Rational bilinear(const RMat& m, const RVec& v, const RVec& w)
{
    Rational acc = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j)
            if (sgn(v[i]) != 0 && sgn(w[j]) != 0) acc += v[i] * m(i, j) * w[j];
    return acc;
}

bool alternating(const RMat& m)
{
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (sgn(m(i, i)) != 0) return false;
        for (std::size_t j = 0; j < i; ++j)
            if (m(i, j) != -m(j, i)) return false;
    }
    return true;
}

template <class S>
std::vector<S> coords(const Multivector<S>& a, const std::unordered_map<Mask, std::size_t>& index, std::size_t size)
{
    std::vector<S> v(size, S(0));
    for (const auto& [m, c] : a.terms()) {
        auto it = index.find(m);
        if (it == index.end()) throw std::invalid_argument("coordinates: term outside the chosen degree");
        v[it->second] = c;
    }
    return v;
}

std::unordered_map<Mask, std::size_t> mask_index(const std::vector<Mask>& masks)
{
    std::unordered_map<Mask, std::size_t> idx;
    for (std::size_t i = 0; i < masks.size(); ++i) idx[masks[i]] = i;
    return idx;
}

KMV vector_mv(const HyperbolicSpace& h, const KVec& v)
{
    KMV g(h.V);
    for (std::size_t i = 0; i < v.size(); ++i) g.add_term(Mask{1} << i, v[i]);
    return g;
}

std::size_t character_index(const WeilStructure& ws, const Embedding& s)
{
    for (std::size_t i = 0; i < ws.characters.size(); ++i)
        if (ws.characters[i] == s) return i;
    throw std::logic_error("unknown character");
}

Outcome weil_spinor(Context& c, Rng&)
{
    const WeilStructure& ws = c.ws;
    Tally tl;
    const FieldElem sq = FieldElem::sqrt_minus_q(ws.tower);
    const KMV th = to_field(ws.theta) * sq;
    KMV sum = KMV::scalar(ws.h->S, FieldElem(1)), pw = sum;
    for (int k = 1; k <= ws.h->N(); ++k) {
        pw = wedge(pw, th) * FieldElem(frac(1, k));
        sum += pw;
    }
    tl.expect(sum == ws.spinor, "spinor = sum (sqrt(-q) Theta)^k / k!");
    tl.expect(to_field(ws.alpha) + to_field(ws.beta) * sq == ws.spinor, "spinor = alpha + sqrt(-q) beta");
    return finish(tl, {{"alpha", mv_json(ws.alpha)}, {"beta", mv_json(ws.beta)}});
}

Outcome weil_W(Context& c, Rng&)
{
    const WeilStructure& ws = c.ws;
    const HyperbolicSpace& h = *ws.h;
    Tally tl;
    const FieldElem sq = FieldElem::sqrt_minus_q(ws.tower);
    const std::size_t D = static_cast<std::size_t>(h.dim()), N = static_cast<std::size_t>(h.N());
    std::vector<KVec> explicit_w;
    for (std::size_t k = 0; k < N; ++k) {
        KVec w(D, FieldElem(0));
        for (std::size_t g = 0; g < N; ++g) w[g] = -sq * FieldElem(ws.theta_sharp(g, k));
        w[N + k] = FieldElem(1);
        tl.expect(vector_action(h, w, ws.spinor).is_zero(), "(-sqrt(-q) y_k -| Theta, y_k) kills the spinor");
        explicit_w.push_back(std::move(w));
    }
    tl.expect(is_isotropic(h, explicit_w), "W isotropic");
    tl.expect(same_span(KSub::span(D, explicit_w), KSub::span(D, ws.W)), "W = span of the explicit vectors");
    tl.expect(KSub::span(D, explicit_w).dim() == N, "dim W = 2n");
    return finish(tl, {{"dim", N}});
}

Outcome weil_eta(Context& c, Rng& rng)
{
    const WeilStructure& ws = c.ws;
    const HyperbolicSpace& h = *ws.h;
    const std::size_t D = static_cast<std::size_t>(h.dim());
    Tally tl;
    const RMat I = RMat::identity(D);
    tl.expect(ws.eta_q * ws.eta_q == I.scaled(-ws.tower->q()), "eta(sqrt(-q))^2 = -q");
    tl.expect(ws.eta_p * ws.eta_p == I.scaled(Rational(ws.tower->p())), "eta(sqrt(p))^2 = p");
    tl.expect(ws.eta_p * ws.eta_q == ws.eta_q * ws.eta_p, "eta(sqrt p), eta(sqrt -q) commute");
    tl.expect(ws.eta(FieldElem(ws.tower, 1)) == I, "eta(1) = id");
    tl.expect(eta_q_by_decomposition(ws) == ws.eta_q, "eta(sqrt(-q)) agrees with the V_K = W + iota(W) construction");
    for (int s = 0; s < 10; ++s) {
        const FieldElem a = rng.field(ws.tower), b = rng.field(ws.tower);
        tl.expect(ws.eta(a * b) == ws.eta(a) * ws.eta(b), "eta multiplicative");
        tl.expect(ws.eta(a + b) == ws.eta(a) + ws.eta(b), "eta additive");
        const RVec v = rng.vec(D), w = rng.vec(D);
        tl.expect(h.pair(ws.eta(a).apply(v), w) == h.pair(v, ws.eta(a.iota()).apply(w)), "(eta_t v, w) = (v, eta_{iota t} w)");
    }
    const KSub W = KSub::span(D, ws.W);
    for (const RMat* E : {&ws.eta_q, &ws.eta_p})
        for (const auto& w : ws.W) tl.expect(W.contains(kmul(*E, w)), "W is eta(K)-stable");
    return finish(tl);
}

Outcome weil_eigenspaces(Context& c, Rng& rng)
{
    const WeilStructure& ws = c.ws;
    const std::size_t D = static_cast<std::size_t>(ws.h->dim());
    Tally tl;
    KSub total(D);
    for (std::size_t i = 0; i < ws.characters.size(); ++i) {
        tl.expect(ws.V_sigma[i].dim() == static_cast<std::size_t>(ws.d), "dim V_sigma = d");
        total = total.sum(ws.V_sigma[i]);
        for (int s = 0; s < 3; ++s) {
            const FieldElem t = rng.field(ws.tower);
            const RMat Et = ws.eta(t);
            for (const auto& v : ws.V_sigma[i].basis())
                tl.expect(kmul(Et, v) == scale(v, t.apply(ws.characters[i])), "eta_t acts on V_sigma by sigma(t)");
        }
    }
    tl.expect(total.dim() == D, "V_K is the sum of the V_sigma");
    json caps = json::array();
    for (std::size_t T = 0; T < ws.types.size(); ++T)
        for (std::size_t U = 0; U < ws.types.size(); ++U) {
            const KSub I = ws.WT[T].intersect(ws.WT[U]);
            KSub expect(D);
            const auto mt = ws.types[T].members(), mu = ws.types[U].members();
            for (const auto& s : mt)
                if (std::find(mu.begin(), mu.end(), s) != mu.end()) expect = expect.sum(ws.V_sigma[character_index(ws, s)]);
            tl.expect(same_span(I, expect), "W_T cap W_T' = sum of V_sigma over T cap T'");
            caps.push_back({ws.types[T].str(), ws.types[U].str(), I.dim()});
        }
    if (ws.e == 2) {
        const KSub W = KSub::span(D, ws.W);
        std::vector<KVec> iw;
        for (const auto& w : ws.W) iw.push_back(iota(w));
        const KSub IW = KSub::span(D, iw);
        bool found = false;
        for (std::size_t T = 0; T < ws.types.size(); ++T) {
            if (!same_span(ws.WT[T], W)) continue;
            found = true;
            const CMType bar = ws.types[T].conjugate();
            for (std::size_t U = 0; U < ws.types.size(); ++U)
                if (ws.types[U] == bar) tl.expect(same_span(ws.WT[U], IW), "W_{Tbar} = iota(W)");
        }
        tl.expect(found, "W is one of the W_T");
    }
    return finish(tl, {{"intersection_dims", caps}});
}

Outcome weil_B(Context& c, Rng&)
{
    const WeilStructure& ws = c.ws;
    Tally tl;
    const std::size_t want = std::size_t{1} << (ws.e / 2);
    tl.expect(ws.B.size() == want, "dim B = 2^{e/2}");
    for (const auto& b : ws.B) tl.expect(parity(b) == 1, "B is even");
    const BBData& bb = c.bb();
    tl.expect(bb.L.rows() == ws.types.size(), "every ell_T lies in B_K");
    if (ws.e == 2) {
        tl.expect(b_coords(ws, ws.alpha).has_value() && b_coords(ws, ws.beta).has_value(), "alpha, beta in B");
        tl.expect(rank(RMat::from_rows({spinor_coords(ws.alpha), spinor_coords(ws.beta)}, std::size_t{1} << ws.h->N())) == 2,
                  "alpha, beta independent");
    }
    json basis = json::array();
    for (const auto& b : ws.B) basis.push_back(mv_json(b));
    return finish(tl, {{"dim", ws.B.size()}, {"basis", basis}});
}

Outcome weil_xi(Context& c, Rng& rng)
{
    const WeilStructure& ws = c.ws;
    const HyperbolicSpace& h = *ws.h;
    const std::size_t D = static_cast<std::size_t>(h.dim());
    Tally tl;
    for (std::size_t i = 0; i < ws.k_minus.size(); ++i) {
        tl.expect(alternating(ws.xi_matrix[i]), "Xi_t alternating");
        tl.expect(form_to_bivector(h, ws.xi_matrix[i]) == ws.A2[i], "A2 is the bivector of Xi_t");
    }
    for (int s = 0; s < 8; ++s) {
        const FieldElem t = rng.k_minus(ws.tower), u = rng.k_minus(ws.tower);
        const RMat X = xi_form(ws, t);
        tl.expect(alternating(X), "Xi_t alternating for random t");
        tl.expect(xi_form(ws, t + u) == X + xi_form(ws, u), "Xi is additive in t");
        const RVec v = rng.vec(D), w = rng.vec(D);
        tl.expect(bilinear(X, v, w) == h.pair(ws.eta(t).apply(v), w), "Xi_t(v, w) = (eta_t v, w)");
    }
    const auto masks = degree_masks(h.dim(), 2);
    const auto idx = mask_index(masks);
    std::vector<RVec> rows;
    for (const auto& a : ws.A2) rows.push_back(coords(a, idx, masks.size()));
    const std::size_t r = RSub::span(masks.size(), rows).dim();
    tl.expect(r == static_cast<std::size_t>(ws.e / 2), "dim Xi(K_-) = e/2");
    return finish(tl, {{"dim", r}});
}

Outcome weil_hermitian(Context& c, Rng& rng)
{
    const WeilStructure& ws = c.ws;
    const HyperbolicSpace& h = *ws.h;
    const std::size_t D = static_cast<std::size_t>(h.dim());
    Tally tl;
    for (int k = 0; k < 8; ++k) {
        const FieldElem t = rng.k_minus(ws.tower), s = rng.field(ws.tower);
        const RVec x = rng.vec(D), y = rng.vec(D);
        const RMat Es = ws.eta(s);
        const FieldElem H = hermitian_form(ws, t, x, y);
        tl.expect(hermitian_form(ws, t, Es.apply(x), y) == s.iota() * H, "H_t(eta_s x, y) = iota(s) H_t(x, y)");
        tl.expect(hermitian_form(ws, t, x, Es.apply(y)) == s * H, "H_t(x, eta_s y) = s H_t(x, y)");
        tl.expect(hermitian_form(ws, t, y, x) == H.iota(), "H_t(y, x) = iota(H_t(x, y))");
        const RVec z = rng.vec(D);
        RVec xz(D);
        for (std::size_t i = 0; i < D; ++i) xz[i] = x[i] + z[i];
        tl.expect(hermitian_form(ws, t, xz, y) == H + hermitian_form(ws, t, z, y), "H_t additive");
    }
    for (std::size_t i = 0; i < ws.gB.size(); ++i) {
        const auto sp = so_pair(h, ws.gB[i]);
        const FieldElem t = ws.k_minus[0];
        const RVec x = rng.vec(D), y = rng.vec(D);
        tl.expect((hermitian_form(ws, t, sp.ad.apply(x), y) + hermitian_form(ws, t, x, sp.ad.apply(y))).is_zero(),
                  "H_t is g_B-invariant");
    }
    return finish(tl, {{"linearity", "iota-semilinear in the first argument, K-linear in the second"}});
}

Outcome weil_split(Context& c, Rng& rng)
{
    const WeilStructure& ws = c.ws;
    Tally tl;
    json wit = json::array();
    for (int s = 0; s < 3; ++s) {
        const FieldElem t = s == 0 ? ws.k_minus[0] : rng.k_minus(ws.tower);
        const SplitWitness sw = split_check(ws, t);
        tl.expect(sw.found, "split witness found");
        tl.expect(sw.k_dim == static_cast<std::size_t>(ws.d / 2), "K-dimension of Z is d/2");
        for (const auto& a : sw.z_basis)
            for (const auto& b : sw.z_basis) tl.expect(hermitian_form(ws, t, a, b).is_zero(), "Z is H_t-isotropic");
        wit.push_back({{"t", field_json(t)}, {"y", sw.y_indices}, {"k_dim", sw.k_dim}});
    }
    return finish(tl, {{"witnesses", wit}});
}

// Xi_t((0,y_j),(0,y_k)) = tr_F(-t sqrt(-q) Theta(y_j, y_k)); with -t sqrt(-q) = q (a + b sqrt p) the right side is
// q Theta(a y_j + b eta_hat^T y_j, y_k) on the trace form.
Outcome weil_split_value(Context& c, Rng& rng)
{
    const WeilStructure& ws = c.ws;
    const int N = ws.h->N();
    Tally tl;
    const Rational q = ws.tower->q();
    for (int s = 0; s < 4; ++s) {
        const FieldElem t = s == 0 ? ws.k_minus[0] : rng.k_minus(ws.tower);
        const Rational a = t[2], b = t[3];
        const RMat X = xi_form(ws, t);
        for (int j = 0; j < N; ++j)
            for (int k = 0; k < N; ++k) {
                Rational rhs = a * theta_on_y(ws, j, k);
                if (sgn(b) != 0)
                    for (int i = 0; i < N; ++i) {
                        const Rational& e = ws.datum.eta_hat(static_cast<std::size_t>(j), static_cast<std::size_t>(i));
                        if (sgn(e) != 0) rhs += b * e * theta_on_y(ws, i, k);
                    }
                rhs *= q;
                tl.expect(X(static_cast<std::size_t>(N + j), static_cast<std::size_t>(N + k)) == rhs,
                          "Xi_t(y_j, y_k) = -t sqrt(-q) Theta(y_j, y_k)");
            }
    }
    return finish(tl);
}

Outcome weil_HW(Context& c, Rng&)
{
    const WeilStructure& ws = c.ws;
    const HyperbolicSpace& h = *ws.h;
    Tally tl;
    tl.expect(ws.HW.size() == static_cast<std::size_t>(ws.e), "dim HW = e");
    const auto masks = degree_masks(h.dim(), ws.d);
    const auto idx = mask_index(masks);
    std::vector<KVec> hw;
    for (const auto& w : ws.HW) hw.push_back(to_field(coords(w, idx, masks.size())));
    const KSub HWK = KSub::span(masks.size(), hw);
    std::vector<KVec> tops;
    for (const auto& V : ws.V_sigma) {
        KMV w = KMV::scalar(h.V, FieldElem(1));
        for (const auto& v : V.basis()) w = wedge(w, vector_mv(h, v));
        tops.push_back(coords(w, idx, masks.size()));
        tl.expect(HWK.contains(tops.back()), "wedge^d V_sigma lies in HW_K");
    }
    tl.expect(KSub::span(masks.size(), tops).dim() == static_cast<std::size_t>(ws.e), "the lines wedge^d V_sigma span HW_K");
    return finish(tl, {{"dim", ws.HW.size()}});
}

Outcome weil_gB_dim(Context& c, Rng&)
{
    const WeilStructure& ws = c.ws;
    Tally tl;
    const std::size_t want = static_cast<std::size_t>(ws.e / 2) * static_cast<std::size_t>(ws.d * ws.d - 1);
    tl.expect(ws.gB.size() == want, "dim g_B = (e/2)(d^2 - 1)");
    return finish(tl, {{"dim", ws.gB.size()}, {"expected", want}});
}

Outcome weil_gB_action(Context& c, Rng&)
{
    const WeilStructure& ws = c.ws;
    const HyperbolicSpace& h = *ws.h;
    Tally tl;
    for (const auto& xi : ws.gB) {
        const auto sp = so_pair(h, xi);
        for (const auto& b : ws.B) tl.expect(spin_action(h, sp, b).is_zero(), "m_xi kills B");
        tl.expect(sp.ad * ws.eta_q == ws.eta_q * sp.ad && sp.ad * ws.eta_p == ws.eta_p * sp.ad, "[ad_xi, eta] = 0");
        for (const auto& W : ws.WT)
            for (const auto& w : W.basis()) tl.expect(W.contains(kmul(sp.ad, w)), "ad_xi preserves W_T");
        for (const auto& v : ws.HW) tl.expect(derivation(sp.ad, v).is_zero(), "D_xi kills HW");
        for (const auto& a : ws.A2) tl.expect(derivation(sp.ad, a).is_zero(), "D_xi kills Xi(K_-)");
    }
    return finish(tl, {{"elements", ws.gB.size()}});
}

Outcome weil_dimensions(Context& c, Rng&)
{
    const WeilStructure& ws = c.ws;
    Tally tl;
    const BBData& bb = c.bb();
    const std::size_t half = static_cast<std::size_t>(ws.e / 2);
    const std::size_t bb1 = bb.BB.size() > 1 ? bb.BB[1].dim() : 0;
    tl.expect(ws.B.size() == (std::size_t{1} << half), "dim B = 2^{e/2}");
    tl.expect(bb1 == static_cast<std::size_t>(ws.e) * (std::size_t{1} << (half - 1)), "dim BB_1 = e 2^{e/2 - 1}");
    tl.expect(ws.HW.size() == static_cast<std::size_t>(ws.e), "dim HW = e");
    tl.expect(ws.A2.size() == half, "dim Xi(K_-) = e/2");
    return finish(tl, {{"B", ws.B.size()}, {"BB1", bb1}, {"HW", ws.HW.size()}, {"XiK", ws.A2.size()}});
}

Outcome weil_invariants(Context& c, Rng&)
{
    const WeilStructure& ws = c.ws;
    Tally tl;
    json rows = json::array();
    for (int k = 0; k <= ws.h->dim(); ++k) {
        const InvariantDegree r = invariants_and_generation(ws, k);
        tl.expect(r.generators_invariant, "generated classes are invariant in degree " + std::to_string(k));
        tl.expect(r.certified_equal, "invariants = generated in degree " + std::to_string(k));
        rows.push_back({{"k", k},
                        {"wedge_dim", r.wedge_dim},
                        {"generated_dim", r.generated_dim},
                        {"invariant_dim", r.invariant_dim},
                        {"certified", r.certified_equal},
                        {"reconstructed", r.reconstructed}});
    }
    return finish(tl, {{"degrees", rows}});
}

}  // namespace

void weil_checks(std::vector<Declared>& out)
{
    out.push_back({"weil.spinor", kSpinor, weil_spinor});
    out.push_back({"weil.W", kRhoG, weil_W});
    out.push_back({"weil.eta", kAdjoint, weil_eta});
    out.push_back({"weil.eigenspaces", kCap, weil_eigenspaces});
    out.push_back({"weil.B", kB, weil_B});
    out.push_back({"weil.xi", kXi, weil_xi});
    out.push_back({"weil.hermitian", kHerm, weil_hermitian});
    out.push_back({"weil.split", kSplit, weil_split});
    out.push_back({"weil.split_value", kSplitValue, weil_split_value});
    out.push_back({"weil.HW", kHW, weil_HW});
    out.push_back({"weil.gB_dim", kSU, weil_gB_dim});
    out.push_back({"weil.gB_action", kCommute, weil_gB_action});
    out.push_back({"weil.dimensions", kBB1, weil_dimensions});
    out.push_back({"weil.invariants", kA, weil_invariants});
}

}  // namespace spinweil::suite
