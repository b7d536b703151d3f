#include "suite.hpp"

#include <unordered_map>

namespace spinweil::suite {

namespace {

const char* kKernel = "be the integral transform with Fourier-Mukai kernel";
const char* kPoincare = "normalized so that it restricts trivially to $\\hat{X}\\times\\{0\\}$";
const char* kAutoEq = "So $\\Phi^{-1}$ encodes the fact that $X\\times\\hat{X}$ is a subgroup of the group of auto-equivalences of $D^b(X)$.";
const char* kOrlov = "is the inverse of $\\mu_*\\circ (id\\times\\Phi_\\P):D^b(X\\times\\hat{X})\\rightarrow D^b(X\\times X)$";
const char* kIntegral = "is an integral isomorphism";
const char* kExtreme = "$\\ell_{H^1(\\hat{X},\\bullet)}=H^0(X,\\bullet)$";
const char* kEquivariant = "is ${\\rm Spin}(V)$-equivariant.";
const char* kChevalley = "an isomorphism $\\tilde{\\varphi}:S\\otimes_{\\mathbb Z} S\\rightarrow \\wedge^*V$ Chevalley constructs";
const char* kFiltration = "belongs to $F_{dk}(V_{\\mathbb C}):=\\oplus_{i\\geq dk}(\\wedge^iV_{\\mathbb C})$";
const char* kLine = "it projects onto the line $\\wedge^{dk}[W_T\\cap W_{T'}]$ in $\\wedge^{dk}V_{\\mathbb C}$";
const char* kBBk = "corresponds to a subspace $BB_k\\subset B\\otimes_{\\mathbb Q} B$ of dimension $\\Choose{e/2}{k}2^{e/2}$";
const char* kPi = "the subspace $HW(X\\times\\hat{X},\\eta)$ is equal to the image of the composition";
const char* kCh = "one checks that $ch(F_1)=(1-\\frac{q}{2}\\Theta^2)+(\\Theta-\\frac{q}{3!}\\Theta^3)$";
const char* kDual = "Note that $ch(F_i^\\vee)=\\alpha-\\beta$ is in $B$ as well";
const char* kRank = "is a reflexive sheaf of rank $8q$";
const char* kERank = "Assume that the rank of the object $E:=\\Phi(F_1\\boxtimes F_2^{\\vee})\\in D^b(X\\times\\hat{X})$ is non-zero.";
const char* kBB0 = "requires that $ch(F_1)\\otimes ch(F_2)$ does not belong to the $2$-dimensional subspace";
const char* kKappa = "The class $\\kappa(E)$ is ${\\rm Spin}(V_{\\mathbb Q})_B$-invariant";
const char* kNotImage = "does not belong to the image of ${\\rm Sym}^{d/2}{\\mathcal A}^2$";
const char* kSum = "\\sum_{(T,T') \\ : \\ T\\cap T'=\\{\\sigma\\}}\\Pi( \\gamma_{T,T'})\\neq 0";

Rational sign_pow(int k) { return Rational((k & 1) ? -1 : 1); }

long binom(long n, long k)
{
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// ---- transforms

Outcome fm_pushforward(Context&, Rng& rng)
{
    Tally tl;
    const int n = 2;
    const ProductAlgebra& XX = product_XX(n);
    const SpacePtr A = XX.factors[0], Bsp = XX.factors[1];
    const RMV topA = RMV::basis(A, full_mask(A->arity()));
    for (int s = 0; s < 10; ++s) {
        const RMV b = rng.mv(Bsp, 3);
        const RMV both = wedge(pullback_factor(XX, 0, topA), pullback_factor(XX, 1, b));
        tl.expect(pushforward_factor(XX, both, 0, Bsp) == b, "push(top_A ^ b) = b");
        tl.expect(pushforward_factor(XX, pullback_factor(XX, 1, b), 0, Bsp).is_zero(), "push(b) = 0 without top_A");
        const RMV a = rng.mv(XX.joint, 6), cc = rng.mv(Bsp, 2);
        tl.expect(pushforward_factor(XX, wedge(pullback_factor(XX, 1, cc), a), 0, Bsp) == wedge(cc, pushforward_factor(XX, a, 0, Bsp)),
                  "projection formula");
    }
    bool threw = false;
    try {
        pushforward_factor(XX, RMV(XX.joint), 5, Bsp);
    } catch (const UndeclaredFactor&) {
        threw = true;
    }
    tl.expect(threw, "undeclared factor rejected");
    return finish(tl);
}

Outcome fm_poincare_check(Context&, Rng&)
{
    Tally tl;
    json tops = json::object();
    for (int n = 1; n <= 3; ++n) {
        const RMV c1 = poincare_class(n);
        const int N = 2 * n;
        for (const auto& [m, v] : c1.terms()) {
            tl.expect(popcount(m) == 2, "c1(P) has degree 2");
            tl.expect((m & full_mask(N)) != 0 && (m >> N) != 0, "c1(P) restricts trivially to each factor");
        }
        const RMV e = exp_even(c1);
        const Rational top = e.coeff(full_mask(2 * N));
        tl.expect(top == 1 || top == -1, "top of exp(c1(P)) integrates to +-1");
        tops[std::to_string(n)] = rat_str(top);
    }
    return finish(tl, {{"top_coefficient", tops}, {"c1_n1", mv_json(poincare_class(1))}});
}

Outcome fm_mukai(Context&, Rng&)
{
    Tally tl;
    json unit = json::object();
    for (int n = 1; n <= 2; ++n) {
        const HyperbolicSpace& h = hyperbolic(n);
        const auto tx = fm_poincare(n, FMDirection::ToX), th = fm_poincare(n, FMDirection::ToXhat);
        for (Mask m = 0; m <= full_mask(h.N()); ++m) {
            const Rational sg = sign_pow(n + popcount(m));
            const RMV s = RMV::basis(h.S, m), y = RMV::basis(hat_space(n), m);
            tl.expect(tx.apply(th.apply(s)) == s * sg, "Phi o Phi^ = (-1)^n antipode on H*(X)");
            tl.expect(th.apply(tx.apply(y)) == y * sg, "Phi^ o Phi = (-1)^n antipode on H*(X^)");
        }
        const RMV img = th.apply(RMV::scalar(h.S, 1));
        tl.expect(img.size() == 1 && img.terms().begin()->first == full_mask(h.N()), "Phi_P(1) is a multiple of the top class");
        unit[std::to_string(n)] = mv_json(img);
    }
    return finish(tl, {{"phi_of_1", unit}});
}

Outcome fm_orlov(Context& c, Rng& rng)
{
    Tally tl;
    const auto phi1 = orlov_phiH(1), psi1 = orlov_forward(1);
    const ProductAlgebra& XX1 = product_XX(1);
    const HyperbolicSpace& h1 = hyperbolic(1);
    for (Mask m = 0; m <= full_mask(2 * h1.N()); ++m) {
        const RMV a = RMV::basis(XX1.joint, m), b = RMV::basis(h1.V, m);
        tl.expect(psi1.apply(phi1.apply(a)) == a, "Psi o Phi^H = id at n = 1");
        tl.expect(phi1.apply(psi1.apply(b)) == b, "Phi^H o Psi = id at n = 1");
    }
    const RMV one = phi1.apply(kunneth(RMV::scalar(h1.S, 1), RMV::scalar(h1.S, 1), XX1.joint));
    tl.expect(one == RMV::basis(h1.V, 0b1100), "Phi^H(1 (x) 1) = y1 ^ y2 at n = 1");
    const int n = c.ws.n;
    const auto phi = orlov_phiH(n), psi = orlov_forward(n);
    for (int s = 0; s < 6; ++s) {
        const RMV a = rng.mv(product_XX(n).joint, 3), b = rng.mv(hyperbolic(n).V, 3);
        tl.expect(psi.apply(phi.apply(a)) == a, "Psi o Phi^H = id on random classes");
        tl.expect(phi.apply(psi.apply(b)) == b, "Phi^H o Psi = id on random classes");
    }
    return finish(tl, {{"phiH_1x1_n1", mv_json(one)}});
}

Outcome fm_integral(Context&, Rng&)
{
    Tally tl;
    for (int n = 1; n <= 2; ++n) {
        const auto phi = orlov_phiH(n), psi = orlov_forward(n);
        for (Mask m = 0; m <= full_mask(4 * n); ++m) {
            const RMV a = phi.image(m), b = psi.image(m);
            for (const auto& [o, v] : a.terms()) tl.expect(is_integer(v), "Phi^H integral at n = " + std::to_string(n));
            for (const auto& [o, v] : b.terms()) tl.expect(is_integer(v), "inverse integral at n = " + std::to_string(n));
        }
    }
    return finish(tl);
}

Outcome fm_extremes(Context& c, Rng&)
{
    Tally tl;
    json lv = json::array();
    for (int n = 1; n <= c.ws.n; ++n) {
        const HyperbolicSpace& h = hyperbolic(n);
        const ProductAlgebra& XX = product_XX(n);
        const auto pt = phi_tilde(n);
        const RMV one = RMV::scalar(h.S, 1), top = RMV::basis(h.S, full_mask(h.N()));
        const RMV a = pt.apply(kunneth(one, one, XX.joint));
        const RMV b = pt.apply(kunneth(one, top, XX.joint));
        const RMV d = pt.apply(kunneth(top, one, XX.joint));
        tl.expect(a.size() == 1 && a.terms().begin()->first == (full_mask(h.N()) << h.N()), "phi~(1 (x) 1) spans wedge^2n H^1(X^)");
        tl.expect(filtration_level(a) == h.N(), "phi~(1 (x) 1) has level 2n");
        tl.expect(filtration_level(b) == 0 && filtration_level(d) == 0, "phi~(1 (x) top), phi~(top (x) 1) have level 0");
        const Rational sb = b.coeff(0), sd = d.coeff(0);
        tl.expect((sb == 1 || sb == -1) && (sd == 1 || sd == -1), "scalar parts are +-1");
        lv.push_back({{"n", n}, {"one_one", filtration_level(a)}, {"one_top", rat_str(sb)}, {"top_one", rat_str(sd)}});
    }
    return finish(tl, {{"levels", lv}});
}

Outcome fm_equivariance(Context& c, Rng& rng)
{
    Tally tl;
    std::size_t cases = 0;
    {
        const HyperbolicSpace& h = hyperbolic(1);
        const auto pt = phi_tilde(1);
        for (Mask xm : degree_masks(h.dim(), 2)) {
            const auto sp = so_pair(h, RMV::basis(h.V, xm));
            for (Mask m = 0; m <= full_mask(2 * h.N()); ++m) {
                const RMV a = RMV::basis(product_XX(1).joint, m);
                ++cases;
                tl.expect(pt.apply(diagonal_spin_action(h, sp, a)) == derivation(sp.ad, pt.apply(a)), "equivariance at n = 1");
            }
        }
    }
    const int n = c.ws.n;
    const HyperbolicSpace& h = hyperbolic(n);
    const auto pt = phi_tilde(n);
    json sample = json::array();
    for (int s = 0; s < 20; ++s) {
        const RMV xi = rng.bivector(h.V, static_cast<int>(rng.uniform(1, 4)));
        const auto sp = so_pair(h, xi);
        const RMV a = rng.mv(product_XX(n).joint, 2);
        ++cases;
        tl.expect(pt.apply(diagonal_spin_action(h, sp, a)) == derivation(sp.ad, pt.apply(a)), "equivariance on a random xi");
        if (s < 3) sample.push_back(mv_json(xi));
    }
    return finish(tl, {{"cases", cases}, {"n", n}, {"first_xi", sample}});
}

Outcome fm_chevalley(Context&, Rng& rng)
{
    Tally tl;
    json sc = json::object();
    for (int n = 1; n <= 3; ++n) {
        std::vector<std::pair<Mask, Mask>> pairs;
        if (n == 3)
            for (int s = 0; s < 12; ++s)
                pairs.emplace_back(static_cast<Mask>(rng.uniform(0, 63)), static_cast<Mask>(rng.uniform(0, 63)));
        const ScalarComparison cmp = compare_with_chevalley(n, pairs);
        tl.expect(cmp.proportional, "phi~ proportional to star o Chevalley at n = " + std::to_string(n));
        tl.expect(cmp.scalar == sign_pow(n), "scalar = (-1)^n at n = " + std::to_string(n));
        sc[std::to_string(n)] = {{"scalar", rat_str(cmp.scalar)}, {"pairs", cmp.pairs_checked}};
    }
    return finish(tl, {{"scalars", sc}});
}

Outcome fm_filtration(Context&, Rng&)
{
    Tally tl;
    const HyperbolicSpace& h = hyperbolic(2);
    tl.expect(filtration_level(RMV::scalar(h.V, 1) + RMV::generator(h.V, 0)) == 0, "level(1 + x1) = 0");
    tl.expect(filtration_level(RMV::basis(h.V, 0b11) + RMV::basis(h.V, 0b111)) == 2, "level(x1x2 + x1x2x3) = 2");
    bool threw = false;
    try {
        filtration_level(RMV(h.V));
    } catch (const std::domain_error&) {
        threw = true;
    }
    tl.expect(threw, "level of zero rejected");
    return finish(tl);
}

Outcome fm_overlap(Context& c, Rng&)
{
    const WeilStructure& ws = c.ws;
    Tally tl;
    json rows = json::array();
    for (std::size_t T = 0; T < ws.types.size(); ++T)
        for (std::size_t U = 0; U < ws.types.size(); ++U) {
            const OverlapFiltration o = overlap_filtration(ws, T, U);
            const std::string tag = ws.types[T].str() + "," + ws.types[U].str();
            tl.expect(o.level_ok, "level >= d|T cap T'| for " + tag);
            tl.expect(o.line_ok, "leading part spans wedge^{dk}(W_T cap W_T') for " + tag);
            rows.push_back({{"T", ws.types[T].str()}, {"T2", ws.types[U].str()}, {"k", o.k}, {"level", o.level}, {"cap_dim", o.intersection_dim}});
        }
    return finish(tl, {{"pairs", rows}});
}

Outcome fm_bb_dims(Context& c, Rng&)
{
    const WeilStructure& ws = c.ws;
    const BBData& bb = c.bb();
    Tally tl;
    const long half = ws.e / 2;
    json dims = json::array();
    std::size_t total = 0;
    for (long k = 0; k <= half; ++k) {
        const std::size_t got = static_cast<std::size_t>(k) < bb.BB.size() ? bb.BB[static_cast<std::size_t>(k)].dim() : 0;
        tl.expect(got == static_cast<std::size_t>(binom(half, k) << half), "dim BB_k = C(e/2, k) 2^{e/2}");
        tl.expect(static_cast<std::size_t>(k) < bb.certified.size() && bb.certified[static_cast<std::size_t>(k)], "BB_k defined over Q");
        total += got;
        dims.push_back(got);
    }
    tl.expect(total == bb.m * bb.m, "the BB_k fill B (x) B");
    return finish(tl, {{"dims", dims}});
}

Outcome fm_Pi(Context& c, Rng&)
{
    const WeilStructure& ws = c.ws;
    const BBData& bb = c.bb();
    Tally tl;
    const auto masks = degree_masks(ws.h->dim(), ws.d);
    std::unordered_map<Mask, std::size_t> idx;
    for (std::size_t i = 0; i < masks.size(); ++i) idx[masks[i]] = i;
    auto to_vec = [&](const RMV& v) {
        RVec out(masks.size(), Rational(0));
        for (const auto& [m, x] : v.terms()) out.at(idx.at(m)) = x;
        return out;
    };
    std::vector<RVec> hw;
    for (const auto& w : ws.HW) hw.push_back(to_vec(w));
    const RSub HW = RSub::span(masks.size(), hw);
    std::vector<RVec> images;
    for (const auto& g : bb.BB[1].basis()) {
        const RMV img = Pi(ws, g);
        for (const auto& [m, x] : img.terms()) tl.expect(popcount(m) == ws.d, "Pi lands in degree d");
        images.push_back(to_vec(img));
        tl.expect(HW.contains(images.back()), "Pi(BB_1) lies in HW");
    }
    const std::size_t r = RSub::span(masks.size(), images).dim();
    tl.expect(r == HW.dim(), "Pi(BB_1) = HW");
    tl.expect((r == bb.BB[1].dim()) == (ws.e == 2), "Pi injective iff e = 2");
    tl.expect(Pi(ws, RVec(bb.m * bb.m, Rational(0))).is_zero(), "Pi(0) = 0");
    return finish(tl, {{"image_dim", r}, {"BB1_dim", bb.BB[1].dim()}});
}

// ---- secant pipeline

Outcome secant_ch(Context& c, Rng&)
{
    const WeilStructure& ws = c.ws;
    Tally tl;
    const SheafClass s = preset_ch_ideal_curves(ws);
    tl.expect(s.ch == ws.alpha + ws.beta, "ch(F1) = alpha + beta");
    if (ws.n <= 3) {
        const Rational q = ws.tower->q();
        const RMV t2 = wedge(ws.theta, ws.theta), t3 = wedge(t2, ws.theta);
        const RMV explicit_ch = RMV::scalar(ws.h->S, 1) + ws.theta - t2 * Rational(q / 2) - t3 * Rational(q / 6);
        tl.expect(s.ch == explicit_ch, "ch(F1) = (1 - q/2 Theta^2) + (Theta - q/6 Theta^3)");
    }
    const auto co = b_coords(ws, s.ch);
    tl.expect(co.has_value(), "ch(F1) in B");
    json cj = json::array();
    if (co) {
        for (const auto& x : *co) cj.push_back(rat_str(x));
        tl.expect(co->size() == 2 && (*co)[0] == 1 && (*co)[1] == 1, "coordinates (1, 1) on (alpha, beta)");
    }
    tl.expect(s.rank() == 1, "rank 1");
    return finish(tl, {{"ch", mv_json(s.ch)}, {"coords", cj}});
}

Outcome secant_dualize(Context& c, Rng&)
{
    const WeilStructure& ws = c.ws;
    Tally tl;
    const SheafClass s = preset_ch_ideal_curves(ws);
    const SheafClass d = dualize(s);
    tl.expect(d.ch == ws.alpha - ws.beta, "dual = alpha - beta");
    tl.expect(dualize(d).ch == s.ch, "dualize is an involution");
    for (const auto& b : ws.B) tl.expect(b_coords(ws, tau(b)).has_value(), "tau preserves B");
    return finish(tl, {{"dual", mv_json(d.ch)}});
}

Outcome secant_rank(Context& c, Rng&)
{
    const WeilStructure& ws = c.ws;
    Tally tl;
    const SheafClass s = preset_ch_ideal_curves(ws);
    const RMV G = transform_pair(ws, s, s, PairVariant::G);
    const Rational raw = G.coeff(0);
    const Rational shifted = -raw;  // [-3]
    const Rational want = 8 * ws.tower->q();
    tl.expect(abs(raw) == want, "|ch_0| = 8q");
    tl.expect(shifted == want, "rank after the shift is 8q");
    return finish(tl, {{"ch0_raw", rat_str(raw)}, {"ch0_shifted", rat_str(shifted)}, {"expected", rat_str(want)}});
}

Outcome secant_E_rank(Context& c, Rng& rng)
{
    const WeilStructure& ws = c.ws;
    Tally tl;
    const Pipeline& p = c.pipe();
    const Rational r = p.E.coeff(0);
    tl.expect(sgn(r) != 0, "rank of E is non-zero");
    const SheafClass s = preset_ch_ideal_curves(ws);
    const RMV G = transform_pair(ws, s, s, PairVariant::G);
    tl.expect(p.E == G, "E for (alpha+beta, alpha-beta) equals the G transform");
    const Rational equal_pair = transform_pair(ws, s, s, PairVariant::E).coeff(0);
    for (int k = 0; k < 3; ++k) {
        const SheafClass a{rng.mv(ws.h->S, 2), "a"}, b{rng.mv(ws.h->S, 2), "b"}, d{rng.mv(ws.h->S, 2), "d"};
        const Rational x = rng.rational();
        const SheafClass ab{a.ch + b.ch * x, "a+xb"};
        tl.expect(transform_pair(ws, ab, d, PairVariant::E) ==
                      transform_pair(ws, a, d, PairVariant::E) + transform_pair(ws, b, d, PairVariant::E) * x,
                  "linear in the first argument");
        tl.expect(transform_pair(ws, d, ab, PairVariant::G) ==
                      transform_pair(ws, d, a, PairVariant::G) + transform_pair(ws, d, b, PairVariant::G) * x,
                  "linear in the second argument");
    }
    return finish(tl, {{"rank_E", rat_str(r)}, {"rank_E_for_F2_equal_F1", rat_str(equal_pair)}});
}

Outcome secant_bb(Context& c, Rng&)
{
    const WeilStructure& ws = c.ws;
    const BBData& bb = c.bb();
    Tally tl;
    const std::size_t m = bb.m;
    auto check = [&](const RMat& cm, bool want_g1) {
        const BBDecomposition dec = bb_decompose(ws, bb, cm);
        RVec sum(m * m, Rational(0));
        for (const auto& g : dec.gamma_k)
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += g[i];
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) tl.expect(sum[i * m + j] == cm(i, j), "components sum to the class");
        for (std::size_t k = 0; k < dec.gamma_k.size(); ++k) tl.expect(bb.BB[k].contains(dec.gamma_k[k]), "gamma_k in BB_k");
        const bool g1 = std::any_of(dec.gamma_k[1].begin(), dec.gamma_k[1].end(), [](const Rational& x) { return sgn(x) != 0; });
        tl.expect(g1 == want_g1, want_g1 ? "gamma_1 != 0" : "gamma_1 = 0");
        json out = json::array();
        for (const auto& g : dec.gamma_k) {
            json row = json::array();
            for (const auto& x : g) row.push_back(rat_str(x));
            out.push_back(row);
        }
        return out;
    };
    // (alpha + beta) (x) (alpha - beta) and 2(alpha (x) alpha + q beta (x) beta) on the (alpha, beta) basis
    RMat head(m, m), degen(m, m);
    head(0, 0) = 1;
    head(0, 1) = -1;
    head(1, 0) = 1;
    head(1, 1) = -1;
    degen(0, 0) = 2;
    degen(1, 1) = 2 * ws.tower->q();
    return finish(tl, {{"headline", check(head, true)}, {"degenerate", check(degen, false)}});
}

Outcome secant_kappa(Context& c, Rng&)
{
    const WeilStructure& ws = c.ws;
    const HyperbolicSpace& h = *ws.h;
    Tally tl;
    const RMV r1 = RMV::scalar(h.V, 7);
    tl.expect(kappa(r1) == r1, "kappa(r 1) = r 1");
    bool threw = false;
    try {
        kappa(RMV::generator(h.V, 0));
    } catch (const ZeroRank&) {
        threw = true;
    }
    tl.expect(threw, "rank zero rejected");
    const Pipeline& p = c.pipe();
    tl.expect(degree_part(p.kappa, 2).is_zero(), "kappa_1 = 0");
    tl.expect(p.kappa.coeff(0) == p.E.coeff(0), "kappa keeps the rank");
    for (const auto& xi : ws.gB) tl.expect(derivation(so_pair(h, xi).ad, p.kappa).is_zero(), "D_xi kappa(E) = 0");
    return finish(tl, {{"gB_checked", ws.gB.size()}, {"kappa_terms", p.kappa.size()}});
}

Outcome secant_decompose(Context& c, Rng&)
{
    const WeilStructure& ws = c.ws;
    Tally tl;
    const Pipeline& p = c.pipe();
    const KappaSplit& k = p.split;
    tl.expect(k.direct, "HW + Im Sym^{d/2}(A2) is direct");
    tl.expect(k.member, "kappa_{d/2}(E) lies in HW + Im Sym^{d/2}(A2)");
    tl.expect(!k.gamma.is_zero(), "gamma != 0");
    tl.expect(k.gamma + k.delta == degree_part(p.kappa, ws.d), "gamma + delta = kappa_{d/2}");
    const KappaSplit z = decompose_kappa(ws, RMV(ws.h->V));
    tl.expect(z.member && z.gamma.is_zero() && z.delta.is_zero(), "decompose(0) = (0, 0)");
    json hw = json::array(), sym = json::array();
    for (const auto& x : k.hw_coords) hw.push_back(rat_str(x));
    for (const auto& x : k.sym_coords) sym.push_back(rat_str(x));
    return finish(tl, {{"hw_coords", hw}, {"sym_coords", sym}});
}

Outcome secant_nonvanish(Context& c, Rng&)
{
    const WeilStructure& ws = c.ws;
    const BBData& bb = c.bb();
    Tally tl;
    const Pipeline& p = c.pipe();
    const Nonvanishing head = nonvanish_criterion(ws, bb, p.c1, p.c2);
    tl.expect(head.value, "criterion holds for (alpha + beta, alpha - beta)");
    tl.expect(head.gamma1_nonzero == head.value, "at e = 2 the criterion is gamma_1 != 0");
    RMat degen(bb.m, bb.m);
    degen(0, 0) = 2;
    degen(1, 1) = 2 * ws.tower->q();
    const Nonvanishing dg = nonvanish_on(ws, bb, degen);
    tl.expect(!dg.value, "criterion fails on a class in BB_0");
    tl.expect(!head.value || !p.split.gamma.is_zero(), "criterion implies gamma != 0");
    return finish(tl, {{"headline", head.value}, {"per_character", head.per_character}, {"degenerate", dg.value}});
}

}  // namespace

void transform_checks(std::vector<Declared>& out, bool pipeline, bool principal)
{
    out.push_back({"fm.pushforward", kKernel, fm_pushforward});
    out.push_back({"fm.poincare", kPoincare, fm_poincare_check});
    out.push_back({"fm.mukai", kAutoEq, fm_mukai});
    out.push_back({"fm.orlov", kOrlov, fm_orlov});
    out.push_back({"fm.integral", kIntegral, fm_integral});
    out.push_back({"fm.extremes", kExtreme, fm_extremes});
    out.push_back({"fm.equivariance", kEquivariant, fm_equivariance});
    out.push_back({"fm.chevalley", kChevalley, fm_chevalley});
    out.push_back({"fm.filtration", kFiltration, fm_filtration});
    out.push_back({"fm.overlap", kLine, fm_overlap});
    out.push_back({"fm.bb_dims", kBBk, fm_bb_dims});
    out.push_back({"fm.Pi", kPi, fm_Pi});
    if (!pipeline) return;
    out.push_back({"secant.ch", kCh, secant_ch});
    out.push_back({"secant.dualize", kDual, secant_dualize});
    if (principal) out.push_back({"secant.rank_8q", kRank, secant_rank});
    out.push_back({"secant.E_rank", kERank, secant_E_rank});
    out.push_back({"secant.bb", kBB0, secant_bb});
    out.push_back({"secant.kappa", kKappa, secant_kappa});
    out.push_back({"secant.decompose", kNotImage, secant_decompose});
    out.push_back({"secant.nonvanish", kSum, secant_nonvanish});
}

}  // namespace spinweil::suite
