#include "suite.hpp"

namespace spinweil::suite {

namespace {

const char* kCM = "Let $K$ be a CM-field, i.e., a totally complex quadratic extension of a totally real field $F$";
const char* kTypes = "Let ${\\mathcal T}_K$ be the set of all CM-types for $K$.";
const char* kExterior = "is the exterior algebra $\\wedge^*V$ of the vector representation";
const char* kTau = "Let $\\tau:H^i(X,{\\mathbb Z})\\rightarrow H^i(X,{\\mathbb Z})$ be multiplication by $(-1)^{i(i-1)/2}$";
const char* kKunneth = "The K\\\"{u}nneth theorem identifies $H^*(X\\times X,{\\mathbb Z})$ as the tensor square";
const char* kExp = "set $\\kappa(\\gamma):=\\gamma\\exp(-\\gamma_1/\\gamma_0)$";
const char* kClifford = "$m_{v_1}m_{v_2}+m_{v_2}m_{v_1}=(v_1,v_2)id_S$, and so $m$ extends to a homomorphism";
const char* kSpinEquivariant = "is a ${\\rm Spin}(V_\\bullet)$-equivariant embedding";
const char* kExtremeSpinors = "$\\ell_{H^1(\\hat{X},\\bullet)}=H^0(X,\\bullet)$";
const char* kEvenPure = "the element $\\exp(\\sqrt{-q}\\Theta)$ is an even pure spinor corresponding to a maximal isotropic";
const char* kWiota = "Note that $W\\cap \\iota(W)=(0)$";
const char* kMg = "Given an element $g\\in {\\rm Spin}(V_\\bullet)$, the class $m_g(1)$ is thus an even pure spinor.";
const char* kEllWT = "is the pure spinor $\\ell_{W_T}$";

CliffordElem<Rational> gen(const HyperbolicSpace& h, int g) { return CliffordElem<Rational>::basis(h.V, Mask{1} << g); }

// ---- field tower

Outcome tower_involution(Context& c, Rng& rng)
{
    const Tower* t = c.ws.tower;
    Tally tl;
    const FieldElem sq = FieldElem::sqrt_minus_q(t);
    tl.expect(sq * sq == FieldElem(-t->q()), "sqrt(-q)^2 = -q");
    tl.expect(sq.iota() == -sq, "iota(sqrt(-q)) = -sqrt(-q)");
    if (!t->f_is_q()) {
        const FieldElem sp = FieldElem::sqrt_p(t);
        tl.expect(sp * sp == FieldElem(Rational(t->p())), "sqrt(p)^2 = p");
        tl.expect(sp.iota() == sp, "iota fixes F");
    }
    for (int i = 0; i < 20; ++i) {
        const FieldElem a = rng.field(t), b = rng.field(t);
        tl.expect(a.iota().iota() == a, "iota is an involution");
        tl.expect((a + b).iota() == a.iota() + b.iota(), "iota additive");
        tl.expect((a * b).iota() == a.iota() * b.iota(), "iota multiplicative");
        tl.expect(a.in(Subfield::F) == (a.iota() == a), "fixed field of iota is F");
        if (!a.is_zero()) tl.expect(a * a.inv() == FieldElem(1), "a * a^-1 = 1");
    }
    return finish(tl, {{"samples", 20}});
}

Outcome tower_trace(Context& c, Rng& rng)
{
    const Tower* t = c.ws.tower;
    Tally tl;
    tl.expect(trace_to_Q(FieldElem(t, 1), Subfield::K) == Rational(t->e()), "tr_K(1) = e");
    for (int i = 0; i < 20; ++i) {
        const FieldElem a = rng.field(t), b = rng.field(t);
        const Rational r = rng.rational();
        tl.expect(trace_to_Q(a + b * FieldElem(r), Subfield::K) == trace_to_Q(a, Subfield::K) + r * trace_to_Q(b, Subfield::K),
                  "trace is Q-linear");
        if (!a.is_zero()) tl.expect(sgn(trace_to_Q(a * a.iota(), Subfield::K)) > 0, "tr(a iota(a)) > 0");
    }
    return finish(tl, {{"samples", 20}});
}

Outcome tower_cm_types(Context& c, Rng&)
{
    const Tower* t = c.ws.tower;
    const auto types = enumerate_cm_types(t);
    Tally tl;
    const std::size_t want = std::size_t{1} << (t->e() / 2);
    tl.expect(types.size() == want, "number of CM-types is 2^{e/2}");
    tl.expect(embeddings_of_K(t).size() == static_cast<std::size_t>(t->e()), "e embeddings");
    json names = json::array();
    for (const auto& T : types) {
        names.push_back(T.str());
        const CMType bar = T.conjugate();
        tl.expect(std::find(types.begin(), types.end(), bar) != types.end(), "conjugate type enumerated");
        tl.expect(overlap(T, T) == t->e() / 2, "|T cap T| = e/2");
        tl.expect(overlap(T, bar) == 0, "|T cap Tbar| = 0");
        tl.expect(T.members().size() == static_cast<std::size_t>(t->e() / 2), "a type has e/2 members");
    }
    return finish(tl, {{"types", names}});
}

// ---- exterior algebra

Outcome exterior_wedge(Context& c, Rng& rng)
{
    Tally tl;
    const SpacePtr sp = c.ws.h->V;
    for (int i = 0; i < 15; ++i) {
        const RMV a = rng.mv(sp, 3), b = rng.mv(sp, 3), d = rng.mv(sp, 3);
        tl.expect(wedge(wedge(a, b), d) == wedge(a, wedge(b, d)), "associativity");
        tl.expect(wedge(a, b + d) == wedge(a, b) + wedge(a, d), "distributivity");
        const int p = static_cast<int>(rng.uniform(0, 4)), q = static_cast<int>(rng.uniform(0, 4));
        const RMV u = rng.homogeneous(sp, p, 2), v = rng.homogeneous(sp, q, 2);
        tl.expect(wedge(u, v) == wedge(v, u) * Rational((p * q) & 1 ? -1 : 1), "graded commutativity");
    }
    for (int g = 0; g < sp->arity(); ++g) {
        const RMV x = RMV::generator(sp, g);
        tl.expect(wedge(x, x).is_zero(), "x ^ x = 0");
    }
    const RMV one = RMV::scalar(sp, 1);
    const RMV a = rng.mv(sp, 4);
    tl.expect(wedge(one, a) == a && wedge(a, one) == a, "unit");
    return finish(tl, {{"arity", sp->arity()}});
}

Outcome exterior_contract(Context& c, Rng& rng)
{
    Tally tl;
    const SpacePtr sp = c.ws.h->S;
    for (int s = 0; s < 15; ++s) {
        const int i = static_cast<int>(rng.uniform(0, sp->arity() - 1)), j = static_cast<int>(rng.uniform(0, sp->arity() - 1));
        const int p = static_cast<int>(rng.uniform(0, 3));
        const RMV a = rng.homogeneous(sp, p, 2), b = rng.mv(sp, 3);
        const RMV lhs = contract_gen(i, wedge(a, b));
        const RMV rhs = wedge(contract_gen(i, a), b) + wedge(a, contract_gen(i, b)) * Rational(p & 1 ? -1 : 1);
        tl.expect(lhs == rhs, "contraction is an odd derivation");
        tl.expect(contract_gen(i, contract_gen(i, b)).is_zero(), "contraction squares to zero");
        tl.expect(contract_gen(i, contract_gen(j, b)) == -contract_gen(j, contract_gen(i, b)), "contractions anticommute");
    }
    return finish(tl);
}

Outcome exterior_tau_pairing(Context&, Rng& rng)
{
    Tally tl;
    json gram = json::object();
    for (int n = 1; n <= 3; ++n) {
        const SpacePtr sp = hyperbolic(n).S;
        for (int s = 0; s < 10; ++s) {
            const RMV a = rng.mv(sp, 4), b = rng.mv(sp, 4);
            tl.expect(tau(tau(a)) == a, "tau is an involution");
            tl.expect(tau(wedge(a, b)) == wedge(tau(b), tau(a)), "tau reverses products");
            tl.expect(s_pairing(b, a) == s_pairing(a, b) * Rational(n & 1 ? -1 : 1), "(b,a) = (-1)^n (a,b)");
        }
        if (n <= 2) {
            const std::size_t D = std::size_t{1} << sp->arity();
            RMat G(D, D);
            for (Mask a = 0; a < D; ++a)
                for (Mask b = 0; b < D; ++b) G(a, b) = s_pairing(RMV::basis(sp, a), RMV::basis(sp, b));
            const std::size_t r = rank(G);
            tl.expect(r == D, "pairing nondegenerate at n = " + std::to_string(n));
            gram[std::to_string(n)] = r;
        }
    }
    return finish(tl, {{"gram_rank", gram}});
}

Outcome exterior_exp(Context& c, Rng& rng)
{
    Tally tl;
    const SpacePtr sp = c.ws.h->V;
    for (int s = 0; s < 8; ++s) {
        const RMV a = rng.homogeneous(sp, 2, 3), b = rng.homogeneous(sp, 2, 2);
        tl.expect(wedge(exp_even(a), exp_even(-a)) == RMV::scalar(sp, 1), "exp(a) exp(-a) = 1");
        tl.expect(exp_even(a + b) == wedge(exp_even(a), exp_even(b)), "exp(a + b) = exp(a) exp(b)");
    }
    return finish(tl);
}

Outcome exterior_kunneth(Context& c, Rng& rng)
{
    Tally tl;
    const ProductAlgebra& XX = product_XX(c.ws.n);
    const int N = c.ws.h->N();
    for (int s = 0; s < 10; ++s) {
        const RMV a = rng.mv(XX.factors[0], 3), b = rng.mv(XX.factors[1], 3);
        tl.expect(kunneth(a, b, XX.joint) == wedge(embed(a, XX.joint, 0), embed(b, XX.joint, N)), "a (x) b = a ^ b'");
    }
    return finish(tl);
}

// ---- Clifford algebra

Outcome clifford_relations(Context&, Rng&)
{
    Tally tl;
    json counts = json::object();
    for (int n = 1; n <= 3; ++n) {
        const HyperbolicSpace& h = hyperbolic(n);
        std::size_t pairs = 0;
        for (int a = 0; a < h.dim(); ++a)
            for (int b = 0; b < h.dim(); ++b) {
                ++pairs;
                const CliffordElem<Rational> ab = clifford_mul(h, gen(h, a), gen(h, b)) + clifford_mul(h, gen(h, b), gen(h, a));
                tl.expect(ab == CliffordElem<Rational>::scalar(h.V, Rational(h.gram(a, b))),
                          "e_a e_b + e_b e_a = (e_a, e_b) at n = " + std::to_string(n));
                for (Mask C = 0; C <= full_mask(h.N()); ++C) {
                    const RMV lam = RMV::basis(h.S, C);
                    const RMV lhs = clifford_action(h, gen(h, a), clifford_action(h, gen(h, b), lam)) +
                                    clifford_action(h, gen(h, b), clifford_action(h, gen(h, a), lam));
                    tl.expect(lhs == lam * Rational(h.gram(a, b)), "m anticommutation on S at n = " + std::to_string(n));
                }
            }
        counts[std::to_string(n)] = pairs;
    }
    return finish(tl, {{"pairs", counts}});
}

Outcome clifford_module(Context&, Rng& rng)
{
    Tally tl;
    const HyperbolicSpace& h = hyperbolic(2);
    for (int s = 0; s < 10; ++s) {
        const auto a = rng.mv(h.V, 3), b = rng.mv(h.V, 3), d = rng.mv(h.V, 2);
        const RMV lam = rng.mv(h.S, 3);
        tl.expect(clifford_action(h, clifford_mul(h, a, b), lam) == clifford_action(h, a, clifford_action(h, b, lam)),
                  "m_{ab} = m_a m_b");
        tl.expect(clifford_mul(h, clifford_mul(h, a, b), d) == clifford_mul(h, a, clifford_mul(h, b, d)), "associativity");
    }
    return finish(tl);
}

Outcome clifford_involutions(Context&, Rng& rng)
{
    Tally tl;
    const HyperbolicSpace& h = hyperbolic(2);
    for (int s = 0; s < 10; ++s) {
        const auto a = rng.mv(h.V, 3), b = rng.mv(h.V, 3);
        const auto ab = clifford_mul(h, a, b);
        tl.expect(main_inv(h, ab) == clifford_mul(h, main_inv(h, a), main_inv(h, b)), "main involution is multiplicative");
        tl.expect(main_antiinv(h, ab) == clifford_mul(h, main_antiinv(h, b), main_antiinv(h, a)), "reversal reverses products");
        tl.expect(star(h, ab) == clifford_mul(h, star(h, b), star(h, a)), "conjugation reverses products");
        tl.expect(main_inv(h, main_inv(h, a)) == a && main_antiinv(h, main_antiinv(h, a)) == a, "involutions");
    }
    return finish(tl);
}

Outcome clifford_reflection(Context& c, Rng& rng)
{
    Tally tl;
    const HyperbolicSpace& h = *c.ws.h;
    const std::size_t D = static_cast<std::size_t>(h.dim());
    RVec v(D, Rational(0));
    v[0] = 1;
    v[static_cast<std::size_t>(h.N())] = 1;
    tl.expect(reflection(h, v, unit_vec(D, 0)) == unit_vec(D, static_cast<std::size_t>(h.N())), "rho(x1) = y1");
    RVec mx2 = unit_vec(D, 1);
    mx2[1] = -1;
    tl.expect(reflection(h, v, unit_vec(D, 1)) == mx2, "rho(x2) = -x2");
    for (int s = 0; s < 10; ++s) {
        const RVec a = rng.vec(D), b = rng.vec(D);
        tl.expect(h.pair(reflection(h, v, a), reflection(h, v, b)) == h.pair(a, b), "rho is an isometry");
    }
    bool threw = false;
    try {
        reflection(h, unit_vec(D, 0), unit_vec(D, 1));
    } catch (const std::invalid_argument&) {
        threw = true;
    }
    tl.expect(threw, "isotropic v rejected");
    return finish(tl);
}

Outcome clifford_so(Context& c, Rng& rng)
{
    Tally tl;
    const HyperbolicSpace& h = *c.ws.h;
    const RMat G = h.gram_matrix();
    for (int s = 0; s < 10; ++s) {
        const auto sp = so_pair(h, rng.bivector(h.V, 3));
        tl.expect((G * sp.ad + sp.ad.transpose() * G).is_zero_matrix(), "ad_xi is skew");
        const RVec v = rng.vec(static_cast<std::size_t>(h.dim()));
        const RMV lam = rng.mv(h.S, 3);
        const RMV lhs = spin_action(h, sp, vector_action(h, v, lam)) - vector_action(h, v, spin_action(h, sp, lam));
        tl.expect(lhs == vector_action(h, sp.ad.apply(v), lam), "[m_xi, m_v] = m_{ad v}");
    }
    // wedge^2 V -> End(S) is injective
    const auto masks = degree_masks(h.dim(), 2);
    const std::size_t D = std::size_t{1} << h.N();
    RMat M(masks.size(), D * D);
    for (std::size_t i = 0; i < masks.size(); ++i) {
        const auto sp = so_pair(h, RMV::basis(h.V, masks[i]));
        for (Mask C = 0; C < D; ++C) {
            const RMV img = spin_action(h, sp, RMV::basis(h.S, C));
            for (const auto& [o, v] : img.terms()) M(i, o * D + C) = v;
        }
    }
    const std::size_t r = rank(M);
    tl.expect(r == masks.size(), "spin actions of a basis of wedge^2 V are independent");
    return finish(tl, {{"so_rank", r}});
}

Outcome clifford_symbol(Context&, Rng& rng)
{
    Tally tl;
    const HyperbolicSpace& h = hyperbolic(2);
    for (int s = 0; s < 8; ++s) {
        const auto a = rng.mv(h.V, 4);
        const SpinorOperator<Rational> op = [&](Mask C) { return clifford_action(h, a, RMV::basis(h.S, C)); };
        tl.expect(desymbol(h, op) == a, "desymbol recovers the element");
        const RMV u = rng.mv(h.V, 4);
        tl.expect(dequantize(h, quantize(h, u)) == u, "dequantize o quantize = id");
        tl.expect(quantize(h, dequantize(h, a)) == a, "quantize o dequantize = id");
    }
    return finish(tl);
}

Outcome clifford_faithful(Context&, Rng&)
{
    Tally tl;
    json ranks = json::object();
    for (int n = 1; n <= 2; ++n) {
        const HyperbolicSpace& h = hyperbolic(n);
        const std::size_t D = std::size_t{1} << h.N(), M = std::size_t{1} << h.dim();
        RMat A(M, D * D);
        for (Mask m = 0; m < M; ++m) {
            const RMat op = operator_matrix(h, CliffordElem<Rational>::basis(h.V, m));
            for (std::size_t i = 0; i < D; ++i)
                for (std::size_t j = 0; j < D; ++j) A(m, i * D + j) = op(i, j);
        }
        const std::size_t r = rank(A);
        tl.expect(r == M, "C(V) acts faithfully on S at n = " + std::to_string(n));
        ranks[std::to_string(n)] = r;
    }
    return finish(tl, {{"rank", ranks}});
}

// ---- pure spinors

Outcome pure_basic(Context&, Rng&)
{
    Tally tl;
    for (int n = 1; n <= 3; ++n) {
        const HyperbolicSpace& h = hyperbolic(n);
        const std::size_t D = static_cast<std::size_t>(h.dim());
        std::vector<RVec> ys, xs;
        for (int i = 0; i < h.N(); ++i) {
            xs.push_back(unit_vec(D, static_cast<std::size_t>(i)));
            ys.push_back(unit_vec(D, static_cast<std::size_t>(i + h.N())));
        }
        const auto a1 = annihilator(h, RMV::scalar(h.S, 1));
        const auto at = annihilator(h, RMV::basis(h.S, full_mask(h.N())));
        tl.expect(a1.maximal() && same_span(a1.space, RSub::span(D, ys)), "annihilator(1) = H^1(X^)");
        tl.expect(at.maximal() && same_span(at.space, RSub::span(D, xs)), "annihilator(top) = H^1(X)");
    }
    const HyperbolicSpace& h2 = hyperbolic(2);
    const RMV mixed = RMV::scalar(h2.S, 1) + RMV::basis(h2.S, 0xF);
    tl.expect(!is_pure(h2, mixed).pure, "1 + x1x2x3x4 is not pure");
    const RMV e = RMV::scalar(h2.S, 1) + RMV::basis(h2.S, 0x3);
    tl.expect(is_pure(h2, e).pure, "1 + x1x2 = exp(x1x2) is pure");
    return finish(tl);
}

Outcome pure_instance(Context& c, Rng&)
{
    const WeilStructure& ws = c.ws;
    const HyperbolicSpace& h = *ws.h;
    Tally tl;
    const auto pur = is_pure(h, ws.spinor);
    const KSub W = KSub::span(static_cast<std::size_t>(h.dim()), ws.W);
    tl.expect(pur.pure, "exp(sqrt(-q) Theta) is pure");
    tl.expect(pur.certificate.maximal(), "annihilator is maximal isotropic");
    tl.expect(same_span(pur.certificate.space, W), "annihilator = W");
    return finish(tl, {{"annihilator_dim", pur.certificate.dim()}});
}

Outcome pure_w_iota(Context& c, Rng&)
{
    const WeilStructure& ws = c.ws;
    const HyperbolicSpace& h = *ws.h;
    Tally tl;
    const KSub W = KSub::span(static_cast<std::size_t>(h.dim()), ws.W);
    tl.expect(is_isotropic(h, ws.W) && W.dim() == static_cast<std::size_t>(h.N()), "W maximal isotropic");
    std::vector<KVec> iw;
    for (const auto& w : ws.W) iw.push_back(iota(w));
    const KSub IW = KSub::span(static_cast<std::size_t>(h.dim()), iw);
    const std::size_t cap = W.intersect(IW).dim();
    tl.expect(cap == 0, "W cap iota(W) = 0");
    return finish(tl, {{"W_cap_iotaW", cap}});
}

Outcome pure_roundtrip(Context& c, Rng&)
{
    const WeilStructure& ws = c.ws;
    const HyperbolicSpace& h = *ws.h;
    Tally tl;
    tl.expect(pure_spinor_of(h, ws.W) == ws.spinor, "pure_spinor_of(W) = exp(sqrt(-q) Theta)");
    const std::size_t D = static_cast<std::size_t>(h.dim());
    auto throws = [&](const std::vector<RVec>& vs) {
        try {
            pure_spinor_of(h, vs);
        } catch (const NotMaximalIsotropic&) {
            return true;
        }
        return false;
    };
    RVec v = unit_vec(D, 0);
    v[static_cast<std::size_t>(h.N())] = 1;
    tl.expect(throws({v}), "non-isotropic input rejected");
    tl.expect(throws({unit_vec(D, 0)}), "non-maximal input rejected");
    return finish(tl);
}

Outcome pure_parity(Context& c, Rng&)
{
    Tally tl;
    tl.expect(parity(c.ws.spinor) == 1, "exp(sqrt(-q) Theta) is even");
    for (const auto& l : c.ws.ell) tl.expect(parity(l) == 1, "ell_T is even");
    const HyperbolicSpace& h = *c.ws.h;
    const std::size_t D = static_cast<std::size_t>(h.dim());
    RVec v = unit_vec(D, 0);
    v[static_cast<std::size_t>(h.N())] = 1;
    tl.expect(parity(vector_action(h, to_kvec(v), c.ws.spinor)) == -1, "m_v flips parity");
    return finish(tl);
}

Outcome pure_subspace(Context& c, Rng& rng)
{
    Tally tl;
    const std::size_t D = static_cast<std::size_t>(c.ws.h->dim());
    for (int s = 0; s < 10; ++s) {
        std::vector<RVec> a, b;
        const long na = rng.uniform(1, static_cast<long>(D) - 1), nb = rng.uniform(1, static_cast<long>(D) - 1);
        for (long i = 0; i < na; ++i) a.push_back(rng.vec(D, 1));
        for (long i = 0; i < nb; ++i) b.push_back(rng.vec(D, 1));
        const RSub A = RSub::span(D, a), B = RSub::span(D, b);
        const RSub S = A.sum(B), I = A.intersect(B);
        tl.expect(S.dim() + I.dim() == A.dim() + B.dim(), "dim(A+B) + dim(A cap B) = dim A + dim B");
        tl.expect(A.contains(I) && B.contains(I) && S.contains(A) && S.contains(B), "containments");
    }
    return finish(tl);
}

Outcome pure_reflection(Context& c, Rng&)
{
    const WeilStructure& ws = c.ws;
    const HyperbolicSpace& h = *ws.h;
    Tally tl;
    const std::size_t D = static_cast<std::size_t>(h.dim());
    KVec v(D, FieldElem(0));
    v[0] = FieldElem(1);
    v[static_cast<std::size_t>(h.N())] = FieldElem(1);
    const KMV lam = vector_action(h, v, ws.spinor);
    std::vector<KVec> rw;
    for (const auto& w : ws.W) rw.push_back(reflection(h, v, w));
    const auto ann = annihilator(h, lam);
    tl.expect(ann.maximal(), "m_v(lambda) is pure");
    tl.expect(same_span(ann.space, KSub::span(D, rw)), "annihilator of m_v(lambda) = rho_v(W)");
    return finish(tl);
}

Outcome pure_types(Context& c, Rng&)
{
    const WeilStructure& ws = c.ws;
    Tally tl;
    for (std::size_t T = 0; T < ws.types.size(); ++T) {
        const auto ann = annihilator(*ws.h, ws.ell[T]);
        tl.expect(ann.maximal(), "ell_T pure for " + ws.types[T].str());
        tl.expect(same_span(ann.space, ws.WT[T]), "annihilator(ell_T) = W_T for " + ws.types[T].str());
    }
    return finish(tl, {{"types", ws.types.size()}});
}

}  // namespace

void algebra_checks(std::vector<Declared>& out)
{
    out.push_back({"tower.involution", kCM, tower_involution});
    out.push_back({"tower.trace", kCM, tower_trace});
    out.push_back({"tower.cm_types", kTypes, tower_cm_types});
    out.push_back({"exterior.wedge", kExterior, exterior_wedge});
    out.push_back({"exterior.contract", kExterior, exterior_contract});
    out.push_back({"exterior.tau_pairing", kTau, exterior_tau_pairing});
    out.push_back({"exterior.exp", kExp, exterior_exp});
    out.push_back({"exterior.kunneth", kKunneth, exterior_kunneth});
    out.push_back({"clifford.relations", kClifford, clifford_relations});
    out.push_back({"clifford.module", kClifford, clifford_module});
    out.push_back({"clifford.involutions", kClifford, clifford_involutions});
    out.push_back({"clifford.reflection", kSpinEquivariant, clifford_reflection});
    out.push_back({"clifford.so", kSpinEquivariant, clifford_so});
    out.push_back({"clifford.symbol", kClifford, clifford_symbol});
    out.push_back({"clifford.faithful", kClifford, clifford_faithful});
    out.push_back({"purespinor.basic", kExtremeSpinors, pure_basic});
    out.push_back({"purespinor.instance", kEvenPure, pure_instance});
    out.push_back({"purespinor.w_iota", kWiota, pure_w_iota});
    out.push_back({"purespinor.roundtrip", kEvenPure, pure_roundtrip});
    out.push_back({"purespinor.parity", kMg, pure_parity});
    out.push_back({"purespinor.subspace", kEvenPure, pure_subspace});
    out.push_back({"purespinor.reflection", kMg, pure_reflection});
    out.push_back({"purespinor.types", kEllWT, pure_types});
}

}  // namespace spinweil::suite
