#include <spinweil/weil.hpp>

#include <spinweil/modular.hpp>

#include <algorithm>
#include <functional>
#include <random>

namespace spinweil {

namespace {

using RVec = std::vector<Rational>;

WeilDatum sixfold(long q)
{
    WeilDatum d;
    d.name = "sixfold-q" + std::to_string(q);
    d.tower = {1, Rational(q)};
    d.n = 3;
    d.eta_hat = RMat::identity(6);
    d.theta.assign(6, std::vector<FCoeff>(6, FCoeff{0, 0}));
    for (int i = 0; i < 3; ++i) {
        d.theta[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 3)] = {1, 0};
        d.theta[static_cast<std::size_t>(i + 3)][static_cast<std::size_t>(i)] = {-1, 0};
    }
    return d;
}

WeilDatum fourfold_rm2()
{
    WeilDatum d;
    d.name = "fourfold-rm2";
    d.tower = {2, Rational(1)};
    d.n = 2;
    d.eta_hat = RMat(4, 4);
    // x1 -> x2, x2 -> 2 x1, x3 -> x4, x4 -> 2 x3
    d.eta_hat(1, 0) = 1;
    d.eta_hat(0, 1) = 2;
    d.eta_hat(3, 2) = 1;
    d.eta_hat(2, 3) = 2;
    d.theta.assign(2, std::vector<FCoeff>(2, FCoeff{0, 0}));
    d.theta[0][1] = {4, 0};
    d.theta[1][0] = {-4, 0};
    return d;
}

RVec unit(std::size_t n, std::size_t i)
{
    RVec v(n, Rational(0));
    v[i] = 1;
    return v;
}

RVec mat_vec(const RMat& m, const RVec& v)
{
    RVec out(m.rows(), Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (sgn(m(i, j)) != 0 && sgn(v[j]) != 0) out[i] += m(i, j) * v[j];
    return out;
}

RVec axpy(const Rational& a, const RVec& x, RVec y)
{
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
    return y;
}

RMV vec_mv(const SpacePtr& sp, const RVec& v)
{
    RMV r(sp);
    for (std::size_t i = 0; i < v.size(); ++i) r.add_term(Mask{1} << i, v[i]);
    return r;
}

template <class S>
Multivector<S> vec_mv_t(const SpacePtr& sp, const std::vector<S>& v)
{
    Multivector<S> r(sp);
    for (std::size_t i = 0; i < v.size(); ++i) r.add_term(Mask{1} << i, v[i]);
    return r;
}

// Greedy F-basis among the standard generators for the operator m (m^2 = p).
std::vector<RVec> greedy_f_basis(const RMat& m, int count)
{
    const std::size_t dim = m.rows();
    std::vector<RVec> chosen, span;
    for (std::size_t j = 0; j < dim && static_cast<int>(chosen.size()) < count; ++j) {
        RVec u = unit(dim, j);
        auto cand = span;
        cand.push_back(u);
        cand.push_back(mat_vec(m, u));
        if (RSub::span(dim, cand).dim() != span.size() + 2) continue;
        span = std::move(cand);
        chosen.push_back(std::move(u));
    }
    return chosen;
}

std::size_t mask_index(const std::vector<Mask>& masks, Mask m)
{
    auto it = std::lower_bound(masks.begin(), masks.end(), m);
    if (it == masks.end() || *it != m) throw std::logic_error("mask outside the degree basis");
    return static_cast<std::size_t>(it - masks.begin());
}

template <class S>
std::vector<S> degree_coords(const Multivector<S>& a, const std::vector<Mask>& masks)
{
    std::vector<S> v(masks.size(), S(0));
    for (const auto& [m, c] : a.terms()) v[mask_index(masks, m)] = c;
    return v;
}

void validate(const WeilDatum& d)
{
    try {
        validate_tower(d.tower);
    } catch (const std::exception& ex) {
        throw DatumError(std::string("tower: ") + ex.what());
    }
    if (d.n < 1 || d.n > 4) throw DatumError("n must lie in 1..4");
    const std::size_t N = static_cast<std::size_t>(2 * d.n);
    if (d.eta_hat.rows() != N || d.eta_hat.cols() != N) throw DatumError("eta_hat must be 2n x 2n");
    const RMat sq = d.eta_hat * d.eta_hat;
    if (!(sq == RMat::identity(N).scaled(Rational(d.tower.p))))
        throw DatumError("eta_hat must square to p");
    if (d.tower.p == 1 && !(d.eta_hat == RMat::identity(N))) throw DatumError("eta_hat must be the identity when p = 1");
    const std::size_t dd = static_cast<std::size_t>(4 * d.n / d.tower.e());
    if ((4 * d.n) % d.tower.e() != 0 || dd % 2 != 0) throw DatumError("F-rank of H^1 must be even");
    if (d.theta.size() != dd) throw DatumError("theta must be d x d with d = 4n/e = " + std::to_string(dd));
    for (std::size_t i = 0; i < dd; ++i) {
        if (d.theta[i].size() != dd) throw DatumError("theta row " + std::to_string(i) + " has the wrong length");
        for (std::size_t j = 0; j < dd; ++j) {
            if (d.tower.p == 1 && sgn(d.theta[i][j][1]) != 0) throw DatumError("theta has a sqrt p part but p = 1");
            if (d.theta[i][j][0] != -d.theta[j][i][0] || d.theta[i][j][1] != -d.theta[j][i][1])
                throw DatumError("theta is not alternating at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
}

}  // namespace

std::vector<std::string> preset_names() { return {"sixfold-q2", "sixfold-q3", "sixfold-q5", "fourfold-rm2"}; }

WeilDatum preset_datum(const std::string& name)
{
    if (name == "sixfold-q2") return sixfold(2);
    if (name == "sixfold-q3") return sixfold(3);
    if (name == "sixfold-q5") return sixfold(5);
    if (name == "fourfold-rm2") return fourfold_rm2();
    throw std::out_of_range("unknown preset: " + name);
}

std::vector<Mask> degree_masks(int arity, int k)
{
    std::vector<Mask> out;
    if (k < 0 || k > arity) return out;
    for (Mask m = 0; m <= full_mask(arity); ++m) {
        if (popcount(m) == k) out.push_back(m);
        if (m == full_mask(arity)) break;
    }
    return out;
}

RMat WeilStructure::eta(const FieldElem& t) const
{
    if (!t.in(Subfield::K)) throw std::invalid_argument("eta: element outside K");
    const std::size_t D = static_cast<std::size_t>(4 * n);
    RMat out = RMat::identity(D).scaled(t[0]);
    if (sgn(t[1]) != 0) out = out + eta_p.scaled(t[1]);
    if (sgn(t[2]) != 0) out = out + eta_q.scaled(t[2]);
    if (sgn(t[3]) != 0) out = out + (eta_p * eta_q).scaled(t[3]);
    return out;
}

FieldElem WeilStructure::pair_F(const RVec& x, const RVec& y) const
{
    const Rational plain = h->pair(x, y);
    if (tower->f_is_q()) return FieldElem(tower, plain);
    Rational half = plain / 2;
    Rational r = h->pair(mat_vec(eta_p, x), y) / (2 * Rational(tower->p()));
    return FieldElem(tower, half, r);
}

void build_spinor(WeilStructure& ws)
{
    const WeilDatum& d = ws.datum;
    const std::size_t N = static_cast<std::size_t>(2 * ws.n);
    if (ws.tower->f_is_q()) {
        for (std::size_t j = 0; j < N; ++j) ws.f_basis.push_back(unit(N, j));
    } else {
        ws.f_basis = greedy_f_basis(d.eta_hat, ws.d);
    }
    if (static_cast<int>(ws.f_basis.size()) != ws.d) throw DatumError("eta_hat does not give an F-basis of H^1");

    ws.theta = RMV(ws.h->S);
    const Rational inv2p = Rational(1) / (2 * Rational(ws.tower->p()));
    for (int a = 0; a < ws.d; ++a)
        for (int b = a + 1; b < ws.d; ++b) {
            const FCoeff& c = d.theta[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            if (sgn(c[0]) == 0 && sgn(c[1]) == 0) continue;
            const RVec& ua = ws.f_basis[static_cast<std::size_t>(a)];
            const RVec& ub = ws.f_basis[static_cast<std::size_t>(b)];
            RVec cu = ua;
            for (auto& x : cu) x *= c[0];
            if (sgn(c[1]) != 0) cu = axpy(c[1], mat_vec(d.eta_hat, ua), cu);
            if (ws.tower->f_is_q()) {
                ws.theta += wedge(vec_mv(ws.h->S, cu), vec_mv(ws.h->S, ub));
            } else {
                ws.theta += wedge(vec_mv(ws.h->S, cu), vec_mv(ws.h->S, ub)) * Rational(frac(1, 2));
                ws.theta += wedge(vec_mv(ws.h->S, mat_vec(d.eta_hat, cu)), vec_mv(ws.h->S, mat_vec(d.eta_hat, ub))) * inv2p;
            }
        }

    ws.theta_sharp = RMat(N, N);
    for (std::size_t k = 0; k < N; ++k) {
        const RMV c = contract_gen(static_cast<int>(k), ws.theta);
        for (const auto& [m, v] : c.terms()) ws.theta_sharp(static_cast<std::size_t>(std::countr_zero(m)), k) = v;
    }
    if (!inverse(ws.theta_sharp)) throw DatumError("theta is degenerate");

    const FieldElem s = FieldElem::sqrt_minus_q(ws.tower);
    ws.spinor = exp_even(to_field(ws.theta) * s);
    ws.alpha = RMV(ws.h->S);
    ws.beta = RMV(ws.h->S);
    for (const auto& [m, c] : ws.spinor.terms()) {
        ws.alpha.add_term(m, c[0]);
        ws.beta.add_term(m, c[2]);
    }
}

void build_W(WeilStructure& ws)
{
    const std::size_t N = static_cast<std::size_t>(2 * ws.n);
    const FieldElem s = FieldElem::sqrt_minus_q(ws.tower);
    ws.W.clear();
    for (std::size_t k = 0; k < N; ++k) {
        std::vector<FieldElem> w(2 * N, FieldElem(ws.tower, 0));
        for (std::size_t i = 0; i < N; ++i) w[i] = -(s * FieldElem(ws.tower, ws.theta_sharp(i, k)));
        w[N + k] = FieldElem(ws.tower, 1);
        ws.W.push_back(std::move(w));
    }
}

void build_eta(WeilStructure& ws)
{
    const std::size_t N = static_cast<std::size_t>(2 * ws.n), D = 2 * N;
    const RMat inv = *inverse(ws.theta_sharp);
    ws.eta_q = RMat(D, D);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            ws.eta_q(i, N + j) = ws.tower->q() * ws.theta_sharp(i, j);
            ws.eta_q(N + i, j) = -inv(i, j);
        }
    ws.eta_p = RMat(D, D);
    const RMat t = ws.datum.eta_hat.transpose();
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            ws.eta_p(i, j) = ws.datum.eta_hat(i, j);
            ws.eta_p(N + i, N + j) = t(i, j);
        }
    const RMat I = RMat::identity(D);
    if (!(ws.eta_q * ws.eta_q == I.scaled(-ws.tower->q()))) throw DatumError("eta(sqrt -q) does not square to -q");
    if (!(ws.eta_p * ws.eta_q == ws.eta_q * ws.eta_p)) throw DatumError("theta is not F-bilinear for eta_hat");
}

void build_WT(WeilStructure& ws)
{
    const std::size_t D = static_cast<std::size_t>(4 * ws.n);
    ws.characters = embeddings_of_K(ws.tower);
    ws.V_sigma.clear();
    const FieldElem sp = FieldElem::sqrt_p(ws.tower), sq = FieldElem::sqrt_minus_q(ws.tower);
    for (const Embedding& e : ws.characters) {
        const std::size_t blocks = ws.tower->f_is_q() ? 1 : 2;
        KMat m(blocks * D, D);
        for (std::size_t i = 0; i < D; ++i)
            for (std::size_t j = 0; j < D; ++j) {
                FieldElem v(ws.tower, ws.eta_q(i, j));
                if (i == j) v -= sq * FieldElem(ws.tower, e.sign_q);
                m(i, j) = v;
                if (blocks == 2) {
                    FieldElem w(ws.tower, ws.eta_p(i, j));
                    if (i == j) w -= sp * FieldElem(ws.tower, e.sign_p);
                    m(D + i, j) = w;
                }
            }
        KSub vs = KSub::span(D, nullspace(m));
        if (vs.dim() != static_cast<std::size_t>(ws.d)) throw DatumError("eigenspace of the wrong dimension");
        ws.V_sigma.push_back(std::move(vs));
    }
    ws.types = enumerate_cm_types(ws.tower);
    ws.WT.clear();
    ws.ell.clear();
    for (const CMType& T : ws.types) {
        KSub sum(D);
        for (const Embedding& e : T.members()) {
            auto it = std::find(ws.characters.begin(), ws.characters.end(), e);
            sum = sum.sum(ws.V_sigma[static_cast<std::size_t>(it - ws.characters.begin())]);
        }
        ws.ell.push_back(pure_spinor_of(*ws.h, sum.basis()));
        ws.WT.push_back(std::move(sum));
    }
}

void build_B(WeilStructure& ws)
{
    const std::size_t D = std::size_t{1} << ws.h->N();
    std::vector<std::vector<FieldElem>> coords;
    for (const auto& l : ws.ell) coords.push_back(spinor_coords(l));
    const RationalForm f = rational_form(coords, D);
    if (!f.certified) throw std::logic_error("secant space is not defined over Q");
    ws.B.clear();
    for (const auto& row : f.space.basis()) ws.B.push_back(spinor_from_coords(ws.h->S, row));
    ws.k_minus = {FieldElem::sqrt_minus_q(ws.tower)};
    if (!ws.tower->f_is_q()) ws.k_minus.push_back(FieldElem::sqrt_p(ws.tower) * FieldElem::sqrt_minus_q(ws.tower));
}

RMat xi_form(const WeilStructure& ws, const FieldElem& t)
{
    const RMat et = ws.eta(t);
    const std::size_t D = et.rows();
    RMat g(D, D);
    for (std::size_t a = 0; a < D; ++a)
        for (std::size_t b = 0; b < D; ++b) g(a, b) = et(static_cast<std::size_t>(ws.h->partner(static_cast<int>(b))), a);
    return g;
}

RMV form_to_bivector(const HyperbolicSpace& h, const RMat& form)
{
    RMV out(h.V);
    for (int a = 0; a < h.dim(); ++a)
        for (int b = a + 1; b < h.dim(); ++b)
            out.add_term((Mask{1} << a) | (Mask{1} << b),
                         form(static_cast<std::size_t>(h.partner(a)), static_cast<std::size_t>(h.partner(b))));
    return out;
}

void build_forms(WeilStructure& ws)
{
    ws.xi_matrix.clear();
    ws.A2.clear();
    for (const FieldElem& t : ws.k_minus) {
        RMat g = xi_form(ws, t);
        if (!(g.transpose() == g.scaled(Rational(-1)))) throw std::logic_error("Xi_t is not alternating");
        ws.A2.push_back(form_to_bivector(*ws.h, g));
        ws.xi_matrix.push_back(std::move(g));
    }
}

void build_HW(WeilStructure& ws)
{
    const auto masks = degree_masks(ws.h->dim(), ws.d);
    std::vector<std::vector<FieldElem>> coords;
    for (const KSub& vs : ws.V_sigma) {
        KMV w = KMV::scalar(ws.h->V, FieldElem(ws.tower, 1));
        for (const auto& v : vs.basis()) w = wedge(w, vec_mv_t(ws.h->V, v));
        coords.push_back(degree_coords(w, masks));
    }
    const RationalForm f = rational_form(coords, masks.size());
    if (!f.certified) throw std::logic_error("Hodge-Weil lines are not defined over Q");
    ws.HW.clear();
    for (const auto& row : f.space.basis()) {
        RMV m(ws.h->V);
        for (std::size_t i = 0; i < row.size(); ++i) m.add_term(masks[i], row[i]);
        ws.HW.push_back(std::move(m));
    }
}

void lie_gB(WeilStructure& ws)
{
    const auto bi = degree_masks(ws.h->dim(), 2);
    const std::size_t D = std::size_t{1} << ws.h->N();
    RMat m(ws.B.size() * D, bi.size());
    for (std::size_t c = 0; c < bi.size(); ++c) {
        const SoPair<Rational> sp = so_pair(*ws.h, RMV::basis(ws.h->V, bi[c]));
        for (std::size_t b = 0; b < ws.B.size(); ++b) {
            const RMV img = spin_action(*ws.h, sp, ws.B[b]);
            for (const auto& [o, v] : img.terms()) m(b * D + o, c) = v;
        }
    }
    ws.gB.clear();
    for (const auto& v : nullspace(m)) {
        RMV x(ws.h->V);
        for (std::size_t i = 0; i < v.size(); ++i) x.add_term(bi[i], v[i]);
        ws.gB.push_back(std::move(x));
    }
}

WeilStructure build_weil(const WeilDatum& datum)
{
    validate(datum);
    WeilStructure ws;
    ws.datum = datum;
    ws.tower = make_tower(datum.tower);
    ws.h = &hyperbolic(datum.n);
    ws.n = datum.n;
    ws.e = datum.tower.e();
    ws.d = 4 * datum.n / ws.e;
    build_spinor(ws);
    build_W(ws);
    build_eta(ws);
    build_WT(ws);
    build_B(ws);
    build_forms(ws);
    build_HW(ws);
    lie_gB(ws);
    return ws;
}

RMat eta_q_by_decomposition(const WeilStructure& ws)
{
    const std::size_t D = static_cast<std::size_t>(4 * ws.n), N = D / 2;
    const FieldElem s = FieldElem::sqrt_minus_q(ws.tower);
    KMat M(D, D), MD(D, D);
    for (std::size_t k = 0; k < N; ++k)
        for (std::size_t i = 0; i < D; ++i) {
            const FieldElem w = ws.W[k][i];
            const FieldElem wb = w.iota();
            M(i, k) = w;
            M(i, N + k) = wb;
            MD(i, k) = s * w;
            MD(i, N + k) = -(s * wb);
        }
    const auto Minv = inverse(M);
    if (!Minv) throw std::logic_error("W and its conjugate do not span V");
    const KMat E = MD * *Minv;
    RMat out(D, D);
    for (std::size_t i = 0; i < D; ++i)
        for (std::size_t j = 0; j < D; ++j) {
            if (!E(i, j).is_rational()) throw std::logic_error("eta(sqrt -q) is not rational");
            out(i, j) = E(i, j)[0];
        }
    return out;
}

FieldElem hermitian_form(const WeilStructure& ws, const FieldElem& t, const RVec& x, const RVec& y)
{
    FieldElem a = ws.pair_F(x, y) * (t * t);
    FieldElem b = ws.pair_F(mat_vec(ws.eta(t), x), y) * t;
    return b - a;
}

Rational theta_on_y(const WeilStructure& ws, int j, int k)
{
    return ws.theta_sharp(static_cast<std::size_t>(k), static_cast<std::size_t>(j));
}

SplitWitness split_check(const WeilStructure& ws, const FieldElem& t)
{
    const std::size_t N = static_cast<std::size_t>(2 * ws.n), D = 2 * N;
    // F-lines of H^1(X^) spanned by standard y generators
    std::vector<int> lines;
    if (ws.tower->f_is_q()) {
        for (std::size_t j = 0; j < N; ++j) lines.push_back(static_cast<int>(j));
    } else {
        const RMat tr = ws.datum.eta_hat.transpose();
        const auto fb = greedy_f_basis(tr, ws.d);
        for (const auto& v : fb)
            lines.push_back(static_cast<int>(std::find(v.begin(), v.end(), Rational(1)) - v.begin()));
    }
    std::vector<FieldElem> kbasis = {FieldElem(ws.tower, 1), FieldElem::sqrt_minus_q(ws.tower)};
    if (!ws.tower->f_is_q()) {
        kbasis.push_back(FieldElem::sqrt_p(ws.tower));
        kbasis.push_back(FieldElem::sqrt_p(ws.tower) * FieldElem::sqrt_minus_q(ws.tower));
    }
    std::vector<RMat> etas;
    for (const auto& s : kbasis) etas.push_back(ws.eta(s));

    SplitWitness out;
    const std::size_t half = static_cast<std::size_t>(ws.d / 2);
    std::vector<int> pick;
    std::function<bool(std::size_t)> rec = [&](std::size_t start) -> bool {
        if (pick.size() == half) {
            std::vector<RVec> gens;
            for (int j : pick)
                for (const auto& e : etas) gens.push_back(mat_vec(e, unit(D, N + static_cast<std::size_t>(j))));
            const RSub z = RSub::span(D, gens);
            for (std::size_t a = 0; a < z.dim(); ++a)
                for (std::size_t b = 0; b < z.dim(); ++b)
                    if (!hermitian_form(ws, t, z.basis()[a], z.basis()[b]).is_zero()) return false;
            out.found = true;
            out.y_indices = pick;
            out.z_basis = z.basis();
            out.k_dim = z.dim() / static_cast<std::size_t>(ws.e);
            return true;
        }
        for (std::size_t i = start; i < lines.size(); ++i) {
            pick.push_back(lines[i]);
            if (rec(i + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    rec(0);
    return out;
}

std::vector<RMV> generated_degree(const WeilStructure& ws, int k)
{
    std::vector<RMV> out;
    if (k < 0 || k > ws.h->dim()) return out;
    // multisets of A2 factors (r of them) and HW factors (s of them) with 2r + d s = k
    std::function<void(const std::vector<RMV>&, std::size_t, int, RMV, std::vector<RMV>&)> multisets =
        [&](const std::vector<RMV>& items, std::size_t from, int left, RMV acc, std::vector<RMV>& sink) {
            if (left == 0) {
                sink.push_back(std::move(acc));
                return;
            }
            for (std::size_t i = from; i < items.size(); ++i) multisets(items, i, left - 1, wedge(acc, items[i]), sink);
        };
    const RMV one = RMV::scalar(ws.h->V, Rational(1));
    for (int r = 0; 2 * r <= k; ++r) {
        const int rest = k - 2 * r;
        if (rest % ws.d != 0) continue;
        const int s = rest / ws.d;
        std::vector<RMV> xs, hs;
        multisets(ws.A2, 0, r, one, xs);
        multisets(ws.HW, 0, s, one, hs);
        for (const auto& a : xs)
            for (const auto& b : hs) {
                RMV p = wedge(a, b);
                if (!p.is_zero()) out.push_back(std::move(p));
            }
    }
    return out;
}

InvariantDegree invariants_and_generation(const WeilStructure& ws, int k)
{
    InvariantDegree out;
    out.k = k;
    const auto masks = degree_masks(ws.h->dim(), k);
    out.wedge_dim = masks.size();
    out.generated = generated_degree(ws, k);
    std::vector<RVec> gcoords;
    for (const auto& g : out.generated) gcoords.push_back(degree_coords(g, masks));
    const RSub gspan = RSub::span(masks.size(), gcoords);
    out.generated_dim = gspan.dim();

    std::vector<RMat> ads;
    for (const auto& xi : ws.gB) ads.push_back(so_pair(*ws.h, xi).ad);
    out.generators_invariant = true;
    for (const auto& ad : ads)
        for (const auto& g : out.generated)
            if (!derivation(ad, g).is_zero()) out.generators_invariant = false;

    std::vector<SparseRow> rows;
    for (const auto& ad : ads) {
        std::map<Mask, SparseRow> by_out;
        for (std::size_t c = 0; c < masks.size(); ++c) {
            const RMV img = derivation(ad, RMV::basis(ws.h->V, masks[c]));
            for (const auto& [o, v] : img.terms()) by_out[o].emplace_back(static_cast<std::uint32_t>(c), v);
        }
        for (auto& [o, row] : by_out) rows.push_back(std::move(row));
    }
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(k));
    std::shuffle(rows.begin(), rows.end(), rng);

    const std::size_t lower = out.generators_invariant ? out.generated_dim : 0;
    const ModularKernel bound = modular_kernel(rows, masks.size(), lower, 1);
    out.invariant_dim = bound.kernel_dim_mod_p;
    out.rows_used = bound.rows_used;
    out.certified_equal = out.generators_invariant && bound.kernel_dim_mod_p == out.generated_dim;
    if (!out.certified_equal) {
        // recover the invariant space itself to report the gap exactly
        const ModularKernel full = modular_kernel(rows, masks.size(), 0);
        if (full.reconstructed) {
            out.reconstructed = true;
            out.invariant_dim = full.kernel.size();
            const RSub inv = RSub::span(masks.size(), full.kernel);
            out.certified_equal = out.generators_invariant && inv.contains(gspan) && inv.dim() == gspan.dim();
        }
    }
    return out;
}

}  // namespace spinweil
