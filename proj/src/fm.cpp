#include <spinweil/fm.hpp>

#include <map>

namespace spinweil {

Mask ProductAlgebra::factor_mask(int i) const
{
    const auto k = static_cast<std::size_t>(i);
    return full_mask(factors[k]->arity()) << offsets[k];
}

SpacePtr ProductAlgebra::remainder(int i) const
{
    std::vector<std::string> labels;
    for (int f = 0; f < count(); ++f)
        if (f != i)
            for (const auto& l : factors[static_cast<std::size_t>(f)]->labels) labels.push_back(l);
    return make_space(std::move(labels));
}

ProductAlgebra make_product(std::vector<SpacePtr> factors, SpacePtr joint)
{
    ProductAlgebra P;
    int off = 0;
    std::vector<std::string> labels;
    for (const auto& f : factors) {
        P.offsets.push_back(off);
        off += f->arity();
    }
    P.factors = std::move(factors);
    if (!joint) {
        joint = P.factors.front();
        for (std::size_t i = 1; i < P.factors.size(); ++i) joint = join_spaces(joint, P.factors[i]);
    }
    if (joint->arity() != off) throw std::invalid_argument("product: joint arity differs from the factors");
    P.joint = std::move(joint);
    return P;
}

TransformMap::TransformMap(std::string name, SpacePtr src, SpacePtr dst, BasisFn fn) : st_(std::make_shared<State>())
{
    st_->name = std::move(name);
    st_->src = std::move(src);
    st_->dst = std::move(dst);
    st_->fn = std::move(fn);
}

RMV TransformMap::image(Mask m) const
{
    {
        std::lock_guard<std::mutex> lock(st_->mu);
        auto it = st_->cache.find(m);
        if (it != st_->cache.end()) return it->second;
    }
    // computed outside the lock; a duplicate evaluation gives the same value
    RMV v = st_->fn(m);
    if (!same_space(v.space(), st_->dst)) throw std::logic_error(st_->name + ": basis image on the wrong space");
    std::lock_guard<std::mutex> lock(st_->mu);
    return st_->cache.emplace(m, std::move(v)).first->second;
}

TransformMap TransformMap::then(const TransformMap& next) const
{
    if (!same_space(st_->dst, next.source())) throw std::invalid_argument("compose: spaces do not match");
    TransformMap first = *this;
    return TransformMap(next.name() + " o " + name(), st_->src, next.target(),
                        [first, next](Mask m) { return next.apply(first.image(m)); });
}

namespace {

template <class T>
const T& cached(int n, std::map<int, std::unique_ptr<T>>& cache, std::mutex& mu, const std::function<T(int)>& make)
{
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<T>(make(n));
    return *slot;
}

const TransformMap& cached_map(const std::string& kind, int n, const std::function<TransformMap()>& make)
{
    static std::mutex mu;
    static std::map<std::pair<std::string, int>, std::unique_ptr<TransformMap>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({kind, n});
        if (it != cache.end()) return *it->second;
    }
    TransformMap t = make();
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{kind, n}];
    if (!slot) slot = std::make_unique<TransformMap>(std::move(t));
    return *slot;
}

// 1 - y_i ^ x'_i multiplied out on x, x', y
RMV kernel_XXXhat(int n)
{
    const int N = 2 * n;
    const ProductAlgebra& P = product_XXXhat(n);
    RMV c(P.joint);
    for (int i = 0; i < N; ++i) c.add_term((Mask{1} << (N + i)) | (Mask{1} << (2 * N + i)), 1);
    return exp_even(c);
}

RMV shear(int n, const RMV& a, int sign)
{
    const int N = 2 * n;
    const ProductAlgebra& P = product_XX(n);
    std::vector<RMV> images;
    for (int i = 0; i < N; ++i) {
        RMV g = RMV::generator(P.joint, i);
        g.add_term(Mask{1} << (N + i), Rational(sign));
        images.push_back(std::move(g));
    }
    for (int i = 0; i < N; ++i) images.push_back(RMV::generator(P.joint, N + i));
    return substitute(a, images, P.joint);
}

}  // namespace

SpacePtr hat_space(int n)
{
    static std::mutex mu;
    static std::map<int, std::unique_ptr<SpacePtr>> cache;
    return cached<SpacePtr>(n, cache, mu, [](int k) {
        std::vector<std::string> l;
        for (int i = 1; i <= 2 * k; ++i) l.push_back("y" + std::to_string(i));
        return make_space(std::move(l));
    });
}

const ProductAlgebra& product_XX(int n)
{
    static std::mutex mu;
    static std::map<int, std::unique_ptr<ProductAlgebra>> cache;
    return cached<ProductAlgebra>(n, cache, mu, [](int k) {
        const SpacePtr& s = hyperbolic(k).S;
        return make_product({s, s});
    });
}

const ProductAlgebra& product_XXhat(int n)
{
    static std::mutex mu;
    static std::map<int, std::unique_ptr<ProductAlgebra>> cache;
    return cached<ProductAlgebra>(n, cache, mu, [](int k) {
        return make_product({hyperbolic(k).S, hat_space(k)}, hyperbolic(k).V);
    });
}

const ProductAlgebra& product_XXXhat(int n)
{
    static std::mutex mu;
    static std::map<int, std::unique_ptr<ProductAlgebra>> cache;
    return cached<ProductAlgebra>(n, cache, mu, [](int k) {
        const SpacePtr& s = hyperbolic(k).S;
        return make_product({s, s, hat_space(k)});
    });
}

RMV poincare_class(int n)
{
    const HyperbolicSpace& h = hyperbolic(n);
    RMV c(h.V);
    for (int i = 0; i < h.N(); ++i) c.add_term((Mask{1} << i) | (Mask{1} << (h.N() + i)), 1);
    return c;
}

RMV poincare_class_hat_first(int n)
{
    const int N = 2 * n;
    RMV c(join_spaces(hat_space(n), hyperbolic(n).S));
    for (int i = 0; i < N; ++i) c.add_term((Mask{1} << i) | (Mask{1} << (N + i)), -1);
    return c;
}

TransformMap fm_poincare(int n, FMDirection dir)
{
    const bool to_x = dir == FMDirection::ToX;
    return cached_map(to_x ? "PhiP" : "PhiP-hat", n, [n, to_x] {
        const ProductAlgebra& P = product_XXhat(n);
        const RMV K = exp_even(poincare_class(n));
        const int from = to_x ? 1 : 0;
        const SpacePtr src = P.factors[static_cast<std::size_t>(from)];
        const SpacePtr dst = P.factors[static_cast<std::size_t>(1 - from)];
        return TransformMap(to_x ? "Phi_P" : "Phi_P^hat", src, dst, [P, K, from, src, dst](Mask m) {
            const RMV pulled = pullback_factor(P, from, RMV::basis(src, m));
            return pushforward_factor(P, wedge(pulled, K), from, dst);
        });
    });
}

RMV mu_pushforward(int n, const RMV& a) { return shear(n, a, -1); }

RMV id_tau(int n, const RMV& a) { return id_tau_t(n, a); }

TransformMap orlov_forward(int n)
{
    return cached_map("orlov-forward", n, [n] {
        const int N = 2 * n;
        const ProductAlgebra& P3 = product_XXXhat(n);
        const ProductAlgebra& XX = product_XX(n);
        const RMV K = kernel_XXXhat(n);
        return TransformMap("mu_* o (id x Phi_P)", hyperbolic(n).V, XX.joint, [n, N, P3, XX, K](Mask m) {
            const Mask A = m & full_mask(N), B = m >> N;
            const RMV pulled = RMV::basis(P3.joint, A | (B << (2 * N)));
            const RMV pushed = pushforward_factor(P3, wedge(pulled, K), 2, XX.joint);
            return mu_pushforward(n, pushed);
        });
    });
}

TransformMap orlov_phiH(int n)
{
    return cached_map("orlov", n, [n] {
        const int N = 2 * n;
        const ProductAlgebra& P3 = product_XXXhat(n);
        const ProductAlgebra& XX = product_XX(n);
        const HyperbolicSpace& h = hyperbolic(n);
        const RMV K = kernel_XXXhat(n);
        std::vector<RMV> images;
        for (int i = 0; i < N; ++i) {
            RMV g = RMV::generator(P3.joint, i);
            g.add_term(Mask{1} << (N + i), 1);
            images.push_back(std::move(g));
        }
        for (int i = 0; i < N; ++i) images.push_back(RMV::generator(P3.joint, N + i));
        return TransformMap("Phi^H", XX.joint, h.V, [n, N, P3, XX, K, images, &h](Mask m) {
            const RMV pulled = substitute(RMV::basis(XX.joint, m), images, P3.joint);
            const RMV pushed = pushforward_factor(P3, wedge(pulled, K), 1, h.V);
            RMV out(h.V);
            for (const auto& [o, c] : pushed.terms()) {
                const bool neg = ((n + popcount(o >> N)) & 1) != 0;
                out.add_term(o, neg ? Rational(-c) : c);
            }
            return out;
        });
    });
}

TransformMap phiH_twisted(int n)
{
    return cached_map("orlov-twisted", n, [n] {
        const TransformMap phi = orlov_phiH(n);
        const int N = 2 * n;
        return TransformMap("Phi^H o (id x tau)", phi.source(), phi.target(), [phi, N](Mask m) {
            RMV img = phi.image(m);
            if (tau_sign(popcount(m >> N)) < 0) img = -img;
            return img;
        });
    });
}

TransformMap phi_tilde(int n)
{
    return cached_map("phi-tilde", n, [n] {
        const TransformMap tw = phiH_twisted(n);
        const RMV E = exp_even(poincare_class(n) * Rational(frac(-1, 2)));
        return TransformMap("phi~", tw.source(), tw.target(), [tw, E](Mask m) { return wedge(E, tw.image(m)); });
    });
}

RMV diagonal_spin_action(const HyperbolicSpace& h, const SoPair<Rational>& sp, const RMV& c)
{
    const int N = h.N();
    RMV r(c.space());
    for (const auto& [m, v] : c.terms()) {
        const Mask A = m & full_mask(N), B = m >> N;
        const RMV left = spin_action(h, sp, RMV::basis(h.S, A));
        const RMV right = spin_action(h, sp, RMV::basis(h.S, B));
        for (const auto& [o, w] : left.terms()) r.add_term(o | (B << N), v * w);
        for (const auto& [o, w] : right.terms()) r.add_term(A | (o << N), v * w);
    }
    return r;
}

RMV chevalley(int n, const RMV& s, const RMV& s2)
{
    const HyperbolicSpace& h = hyperbolic(n);
    const SpinorOperator<Rational> op = [&](Mask C) { return s * s_pairing(s2, RMV::basis(h.S, C)); };
    return dequantize(h, desymbol(h, op));
}

TransformMap star_map(int n)
{
    return cached_map("star", n, [n] {
        const HyperbolicSpace& h = hyperbolic(n);
        const TransformMap to_x = fm_poincare(n, FMDirection::ToX);
        const TransformMap to_hat = fm_poincare(n, FMDirection::ToXhat);
        const int N = 2 * n;
        return TransformMap("star", h.V, h.V, [&h, to_x, to_hat, N, n](Mask m) {
            const Mask A = m & full_mask(N), B = m >> N;
            const RMV first = to_x.image(B);
            RMV second = to_hat.image(A);
            // Phi_P^{-1} = Phi_P^hat composed with (-1)^{n + deg}
            if ((n + popcount(A)) & 1) second = -second;
            RMV out = kunneth(first, second, h.V);
            if ((popcount(A) * popcount(B)) & 1) out = -out;
            return out;
        });
    });
}

ScalarComparison compare_with_chevalley(int n, const std::vector<std::pair<Mask, Mask>>& pairs)
{
    const HyperbolicSpace& h = hyperbolic(n);
    const ProductAlgebra& XX = product_XX(n);
    const TransformMap pt = phi_tilde(n), st = star_map(n);
    std::vector<std::pair<Mask, Mask>> todo = pairs;
    if (todo.empty())
        for (Mask a = 0; a <= full_mask(h.N()); ++a)
            for (Mask b = 0; b <= full_mask(h.N()); ++b) todo.emplace_back(a, b);
    ScalarComparison out;
    bool have = false;
    for (const auto& [a, b] : todo) {
        const RMV s = RMV::basis(h.S, a), s2 = RMV::basis(h.S, b);
        const RMV lhs = pt.apply(kunneth(s, s2, XX.joint));
        const RMV rhs = st.apply(chevalley(n, s, s2));
        ++out.pairs_checked;
        if (rhs.is_zero()) {
            if (!lhs.is_zero()) return out;
            continue;
        }
        const auto& [m0, c0] = *rhs.terms().begin();
        const Rational c = lhs.coeff(m0) / c0;
        if (!have) {
            out.scalar = c;
            have = true;
        }
        if (c != out.scalar || !(lhs == rhs * out.scalar)) return out;
    }
    out.proportional = have;
    return out;
}

BBData bb_data(const WeilStructure& ws)
{
    BBData bb;
    bb.m = ws.B.size();
    const std::size_t D = std::size_t{1} << ws.h->N(), t = ws.ell.size();
    KMat M(D, bb.m);
    for (std::size_t i = 0; i < bb.m; ++i)
        for (const auto& [mask, c] : ws.B[i].terms()) M(mask, i) = FieldElem(c);
    bb.L = KMat(t, bb.m);
    for (std::size_t T = 0; T < t; ++T) {
        const auto x = solve(M, spinor_coords(ws.ell[T]));
        if (!x) throw std::logic_error("pure spinor outside the secant space");
        for (std::size_t i = 0; i < bb.m; ++i) bb.L(T, i) = (*x)[i];
    }
    const auto inv = inverse(bb.L);
    if (!inv) throw std::logic_error("pure spinors do not form a basis of the secant space");
    bb.Linv = *inv;
    bb.overlap.assign(t, std::vector<int>(t, 0));
    int kmax = 0;
    for (std::size_t T = 0; T < t; ++T)
        for (std::size_t U = 0; U < t; ++U) {
            bb.overlap[T][U] = overlap(ws.types[T], ws.types[U]);
            kmax = std::max(kmax, bb.overlap[T][U]);
        }
    for (int k = 0; k <= kmax; ++k) {
        std::vector<std::vector<FieldElem>> vecs;
        for (std::size_t T = 0; T < t; ++T)
            for (std::size_t U = 0; U < t; ++U) {
                if (bb.overlap[T][U] != k) continue;
                std::vector<FieldElem> v(bb.m * bb.m, FieldElem(0));
                for (std::size_t i = 0; i < bb.m; ++i)
                    for (std::size_t j = 0; j < bb.m; ++j) v[i * bb.m + j] = bb.L(T, i) * bb.L(U, j);
                vecs.push_back(std::move(v));
            }
        const RationalForm f = rational_form(vecs, bb.m * bb.m);
        bb.BB.push_back(f.space);
        bb.certified.push_back(f.certified);
    }
    return bb;
}

BBDecomposition bb_decompose(const WeilStructure& ws, const BBData& bb, const RMat& c)
{
    if (c.rows() != bb.m || c.cols() != bb.m) throw std::invalid_argument("bb_decompose: coefficient matrix size");
    const std::size_t t = ws.ell.size();
    BBDecomposition out;
    out.gamma_TT.assign(t, std::vector<FieldElem>(t, FieldElem(0)));
    for (std::size_t T = 0; T < t; ++T)
        for (std::size_t U = 0; U < t; ++U) {
            FieldElem acc(0);
            for (std::size_t i = 0; i < bb.m; ++i)
                for (std::size_t j = 0; j < bb.m; ++j)
                    if (sgn(c(i, j)) != 0) acc += bb.Linv(i, T) * bb.Linv(j, U) * FieldElem(c(i, j));
            out.gamma_TT[T][U] = acc;
        }
    out.gamma_k.assign(bb.BB.size(), std::vector<Rational>(bb.m * bb.m, Rational(0)));
    for (std::size_t k = 0; k < bb.BB.size(); ++k)
        for (std::size_t i = 0; i < bb.m; ++i)
            for (std::size_t j = 0; j < bb.m; ++j) {
                FieldElem acc(0);
                for (std::size_t T = 0; T < t; ++T)
                    for (std::size_t U = 0; U < t; ++U)
                        if (bb.overlap[T][U] == static_cast<int>(k) && !out.gamma_TT[T][U].is_zero())
                            acc += out.gamma_TT[T][U] * bb.L(T, i) * bb.L(U, j);
                if (!acc.is_rational()) throw std::logic_error("graded component is not rational");
                out.gamma_k[k][i * bb.m + j] = acc.to_rational();
            }
    return out;
}

namespace {

std::vector<Mask> b_pivots(const WeilStructure& ws)
{
    std::vector<Mask> piv;
    for (const auto& b : ws.B) piv.push_back(b.terms().begin()->first);
    return piv;
}

}  // namespace

RMV tensor_of(const WeilStructure& ws, const std::vector<Rational>& flat)
{
    const ProductAlgebra& XX = product_XX(ws.n);
    const std::size_t m = ws.B.size();
    RMV out(XX.joint);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (sgn(flat[i * m + j]) != 0) out += kunneth(ws.B[i], ws.B[j], XX.joint) * flat[i * m + j];
    return out;
}

std::optional<RMat> tensor_coords(const WeilStructure& ws, const RMV& c)
{
    const std::size_t m = ws.B.size();
    const auto piv = b_pivots(ws);
    RMat out(m, m);
    std::vector<Rational> flat(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            out(i, j) = c.coeff(piv[i] | (piv[j] << ws.h->N()));
            flat[i * m + j] = out(i, j);
        }
    if (!(tensor_of(ws, flat) == c)) return std::nullopt;
    return out;
}

KMV ell_tensor(const WeilStructure& ws, std::size_t T, std::size_t T2)
{
    return kunneth(ws.ell[T], ws.ell[T2], product_XX(ws.n).joint);
}

RMV Pi(const WeilStructure& ws, const std::vector<Rational>& flat)
{
    return degree_part(phi_tilde(ws.n).apply(tensor_of(ws, flat)), ws.d);
}

KMV Pi_TT(const WeilStructure& ws, std::size_t T, std::size_t T2)
{
    return degree_part(phi_tilde(ws.n).apply(ell_tensor(ws, T, T2)), ws.d);
}

OverlapFiltration overlap_filtration(const WeilStructure& ws, std::size_t T, std::size_t T2)
{
    OverlapFiltration out;
    out.T = T;
    out.T2 = T2;
    out.k = overlap(ws.types[T], ws.types[T2]);
    const KMV img = phiH_twisted(ws.n).apply(ell_tensor(ws, T, T2));
    if (img.is_zero()) return out;
    out.level = filtration_level(img);
    const int want = ws.d * out.k;
    out.level_ok = out.level >= want;
    const KSub I = ws.WT[T].intersect(ws.WT[T2]);
    out.intersection_dim = I.dim();
    KMV w = KMV::scalar(ws.h->V, FieldElem(1));
    for (const auto& v : I.basis()) {
        KMV g(ws.h->V);
        for (std::size_t i = 0; i < v.size(); ++i) g.add_term(Mask{1} << i, v[i]);
        w = wedge(w, g);
    }
    const KMV lead = degree_part(img, want);
    if (I.dim() == static_cast<std::size_t>(want) && !lead.is_zero() && !w.is_zero()) {
        const auto& [m0, c0] = *w.terms().begin();
        const FieldElem r = lead.coeff(m0) / c0;
        out.line_ok = !r.is_zero() && lead == w * r;
    }
    return out;
}

}  // namespace spinweil
