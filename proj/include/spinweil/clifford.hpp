#ifndef SPINWEIL_CLIFFORD_HPP
#define SPINWEIL_CLIFFORD_HPP

#include <spinweil/exterior.hpp>
#include <spinweil/linalg.hpp>

#include <algorithm>
#include <functional>

namespace spinweil {

// V = H^1(X) + H^1(X^) of rank 4n. Generator g < 2n is x_{g+1}, g >= 2n is y_{g-2n+1}.
struct HyperbolicSpace {
    int n = 0;
    SpacePtr V;  // 4n generators
    SpacePtr S;  // 2n generators, the spinors

    int N() const { return 2 * n; }
    int dim() const { return 4 * n; }
    bool is_x(int g) const { return g < N(); }
    int partner(int g) const { return is_x(g) ? g + N() : g - N(); }
    int gram(int a, int b) const { return (a != b && (a == b + N() || b == a + N())) ? 1 : 0; }

    template <class S2>
    S2 pair(const std::vector<S2>& v, const std::vector<S2>& w) const
    {
        S2 acc(0);
        for (int i = 0; i < N(); ++i) {
            const auto a = static_cast<std::size_t>(i), b = static_cast<std::size_t>(i + N());
            if (!is_zero(v[a]) && !is_zero(w[b])) acc += v[a] * w[b];
            if (!is_zero(v[b]) && !is_zero(w[a])) acc += v[b] * w[a];
        }
        return acc;
    }

    RMat gram_matrix() const;
};

// Shared per n so that generator spaces compare by pointer.
const HyperbolicSpace& hyperbolic(int n);

// Clifford elements: normal-ordered monomials x_A y_B stored as masks over V.
template <class S>
using CliffordElem = Multivector<S>;

namespace detail {

// y_B applied to x_C (rightmost y first). Returns 0 when some y misses.
inline int y_block_on(Mask B, Mask C, int N, Mask& out)
{
    int sign = 1;
    Mask cur = C;
    for (Mask r = B; r;) {
        int j = 31 - std::countl_zero(r);
        r &= ~(Mask{1} << j);
        const Mask bit = Mask{1} << j;
        if (!(cur & bit)) return 0;
        if (std::popcount(static_cast<Mask>(cur & (bit - 1))) & 1) sign = -sign;
        cur ^= bit;
    }
    (void)N;
    out = cur;
    return sign;
}

}  // namespace detail

// x_A y_B acting on the basis spinor x_C; sign 0 means the result vanishes.
inline int monomial_on_basis(Mask m, Mask C, int N, Mask& out)
{
    const Mask A = m & full_mask(N), B = m >> N;
    Mask rest = 0;
    int s = detail::y_block_on(B, C, N, rest);
    if (s == 0 || (A & rest)) return 0;
    out = A | rest;
    return s * wedge_sign(A, rest);
}

template <class S>
Multivector<S> clifford_action(const HyperbolicSpace& h, const CliffordElem<S>& a, const Multivector<S>& lam)
{
    Multivector<S> r(h.S);
    for (const auto& [m, c] : a.terms())
        for (const auto& [C, l] : lam.terms()) {
            Mask out = 0;
            int s = monomial_on_basis(m, C, h.N(), out);
            if (s == 0) continue;
            S v = c * l;
            if (s < 0) v = -v;
            r.add_term(out, v);
        }
    return r;
}

template <class S>
CliffordElem<S> vector_elem(const HyperbolicSpace& h, const std::vector<S>& v)
{
    CliffordElem<S> r(h.V);
    for (int g = 0; g < h.dim(); ++g) r.add_term(Mask{1} << g, v[static_cast<std::size_t>(g)]);
    return r;
}

template <class S>
Multivector<S> vector_action(const HyperbolicSpace& h, const std::vector<S>& v, const Multivector<S>& lam)
{
    return clifford_action(h, vector_elem(h, v), lam);
}

// Left multiplication of a normal-ordered element by generator g.
template <class S>
CliffordElem<S> gen_mul(const HyperbolicSpace& h, int g, const CliffordElem<S>& b)
{
    const int N = h.N();
    CliffordElem<S> r(h.V);
    for (const auto& [m, c] : b.terms()) {
        const Mask A = m & full_mask(N), B = m >> N;
        if (h.is_x(g)) {
            const Mask bit = Mask{1} << g;
            if (A & bit) continue;
            bool odd = std::popcount(static_cast<Mask>(A & (bit - 1))) & 1;
            r.add_term((A | bit) | (B << N), odd ? S(-c) : c);
        } else {
            const int j = g - N;
            const Mask bit = Mask{1} << j;
            if (A & bit) {
                bool odd = std::popcount(static_cast<Mask>(A & (bit - 1))) & 1;
                r.add_term((A ^ bit) | (B << N), odd ? S(-c) : c);
            }
            if (!(B & bit)) {
                bool odd = ((std::popcount(A) + std::popcount(static_cast<Mask>(B & (bit - 1)))) & 1) != 0;
                r.add_term(A | ((B | bit) << N), odd ? S(-c) : c);
            }
        }
    }
    return r;
}

template <class S>
CliffordElem<S> clifford_mul(const HyperbolicSpace& h, const CliffordElem<S>& a, const CliffordElem<S>& b)
{
    CliffordElem<S> r(h.V);
    for (const auto& [m, c] : a.terms()) {
        CliffordElem<S> t = b;
        for (Mask rest = m; rest;) {
            int g = 31 - std::countl_zero(rest);
            rest &= ~(Mask{1} << g);
            t = gen_mul(h, g, t);
        }
        r += t * c;
    }
    return r;
}

// Reverses every monomial: v1...vr -> vr...v1, renormal-ordered.
template <class S>
CliffordElem<S> main_antiinv(const HyperbolicSpace& h, const CliffordElem<S>& a)
{
    CliffordElem<S> r(h.V);
    for (const auto& [m, c] : a.terms()) {
        CliffordElem<S> t = CliffordElem<S>::scalar(h.V, c);
        // reversed product g1 g2 ... gr -> gr ... g1: left-multiply by g1 first
        for (Mask rest = m; rest; rest &= rest - 1) t = gen_mul(h, std::countr_zero(rest), t);
        r += t;
    }
    return r;
}

template <class S>
CliffordElem<S> main_inv(const HyperbolicSpace& h, const CliffordElem<S>& a)
{
    CliffordElem<S> r(h.V);
    for (const auto& [m, c] : a.terms()) r.add_term(m, (popcount(m) & 1) ? S(-c) : c);
    return r;
}

template <class S>
CliffordElem<S> star(const HyperbolicSpace& h, const CliffordElem<S>& a)
{
    return main_antiinv(h, main_inv(h, a));
}

// rho_v(w) = v w v^{-1}; requires (v,v) = +-2.
template <class S>
std::vector<S> reflection(const HyperbolicSpace& h, const std::vector<S>& v, const std::vector<S>& w)
{
    const S vv = h.pair(v, v);
    if (!(vv == S(2) || vv == S(-2))) throw std::invalid_argument("reflection: (v,v) must be +-2");
    const CliffordElem<S> ev = vector_elem(h, v);
    // v^2 = (v,v)/2, so v^{-1} = 2 v / (v,v)
    CliffordElem<S> prod = clifford_mul(h, clifford_mul(h, ev, vector_elem(h, w)), ev);
    prod *= S(2) / vv;
    std::vector<S> out(static_cast<std::size_t>(h.dim()), S(0));
    for (const auto& [m, c] : prod.terms()) {
        if (popcount(m) != 1) throw std::logic_error("reflection left the vector subspace");
        out[static_cast<std::size_t>(std::countr_zero(m))] = c;
    }
    return out;
}

// Lie data of a bivector xi in wedge^2 V.
template <class S>
struct SoPair {
    Multivector<S> xi;
    Matrix<S> ad;     // column g = ad_xi(e_g)
    S constant{0};    // normal-ordering scalar removed from the spin action
};

template <class S>
SoPair<S> so_pair(const HyperbolicSpace& h, const Multivector<S>& xi)
{
    SoPair<S> out;
    out.xi = xi;
    out.ad = Matrix<S>(static_cast<std::size_t>(h.dim()), static_cast<std::size_t>(h.dim()));
    for (const auto& [m, c] : xi.terms()) {
        if (popcount(m) != 2) throw std::invalid_argument("so_pair: bivector expected");
        const int a = std::countr_zero(m);
        const int b = 31 - std::countl_zero(m);
        // ad(v) = (b,v) a - (a,v) b
        for (int g = 0; g < h.dim(); ++g) {
            if (h.gram(b, g)) out.ad(static_cast<std::size_t>(a), static_cast<std::size_t>(g)) += c;
            if (h.gram(a, g)) out.ad(static_cast<std::size_t>(b), static_cast<std::size_t>(g)) -= c;
        }
        if (h.gram(a, b)) {
            S half = c;
            half *= S(frac(1, 2));
            out.constant += half;
        }
    }
    return out;
}

template <class S>
Multivector<S> spin_action(const HyperbolicSpace& h, const SoPair<S>& p, const Multivector<S>& lam)
{
    Multivector<S> r = clifford_action(h, p.xi, lam);
    if (!is_zero(p.constant)) r -= lam * p.constant;
    return r;
}

// Derivation extension of ad_xi to wedge^* V (any generator space of the same arity).
template <class S>
Multivector<S> derivation(const Matrix<S>& ad, const Multivector<S>& u)
{
    Multivector<S> r(u.space());
    const int dim = static_cast<int>(ad.rows());
    for (const auto& [m, c] : u.terms())
        for (Mask rest = m; rest; rest &= rest - 1) {
            const int i = std::countr_zero(rest);
            const Mask bit = Mask{1} << i;
            const Mask pre = m & (bit - 1), suf = m & ~((bit << 1) - 1);
            for (int j = 0; j < dim; ++j) {
                const S& a = ad(static_cast<std::size_t>(j), static_cast<std::size_t>(i));
                if (is_zero(a)) continue;
                const Mask jb = Mask{1} << j;
                if ((pre | suf) & jb) continue;
                S v = a * c;
                if (wedge_sign(pre, jb) * wedge_sign(pre | jb, suf) < 0) v = -v;
                r.add_term(pre | jb | suf, v);
            }
        }
    return r;
}

template <class S>
using SpinorOperator = std::function<Multivector<S>(Mask)>;

// Normal-ordered expansion of an operator on S, peeled by annihilation degree.
template <class S>
CliffordElem<S> desymbol(const HyperbolicSpace& h, const SpinorOperator<S>& op)
{
    const int N = h.N();
    std::vector<Mask> order;
    for (Mask C = 0; C <= full_mask(N); ++C) order.push_back(C);
    std::stable_sort(order.begin(), order.end(), [](Mask a, Mask b) { return popcount(a) < popcount(b); });
    CliffordElem<S> E(h.V);
    for (Mask C : order) {
        Multivector<S> r = op(C);
        if (!same_space(r.space(), h.S)) throw std::invalid_argument("desymbol: operator must act on S");
        r -= clifford_action(h, E, Multivector<S>::basis(h.S, C));
        const int k = popcount(C);
        for (const auto& [A, c] : r.terms()) E.add_term(A | (C << N), tau_sign(k) < 0 ? S(-c) : c);
    }
    return E;
}

// Antisymmetrization wedge^* V -> C(V), normal ordered.
template <class S>
CliffordElem<S> quantize(const HyperbolicSpace& h, const Multivector<S>& u)
{
    const int N = h.N();
    CliffordElem<S> r(h.V);
    for (const auto& [m, c] : u.terms()) {
        const Mask A = m & full_mask(N), B = m >> N, P = A & B;
        // e_m = eps * (x_i ^ y_i for i in P) ^ x_{A-P} ^ y_{B-P}
        std::vector<int> order;
        for (Mask t = P; t; t &= t - 1) {
            order.push_back(std::countr_zero(t));
            order.push_back(std::countr_zero(t) + N);
        }
        for (Mask t = A & ~P; t; t &= t - 1) order.push_back(std::countr_zero(t));
        for (Mask t = B & ~P; t; t &= t - 1) order.push_back(std::countr_zero(t) + N);
        int inv = 0;
        for (std::size_t i = 0; i < order.size(); ++i)
            for (std::size_t j = i + 1; j < order.size(); ++j)
                if (order[i] > order[j]) ++inv;
        CliffordElem<S> t = CliffordElem<S>::basis(h.V, ((A & ~P) | ((B & ~P) << N)), (inv & 1) ? S(-c) : c);
        for (Mask pr = P; pr; pr &= pr - 1) {
            const int i = std::countr_zero(pr);
            CliffordElem<S> q = CliffordElem<S>::basis(h.V, (Mask{1} << i) | (Mask{1} << (i + N)));
            q.add_term(0, S(frac(-1, 2)));
            t = clifford_mul(h, q, t);
        }
        r += t;
    }
    return r;
}

// Inverse of quantize: q(u) = u + lower-degree terms, so peel from the top.
template <class S>
Multivector<S> dequantize(const HyperbolicSpace& h, const CliffordElem<S>& a)
{
    Multivector<S> out(h.V);
    CliffordElem<S> r = a;
    while (!r.is_zero()) {
        int top = 0;
        for (const auto& [m, c] : r.terms()) top = std::max(top, popcount(m));
        const Multivector<S> head = degree_part(r, top);
        out += head;
        r -= quantize(h, head);
    }
    return out;
}

// All operators on S as a matrix in the basis of masks.
template <class S>
Matrix<S> operator_matrix(const HyperbolicSpace& h, const CliffordElem<S>& a)
{
    const std::size_t D = std::size_t{1} << h.N();
    Matrix<S> m(D, D);
    for (Mask C = 0; C < D; ++C) {
        const Multivector<S> img = clifford_action(h, a, Multivector<S>::basis(h.S, C));
        for (const auto& [o, c] : img.terms()) m(o, C) = c;
    }
    return m;
}

}  // namespace spinweil

#endif
