#ifndef SPINWEIL_PURESPINOR_HPP
#define SPINWEIL_PURESPINOR_HPP

#include <spinweil/clifford.hpp>

namespace spinweil {

// A subspace of V (or V over the tower) with its isotropy certificate.
template <class S>
struct IsotropicSubspace {
    int n = 0;
    Subspace<S> space;
    bool isotropic = false;

    std::size_t dim() const { return space.dim(); }
    bool maximal() const { return isotropic && dim() == static_cast<std::size_t>(2 * n); }
};

template <class S>
bool is_isotropic(const HyperbolicSpace& h, const std::vector<std::vector<S>>& basis)
{
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i; j < basis.size(); ++j)
            if (!is_zero(h.pair(basis[i], basis[j]))) return false;
    return true;
}

template <class S>
IsotropicSubspace<S> make_isotropic(const HyperbolicSpace& h, const std::vector<std::vector<S>>& vectors)
{
    IsotropicSubspace<S> out;
    out.n = h.n;
    out.space = Subspace<S>::span(static_cast<std::size_t>(h.dim()), vectors);
    out.isotropic = is_isotropic(h, out.space.basis());
    return out;
}

// All v in V with m_v(lam) = 0.
template <class S>
IsotropicSubspace<S> annihilator(const HyperbolicSpace& h, const Multivector<S>& lam)
{
    if (lam.is_zero()) throw std::invalid_argument("annihilator of the zero spinor");
    const std::size_t D = std::size_t{1} << h.N();
    Matrix<S> m(D, static_cast<std::size_t>(h.dim()));
    for (int g = 0; g < h.dim(); ++g) {
        const Multivector<S> img = clifford_action(h, Multivector<S>::generator(h.V, g), lam);
        for (const auto& [o, c] : img.terms()) m(o, static_cast<std::size_t>(g)) = c;
    }
    return make_isotropic(h, nullspace(m));
}

template <class S>
struct Purity {
    bool pure = false;
    IsotropicSubspace<S> certificate;
};

template <class S>
Purity<S> is_pure(const HyperbolicSpace& h, const Multivector<S>& lam)
{
    Purity<S> out;
    out.certificate = annihilator(h, lam);
    out.pure = out.certificate.dim() == static_cast<std::size_t>(h.N());
    return out;
}

struct NotMaximalIsotropic : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The pure spinor line of a maximal isotropic W, scaled so the lowest mask has coefficient 1.
template <class S>
Multivector<S> pure_spinor_of(const HyperbolicSpace& h, const std::vector<std::vector<S>>& W)
{
    if (!is_isotropic(h, W)) throw NotMaximalIsotropic("pure_spinor_of: subspace is not isotropic");
    const std::size_t D = std::size_t{1} << h.N();
    Matrix<S> m(W.size() * D, D);
    for (std::size_t w = 0; w < W.size(); ++w) {
        const CliffordElem<S> v = vector_elem(h, W[w]);
        for (Mask C = 0; C < D; ++C) {
            const Multivector<S> img = clifford_action(h, v, Multivector<S>::basis(h.S, C));
            for (const auto& [o, c] : img.terms()) m(w * D + o, C) = c;
        }
    }
    const auto ker = nullspace(m);
    if (ker.size() != 1) throw NotMaximalIsotropic("pure_spinor_of: solution space has dimension " + std::to_string(ker.size()));
    Multivector<S> out(h.S);
    const auto& v = ker.front();
    std::size_t lead = 0;
    while (is_zero(v[lead])) ++lead;
    const S inv = S(1) / v[lead];
    for (Mask C = 0; C < D; ++C)
        if (!is_zero(v[C])) out.add_term(C, v[C] * inv);
    return out;
}

template <class S>
std::vector<S> spinor_coords(const Multivector<S>& lam)
{
    std::vector<S> v(std::size_t{1} << lam.arity(), S(0));
    for (const auto& [m, c] : lam.terms()) v[m] = c;
    return v;
}

template <class S>
Multivector<S> spinor_from_coords(const SpacePtr& sp, const std::vector<S>& v)
{
    Multivector<S> out(sp);
    for (std::size_t m = 0; m < v.size(); ++m) out.add_term(static_cast<Mask>(m), v[m]);
    return out;
}

// Parity of a spinor: +1 even, -1 odd, 0 mixed.
template <class S>
int parity(const Multivector<S>& lam)
{
    bool ev = false, od = false;
    for (const auto& [m, c] : lam.terms()) (popcount(m) & 1 ? od : ev) = true;
    if (ev && od) return 0;
    return od ? -1 : 1;
}

}  // namespace spinweil

#endif
