#ifndef SPINWEIL_FM_HPP
#define SPINWEIL_FM_HPP

#include <spinweil/weil.hpp>

#include <functional>
#include <memory>
#include <mutex>
#include <unordered_map>

namespace spinweil {

// A Künneth product of generator spaces laid out consecutively in a joint space.
struct ProductAlgebra {
    std::vector<SpacePtr> factors;
    std::vector<int> offsets;
    SpacePtr joint;

    int count() const { return static_cast<int>(factors.size()); }
    Mask factor_mask(int i) const;
    // Joint space with factor i removed, in order.
    SpacePtr remainder(int i) const;
};

ProductAlgebra make_product(std::vector<SpacePtr> factors, SpacePtr joint = nullptr);

struct UndeclaredFactor : std::out_of_range {
    using std::out_of_range::out_of_range;
};

template <class S>
Multivector<S> pullback_factor(const ProductAlgebra& P, int i, const Multivector<S>& a)
{
    if (i < 0 || i >= P.count()) throw UndeclaredFactor("pullback along an undeclared factor");
    if (!same_space(a.space(), P.factors[static_cast<std::size_t>(i)]))
        throw std::invalid_argument("pullback: class does not live on the factor");
    return embed(a, P.joint, P.offsets[static_cast<std::size_t>(i)]);
}

// Integration over factor i: coefficient of its top monomial, pulled out on the left.
template <class S>
Multivector<S> pushforward_factor(const ProductAlgebra& P, const Multivector<S>& a, int i, const SpacePtr& target)
{
    if (i < 0 || i >= P.count()) throw UndeclaredFactor("pushforward along an undeclared factor");
    const Mask top = P.factor_mask(i);
    const int off = P.offsets[static_cast<std::size_t>(i)];
    const int width = P.factors[static_cast<std::size_t>(i)]->arity();
    const Mask low = full_mask(off);
    Multivector<S> r(target);
    for (const auto& [m, c] : a.terms()) {
        if ((m & top) != top) continue;
        const Mask rest = m ^ top;
        const Mask packed = (rest & low) | ((rest >> width) & ~low);
        r.add_term(packed, wedge_sign(top, rest) < 0 ? S(-c) : c);
    }
    return r;
}

// Linear map given by its action on basis monomials, evaluated lazily and memoized.
class TransformMap {
public:
    using BasisFn = std::function<RMV(Mask)>;

    TransformMap() = default;
    TransformMap(std::string name, SpacePtr src, SpacePtr dst, BasisFn fn);

    const std::string& name() const { return st_->name; }
    const SpacePtr& source() const { return st_->src; }
    const SpacePtr& target() const { return st_->dst; }

    RMV image(Mask m) const;

    template <class S>
    Multivector<S> apply(const Multivector<S>& a) const
    {
        if (!same_space(a.space(), st_->src)) throw std::invalid_argument(st_->name + ": argument on the wrong space");
        Multivector<S> r(st_->dst);
        for (const auto& [m, c] : a.terms()) {
            const RMV img = image(m);
            for (const auto& [o, v] : img.terms()) r.add_term(o, c * S(v));
        }
        return r;
    }
    RMV operator()(const RMV& a) const { return apply(a); }

    // next after this
    TransformMap then(const TransformMap& next) const;

private:
    struct State {
        std::string name;
        SpacePtr src, dst;
        BasisFn fn;
        mutable std::mutex mu;
        mutable std::unordered_map<Mask, RMV> cache;
    };
    std::shared_ptr<State> st_;
};

// y1..y_{2n}, shared per n
SpacePtr hat_space(int n);
// x, x' (H*(X x X))
const ProductAlgebra& product_XX(int n);
// x, y with joint = V
const ProductAlgebra& product_XXhat(int n);
// x, x', y
const ProductAlgebra& product_XXXhat(int n);

// c1(P) = sum x_i ^ y_i on V, i.e. -sum y_i ^ x_i.
RMV poincare_class(int n);
// The same class on H^1(X^) + H^1(X), hat generators first.
RMV poincare_class_hat_first(int n);

enum class FMDirection { ToX, ToXhat };
// alpha -> push(pull(alpha) ^ exp(c1(P)))
TransformMap fm_poincare(int n, FMDirection dir);

// x -> x - x' on H*(X x X): the pushforward along mu(x, y) = (x + y, y)
RMV mu_pushforward(int n, const RMV& a);
// mu_* o (id x Phi_P): H*(X x X^) -> H*(X x X)
TransformMap orlov_forward(int n);
// its inverse, in closed form
TransformMap orlov_phiH(int n);
// id (x) tau on H*(X x X)
RMV id_tau(int n, const RMV& a);
template <class S>
Multivector<S> id_tau_t(int n, const Multivector<S>& a)
{
    const int N = 2 * n;
    Multivector<S> r(a.space());
    for (const auto& [m, c] : a.terms()) r.add_term(m, tau_sign(popcount(m >> N)) < 0 ? S(-c) : c);
    return r;
}
// exp(-c1(P)/2) ^ Phi^H o (id x tau)
TransformMap phi_tilde(int n);
// Phi^H o (id x tau), no normalization
TransformMap phiH_twisted(int n);

// Diagonal spin action m_xi (x) 1 + 1 (x) m_xi on H*(X x X).
RMV diagonal_spin_action(const HyperbolicSpace& h, const SoPair<Rational>& sp, const RMV& c);

// s (x) s' -> desymbol(lam -> (s', lam)_S s), read back through antisymmetrization.
RMV chevalley(int n, const RMV& s, const RMV& s2);
// x_A y_B -> (-1)^{|A||B|} Phi_P(y_B) (x) Phi_P^{-1}(x_A)
TransformMap star_map(int n);

struct ScalarComparison {
    bool proportional = false;
    Rational scalar = 0;
    std::size_t pairs_checked = 0;
};
// phi_tilde(s (x) s') = c * star(chevalley(s, s')) on the given basis pairs (all pairs when empty).
ScalarComparison compare_with_chevalley(int n, const std::vector<std::pair<Mask, Mask>>& pairs = {});

template <class S>
int filtration_level(const Multivector<S>& a)
{
    if (a.is_zero()) throw std::domain_error("filtration level of zero is undefined");
    return lowest_degree(a);
}

// B (x) B bookkeeping over the tower: ell_T = sum_i L(T, i) b_i.
struct BBData {
    std::size_t m = 0;                         // dim B
    KMat L;                                    // types x m
    KMat Linv;                                 // m x types: b_i = sum_T Linv(i, T) ell_T
    std::vector<std::vector<int>> overlap;     // |T cap T'|
    std::vector<RSub> BB;                      // rational forms, coordinates on b_i (x) b_j (index i*m+j)
    std::vector<bool> certified;
};
BBData bb_data(const WeilStructure& ws);

struct BBDecomposition {
    std::vector<std::vector<FieldElem>> gamma_TT;     // coefficient of ell_T (x) ell_T'
    std::vector<std::vector<Rational>> gamma_k;       // rational coordinates on b_i (x) b_j
};
// c is the m x m coefficient matrix on b_i (x) b_j.
BBDecomposition bb_decompose(const WeilStructure& ws, const BBData& bb, const RMat& c);
// Coefficients of an element of S (x) S (on H*(X x X)) in b_i (x) b_j; nullopt when outside B (x) B.
std::optional<RMat> tensor_coords(const WeilStructure& ws, const RMV& c);
RMV tensor_of(const WeilStructure& ws, const std::vector<Rational>& flat);
KMV ell_tensor(const WeilStructure& ws, std::size_t T, std::size_t T2);

// Degree-d part of phi_tilde of an element of B (x) B given by flat coordinates.
RMV Pi(const WeilStructure& ws, const std::vector<Rational>& flat);
KMV Pi_TT(const WeilStructure& ws, std::size_t T, std::size_t T2);

struct OverlapFiltration {
    std::size_t T = 0, T2 = 0;
    int k = 0;
    int level = 0;
    bool level_ok = false;
    bool line_ok = false;
    std::size_t intersection_dim = 0;
};
// Level and leading term of Phi^H(ell_T (x) tau ell_T') against the wedge of W_T cap W_T'.
OverlapFiltration overlap_filtration(const WeilStructure& ws, std::size_t T, std::size_t T2);

}  // namespace spinweil

#endif
