#ifndef SPINWEIL_EXTERIOR_HPP
#define SPINWEIL_EXTERIOR_HPP

#include <spinweil/fieldtower.hpp>

#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinweil {

using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask full_mask(int m) { return m >= 32 ? ~Mask{0} : ((Mask{1} << m) - 1); }

// (-1)^{#{(i in a, j in b) : i > j}}, the sign of e_a ^ e_b against e_{a|b}.
inline int wedge_sign(Mask a, Mask b)
{
    int c = 0;
    while (b) {
        int j = std::countr_zero(b);
        b &= b - 1;
        c += std::popcount(static_cast<Mask>(a >> (j + 1)));
    }
    return (c & 1) ? -1 : 1;
}

inline int tau_sign(int degree) { return ((degree * (degree - 1) / 2) & 1) ? -1 : 1; }

struct GeneratorSpace {
    std::vector<std::string> labels;

    int arity() const { return static_cast<int>(labels.size()); }
    int index_of(const std::string& label) const;
};

using SpacePtr = std::shared_ptr<const GeneratorSpace>;

SpacePtr make_space(std::vector<std::string> labels);
// x1..x_{2n}
SpacePtr spinor_space(int n);
// x1..x_{2n}, y1..y_{2n}
SpacePtr vector_space(int n);
// a1..,b1..: the Kunneth join, labels of b get a prime if they collide
SpacePtr join_spaces(const SpacePtr& a, const SpacePtr& b);

bool same_space(const SpacePtr& a, const SpacePtr& b);

template <class S>
class Multivector {
public:
    using Terms = std::map<Mask, S>;

    Multivector() = default;
    explicit Multivector(SpacePtr sp) : sp_(std::move(sp)) {}

    static Multivector scalar(SpacePtr sp, const S& c) { return basis(std::move(sp), 0, c); }
    static Multivector basis(SpacePtr sp, Mask m, const S& c = S(1))
    {
        Multivector r(std::move(sp));
        r.add_term(m, c);
        return r;
    }
    static Multivector generator(SpacePtr sp, int i) { return basis(std::move(sp), Mask{1} << i); }

    const SpacePtr& space() const { return sp_; }
    int arity() const { return sp_ ? sp_->arity() : 0; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    S coeff(Mask m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? S(0) : it->second;
    }

    void add_term(Mask m, const S& c)
    {
        if (spinweil::is_zero(c)) return;
        if (m & ~full_mask(arity())) throw std::out_of_range("mask outside generator space");
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (spinweil::is_zero(it->second)) terms_.erase(it);
        }
    }

    Multivector& operator+=(const Multivector& o)
    {
        check(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Multivector& operator-=(const Multivector& o)
    {
        check(o);
        for (const auto& [m, c] : o.terms_) add_term(m, S(-c));
        return *this;
    }
    Multivector& operator*=(const S& s)
    {
        if (spinweil::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }
    Multivector operator-() const
    {
        Multivector r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    friend Multivector operator*(Multivector a, const S& s) { return a *= s; }
    friend Multivector operator*(const S& s, Multivector a) { return a *= s; }
    friend bool operator==(const Multivector& a, const Multivector& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

    void check(const Multivector& o) const
    {
        if (!same_space(sp_, o.sp_)) throw std::invalid_argument("mismatched generator spaces");
    }

private:
    SpacePtr sp_;
    Terms terms_;
};

using RMV = Multivector<Rational>;
using KMV = Multivector<FieldElem>;

template <class S>
Multivector<S> wedge(const Multivector<S>& a, const Multivector<S>& b)
{
    a.check(b);
    Multivector<S> r(a.space());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            if (ma & mb) continue;
            S c = ca * cb;
            if (wedge_sign(ma, mb) < 0) c = -c;
            r.add_term(ma | mb, c);
        }
    return r;
}

// Contraction by the dual of generator i.
template <class S>
Multivector<S> contract_gen(int i, const Multivector<S>& a)
{
    Multivector<S> r(a.space());
    const Mask bit = Mask{1} << i;
    for (const auto& [m, c] : a.terms()) {
        if (!(m & bit)) continue;
        bool odd = std::popcount(static_cast<Mask>(m & (bit - 1))) & 1;
        r.add_term(m ^ bit, odd ? S(-c) : c);
    }
    return r;
}

template <class S>
Multivector<S> contract(const std::vector<S>& theta, const Multivector<S>& a)
{
    if (static_cast<int>(theta.size()) != a.arity())
        throw std::invalid_argument("contract: dual vector length differs from arity");
    Multivector<S> r(a.space());
    for (int i = 0; i < a.arity(); ++i) {
        if (spinweil::is_zero(theta[static_cast<std::size_t>(i)])) continue;
        r += contract_gen(i, a) * theta[static_cast<std::size_t>(i)];
    }
    return r;
}

template <class S>
Multivector<S> tau(const Multivector<S>& a)
{
    Multivector<S> r(a.space());
    for (const auto& [m, c] : a.terms()) r.add_term(m, tau_sign(popcount(m)) < 0 ? S(-c) : c);
    return r;
}

template <class S>
Multivector<S> degree_part(const Multivector<S>& a, int k)
{
    Multivector<S> r(a.space());
    for (const auto& [m, c] : a.terms())
        if (popcount(m) == k) r.add_term(m, c);
    return r;
}

template <class S>
int lowest_degree(const Multivector<S>& a)
{
    if (a.is_zero()) throw std::domain_error("lowest degree of zero multivector");
    int k = a.arity() + 1;
    for (const auto& [m, c] : a.terms()) k = std::min(k, popcount(m));
    return k;
}

// Top coefficient of tau(a) ^ b with g1 ^ ... ^ gm integrating to 1.
template <class S>
S s_pairing(const Multivector<S>& a, const Multivector<S>& b)
{
    a.check(b);
    const Mask top = full_mask(a.arity());
    S acc(0);
    for (const auto& [ma, ca] : a.terms()) {
        S cb = b.coeff(top ^ ma);
        if (spinweil::is_zero(cb)) continue;
        S c = ca * cb;
        if (tau_sign(popcount(ma)) * wedge_sign(ma, top ^ ma) < 0) c = -c;
        acc += c;
    }
    return acc;
}

template <class S>
Multivector<S> exp_even(const Multivector<S>& a)
{
    for (const auto& [m, c] : a.terms())
        if (m == 0 || (popcount(m) & 1))
            throw std::invalid_argument("exp_even: argument must have only even positive degrees");
    Multivector<S> r = Multivector<S>::scalar(a.space(), S(1));
    Multivector<S> p = r;
    for (long k = 1; !p.is_zero(); ++k) {
        p = wedge(p, a);
        Rational f(1);
        f /= k;
        p *= S(f);
        r += p;
    }
    return r;
}

// Place a on the first factor and b on the second of the joined space.
template <class S>
Multivector<S> kunneth(const Multivector<S>& a, const Multivector<S>& b, const SpacePtr& joint)
{
    if (joint->arity() != a.arity() + b.arity())
        throw std::invalid_argument("kunneth: joint arity mismatch");
    const int shift = a.arity();
    Multivector<S> r(joint);
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) r.add_term(ma | (mb << shift), ca * cb);
    return r;
}

// Embed a into a bigger space: generator i goes to slot offset + i.
template <class S>
Multivector<S> embed(const Multivector<S>& a, const SpacePtr& target, int offset)
{
    Multivector<S> r(target);
    for (const auto& [m, c] : a.terms()) r.add_term(m << offset, c);
    return r;
}

template <class T, class S, class F>
Multivector<T> map_coeffs(const Multivector<S>& a, F&& f)
{
    Multivector<T> r(a.space());
    for (const auto& [m, c] : a.terms()) r.add_term(m, f(c));
    return r;
}

inline KMV to_field(const RMV& a)
{
    return map_coeffs<FieldElem>(a, [](const Rational& c) { return FieldElem(c); });
}

// Algebra map determined by images of generators (each image any element, usually degree 1).
template <class S, class T>
Multivector<S> substitute(const Multivector<S>& a, const std::vector<Multivector<T>>& images, const SpacePtr& target)
{
    if (static_cast<int>(images.size()) != a.arity()) throw std::invalid_argument("substitute: image count");
    std::vector<Multivector<S>> lifted;
    lifted.reserve(images.size());
    for (const auto& im : images)
        lifted.push_back(map_coeffs<S>(im, [](const T& c) { return S(c); }));
    Multivector<S> r(target);
    for (const auto& [m, c] : a.terms()) {
        Multivector<S> t = Multivector<S>::scalar(target, c);
        for (Mask rest = m; rest; rest &= rest - 1) t = wedge(t, lifted[static_cast<std::size_t>(std::countr_zero(rest))]);
        r += t;
    }
    return r;
}

inline std::string mask_label(const GeneratorSpace& sp, Mask m)
{
    if (m == 0) return "1";
    std::string s;
    for (Mask r = m; r; r &= r - 1) {
        if (!s.empty()) s += "^";
        s += sp.labels[static_cast<std::size_t>(std::countr_zero(r))];
    }
    return s;
}

}  // namespace spinweil

#endif
