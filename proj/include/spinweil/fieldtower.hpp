#ifndef SPINWEIL_FIELDTOWER_HPP
#define SPINWEIL_FIELDTOWER_HPP

#include <spinweil/rational.hpp>

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinweil {

// F = Q(sqrt p) (p = 1 means F = Q), K = F(sqrt -q), q rational and positive.
struct TowerSpec {
    long p = 1;
    Rational q = 1;

    int e() const { return p == 1 ? 2 : 4; }
    bool operator==(const TowerSpec& o) const { return p == o.p && q == o.q; }
};

void validate_tower(const TowerSpec& spec);

class Tower {
public:
    explicit Tower(TowerSpec spec) : spec_(std::move(spec)) {}
    const TowerSpec& spec() const { return spec_; }
    long p() const { return spec_.p; }
    const Rational& q() const { return spec_.q; }
    int e() const { return spec_.e(); }
    bool f_is_q() const { return spec_.p == 1; }

private:
    TowerSpec spec_;
};

// Interned: equal specs give the same pointer for the life of the process.
const Tower* make_tower(const TowerSpec& spec);

enum class Subfield { Q, F, K, Kt };

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero in field tower") {}
};

struct Embedding {
    int sign_p = 1;
    int sign_q = 1;
    bool operator==(const Embedding& o) const { return sign_p == o.sign_p && sign_q == o.sign_q; }
};

// Coordinates over {1, sqrt p, sqrt -q, sqrt p * sqrt -q}. A null tower is a bare rational.
class FieldElem {
public:
    FieldElem() = default;
    FieldElem(long v) : c_{Rational(v), 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
    FieldElem(int v) : c_{Rational(v), 0, 0, 0} {}   // NOLINT(google-explicit-constructor)
    FieldElem(const Rational& r) : c_{r, 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
    FieldElem(const Tower* t, Rational c0, Rational c1 = 0, Rational c2 = 0, Rational c3 = 0);

    static FieldElem sqrt_p(const Tower* t);
    static FieldElem sqrt_minus_q(const Tower* t);

    const Tower* tower() const { return t_; }
    const Rational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }

    bool is_zero() const { return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0; }
    bool is_rational() const { return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0; }
    bool in(Subfield f) const;
    Rational to_rational() const;

    FieldElem& operator+=(const FieldElem& o);
    FieldElem& operator-=(const FieldElem& o);
    FieldElem& operator*=(const FieldElem& o);
    FieldElem& operator*=(const Rational& r);
    FieldElem& operator/=(const FieldElem& o) { return *this *= o.inv(); }
    FieldElem operator-() const;

    FieldElem inv() const;
    FieldElem iota() const;
    FieldElem apply(Embedding s) const;

    friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
    friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
    friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
    friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
    friend bool operator==(const FieldElem& a, const FieldElem& b);
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

    std::string str() const;

private:
    void adopt(const Tower* other);

    const Tower* t_ = nullptr;
    std::array<Rational, 4> c_{};
};

inline bool is_zero(const FieldElem& a) { return a.is_zero(); }
inline bool is_zero(const Rational& a) { return sgn(a) == 0; }

// Sum over the embeddings of the named subfield.
Rational trace_to_Q(const FieldElem& a, Subfield from);

std::vector<Embedding> embeddings_of_K(const Tower* t);

// One sign_q choice per F-embedding; index 0 is sign_p = +1, index 1 (e = 4 only) is sign_p = -1.
struct CMType {
    std::vector<int> sign_q;

    CMType conjugate() const;
    std::vector<Embedding> members() const;
    bool operator==(const CMType& o) const { return sign_q == o.sign_q; }
    std::string str() const;
};

std::vector<CMType> enumerate_cm_types(const Tower* t);

// |T ∩ T'| as sets of K-embeddings.
int overlap(const CMType& a, const CMType& b);

}  // namespace spinweil

#endif
