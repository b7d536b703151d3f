#include <spinweil/fieldtower.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace spinweil {

Rational parse_rational(const std::string& text)
{
    Rational r;
    if (text.empty() || r.set_str(text, 10) != 0)
        throw std::invalid_argument("not a rational: '" + text + "'");
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

void validate_tower(const TowerSpec& spec)
{
    if (spec.p < 1)
        throw std::invalid_argument("tower: p must be a positive square-free integer");
    for (long f = 2; f * f <= spec.p; ++f)
        if (spec.p % (f * f) == 0)
            throw std::invalid_argument("tower: p must be square-free");
    if (sgn(spec.q) <= 0)
        throw std::invalid_argument("tower: q must be positive");
}

const Tower* make_tower(const TowerSpec& spec)
{
    validate_tower(spec);
    static std::mutex mu;
    static std::map<std::pair<long, std::string>, std::unique_ptr<Tower>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(spec.p, spec.q.get_str());
    auto& slot = registry[key];
    if (!slot) slot = std::make_unique<Tower>(spec);
    return slot.get();
}

FieldElem::FieldElem(const Tower* t, Rational c0, Rational c1, Rational c2, Rational c3)
    : t_(t), c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)}
{
    // sqrt 1 = 1: fold the degenerate coordinates
    if (t_ != nullptr && t_->f_is_q()) {
        c_[0] += c_[1];
        c_[2] += c_[3];
        c_[1] = 0;
        c_[3] = 0;
    }
    if (t_ == nullptr && !is_rational())
        throw std::invalid_argument("irrational coordinates need a tower");
}

FieldElem FieldElem::sqrt_p(const Tower* t) { return {t, 0, 1, 0, 0}; }
FieldElem FieldElem::sqrt_minus_q(const Tower* t) { return {t, 0, 0, 1, 0}; }

bool FieldElem::in(Subfield f) const
{
    switch (f) {
    case Subfield::Q: return is_rational();
    case Subfield::F: return sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
    case Subfield::K:
        // K = Kt when e = 4; for p = 1 coordinates 1 and 3 are always zero
        return true;
    case Subfield::Kt: return true;
    }
    return false;
}

Rational FieldElem::to_rational() const
{
    if (!is_rational()) throw std::domain_error("field element is not rational: " + str());
    return c_[0];
}

void FieldElem::adopt(const Tower* other)
{
    if (other == nullptr || other == t_) return;
    if (t_ != nullptr) throw std::invalid_argument("arithmetic across different towers");
    t_ = other;
}

FieldElem& FieldElem::operator+=(const FieldElem& o)
{
    adopt(o.t_);
    for (std::size_t i = 0; i < 4; ++i) c_[i] += o.c_[i];
    return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o)
{
    adopt(o.t_);
    for (std::size_t i = 0; i < 4; ++i) c_[i] -= o.c_[i];
    return *this;
}

FieldElem& FieldElem::operator*=(const Rational& r)
{
    for (auto& c : c_) c *= r;
    return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o)
{
    adopt(o.t_);
    if (o.is_rational()) return *this *= o.c_[0];
    if (is_rational()) {
        Rational s = c_[0];
        *this = o;
        return *this *= s;
    }
    const Rational p = t_->p();
    const Rational& q = t_->q();
    const auto& a = c_;
    const auto& b = o.c_;
    // r^2 = p, s^2 = -q, rs = sr
    Rational n0 = a[0] * b[0] + p * a[1] * b[1] - q * a[2] * b[2] - p * q * a[3] * b[3];
    Rational n1 = a[0] * b[1] + a[1] * b[0] - q * (a[2] * b[3] + a[3] * b[2]);
    Rational n2 = a[0] * b[2] + a[2] * b[0] + p * (a[1] * b[3] + a[3] * b[1]);
    Rational n3 = a[0] * b[3] + a[3] * b[0] + a[1] * b[2] + a[2] * b[1];
    c_ = {std::move(n0), std::move(n1), std::move(n2), std::move(n3)};
    return *this;
}

FieldElem FieldElem::operator-() const
{
    FieldElem r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

FieldElem FieldElem::iota() const { return apply({1, -1}); }

FieldElem FieldElem::apply(Embedding s) const
{
    FieldElem r = *this;
    if (s.sign_p < 0) {
        r.c_[1] = -r.c_[1];
        r.c_[3] = -r.c_[3];
    }
    if (s.sign_q < 0) {
        r.c_[2] = -r.c_[2];
        r.c_[3] = -r.c_[3];
    }
    return r;
}

FieldElem FieldElem::inv() const
{
    if (is_zero()) throw DivisionByZero();
    if (is_rational()) {
        FieldElem r = *this;
        r.c_[0] = 1 / c_[0];
        return r;
    }
    // x = a iota(a) lies in F; x * sigma_p(x) is rational
    FieldElem conj_q = iota();
    FieldElem x = *this * conj_q;
    FieldElem x_bar = x.apply({-1, 1});
    Rational norm = (x * x_bar).to_rational();
    FieldElem r = conj_q * x_bar;
    r *= Rational(1 / norm);
    return r;
}

bool operator==(const FieldElem& a, const FieldElem& b)
{
    return a.c_ == b.c_;
}

std::string FieldElem::str() const
{
    static const char* names[4] = {"", "r", "s", "rs"};
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < 4; ++i) {
        const Rational& c = c_[static_cast<std::size_t>(i)];
        if (sgn(c) == 0) continue;
        if (any) os << (sgn(c) > 0 ? " + " : " - ");
        else if (sgn(c) < 0) os << "-";
        Rational m = abs(c);
        if (i == 0 || m != 1) os << m.get_str();
        if (i != 0) os << (i == 0 || m != 1 ? "*" : "") << names[i];
        any = true;
    }
    if (!any) return "0";
    return os.str();
}

Rational trace_to_Q(const FieldElem& a, Subfield from)
{
    const Tower* t = a.tower();
    bool trivial_f = t == nullptr || t->f_is_q();
    switch (from) {
    case Subfield::F:
        if (!a.in(Subfield::F)) throw std::domain_error("trace_to_Q: element not in F: " + a.str());
        return trivial_f ? a[0] : Rational(2 * a[0]);
    case Subfield::K:
        return trivial_f ? Rational(2 * a[0]) : Rational(4 * a[0]);
    default:
        throw std::invalid_argument("trace_to_Q: source must be F or K");
    }
}

std::vector<Embedding> embeddings_of_K(const Tower* t)
{
    if (t == nullptr || t->f_is_q()) return {{1, 1}, {1, -1}};
    return {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
}

CMType CMType::conjugate() const
{
    CMType r = *this;
    for (auto& s : r.sign_q) s = -s;
    return r;
}

std::vector<Embedding> CMType::members() const
{
    std::vector<Embedding> out;
    for (std::size_t i = 0; i < sign_q.size(); ++i)
        out.push_back({i == 0 ? 1 : -1, sign_q[i]});
    return out;
}

std::string CMType::str() const
{
    std::string s = "{";
    for (std::size_t i = 0; i < sign_q.size(); ++i) {
        if (i) s += ",";
        s += (i == 0 ? "+" : "-");
        s += (sign_q[i] > 0 ? "+" : "-");
    }
    return s + "}";
}

std::vector<CMType> enumerate_cm_types(const Tower* t)
{
    std::size_t f_deg = (t == nullptr || t->f_is_q()) ? 1 : 2;
    std::vector<CMType> out;
    for (std::size_t bits = 0; bits < (std::size_t{1} << f_deg); ++bits) {
        CMType c;
        for (std::size_t i = 0; i < f_deg; ++i) c.sign_q.push_back((bits >> i & 1) ? -1 : 1);
        out.push_back(c);
    }
    return out;
}

int overlap(const CMType& a, const CMType& b)
{
    int k = 0;
    for (std::size_t i = 0; i < a.sign_q.size() && i < b.sign_q.size(); ++i)
        if (a.sign_q[i] == b.sign_q[i]) ++k;
    return k;
}

}  // namespace spinweil
