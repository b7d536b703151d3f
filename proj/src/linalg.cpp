#include <spinweil/linalg.hpp>

namespace spinweil {

namespace {

void scale_row(std::vector<Rational>& row, const mpz_class& l, const mpz_class& g)
{
    Rational f(l, g);
    f.canonicalize();
    if (f == 1) return;
    for (auto& x : row)
        if (sgn(x) != 0) x *= f;
}

}  // namespace

void make_primitive(std::vector<Rational>& row)
{
    mpz_class l = 1, g = 0;
    for (const auto& x : row) {
        if (sgn(x) == 0) continue;
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    }
    for (const auto& x : row) {
        if (sgn(x) == 0) continue;
        mpz_class num = x.get_num() * (l / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    }
    if (g == 0) return;
    scale_row(row, l, g);
}

void make_primitive(std::vector<FieldElem>& row)
{
    mpz_class l = 1, g = 0;
    for (const auto& x : row)
        for (int i = 0; i < 4; ++i)
            if (sgn(x[i]) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x[i].get_den_mpz_t());
    for (const auto& x : row)
        for (int i = 0; i < 4; ++i)
            if (sgn(x[i]) != 0) {
                mpz_class num = x[i].get_num() * (l / x[i].get_den());
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
            }
    if (g == 0) return;
    Rational f(l, g);
    f.canonicalize();
    if (f == 1) return;
    for (auto& x : row)
        if (!x.is_zero()) x *= f;
}

RationalForm rational_form(const std::vector<std::vector<FieldElem>>& vectors, std::size_t ambient)
{
    std::vector<std::vector<Rational>> comps;
    for (const auto& v : vectors)
        for (int c = 0; c < 4; ++c) {
            std::vector<Rational> r(ambient);
            bool nz = false;
            for (std::size_t j = 0; j < ambient; ++j) {
                r[j] = v[j][c];
                nz = nz || sgn(r[j]) != 0;
            }
            if (nz) comps.push_back(std::move(r));
        }
    RationalForm out;
    out.space = RSub::span(ambient, comps);
    const KSub over_field = KSub::span(ambient, vectors);
    out.certified = out.space.dim() == over_field.dim();
    return out;
}

std::vector<FieldElem> to_field(const std::vector<Rational>& v)
{
    return {v.begin(), v.end()};
}

}  // namespace spinweil
