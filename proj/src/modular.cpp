#include <spinweil/modular.hpp>

#include <stdexcept>

namespace spinweil {

ModEchelon::ModEchelon(std::uint64_t p, std::size_t ncols) : p_(p), n_(ncols), pivot_row_(ncols, -1) {}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p)
{
    mpz_class x = static_cast<unsigned long>(a), m = static_cast<unsigned long>(p), r;
    if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("no inverse modulo p");
    return r.get_ui();
}

bool ModEchelon::add(const std::vector<std::uint64_t>& dense)
{
    std::vector<std::uint64_t> v = dense;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const std::uint64_t f = v[pivot_col_[r]];
        if (f == 0) continue;
        const std::uint64_t g = p_ - f;
        const auto& row = rows_[r];
        for (std::size_t j = pivot_col_[r]; j < n_; ++j)
            if (row[j]) v[j] = (v[j] + g * row[j]) % p_;
    }
    std::size_t c = 0;
    while (c < n_ && v[c] == 0) ++c;
    if (c == n_) return false;
    const std::uint64_t inv = mod_inverse(v[c], p_);
    for (std::size_t j = c; j < n_; ++j)
        if (v[j]) v[j] = v[j] * inv % p_;
    // keep the form reduced
    for (auto& row : rows_) {
        const std::uint64_t f = row[c];
        if (f == 0) continue;
        const std::uint64_t g = p_ - f;
        for (std::size_t j = c; j < n_; ++j)
            if (v[j]) row[j] = (row[j] + g * v[j]) % p_;
    }
    pivot_row_[c] = static_cast<long>(rows_.size());
    pivot_col_.push_back(c);
    rows_.push_back(std::move(v));
    return true;
}

std::vector<std::size_t> ModEchelon::pivots() const
{
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < n_; ++c)
        if (pivot_row_[c] >= 0) out.push_back(c);
    return out;
}

std::vector<std::vector<std::uint64_t>> ModEchelon::kernel() const
{
    std::vector<std::vector<std::uint64_t>> out;
    for (std::size_t f = 0; f < n_; ++f) {
        if (pivot_row_[f] >= 0) continue;
        std::vector<std::uint64_t> v(n_, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::uint64_t x = rows_[r][f];
            if (x) v[pivot_col_[r]] = p_ - x;
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<std::uint64_t> reduce_mod(const Rational& r, std::uint64_t p)
{
    mpz_class m = static_cast<unsigned long>(p);
    mpz_class den = r.get_den() % m;
    if (den == 0) return std::nullopt;
    mpz_class num = r.get_num() % m;
    if (num < 0) num += m;
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
    mpz_class out = num * inv % m;
    return out.get_ui();
}

std::optional<Rational> rational_reconstruct(const mpz_class& a, const mpz_class& m)
{
    // half-extended Euclid stopped at the square-root bound
    mpz_class bound;
    mpz_class half = m / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    mpz_class r0 = m, r1 = a % m, s0 = 0, s1 = 1;
    if (r1 < 0) r1 += m;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1, s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (s1 == 0 || abs(s1) > bound) return std::nullopt;
    Rational out(r1, s1);
    out.canonicalize();
    return out;
}

std::vector<std::uint64_t> word_primes(std::size_t count)
{
    std::vector<std::uint64_t> out;
    mpz_class p = (1UL << 31) - (1UL << 20);
    while (out.size() < count) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        out.push_back(p.get_ui());
    }
    return out;
}

namespace {

struct PrimeRun {
    std::vector<std::size_t> pivots;
    std::vector<std::vector<std::uint64_t>> kernel;
    std::size_t rows_used = 0;
    bool ok = true;
};

PrimeRun run_prime(const std::vector<SparseRow>& rows, std::size_t ncols, std::size_t lower, std::uint64_t p)
{
    PrimeRun out;
    ModEchelon e(p, ncols);
    std::vector<std::uint64_t> dense(ncols);
    for (const auto& row : rows) {
        if (ncols - e.rank() <= lower) break;
        std::fill(dense.begin(), dense.end(), 0);
        for (const auto& [j, x] : row) {
            auto v = reduce_mod(x, p);
            if (!v) {
                out.ok = false;
                return out;
            }
            dense[j] = *v;
        }
        e.add(dense);
        ++out.rows_used;
    }
    out.pivots = e.pivots();
    out.kernel = e.kernel();
    return out;
}

bool kernel_vector_ok(const std::vector<SparseRow>& rows, const std::vector<Rational>& v)
{
    for (const auto& row : rows) {
        Rational acc = 0;
        for (const auto& [j, x] : row)
            if (sgn(v[j]) != 0) acc += x * v[j];
        if (sgn(acc) != 0) return false;
    }
    return true;
}

}  // namespace

ModularKernel modular_kernel(const std::vector<SparseRow>& rows, std::size_t ncols, std::size_t known_lower_bound,
                             std::size_t max_primes)
{
    ModularKernel out;
    const auto primes = word_primes(max_primes);
    std::vector<std::size_t> pivots;
    std::vector<std::vector<mpz_class>> acc;
    mpz_class modulus = 1;
    std::vector<std::vector<Rational>> last;
    for (std::uint64_t p : primes) {
        PrimeRun run = run_prime(rows, ncols, known_lower_bound, p);
        if (!run.ok) continue;
        if (out.primes_used == 0) {
            pivots = run.pivots;
            out.kernel_dim_mod_p = run.kernel.size();
            out.rows_used = run.rows_used;
            acc.assign(run.kernel.size(), std::vector<mpz_class>(ncols, 0));
        } else if (run.pivots != pivots) {
            // unlucky prime: a larger rank wins, otherwise skip it
            if (run.pivots.size() <= pivots.size()) continue;
            pivots = run.pivots;
            out.kernel_dim_mod_p = run.kernel.size();
            out.rows_used = run.rows_used;
            acc.assign(run.kernel.size(), std::vector<mpz_class>(ncols, 0));
            modulus = 1;
            last.clear();
        }
        ++out.primes_used;
        // CRT update
        mpz_class mp = static_cast<unsigned long>(p);
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), mp.get_mpz_t());
        for (std::size_t k = 0; k < acc.size(); ++k)
            for (std::size_t j = 0; j < ncols; ++j) {
                mpz_class cur = acc[k][j] % mp;
                mpz_class diff = (mpz_class(static_cast<unsigned long>(run.kernel[k][j])) - cur) % mp;
                if (diff < 0) diff += mp;
                acc[k][j] += modulus * (diff * inv % mp);
            }
        modulus *= mp;
        std::vector<std::vector<Rational>> cand;
        bool all = true;
        for (std::size_t k = 0; k < acc.size() && all; ++k) {
            std::vector<Rational> v(ncols);
            for (std::size_t j = 0; j < ncols && all; ++j) {
                if (acc[k][j] == 0) continue;
                auto r = rational_reconstruct(acc[k][j], modulus);
                if (!r) all = false;
                else v[j] = *r;
            }
            cand.push_back(std::move(v));
        }
        if (!all) continue;
        if (cand == last) {
            bool ok = true;
            for (const auto& v : cand) ok = ok && kernel_vector_ok(rows, v);
            if (ok) {
                out.kernel = std::move(cand);
                out.reconstructed = true;
                return out;
            }
        }
        last = std::move(cand);
    }
    return out;
}

}  // namespace spinweil
