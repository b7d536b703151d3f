#ifndef SPINWEIL_MODULAR_HPP
#define SPINWEIL_MODULAR_HPP

#include <spinweil/rational.hpp>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace spinweil {

using SparseRow = std::vector<std::pair<std::uint32_t, Rational>>;

// Reduced echelon form over Z/p, fed one row at a time.
class ModEchelon {
public:
    ModEchelon(std::uint64_t p, std::size_t ncols);

    // True when the row raised the rank.
    bool add(const std::vector<std::uint64_t>& dense);
    std::size_t rank() const { return rows_.size(); }
    std::size_t ncols() const { return n_; }
    std::uint64_t prime() const { return p_; }
    std::vector<std::size_t> pivots() const;
    // Basis of the kernel, one vector per free column (free entry 1).
    std::vector<std::vector<std::uint64_t>> kernel() const;

private:
    std::uint64_t p_;
    std::size_t n_;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::vector<long> pivot_row_;  // column -> row index or -1
    std::vector<std::size_t> pivot_col_;
};

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);
std::optional<std::uint64_t> reduce_mod(const Rational& r, std::uint64_t p);
std::optional<Rational> rational_reconstruct(const mpz_class& a, const mpz_class& m);
// Deterministic list of 31-bit primes.
std::vector<std::uint64_t> word_primes(std::size_t count);

struct ModularKernel {
    std::size_t kernel_dim_mod_p = 0;  // upper bound for the rational kernel dimension
    std::size_t rows_used = 0;
    bool reconstructed = false;        // exact kernel recovered and checked against every row
    std::size_t primes_used = 0;
    std::vector<std::vector<Rational>> kernel;
};

/*
 * Kernel of a sparse rational system.  Rows are processed in the given order
 * over Z/p; once ncols - rank reaches known_lower_bound the scan stops, since
 * the kernel cannot be smaller than an exhibited subspace and the partial
 * kernel already equals the full one.  The kernel is then lifted by CRT and
 * rational reconstruction and verified exactly on all rows.
 */
ModularKernel modular_kernel(const std::vector<SparseRow>& rows, std::size_t ncols, std::size_t known_lower_bound,
                             std::size_t max_primes = 12);

}  // namespace spinweil

#endif
