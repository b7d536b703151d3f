#include <spinweil/clifford.hpp>

#include <map>
#include <memory>
#include <mutex>

namespace spinweil {

RMat HyperbolicSpace::gram_matrix() const
{
    RMat g(static_cast<std::size_t>(dim()), static_cast<std::size_t>(dim()));
    for (int a = 0; a < dim(); ++a)
        for (int b = 0; b < dim(); ++b) g(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = gram(a, b);
    return g;
}

const HyperbolicSpace& hyperbolic(int n)
{
    if (n < 1 || n > 7) throw std::invalid_argument("hyperbolic space: n must lie in 1..7");
    static std::mutex mu;
    static std::map<int, std::unique_ptr<HyperbolicSpace>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) {
        slot = std::make_unique<HyperbolicSpace>();
        slot->n = n;
        slot->V = vector_space(n);
        slot->S = spinor_space(n);
    }
    return *slot;
}

}  // namespace spinweil
