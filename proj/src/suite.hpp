#ifndef SPINWEIL_SUITE_HPP
#define SPINWEIL_SUITE_HPP

#include <spinweil/secant.hpp>

#include <functional>
#include <random>

namespace spinweil::suite {

using nlohmann::json;
using RVec = std::vector<Rational>;
using KVec = std::vector<FieldElem>;

// Seeded per check name, so filtering does not shift the streams.
class Rng {
public:
    Rng(std::uint64_t seed, const std::string& name);
    long uniform(long lo, long hi) { return lo + static_cast<long>(g_() % static_cast<std::uint64_t>(hi - lo + 1)); }
    long nonzero(long bound);
    Rational rational();
    RVec vec(std::size_t n, long bound = 3);
    FieldElem field(const Tower* t);
    // t in K_-
    FieldElem k_minus(const Tower* t);
    RMV mv(const SpacePtr& sp, int terms);
    RMV homogeneous(const SpacePtr& sp, int degree, int terms);
    RMV bivector(const SpacePtr& sp, int terms);

private:
    std::mt19937_64 g_;
};

struct Tally {
    bool ok = true;
    json failures = json::array();
    void expect(bool cond, const std::string& what)
    {
        if (cond) return;
        ok = false;
        if (failures.size() < 20) failures.push_back(what);
    }
};

struct Outcome {
    bool pass = false;
    json witness;
};

inline Outcome finish(const Tally& t, json w = json::object())
{
    if (!t.failures.empty()) w["failures"] = t.failures;
    return {t.ok, std::move(w)};
}

struct Pipeline {
    SheafClass c1, c2;
    RMV E;
    RMV kappa;
    KappaSplit split;
};

class Context {
public:
    Context(const WeilStructure& ws, std::uint64_t seed) : ws(ws), seed(seed) {}
    const WeilStructure& ws;
    std::uint64_t seed;
    bool pipeline() const { return ws.e == 2 && ws.d >= 4; }
    // genus 3 with Theta^3/3! = +-top: the setting of the rank 8q statement
    bool principal_threefold() const;
    const BBData& bb();
    const Pipeline& pipe();

private:
    std::optional<BBData> bb_;
    std::optional<Pipeline> pipe_;
};

using CheckFn = std::function<Outcome(Context&, Rng&)>;

struct Declared {
    std::string name;
    std::string anchor;
    CheckFn fn;
};

void algebra_checks(std::vector<Declared>& out);
void weil_checks(std::vector<Declared>& out);
void transform_checks(std::vector<Declared>& out, bool pipeline, bool principal);

// small shared helpers
KVec kmul(const RMat& m, const KVec& v);
KVec to_kvec(const RVec& v);
KVec iota(const KVec& v);
template <class S>
bool same_span(const Subspace<S>& a, const Subspace<S>& b)
{
    return a.dim() == b.dim() && a.contains(b) && b.contains(a);
}
RVec unit_vec(std::size_t n, std::size_t i);
std::string sign_str(const Rational& r);

}  // namespace spinweil::suite

#endif
