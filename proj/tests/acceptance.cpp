// One line per acceptance criterion; exits nonzero if any is red.
#include <spinweil/secant.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace spinweil;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
    bool ok = false;
    std::string detail;
};

const WeilStructure& structure(const std::string& preset)
{
    static std::map<std::string, WeilStructure> cache;
    auto it = cache.find(preset);
    if (it == cache.end()) it = cache.emplace(preset, build_weil(preset_datum(preset))).first;
    return it->second;
}

// Runs the named suite checks; reports the first failing one.
Verdict suite(const std::string& preset, const std::vector<std::string>& names, std::uint64_t seed = 7)
{
    RunOptions o;
    o.seed = seed;
    int total = 0;
    for (const auto& name : names) {
        o.filter = name;
        const Report r = run_all(preset, o);
        if (r.checks.empty()) return {false, preset + ": no check named " + name};
        for (const auto& c : r.checks) {
            ++total;
            if (!c.pass) return {false, preset + ": " + c.name + " " + c.witness.dump().substr(0, 200)};
        }
    }
    return {true, preset + " x" + std::to_string(total)};
}

Verdict join(std::initializer_list<Verdict> vs)
{
    Verdict out{true, ""};
    for (const auto& v : vs) {
        if (!v.ok) return v;
        out.detail += (out.detail.empty() ? "" : ", ") + v.detail;
    }
    return out;
}

Verdict clifford_relations()
{
    std::size_t pairs = 0;
    for (int n = 1; n <= 3; ++n) {
        const HyperbolicSpace& h = hyperbolic(n);
        const std::size_t D = std::size_t{1} << h.N();
        for (int a = 0; a < h.dim(); ++a)
            for (int b = 0; b < h.dim(); ++b) {
                using CE = CliffordElem<Rational>;
                const CE ga = CE::generator(h.V, a), gb = CE::generator(h.V, b);
                const Rational want(h.gram(a, b));
                if (clifford_mul(h, ga, gb) + clifford_mul(h, gb, ga) != CE::scalar(h.V, want)) return {false, "element level"};
                for (Mask C = 0; C < D; ++C) {
                    const RMV lam = RMV::basis(h.S, C);
                    const RMV lhs = clifford_action(h, ga, clifford_action(h, gb, lam)) + clifford_action(h, gb, clifford_action(h, ga, lam));
                    if (lhs != lam * want) return {false, "operator level"};
                }
                ++pairs;
            }
    }
    return {true, std::to_string(pairs) + " generator pairs"};
}

Verdict pure_spinors()
{
    for (const auto& p : preset_names()) {
        const WeilStructure& ws = structure(p);
        const std::size_t D = static_cast<std::size_t>(ws.h->dim());
        const auto pur = is_pure(*ws.h, ws.spinor);
        if (!pur.pure) return {false, p + ": not pure"};
        const KSub W = KSub::span(D, ws.W);
        if (!(pur.certificate.space.contains(W) && W.contains(pur.certificate.space))) return {false, p + ": annihilator != W"};
        std::vector<std::vector<FieldElem>> iw;
        for (const auto& w : ws.W) {
            std::vector<FieldElem> v;
            for (const auto& x : w) v.push_back(x.iota());
            iw.push_back(std::move(v));
        }
        if (W.intersect(KSub::span(D, iw)).dim() != 0) return {false, p + ": W meets iota(W)"};
    }
    return {true, std::to_string(preset_names().size()) + " presets"};
}

Verdict dimensions()
{
    std::ostringstream s;
    for (const auto& p : preset_names()) {
        const WeilStructure& ws = structure(p);
        const std::size_t e = static_cast<std::size_t>(ws.e);
        const std::size_t B = std::size_t{1} << (e / 2);
        const BBData bb = bb_data(ws);
        const std::size_t bb1 = bb.BB.size() > 1 ? bb.BB[1].dim() : 0;
        if (ws.B.size() != B || bb1 != e * (B / 2) || ws.HW.size() != e || ws.A2.size() != e / 2)
            return {false, p + ": B " + std::to_string(ws.B.size()) + " BB1 " + std::to_string(bb1) + " HW " + std::to_string(ws.HW.size()) +
                               " Xi " + std::to_string(ws.A2.size())};
        s << p << " (" << ws.B.size() << "," << bb1 << "," << ws.HW.size() << "," << ws.A2.size() << ") ";
    }
    return {true, s.str()};
}

Verdict forms()
{
    const std::vector<std::string> names = {"weil.eta", "weil.xi", "weil.hermitian", "weil.split"};
    return join({suite("sixfold-q2", names), suite("fourfold-rm2", names)});
}

Verdict invariants()
{
    const WeilStructure& ws = structure("sixfold-q2");
    for (int k = 0; k <= 4 * ws.n; ++k) {
        const InvariantDegree r = invariants_and_generation(ws, k);
        if (!r.generators_invariant || !r.certified_equal || r.generated_dim != r.invariant_dim)
            return {false, "k = " + std::to_string(k) + ": generated " + std::to_string(r.generated_dim) + ", invariant " +
                               std::to_string(r.invariant_dim)};
    }
    return {true, "k = 0.." + std::to_string(4 * ws.n)};
}

Verdict equivariance() { return suite("sixfold-q2", {"fm.equivariance", "fm.mukai"}); }

Verdict overlap_lemma()
{
    return join({suite("sixfold-q2", {"fm.overlap", "fm.Pi"}), suite("fourfold-rm2", {"fm.overlap", "fm.Pi"})});
}

Verdict rank_8q()
{
    std::ostringstream s;
    for (int q : {2, 3, 5}) {
        const WeilStructure& ws = structure("sixfold-q" + std::to_string(q));
        const SheafClass c = preset_ch_ideal_curves(ws);
        const Rational r = transform_pair(ws, c, c, PairVariant::G).coeff(0);
        if (abs(r) != Rational(8 * q)) return {false, "q = " + std::to_string(q) + ": |ch0| = " + rat_str(abs(r))};
        s << "q=" << q << ":" << rat_str(abs(r)) << " ";
    }
    return {true, s.str()};
}

Verdict headline() { return suite("sixfold-q2", {"secant.kappa", "secant.decompose", "secant.nonvanish"}); }

std::string slurp(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

Verdict determinism()
{
    const std::string a = "acceptance_run_a.json", b = "acceptance_run_b.json";
    for (const auto& out : {a, b}) {
        const std::string cmd = std::string("\"") + VERIFY_PATH + "\" --preset sixfold-q2 --seed 7 --out " + out + " 2>/dev/null";
        const int rc = std::system(cmd.c_str());
        if (rc != 0) return {false, "verify exited with status " + std::to_string(rc)};
    }
    const std::string x = slurp(a), y = slurp(b);
    if (x.empty() || x != y) return {false, "reports differ"};
    std::remove(a.c_str());
    std::remove(b.c_str());
    return {true, std::to_string(x.size()) + " identical bytes"};
}

}  // namespace

int main()
{
    struct Criterion {
        int id;
        const char* what;
        std::function<Verdict()> run;
        double limit_s;  // 0: no limit
    };
    const std::vector<Criterion> all = {
        {1, "Clifford relations n = 1..3", clifford_relations, 1.0},
        {2, "pure spinor, annihilator = W, W cap iota(W) = 0 on all presets", pure_spinors, 0},
        {3, "dim B, BB_1, HW, Xi(K_-)", dimensions, 0},
        {4, "forms: Xi_t, eta-adjointness, H_t, split Z (seed 7)", forms, 0},
        {5, "invariants = generated algebra, k = 0..4n, sixfold-q2", invariants, 600.0},
        {6, "phi~ equivariance and Mukai inversion", equivariance, 0},
        {7, "overlap filtration for all (T,T'); Pi(BB_1) = HW", overlap_lemma, 0},
        {8, "|ch0| = 8q for q = 2, 3, 5", rank_8q, 0},
        {9, "headline: kappa invariant, direct sum, gamma != 0", headline, 0},
        {10, "verify --seed 7 twice is byte-identical", determinism, 0},
    };
    int red = 0;
    for (const auto& c : all) {
        const auto t0 = Clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double s = std::chrono::duration<double>(Clock::now() - t0).count();
        if (v.ok && c.limit_s > 0 && s > c.limit_s) v = {false, "over the " + std::to_string(c.limit_s) + " s budget"};
        if (!v.ok) ++red;
        char line[64];
        std::snprintf(line, sizeof line, "%-4s criterion %2d  %8.3f s  ", v.ok ? "PASS" : "FAIL", c.id, s);
        std::cout << line << c.what << "  [" << v.detail << "]" << std::endl;
    }
    std::cout << (all.size() - static_cast<std::size_t>(red)) << "/" << all.size() << " criteria pass" << std::endl;
    return red == 0 ? 0 : 1;
}
