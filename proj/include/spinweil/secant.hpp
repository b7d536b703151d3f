#ifndef SPINWEIL_SECANT_HPP
#define SPINWEIL_SECANT_HPP

#include <spinweil/fm.hpp>

#include <json.hpp>

#include <cstdint>

namespace spinweil {

struct SheafClass {
    RMV ch;
    std::string label;
    Rational rank() const { return ch.coeff(0); }
};

// alpha + beta; in genus 3 this is (1 - q/2 Theta^2) + (Theta - q/3! Theta^3).
SheafClass preset_ch_ideal_curves(const WeilStructure& ws);
SheafClass dualize(const SheafClass& c);
// Coordinates of a class in the (alpha, beta) or echelon basis of B; nullopt outside B.
std::optional<std::vector<Rational>> b_coords(const WeilStructure& ws, const RMV& c);

enum class PairVariant { E, G };
// E: Phi^H(c1 (x) dual(c2)); G: Phi^H(c2 (x) c1), without the shift sign.
RMV transform_pair(const WeilStructure& ws, const SheafClass& c1, const SheafClass& c2, PairVariant v);

struct ZeroRank : std::domain_error {
    ZeroRank() : std::domain_error("kappa: the class has rank zero") {}
};
RMV kappa(const RMV& c);

struct KappaSplit {
    bool direct = false;
    bool member = false;
    RMV gamma, delta;
    std::vector<Rational> hw_coords, sym_coords;
};
// Degree-d part of kappa against HW + Im Sym^{d/2}(A2).
KappaSplit decompose_kappa(const WeilStructure& ws, const RMV& kd);

struct Nonvanishing {
    bool value = false;
    std::vector<bool> per_character;  // sum over T cap T' = {sigma} is nonzero
    bool gamma1_nonzero = false;
};
Nonvanishing nonvanish_criterion(const WeilStructure& ws, const BBData& bb, const SheafClass& c1, const SheafClass& c2);
// Nonvanishing directly on a coefficient matrix in B (x) B.
Nonvanishing nonvanish_on(const WeilStructure& ws, const BBData& bb, const RMat& c);

struct CheckResult {
    std::string name;
    std::string anchor;
    bool pass = false;
    nlohmann::json witness;
};

struct Report {
    nlohmann::json instance;
    std::vector<CheckResult> checks;

    int passed() const;
    int failed() const;
    nlohmann::json to_json() const;
};

struct RunOptions {
    std::uint64_t seed = 1;
    std::string filter;  // substring of check names; empty runs all
};

// Input schema violation, with a JSON-pointer-like path.
struct SchemaError : std::invalid_argument {
    SchemaError(const std::string& path, const std::string& what) : std::invalid_argument(path + ": " + what), path(path) {}
    std::string path;
};

// {"name", "tower": {"p", "q"}, "n", "eta_hat": rows, "theta": d x d of [a, b]}; rationals as int, "a/b" or {"num", "den"}.
WeilDatum parse_datum(const nlohmann::json& j);
nlohmann::json datum_to_json(const WeilDatum& d);

Report run_all(const WeilDatum& datum, const RunOptions& opt = {});
Report run_all(const std::string& preset, const RunOptions& opt = {});

// Exact rationals as strings, field elements as coordinate lists.
std::string rat_str(const Rational& r);
nlohmann::json field_json(const FieldElem& a);
nlohmann::json mv_json(const RMV& a);

}  // namespace spinweil

#endif
