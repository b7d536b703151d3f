#include <spinweil/secant.hpp>

#include <algorithm>

namespace spinweil {

using nlohmann::json;

int Report::passed() const
{
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; }));
}

int Report::failed() const { return static_cast<int>(checks.size()) - passed(); }

json Report::to_json() const
{
    json arr = json::array();
    for (const auto& c : checks)
        arr.push_back({{"name", c.name}, {"anchor", c.anchor}, {"status", c.pass ? "pass" : "fail"}, {"witness", c.witness}});
    return {{"instance", instance}, {"checks", arr}, {"summary", {{"pass", passed()}, {"fail", failed()}}}};
}

namespace {

const json& member(const json& j, const std::string& path, const char* key)
{
    if (!j.is_object()) throw SchemaError(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(path + "/" + key, "missing");
    return *it;
}

Rational rational_at(const json& j, const std::string& path)
{
    try {
        if (j.is_number_integer()) return Rational(j.get<long>());
        if (j.is_string()) return parse_rational(j.get<std::string>());
        if (j.is_object()) {
            const Rational num = rational_at(member(j, path, "num"), path + "/num");
            const Rational den = rational_at(member(j, path, "den"), path + "/den");
            if (!is_integer(num) || !is_integer(den)) throw SchemaError(path, "num and den must be integers");
            if (sgn(den) == 0) throw SchemaError(path + "/den", "zero denominator");
            return num / den;
        }
    } catch (const SchemaError&) {
        throw;
    } catch (const std::exception& e) {
        throw SchemaError(path, std::string("not a rational: ") + e.what());
    }
    throw SchemaError(path, "expected an integer, \"a/b\" or {\"num\", \"den\"}");
}

long integer_at(const json& j, const std::string& path)
{
    if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
    return j.get<long>();
}

const json& array_at(const json& j, const std::string& path, std::size_t size)
{
    if (!j.is_array()) throw SchemaError(path, "expected an array");
    if (j.size() != size) throw SchemaError(path, "expected " + std::to_string(size) + " entries, got " + std::to_string(j.size()));
    return j;
}

}  // namespace

WeilDatum parse_datum(const json& j)
{
    if (!j.is_object()) throw SchemaError("", "top level must be an object");
    WeilDatum d;
    d.name = "input";
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw SchemaError("/name", "expected a string");
        d.name = j["name"].get<std::string>();
    }
    const json& tw = member(j, "", "tower");
    d.tower.p = integer_at(member(tw, "/tower", "p"), "/tower/p");
    d.tower.q = rational_at(member(tw, "/tower", "q"), "/tower/q");
    const long n = integer_at(member(j, "", "n"), "/n");
    if (n < 1 || n > 4) throw SchemaError("/n", "must be between 1 and 4");
    d.n = static_cast<int>(n);
    const std::size_t N = static_cast<std::size_t>(2 * n);
    const json& eh = array_at(member(j, "", "eta_hat"), "/eta_hat", N);
    d.eta_hat = RMat(N, N);
    for (std::size_t r = 0; r < N; ++r) {
        const std::string pr = "/eta_hat/" + std::to_string(r);
        const json& row = array_at(eh[r], pr, N);
        for (std::size_t c = 0; c < N; ++c) d.eta_hat(r, c) = rational_at(row[c], pr + "/" + std::to_string(c));
    }
    const json& th = member(j, "", "theta");
    if (!th.is_array()) throw SchemaError("/theta", "expected an array");
    const std::size_t D = th.size();
    d.theta.assign(D, std::vector<FCoeff>(D, FCoeff{0, 0}));
    for (std::size_t r = 0; r < D; ++r) {
        const std::string pr = "/theta/" + std::to_string(r);
        const json& row = array_at(th[r], pr, D);
        for (std::size_t c = 0; c < D; ++c) {
            const std::string pc = pr + "/" + std::to_string(c);
            const json& cell = row[c];
            if (cell.is_array()) {
                array_at(cell, pc, 2);
                d.theta[r][c] = {rational_at(cell[0], pc + "/0"), rational_at(cell[1], pc + "/1")};
            } else {
                d.theta[r][c] = {rational_at(cell, pc), 0};
            }
        }
    }
    return d;
}

json datum_to_json(const WeilDatum& d)
{
    json eh = json::array();
    for (std::size_t r = 0; r < d.eta_hat.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < d.eta_hat.cols(); ++c) row.push_back(rat_str(d.eta_hat(r, c)));
        eh.push_back(row);
    }
    json th = json::array();
    for (const auto& r : d.theta) {
        json row = json::array();
        for (const auto& c : r) row.push_back({rat_str(c[0]), rat_str(c[1])});
        th.push_back(row);
    }
    return {{"name", d.name},
            {"tower", {{"p", d.tower.p}, {"q", rat_str(d.tower.q)}}},
            {"n", d.n},
            {"eta_hat", eh},
            {"theta", th}};
}

}  // namespace spinweil
