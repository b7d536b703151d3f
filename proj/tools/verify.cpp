#include <spinweil/secant.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

int invalid(const std::string& msg)
{
    std::cerr << "verify: " << msg << "\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification of the spinorial Weil-class constructions"};
    std::string preset, input, out, filter;
    std::uint64_t seed = 1;
    auto* p = app.add_option("--preset", preset, "built-in instance");
    auto* i = app.add_option("--input", input, "instance JSON file");
    p->excludes(i);
    i->excludes(p);
    app.add_option("--out", out, "write the report here instead of stdout");
    app.add_option("--check", filter, "run only checks whose name contains this");
    app.add_option("--seed", seed, "seed for randomized samples");
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    if (preset.empty() == input.empty()) return invalid("exactly one of --preset or --input is required");

    spinweil::RunOptions opt;
    opt.seed = seed;
    opt.filter = filter;

    spinweil::Report rep;
    try {
        if (!preset.empty()) {
            const auto names = spinweil::preset_names();
            if (std::find(names.begin(), names.end(), preset) == names.end()) return invalid("unknown preset " + preset);
            rep = spinweil::run_all(preset, opt);
        } else {
            std::ifstream f(input);
            if (!f) return invalid("cannot read " + input);
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(f);
            } catch (const nlohmann::json::parse_error& e) {
                return invalid(std::string("malformed JSON: ") + e.what());
            }
            rep = spinweil::run_all(spinweil::parse_datum(j), opt);
        }
    } catch (const spinweil::SchemaError& e) {
        return invalid(std::string("schema: ") + e.what());
    } catch (const spinweil::DatumError& e) {
        return invalid(std::string("datum: ") + e.what());
    }
    if (rep.checks.empty()) return invalid("no check matches '" + filter + "'");

    const std::string text = rep.to_json().dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f) return invalid("cannot write " + out);
        f << text;
    }
    std::cerr << rep.passed() << " passed, " << rep.failed() << " failed\n";
    return rep.failed() == 0 ? 0 : 1;
}
