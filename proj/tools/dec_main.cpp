#include "dec/io.hpp"
#include "dec/operators.hpp"
#include "dec/verify.hpp"
#include "dec/whitney.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <unistd.h>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitValidation = 2;
constexpr int kExitPropertyFailure = 3;

bool color_enabled() {
    const char* env = std::getenv("DEC_COLOR");
    if (env && std::string(env) == "0") return false;
    return isatty(fileno(stdout));
}

void emit(const nlohmann::ordered_json& doc, const std::string& output_path) {
    std::string text = doc.dump(2) + "\n";
    if (output_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output_path);
        if (!out) throw dec::Error("cannot write to '" + output_path + "'");
        out << text;
    }
}

int cmd_d(const std::string& complex_path, const std::string& cochain_path,
          const std::string& output_path) {
    dec::LabeledComplex lc = dec::load_complex(dec::load_json_file(complex_path));
    dec::Cochain a = dec::load_cochain(dec::load_json_file(cochain_path), lc);
    emit(dec::serialize_cochain(dec::d(lc.complex, a), lc), output_path);
    return kExitOk;
}

int cmd_info(const std::string& complex_path) {
    dec::LabeledComplex lc = dec::load_complex(dec::load_json_file(complex_path));
    std::cout << "dimension: " << lc.complex.dimension() << "\n";
    for (int k = 0; k <= lc.complex.dimension(); ++k)
        std::cout << "simplices[" << k << "]: " << lc.complex.simplices(k).size() << "\n";
    std::cout << "euler characteristic: " << lc.complex.euler_characteristic() << "\n";
    return kExitOk;
}

int cmd_wedge(const std::string& complex_path, const std::vector<std::string>& cochain_paths,
              const std::string& method, const std::string& output_path) {
    dec::LabeledComplex lc = dec::load_complex(dec::load_json_file(complex_path));
    dec::Cochain a = dec::load_cochain(dec::load_json_file(cochain_paths[0]), lc);
    dec::Cochain b = dec::load_cochain(dec::load_json_file(cochain_paths[1]), lc);
    if (a.degree() + b.degree() > lc.complex.dimension())
        std::cerr << "warning: degrees " << a.degree() << "+" << b.degree()
                  << " exceed complex dimension " << lc.complex.dimension()
                  << "; result is the zero cochain\n";
    dec::Cochain result(0);
    if (method == "perm") {
        result = dec::wedge_perm(lc.complex, a, b);
    } else if (method == "avg-left") {
        result = dec::wedge_avg(lc.complex, a, b, dec::WedgeMethod::AverageOuterLeft);
    } else if (method == "avg-right") {
        result = dec::wedge_avg(lc.complex, a, b, dec::WedgeMethod::AverageOuterRight);
    } else if (method == "whitney") {
        result = dec::wilson_product(lc.complex, a, b, dec::WilsonPath::Symbolic);
    } else {
        std::cerr << "error: unknown method '" << method << "'\n";
        return kExitParse;
    }
    emit(dec::serialize_cochain(result, lc), output_path);
    return kExitOk;
}

int cmd_pullback(const std::string& source_path, const std::string& target_path,
                 const std::string& map_path, const std::string& cochain_path,
                 const std::string& output_path) {
    dec::LabeledComplex source = dec::load_complex(dec::load_json_file(source_path));
    dec::LabeledComplex target = dec::load_complex(dec::load_json_file(target_path));
    try {
        dec::SimplicialMap f = dec::load_map(dec::load_json_file(map_path), source, target);
        dec::Cochain a = dec::load_cochain(dec::load_json_file(cochain_path), target);
        emit(dec::serialize_cochain(dec::pullback(f, a), source), output_path);
    } catch (const dec::SpanningViolationError& e) {
        std::cerr << "error: spanning violation at " << dec::simplex_key(e.simplex, source)
                  << ": " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}

int cmd_verify(const std::string& complex_path, const dec::VerifyOptions& options) {
    dec::LabeledComplex lc = dec::load_complex(dec::load_json_file(complex_path));
    auto results = dec::run_verification(lc.complex, options);
    bool color = color_enabled();
    const char* green = color ? "\033[32m" : "";
    const char* red = color ? "\033[31m" : "";
    const char* dim = color ? "\033[2m" : "";
    const char* reset = color ? "\033[0m" : "";
    size_t width = 0;
    for (const auto& r : results) width = std::max(width, r.name.size());
    bool failed = false;
    for (const auto& r : results) {
        std::string pad(width - r.name.size() + 2, '.');
        switch (r.status) {
            case dec::PropertyStatus::Pass:
                std::cout << r.name << " " << pad << " " << green << "pass" << reset << "\n";
                break;
            case dec::PropertyStatus::Skip:
                std::cout << r.name << " " << pad << " " << dim << "skipped" << reset << "\n";
                break;
            case dec::PropertyStatus::Fail:
                failed = true;
                std::cout << r.name << " " << pad << " " << red << "FAIL" << reset << "\n";
                std::cout << "  witness: " << r.witness << "\n";
                std::cout << "  reproduce with: --seed " << options.seed << " --trials "
                          << options.trials << "\n";
                break;
        }
    }
    std::cout << (failed ? "verification FAILED" : "all properties verified") << "\n";
    return failed ? kExitPropertyFailure : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact discrete exterior calculus on simplicial cochains"};
    app.require_subcommand(1);

    std::string complex_path, target_path, map_path, output_path, method = "avg-left";
    std::vector<std::string> cochain_paths;
    dec::VerifyOptions verify_options;

    auto add_common = [&](CLI::App* cmd, bool needs_cochain) {
        cmd->add_option("-c,--complex", complex_path, "complex JSON file")->required();
        if (needs_cochain)
            cmd->add_option("-x,--cochain", cochain_paths, "cochain JSON file");
        cmd->add_option("-o,--output", output_path, "write result here instead of stdout");
    };

    CLI::App* cd = app.add_subcommand("d", "discrete exterior derivative of a cochain");
    add_common(cd, true);

    CLI::App* cw = app.add_subcommand("wedge", "discrete wedge product of two cochains");
    add_common(cw, true);
    cw->add_option("--method", method, "perm|avg-left|avg-right|whitney")
        ->check(CLI::IsMember({"perm", "avg-left", "avg-right", "whitney"}));

    CLI::App* cp = app.add_subcommand("pullback", "pull a target cochain back along a map");
    add_common(cp, true);
    cp->add_option("-t,--target-complex", target_path, "target complex JSON file")->required();
    cp->add_option("-m,--map", map_path, "vertex map JSON file")->required();

    CLI::App* cv = app.add_subcommand("verify", "run the property suites on a complex");
    cv->add_option("-c,--complex", complex_path, "complex JSON file")->required();
    cv->add_option("--trials", verify_options.trials, "random trials per degree pair");
    cv->add_option("--seed", verify_options.seed, "random seed");
    cv->add_option("--max-degree", verify_options.max_degree, "cap on cochain degrees");
    cv->add_flag("--corrupt-wedge", verify_options.corrupt_wedge)->group("");  // test hook

    CLI::App* ci = app.add_subcommand("info", "per-dimension counts and Euler characteristic");
    ci->add_option("-c,--complex", complex_path, "complex JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitParse;
    }

    try {
        if (cd->parsed() || cw->parsed()) {
            size_t need = cd->parsed() ? 1 : 2;
            if (cochain_paths.size() != need) {
                std::cerr << "error: expected " << need << " -x/--cochain argument(s)\n";
                return kExitParse;
            }
        }
        if (cd->parsed()) return cmd_d(complex_path, cochain_paths[0], output_path);
        if (cw->parsed()) return cmd_wedge(complex_path, cochain_paths, method, output_path);
        if (cp->parsed()) {
            if (cochain_paths.size() != 1) {
                std::cerr << "error: expected one -x/--cochain argument\n";
                return kExitParse;
            }
            return cmd_pullback(complex_path, target_path, map_path, cochain_paths[0],
                                output_path);
        }
        if (cv->parsed()) return cmd_verify(complex_path, verify_options);
        if (ci->parsed()) return cmd_info(complex_path);
    } catch (const dec::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const dec::SpanningViolationError& e) {
        std::cerr << "error: spanning violation at " << dec::simplex_str(e.simplex) << ": "
                  << e.what() << "\n";
        return kExitValidation;
    } catch (const dec::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitParse;
}
