#include <CLI11.hpp>

#include <iostream>

#include "frobalg/io.hpp"

using namespace frobalg;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitInternal = 4;

int dispatch(const std::string& command, const std::string& path, const RunOptions& opt) {
    SpecFile spec = load_spec_file(path);
    RunReport rep = run_command(command, spec, opt);
    std::cout << (opt.format == "structured" ? render_structured(rep) : render_text(rep));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decides Frobenius and separability properties of rational algebras,\n"
                 "algebra extensions and wreath products, with exact certified witnesses"};
    app.require_subcommand(1);
    app.fallthrough();

    RunOptions opt;
    std::string path;
    app.add_option("--seed", opt.seed, "seed for the randomized searches");
    app.add_option("--trials", opt.trials, "sampling budget before the symbolic fallback");
    app.add_option("--symbolic-cap", opt.symbolic_cap,
                   "largest dimension for symbolic determinant expansion");
    app.add_option("--format", opt.format, "report format: text or structured")
        ->check(CLI::IsMember({"text", "structured"}));

    std::vector<std::string> commands = {"check-frobenius", "check-separable", "nakayama",
                                         "check-extension", "check-wreath", "crosscheck"};
    for (const auto& name : commands) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("spec", path, "spec file (JSON)")->required();
    }

    auto* exp = app.add_subcommand("export-builtin", "write a builtin algebra as a spec file");
    std::string builtin_name;
    std::vector<std::size_t> params;
    exp->add_option("name", builtin_name, "builtin name")->required();
    exp->add_option("params", params, "builtin parameters");

    CLI11_PARSE(app, argc, argv);

    try {
        if (exp->parsed()) {
            Algebra a = builtin(builtin_name, params);
            std::string spec_name = builtin_name;
            for (auto p : params) spec_name += "_" + std::to_string(p);
            std::cout << algebra_spec_text(a, spec_name, a.name);
            return 0;
        }
        for (const auto& name : commands)
            if (app.get_subcommand(name)->parsed()) return dispatch(name, path, opt);
        std::cerr << "no command given\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const SpecValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const SymbolicCapExceeded& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant breach: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
