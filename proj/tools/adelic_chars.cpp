// adelic-chars: classify characters of L ⋉ U from system and λ files.

#include "adelic/catalog.hpp"
#include "adelic/chars.hpp"
#include "adelic/sampling.hpp"
#include "adelic/serialize.hpp"
#include "adelic/traces.hpp"
#include "adelic/verify.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

using namespace adelic;

namespace {

enum Exit { kOk = 0, kParse = 1, kValidation = 2, kSemantic = 3, kVerification = 4 };

std::string combination(const RatVector& v, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (sgn(v[i]) == 0) continue;
        Rational c = v[i];
        if (out.empty()) {
            if (sgn(c) < 0) out += "-", c = -c;
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
            if (sgn(c) < 0) c = -c;
        }
        if (c != 1) out += pretty_rational(c) + "*";
        out += names[i];
    }
    return out.empty() ? "0" : out;
}

void print_subspace(std::ostream& os, const char* title, const Subspace& s, const std::vector<std::string>& names,
                    const char* indent = "") {
    os << indent << title << " (dim " << s.dim() << "):";
    if (s.dim() == 0) os << " {0}";
    os << '\n';
    for (const auto& b : s.basis_vectors()) os << indent << "  " << combination(b, names) << '\n';
}

void print_report_text(std::ostream& os, const ClassificationReport& r, const LeviSystem& sys) {
    const auto& names = sys.basis_names();
    os << "lambda: " << r.lambda.str() << '\n';
    print_subspace(os, "k_lambda", r.k, names);
    print_subspace(os, "p_lambda", r.p, names);
    os << "chi_lambda on p basis:";
    if (r.chi_on_p_basis.empty()) os << " (none)";
    for (const auto& c : r.chi_on_p_basis) os << ' ' << c.str();
    os << '\n';
    print_subspace(os, "orbit directions V", r.orbit_V, names);
    os << "duality p = ann(V): " << (r.duality_ok ? "yes" : "NO") << '\n';
    os << "L_lambda membership:\n";
    for (const auto& s : r.l_lambda_samples) os << "  " << (s.member ? "in     " : "not in ") << s.element << '\n';
}

SystemDocument load_system(const std::string& path) { return system_from_json(read_json_file(path)); }

AdeleCharacter load_lambda(const std::string& path, const LeviSystem& sys) {
    AdeleCharacter lambda = lambda_from_json(read_json_file(path));
    if (lambda.dim() != sys.dim()) {
        throw DimensionError(path + ": character has dim " + std::to_string(lambda.dim()) + " but the system has dim " +
                             std::to_string(sys.dim()));
    }
    return lambda;
}

std::vector<NamedLeviElement> classification_samples(const SystemDocument& doc, std::size_t random, std::uint64_t seed) {
    auto samples = default_levi_samples(doc.system, doc.named_elements);
    Sampler rng(seed);
    for (std::size_t i = 0; i < random; ++i) {
        LeviElement l = doc.system.word(rng.word(doc.system.one_param_gens().size()));
        samples.push_back({"random" + std::to_string(i) + ": " + doc.system.describe(l), std::move(l)});
    }
    return samples;
}

int cmd_validate(const std::string& path) {
    const Json j = read_json_file(path);
    try {
        const auto doc = system_from_json(j);
        std::cout << path << ": valid (dim " << doc.system.dim() << ", " << doc.system.one_param_gens().size()
                  << " Levi generators, nilpotency class " << doc.system.algebra().require_nil_class() << ")\n";
        return kOk;
    } catch (const ValidationError& e) {
        std::cerr << path << ": invalid system\n" << e.what() << '\n';
        return kValidation;
    } catch (const DimensionError& e) {
        std::cerr << path << ": invalid system\n" << e.what() << '\n';
        return kValidation;
    }
}

int cmd_classify(const std::string& system_path, const std::string& lambda_path, bool text, std::size_t samples,
                 std::uint64_t seed) {
    const auto doc = load_system(system_path);
    const auto lambda = load_lambda(lambda_path, doc.system);
    const auto report = classify(lambda, doc.system, classification_samples(doc, samples, seed));
    if (text) {
        print_report_text(std::cout, report, doc.system);
    } else {
        ReportDocument d;
        d.seed = seed;
        d.report = report;
        std::cout << canonical_dump(to_json(d));
    }
    return kOk;
}

int cmd_quasiorbit(const std::string& system_path, const std::string& l1, const std::string& l2, bool json) {
    const auto doc = load_system(system_path);
    const auto a = load_lambda(l1, doc.system);
    const auto b = load_lambda(l2, doc.system);
    const auto ka = quasi_orbit_key(a, doc.system);
    const auto kb = quasi_orbit_key(b, doc.system);
    const bool same = same_quasi_orbit(a, b, doc.system);
    if (json) {
        std::cout << canonical_dump(Json{{"tool", kToolName},
                                         {"version", kToolVersion},
                                         {"key1", to_json(ka)},
                                         {"key2", to_json(kb)},
                                         {"verdict", same ? "same" : "different"}});
    } else {
        const auto& names = doc.system.basis_names();
        for (const auto* key : {&ka, &kb}) {
            std::cout << (key == &ka ? "key 1\n" : "key 2\n");
            print_subspace(std::cout, "p", key->p, names, "  ");
            std::cout << "  chi on p basis:";
            for (const auto& c : key->chi_values) std::cout << ' ' << c.str();
            std::cout << "\n  restriction: " << key->restriction.str() << '\n';
        }
        std::cout << (same ? "same" : "different") << '\n';
    }
    return kOk;
}

int cmd_verify(const std::string& system_path, const VerifyOptions& opts, bool json) {
    const auto doc = load_system(system_path);
    ReportDocument d;
    d.seed = opts.seed;
    d.verification = run_verification(doc.system, doc.named_elements, opts);
    bool ok = true;
    for (const auto& r : d.verification) ok = ok && r.result;
    if (json) {
        std::cout << canonical_dump(to_json(d));
    } else {
        for (const auto& r : d.verification) {
            std::cout << (r.result ? "PASS " : "FAIL ") << r.check << " (" << r.samples << " samples";
            if (r.tolerance) std::cout << ", tol " << *r.tolerance;
            std::cout << ")\n";
        }
        std::cout << (ok ? "all checks passed" : "verification FAILED") << " (seed " << opts.seed << ")\n";
    }
    return ok ? kOk : kVerification;
}

int cmd_catalog(const std::string& name, const std::string& emit_dir, bool list) {
    if (list) {
        for (const auto& n : catalog_names()) std::cout << n << '\n';
        return kOk;
    }
    const CatalogFixture fx = catalog_fixture(name);
    const Json system = to_json(*fx.system, fx.named_elements);
    if (emit_dir.empty()) {
        std::cout << canonical_dump(system);
        return kOk;
    }
    namespace fs = std::filesystem;
    const fs::path dir(emit_dir);
    fs::create_directories(dir);
    write_text_file((dir / "system.json").string(), canonical_dump(system));
    SystemDocument doc{*fx.system, fx.named_elements};
    for (const auto& [lname, lambda] : fx.lambdas) {
        write_text_file((dir / ("lambda_" + lname + ".json")).string(), canonical_dump(to_json(lambda)));
        ReportDocument d;
        d.report = classify(lambda, doc.system, classification_samples(doc, 0, 0));
        write_text_file((dir / ("expected_" + lname + ".json")).string(), canonical_dump(to_json(d)));
    }
    std::cout << "wrote " << 1 + 2 * fx.lambdas.size() << " files to " << dir.string() << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Characters of L ⋉ U over Q: classification and verification"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    std::string system_path, lambda_path, lambda2_path, suite = "all", catalog_name, emit_dir;
    bool text = false, json_flag = false, list = false, negative = false;
    std::size_t samples = 0, lambdas = 25;
    std::uint64_t seed = 0;

    auto* validate = app.add_subcommand("validate", "Check that a system file defines a valid L ⋉ U");
    validate->add_option("system", system_path, "System JSON file")->required();

    auto* classify_cmd = app.add_subcommand("classify", "Compute k_lambda, p_lambda, chi_lambda and L_lambda samples");
    classify_cmd->add_option("system", system_path, "System JSON file")->required();
    classify_cmd->add_option("lambda", lambda_path, "Character JSON file")->required();
    auto* text_opt = classify_cmd->add_flag("--text", text, "Human-readable report");
    classify_cmd->add_flag("--json", json_flag, "Canonical JSON report (default)")->excludes(text_opt);
    classify_cmd->add_option("--samples", samples, "Random Levi words added to the membership table");
    classify_cmd->add_option("--seed", seed, "Seed for the random Levi words");

    auto* qo = app.add_subcommand("quasiorbit", "Decide whether two characters share a quasi-orbit");
    qo->add_option("system", system_path, "System JSON file")->required();
    qo->add_option("lambda1", lambda_path, "First character")->required();
    qo->add_option("lambda2", lambda2_path, "Second character")->required();
    qo->add_flag("--json", json_flag, "Canonical JSON output");

    auto* verify = app.add_subcommand("verify", "Run the property suites on a system");
    verify->add_option("system", system_path, "System JSON file")->required();
    verify->add_option("--suite", suite, "core, traces, duality or all")->capture_default_str();
    verify->add_option("--seed", seed, "Random seed")->capture_default_str();
    verify->add_option("--lambdas", lambdas, "Random characters per check")->capture_default_str();
    verify->add_flag("--negative-control", negative, "Include a broken trace function that must fail");
    verify->add_flag("--json", json_flag, "Canonical JSON report");

    auto* catalog = app.add_subcommand("catalog", "Emit a built-in example system with fixtures");
    catalog->add_option("name", catalog_name, "abelian-sl2, heisenberg-1, heisenberg-2 or free-3");
    catalog->add_option("--emit", emit_dir, "Directory for system, lambda and expected report files");
    catalog->add_flag("--list", list, "List catalog names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kParse;
    }

    try {
        if (*validate) return cmd_validate(system_path);
        if (*classify_cmd) return cmd_classify(system_path, lambda_path, text, samples, seed);
        if (*qo) return cmd_quasiorbit(system_path, lambda_path, lambda2_path, json_flag);
        if (*verify) {
            VerifyOptions opts;
            opts.suite = parse_suite(suite);
            opts.seed = seed;
            opts.lambdas = lambdas;
            opts.negative_control = negative;
            return cmd_verify(system_path, opts, json_flag);
        }
        if (*catalog) {
            if (!list && catalog_name.empty()) throw ParseError("catalog: give a name or --list");
            return cmd_catalog(catalog_name, emit_dir, list);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const ValidationError& e) {
        std::cerr << "validation error:\n" << e.what() << '\n';
        return kValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kSemantic;
    }
    return kOk;
}
