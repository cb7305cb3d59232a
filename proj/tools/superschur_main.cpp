// Batch CLI over the superschur library. Output is machine-readable and
// byte-deterministic: JSON with sorted keys, exact rationals only.
//
// Exit codes: 0 success, 1 selfcheck failure, 2 argument error,
// 3 size-bound refusal.

#include "superschur/commutant.hpp"
#include "superschur/config.hpp"
#include "superschur/json_io.hpp"
#include "superschur/schur_weyl.hpp"
#include "superschur/selfcheck.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace superschur;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSelfcheckFailed = 1;
constexpr int kExitArgument = 2;
constexpr int kExitSizeBound = 3;

void apply_env_overrides() {
    if (const char* cap = std::getenv("SUPERSCHUR_MAX_DIM")) {
        long long value = std::atoll(cap);
        if (value > 0) {
            config().max_eval_dim = value;
            config().max_commutant_dim = value;
        }
    }
}

// JSON with sorted keys and fixed indentation; rectangle-scan implements
// the csv format itself.
void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string rational_or_int(const Rational& r) {
    return r.get_den() == 1 ? r.get_num().get_str() : rational_to_string(r);
}

GroupAlgebraElement load_element(const std::string& inline_json, const std::string& file,
                                 int degree_flag) {
    std::string text = inline_json;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw std::invalid_argument("cannot open element file: " + file);
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    if (text.empty()) throw std::invalid_argument("no element given (--element or --element-file)");
    json parsed = json::parse(text);
    if (parsed.is_array()) {
        if (degree_flag < 0) throw std::invalid_argument("--degree required with a bare term array");
        parsed = json{{"degree", degree_flag}, {"terms", parsed}};
    }
    return element_from_json(parsed);
}

MatMorphism load_morphism(const std::string& text, const std::string& what) {
    if (text.empty()) throw std::invalid_argument("missing morphism: " + what);
    return morphism_from_json(json::parse(text));
}

std::vector<SuperSpace> parse_spaces(const std::vector<std::string>& specs) {
    std::vector<SuperSpace> spaces;
    for (const std::string& s : specs) {
        auto bar = s.find('|');
        if (bar == std::string::npos) throw std::invalid_argument("space must be m|n: " + s);
        spaces.push_back(
            {std::stoi(s.substr(0, bar)), std::stoi(s.substr(bar + 1))});
    }
    return spaces;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact super Schur-Weyl calculus: symmetrizers, tensor ideals, fractions"};
    app.require_subcommand(1);

    std::string lambda_str, mu_str, nu_str;
    std::string element_json, element_file;
    std::string h_json, f_json;
    std::string format = "json";
    std::vector<std::string> space_specs;
    int m = 0, n = 0, degree = -1, m0 = 1, rank = 0, max_degree = 4;
    int weyl_m = 1;
    int c_even = 1, c_odd = 0, cp_even = 1, cp_odd = 0;
    std::uint64_t seed = 0;

    app.add_option("--seed", seed, "RNG seed for randomized checks");
    app.add_option("--format", format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* schur_dim_cmd = app.add_subcommand("schur-dim", "super dimension pair of a Schur functor");
    schur_dim_cmd->add_option("--lambda", lambda_str)->required();
    schur_dim_cmd->add_option("--m", m)->required();
    schur_dim_cmd->add_option("--n", n)->required();

    auto* vanishes_cmd = app.add_subcommand("vanishes", "rectangle vanishing test");
    vanishes_cmd->add_option("--lambda", lambda_str)->required();
    vanishes_cmd->add_option("--m", m)->required();
    vanishes_cmd->add_option("--n", n)->required();

    auto* member_cmd = app.add_subcommand("ideal-member", "kernel membership by evaluation");
    member_cmd->add_option("--lambda", lambda_str, "symmetrizer of this shape");
    member_cmd->add_option("--element", element_json, "group algebra element JSON");
    member_cmd->add_option("--element-file", element_file);
    member_cmd->add_option("--degree", degree);
    member_cmd->add_option("--m", m)->required();
    member_cmd->add_option("--n", n)->required();

    auto* jmn_cmd = app.add_subcommand("jmn", "truncated J_{m|n} killed sets");
    jmn_cmd->add_option("--m", m)->required();
    jmn_cmd->add_option("--n", n)->required();
    jmn_cmd->add_option("--max-degree", max_degree);

    auto* classify_cmd = app.add_subcommand("classify", "enumerate prime truncated sequences");
    classify_cmd->add_option("--rank", rank)->required();
    classify_cmd->add_option("--max-degree", max_degree);

    auto* commutant_cmd = app.add_subcommand("commutant", "commutant dimension three ways");
    commutant_cmd->add_option("--m", m)->required();
    commutant_cmd->add_option("--n", n)->required();
    commutant_cmd->add_option("--degree", degree)->required();

    auto* trace_cmd = app.add_subcommand("trace-poly", "trace polynomial of an element");
    trace_cmd->add_option("--degree", degree);
    trace_cmd->add_option("--element", element_json);
    trace_cmd->add_option("--element-file", element_file);
    trace_cmd->add_option("--lambda", lambda_str, "use the symmetrizer of this shape");

    auto* psquare_cmd = app.add_subcommand("p-square", "closed-form square trace polynomial");
    psquare_cmd->add_option("--m0", m0)->required();

    auto* tau_cmd = app.add_subcommand("tau", "Weyl dimension products");
    tau_cmd->add_option("--lambda", lambda_str, "tau_weyl of this shape");
    tau_cmd->add_option("--m", weyl_m)->required();
    tau_cmd->add_option("--m0", m0, "rho-product for the m0 square instead");

    auto* scan_cmd = app.add_subcommand("rectangle-scan", "rectangle criterion scan");
    scan_cmd->add_option("--max-degree", max_degree);
    scan_cmd->add_option("--space", space_specs, "spaces m|n (repeatable)");

    auto* lr_cmd = app.add_subcommand("lr", "Littlewood-Richardson coefficient");
    lr_cmd->add_option("--lambda", lambda_str)->required();
    lr_cmd->add_option("--mu", mu_str)->required();
    lr_cmd->add_option("--nu", nu_str)->required();

    auto* frac_cmd = app.add_subcommand("frac-solve", "solve f (x) l = h over the unit target");
    frac_cmd->add_option("--h-json", h_json, "morphism JSON")->required();
    frac_cmd->add_option("--f-json", f_json, "morphism JSON")->required();
    frac_cmd->add_option("--c-even", c_even);
    frac_cmd->add_option("--c-odd", c_odd);
    frac_cmd->add_option("--cp-even", cp_even);
    frac_cmd->add_option("--cp-odd", cp_odd);

    auto* selfcheck_cmd = app.add_subcommand("selfcheck", "run the invariant suite");

    // App-level flags (--seed, --format) remain usable after a subcommand.
    for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitArgument;
    }

    apply_env_overrides();
    config().rng_seed = seed;

    try {
        if (schur_dim_cmd->parsed()) {
            DimPair dims = schur_dim(Partition::parse(lambda_str), SuperSpace{m, n});
            emit(json{{"even", dims.even}, {"odd", dims.odd}});
        } else if (vanishes_cmd->parsed()) {
            bool v = schur_vanishes(Partition::parse(lambda_str), SuperSpace{m, n});
            emit(json{{"vanishes", v}});
        } else if (member_cmd->parsed()) {
            GroupAlgebraElement x = lambda_str.empty()
                                        ? load_element(element_json, element_file, degree)
                                        : young_symmetrizer(Partition::parse(lambda_str));
            emit(json{{"member", member_by_eval(x, m, n)}});
        } else if (jmn_cmd->parsed()) {
            emit(to_json(jmn_sequence(m, n, max_degree)));
        } else if (classify_cmd->parsed()) {
            json out = json::array();
            for (const ClassifiedSequence& c : enumerate_prime_sequences(rank, max_degree))
                out.push_back(json{{"label", c.label}, {"sequence", to_json(c.seq)}});
            emit(out);
        } else if (commutant_cmd->parsed()) {
            SuperSpace space{m, n};
            emit(json{{"commutant_dim", commutant_dim(space, degree)},
                      {"hook_sum", hook_dimension_sum(space, degree).get_si()},
                      {"span_dim", symmetry_span_dim(space, degree)}});
        } else if (trace_cmd->parsed()) {
            GroupAlgebraElement x = lambda_str.empty()
                                        ? load_element(element_json, element_file, degree)
                                        : young_symmetrizer(Partition::parse(lambda_str));
            emit(json(x.trace_poly().to_string()));
        } else if (psquare_cmd->parsed()) {
            emit(to_json(p_square_closed_form(m0)));
        } else if (tau_cmd->parsed()) {
            Rational value = lambda_str.empty() ? tau_rho_product(m0, weyl_m)
                                                : tau_weyl(Partition::parse(lambda_str), weyl_m);
            emit(json{{"value", rational_or_int(value)}});
        } else if (scan_cmd->parsed()) {
            std::vector<SuperSpace> spaces = parse_spaces(space_specs);
            if (spaces.empty())
                spaces = {{1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}, {2, 1}, {1, 2}, {3, 0}, {0, 3}};
            auto rows = rectangle_scan(max_degree, spaces);
            if (format == "csv") {
                std::cout << "lambda,m,n,f_nonzero,contractions_zero,is_rectangle\n";
                for (const auto& row : rows)
                    std::cout << "\"" << row.lambda.to_string() << "\"," << row.m << "," << row.n
                              << "," << (row.f_nonzero ? 1 : 0) << ","
                              << (row.contractions_zero ? 1 : 0) << ","
                              << (row.is_pinned_rectangle ? 1 : 0) << "\n";
            } else {
                json out = json::array();
                for (const auto& row : rows)
                    out.push_back(json{{"lambda", row.lambda.to_string()},
                                       {"m", row.m},
                                       {"n", row.n},
                                       {"f_nonzero", row.f_nonzero},
                                       {"contractions_zero", row.contractions_zero},
                                       {"is_rectangle", row.is_pinned_rectangle}});
                emit(out);
            }
        } else if (lr_cmd->parsed()) {
            long long value = lr_coeff(Partition::parse(lambda_str), Partition::parse(mu_str),
                                       Partition::parse(nu_str));
            emit(json{{"lr", value}});
        } else if (frac_cmd->parsed()) {
            MatMorphism h = load_morphism(h_json, "h");
            MatMorphism f = load_morphism(f_json, "f");
            FracSolveResult result =
                frac_solve(h, f, SuperSpace{c_even, c_odd}, SuperSpace{cp_even, cp_odd});
            json out;
            switch (result.status) {
                case FracStatus::ok: out["status"] = "ok"; break;
                case FracStatus::not_regular: out["status"] = "not_regular"; break;
                case FracStatus::not_in_cf: out["status"] = "not_in_cf"; break;
                case FracStatus::shape_mismatch: out["status"] = "shape_mismatch"; break;
            }
            if (result.solution) out["solution"] = to_json(*result.solution);
            emit(out);
        } else if (selfcheck_cmd->parsed()) {
            bool all_passed = true;
            for (const PropertyResult& r : run_selfcheck(seed)) {
                std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name;
                if (!r.passed && !r.detail.empty()) std::cout << " (" << r.detail << ")";
                std::cout << "\n";
                all_passed = all_passed && r.passed;
            }
            return all_passed ? kExitOk : kExitSelfcheckFailed;
        }
    } catch (const SizeBoundExceeded& e) {
        std::cerr << "size bound: " << e.what() << "\n";
        return kExitSizeBound;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitArgument;
    }
    return kExitOk;
}
