// Command-line surface: present | hessenberg | integrate | verify.
// Exit codes: 0 ok, 2 input/validation failure, 3 internal invariant failure.
// JSON is the structured output; the human-readable text is a derived view.

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "zscheme/parser.hpp"
#include "zscheme/report_json.hpp"

using json = nlohmann::ordered_json;
using namespace zscheme;

namespace {

struct GlobalFlags {
    bool json_out = false;
    bool timing = false;
    double timeout = 0;
};

RegularModel model_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::BadInput, "cannot open model file " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw Error(Errc::BadInput, std::string("model file is not valid JSON: ") + e.what());
    }
    if (!j.contains("coordinates") || !j.contains("weights") || !j.contains("V"))
        throw Error(Errc::BadInput, "model file needs coordinates, weights and V");
    std::vector<std::string> vars = j["coordinates"].get<std::vector<std::string>>();
    std::vector<int> weights = j["weights"].get<std::vector<int>>();
    RingPtr ring = WeightedRing::make(vars, weights);
    std::vector<PolyQ> v_images;
    for (const auto& name : vars) {
        if (!j["V"].contains(name))
            throw Error(Errc::BadInput, "model file is missing V(" + name + ")");
        v_images.push_back(parse_polynomial(j["V"][name].get<std::string>(), ring));
    }
    return custom_model(ring, std::move(v_images));
}

RegularModel model_from_selector(const std::string& sel) {
    if (sel.rfind("pn:", 0) == 0) return projective_space_model(std::stoi(sel.substr(3)));
    if (sel.rfind("flag:", 0) == 0) return flag_model_a(std::stoi(sel.substr(5)));
    if (sel.rfind("file:", 0) == 0) return model_from_file(sel.substr(5));
    throw Error(Errc::BadInput, "model selector must be pn:N, flag:L or file:PATH");
}

void emit(json& out, const GlobalFlags& flags, std::chrono::steady_clock::time_point start) {
    if (flags.timing)
        out["timing_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
    if (flags.json_out) std::cout << out.dump(2) << "\n";
}

void print_presentation_human(const json& p, const std::string& kind) {
    std::cout << kind << " presentation\n";
    std::cout << "  ring: " << p["ring"].get<std::string>() << "\n";
    std::cout << "  generators:\n";
    for (const auto& g : p["generators"]) std::cout << "    " << g.get<std::string>() << "\n";
    std::cout << "  hilbert numerator coefficients: " << p["hilbert_numerator"].dump()
              << " over weights " << p["denominator_weights"].dump() << "\n";
    std::cout << "  euler characteristic: " << p["euler"] << "\n";
    const auto& c = p["certificates"];
    std::cout << "  certificates: regular sequence "
              << (c["regular_sequence"].get<bool>() ? "ok" : "FAILED") << ", flat degree "
              << c["flat_degree"] << ", F(t)(1-t^2)=P(t) "
              << (c["series_consistent"].get<bool>() ? "ok" : "FAILED") << "\n";
}

int cmd_present(const std::string& selector, const GlobalFlags& flags) {
    const auto start = std::chrono::steady_clock::now();
    RegularModel m = model_from_selector(selector);
    json out = present_report(m);
    if (!flags.json_out) {
        std::cout << "model: " << out["model"].get<std::string>() << "\n";
        print_presentation_human(out["equivariant"], "equivariant");
        print_presentation_human(out["ordinary"], "ordinary");
    }
    emit(out, flags, start);
    return 0;
}

int cmd_hessenberg(int rank, const std::string& omega_spec, bool omega_from_condition,
                   const GlobalFlags& flags) {
    const auto start = std::chrono::steady_clock::now();
    HessenbergSpace omega;
    if (omega_spec == "peterson")
        omega = omega_from_condition ? omega_from_height_condition(rank) : peterson_omega(rank);
    else if (omega_spec == "full")
        omega = make_hessenberg_space(rank, build_type_a(rank).negative_roots());
    else
        omega = parse_omega(omega_spec, rank);

    const HessenbergValidation val = validate_hessenberg(omega);
    if (!val.ok) {
        const ProductFormulaResult pf = product_formula(omega);
        json out;
        out["schema_version"] = 1;
        out["command"] = "hessenberg";
        out["rank"] = rank;
        out["omega"] = omega.str();
        out["valid"] = false;
        out["first_violation"] = val.alpha->str() + " + a" + std::to_string(val.simple_index) +
                                 " misses " + val.missing->str();
        out["product_formula"] = pf.is_polynomial ? pf.value_q.str("q") : pf.ratio;
        out["product_formula_polynomial"] = pf.is_polynomial;
        if (!flags.json_out) {
            std::cerr << "INVALID_HESSENBERG: " << out["first_violation"].get<std::string>()
                      << "\n"
                      << "forced product formula: " << out["product_formula"].get<std::string>()
                      << (pf.is_polynomial ? "" : "  [NOT_POLYNOMIAL]") << "\n";
        }
        emit(out, flags, start);
        return 2;
    }

    json out = hessenberg_report(rank, omega);
    if (!flags.json_out) {
        std::cout << "Hessenberg space Omega = " << out["omega"].get<std::string>() << " over A"
                  << rank << "\n";
        std::cout << "  poincare coefficients (t): " << out["poincare_t"].dump() << "\n";
        std::cout << "  product formula coefficients (q): " << out["product_formula_q"].dump()
                  << "  [" << (out["poincare_matches_product"].get<bool>() ? "match" : "MISMATCH")
                  << "]\n";
        std::cout << "  fixed points: " << out["fixed_points"] << " (euler " << out["euler"]
                  << ")\n";
        std::cout << "  complete intersection: "
                  << (out["complete_intersection"]["pass"].get<bool>() ? "pass" : "FAIL")
                  << ", degrees " << out["complete_intersection"]["degrees"].dump() << "\n";
        std::cout << "  Poincare duality: "
                  << (out["poincare_duality"]["pass"].get<bool>() ? "pass" : "FAIL")
                  << ", socle degree " << out["poincare_duality"]["socle_degree"] << "\n";
    }
    emit(out, flags, start);
    return 0;
}

int cmd_integrate(const std::string& selector, std::string class_expr, bool use_jacobian,
                  const std::string& check_at, const GlobalFlags& flags) {
    const auto start = std::chrono::steady_clock::now();
    ZSchemeIdeal z(model_from_selector(selector));
    PolyQ f = PolyQ::zero(z.xv_ring());
    if (use_jacobian) {
        f = jacobian_class(z);
        class_expr = "<jacobian>";
    } else {
        if (class_expr.empty()) throw Error(Errc::BadInput, "no class expression given");
        f = parse_polynomial(class_expr, z.xv_ring());
    }
    std::vector<Rational> sample;
    std::size_t pos = 0;
    while (pos <= check_at.size() && !check_at.empty()) {
        std::size_t comma = check_at.find(',', pos);
        if (comma == std::string::npos) comma = check_at.size();
        if (comma > pos) sample.push_back(Rational::parse(check_at.substr(pos, comma - pos)));
        pos = comma + 1;
        if (comma == check_at.size()) break;
    }
    json out = integrate_report(z, f, class_expr, sample);
    if (!flags.json_out) {
        std::cout << "integral of " << class_expr << " over "
                  << out["model"].get<std::string>() << " = "
                  << out["polynomial"].get<std::string>() << "\n";
        for (auto& [k, v] : out["checks"].items())
            std::cout << "  oracle " << k << ": " << v.get<std::string>() << "\n";
    }
    emit(out, flags, start);
    return 0;
}

int cmd_verify(const std::string& suite, long perturb_scale, const GlobalFlags& flags) {
    const auto start = std::chrono::steady_clock::now();
    VerifyOptions opts;
    opts.perturb_scale = Rational(perturb_scale);
    opts.timeout_seconds = flags.timeout;
    const std::vector<VerifyItem> items = run_verify(suite, opts);
    json out = verify_report(suite, items, flags.timing);
    if (!flags.json_out) {
        for (const auto& it : items)
            std::cout << (it.pass ? "PASS" : "FAIL") << "  [criterion " << it.criterion << "] "
                      << it.name << (it.detail.empty() ? "" : "  -- " + it.detail) << "\n";
        std::cout << (all_passed(items) ? "all items passed" : "SOME ITEMS FAILED") << "\n";
    }
    emit(out, flags, start);
    return all_passed(items) ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact equivariant cohomology of regular B-varieties via the fundamental curve"};
    app.require_subcommand(1);
    GlobalFlags flags;
    app.add_flag("--json", flags.json_out, "emit the structured JSON report");
    app.add_flag("--timing", flags.timing, "include timing fields in reports");
    app.add_option("--timeout", flags.timeout, "cooperative timeout in seconds (verify)");

    std::string selector, omega_spec, class_expr, suite, check_at = "1,2";
    int rank = 2;
    bool use_jacobian = false, omega_from_condition = false;
    long perturb_scale = 1;

    auto* present = app.add_subcommand("present", "equivariant + ordinary presentations");
    present->fallthrough();
    present->add_option("selector", selector, "pn:N | flag:L | file:PATH")->required();

    auto* hess = app.add_subcommand("hessenberg", "Hessenberg/Peterson analysis");
    hess->fallthrough();
    hess->add_option("rank", rank, "rank of the type-A root system")->required();
    hess->add_option("omega", omega_spec, "peterson | full | root list like -a1,-a2")->required();
    hess->add_flag("--omega-from-condition", omega_from_condition,
                   "resolve 'peterson' by the printed height condition (experimental)");

    auto* integ = app.add_subcommand("integrate", "equivariant push-forward of a class");
    integ->fallthrough();
    integ->add_option("selector", selector, "pn:N | flag:L | file:PATH")->required();
    integ->add_option("class", class_expr, "polynomial in the chart variables and v");
    integ->add_flag("--class-jacobian", use_jacobian, "integrate the Jacobian class J");
    integ->add_option("--check-at", check_at, "comma-separated v0 list for the fiber oracle");

    auto* verify = app.add_subcommand("verify", "run an acceptance suite");
    verify->fallthrough();
    verify->add_option("suite", suite, "pn | flag | hessenberg | pushforward | all")->required();
    verify->add_option("--perturb-generator-scale", perturb_scale,
                       "scale the first canonical generator (guard demonstration)");

    try {
        app.parse(argc, argv);
        if (present->parsed()) return cmd_present(selector, flags);
        if (hess->parsed()) return cmd_hessenberg(rank, omega_spec, omega_from_condition, flags);
        if (integ->parsed())
            return cmd_integrate(selector, class_expr, use_jacobian, check_at, flags);
        if (verify->parsed()) return cmd_verify(suite, perturb_scale, flags);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        json err{{"error", errc_name(e.code())},
                 {"message", e.what()},
                 {"position", e.position()}};
        std::cerr << err.dump() << "\n";
        return errc_exit_code(e.code());
    } catch (const std::exception& e) {
        std::cerr << R"({"error": "INTERNAL", "message": ")" << e.what() << "\"}\n";
        return 3;
    }
    return 0;
}
