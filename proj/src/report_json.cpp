#include "zscheme/report_json.hpp"

namespace zscheme {

namespace {

long long coeff_as_int(const Rational& c) {
    if (!c.is_integer() || !mpz_fits_slong_p(c.numerator().get_mpz_t()))
        throw Error(Errc::BadInput, "coefficient does not fit a JSON integer: " + c.str());
    return c.numerator().get_si();
}

std::size_t max_bits(const PolyQ& p) {
    std::size_t bits = 0;
    for (const auto& [m, c] : p.terms()) bits = std::max(bits, c.bit_size());
    return bits;
}

std::size_t max_bits(const UPoly& p) {
    std::size_t bits = 0;
    for (const auto& c : p.coeffs()) bits = std::max(bits, c.bit_size());
    return bits;
}

} // namespace

ordered_json upoly_coeffs_json(const UPoly& p) {
    ordered_json arr = ordered_json::array();
    for (int i = 0; i <= p.degree(); ++i) arr.push_back(coeff_as_int(p.coeff(i)));
    return arr;
}

ordered_json presentation_to_json(const PresentationReport& rep) {
    ordered_json j;
    j["ring"] = rep.ring_description;
    j["generators"] = rep.generators;
    j["hilbert_numerator"] = upoly_coeffs_json(rep.series.numerator);
    j["denominator_weights"] = rep.series.denominator_weights;
    j["euler"] = rep.euler;
    j["certificates"] = {{"regular_sequence", rep.regular_sequence_ok},
                         {"flat_degree", rep.flat_deg},
                         {"series_consistent", rep.series_consistent},
                         {"generator_degrees", rep.generator_degrees}};
    return j;
}

ordered_json present_report(const RegularModel& m) {
    const PresentationReport eq = equivariant_presentation(m);
    const PresentationReport ord = ordinary_presentation(m);
    ordered_json out;
    out["schema_version"] = 1;
    out["command"] = "present";
    out["model"] = m.provenance_str();
    out["equivariant"] = presentation_to_json(eq);
    out["ordinary"] = presentation_to_json(ord);
    ZSchemeIdeal z(m);
    std::size_t bits = 0;
    for (const auto& g : z.generators()) bits = std::max(bits, max_bits(g));
    out["max_coeff_bits"] = bits;
    return out;
}

ordered_json hessenberg_report(int rank, const HessenbergSpace& omega) {
    HessenbergIdeal h = hessenberg_ideal(rank, omega);
    const PoincareComparison pc = hessenberg_poincare(h);
    const CICertificate ci = complete_intersection_check(h);
    const DualityCertificate dual = poincare_duality_check(h);
    const ProductFormulaResult pf = product_formula(omega);

    ordered_json out;
    out["schema_version"] = 1;
    out["command"] = "hessenberg";
    out["rank"] = rank;
    out["omega"] = omega.str();
    out["poincare_t"] = upoly_coeffs_json(pc.poincare_t);
    out["product_formula_q"] = upoly_coeffs_json(pf.value_q);
    out["poincare_matches_product"] = pc.match;
    out["euler"] = pc.euler;
    out["fixed_points"] = pc.fixed_points;
    out["complete_intersection"] = {{"pass", ci.pass}, {"degrees", ci.degrees}};
    out["poincare_duality"] = {{"pass", dual.pass}, {"socle_degree", dual.socle_degree}};
    out["saturation_was_needed"] = h.saturation_was_needed;
    return out;
}

ordered_json integrate_report(const ZSchemeIdeal& z, const PolyQ& f,
                              const std::string& class_label,
                              const std::vector<Rational>& check_at) {
    const IntegralResult res = equivariant_integral(z, f);
    ordered_json checks;
    for (const auto& v0 : check_at) {
        const Rational direct = fiber_sum_oracle(z, f, v0);
        const Rational via_poly = res.value.eval(v0);
        if (direct != via_poly)
            throw Error(Errc::OracleMismatch,
                        "fiber sum " + direct.str() + " != polynomial value " + via_poly.str() +
                            " at v = " + v0.str());
        checks["v0=" + v0.str()] = "ok (" + direct.str() + ")";
    }
    ordered_json out;
    out["schema_version"] = 1;
    out["command"] = "integrate";
    out["model"] = z.model().provenance_str();
    out["class"] = class_label;
    out["polynomial"] = res.value.str("v");
    out["checks"] = checks;
    out["max_coeff_bits"] = max_bits(res.value);
    return out;
}

ordered_json verify_report(const std::string& suite, const std::vector<VerifyItem>& items,
                           bool timing) {
    ordered_json out;
    out["schema_version"] = 1;
    out["command"] = "verify";
    out["suite"] = suite;
    ordered_json arr = ordered_json::array();
    for (const auto& it : items) {
        ordered_json j{{"criterion", it.criterion},
                       {"suite", it.suite},
                       {"name", it.name},
                       {"pass", it.pass},
                       {"detail", it.detail}};
        if (timing) j["ms"] = it.ms;
        arr.push_back(std::move(j));
    }
    out["items"] = std::move(arr);
    out["pass"] = all_passed(items);
    return out;
}

} // namespace zscheme
