#pragma once

#include <json.hpp>

#include "zscheme/cohomology.hpp"
#include "zscheme/hessenberg.hpp"
#include "zscheme/pushforward.hpp"
#include "zscheme/verify.hpp"

namespace zscheme {

using ordered_json = nlohmann::ordered_json;

ordered_json upoly_coeffs_json(const UPoly& p);
ordered_json presentation_to_json(const PresentationReport& rep);

/// The `present` report: equivariant + ordinary presentations with
/// certificates. Schema-versioned; deterministic for fixed inputs.
ordered_json present_report(const RegularModel& m);

/// The `hessenberg` report; throws INVALID_HESSENBERG for non-closed Omega.
ordered_json hessenberg_report(int rank, const HessenbergSpace& omega);

/// The `integrate` report; cross-checks the fiber-sum oracle at each v0 and
/// throws ORACLE_MISMATCH on disagreement.
ordered_json integrate_report(const ZSchemeIdeal& z, const PolyQ& f,
                              const std::string& class_label,
                              const std::vector<Rational>& check_at);

ordered_json verify_report(const std::string& suite, const std::vector<VerifyItem>& items,
                           bool timing);

} // namespace zscheme
