// JSON/DOT/OFF serialization for the CLI.  All JSON carries a
// "schema": "coxcat/1" field and uses one-line forms (comma-separated,
// negatives as "-k") as the canonical element encoding.  Output is
// deterministic for a fixed input.
#pragma once

#include "coxcat/verify.hpp"

#include "json.hpp"

namespace coxcat {

using Json = nlohmann::ordered_json;

Json root_system_json(const RootSystem& rs);
Json weyl_json(const WeylGroup& w);
Json coxeter_elements_json(const WeylGroup& w);
Json nc_json(const VerifyContext& ctx);
Json interval_json(const WeylGroup& w, const LabeledPoset& poset);
std::string hasse_dot(const WeylGroup& w, const LabeledPoset& poset);

Json sortable_json(const VerifyContext& ctx, int element);

Json complex_json(const VerifyContext& ctx, const MomentComplex& mc);
std::string complex_dot(const VerifyContext& ctx, const MomentComplex& mc);
// 2-faces of the complex as polygons; requires rank <= 3
std::string complex_off(const VerifyContext& ctx, const MomentComplex& mc);

Json poly_json(const IntPoly& p);  // [[coeff, [e1..en]], ...] plus a rendering
Json betti_json(const VerifyContext& ctx);
Json schubert_json(const VerifyContext& ctx);
Json duality_json(const VerifyContext& ctx);

Json suite_json(const SuiteReport& rep);
Json suites_json(const std::vector<SuiteReport>& reps);
Json plucker_report_json(const PluckerReport& rep);

std::string pattern_show(const VerifyContext& ctx, int u);

}  // namespace coxcat
