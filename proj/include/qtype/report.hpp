#pragma once

#include "qtype/catlin.hpp"
#include "qtype/contact.hpp"
#include "qtype/extended.hpp"
#include "qtype/local_algebra.hpp"
#include "qtype/slicing.hpp"
#include "qtype/types_engine.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace qtype {

using Json = nlohmann::ordered_json;

inline constexpr const char* report_schema = "qtype-report/1";

// {"kind":"finite","num":3,"den":1}, {"kind":"at_least",...}, {"kind":"infinite"}.
Json tagged(const ExtendedRational& v);
Json tagged(const Rational& v);
Json tagged_count(long v);

Json polynomials_json(const std::vector<PolyC>& polys, const std::vector<std::string>& names);
Json point_json(const std::vector<GaussianRational>& point);
Json matrix_json(const Matrix& m);
Json curve_json(const CurveGerm& curve, const std::string& parameter = "t");
Json slice_json(const LinearSlice& slice, const std::vector<std::string>& names);

Json generic_json(const GenericValueReport& r);
Json standard_basis_json(const StandardBasisResult& sb, const std::vector<std::string>& names);
Json delta1_json(const Delta1Report& r, const std::vector<std::string>& names);
Json tau_json(const TauReport& r, const std::vector<std::string>& names);
Json qpositivity_json(const QPositivityReport& r);

// Indented "key: value" rendering; tagged values print as 3, >=64, inf.
std::string render_text(const Json& report);

}  // namespace qtype
