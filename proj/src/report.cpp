#include "qtype/report.hpp"

#include <sstream>

namespace qtype {

namespace {

Json integer_json(const Integer& z)
{
    if (z.fits_slong_p())
        return z.get_si();
    return z.get_str();
}

bool is_tagged(const Json& j)
{
    return j.is_object() && j.contains("kind") && j.size() <= 3 &&
           (j.size() == 1 || (j.contains("num") && j.contains("den")));
}

std::string tagged_text(const Json& j)
{
    const std::string kind = j["kind"];
    if (kind == "infinite")
        return "inf";
    std::string num = j["num"].is_string() ? j["num"].get<std::string>() : j["num"].dump();
    std::string den = j["den"].is_string() ? j["den"].get<std::string>() : j["den"].dump();
    std::string v = den == "1" ? num : num + "/" + den;
    return kind == "at_least" ? ">=" + v : v;
}

void render(std::ostringstream& out, const Json& j, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    for (auto it = j.begin(); it != j.end(); ++it) {
        const Json& v = it.value();
        const std::string key = j.is_array() ? "-" : it.key() + ":";
        if (is_tagged(v)) {
            out << pad << key << " " << tagged_text(v) << "\n";
        } else if (v.is_object() || (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array()) &&
                                      !is_tagged(v.front()))) {
            out << pad << key << "\n";
            render(out, v, indent + 1);
        } else if (v.is_array()) {
            out << pad << key << " [";
            for (std::size_t k = 0; k < v.size(); ++k) {
                if (k > 0)
                    out << ", ";
                out << (is_tagged(v[k]) ? tagged_text(v[k]) : v[k].is_string() ? v[k].get<std::string>() : v[k].dump());
            }
            out << "]\n";
        } else if (v.is_string()) {
            out << pad << key << " " << v.get<std::string>() << "\n";
        } else {
            out << pad << key << " " << v.dump() << "\n";
        }
    }
}

}  // namespace

Json tagged(const ExtendedRational& v)
{
    Json j;
    j["kind"] = v.kind_name();
    if (!v.is_infinite()) {
        j["num"] = integer_json(v.value().get_num());
        j["den"] = integer_json(v.value().get_den());
    }
    return j;
}

Json tagged(const Rational& v) { return tagged(ExtendedRational::finite(v)); }

Json tagged_count(long v) { return tagged(ExtendedRational::finite(Rational(v))); }

Json polynomials_json(const std::vector<PolyC>& polys, const std::vector<std::string>& names)
{
    Json a = Json::array();
    for (const auto& p : polys)
        a.push_back(p.to_string(names));
    return a;
}

Json point_json(const std::vector<GaussianRational>& point)
{
    Json a = Json::array();
    for (const auto& c : point)
        a.push_back(c.to_string());
    return a;
}

Json matrix_json(const Matrix& m)
{
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r)
        rows.push_back(point_json(m.row(r)));
    return rows;
}

Json curve_json(const CurveGerm& curve, const std::string& parameter)
{
    Json j;
    Json comps = Json::array();
    const auto& base = curve.base_point();
    for (std::size_t k = 0; k < curve.components().size(); ++k) {
        UniSeries s = curve.components()[k];
        if (!base.empty())
            s += UniSeries::constant(base[k], s.truncation());
        comps.push_back(s.to_string(parameter));
    }
    j["components"] = comps;
    j["order"] = tagged(curve_order(curve));
    return j;
}

Json slice_json(const LinearSlice& slice, const std::vector<std::string>& names)
{
    return polynomials_json(slice.forms(), names);
}

Json generic_json(const GenericValueReport& r)
{
    Json j;
    j["estimator"] = r.estimator;
    j["estimate"] = tagged(r.estimate);
    j["modal_value"] = tagged(r.modal_value);
    j["min_value"] = tagged(r.min_value);
    j["max_value"] = tagged(r.max_value);
    j["frequency"] = tagged(r.frequency);
    j["samples_used"] = r.samples_used;
    j["rejected"] = r.rejected;
    j["uncertified"] = r.uncertified;
    j["exact"] = r.exact;
    j["low_confidence"] = r.low_confidence;
    Json h = Json::array();
    for (const auto& [value, count] : r.histogram)
        h.push_back(Json{{"value", tagged(value)}, {"count", count}});
    j["histogram"] = h;
    j["seed"] = r.seed;
    return j;
}

Json standard_basis_json(const StandardBasisResult& sb, const std::vector<std::string>& names)
{
    Json j;
    j["order"] = sb.order_spec;
    j["basis"] = polynomials_json(sb.basis, names);
    Json lead = Json::array();
    for (const auto& e : sb.leading_exponents)
        lead.push_back(e);
    j["leading_exponents"] = lead;
    j["zero_dimensional"] = sb.is_zero_dimensional();
    return j;
}

Json delta1_json(const Delta1Report& r, const std::vector<std::string>& names)
{
    Json j;
    j["lower"] = tagged(r.lower);
    j["upper"] = tagged(r.upper);
    j["exact"] = r.exact;
    j["upper_certificate"] = provenance_name(r.provenance);
    if (!r.certificate_forms.empty()) {
        Json cert = Json::array();
        for (std::size_t k = 0; k < r.certificate_forms.size(); ++k)
            cert.push_back(Json{{"form", r.certificate_forms[k].to_string(names)},
                                {"power", tagged_count(r.certificate_powers[k])}});
        j["pure_powers"] = cert;
    }
    if (r.witness)
        j["witness"] = curve_json(*r.witness);
    j["multiplicity"] = tagged(r.multiplicity);
    j["linear_forms"] = r.linear_forms;
    if (auto root = r.root_lower_bound())
        j["root_lower_bound"] = tagged_count(*root);
    j["chain_holds"] = r.chain_holds();
    return j;
}

Json tau_json(const TauReport& r, const std::vector<std::string>& names)
{
    Json j;
    Json per = Json::array();
    for (const auto& [g, v] : r.per_generator)
        per.push_back(Json{{"generator", g.to_string(names)}, {"tau", tagged(v)}});
    j["per_generator"] = per;
    j["tau_ideal"] = tagged(r.tau_ideal);
    j["slice"] = slice_json(r.slice, names);
    return j;
}

Json qpositivity_json(const QPositivityReport& r)
{
    Json j;
    j["applicable"] = r.applicable;
    if (r.applicable)
        j["order"] = tagged(r.order);
    if (r.half_order)
        j["half_order"] = tagged_count(*r.half_order);
    j["condition_i"] = r.condition_i;
    j["condition_ii"] = r.condition_ii;
    j["indeterminate"] = r.indeterminate;
    j["verdict"] = r.verdict;
    return j;
}

std::string render_text(const Json& report)
{
    std::ostringstream out;
    render(out, report, 0);
    return out.str();
}

}  // namespace qtype
