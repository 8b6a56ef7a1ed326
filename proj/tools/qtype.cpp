#include "qtype/catlin.hpp"
#include "qtype/errors.hpp"
#include "qtype/parse.hpp"
#include "qtype/report.hpp"
#include "qtype/types_engine.hpp"
#include "qtype/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace qtype;

namespace {

enum Exit { ok = 0, failure = 1, parse_failure = 2, sampling_failure = 3, law_violation = 4 };

struct Session {
    std::uint64_t seed = 1;
    int samples = 100;
    int truncation = default_truncation;
    int budget = 8;
    long range = 10000;
    int q = 2;
    unsigned threads = 0;
    std::string format = "json";

    SliceSampler sampler() const
    {
        SliceSampler s;
        s.seed = seed;
        s.samples = samples;
        s.range = range;
        s.q = q;
        s.threads = threads;
        return s;
    }

    Json echo() const
    {
        return Json{{"seed", seed},       {"samples", samples}, {"truncation", truncation},
                    {"budget", budget},   {"range", range},     {"q", q},
                    {"format", format}};
    }
};

std::string read_input(const std::string& path, const std::string& inline_text)
{
    if (!inline_text.empty())
        return inline_text;
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::invalid_argument, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json document_json(const SourceDocument& doc)
{
    Json j;
    j["kind"] = std::string(kind_name(doc.kind));
    j["variables"] = doc.variables;
    switch (doc.kind) {
    case SourceDocument::Kind::ideal:
        j["generators"] = polynomials_json(doc.expressions, doc.variables);
        break;
    case SourceDocument::Kind::curve:
        j["parameter"] = doc.parameter;
        j["components"] = polynomials_json(doc.expressions, {doc.parameter});
        break;
    case SourceDocument::Kind::hypersurface:
        j["h"] = doc.h ? doc.h->to_string(doc.variables) : "0";
        j["f"] = polynomials_json(doc.f, doc.variables);
        j["g"] = polynomials_json(doc.g, doc.variables);
        break;
    }
    if (!doc.base_point.empty())
        j["base_point"] = point_json(doc.base_point);
    return j;
}

// "0,0,1; 1,0,0" -> columns of U.
Matrix parse_directrix(const std::string& text, int n)
{
    std::vector<std::vector<GaussianRational>> cols;
    std::stringstream all(text);
    std::string col;
    while (std::getline(all, col, ';')) {
        std::vector<GaussianRational> v;
        std::stringstream entries(col);
        std::string e;
        while (std::getline(entries, e, ','))
            v.push_back(parse_polynomial(e, {""}).constant_term());
        if (static_cast<int>(v.size()) != n)
            throw Error(ErrorCode::arity_mismatch, "directrix column needs " + std::to_string(n) + " entries");
        cols.push_back(std::move(v));
    }
    if (cols.empty())
        throw Error(ErrorCode::invalid_argument, "empty directrix");
    return Matrix::from_columns(cols);
}

LinearSlice parse_slice(const std::vector<std::string>& forms, const std::vector<std::string>& names)
{
    std::vector<PolyC> polys;
    for (const auto& f : forms) {
        PolyC p = parse_polynomial(f, names);
        if (!p.is_zero() && !p.is_homogeneous_linear())
            throw Error(ErrorCode::invalid_argument, "slice form " + f + " is not a linear form");
        polys.push_back(std::move(p));
    }
    return LinearSlice::from_forms(polys);
}

Json cylinder_json(const CylinderVariety& c, const std::vector<std::string>& names)
{
    Json j;
    j["curve"] = curve_json(c.curve());
    j["directrix"] = matrix_json(c.directrix().transpose());
    // psi(t, u) = Gamma(t) + U u, written with parameters u1..u_{q-1}.
    Json psi = Json::array();
    const auto& base = c.curve().base_point();
    for (int r = 0; r < c.nvars(); ++r) {
        std::vector<std::string> pnames{"t"};
        for (int k = 1; k < c.q(); ++k)
            pnames.push_back("u" + std::to_string(k));
        PolyC p(c.q());
        const auto& s = c.curve().components()[static_cast<std::size_t>(r)];
        for (int d = 0; d <= s.degree(); ++d) {
            Exponent e(static_cast<std::size_t>(c.q()), 0);
            e[0] = d;
            p.add_term(e, s.coefficient(d));
        }
        if (!base.empty())
            p.add_term(Exponent(static_cast<std::size_t>(c.q()), 0), base[static_cast<std::size_t>(r)]);
        for (int k = 0; k < c.q() - 1; ++k) {
            Exponent e(static_cast<std::size_t>(c.q()), 0);
            e[static_cast<std::size_t>(k + 1)] = 1;
            p.add_term(e, c.directrix()(r, k));
        }
        psi.push_back(names[static_cast<std::size_t>(r)] + " = " + p.to_string(pnames));
    }
    j["parametrization"] = psi;
    CylinderCheck check = check_cylinder(c);
    j["postconditions"] = Json{{"reproduces_curve", check.reproduces_curve},
                               {"tangent_space_contains_directrix", check.tangent_space_contains_directrix},
                               {"tangent_space_dimension", check.tangent_space_dimension}};
    return j;
}

struct Inputs {
    std::string path;
    std::string text;
    std::string curve_path;
    std::string ideal_path;
    std::string directrix;
    std::vector<std::string> forms;
    std::string corpus = "monomial-small";
    int cylinder_pairs = 20;
};

Json run(const std::string& command, const Session& cfg, const Inputs& in, int& exit_code)
{
    Json out;
    out["schema"] = report_schema;
    out["command"] = command;
    out["config"] = cfg.echo();
    SliceSampler sampler = cfg.sampler();

    if (command == "verify") {
        VerifyOptions opts;
        opts.sampler = sampler;
        opts.budget = cfg.budget;
        opts.cylinder_pairs = in.cylinder_pairs;
        auto results = verify_corpus(corpus(in.corpus), opts);
        auto cyl = verify_random_cylinders(opts);
        results.insert(results.end(), cyl.begin(), cyl.end());
        Json laws = Json::array();
        int passed = 0;
        int failed = 0;
        int skipped = 0;
        for (const auto& r : results) {
            laws.push_back(Json{{"law", r.law}, {"instance", r.instance}, {"status", status_name(r.status)},
                                {"detail", r.detail}});
            (r.status == LawStatus::pass ? passed : r.status == LawStatus::fail ? failed : skipped)++;
        }
        out["corpus"] = in.corpus;
        out["result"] = Json{{"passed", passed}, {"failed", failed}, {"skipped", skipped}, {"laws", laws}};
        if (failed > 0)
            exit_code = law_violation;
        return out;
    }

    const SourceDocument doc = parse_document(read_input(in.path, in.text));
    out["input"] = document_json(doc);
    const auto& names = doc.variables;
    Json result;

    if (command == "mult") {
        auto ideal = doc.ideal();
        auto sb = standard_basis(ideal);
        result["invariant"] = "multiplicity";
        result["value"] = tagged(sb.colength());
        result["standard_basis"] = standard_basis_json(sb, names);
    } else if (command == "delta1") {
        if (doc.kind == SourceDocument::Kind::hypersurface) {
            Delta1Options opts;
            opts.budget = cfg.budget;
            auto w = hypersurface_curve_search(doc.hypersurface(), opts);
            result["invariant"] = "delta1-lower";
            result["value"] = tagged(w.value);
            if (w.witness)
                result["witness"] = curve_json(*w.witness);
        } else {
            Delta1Report rep = delta1_bounds(doc.ideal(), cfg.budget);
            result["invariant"] = "delta1";
            result["value"] = tagged(rep.lower);
            result["bounds"] = delta1_json(rep, names);
        }
    } else if (command == "deltaq" || command == "tdeltaq") {
        auto rep = command == "deltaq" ? deltaq_sampled_inf(doc.ideal(), cfg.q, sampler, cfg.budget)
                                       : tilde_deltaq(doc.ideal(), cfg.q, sampler, cfg.budget);
        result["invariant"] = command == "deltaq" ? "deltaq-sampled-inf" : "tilde-deltaq";
        result["value"] = tagged(rep.estimate);
        result["statistics"] = generic_json(rep);
    } else if (command == "catlinq") {
        GenericValueReport rep = doc.kind == SourceDocument::Kind::hypersurface
                                     ? catlin_q_hypersurface(doc.hypersurface(), cfg.q, sampler, {cfg.budget})
                                     : catlin_q_estimate(doc.ideal(), cfg.q, sampler, {cfg.budget});
        result["invariant"] = "catlin-q-lower";
        result["value"] = tagged(rep.estimate);
        result["statistics"] = generic_json(rep);
    } else if (command == "cylinder" || command == "slice") {
        CurveGerm gamma = doc.curve(cfg.truncation);
        Matrix u = parse_directrix(in.directrix, doc.nvars());
        CylinderVariety cyl = build_cylinder(gamma, u, u.cols() + 1);
        result["cylinder"] = cylinder_json(cyl, names);
        if (command == "slice") {
            std::optional<IdealPresentation> ideal;
            if (!in.ideal_path.empty())
                ideal = parse_document(read_input(in.ideal_path, "")).ideal();
            if (!in.forms.empty()) {
                LinearSlice slice = parse_slice(in.forms, names);
                IntersectionCurve ic = slice_cylinder(cyl, slice);
                Json params = Json::array();
                for (const auto& p : ic.parameters)
                    params.push_back(p.to_string());
                result["slice"] = slice_json(slice, names);
                result["delta"] = curve_json(ic.delta);
                result["parameters"] = params;
                if (ideal)
                    result["tau"] = tau_json(tau_slice(*ideal, cyl, slice), names);
            } else if (ideal) {
                auto rep = tau_generic(*ideal, cyl, sampler);
                result["invariant"] = "tau-generic";
                result["value"] = tagged(rep.estimate);
                result["statistics"] = generic_json(rep);
            } else {
                throw Error(ErrorCode::invalid_argument, "slice needs --form or --ideal");
            }
        }
    } else if (command == "qpos") {
        HypersurfaceGerm hyp = doc.hypersurface();
        SourceDocument cdoc = parse_document(read_input(in.curve_path, ""));
        CurveGerm phi = cdoc.curve(cfg.truncation);
        LinearSlice slice = [&] {
            if (!in.forms.empty())
                return parse_slice(in.forms, names);
            auto [s, rejected] = sampler.draw_slice(doc.nvars(), 0);
            if (!s)
                throw Error(ErrorCode::degenerate_sampling, "no non-degenerate slice drawn");
            return *s;
        }();
        result["slice"] = slice_json(slice, names);
        result["curve"] = curve_json(phi);
        result["q_positivity"] = qpositivity_json(q_positivity(phi, hyp, slice));
    } else {
        throw Error(ErrorCode::invalid_argument, "unknown command " + command);
    }
    out["result"] = result;
    return out;
}

void emit(const Json& report, const std::string& format)
{
    if (format == "text")
        std::cout << render_text(report);
    else
        std::cout << report.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computation of contact orders, multiplicities and q-types of ideals and hypersurfaces"};
    app.require_subcommand(1);
    Session cfg;
    Inputs in;

    auto common = [&](CLI::App* sub, bool needs_input) {
        sub->add_option("--seed", cfg.seed, "sampling seed");
        sub->add_option("--samples", cfg.samples, "sampled slices")->check(CLI::PositiveNumber);
        sub->add_option("--truncation", cfg.truncation, "series truncation for curves")->check(CLI::PositiveNumber);
        sub->add_option("--budget", cfg.budget, "curve search exponent budget")->check(CLI::PositiveNumber);
        sub->add_option("--range", cfg.range, "coefficient range R for sampled forms")->check(CLI::NonNegativeNumber);
        sub->add_option("--q", cfg.q, "q")->check(CLI::Range(2, 64));
        sub->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));
        if (needs_input) {
            sub->add_option("input", in.path, "input document (default: stdin)");
            sub->add_option("-e,--expr", in.text, "inline input document");
        }
    };

    const std::vector<std::pair<std::string, std::string>> commands{
        {"mult", "multiplicity dim O/I with its standard basis"},
        {"delta1", "bounds and witness curve for the 1-type"},
        {"deltaq", "sampled infimum of the q-type over slices"},
        {"tdeltaq", "generic value of the q-type over slices"},
        {"catlinq", "cylinder lower estimate of the Catlin q-type"},
        {"cylinder", "cylinder over a curve with a given directrix"},
        {"slice", "intersection of a cylinder with linear forms, and tau"},
        {"qpos", "q-positivity of a hypersurface along a curve"},
        {"verify", "run the inequality and equality laws over a corpus"},
    };
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        common(sub, name != "verify");
        if (name == "cylinder" || name == "slice")
            sub->add_option("--directrix", in.directrix, "columns of U, e.g. \"0,0,1\" or \"0,0,1;0,1,0\"")
                ->required();
        if (name == "slice" || name == "qpos")
            sub->add_option("--form", in.forms, "slice linear form (repeatable)");
        if (name == "slice")
            sub->add_option("--ideal", in.ideal_path, "ideal document for tau");
        if (name == "qpos")
            sub->add_option("--curve", in.curve_path, "curve document")->required();
        if (name == "verify") {
            sub->add_option("--corpus", in.corpus, "corpus name")->check(CLI::IsMember(corpus_names()));
            sub->add_option("--cylinders", in.cylinder_pairs, "random cylinder trials");
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    const std::string command = app.get_subcommands().front()->get_name();

    int exit_code = ok;
    try {
        Json report = run(command, cfg, in, exit_code);
        emit(report, cfg.format);
        return exit_code;
    } catch (const Error& e) {
        Json err{{"schema", report_schema},
                 {"command", command},
                 {"error", Json{{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}}}};
        if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
            err["error"]["line"] = pe->line();
            err["error"]["column"] = pe->column();
        }
        if (cfg.format == "text")
            std::cerr << render_text(err);
        else
            std::cout << err.dump(2) << "\n";
        if (e.code() == ErrorCode::parse_error)
            return parse_failure;
        if (e.code() == ErrorCode::degenerate_sampling)
            return sampling_failure;
        return failure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return failure;
    }
}
