#include "qtype/verify.hpp"

#include "qtype/catlin.hpp"
#include "qtype/errors.hpp"
#include "qtype/parse.hpp"
#include "qtype/types_engine.hpp"

#include <algorithm>
#include <random>

namespace qtype {

namespace {

struct Instance {
    const char* name;
    const char* text;
};

const std::vector<Instance>& monomial_small()
{
    static const std::vector<Instance> s{
        {"linear-3", "vars z1 z2 z3; z1; z2; z3"},
        {"squares-3", "vars z1 z2 z3; z1^2; z2^2; z3^2"},
        {"cubes-23", "vars z1 z2 z3; z2^3; z3^3"},
        {"plane-2-3", "vars z1 z2; z1^2; z2^3"},
        {"plane-square", "vars z1 z2; z1^2; z1*z2; z2^2"},
    };
    return s;
}

const std::vector<Instance>& monomial_suite()
{
    static const std::vector<Instance> s{
        {"linear-3", "vars z1 z2 z3; z1; z2; z3"},
        {"squares-3", "vars z1 z2 z3; z1^2; z2^2; z3^2"},
        {"cubes-23", "vars z1 z2 z3; z2^3; z3^3"},
        {"diag-123", "vars z1 z2 z3; z1; z2^2; z3^3"},
        {"diag-234", "vars z1 z2 z3; z1^2; z2^3; z3^4"},
        {"diag-432", "vars z1 z2 z3; z1^4; z2^3; z3^2"},
        {"diag-223", "vars z1 z2 z3; z1^2; z2^2; z3^3"},
        {"diag-335", "vars z1 z2 z3; z1^3; z2^3; z3^5"},
        {"diag-125", "vars z1 z2 z3; z1; z2^2; z3^5"},
        {"diag-444", "vars z1 z2 z3; z1^4; z2^4; z3^4"},
        {"diag-mixed-1", "vars z1 z2 z3; z1^2; z2^3; z3^3; z1*z2*z3"},
        {"diag-mixed-2", "vars z1 z2 z3; z1^3; z2^3; z3^2; z1*z2"},
        {"axis-z1", "vars z1 z2 z3; z2^2; z3^4"},
        {"axis-z3", "vars z1 z2 z3; z1^3; z2^2"},
        {"plane-2-3", "vars z1 z2; z1^2; z2^3"},
        {"plane-square", "vars z1 z2; z1^2; z1*z2; z2^2"},
        {"plane-3-5", "vars z1 z2; z1^3; z2^5"},
        {"plane-mixed", "vars z1 z2; z1*z2; z1^3; z2^3"},
        {"diag4-2345", "vars z1 z2 z3 z4; z1^2; z2^3; z3^4; z4^5"},
        {"diag4-2222", "vars z1 z2 z3 z4; z1^2; z2^2; z3^2; z4^2"},
    };
    return s;
}

const std::vector<Instance>& mixed_suite()
{
    static const std::vector<Instance> s{
        {"cusp-square", "vars z1 z2; z1^2 + z2^3; z2^2"},
        {"curvilinear-5", "vars z1 z2; z1 - z2^2; z2^5"},
        {"rotated-square", "vars z1 z2; (z1 + z2)^2; z1^3"},
        {"cusp-times-square", "vars z1 z2 z3; z1^2 + z2^3; z3^2"},
        {"shifted-squares", "vars z1 z2 z3; at 1, 0, 0; (z1 - 1)^2; z2^2; z3^2"},
        {"tilted-cubes", "vars z1 z2 z3; z2^3 + z1^4; (z3 - z1)^3"},
        {"gaussian-squares", "vars z1 z2 z3; z1^2 + i*z2^3; z2^2; z3^2"},
    };
    return s;
}

std::vector<CorpusEntry> build(const std::vector<Instance>& instances)
{
    std::vector<CorpusEntry> out;
    for (const auto& s : instances)
        out.push_back({s.name, parse_document(s.text).ideal()});
    return out;
}

LawResult law(std::string name, const std::string& instance, bool ok, std::string detail)
{
    return {std::move(name), instance, ok ? LawStatus::pass : LawStatus::fail, std::move(detail)};
}

LawResult skipped(std::string name, const std::string& instance, std::string why)
{
    return {std::move(name), instance, LawStatus::skipped, std::move(why)};
}

std::string fmt(const ExtendedRational& v) { return v.to_string(); }

}  // namespace

std::vector<std::string> corpus_names() { return {"monomial-small", "monomial", "mixed"}; }

std::vector<CorpusEntry> corpus(const std::string& name)
{
    if (name == "monomial-small")
        return build(monomial_small());
    if (name == "monomial")
        return build(monomial_suite());
    if (name == "mixed")
        return build(mixed_suite());
    throw Error(ErrorCode::invalid_argument, "unknown corpus " + name);
}

std::string status_name(LawStatus s)
{
    switch (s) {
    case LawStatus::pass: return "pass";
    case LawStatus::fail: return "fail";
    case LawStatus::skipped: return "skipped";
    }
    return "fail";
}

std::vector<LawResult> verify_corpus(const std::vector<CorpusEntry>& entries, const VerifyOptions& options)
{
    std::vector<LawResult> out;
    for (const auto& e : entries) {
        const auto& ideal = e.ideal;
        const int n = ideal.nvars();

        Delta1Report d1 = delta1_bounds(ideal, options.budget);
        if (d1.exact) {
            const int k = d1.linear_forms;
            const auto top = d1.lower.pow(static_cast<unsigned>(n - k));
            out.push_back(law("multiplicity-chain", e.name, d1.chain_holds(),
                              fmt(d1.lower) + " <= " + fmt(d1.multiplicity) + " <= " + fmt(top)));
        } else {
            out.push_back(skipped("multiplicity-chain", e.name,
                                  "Delta_1 bounds " + fmt(d1.lower) + ".." + fmt(d1.upper) + " not certified"));
        }

        for (int q = 2; q <= n; ++q) {
            const std::string inst = e.name + " q=" + std::to_string(q);
            SliceSampler sampler = options.sampler;
            sampler.q = q;
            RestrictedRun run = sample_restricted_delta1(ideal, q, sampler, options.budget);
            GenericValueReport tilde = summarize_tilde(run, sampler);
            GenericValueReport inf = summarize_inf(run, sampler);
            const auto cap = inf.estimate.pow(static_cast<unsigned>(n - q + 1));
            out.push_back(law("sampled-inf-chain", inst, inf.estimate <= tilde.estimate && tilde.estimate <= cap,
                              fmt(inf.estimate) + " <= " + fmt(tilde.estimate) + " <= " + fmt(cap)));

            GenericValueReport gm = generic_multiplicity(ideal, q, sampler);
            out.push_back(law("generic-multiplicity-min-mode", inst, gm.min_equals_mode(),
                              "min " + fmt(gm.min_value) + ", mode " + fmt(gm.modal_value)));

            if (q > n - 1)
                continue;
            GenericValueReport catlin = catlin_q_estimate(run, ideal, q, sampler, CatlinOptions{options.budget});
            const bool certified = tilde.exact && !tilde.low_confidence && catlin.exact;
            const std::string rel = fmt(catlin.estimate) + " vs " + fmt(tilde.estimate);
            if (certified) {
                out.push_back(law("catlin-below-generic", inst, catlin.estimate <= tilde.estimate, rel));
                out.push_back(law("catlin-equals-generic", inst, catlin.estimate == tilde.estimate, rel));
            } else {
                out.push_back(skipped("catlin-below-generic", inst, "not certified: " + rel));
                out.push_back(skipped("catlin-equals-generic", inst, "not certified: " + rel));
            }

            // A cylinder over the first restricted witness.
            for (const auto& s : run.samples) {
                if (!s || !s->delta1.witness)
                    continue;
                CurveGerm gamma = s->delta1.witness->linear_image(s->coordinates.embedding());
                auto dirs = candidate_directrices(gamma, s->coordinates, q, 1);
                if (dirs.empty())
                    break;
                CylinderCheck c = check_cylinder(build_cylinder(gamma, dirs.front(), q));
                out.push_back(law("cylinder-postconditions", inst, c.ok(), "restricted witness cylinder"));
                break;
            }
        }
    }
    return out;
}

std::vector<LawResult> verify_random_cylinders(const VerifyOptions& options)
{
    std::vector<LawResult> out;
    std::mt19937_64 rng(mix_seed(options.sampler.seed, 0xC71));
    std::uniform_int_distribution<int> small(-3, 3);
    std::uniform_int_distribution<int> nd(3, 4);
    for (int trial = 0; trial < options.cylinder_pairs; ++trial) {
        const std::string inst = "random-" + std::to_string(trial);
        const int n = nd(rng);
        const int q = 2 + static_cast<int>(rng() % static_cast<unsigned>(n - 2));
        std::vector<PolyC> comps;
        for (int j = 0; j < n; ++j) {
            PolyC c(1);
            for (int d = 1; d <= 4; ++d)
                c.add_term({d}, GaussianRational(small(rng)));
            comps.push_back(c);
        }
        if (std::all_of(comps.begin(), comps.end(), [](const PolyC& p) { return p.is_zero(); }))
            comps[0] = PolyC::variable(1, 0);
        CurveGerm gamma = CurveGerm::from_polynomials(comps);
        Matrix u(n, q - 1);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < q - 1; ++c)
                u(r, c) = GaussianRational(small(rng));
        const auto tangent = gamma.tangent_direction();
        std::vector<std::vector<GaussianRational>> cols;
        for (int c = 0; c < q - 1; ++c)
            cols.push_back(u.column(c));
        const int rank_u = u.rank();
        cols.push_back(tangent);
        const bool tangent_inside = Matrix::from_columns(cols).rank() == rank_u;
        bool threw = false;
        try {
            CylinderCheck c = check_cylinder(build_cylinder(gamma, u, q));
            out.push_back(law("cylinder-postconditions", inst, c.ok() && rank_u == q - 1 && !tangent_inside,
                              "n=" + std::to_string(n) + " q=" + std::to_string(q)));
        } catch (const Error&) {
            threw = true;
        }
        if (threw)
            out.push_back(law("cylinder-postconditions", inst, rank_u < q - 1 || tangent_inside,
                              "construction rejected"));

        // Force the tangent into the directrix: the construction must refuse.
        Matrix bad = u;
        for (int r = 0; r < n; ++r)
            bad(r, 0) = tangent[static_cast<std::size_t>(r)];
        bool rejected = false;
        try {
            build_cylinder(gamma, bad, q);
        } catch (const Error&) {
            rejected = true;
        }
        out.push_back(law("cylinder-rejects-tangent", inst, rejected, "tangent placed in the directrix"));
    }
    return out;
}

bool all_passed(const std::vector<LawResult>& results)
{
    return std::none_of(results.begin(), results.end(), [](const LawResult& r) { return r.status == LawStatus::fail; });
}

}  // namespace qtype
