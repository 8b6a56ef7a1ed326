// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 on any FAIL.
#include "oracle.hpp"

#include "qtype/catlin.hpp"
#include "qtype/contact.hpp"
#include "qtype/errors.hpp"
#include "qtype/local_algebra.hpp"
#include "qtype/parse.hpp"
#include "qtype/types_engine.hpp"
#include "qtype/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace qtype;

namespace {

constexpr std::uint64_t seed = 20261018;
constexpr int min_oracle_ideals = 50;
constexpr double oracle_seconds = 60.0;
constexpr int chain_samples = 100;
constexpr int catlin_samples = 100;
constexpr int min_catlin_instances = 10;
constexpr double catlin_seconds = 300.0;
constexpr int cylinder_pairs = 100;
constexpr int tau_samples = 200;
constexpr double tau_min_frequency = 0.99;
constexpr double tau_max_rejection = 0.01;
constexpr long tau_range = 10000;
constexpr int min_mode_trials = 50;
constexpr double min_mode_agreement = 0.99;
constexpr int budget = 8;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = false;
    bool excluded = false;
    std::string detail;
};

IdealPresentation ideal(const std::string& text) { return parse_document(text).ideal(); }

SliceSampler sampler(int samples, int q, std::uint64_t salt = 0)
{
    SliceSampler s;
    s.seed = mix_seed(seed, salt);
    s.samples = samples;
    s.q = q;
    return s;
}

std::string show(const ExtendedRational& v) { return v.to_string(); }

Outcome multiplicity_oracle()
{
    auto start = Clock::now();
    std::vector<std::pair<std::string, IdealPresentation>> cases{
        {"(z1,z2)", ideal("vars z1 z2; z1; z2")},
        {"(z1^2,z1z2,z2^2)", ideal("vars z1 z2; z1^2; z1*z2; z2^2")},
        {"(z1^2,z2^3)", ideal("vars z1 z2; z1^2; z2^3")},
    };
    std::mt19937_64 rng(seed);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    for (int trial = 0; trial < 60; ++trial) {
        const int n = trial % 2 == 0 ? 2 : 3;
        const int top = n == 2 ? 5 : 3;
        std::vector<PolyC> gens;
        for (int j = 0; j < n; ++j) {
            Exponent e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(j)] = pick(1, top);
            gens.push_back(PolyC::monomial(n, e));
        }
        if (pick(0, 1) == 1) {
            Exponent e(static_cast<std::size_t>(n), 0);
            for (auto& x : e)
                x = pick(0, 2);
            if (total_degree(e) > 0)
                gens.push_back(PolyC::monomial(n, e));
        }
        // Half the ideals get one perturbation term of degree at most 5.
        if (trial % 4 >= 2) {
            Exponent e(static_cast<std::size_t>(n), 0);
            for (auto& x : e)
                x = pick(0, 5 / n);
            int c = pick(-3, 3);
            if (total_degree(e) > 0)
                gens[static_cast<std::size_t>(pick(0, n - 1))] +=
                    PolyC::monomial(n, e, GaussianRational(c == 0 ? 1 : c));
        }
        cases.emplace_back("random-" + std::to_string(trial), IdealPresentation(n, gens));
    }

    int checked = 0;
    for (const auto& [name, i] : cases) {
        auto expected = oracle::local_colength(i.generators(), i.nvars());
        if (!expected)
            continue;
        auto got = multiplicity(i);
        if (got != ExtendedRational::finite(Rational(*expected)))
            return {false, false, name + ": engine " + show(got) + ", oracle " + std::to_string(*expected)};
        ++checked;
    }
    double elapsed = seconds_since(start);
    std::ostringstream out;
    out << checked << " zero-dimensional ideals agree, " << elapsed << " s";
    return {checked >= min_oracle_ideals && elapsed < oracle_seconds, false, out.str()};
}

Outcome one_type_chain()
{
    std::vector<IdealPresentation> ideals{ideal("vars z1 z2 z3; z1^2; z2^3; z3")};
    for (const auto& name : {"monomial", "mixed"})
        for (const auto& e : corpus(name))
            ideals.push_back(e.ideal);
    int certified = 0;
    bool example = false;
    for (const auto& i : ideals) {
        auto r = delta1_bounds(i, budget);
        if (!r.exact || !r.lower.is_finite() || !r.multiplicity.is_finite())
            continue;
        ++certified;
        const unsigned k = static_cast<unsigned>(r.nvars - r.linear_forms);
        if (!(r.lower <= r.multiplicity && r.multiplicity <= r.lower.pow(k)))
            return {false, false, "violated: " + show(r.lower) + ", " + show(r.multiplicity)};
        if (i.nvars() == 3 && r.linear_forms == 1 && r.lower == ExtendedRational::finite(Rational(3)) &&
            r.multiplicity == ExtendedRational::finite(Rational(6)) && r.lower.pow(k) == ExtendedRational::finite(Rational(9)))
            example = true;
    }
    return {certified > 0 && example, false,
            std::to_string(certified) + " certified ideals, 3 <= 6 <= 9 " + (example ? "seen" : "missing")};
}

Outcome sampled_chain()
{
    auto entries = corpus("monomial");
    int checks = 0;
    for (std::size_t idx = 0; idx < entries.size(); ++idx) {
        const auto& e = entries[idx];
        const int n = e.ideal.nvars();
        for (int q = 2; q <= n; ++q) {
            auto s = sampler(chain_samples, q, idx * 16 + static_cast<std::uint64_t>(q));
            auto run = sample_restricted_delta1(e.ideal, q, s, budget);
            auto tilde = summarize_tilde(run, s);
            auto inf = summarize_inf(run, s);
            const unsigned k = static_cast<unsigned>(n - q + 1);
            if (!(inf.estimate <= tilde.estimate && tilde.estimate <= inf.estimate.pow(k)))
                return {false, false,
                        e.name + " q=" + std::to_string(q) + ": " + show(inf.estimate) + ", " + show(tilde.estimate)};
            ++checks;
        }
    }
    return {entries.size() >= 20, false,
            std::to_string(entries.size()) + " instances, " + std::to_string(checks) + " (ideal, q) chains, " +
                std::to_string(chain_samples) + " samples each"};
}

struct CatlinRow {
    std::string name;
    GenericValueReport tilde;
    GenericValueReport catlin;
};

std::vector<CatlinRow> catlin_rows;

Outcome catlin_equals_generic()
{
    auto start = Clock::now();
    const std::vector<std::pair<std::string, std::string>> instances{
        {"squares-3", "vars z1 z2 z3; z1^2; z2^2; z3^2"},
        {"cubes-23", "vars z1 z2 z3; z2^3; z3^3"},
        {"linear-3", "vars z1 z2 z3; z1; z2; z3"},
        {"diag-234", "vars z1 z2 z3; z1^2; z2^3; z3^4"},
        {"diag-432", "vars z1 z2 z3; z1^4; z2^3; z3^2"},
        {"diag-123", "vars z1 z2 z3; z1; z2^2; z3^3"},
        {"diag-335", "vars z1 z2 z3; z1^3; z2^3; z3^5"},
        {"diag-mixed-1", "vars z1 z2 z3; z1^2; z2^3; z3^3; z1*z2*z3"},
        {"diag-mixed-2", "vars z1 z2 z3; z1^3; z2^3; z3^2; z1*z2"},
        {"cusp-times-square", "vars z1 z2 z3; z1^2 + z2^3; z3^2"},
        {"gaussian-squares", "vars z1 z2 z3; z1^2 + i*z2^3; z2^2; z3^2"},
        {"axis-z1", "vars z1 z2 z3; z2^2; z3^4"},
    };
    int certified = 0;
    bool squares = false;
    bool cubes = false;
    std::string mismatch;
    for (std::size_t idx = 0; idx < instances.size(); ++idx) {
        auto i = ideal(instances[idx].second);
        auto s = sampler(catlin_samples, 2, 1000 + idx);
        auto run = sample_restricted_delta1(i, 2, s, budget);
        CatlinRow row{instances[idx].first, summarize_tilde(run, s), catlin_q_estimate(run, i, 2, s)};
        catlin_rows.push_back(row);
        if (!row.tilde.exact || row.tilde.low_confidence || !row.catlin.exact)
            continue;
        ++certified;
        if (row.catlin.estimate != row.tilde.estimate && mismatch.empty())
            mismatch = row.name + ": catlin " + show(row.catlin.estimate) + ", tilde " + show(row.tilde.estimate);
        auto two = ExtendedRational::finite(Rational(2));
        auto three = ExtendedRational::finite(Rational(3));
        squares = squares || (row.name == "squares-3" && row.catlin.estimate == two && row.tilde.estimate == two);
        cubes = cubes || (row.name == "cubes-23" && row.catlin.estimate == three && row.tilde.estimate == three);
    }
    double elapsed = seconds_since(start);
    if (!mismatch.empty())
        return {false, false, mismatch};
    std::ostringstream out;
    out << certified << " certified instances equal, squares-3 -> 2 " << (squares ? "ok" : "missing")
        << ", cubes-23 -> 3 " << (cubes ? "ok" : "missing") << ", " << elapsed << " s";
    return {certified >= min_catlin_instances && squares && cubes && elapsed < catlin_seconds, false, out.str()};
}

// Lowest-order coefficient vector of a polynomial curve, computed directly.
std::vector<GaussianRational> tangent_of(const std::vector<PolyC>& comps)
{
    int order = -1;
    for (const auto& c : comps)
        if (!c.is_zero() && (order < 0 || c.low_degree() < order))
            order = c.low_degree();
    std::vector<GaussianRational> v;
    for (const auto& c : comps)
        v.push_back(c.coefficient({order}));
    return v;
}

int rank_of_columns(const std::vector<std::vector<GaussianRational>>& cols)
{
    return oracle::rank(cols);
}

Outcome cylinder_postconditions()
{
    std::mt19937_64 rng(seed + 5);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    int built = 0;
    int rejected = 0;
    for (int pair = 0; pair < cylinder_pairs; ++pair) {
        const int n = pick(3, 4);
        const int q = pick(2, n - 1);
        std::vector<PolyC> comps;
        for (;;) {
            comps.clear();
            for (int j = 0; j < n; ++j) {
                PolyC c(1);
                for (int d = 1; d <= 4; ++d)
                    if (pick(0, 2) == 0)
                        c += PolyC::monomial(1, {d}, GaussianRational(pick(-3, 3)));
                comps.push_back(c);
            }
            if (std::any_of(comps.begin(), comps.end(), [](const PolyC& c) { return !c.is_zero(); }))
                break;
        }
        auto gamma = CurveGerm::from_polynomials(comps);
        auto tangent = tangent_of(comps);

        std::vector<std::vector<GaussianRational>> cols;
        for (int c = 0; c < q - 1; ++c) {
            std::vector<GaussianRational> col;
            for (int j = 0; j < n; ++j)
                col.push_back(GaussianRational(pick(-3, 3)));
            cols.push_back(col);
        }
        auto with_tangent = cols;
        with_tangent.push_back(tangent);
        const bool full = rank_of_columns(cols) == q - 1;
        const bool transversal = rank_of_columns(with_tangent) == q;
        try {
            auto cyl = build_cylinder(gamma, Matrix::from_columns(cols), q);
            if (!full || !transversal)
                return {false, false, "pair " + std::to_string(pair) + " accepted a bad directrix"};
            std::vector<GaussianRational> zero(static_cast<std::size_t>(q - 1));
            if (!(cyl.at(zero) == gamma))
                return {false, false, "pair " + std::to_string(pair) + ": psi(t, 0) differs from the curve"};
            // Tangent space at the base point: the tangent and the directrix columns.
            auto space = with_tangent;
            for (const auto& col : cols) {
                auto extended = space;
                extended.push_back(col);
                if (rank_of_columns(extended) != rank_of_columns(space))
                    return {false, false, "pair " + std::to_string(pair) + ": directrix leaves the tangent space"};
            }
            if (rank_of_columns(space) != q)
                return {false, false, "pair " + std::to_string(pair) + ": tangent space has the wrong dimension"};
            ++built;
        } catch (const Error& e) {
            if (full && transversal)
                return {false, false, "pair " + std::to_string(pair) + " rejected: " + e.what()};
        }

        // The same curve with a directrix containing its tangent must be refused.
        auto bad = cols;
        bad[0] = tangent;
        if (rank_of_columns(bad) == q - 1) {
            try {
                build_cylinder(gamma, Matrix::from_columns(bad), q);
                return {false, false, "pair " + std::to_string(pair) + ": tangent inside the directrix accepted"};
            } catch (const Error& e) {
                if (e.code() != ErrorCode::invalid_germ)
                    return {false, false, "pair " + std::to_string(pair) + ": wrong error " + e.what()};
                ++rejected;
            }
        }
    }
    return {built > 0 && rejected > 0, false,
            std::to_string(cylinder_pairs) + " pairs, " + std::to_string(built) + " cylinders verified, " +
                std::to_string(rejected) + " tangent directrices refused"};
}

struct CylinderCase {
    std::string name;
    IdealPresentation ideal;
    CylinderVariety cylinder;
};

Matrix axes(int n, const std::vector<int>& which)
{
    std::vector<std::vector<GaussianRational>> cols;
    for (int j : which) {
        std::vector<GaussianRational> col(static_cast<std::size_t>(n));
        col[static_cast<std::size_t>(j)] = GaussianRational(1);
        cols.push_back(col);
    }
    return Matrix::from_columns(cols);
}

Outcome tau_stability()
{
    auto cusp = build_cylinder(CurveGerm::monomial({2, 3, 0}), axes(3, {2}), 2);
    auto twisted = build_cylinder(CurveGerm::monomial({1, 2, 3}), axes(3, {1}), 2);
    auto wide = build_cylinder(CurveGerm::monomial({2, 5, 0, 0}), axes(4, {2, 3}), 3);
    auto line4 = build_cylinder(CurveGerm::monomial({1, 3, 0, 0}), axes(4, {3}), 2);
    std::vector<CylinderCase> cases{
        {"cusp/(z2)", ideal("vars z1 z2 z3; z2"), cusp},
        {"cusp/(z3)", ideal("vars z1 z2 z3; z3"), cusp},
        {"cusp/maximal", ideal("vars z1 z2 z3; z1; z2; z3"), cusp},
        {"cusp/cusp", ideal("vars z1 z2 z3; z2^2 - z1^3"), cusp},
        {"cusp/squares", ideal("vars z1 z2 z3; z1^2; z2^2; z3^2"), cusp},
        {"twisted/(z1^2,z2^3,z3^4)", ideal("vars z1 z2 z3; z1^2; z2^3; z3^4"), twisted},
        {"twisted/(z3)", ideal("vars z1 z2 z3; z3"), twisted},
        {"wide/(z2,z3^2,z4^2)", ideal("vars z1 z2 z3 z4; z2; z3^2; z4^2"), wide},
        {"line4/diagonal", ideal("vars z1 z2 z3 z4; z1^2; z2^2; z3^3; z4^2"), line4},
    };
    double worst_frequency = 1;
    double worst_rejection = 0;
    std::string worst;
    for (std::size_t idx = 0; idx < cases.size(); ++idx) {
        auto s = sampler(tau_samples, cases[idx].cylinder.q(), 2000 + idx);
        s.range = tau_range;
        // Redraws only replace singular draws; the rejection rate counts every draw.
        auto r = tau_generic(cases[idx].ideal, cases[idx].cylinder, s);
        double rejection = static_cast<double>(r.rejected) / (r.samples_used + r.rejected);
        double frequency = r.frequency.get_d();
        if (frequency < worst_frequency) {
            worst_frequency = frequency;
            worst = cases[idx].name;
        }
        worst_rejection = std::max(worst_rejection, rejection);
        if (r.samples_used < tau_samples)
            return {false, false, cases[idx].name + ": only " + std::to_string(r.samples_used) + " usable slices"};
    }
    std::ostringstream out;
    out << cases.size() << " cylinder cases, lowest modal frequency " << worst_frequency
        << (worst.empty() ? "" : " (" + worst + ")") << ", highest rejection rate " << worst_rejection;
    return {worst_frequency >= tau_min_frequency && worst_rejection < tau_max_rejection, false, out.str()};
}

Outcome min_equals_mode()
{
    std::mt19937_64 rng(seed + 7);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    int agree = 0;
    int trials = 0;
    for (int trial = 0; trial < min_mode_trials; ++trial) {
        const int n = 3;
        const int q = pick(2, 3);
        std::vector<PolyC> gens;
        for (int j = 0; j < n; ++j) {
            Exponent e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(j)] = pick(1, 4);
            gens.push_back(PolyC::monomial(n, e));
        }
        Exponent extra(static_cast<std::size_t>(n), 0);
        for (auto& x : extra)
            x = pick(0, 2);
        if (total_degree(extra) > 0)
            gens[static_cast<std::size_t>(pick(0, n - 1))] += PolyC::monomial(n, extra, GaussianRational(pick(1, 3)));
        auto r = generic_multiplicity(IdealPresentation(n, gens), q, sampler(20, q, 3000 + trial));
        ++trials;
        if (r.min_equals_mode())
            ++agree;
    }
    double rate = static_cast<double>(agree) / trials;
    std::ostringstream out;
    out << agree << "/" << trials << " trials with min = mode";
    return {trials >= min_mode_trials && rate >= min_mode_agreement, false, out.str()};
}

Outcome catlin_below_generic()
{
    int compared = 0;
    for (const auto& row : catlin_rows) {
        if (!row.tilde.exact || row.tilde.low_confidence)
            continue;
        ++compared;
        if (row.catlin.estimate > row.tilde.estimate)
            return {false, false, row.name + ": catlin " + show(row.catlin.estimate) + " above " + show(row.tilde.estimate)};
    }
    for (const auto& name : {"mixed", "monomial"})
        for (std::size_t idx = 0; const auto& e : corpus(name)) {
            ++idx;
            const int n = e.ideal.nvars();
            for (int q = 2; q <= n - 1; ++q) {
                auto s = sampler(20, q, 4000 + idx * 8 + static_cast<std::uint64_t>(q));
                auto run = sample_restricted_delta1(e.ideal, q, s, budget);
                auto tilde = summarize_tilde(run, s);
                if (!tilde.exact || tilde.low_confidence)
                    continue;
                auto catlin = catlin_q_estimate(run, e.ideal, q, s);
                ++compared;
                if (catlin.estimate > tilde.estimate)
                    return {false, false, e.name + ": catlin " + show(catlin.estimate) + " above " + show(tilde.estimate)};
            }
        }
    return {compared > 0, false, std::to_string(compared) + " certified comparisons, none above"};
}

Outcome q_positivity_models()
{
    std::mt19937_64 rng(seed + 9);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    int applicable = 0;
    int vacuous = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const int n = pick(3, 4);
        std::vector<PolyC> f;
        for (int j = 0; j < n - 1; ++j)
            f.push_back(PolyC::variable(n, j));
        auto h = PolyC::variable(n, n - 1) * PolyC::constant(n, GaussianRational(2));
        HypersurfaceGerm psh(h, f, {});
        HypersurfaceGerm cancel(h, f, f);

        std::vector<PolyC> comps;
        bool nonzero = false;
        for (int j = 0; j < n; ++j) {
            PolyC c(1);
            if (j < n - 1 || trial % 3 == 0)
                for (int d = 1; d <= 3; ++d)
                    if (pick(0, 1) == 0)
                        c += PolyC::monomial(1, {d}, GaussianRational(pick(-3, 3)));
            nonzero = nonzero || (j < n - 1 && !c.is_zero());
            comps.push_back(c);
        }
        if (!nonzero)
            comps[0] = PolyC::monomial(1, {1});
        auto phi = CurveGerm::from_polynomials(comps);
        auto slice = LinearSlice::from_forms({PolyC::variable(n, n - 1)});

        auto a = q_positivity(phi, psh, slice);
        auto b = q_positivity(phi, cancel, slice);
        if (a.applicable != b.applicable)
            return {false, false, "applicability differs between the two models"};
        if (!a.applicable) {
            if (!a.verdict || !b.verdict)
                return {false, false, "inapplicable curve without a vacuous verdict"};
            ++vacuous;
            continue;
        }
        ++applicable;
        if (!a.verdict || a.indeterminate)
            return {false, false, "plurisubharmonic model failed on trial " + std::to_string(trial)};
        if (!b.indeterminate)
            return {false, false, "cancellation model decided on trial " + std::to_string(trial)};
    }
    return {applicable > 0 && vacuous > 0, false,
            std::to_string(applicable) + " applicable curves: model true, cancellation indeterminate; " +
                std::to_string(vacuous) + " vacuous"};
}

Outcome external_counterexample()
{
    return {false, true,
            "no instance with a strict gap between the two q-types is available; excluded, not tested"};
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"multiplicity-oracle", multiplicity_oracle},
        {"one-type-chain", one_type_chain},
        {"sampled-chain", sampled_chain},
        {"catlin-equals-generic", catlin_equals_generic},
        {"cylinder-postconditions", cylinder_postconditions},
        {"tau-stability", tau_stability},
        {"min-equals-mode", min_equals_mode},
        {"catlin-below-generic", catlin_below_generic},
        {"q-positivity-models", q_positivity_models},
        {"external-counterexample", external_counterexample},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto& [name, run] = criteria[k];
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, false, std::string("exception: ") + e.what()};
        }
        const char* status = o.excluded ? "EXCLUDED" : (o.pass ? "PASS" : "FAIL");
        if (!o.pass && !o.excluded)
            ++failed;
        std::printf("[%2zu] %-8s %-24s %s\n", k + 1, status, name.c_str(), o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d failed\n", failed);
    return failed == 0 ? 0 : 1;
}
