#include "qtype/types_engine.hpp"

#include "qtype/errors.hpp"
#include "qtype/matrix.hpp"
#include "qtype/parallel.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace qtype {

std::string provenance_name(UpperProvenance p)
{
    switch (p) {
    case UpperProvenance::none: return "none";
    case UpperProvenance::multiplicity: return "multiplicity";
    case UpperProvenance::pure_powers: return "pure_powers";
    case UpperProvenance::univariate: return "univariate";
    case UpperProvenance::zero_set_curve: return "zero_set_curve";
    }
    return "none";
}

std::optional<long> Delta1Report::root_lower_bound() const
{
    const int e = nvars - linear_forms;
    if (!multiplicity.is_finite() || e <= 0)
        return std::nullopt;
    const Integer d = multiplicity.value().get_num();
    long r = 1;
    while (true) {
        Integer p = 1;
        for (int i = 0; i < e; ++i)
            p *= (r + 1);
        if (p > d)
            return r;
        ++r;
    }
}

bool Delta1Report::chain_holds() const
{
    if (!(lower <= multiplicity))
        return false;
    if (!exact || !multiplicity.is_finite())
        return true;
    return multiplicity <= lower.pow(static_cast<unsigned>(nvars - linear_forms));
}

namespace {

using Ray = std::vector<int>;

// Exponent vectors in [0, budget]^n, not all zero, with coprime nonzero
// entries (t -> t^k does not change normalized contact).
const std::vector<Ray>& primitive_rays(int n, int budget)
{
    static thread_local std::map<std::pair<int, int>, std::vector<Ray>> cache;
    auto [it, inserted] = cache.try_emplace({n, budget});
    if (!inserted)
        return it->second;
    auto& out = it->second;
    Ray a(static_cast<std::size_t>(n), 0);
    while (true) {
        int g = 0;
        for (int x : a)
            g = std::gcd(g, x);
        if (g == 1)
            out.push_back(a);
        int j = n - 1;
        while (j >= 0 && a[static_cast<std::size_t>(j)] == budget) {
            a[static_cast<std::size_t>(j)] = 0;
            --j;
        }
        if (j < 0)
            break;
        ++a[static_cast<std::size_t>(j)];
    }
    return out;
}

int curve_order_of(const Ray& a)
{
    int o = 0;
    for (int x : a)
        if (x > 0 && (o == 0 || x < o))
            o = x;
    return o;
}

// Lowest weight with a nonzero coefficient sum of p along y = (t^{a_j});
// -1 when p vanishes identically on the curve.
int weighted_order(const PolyC& p, const Ray& a)
{
    std::map<int, GaussianRational> by_weight;
    for (const auto& [e, c] : p.terms()) {
        int w = 0;
        bool vanishes = false;
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0)
                continue;
            if (a[j] == 0) {
                vanishes = true;
                break;
            }
            w += e[j] * a[j];
        }
        if (!vanishes)
            by_weight[w] += c;
    }
    for (const auto& [w, c] : by_weight)
        if (!c.is_zero())
            return w;
    return -1;
}

struct Score {
    ExtendedRational ratio = ExtendedRational::finite(Rational(0));
    int balance = 0;
    int omitted = 0;
    bool valid = false;

    bool better_than(const Score& o) const
    {
        if (!o.valid)
            return valid;
        if (ratio != o.ratio)
            return ratio > o.ratio;
        if (balance != o.balance)
            return balance > o.balance;
        return omitted < o.omitted;
    }
};

// Normalized contact of a monomial ideal (or any polynomials) along the
// monomial curve with exponents a, plus the number of generators attaining it.
Score score_ray(const std::vector<PolyC>& gens, const Ray& a, const Score* prune)
{
    Score s;
    const int ord = curve_order_of(a);
    if (ord == 0)
        return s;
    s.omitted = static_cast<int>(std::count(a.begin(), a.end(), 0));
    std::vector<int> orders;
    int best = -1;
    for (const auto& g : gens) {
        if (g.is_zero())
            continue;
        int w = weighted_order(g, a);
        orders.push_back(w);
        if (w >= 0 && (best < 0 || w < best)) {
            best = w;
            if (prune != nullptr && prune->valid && prune->ratio.is_finite() &&
                ExtendedRational::finite(Rational(best, ord)) < prune->ratio)
                return s;  // cannot beat the incumbent
        }
    }
    s.valid = true;
    if (best < 0) {
        s.ratio = ExtendedRational::infinite();
        return s;
    }
    s.ratio = ExtendedRational::finite(Rational(best, ord));
    s.balance = static_cast<int>(std::count(orders.begin(), orders.end(), best));
    return s;
}

std::vector<GaussianRational> normalized(std::vector<GaussianRational> v)
{
    auto it = std::find_if(v.begin(), v.end(), [](const auto& c) { return !c.is_zero(); });
    if (it == v.end())
        return v;
    GaussianRational inv = it->inverse();
    for (auto& c : v)
        c *= inv;
    return v;
}

// Coordinate systems in which to search for monomial curves: rows of each
// matrix are linear forms y_k.
std::vector<Matrix> coordinate_systems(int n, const std::vector<PolyC>& extra_forms)
{
    std::vector<std::vector<GaussianRational>> forms;
    auto add = [&](std::vector<GaussianRational> v) {
        if (std::all_of(v.begin(), v.end(), [](const auto& c) { return c.is_zero(); }))
            return;
        v = normalized(std::move(v));
        if (std::find(forms.begin(), forms.end(), v) == forms.end())
            forms.push_back(std::move(v));
    };
    for (int j = 0; j < n; ++j) {
        std::vector<GaussianRational> e(static_cast<std::size_t>(n));
        e[static_cast<std::size_t>(j)] = GaussianRational(1);
        add(e);
    }
    for (const auto& f : extra_forms)
        if (f.nvars() == n)
            add(f.linear_part());

    std::vector<Matrix> systems{Matrix::identity(n)};
    constexpr std::size_t max_systems = 40;
    std::vector<int> pick;
    // Enumerate n-subsets of the candidate forms in lexicographic order.
    std::function<void(int)> choose = [&](int start) {
        if (systems.size() >= max_systems)
            return;
        if (static_cast<int>(pick.size()) == n) {
            std::vector<std::vector<GaussianRational>> rows;
            for (int i : pick)
                rows.push_back(forms[static_cast<std::size_t>(i)]);
            Matrix m = Matrix::from_rows(rows);
            if (m.rank() == n && m != Matrix::identity(n))
                systems.push_back(std::move(m));
            return;
        }
        for (int i = start; i < static_cast<int>(forms.size()); ++i) {
            pick.push_back(i);
            choose(i + 1);
            pick.pop_back();
        }
    };
    choose(0);
    return systems;
}

// The linear form l when the initial form of p is c * l^k.
std::optional<PolyC> initial_linear_root(const PolyC& p)
{
    const int k = p.low_degree();
    if (k < 1)
        return std::nullopt;
    PolyC initial(p.nvars());
    for (const auto& [e, c] : p.terms())
        if (total_degree(e) == k)
            initial.add_term(e, c);
    // Differentiate k - 1 times along one monomial of the initial form.
    Exponent beta = initial.terms().begin()->first;
    for (auto& x : beta)
        if (x > 0) {
            --x;
            break;
        }
    PolyC root(p.nvars());
    for (const auto& [e, c] : initial.terms()) {
        Exponent rest = e;
        Integer factor = 1;
        bool ok = true;
        for (std::size_t j = 0; j < e.size() && ok; ++j) {
            if (rest[j] < beta[j]) {
                ok = false;
                break;
            }
            for (int m = 0; m < beta[j]; ++m)
                factor *= rest[j] - m;
            rest[j] -= beta[j];
        }
        if (ok)
            root.add_term(rest, c * GaussianRational(Rational(factor)));
    }
    if (root.is_zero() || root.degree() != 1)
        return std::nullopt;
    PolyC power = root.pow(static_cast<unsigned>(k));
    const auto& [e0, c0] = *initial.terms().begin();
    if (power.coefficient(e0).is_zero())
        return std::nullopt;
    power *= c0 / power.coefficient(e0);
    if (!(power - initial).is_zero())
        return std::nullopt;
    return root;
}

CurveGerm at_base_point(const CurveGerm& curve, const std::vector<GaussianRational>& base)
{
    std::vector<UniSeries> comps;
    for (std::size_t j = 0; j < base.size(); ++j)
        comps.push_back(curve.components()[j] + UniSeries::constant(base[j], curve.truncation()));
    return CurveGerm(std::move(comps), base, curve.is_polynomial());
}

// y(t) = (c_j t^{a_j} + extra_j t^{b_j}) mapped back to z = A^{-1} y.
CurveGerm curve_in_system(const Matrix& inverse, const Ray& a, const std::vector<GaussianRational>& coeffs,
                          int bump_index = -1, int bump_power = 0, const GaussianRational& bump = {})
{
    const int trunc = default_truncation;
    std::vector<UniSeries> y;
    for (std::size_t j = 0; j < a.size(); ++j) {
        UniSeries s(trunc);
        if (a[j] > 0)
            s = UniSeries::monomial(coeffs.empty() ? GaussianRational(1) : coeffs[j], a[j], trunc);
        if (static_cast<int>(j) == bump_index)
            s += UniSeries::monomial(bump, bump_power, trunc);
        y.push_back(std::move(s));
    }
    return CurveGerm(std::move(y)).linear_image(inverse);
}

const std::vector<GaussianRational>& perturbation_coefficients()
{
    static const std::vector<GaussianRational> c{
        GaussianRational(1),           GaussianRational(-1),          GaussianRational(2),
        GaussianRational(-2),          GaussianRational(Rational(1, 2)), GaussianRational(Rational(-1, 2)),
        GaussianRational(3),           GaussianRational::i(),         -GaussianRational::i(),
    };
    return c;
}

struct Candidate {
    Score score;
    std::size_t system;
    Ray ray;
};

void check_budget(const IdealPresentation& ideal, int budget)
{
    int maxdeg = 0;
    for (const auto& g : ideal.generators())
        maxdeg = std::max(maxdeg, g.degree());
    if (budget < maxdeg)
        throw Error(ErrorCode::invalid_argument,
                    "search budget " + std::to_string(budget) + " is below the generator degree " +
                        std::to_string(maxdeg));
}

// Pure powers of candidate forms inside I; any n independent ones bound
// Delta_1 by their largest power.
void certify_pure_powers(Delta1Report& r, const std::vector<Matrix>& systems, const StandardBasisResult& sb,
                         const Budget& budget)
{
    const int n = r.nvars;
    const long d = r.multiplicity.value().get_num().get_si();
    struct PowerForm {
        int power;
        std::vector<GaussianRational> coeffs;
    };
    std::vector<PowerForm> powered;
    std::vector<std::vector<GaussianRational>> seen;
    for (const auto& sys : systems)
        for (int row = 0; row < n; ++row) {
            auto v = sys.row(row);
            if (std::find(seen.begin(), seen.end(), v) != seen.end())
                continue;
            seen.push_back(v);
            PolyC form = PolyC::linear_form(v);
            PolyC power = form;
            for (int p = 1; p <= d; ++p) {
                if (local_membership(power, sb, budget)) {
                    powered.push_back({p, v});
                    break;
                }
                power *= form;
            }
        }
    std::stable_sort(powered.begin(), powered.end(),
                     [](const PowerForm& a, const PowerForm& b) { return a.power < b.power; });
    std::vector<std::vector<GaussianRational>> basis;
    std::vector<int> powers;
    for (const auto& pf : powered) {
        auto trial = basis;
        trial.push_back(pf.coeffs);
        if (Matrix::from_rows(trial).rank() == static_cast<int>(trial.size())) {
            basis = std::move(trial);
            powers.push_back(pf.power);
        }
        if (static_cast<int>(basis.size()) == n)
            break;
    }
    if (static_cast<int>(basis.size()) == n) {
        auto bound = finite_value(*std::max_element(powers.begin(), powers.end()));
        if (bound < r.upper) {
            r.upper = bound;
            r.provenance = UpperProvenance::pure_powers;
            for (const auto& v : basis)
                r.certificate_forms.push_back(PolyC::linear_form(v));
            r.certificate_powers = powers;
        }
    }
}

}  // namespace

Delta1Report delta1_monomial(const IdealPresentation& ideal, int budget)
{
    if (!ideal.all_monomial())
        throw Error(ErrorCode::non_monomial, "delta1_monomial needs monomial generators");
    check_budget(ideal, budget);
    const int n = ideal.nvars();

    Delta1Report r;
    r.nvars = n;
    r.linear_forms = ideal.linear_form_count();
    r.multiplicity = multiplicity(ideal);

    Score best;
    Ray best_ray;
    for (const auto& a : primitive_rays(n, budget)) {
        Score s = score_ray(ideal.generators(), a, &best);
        if (s.valid && s.better_than(best)) {
            best = s;
            best_ray = a;
        }
    }
    r.lower = best.ratio;
    r.witness = at_base_point(CurveGerm::monomial(best_ray), ideal.base_point());

    // An m-primary monomial ideal has Delta_1 = max_j p_j, p_j the least
    // pure power of z_j in the ideal; otherwise a coordinate axis lies in V(I).
    std::vector<int> pure(static_cast<std::size_t>(n), 0);
    for (const auto& g : ideal.generators()) {
        if (g.is_zero())
            continue;
        const auto& e = g.terms().begin()->first;
        int nz = static_cast<int>(std::count_if(e.begin(), e.end(), [](int x) { return x > 0; }));
        if (nz != 1)
            continue;
        auto j = static_cast<std::size_t>(std::find_if(e.begin(), e.end(), [](int x) { return x > 0; }) - e.begin());
        pure[j] = pure[j] == 0 ? e[j] : std::min(pure[j], e[j]);
    }
    if (std::find(pure.begin(), pure.end(), 0) != pure.end()) {
        r.upper = ExtendedRational::infinite();
        r.provenance = UpperProvenance::zero_set_curve;
    } else {
        r.upper = ExtendedRational::finite(Rational(*std::max_element(pure.begin(), pure.end())));
        r.provenance = UpperProvenance::pure_powers;
        for (int j = 0; j < n; ++j) {
            r.certificate_forms.push_back(PolyC::variable(n, j));
            r.certificate_powers.push_back(pure[static_cast<std::size_t>(j)]);
        }
    }
    r.exact = r.lower == r.upper;
    return r;
}

Delta1Report delta1_bounds(const IdealPresentation& ideal, const Delta1Options& options)
{
    if (ideal.all_monomial())
        return delta1_monomial(ideal, options.budget);
    check_budget(ideal, options.budget);
    const int n = ideal.nvars();
    const auto& base = ideal.base_point();

    Delta1Report r;
    r.nvars = n;
    r.linear_forms = ideal.linear_form_count();
    StandardBasisResult sb = standard_basis(ideal, options.algebra_budget);
    r.multiplicity = sb.colength();

    std::vector<PolyC> gens;
    for (const auto& g : ideal.generators())
        if (!g.is_zero())
            gens.push_back(g);

    if (n == 1) {
        int ord = -1;
        for (const auto& g : gens)
            ord = ord < 0 ? g.low_degree() : std::min(ord, g.low_degree());
        r.lower = ord < 0 ? ExtendedRational::infinite() : finite_value(ord);
        r.upper = r.lower;
        r.provenance = UpperProvenance::univariate;
        r.witness = at_base_point(CurveGerm::monomial({1}), base);
        r.exact = true;
        return r;
    }

    // Lower bound: monomial curves in several coordinate systems, then
    // coefficient variants and two-term perturbations of the best ones.
    std::vector<PolyC> extra = options.hints;
    for (const auto& g : gens) {
        auto lin = g.linear_part();
        if (std::any_of(lin.begin(), lin.end(), [](const auto& c) { return !c.is_zero(); }))
            extra.push_back(PolyC::linear_form(lin));
        else if (auto root = initial_linear_root(g))
            extra.push_back(*root);
    }
    const auto systems = coordinate_systems(n, extra);
    std::vector<Matrix> inverses;
    std::vector<std::vector<PolyC>> gens_in_system;
    for (const auto& a : systems) {
        inverses.push_back(a.inverse());
        std::vector<PolyC> gy;
        for (const auto& g : gens)
            gy.push_back(linear_substitute(g, inverses.back()));
        gens_in_system.push_back(std::move(gy));
    }

    // Upper bound.
    if (!r.multiplicity.is_finite()) {
        // O/I infinite-dimensional: V(I) is positive-dimensional at x0 and
        // contains a curve, so Delta_1 is infinite.
        r.upper = ExtendedRational::infinite();
        r.provenance = UpperProvenance::multiplicity;
    } else {
        r.upper = r.multiplicity;
        r.provenance = UpperProvenance::multiplicity;
        certify_pure_powers(r, systems, sb, options.algebra_budget);
    }


    constexpr std::size_t keep = 6;
    std::vector<Candidate> top;
    for (std::size_t s = 0; s < systems.size(); ++s)
        for (const auto& a : primitive_rays(n, options.budget)) {
            const Score* prune = top.size() < keep ? nullptr : &top.back().score;
            Score sc = score_ray(gens_in_system[s], a, prune);
            if (!sc.valid)
                continue;
            if (top.size() < keep || sc.better_than(top.back().score)) {
                top.push_back({sc, s, a});
                std::stable_sort(top.begin(), top.end(),
                                 [](const Candidate& x, const Candidate& y) { return x.score.better_than(y.score); });
                if (top.size() > keep)
                    top.pop_back();
            }
        }

    ExtendedRational best_value = ExtendedRational::finite(Rational(0));
    std::optional<CurveGerm> best_curve;
    auto done = [&] { return best_curve && best_value >= r.upper; };
    auto consider = [&](const CurveGerm& curve) {
        if (done())
            return;
        ExtendedRational v = ideal_contact(curve, IdealPresentation(n, gens));
        if (!best_curve || v > best_value) {
            best_value = v;
            best_curve = curve;
        }
    };
    for (const auto& c : top)
        consider(curve_in_system(inverses[c.system], c.ray, {}));

    const auto& coeffs = perturbation_coefficients();
    for (const auto& c : top) {
        if (done())
            break;
        const Matrix& inv = inverses[c.system];
        std::vector<std::size_t> active;
        for (std::size_t j = 0; j < c.ray.size(); ++j)
            if (c.ray[j] > 0)
                active.push_back(j);
        // Leading-coefficient variants, first active coefficient fixed to 1.
        if (active.size() >= 2 && active.size() <= 3) {
            std::vector<std::size_t> idx(active.size() - 1, 0);
            while (true) {
                std::vector<GaussianRational> lead(c.ray.size(), GaussianRational(1));
                for (std::size_t k = 1; k < active.size(); ++k)
                    lead[active[k]] = coeffs[idx[k - 1]];
                consider(curve_in_system(inv, c.ray, lead));
                std::size_t k = 0;
                while (k < idx.size() && ++idx[k] == coeffs.size())
                    idx[k++] = 0;
                if (k == idx.size())
                    break;
            }
        }
        // Two-term perturbations c_j t^{a_j} + c t^b.
        for (std::size_t j : active)
            for (int b = c.ray[j] + 1; b <= options.budget; ++b)
                for (const auto& coef : coeffs)
                    consider(curve_in_system(inv, c.ray, {}, static_cast<int>(j), b, coef));
    }
    r.lower = best_value;
    if (best_curve)
        r.witness = at_base_point(*best_curve, base);
    if (!r.multiplicity.is_finite()) {
        // O/I infinite-dimensional: V(I) is positive-dimensional at x0 and
        // contains a curve, so Delta_1 is infinite.
        r.lower = r.upper;
    }

    r.exact = r.lower == r.upper;
    return r;
}

RestrictedRun sample_restricted_delta1(const IdealPresentation& ideal, int q, const SliceSampler& sampler_in,
                                       int budget)
{
    SliceSampler sampler = sampler_in;
    sampler.q = q;
    const int n = ideal.nvars();
    if (q < 2 || q > n)
        throw Error(ErrorCode::invalid_argument, "q must satisfy 2 <= q <= n");
    struct Outcome {
        std::optional<RestrictedSample> sample;
        int rejected = 0;
    };
    auto outcomes = parallel_map(static_cast<std::size_t>(sampler.samples), sampler.threads, [&](std::size_t i) {
        Outcome o;
        auto [slice, rejected] = sampler.draw_slice(n, static_cast<int>(i));
        o.rejected = rejected;
        if (!slice)
            return o;
        SliceCoordinates coords(*slice);
        std::vector<PolyC> restricted;
        for (const auto& g : ideal.generators())
            restricted.push_back(coords.restrict(g));
        IdealPresentation sub(coords.kept(), std::move(restricted));
        Delta1Options opts;
        opts.budget = budget;
        opts.hints = coords.coordinate_images();
        Delta1Report rep = delta1_bounds(sub, opts);
        o.sample = RestrictedSample{*slice, coords, std::move(sub), std::move(rep)};
        return o;
    });
    RestrictedRun run;
    for (auto& o : outcomes) {
        run.samples.push_back(std::move(o.sample));
        run.rejected += o.rejected;
    }
    return run;
}

namespace {

std::vector<std::optional<SampleValue>> restricted_values(const RestrictedRun& run)
{
    std::vector<std::optional<SampleValue>> values;
    for (const auto& s : run.samples) {
        if (!s) {
            values.emplace_back();
            continue;
        }
        values.push_back(SampleValue{s->delta1.lower, s->delta1.exact});
    }
    return values;
}

}  // namespace

GenericValueReport summarize_tilde(const RestrictedRun& run, const SliceSampler& sampler)
{
    return aggregate_samples(restricted_values(run), run.rejected, sampler, "mode");
}

GenericValueReport summarize_inf(const RestrictedRun& run, const SliceSampler& sampler)
{
    return aggregate_samples(restricted_values(run), run.rejected, sampler, "min");
}

GenericValueReport tilde_deltaq(const IdealPresentation& ideal, int q, const SliceSampler& sampler, int budget)
{
    return summarize_tilde(sample_restricted_delta1(ideal, q, sampler, budget), sampler);
}

GenericValueReport deltaq_sampled_inf(const IdealPresentation& ideal, int q, const SliceSampler& sampler, int budget)
{
    return summarize_inf(sample_restricted_delta1(ideal, q, sampler, budget), sampler);
}

HypersurfaceWitness hypersurface_curve_search(const HypersurfaceGerm& hyp, const Delta1Options& options)
{
    const int n = hyp.nvars();
    HypersurfaceWitness best;
    best.value = ExtendedRational::finite(Rational(0));
    const auto systems = coordinate_systems(n, options.hints);
    for (const auto& sys : systems) {
        Matrix inv = sys.inverse();
        for (const auto& a : primitive_rays(n, options.budget)) {
            CurveGerm curve = at_base_point(curve_in_system(inv, a, {}), hyp.base_point());
            ExtendedRational v = hypersurface_contact(curve, hyp);
            if (!best.witness || v > best.value) {
                best.value = v;
                best.witness = curve;
            }
        }
    }
    return best;
}

}  // namespace qtype
