#include "qtype/catlin.hpp"

#include "qtype/errors.hpp"
#include "qtype/parallel.hpp"

#include <algorithm>
#include <functional>

namespace qtype {

namespace {

std::vector<GaussianRational> unit_vector(int n, int j)
{
    std::vector<GaussianRational> e(static_cast<std::size_t>(n));
    e[static_cast<std::size_t>(j)] = GaussianRational(1);
    return e;
}

bool in_column_span(const std::vector<GaussianRational>& v, const Matrix& u)
{
    std::vector<std::vector<GaussianRational>> cols;
    for (int j = 0; j < u.cols(); ++j)
        cols.push_back(u.column(j));
    const int r = Matrix::from_columns(cols).rank();
    cols.push_back(v);
    return Matrix::from_columns(cols).rank() == r;
}

CurveGerm add_base_point(std::vector<UniSeries> comps, const std::vector<GaussianRational>& base, bool polynomial)
{
    for (std::size_t j = 0; j < base.size(); ++j)
        comps[j] += UniSeries::constant(base[j], comps[j].truncation());
    return CurveGerm(std::move(comps), base, polynomial);
}

}  // namespace

CurveGerm CylinderVariety::at(const std::vector<GaussianRational>& u) const
{
    if (static_cast<int>(u.size()) != directrix_.cols())
        throw Error(ErrorCode::arity_mismatch, "cylinder parameter count differs from q - 1");
    const int b = curve_.truncation();
    std::vector<UniSeries> comps = curve_.components();
    for (int j = 0; j < nvars(); ++j) {
        GaussianRational shift;
        for (int k = 0; k < directrix_.cols(); ++k)
            shift += directrix_(j, k) * u[static_cast<std::size_t>(k)];
        comps[static_cast<std::size_t>(j)] += UniSeries::constant(shift, b);
    }
    // psi(0, u) = x0 + U u, so only u = 0 gives a germ at x0; the constant
    // shift is kept as part of the components.
    std::vector<UniSeries> absolute;
    const auto& base = curve_.base_point();
    for (int j = 0; j < nvars(); ++j) {
        UniSeries s = comps[static_cast<std::size_t>(j)];
        if (!base.empty())
            s += UniSeries::constant(base[static_cast<std::size_t>(j)], b);
        absolute.push_back(std::move(s));
    }
    std::vector<GaussianRational> start;
    for (const auto& s : absolute)
        start.push_back(s.coefficient(0));
    return CurveGerm(std::move(absolute), std::move(start), curve_.is_polynomial());
}

CylinderVariety build_cylinder(const CurveGerm& gamma, const Matrix& directrix, int q)
{
    const int n = gamma.nvars();
    if (q < 2 || q > n - 1)
        throw Error(ErrorCode::invalid_argument, "cylinder dimension q must satisfy 2 <= q <= n - 1");
    if (directrix.rows() != n || directrix.cols() != q - 1)
        throw Error(ErrorCode::arity_mismatch, "directrix must be n x (q - 1)");
    if (directrix.rank() != q - 1)
        throw Error(ErrorCode::degenerate_slice, "directrix columns are linearly dependent");
    if (!gamma.is_polynomial())
        throw Error(ErrorCode::invalid_germ, "cylinder curves must have polynomial components");
    if (in_column_span(gamma.tangent_direction(), directrix))
        throw Error(ErrorCode::invalid_germ, "tangent direction of the curve lies in the directrix");
    return CylinderVariety(gamma, directrix, q);
}

CylinderCheck check_cylinder(const CylinderVariety& cylinder)
{
    CylinderCheck c;
    const int q = cylinder.q();
    c.reproduces_curve =
        cylinder.at(std::vector<GaussianRational>(static_cast<std::size_t>(q - 1))) ==
        add_base_point(cylinder.curve().components(), cylinder.curve().base_point(), cylinder.curve().is_polynomial());
    // Tangent space at x0: span of the curve tangent and the directrix
    // columns (d psi / d u_k = U_k).
    std::vector<std::vector<GaussianRational>> span{cylinder.curve().tangent_direction()};
    for (int k = 0; k < q - 1; ++k)
        span.push_back(cylinder.directrix().column(k));
    Matrix tangent = Matrix::from_columns(span);
    c.tangent_space_dimension = tangent.rank() == q;
    c.tangent_space_contains_directrix = true;
    for (int k = 0; k < q - 1; ++k)
        c.tangent_space_contains_directrix =
            c.tangent_space_contains_directrix && in_column_span(cylinder.directrix().column(k), tangent);
    return c;
}

IntersectionCurve slice_cylinder(const CylinderVariety& cylinder, const LinearSlice& slice)
{
    const int n = cylinder.nvars();
    const int k = cylinder.q() - 1;
    if (slice.nvars() != n || slice.count() != k)
        throw Error(ErrorCode::arity_mismatch, "slice must have q - 1 forms in n variables");
    const Matrix& w = slice.coefficients();
    const Matrix& u = cylinder.directrix();
    Matrix a = w * u;
    if (a.determinant().is_zero())
        throw Error(ErrorCode::degenerate_slice, "slice degenerate for this cylinder");
    Matrix ainv = a.inverse();

    const auto& gamma = cylinder.curve().components();
    const int b = cylinder.curve().truncation();
    std::vector<UniSeries> wg;
    for (int i = 0; i < k; ++i) {
        UniSeries s(b);
        for (int j = 0; j < n; ++j)
            if (!w(i, j).is_zero())
                s += gamma[static_cast<std::size_t>(j)].scaled(w(i, j));
        wg.push_back(std::move(s));
    }
    std::vector<UniSeries> params;
    for (int r = 0; r < k; ++r) {
        UniSeries s(b);
        for (int c = 0; c < k; ++c)
            if (!ainv(r, c).is_zero())
                s -= wg[static_cast<std::size_t>(c)].scaled(ainv(r, c));
        params.push_back(std::move(s));
    }
    std::vector<UniSeries> delta = gamma;
    for (int j = 0; j < n; ++j)
        for (int c = 0; c < k; ++c)
            if (!u(j, c).is_zero())
                delta[static_cast<std::size_t>(j)] += params[static_cast<std::size_t>(c)].scaled(u(j, c));
    return IntersectionCurve{
        add_base_point(std::move(delta), cylinder.curve().base_point(), cylinder.curve().is_polynomial()), slice,
        std::move(params)};
}

TauReport tau_slice(const IdealPresentation& ideal, const CylinderVariety& cylinder, const LinearSlice& slice)
{
    IntersectionCurve ic = slice_cylinder(cylinder, slice);
    TauReport r{{}, ideal_contact(ic.delta, ideal), slice};
    const Rational k(ic.delta.order());
    for (const auto& g : ideal.generators())
        r.per_generator.emplace_back(
            g, g.is_zero() ? ExtendedRational::infinite() : pullback_order(g, ic.delta).divided_by(k));
    return r;
}

ExtendedRational tau_slice_hypersurface(const HypersurfaceGerm& hyp, const CylinderVariety& cylinder,
                                        const LinearSlice& slice)
{
    return hypersurface_contact(slice_cylinder(cylinder, slice).delta, hyp);
}

namespace {

GenericValueReport sample_tau(const CylinderVariety& cylinder, const SliceSampler& sampler_in,
                              const std::function<ExtendedRational(const LinearSlice&)>& tau)
{
    SliceSampler sampler = sampler_in;
    sampler.q = cylinder.q();
    const int n = cylinder.nvars();
    struct Outcome {
        std::optional<SampleValue> value;
        int rejected = 0;
    };
    auto outcomes = parallel_map(static_cast<std::size_t>(sampler.samples), sampler.threads, [&](std::size_t i) {
        Outcome o;
        for (int attempt = 0; attempt < sampler.max_attempts; ++attempt) {
            Matrix m = sampler.draw(n, static_cast<int>(i), attempt);
            if (m.rank() != m.rows() || (m * cylinder.directrix()).determinant().is_zero()) {
                ++o.rejected;
                continue;
            }
            o.value = SampleValue{tau(LinearSlice(std::move(m))), true};
            break;
        }
        return o;
    });
    std::vector<std::optional<SampleValue>> values;
    int rejected = 0;
    for (auto& o : outcomes) {
        values.push_back(std::move(o.value));
        rejected += o.rejected;
    }
    return aggregate_samples(values, rejected, sampler, "mode");
}

}  // namespace

GenericValueReport tau_generic(const IdealPresentation& ideal, const CylinderVariety& cylinder,
                               const SliceSampler& sampler)
{
    return sample_tau(cylinder, sampler,
                      [&](const LinearSlice& s) { return tau_slice(ideal, cylinder, s).tau_ideal; });
}

GenericValueReport tau_generic_hypersurface(const HypersurfaceGerm& hyp, const CylinderVariety& cylinder,
                                            const SliceSampler& sampler)
{
    return sample_tau(cylinder, sampler,
                      [&](const LinearSlice& s) { return tau_slice_hypersurface(hyp, cylinder, s); });
}

std::vector<Matrix> candidate_directrices(const CurveGerm& gamma, const SliceCoordinates& coordinates, int q,
                                          int limit)
{
    const int n = gamma.nvars();
    const int k = q - 1;
    std::vector<Matrix> out;
    auto consider = [&](Matrix u) {
        if (static_cast<int>(out.size()) >= limit || u.rank() != k)
            return;
        if (in_column_span(gamma.tangent_direction(), u))
            return;
        if (std::find(out.begin(), out.end(), u) == out.end())
            out.push_back(std::move(u));
    };
    consider(coordinates.complement());

    // (q - 1)-subsets of coordinate axes, then of the columns of the slice
    // coordinate change.
    const Matrix& inv = coordinates.inverse();
    for (int pass = 0; pass < 2; ++pass) {
        std::vector<int> pick;
        std::function<void(int)> choose = [&](int start) {
            if (static_cast<int>(pick.size()) == k) {
                std::vector<std::vector<GaussianRational>> cols;
                for (int j : pick)
                    cols.push_back(pass == 0 ? unit_vector(n, j) : inv.column(j));
                consider(Matrix::from_columns(cols));
                return;
            }
            for (int j = start; j < n; ++j) {
                pick.push_back(j);
                choose(j + 1);
                pick.pop_back();
            }
        };
        choose(0);
    }
    return out;
}

namespace {

struct CatlinSample {
    ExtendedRational value;
    bool certified;
};

// Best generic tau over cylinders on gamma; stops once `ceiling` is reached.
template <typename TauFn>
std::optional<CatlinSample> best_cylinder(const CurveGerm& gamma, const SliceCoordinates& coords, int q,
                                          const SliceSampler& inner, const CatlinOptions& options,
                                          const ExtendedRational& ceiling, TauFn&& tau_generic_fn)
{
    std::optional<CatlinSample> best;
    for (const auto& u : candidate_directrices(gamma, coords, q, options.max_directrices)) {
        CylinderVariety cyl = build_cylinder(gamma, u, q);
        GenericValueReport rep;
        try {
            rep = tau_generic_fn(cyl, inner);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::degenerate_sampling)
                continue;
            throw;
        }
        if (!best || rep.modal_value > best->value)
            best = CatlinSample{rep.modal_value, !rep.low_confidence};
        if (best->value >= ceiling)
            break;
    }
    return best;
}

std::vector<std::optional<SampleValue>> to_values(const std::vector<std::optional<CatlinSample>>& samples)
{
    std::vector<std::optional<SampleValue>> values;
    for (const auto& s : samples) {
        if (s)
            values.push_back(SampleValue{s->value, s->certified});
        else
            values.emplace_back();
    }
    return values;
}

}  // namespace

GenericValueReport catlin_q_estimate(const RestrictedRun& run, const IdealPresentation& ideal, int q,
                                     const SliceSampler& sampler, const CatlinOptions& options)
{
    const int n = ideal.nvars();
    if (q < 2 || q > n - 1)
        throw Error(ErrorCode::invalid_argument, "catlin q-type estimation needs 2 <= q <= n - 1");
    auto samples = parallel_map(run.samples.size(), sampler.threads, [&](std::size_t i) {
        std::optional<CatlinSample> out;
        const auto& s = run.samples[i];
        if (!s || !s->delta1.witness)
            return out;
        CurveGerm gamma = s->delta1.witness->linear_image(s->coordinates.embedding());
        std::vector<UniSeries> comps = gamma.components();
        for (std::size_t j = 0; j < ideal.base_point().size(); ++j)
            comps[j] += UniSeries::constant(ideal.base_point()[j], comps[j].truncation());
        gamma = CurveGerm(std::move(comps), ideal.base_point());
        SliceSampler inner = sampler.derived(i, options.inner_samples);
        inner.q = q;
        out = best_cylinder(gamma, s->coordinates, q, inner, options, s->delta1.upper,
                            [&](const CylinderVariety& c, const SliceSampler& sm) { return tau_generic(ideal, c, sm); });
        if (out && !s->delta1.exact)
            out->certified = false;
        return out;
    });
    auto report = aggregate_samples(to_values(samples), run.rejected, sampler, "sup");
    return report;
}

GenericValueReport catlin_q_estimate(const IdealPresentation& ideal, int q, const SliceSampler& sampler,
                                     const CatlinOptions& options)
{
    if (q < 2 || q > ideal.nvars() - 1)
        throw Error(ErrorCode::invalid_argument, "catlin q-type estimation needs 2 <= q <= n - 1");
    return catlin_q_estimate(sample_restricted_delta1(ideal, q, sampler, options.budget), ideal, q, sampler, options);
}

GenericValueReport catlin_q_hypersurface(const HypersurfaceGerm& hyp, int q, const SliceSampler& sampler_in,
                                         const CatlinOptions& options)
{
    const int n = hyp.nvars();
    if (q < 2 || q > n - 1)
        throw Error(ErrorCode::invalid_argument, "catlin q-type estimation needs 2 <= q <= n - 1");
    SliceSampler sampler = sampler_in;
    sampler.q = q;
    struct Outcome {
        std::optional<CatlinSample> sample;
        int rejected = 0;
    };
    const auto& base = hyp.base_point();
    auto outcomes = parallel_map(static_cast<std::size_t>(sampler.samples), sampler.threads, [&](std::size_t i) {
        Outcome o;
        auto [slice, rejected] = sampler.draw_slice(n, static_cast<int>(i));
        o.rejected = rejected;
        if (!slice)
            return o;
        SliceCoordinates coords(*slice);
        HypersurfaceGerm restricted = hyp.transformed([&](const PolyC& p) { return coords.restrict(p); });
        Delta1Options opts;
        opts.budget = options.budget;
        opts.hints = coords.coordinate_images();
        HypersurfaceWitness w = hypersurface_curve_search(restricted, opts);
        if (!w.witness)
            return o;
        CurveGerm gamma = w.witness->linear_image(coords.embedding());
        std::vector<UniSeries> comps = gamma.components();
        for (std::size_t j = 0; j < base.size(); ++j)
            comps[j] += UniSeries::constant(base[j], comps[j].truncation());
        gamma = CurveGerm(std::move(comps), base);
        SliceSampler inner = sampler.derived(i, options.inner_samples);
        inner.q = q;
        o.sample = best_cylinder(gamma, coords, q, inner, options, ExtendedRational::infinite(),
                                 [&](const CylinderVariety& c, const SliceSampler& sm) {
                                     return tau_generic_hypersurface(hyp, c, sm);
                                 });
        // The restricted search value is only a lower bound.
        if (o.sample)
            o.sample->certified = false;
        return o;
    });
    std::vector<std::optional<CatlinSample>> samples;
    int rejected = 0;
    for (auto& o : outcomes) {
        samples.push_back(std::move(o.sample));
        rejected += o.rejected;
    }
    return aggregate_samples(to_values(samples), rejected, sampler, "sup");
}

}  // namespace qtype
