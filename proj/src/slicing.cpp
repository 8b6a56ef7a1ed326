#include "qtype/slicing.hpp"

#include "qtype/errors.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace qtype {

LinearSlice::LinearSlice(Matrix coefficients) : coefficients_(std::move(coefficients))
{
    if (coefficients_.rows() == 0)
        throw Error(ErrorCode::invalid_argument, "a slice needs at least one form");
    if (coefficients_.rank() != coefficients_.rows())
        throw Error(ErrorCode::degenerate_slice, "slice forms are linearly dependent");
}

LinearSlice LinearSlice::from_forms(const std::vector<PolyC>& forms)
{
    if (forms.empty())
        throw Error(ErrorCode::invalid_argument, "a slice needs at least one form");
    std::vector<std::vector<GaussianRational>> rows;
    for (const auto& f : forms) {
        if (!f.is_homogeneous_linear())
            throw Error(ErrorCode::invalid_argument, "slice forms must be homogeneous of degree one");
        if (f.nvars() != forms.front().nvars())
            throw Error(ErrorCode::arity_mismatch, "slice forms differ in arity");
        rows.push_back(f.linear_part());
    }
    return LinearSlice(Matrix::from_rows(rows));
}

std::vector<PolyC> LinearSlice::forms() const
{
    std::vector<PolyC> out;
    for (int i = 0; i < count(); ++i)
        out.push_back(PolyC::linear_form(coefficients_.row(i)));
    return out;
}

GaussianRational LinearSlice::apply(int form, const std::vector<GaussianRational>& v) const
{
    GaussianRational sum;
    for (int j = 0; j < nvars(); ++j)
        sum += coefficients_(form, j) * v[static_cast<std::size_t>(j)];
    return sum;
}

SliceCoordinates::SliceCoordinates(const LinearSlice& slice)
{
    const int n = slice.nvars();
    const int k = slice.count();
    kept_ = n - k;
    if (kept_ < 1)
        throw Error(ErrorCode::invalid_argument, "slice leaves no directions");
    std::vector<std::vector<GaussianRational>> rows;
    for (int i = 0; i < k; ++i)
        rows.push_back(slice.coefficients().row(i));
    std::vector<std::vector<GaussianRational>> chosen;
    for (int j = 0; j < n && static_cast<int>(chosen.size()) < kept_; ++j) {
        std::vector<GaussianRational> e(static_cast<std::size_t>(n));
        e[static_cast<std::size_t>(j)] = GaussianRational(1);
        auto trial = rows;
        trial.insert(trial.end(), chosen.begin(), chosen.end());
        trial.push_back(e);
        if (Matrix::from_rows(trial).rank() == static_cast<int>(trial.size()))
            chosen.push_back(std::move(e));
    }
    chosen.insert(chosen.end(), rows.begin(), rows.end());
    change_ = Matrix::from_rows(chosen);
    inverse_ = change_.inverse();
}

Matrix SliceCoordinates::embedding() const
{
    std::vector<std::vector<GaussianRational>> cols;
    for (int c = 0; c < kept_; ++c)
        cols.push_back(inverse_.column(c));
    return Matrix::from_columns(cols);
}

Matrix SliceCoordinates::complement() const
{
    std::vector<std::vector<GaussianRational>> cols;
    for (int c = kept_; c < nvars(); ++c)
        cols.push_back(inverse_.column(c));
    return Matrix::from_columns(cols);
}

PolyC SliceCoordinates::restrict(const PolyC& p) const
{
    return restrict_leading(linear_substitute(p, inverse_), kept_);
}

std::vector<PolyC> SliceCoordinates::coordinate_images() const
{
    std::vector<PolyC> out;
    for (int j = 0; j < nvars(); ++j) {
        auto row = inverse_.row(j);
        row.resize(static_cast<std::size_t>(kept_));
        out.push_back(PolyC::linear_form(row));
    }
    return out;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt)
{
    // splitmix64 finalizer over the combined words.
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Matrix SliceSampler::draw(int nvars, int index, int attempt) const
{
    if (q < 2 || q > nvars)
        throw Error(ErrorCode::invalid_argument, "q must satisfy 2 <= q <= n");
    if (range < 0)
        throw Error(ErrorCode::invalid_argument, "coefficient range must be nonnegative");
    std::mt19937_64 rng(mix_seed(mix_seed(seed, static_cast<std::uint64_t>(index)),
                                 static_cast<std::uint64_t>(attempt)));
    std::uniform_int_distribution<long> dist(-range, range);
    Matrix m(q - 1, nvars);
    for (int i = 0; i < q - 1; ++i)
        for (int j = 0; j < nvars; ++j)
            m(i, j) = GaussianRational(dist(rng));
    return m;
}

std::pair<std::optional<LinearSlice>, int> SliceSampler::draw_slice(int nvars, int index) const
{
    int rejected = 0;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        Matrix m = draw(nvars, index, attempt);
        if (m.rank() == m.rows())
            return {LinearSlice(std::move(m)), rejected};
        ++rejected;
    }
    return {std::nullopt, rejected};
}

SliceSampler SliceSampler::derived(std::uint64_t salt, int samples_override) const
{
    SliceSampler s = *this;
    s.seed = mix_seed(seed ^ 0xA5A5A5A5A5A5A5A5ULL, salt);
    s.samples = samples_override;
    s.threads = 1;
    return s;
}

GenericValueReport aggregate_samples(const std::vector<std::optional<SampleValue>>& values, int rejected,
                                     const SliceSampler& sampler, const std::string& estimator)
{
    GenericValueReport r;
    r.estimator = estimator;
    r.seed = sampler.seed;
    r.rejected = rejected;
    std::map<ExtendedRational, int> counts;
    for (const auto& v : values)
        if (v) {
            ++counts[v->value];
            ++r.samples_used;
            if (!v->certified)
                ++r.uncertified;
        }
    if (r.samples_used == 0)
        throw Error(ErrorCode::degenerate_sampling, "every sampled slice was degenerate");

    int best = 0;
    for (const auto& [value, count] : counts) {
        r.histogram.emplace_back(value, count);
        if (count > best) {
            best = count;
            r.modal_value = value;
        }
    }
    r.min_value = counts.begin()->first;
    r.max_value = counts.rbegin()->first;
    r.frequency = Rational(best, r.samples_used);
    r.frequency.canonicalize();
    r.low_confidence = r.frequency.get_d() < sampler.confidence_threshold;
    if (estimator == "min")
        r.estimate = r.min_value;
    else if (estimator == "sup")
        r.estimate = r.max_value;
    else
        r.estimate = r.modal_value;
    for (const auto& v : values)
        if (v && v->value == r.estimate && !v->certified)
            r.exact = false;
    return r;
}

}  // namespace qtype
