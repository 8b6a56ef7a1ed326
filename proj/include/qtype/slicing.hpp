#pragma once

#include "qtype/extended.hpp"
#include "qtype/matrix.hpp"
#include "qtype/poly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qtype {

// A non-degenerate set {w_1, ..., w_k} of linear forms through the origin.
class LinearSlice {
public:
    // Rows are the coefficient vectors of the forms. Throws degenerate_slice
    // when the rows are not linearly independent.
    explicit LinearSlice(Matrix coefficients);
    static LinearSlice from_forms(const std::vector<PolyC>& forms);

    int nvars() const noexcept { return coefficients_.cols(); }
    int count() const noexcept { return coefficients_.rows(); }
    const Matrix& coefficients() const noexcept { return coefficients_; }
    std::vector<PolyC> forms() const;

    GaussianRational apply(int form, const std::vector<GaussianRational>& v) const;

private:
    Matrix coefficients_;
};

// Coordinates y = M z in which the slice forms are the trailing k
// coordinates; the leading rows of M are standard basis vectors completing
// the forms to a basis. The slice subspace H = {w = 0} is parametrized by
// the leading m = n - k coordinates.
class SliceCoordinates {
public:
    explicit SliceCoordinates(const LinearSlice& slice);

    int nvars() const noexcept { return change_.rows(); }
    int kept() const noexcept { return kept_; }
    const Matrix& change() const noexcept { return change_; }
    const Matrix& inverse() const noexcept { return inverse_; }

    // z = embedding * y for y in the slice subspace (n x m).
    Matrix embedding() const;
    // Columns spanning a complement of the slice subspace (n x k); w_i of
    // column j is the Kronecker delta.
    Matrix complement() const;

    // Restriction of p to the slice subspace, in the leading coordinates.
    PolyC restrict(const PolyC& p) const;
    // Images of z_1..z_n restricted to the slice: linear forms in m variables.
    std::vector<PolyC> coordinate_images() const;

private:
    int kept_;
    Matrix change_;
    Matrix inverse_;
};

// Seeded draws of q - 1 linear forms with integer coefficients in [-R, R].
struct SliceSampler {
    std::uint64_t seed = 1;
    int samples = 100;
    long range = 10000;
    int q = 2;
    unsigned threads = 0;
    int max_attempts = 8;
    double confidence_threshold = 0.9;

    // Raw draw for (sample index, attempt); may be rank-deficient.
    Matrix draw(int nvars, int index, int attempt) const;
    // First non-degenerate draw for this index, with the number of rejected
    // attempts. nullopt when every attempt was degenerate.
    std::pair<std::optional<LinearSlice>, int> draw_slice(int nvars, int index) const;

    // Sampler for a nested experiment, deterministic in (seed, salt).
    SliceSampler derived(std::uint64_t salt, int samples_override) const;
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

// Sampled estimate of a generic value.
struct GenericValueReport {
    // Which statistic `estimate` carries: "mode", "min" or "sup".
    std::string estimator = "mode";
    ExtendedRational estimate;
    ExtendedRational modal_value;
    ExtendedRational min_value;
    ExtendedRational max_value;
    Rational frequency;
    int samples_used = 0;
    int rejected = 0;
    std::uint64_t seed = 0;
    bool low_confidence = false;
    // Every sample whose value equals the estimate was certified exactly.
    bool exact = true;
    int uncertified = 0;
    std::vector<std::pair<ExtendedRational, int>> histogram;

    bool min_equals_mode() const { return min_value == modal_value; }
};

struct SampleValue {
    ExtendedRational value;
    bool certified = true;
};

// Aggregate per-sample values (nullopt = rejected sample) deterministically.
// Throws degenerate_sampling when no sample survived.
GenericValueReport aggregate_samples(const std::vector<std::optional<SampleValue>>& values, int rejected,
                                     const SliceSampler& sampler, const std::string& estimator);

}  // namespace qtype
