#pragma once

#include "qtype/contact.hpp"
#include "qtype/extended.hpp"
#include "qtype/local_algebra.hpp"
#include "qtype/slicing.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qtype {

enum class UpperProvenance {
    none,            // no finite upper bound known
    multiplicity,    // Delta_1 <= D(I, x0)
    pure_powers,     // l_k^{p_k} in I for independent forms l_k: Delta_1 <= max p_k
    univariate,      // one variable: Delta_1 is the order of the ideal
    zero_set_curve,  // a curve inside V(I): Delta_1 = infinity
};

std::string provenance_name(UpperProvenance p);

struct Delta1Report {
    ExtendedRational lower;
    std::optional<CurveGerm> witness;
    ExtendedRational upper = ExtendedRational::infinite();
    UpperProvenance provenance = UpperProvenance::none;
    // Forms and powers of a pure-power certificate.
    std::vector<PolyC> certificate_forms;
    std::vector<int> certificate_powers;
    ExtendedRational multiplicity = ExtendedRational::infinite();
    int nvars = 0;
    int linear_forms = 0;
    bool exact = false;

    // Largest integer r with r^{n-k} <= D, a lower bound for Delta_1 implied
    // by D <= Delta_1^{n-k}. Absent when D is infinite or n == k.
    std::optional<long> root_lower_bound() const;
    // lower <= D, and D <= lower^{n-k} when the value is exact.
    bool chain_holds() const;
};

struct Delta1Options {
    int budget = 8;
    // Linear forms whose vanishing orders along a curve tend to matter, such
    // as the images of the original coordinates after restricting to a slice.
    std::vector<PolyC> hints;
    Budget algebra_budget;
};

// Exhaustive search over monomial curves (t^{a_1}, ..., t^{a_n}), a_j in
// [0, budget], a_j = 0 meaning a zero component. Generators must be monomials.
Delta1Report delta1_monomial(const IdealPresentation& ideal, int budget);

// Certified bounds lower <= Delta_1 <= upper for an arbitrary ideal.
Delta1Report delta1_bounds(const IdealPresentation& ideal, const Delta1Options& options);
inline Delta1Report delta1_bounds(const IdealPresentation& ideal, int budget)
{
    return delta1_bounds(ideal, Delta1Options{budget, {}, {}});
}

// One sampled slice and the Delta_1 data of the restricted ideal.
struct RestrictedSample {
    LinearSlice slice;
    SliceCoordinates coordinates;
    IdealPresentation restricted;
    Delta1Report delta1;
};

// Per-sample restricted Delta_1 computations shared by the q-type
// estimators; nullopt entries are samples whose draws were all degenerate.
struct RestrictedRun {
    std::vector<std::optional<RestrictedSample>> samples;
    int rejected = 0;
};

RestrictedRun sample_restricted_delta1(const IdealPresentation& ideal, int q, const SliceSampler& sampler,
                                       int budget);

// gen.val of Delta_1((I, w_1, ..., w_{q-1})): the modal per-sample value.
GenericValueReport tilde_deltaq(const IdealPresentation& ideal, int q, const SliceSampler& sampler, int budget);
// Minimum per-sample value: an upper estimate of the infimum Delta_q.
GenericValueReport deltaq_sampled_inf(const IdealPresentation& ideal, int q, const SliceSampler& sampler,
                                      int budget);

GenericValueReport summarize_tilde(const RestrictedRun& run, const SliceSampler& sampler);
GenericValueReport summarize_inf(const RestrictedRun& run, const SliceSampler& sampler);

// Best normalized contact with a hypersurface over the same curve families
// used for ideals. Lower bound only.
struct HypersurfaceWitness {
    ExtendedRational value;
    std::optional<CurveGerm> witness;
};
HypersurfaceWitness hypersurface_curve_search(const HypersurfaceGerm& hyp, const Delta1Options& options);

}  // namespace qtype
