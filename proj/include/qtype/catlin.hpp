#pragma once

#include "qtype/contact.hpp"
#include "qtype/extended.hpp"
#include "qtype/local_algebra.hpp"
#include "qtype/matrix.hpp"
#include "qtype/slicing.hpp"
#include "qtype/types_engine.hpp"

#include <utility>
#include <vector>

namespace qtype {

// psi(t, u) = Gamma(t) + U u: a q-dimensional cylinder through Gamma whose
// directrix is the column span of U (n x (q - 1)).
class CylinderVariety {
public:
    const CurveGerm& curve() const noexcept { return curve_; }
    const Matrix& directrix() const noexcept { return directrix_; }
    int q() const noexcept { return q_; }
    int nvars() const noexcept { return curve_.nvars(); }

    // Point psi(t, u) as series in t for constant u.
    CurveGerm at(const std::vector<GaussianRational>& u) const;

private:
    friend CylinderVariety build_cylinder(const CurveGerm&, const Matrix&, int);
    CylinderVariety(CurveGerm curve, Matrix directrix, int q)
        : curve_(std::move(curve)), directrix_(std::move(directrix)), q_(q)
    {
    }

    CurveGerm curve_;
    Matrix directrix_;
    int q_;
};

// Throws invalid_argument unless 2 <= q <= n - 1 and U is n x (q - 1);
// degenerate_slice if rank U < q - 1; invalid_germ if the tangent
// direction of Gamma lies in the span of U.
CylinderVariety build_cylinder(const CurveGerm& gamma, const Matrix& directrix, int q);

struct CylinderCheck {
    bool reproduces_curve = false;
    bool tangent_space_contains_directrix = false;
    bool tangent_space_dimension = false;
    bool ok() const { return reproduces_curve && tangent_space_contains_directrix && tangent_space_dimension; }
};
CylinderCheck check_cylinder(const CylinderVariety& cylinder);

struct IntersectionCurve {
    CurveGerm delta;
    LinearSlice slice;
    std::vector<UniSeries> parameters;
};

// Solves w_i(Gamma(t) + U u(t)) = 0 for u(t); throws degenerate_slice when
// the matrix (w_i(U_j)) is singular.
IntersectionCurve slice_cylinder(const CylinderVariety& cylinder, const LinearSlice& slice);

struct TauReport {
    std::vector<std::pair<PolyC, ExtendedRational>> per_generator;
    ExtendedRational tau_ideal;
    LinearSlice slice;
};

TauReport tau_slice(const IdealPresentation& ideal, const CylinderVariety& cylinder, const LinearSlice& slice);
ExtendedRational tau_slice_hypersurface(const HypersurfaceGerm& hyp, const CylinderVariety& cylinder,
                                        const LinearSlice& slice);

// Modal tau over sampled slices; singular slices are rejected and redrawn.
GenericValueReport tau_generic(const IdealPresentation& ideal, const CylinderVariety& cylinder,
                               const SliceSampler& sampler);
GenericValueReport tau_generic_hypersurface(const HypersurfaceGerm& hyp, const CylinderVariety& cylinder,
                                            const SliceSampler& sampler);

struct CatlinOptions {
    int budget = 8;
    // Slices per inner tau_generic run.
    int inner_samples = 12;
    int max_directrices = 16;
};

// Lower estimate of D_q: per sampled slice, the restricted extremal curve,
// cylinders over it and the generic tau; the supremum over samples.
GenericValueReport catlin_q_estimate(const IdealPresentation& ideal, int q, const SliceSampler& sampler,
                                     const CatlinOptions& options = {});
GenericValueReport catlin_q_estimate(const RestrictedRun& run, const IdealPresentation& ideal, int q,
                                     const SliceSampler& sampler, const CatlinOptions& options = {});
GenericValueReport catlin_q_hypersurface(const HypersurfaceGerm& hyp, int q, const SliceSampler& sampler,
                                         const CatlinOptions& options = {});

// Candidate directrices for a cylinder over gamma transversal to the slice
// subspace of `coordinates`.
std::vector<Matrix> candidate_directrices(const CurveGerm& gamma, const SliceCoordinates& coordinates, int q,
                                          int limit);

}  // namespace qtype
