#pragma once

#include "qtype/extended.hpp"
#include "qtype/gaussian.hpp"
#include "qtype/poly.hpp"
#include "qtype/slicing.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qtype {

// An ideal of O_{x0} given by polynomial generators. Generators are stored
// translated so that the base point sits at the origin.
class IdealPresentation {
public:
    // Throws improper_ideal when a translated generator has a nonzero
    // constant term.
    IdealPresentation(int nvars, std::vector<PolyC> generators, std::vector<GaussianRational> base_point = {});
    explicit IdealPresentation(std::vector<PolyC> generators);

    int nvars() const noexcept { return nvars_; }
    const std::vector<PolyC>& generators() const noexcept { return generators_; }
    const std::vector<GaussianRational>& base_point() const noexcept { return base_point_; }
    bool at_origin() const;

    bool all_monomial() const;
    // Rank of the linear parts of the generators: the number of independent
    // linear forms the ideal contains up to a holomorphic change of coordinates.
    int linear_form_count() const;

    // The same ideal with extra generators (already centred at the origin).
    IdealPresentation augmented(const std::vector<PolyC>& extra) const;

private:
    int nvars_;
    std::vector<PolyC> generators_;
    std::vector<GaussianRational> base_point_;
};

struct Budget {
    std::int64_t max_steps = 500000;
    int max_degree = 400;
};

// Standard basis under the local anti-graded lexicographic order.
struct StandardBasisResult {
    int nvars = 0;
    std::vector<PolyC> basis;
    // Minimal generators of the leading ideal.
    std::vector<Exponent> leading_exponents;
    std::string order_spec = "anti-graded-lex";

    bool is_zero_dimensional() const;
    // Monomials outside the leading ideal; only for zero-dimensional ideals.
    std::vector<Exponent> staircase() const;
    ExtendedRational colength() const;
};

StandardBasisResult standard_basis(const IdealPresentation& ideal, const Budget& budget = {});

// Mora weak normal form of f against a standard basis. Zero iff f lies in
// the ideal generated by the basis in the local ring.
PolyC mora_normal_form(const PolyC& f, const std::vector<PolyC>& basis, const Budget& budget = {});

bool local_membership(const PolyC& f, const StandardBasisResult& sb, const Budget& budget = {});

// D(I, x0) = dim O/I: Finite(#staircase) or Infinite.
ExtendedRational multiplicity(const IdealPresentation& ideal, const Budget& budget = {});

bool is_zero_dimensional(const IdealPresentation& ideal, const Budget& budget = {});

// Multiplicity of (I, w_1, ..., w_{q-1}) over sampled non-degenerate forms.
// The modal value is the estimate; min_value is the infimum over the draws.
GenericValueReport generic_multiplicity(const IdealPresentation& ideal, int q, const SliceSampler& sampler,
                                        const Budget& budget = {});

}  // namespace qtype
