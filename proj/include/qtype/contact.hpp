#pragma once

#include "qtype/extended.hpp"
#include "qtype/local_algebra.hpp"
#include "qtype/poly.hpp"
#include "qtype/series.hpp"
#include "qtype/slicing.hpp"

#include <optional>
#include <vector>

namespace qtype {

// A parametrized curve germ phi with phi(0) = x0. Components are stored
// translated so that they vanish at t = 0.
class CurveGerm {
public:
    // `components` are the absolute coordinates phi_j(t). `polynomial` marks
    // components known exactly (finite polynomials), which lets zero
    // truncated pullbacks be re-verified without truncation.
    CurveGerm(std::vector<UniSeries> components, std::vector<GaussianRational> base_point = {},
              bool polynomial = true);
    // Components as univariate polynomials in t.
    static CurveGerm from_polynomials(const std::vector<PolyC>& components, int truncation = default_truncation,
                                      std::vector<GaussianRational> base_point = {});
    // (c_1 t^{a_1}, ..., c_n t^{a_n}); a_j == 0 means the component is zero.
    static CurveGerm monomial(const std::vector<int>& exponents, int truncation = default_truncation,
                              const std::vector<GaussianRational>& coefficients = {});

    int nvars() const noexcept { return static_cast<int>(components_.size()); }
    const std::vector<UniSeries>& components() const noexcept { return components_; }
    const std::vector<GaussianRational>& base_point() const noexcept { return base_point_; }
    bool is_polynomial() const noexcept { return polynomial_; }
    int truncation() const;
    // Highest stored power over all components.
    int degree() const;

    // ord_0 phi as an integer.
    int order() const;
    // Coefficient vector at t^order().
    std::vector<GaussianRational> tangent_direction() const;

    CurveGerm with_truncation(int b) const;
    CurveGerm reparametrized(int k) const;
    // Linear image z -> A phi (A maps C^n to C^m); the result is at the origin.
    CurveGerm linear_image(const Matrix& a) const;

    friend bool operator==(const CurveGerm& a, const CurveGerm& b) = default;

private:
    std::vector<UniSeries> components_;
    std::vector<GaussianRational> base_point_;
    bool polynomial_;
};

// Real hypersurface r = Re h + |f|^2 - |g|^2 near x0.
class HypersurfaceGerm {
public:
    HypersurfaceGerm(PolyC h, std::vector<PolyC> f, std::vector<PolyC> g,
                     std::vector<GaussianRational> base_point = {});

    int nvars() const noexcept { return h_.nvars(); }
    const PolyC& h() const noexcept { return h_; }
    const std::vector<PolyC>& f() const noexcept { return f_; }
    const std::vector<PolyC>& g() const noexcept { return g_; }
    const std::vector<GaussianRational>& base_point() const noexcept { return base_point_; }
    int degree() const;

    // The same hypersurface with every polynomial mapped through `map`.
    template <typename Fn>
    HypersurfaceGerm transformed(Fn map) const
    {
        std::vector<PolyC> f;
        std::vector<PolyC> g;
        for (const auto& p : f_)
            f.push_back(map(p));
        for (const auto& p : g_)
            g.push_back(map(p));
        return HypersurfaceGerm(map(h_), std::move(f), std::move(g));
    }

private:
    PolyC h_;
    std::vector<PolyC> f_;
    std::vector<PolyC> g_;
    std::vector<GaussianRational> base_point_;
};

struct QPositivityReport {
    bool applicable = false;
    ExtendedRational order;
    std::optional<int> half_order;
    bool condition_i = false;
    bool condition_ii = false;
    // Applicable but the pullback of r vanishes (to the truncation or
    // identically): neither condition can be decided.
    bool indeterminate = false;
    bool verdict = true;
};

ExtendedRational curve_order(const CurveGerm& phi);

// Order of p along phi, re-verified without truncation for polynomial data.
ExtendedRational pullback_order(const PolyC& p, const CurveGerm& phi);

// inf_{g in I} ord phi*g / ord phi, attained on the generators.
ExtendedRational ideal_contact(const CurveGerm& phi, const IdealPresentation& ideal);

HermitianSeries hypersurface_pullback(const CurveGerm& phi, const HypersurfaceGerm& hyp);
// Hermitian order of phi*r, with the same exact re-verification policy.
ExtendedRational hypersurface_pullback_order(const CurveGerm& phi, const HypersurfaceGerm& hyp);
ExtendedRational hypersurface_contact(const CurveGerm& phi, const HypersurfaceGerm& hyp);

QPositivityReport q_positivity(const CurveGerm& phi, const HypersurfaceGerm& hyp, const LinearSlice& slice);

}  // namespace qtype
