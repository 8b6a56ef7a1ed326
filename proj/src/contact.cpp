#include "qtype/contact.hpp"

#include "qtype/errors.hpp"

#include <algorithm>

namespace qtype {

CurveGerm::CurveGerm(std::vector<UniSeries> components, std::vector<GaussianRational> base_point, bool polynomial)
    : base_point_(std::move(base_point)), polynomial_(polynomial)
{
    if (components.empty())
        throw Error(ErrorCode::invalid_germ, "a curve needs at least one component");
    if (base_point_.empty())
        base_point_.assign(components.size(), GaussianRational());
    if (base_point_.size() != components.size())
        throw Error(ErrorCode::arity_mismatch, "base point has wrong dimension");
    bool all_zero = true;
    for (std::size_t j = 0; j < components.size(); ++j) {
        UniSeries c = components[j] - UniSeries::constant(base_point_[j], components[j].truncation());
        if (!c.coefficient(0).is_zero())
            throw Error(ErrorCode::invalid_germ, "curve does not pass through its base point");
        all_zero = all_zero && c.is_zero();
        components_.push_back(std::move(c));
    }
    if (all_zero)
        throw Error(ErrorCode::invalid_germ, "constant germ: every component vanishes to the truncation");
}

CurveGerm CurveGerm::from_polynomials(const std::vector<PolyC>& components, int truncation,
                                      std::vector<GaussianRational> base_point)
{
    std::vector<UniSeries> series;
    int deg = 0;
    for (const auto& p : components) {
        series.push_back(UniSeries::from_poly(p, truncation));
        deg = std::max(deg, p.degree());
    }
    return CurveGerm(std::move(series), std::move(base_point), deg < truncation);
}

CurveGerm CurveGerm::monomial(const std::vector<int>& exponents, int truncation,
                              const std::vector<GaussianRational>& coefficients)
{
    std::vector<UniSeries> series;
    for (std::size_t j = 0; j < exponents.size(); ++j) {
        GaussianRational c = coefficients.empty() ? GaussianRational(1) : coefficients[j];
        if (exponents[j] <= 0)
            series.emplace_back(truncation);
        else
            series.push_back(UniSeries::monomial(c, exponents[j], truncation));
    }
    return CurveGerm(std::move(series));
}

int CurveGerm::truncation() const
{
    int b = components_.front().truncation();
    for (const auto& c : components_)
        b = std::min(b, c.truncation());
    return b;
}

int CurveGerm::degree() const
{
    int d = 0;
    for (const auto& c : components_)
        d = std::max(d, c.degree());
    return d;
}

int CurveGerm::order() const
{
    int best = -1;
    for (const auto& c : components_) {
        if (c.is_zero())
            continue;
        for (int k = 0; k <= c.degree(); ++k)
            if (!c.coefficient(k).is_zero()) {
                if (best < 0 || k < best)
                    best = k;
                break;
            }
    }
    if (best < 0)
        throw Error(ErrorCode::invalid_germ, "constant germ has no order");
    return best;
}

std::vector<GaussianRational> CurveGerm::tangent_direction() const
{
    int k = order();
    std::vector<GaussianRational> v;
    for (const auto& c : components_)
        v.push_back(c.coefficient(k));
    return v;
}

CurveGerm CurveGerm::with_truncation(int b) const
{
    std::vector<UniSeries> out;
    for (std::size_t j = 0; j < components_.size(); ++j)
        out.push_back(components_[j].with_truncation(b) + UniSeries::constant(base_point_[j], b));
    return CurveGerm(std::move(out), base_point_, polynomial_);
}

CurveGerm CurveGerm::reparametrized(int k) const
{
    std::vector<UniSeries> out;
    for (std::size_t j = 0; j < components_.size(); ++j) {
        auto s = components_[j].reparametrized(k);
        out.push_back(s + UniSeries::constant(base_point_[j], s.truncation()));
    }
    return CurveGerm(std::move(out), base_point_, polynomial_);
}

CurveGerm CurveGerm::linear_image(const Matrix& a) const
{
    if (a.cols() != nvars())
        throw Error(ErrorCode::arity_mismatch, "linear image of a curve with the wrong dimension");
    const int b = truncation();
    std::vector<UniSeries> out;
    for (int i = 0; i < a.rows(); ++i) {
        UniSeries s(b);
        for (int j = 0; j < a.cols(); ++j)
            if (!a(i, j).is_zero())
                s += components_[static_cast<std::size_t>(j)].scaled(a(i, j));
        out.push_back(std::move(s));
    }
    return CurveGerm(std::move(out), {}, polynomial_);
}

HypersurfaceGerm::HypersurfaceGerm(PolyC h, std::vector<PolyC> f, std::vector<PolyC> g,
                                   std::vector<GaussianRational> base_point)
    : h_(std::move(h)), base_point_(std::move(base_point))
{
    const int n = h_.nvars();
    if (base_point_.empty())
        base_point_.assign(static_cast<std::size_t>(n), GaussianRational());
    if (static_cast<int>(base_point_.size()) != n)
        throw Error(ErrorCode::arity_mismatch, "base point has wrong dimension");
    auto centre = [&](const PolyC& p) {
        if (p.nvars() != n)
            throw Error(ErrorCode::arity_mismatch, "hypersurface data differ in arity");
        PolyC c = translate(p, base_point_);
        if (!c.constant_term().is_zero())
            throw Error(ErrorCode::invalid_germ, "hypersurface data must vanish at the base point");
        return c;
    };
    h_ = centre(h_);
    for (auto& p : f)
        f_.push_back(centre(p));
    for (auto& p : g)
        g_.push_back(centre(p));
}

int HypersurfaceGerm::degree() const
{
    int d = std::max(0, h_.degree());
    for (const auto& p : f_)
        d = std::max(d, p.degree());
    for (const auto& p : g_)
        d = std::max(d, p.degree());
    return d;
}

ExtendedRational curve_order(const CurveGerm& phi)
{
    return ExtendedRational::finite(Rational(phi.order()));
}

namespace {

void check_base(const std::vector<GaussianRational>& a, const std::vector<GaussianRational>& b)
{
    if (a.size() != b.size())
        throw Error(ErrorCode::arity_mismatch, "curve and target live in different dimensions");
    if (a != b)
        throw Error(ErrorCode::invalid_argument, "curve and target have different base points");
}

}  // namespace

ExtendedRational pullback_order(const PolyC& p, const CurveGerm& phi)
{
    if (p.nvars() != phi.nvars())
        throw Error(ErrorCode::arity_mismatch, "curve dimension does not match polynomial arity");
    auto order = series_order(compose(p, phi.components()));
    if (!order.is_at_least() || !phi.is_polynomial())
        return order;
    const int exact_bound = std::max(0, p.degree()) * phi.degree() + 1;
    if (exact_bound <= phi.truncation())
        return ExtendedRational::infinite();
    order = series_order(compose(p, phi.with_truncation(exact_bound).components()));
    return order.is_at_least() ? ExtendedRational::infinite() : order;
}

ExtendedRational ideal_contact(const CurveGerm& phi, const IdealPresentation& ideal)
{
    check_base(phi.base_point(), ideal.base_point());
    const Rational k(phi.order());
    ExtendedRational best = ExtendedRational::infinite();
    for (const auto& g : ideal.generators()) {
        if (g.is_zero())
            continue;
        best = std::min(best, pullback_order(g, phi).divided_by(k));
    }
    return best;
}

HermitianSeries hypersurface_pullback(const CurveGerm& phi, const HypersurfaceGerm& hyp)
{
    check_base(phi.base_point(), hyp.base_point());
    return hermitian_pullback(hyp.h(), hyp.f(), hyp.g(), phi.components());
}

ExtendedRational hypersurface_pullback_order(const CurveGerm& phi, const HypersurfaceGerm& hyp)
{
    auto order = hermitian_order(hypersurface_pullback(phi, hyp));
    if (!order.is_at_least() || !phi.is_polynomial())
        return order;
    const int exact_bound = 2 * hyp.degree() * phi.degree() + 1;
    if (exact_bound <= phi.truncation())
        return ExtendedRational::infinite();
    order = hermitian_order(hypersurface_pullback(phi.with_truncation(exact_bound), hyp));
    return order.is_at_least() ? ExtendedRational::infinite() : order;
}

ExtendedRational hypersurface_contact(const CurveGerm& phi, const HypersurfaceGerm& hyp)
{
    return hypersurface_pullback_order(phi, hyp).divided_by(Rational(phi.order()));
}

QPositivityReport q_positivity(const CurveGerm& phi, const HypersurfaceGerm& hyp, const LinearSlice& slice)
{
    if (slice.nvars() != phi.nvars() || hyp.nvars() != phi.nvars())
        throw Error(ErrorCode::arity_mismatch, "curve, hypersurface and slice differ in dimension");
    QPositivityReport r;
    bool h_vanishes = pullback_order(hyp.h(), phi).is_infinite();
    bool in_slice = true;
    for (const auto& w : slice.forms())
        in_slice = in_slice && pullback_order(w, phi).is_infinite();
    r.applicable = h_vanishes && in_slice;
    if (!r.applicable)
        return r;  // vacuous

    auto series = hypersurface_pullback(phi, hyp);
    r.order = hypersurface_pullback_order(phi, hyp);
    if (!r.order.is_finite()) {
        r.indeterminate = true;
        r.verdict = false;
        return r;
    }
    const int order = static_cast<int>(r.order.value().get_num().get_si());
    if (order >= series.truncation())
        series = hypersurface_pullback(phi.with_truncation(order + 1), hyp);
    r.condition_i = order % 2 == 0;
    if (r.condition_i) {
        r.half_order = order / 2;
        r.condition_ii = !series.coefficient(order / 2, order / 2).is_zero();
    }
    r.verdict = r.condition_i && r.condition_ii;
    return r;
}

}  // namespace qtype
