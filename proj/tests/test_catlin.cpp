#include "qtype/catlin.hpp"
#include "qtype/errors.hpp"

#include <doctest.h>

#include <optional>

using namespace qtype;

namespace {

PolyC z(int n, int j) { return PolyC::variable(n, j); }
PolyC mono(int n, Exponent e) { return PolyC::monomial(n, std::move(e)); }
ExtendedRational fin(long a, long b = 1) { return ExtendedRational::finite(Rational(a, b)); }

Matrix axis(int n, int j)
{
    std::vector<GaussianRational> col(static_cast<std::size_t>(n));
    col[static_cast<std::size_t>(j)] = GaussianRational(1);
    return Matrix::from_columns({col});
}

std::vector<std::string> components(const CurveGerm& c)
{
    std::vector<std::string> out;
    for (const auto& s : c.components())
        out.push_back(s.to_string());
    return out;
}

std::optional<ErrorCode> code_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

SliceSampler sampler(int samples, std::uint64_t seed = 7)
{
    SliceSampler s;
    s.samples = samples;
    s.seed = seed;
    return s;
}

// The cylinder (t^2, t^3, u).
CylinderVariety cusp_cylinder() { return build_cylinder(CurveGerm::monomial({2, 3, 0}), axis(3, 2), 2); }

}  // namespace

TEST_CASE("build_cylinder assembles psi(t, u) = Gamma(t) + U u")
{
    auto c = cusp_cylinder();
    CHECK(c.q() == 2);
    CHECK(c.nvars() == 3);
    CHECK(c.at({GaussianRational(0)}) == c.curve());
    CHECK(check_cylinder(c).ok());

    auto twisted = build_cylinder(CurveGerm::monomial({1, 2, 3}), axis(3, 1), 2);
    CHECK(check_cylinder(twisted).ok());
    CHECK(components(twisted.curve()) == std::vector<std::string>{"t", "t^2", "t^3"});
}

TEST_CASE("build_cylinder rejects bad directrices")
{
    CHECK(code_of([] { build_cylinder(CurveGerm::monomial({0, 0, 1}), axis(3, 2), 2); }) == ErrorCode::invalid_germ);
    CHECK(code_of([] { build_cylinder(CurveGerm::monomial({2, 3, 0}), Matrix(3, 1), 2); }) ==
          ErrorCode::degenerate_slice);
    CHECK(code_of([] { build_cylinder(CurveGerm::monomial({2, 3, 0}), axis(3, 2), 3); }) ==
          ErrorCode::invalid_argument);
    CHECK(code_of([] { build_cylinder(CurveGerm::monomial({2, 3, 0}), axis(4, 2), 2); }) ==
          ErrorCode::arity_mismatch);
}

TEST_CASE("slicing the cusp cylinder")
{
    auto c = cusp_cylinder();
    auto a = slice_cylinder(c, LinearSlice::from_forms({z(3, 2) - z(3, 0)}));
    CHECK(components(a.delta) == std::vector<std::string>{"t^2", "t^3", "t^2"});
    REQUIRE(a.parameters.size() == 1);
    CHECK(a.parameters[0].to_string() == "t^2");

    auto b = slice_cylinder(c, LinearSlice::from_forms({z(3, 1) - z(3, 2)}));
    CHECK(components(b.delta) == std::vector<std::string>{"t^2", "t^3", "t^3"});
    CHECK(b.parameters[0].to_string() == "t^3");

    for (const auto& s : {a, b})
        for (const auto& w : s.slice.forms())
            CHECK(pullback_order(w, s.delta).is_infinite());

    CHECK(code_of([&] { slice_cylinder(c, LinearSlice::from_forms({z(3, 0)})); }) == ErrorCode::degenerate_slice);
}

TEST_CASE("tau along one slice")
{
    auto c = cusp_cylinder();
    auto s = LinearSlice::from_forms({z(3, 2) - z(3, 0)});
    CHECK(tau_slice(IdealPresentation(3, {z(3, 1)}), c, s).tau_ideal == fin(3, 2));
    CHECK(tau_slice(IdealPresentation(3, {mono(3, {0, 2, 0}) - mono(3, {3, 0, 0})}), c, s).tau_ideal.is_infinite());
    auto r = tau_slice(IdealPresentation(3, {z(3, 0), z(3, 1), z(3, 2)}), c, s);
    CHECK(r.tau_ideal == fin(1));
    REQUIRE(r.per_generator.size() == 3);
    ExtendedRational least = ExtendedRational::infinite();
    for (const auto& [g, v] : r.per_generator)
        least = std::min(least, v);
    CHECK(least == r.tau_ideal);
}

TEST_CASE("generic tau over sampled slices")
{
    auto c = cusp_cylinder();
    auto a = tau_generic(IdealPresentation(3, {z(3, 1)}), c, sampler(200));
    CHECK(a.estimate == fin(3, 2));
    CHECK(a.frequency.get_d() >= 0.99);
    CHECK(a.rejected <= 2);

    auto b = tau_generic(IdealPresentation(3, {z(3, 2)}), c, sampler(50));
    CHECK(b.estimate == fin(1));
    CHECK(b.frequency == 1);

    auto cusp = IdealPresentation(3, {mono(3, {0, 2, 0}) - mono(3, {3, 0, 0})});
    CHECK(tau_generic(cusp, c, sampler(20)).estimate.is_infinite());
}

TEST_CASE("catlin estimates on small ideals")
{
    auto squares = IdealPresentation(3, {mono(3, {2, 0, 0}), mono(3, {0, 2, 0}), mono(3, {0, 0, 2})});
    CHECK(catlin_q_estimate(squares, 2, sampler(10)).estimate == fin(2));
    CHECK(catlin_q_estimate(IdealPresentation(3, {z(3, 0), z(3, 1), z(3, 2)}), 2, sampler(10)).estimate == fin(1));
    auto cubes = IdealPresentation(3, {mono(3, {0, 3, 0}), mono(3, {0, 0, 3})});
    CHECK(catlin_q_estimate(cubes, 2, sampler(10)).estimate == fin(3));
}

TEST_CASE("catlin never exceeds the restricted estimate")
{
    auto i = IdealPresentation(3, {mono(3, {4, 0, 0}), mono(3, {0, 3, 0}), mono(3, {0, 0, 2})});
    auto s = sampler(10);
    s.q = 2;
    auto run = sample_restricted_delta1(i, 2, s, 8);
    auto tilde = summarize_tilde(run, s);
    auto catlin = catlin_q_estimate(run, i, 2, s);
    CHECK(catlin.estimate <= tilde.estimate);
    CHECK(catlin.estimate == tilde.estimate);
}

TEST_CASE("candidate directrices are transversal and bounded")
{
    SliceCoordinates coords(LinearSlice::from_forms({z(3, 0) + z(3, 1) - z(3, 2)}));
    auto gamma = CurveGerm::monomial({1, 2}).linear_image(coords.embedding());
    auto cands = candidate_directrices(gamma, coords, 2, 4);
    REQUIRE_FALSE(cands.empty());
    CHECK(cands.size() <= 4);
    for (const auto& u : cands)
        CHECK(u.rank() == 1);
}

TEST_CASE("hypersurface tau along a line cylinder")
{
    auto c = build_cylinder(CurveGerm::monomial({1, 0, 0}), axis(3, 1), 2);
    auto s = LinearSlice::from_forms({z(3, 0) + z(3, 1) + z(3, 2)});
    HypersurfaceGerm lin(z(3, 2) * PolyC::constant(3, GaussianRational(2)), {z(3, 0), z(3, 1)}, {});
    CHECK(tau_slice_hypersurface(lin, c, s) == fin(2));
    HypersurfaceGerm sq(z(3, 2) * PolyC::constant(3, GaussianRational(2)), {mono(3, {2, 0, 0})}, {});
    CHECK(tau_slice_hypersurface(sq, c, s) == fin(4));
    HypersurfaceGerm flat(PolyC(3), {z(3, 0)}, {z(3, 0)});
    CHECK(tau_slice_hypersurface(flat, c, s).is_infinite());
    CHECK(tau_generic_hypersurface(lin, c, sampler(30)).estimate == fin(2));
}
