#include "qtype/contact.hpp"
#include "qtype/errors.hpp"

#include <doctest.h>

using namespace qtype;

namespace {

PolyC z(int n, int j) { return PolyC::variable(n, j); }
PolyC mono(int n, Exponent e) { return PolyC::monomial(n, std::move(e)); }
ExtendedRational fin(long a, long b = 1) { return ExtendedRational::finite(Rational(a, b)); }

}  // namespace

TEST_CASE("curve order")
{
    CHECK(curve_order(CurveGerm::monomial({2, 3})) == fin(2));
    CHECK(curve_order(CurveGerm::monomial({1, 0})) == fin(1));
    CHECK_THROWS_AS(CurveGerm::monomial({0, 0}), Error);
    try {
        CurveGerm::monomial({0, 0});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::invalid_germ);
    }
}

TEST_CASE("ideal contact examples")
{
    IdealPresentation i(2, {mono(2, {2, 0}), mono(2, {0, 3})});
    CHECK(ideal_contact(CurveGerm::monomial({3, 2}), i) == fin(3));
    IdealPresentation cusp(2, {mono(2, {0, 2}) - mono(2, {3, 0})});
    CHECK(ideal_contact(CurveGerm::monomial({2, 3}), cusp).is_infinite());
    CHECK(ideal_contact(CurveGerm::monomial({2, 3}), IdealPresentation(2, {z(2, 0)})) == fin(1));
}

TEST_CASE("zero truncated pullback of a non-zero polynomial is not called infinite")
{
    // z1 - z2^20 - z2^41 along (t^20, t) vanishes only to order 41 > truncation 32.
    CurveGerm phi = CurveGerm::monomial({20, 1}, 32);
    IdealPresentation i(2, {z(2, 0) - mono(2, {0, 20}) - mono(2, {0, 41})});
    CHECK(ideal_contact(phi, i) == fin(41));
}

TEST_CASE("curves must pass through the base point")
{
    std::vector<PolyC> comps{PolyC::constant(1, 1) + z(1, 0), z(1, 0).pow(2)};
    CurveGerm phi = CurveGerm::from_polynomials(comps, 64, {GaussianRational(1), GaussianRational(0)});
    IdealPresentation i(2, {(z(2, 0) - PolyC::constant(2, 1)).pow(2), z(2, 1)}, {GaussianRational(1), GaussianRational(0)});
    CHECK(ideal_contact(phi, i) == fin(2));
    CHECK_THROWS_AS(CurveGerm::from_polynomials(comps, 64, {}), Error);
    CHECK_THROWS_AS(ideal_contact(CurveGerm::monomial({1, 1}), i), Error);
}

TEST_CASE("hypersurface contact examples")
{
    std::vector<PolyC> none;
    CurveGerm line = CurveGerm::monomial({1, 0});
    // Re(2 z1) along (t, 0) has order 1.
    CHECK(hypersurface_contact(line, HypersurfaceGerm(2 * z(2, 0), {z(2, 0)}, none)) == fin(1));
    // With h = 2 z2 the holomorphic part vanishes on (t, 0) and |t|^2 is left.
    CHECK(hypersurface_contact(line, HypersurfaceGerm(2 * z(2, 1), {z(2, 0)}, none)) == fin(2));
    CHECK(hypersurface_contact(line, HypersurfaceGerm(PolyC(2), {mono(2, {2, 0})}, none)) == fin(4));
    CHECK(hypersurface_contact(line, HypersurfaceGerm(PolyC(2), {z(2, 0)}, {z(2, 0)})).is_infinite());
}

TEST_CASE("q-positivity examples")
{
    std::vector<PolyC> none;
    CurveGerm phi = CurveGerm::monomial({1, 0, 0});
    LinearSlice s = LinearSlice::from_forms({z(3, 1)});

    auto model = q_positivity(phi, HypersurfaceGerm(2 * z(3, 2), {z(3, 0), z(3, 1)}, none), s);
    CHECK(model.applicable);
    CHECK(model.order == fin(2));
    REQUIRE(model.half_order.has_value());
    CHECK(*model.half_order == 1);
    CHECK(model.verdict);

    auto cancel = q_positivity(phi, HypersurfaceGerm(2 * z(3, 2), {z(3, 0)}, {z(3, 0)}), s);
    CHECK(cancel.applicable);
    CHECK(cancel.indeterminate);
    CHECK_FALSE(cancel.verdict);

    auto vacuous = q_positivity(phi, HypersurfaceGerm(z(3, 0), none, none), s);
    CHECK_FALSE(vacuous.applicable);
    CHECK(vacuous.verdict);
}

TEST_CASE("odd order fails condition (i)")
{
    std::vector<PolyC> none;
    // |t + t^2|^2 - |t|^2 = t^2 conj(t) + t conj(t)^2 + |t|^4
    CurveGerm phi = CurveGerm::monomial({1, 0, 0});
    LinearSlice s = LinearSlice::from_forms({z(3, 2)});
    auto rep = q_positivity(phi, HypersurfaceGerm(z(3, 1), {z(3, 0) + mono(3, {2, 0, 0})}, {z(3, 0)}), s);
    CHECK(rep.applicable);
    CHECK(rep.order == fin(3));
    CHECK_FALSE(rep.condition_i);
    CHECK_FALSE(rep.verdict);
}
