#include "qtype/catlin.hpp"
#include "qtype/contact.hpp"
#include "qtype/local_algebra.hpp"
#include "qtype/series.hpp"
#include "qtype/types_engine.hpp"

#include <doctest.h>

#include <random>

using namespace qtype;

namespace {

struct Gen {
    std::mt19937_64 rng;
    explicit Gen(std::uint64_t seed) : rng(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
    GaussianRational coefficient()
    {
        return GaussianRational(Rational(integer(-5, 5), integer(1, 3)), Rational(integer(-2, 2)));
    }
    PolyC poly(int n, int max_degree, int terms, int min_degree = 0)
    {
        PolyC p(n);
        for (int k = 0; k < terms; ++k) {
            Exponent e(static_cast<std::size_t>(n));
            for (auto& a : e)
                a = integer(0, max_degree);
            if (total_degree(e) < min_degree)
                e[0] += min_degree;
            p += PolyC::monomial(n, e, coefficient());
        }
        return p;
    }
    // Polynomial curve through the origin, nonzero.
    std::vector<PolyC> curve_components(int n)
    {
        for (;;) {
            std::vector<PolyC> out;
            bool nonzero = false;
            for (int j = 0; j < n; ++j) {
                out.push_back(poly(1, 4, 2, 1));
                nonzero = nonzero || !out.back().is_zero();
            }
            if (nonzero)
                return out;
        }
    }
};

std::vector<UniSeries> as_series(const std::vector<PolyC>& comps, int b)
{
    std::vector<UniSeries> out;
    for (const auto& c : comps)
        out.push_back(UniSeries::from_poly(c, b));
    return out;
}

}  // namespace

TEST_CASE("composition is a ring morphism")
{
    Gen g(1);
    for (int trial = 0; trial < 40; ++trial) {
        auto p = g.poly(3, 3, 4);
        auto q = g.poly(3, 3, 4);
        auto phi = as_series(g.curve_components(3), 40);
        CHECK(compose(p + q, phi) == compose(p, phi) + compose(q, phi));
        CHECK(compose(p * q, phi) == compose(p, phi) * compose(q, phi));
    }
}

TEST_CASE("orders add under multiplication")
{
    Gen g(2);
    for (int trial = 0; trial < 40; ++trial) {
        auto a = UniSeries::from_poly(g.poly(1, 6, 3), 32);
        auto b = UniSeries::from_poly(g.poly(1, 6, 3), 32);
        auto oa = series_order(a);
        auto ob = series_order(b);
        if (!oa.is_finite() || !ob.is_finite())
            continue;
        CHECK(series_order(a * b) == ExtendedRational::finite(oa.value() + ob.value()));
    }
}

TEST_CASE("compose agrees with pointwise evaluation")
{
    Gen g(3);
    for (int trial = 0; trial < 30; ++trial) {
        auto p = g.poly(2, 3, 4);
        auto comps = g.curve_components(2);
        auto s = compose(p, as_series(comps, 64));
        GaussianRational t(Rational(g.integer(-4, 4), g.integer(1, 3)), Rational(g.integer(-2, 2)));
        std::vector<GaussianRational> point;
        for (const auto& c : comps)
            point.push_back(c.evaluate(std::vector<GaussianRational>{t}));
        CHECK(s.evaluate(t) == p.evaluate(point));
    }
}

TEST_CASE("hermitian pullbacks are real")
{
    Gen g(4);
    for (int trial = 0; trial < 30; ++trial) {
        auto h = g.poly(3, 2, 3, 1);
        std::vector<PolyC> f{g.poly(3, 2, 2, 1), g.poly(3, 2, 2, 1)};
        std::vector<PolyC> gg{g.poly(3, 2, 2, 1)};
        auto phi = as_series(g.curve_components(3), 24);
        CHECK(hermitian_pullback(h, f, gg, phi).is_hermitian());
    }
}

TEST_CASE("pure moduli have even or infinite contact")
{
    Gen g(5);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<PolyC> f{g.poly(2, 3, 2, 1), g.poly(2, 3, 2, 1)};
        HypersurfaceGerm hyp(PolyC(2), f, {});
        auto phi = CurveGerm::from_polynomials(g.curve_components(2));
        auto order = hypersurface_pullback_order(phi, hyp);
        if (order.is_finite())
            CHECK(order.value().get_num() % 2 == 0);
        else
            CHECK(order.is_infinite());
    }
}

TEST_CASE("contact is invariant under reparametrization t -> t^k")
{
    Gen g(6);
    for (int trial = 0; trial < 30; ++trial) {
        IdealPresentation i(3, {g.poly(3, 3, 3, 1), g.poly(3, 3, 3, 1), g.poly(3, 3, 2, 1)});
        auto phi = CurveGerm::from_polynomials(g.curve_components(3));
        int k = g.integer(2, 4);
        CHECK(ideal_contact(phi.reparametrized(k), i) == ideal_contact(phi, i));
    }
}

TEST_CASE("every combination of generators has at least the ideal's contact")
{
    Gen g(7);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<PolyC> gens{g.poly(2, 3, 3, 1), g.poly(2, 3, 3, 1)};
        IdealPresentation i(2, gens);
        auto phi = CurveGerm::from_polynomials(g.curve_components(2));
        auto value = ideal_contact(phi, i);
        auto combo = g.poly(2, 2, 2) * gens[0] + g.poly(2, 2, 2) * gens[1];
        auto ord = curve_order(phi);
        auto c = pullback_order(combo, phi);
        if (c.is_finite())
            CHECK(ExtendedRational::finite(c.value() / ord.value()) >= value);
    }
}

TEST_CASE("multiplicity ignores the choice of generators")
{
    Gen g(8);
    for (int trial = 0; trial < 15; ++trial) {
        PolyC a = PolyC::monomial(2, {g.integer(1, 3), 0}) + g.poly(2, 3, 2, 4);
        PolyC b = PolyC::monomial(2, {0, g.integer(1, 3)}) + g.poly(2, 3, 2, 4);
        auto base = multiplicity(IdealPresentation(2, {a, b}));
        auto mixed = multiplicity(IdealPresentation(2, {a + g.poly(2, 1, 1) * b, b * PolyC::constant(2, 3)}));
        CHECK(base == mixed);
    }
}

TEST_CASE("delta1 bounds are ordered and the witness attains the lower bound")
{
    Gen g(9);
    for (int trial = 0; trial < 15; ++trial) {
        PolyC a = PolyC::monomial(2, {g.integer(1, 3), 0}) + g.poly(2, 3, 2, 2);
        PolyC b = PolyC::monomial(2, {0, g.integer(1, 3)}) + g.poly(2, 3, 2, 2);
        IdealPresentation i(2, {a, b});
        auto r = delta1_bounds(i, 8);
        CHECK(r.lower <= r.upper);
        CHECK(r.lower <= r.multiplicity);
        if (r.witness)
            CHECK(ideal_contact(*r.witness, i) == r.lower);
    }
}

TEST_CASE("sampled results do not depend on the thread count")
{
    IdealPresentation i(3, {PolyC::monomial(3, {3, 0, 0}), PolyC::monomial(3, {0, 2, 0}) + PolyC::monomial(3, {1, 1, 0}),
                            PolyC::monomial(3, {0, 0, 2})});
    SliceSampler one;
    one.samples = 12;
    one.threads = 1;
    SliceSampler four = one;
    four.threads = 4;
    auto a = tilde_deltaq(i, 2, one, 8);
    auto b = tilde_deltaq(i, 2, four, 8);
    CHECK(a.histogram == b.histogram);
    CHECK(catlin_q_estimate(i, 2, one).histogram == catlin_q_estimate(i, 2, four).histogram);
    CHECK(generic_multiplicity(i, 2, one).histogram == generic_multiplicity(i, 2, four).histogram);
}
