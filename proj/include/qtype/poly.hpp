#pragma once

#include "qtype/gaussian.hpp"

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace qtype {

using Exponent = std::vector<int>;

int total_degree(const Exponent& e);
bool divides(const Exponent& a, const Exponent& b);

// Local anti-graded lexicographic order: lower total degree is larger, ties
// broken lexicographically. The leading term of a germ is its largest term.
// Returns true when a is strictly larger than b.
bool local_greater(const Exponent& a, const Exponent& b);

// Sparse multivariate polynomial over Q(i) in a fixed number of variables.
// Canonical: one entry per exponent, no zero coefficients.
class PolyC {
public:
    using TermMap = std::map<Exponent, GaussianRational>;

    explicit PolyC(int nvars);
    PolyC(int nvars, TermMap terms);

    static PolyC constant(int nvars, const GaussianRational& c);
    static PolyC variable(int nvars, int index);
    static PolyC monomial(int nvars, Exponent e, const GaussianRational& c = GaussianRational(1));
    // Sum_j coeffs[j] * z_j.
    static PolyC linear_form(std::span<const GaussianRational> coeffs);

    int nvars() const noexcept { return nvars_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    GaussianRational coefficient(const Exponent& e) const;
    GaussianRational constant_term() const;

    int degree() const;  // -1 for the zero polynomial
    int low_degree() const;  // order at the origin; -1 for zero
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    bool is_homogeneous_linear() const;
    // Coefficients of the degree-one part.
    std::vector<GaussianRational> linear_part() const;

    // Leading data with respect to the local order.
    const Exponent& leading_exponent() const;
    const GaussianRational& leading_coefficient() const;
    int ecart() const;

    void add_term(const Exponent& e, const GaussianRational& c);

    PolyC& operator+=(const PolyC& o);
    PolyC& operator-=(const PolyC& o);
    PolyC& operator*=(const PolyC& o);
    PolyC& operator*=(const GaussianRational& c);
    friend PolyC operator+(PolyC a, const PolyC& b) { return a += b; }
    friend PolyC operator-(PolyC a, const PolyC& b) { return a -= b; }
    friend PolyC operator*(PolyC a, const PolyC& b) { return a *= b; }
    friend PolyC operator*(PolyC a, const GaussianRational& c) { return a *= c; }
    friend PolyC operator*(const GaussianRational& c, PolyC a) { return a *= c; }
    PolyC operator-() const;

    // Multiply by c * z^e.
    PolyC shifted(const Exponent& e, const GaussianRational& c) const;
    PolyC pow(unsigned k) const;

    // Drop every term of total degree >= d.
    PolyC truncated(int d) const;

    GaussianRational evaluate(std::span<const GaussianRational> point) const;

    friend bool operator==(const PolyC& a, const PolyC& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    // Canonical text in the input grammar, using the given variable names
    // (z1..zn when empty).
    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    void check_arity(const PolyC& o) const;

    int nvars_;
    TermMap terms_;
};

// p(images[0], ..., images[n-1]); every image shares one arity.
PolyC substitute(const PolyC& p, std::span<const PolyC> images);

// p(z + shift): moves a base point to the origin.
PolyC translate(const PolyC& p, std::span<const GaussianRational> shift);

// Keep variables [0, keep) and set the others to zero.
PolyC restrict_leading(const PolyC& p, int keep);

std::vector<std::string> default_names(int nvars, const std::string& stem = "z");

}  // namespace qtype
