#pragma once

#include "qtype/extended.hpp"
#include "qtype/gaussian.hpp"
#include "qtype/poly.hpp"

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qtype {

inline constexpr int default_truncation = 64;

// Power series in t known modulo t^B. Trailing zero coefficients are not
// stored, so polynomial curves stay cheap.
class UniSeries {
public:
    explicit UniSeries(int truncation = default_truncation);
    UniSeries(std::vector<GaussianRational> coeffs, int truncation);

    static UniSeries monomial(const GaussianRational& c, int power, int truncation);
    static UniSeries constant(const GaussianRational& c, int truncation) { return monomial(c, 0, truncation); }
    // Univariate polynomial (nvars == 1) read as a series in t.
    static UniSeries from_poly(const PolyC& p, int truncation);

    int truncation() const noexcept { return truncation_; }
    // Coefficient of t^k; zero past the stored range. k must be < truncation.
    GaussianRational coefficient(int k) const;
    const std::vector<GaussianRational>& coefficients() const noexcept { return coeffs_; }
    // Index of the last stored nonzero coefficient, -1 for zero.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    UniSeries with_truncation(int b) const;

    UniSeries& operator+=(const UniSeries& o);
    UniSeries& operator-=(const UniSeries& o);
    friend UniSeries operator+(UniSeries a, const UniSeries& b) { return a += b; }
    friend UniSeries operator-(UniSeries a, const UniSeries& b) { return a -= b; }
    friend UniSeries operator*(const UniSeries& a, const UniSeries& b);
    UniSeries scaled(const GaussianRational& c) const;
    UniSeries pow(unsigned k) const;
    // s(t^k)
    UniSeries reparametrized(int k) const;
    // Substitute a numeric parameter value into the stored polynomial part.
    GaussianRational evaluate(const GaussianRational& t) const;

    friend bool operator==(const UniSeries& a, const UniSeries& b) = default;

    std::string to_string(const std::string& param = "t") const;

private:
    void trim();

    int truncation_;
    std::vector<GaussianRational> coeffs_;
};

// Series in (t, conj t); coefficient (a, b) multiplies t^a conj(t)^b and is
// kept for a + b < B.
class HermitianSeries {
public:
    using Key = std::pair<int, int>;

    explicit HermitianSeries(int truncation = default_truncation) : truncation_(truncation) {}

    int truncation() const noexcept { return truncation_; }
    const std::map<Key, GaussianRational>& coefficients() const noexcept { return coeffs_; }
    GaussianRational coefficient(int a, int b) const;
    bool is_zero() const noexcept { return coeffs_.empty(); }

    void add(int a, int b, const GaussianRational& c);
    // coefficient(a, b) == conj(coefficient(b, a)) for every stored pair.
    bool is_hermitian() const;

    friend bool operator==(const HermitianSeries& a, const HermitianSeries& b) = default;

private:
    int truncation_;
    std::map<Key, GaussianRational> coeffs_;
};

// p(phi_1(t), ..., phi_n(t)) modulo t^B, B the smallest component truncation.
UniSeries compose(const PolyC& p, std::span<const UniSeries> phi);

// Finite(k) for the lowest nonzero index, AtLeast(B) for a zero series.
ExtendedRational series_order(const UniSeries& s);

// Re(h o phi) + sum |f_j o phi|^2 - sum |g_j o phi|^2 in (t, conj t).
HermitianSeries hermitian_pullback(const PolyC& h, std::span<const PolyC> f, std::span<const PolyC> g,
                                   std::span<const UniSeries> phi);

ExtendedRational hermitian_order(const HermitianSeries& s);

}  // namespace qtype
