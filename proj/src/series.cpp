#include "qtype/series.hpp"

#include "qtype/errors.hpp"

#include <algorithm>
#include <sstream>

namespace qtype {

UniSeries::UniSeries(int truncation) : truncation_(truncation)
{
    if (truncation <= 0)
        throw Error(ErrorCode::invalid_argument, "series truncation must be positive");
}

UniSeries::UniSeries(std::vector<GaussianRational> coeffs, int truncation)
    : UniSeries(truncation)
{
    if (static_cast<int>(coeffs.size()) > truncation)
        coeffs.resize(static_cast<std::size_t>(truncation));
    coeffs_ = std::move(coeffs);
    trim();
}

UniSeries UniSeries::monomial(const GaussianRational& c, int power, int truncation)
{
    UniSeries s(truncation);
    if (power < 0)
        throw Error(ErrorCode::invalid_argument, "negative power in a series");
    if (power < truncation && !c.is_zero()) {
        s.coeffs_.resize(static_cast<std::size_t>(power) + 1);
        s.coeffs_.back() = c;
    }
    return s;
}

UniSeries UniSeries::from_poly(const PolyC& p, int truncation)
{
    if (p.nvars() != 1)
        throw Error(ErrorCode::arity_mismatch, "series need a univariate polynomial");
    std::vector<GaussianRational> coeffs;
    for (const auto& [e, c] : p.terms()) {
        if (e[0] >= truncation)
            continue;
        if (static_cast<int>(coeffs.size()) <= e[0])
            coeffs.resize(static_cast<std::size_t>(e[0]) + 1);
        coeffs[static_cast<std::size_t>(e[0])] = c;
    }
    return {std::move(coeffs), truncation};
}

void UniSeries::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

GaussianRational UniSeries::coefficient(int k) const
{
    if (k < 0 || k >= static_cast<int>(coeffs_.size()))
        return {};
    return coeffs_[static_cast<std::size_t>(k)];
}

UniSeries UniSeries::with_truncation(int b) const
{
    return {coeffs_, b};
}

UniSeries& UniSeries::operator+=(const UniSeries& o)
{
    truncation_ = std::min(truncation_, o.truncation_);
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
        coeffs_[k] += o.coeffs_[k];
    if (static_cast<int>(coeffs_.size()) > truncation_)
        coeffs_.resize(static_cast<std::size_t>(truncation_));
    trim();
    return *this;
}

UniSeries& UniSeries::operator-=(const UniSeries& o)
{
    return *this += o.scaled(GaussianRational(-1));
}

UniSeries operator*(const UniSeries& a, const UniSeries& b)
{
    int trunc = std::min(a.truncation_, b.truncation_);
    UniSeries out(trunc);
    if (a.is_zero() || b.is_zero())
        return out;
    int top = std::min(a.degree() + b.degree(), trunc - 1);
    out.coeffs_.resize(static_cast<std::size_t>(top) + 1);
    for (int i = 0; i <= a.degree() && i <= top; ++i) {
        const auto& ca = a.coeffs_[static_cast<std::size_t>(i)];
        if (ca.is_zero())
            continue;
        for (int j = 0; j <= b.degree() && i + j <= top; ++j) {
            const auto& cb = b.coeffs_[static_cast<std::size_t>(j)];
            if (!cb.is_zero())
                out.coeffs_[static_cast<std::size_t>(i + j)] += ca * cb;
        }
    }
    out.trim();
    return out;
}

UniSeries UniSeries::scaled(const GaussianRational& c) const
{
    UniSeries out = *this;
    for (auto& v : out.coeffs_)
        v *= c;
    out.trim();
    return out;
}

UniSeries UniSeries::pow(unsigned k) const
{
    UniSeries result = constant(GaussianRational(1), truncation_);
    UniSeries base = *this;
    while (k != 0) {
        if (k & 1U)
            result = result * base;
        k >>= 1U;
        if (k != 0)
            base = base * base;
    }
    return result;
}

UniSeries UniSeries::reparametrized(int k) const
{
    if (k <= 0)
        throw Error(ErrorCode::invalid_argument, "reparametrization power must be positive");
    std::vector<GaussianRational> coeffs;
    if (!coeffs_.empty())
        coeffs.resize(static_cast<std::size_t>(degree() * k) + 1);
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        coeffs[j * static_cast<std::size_t>(k)] = coeffs_[j];
    return {std::move(coeffs), truncation_ * k};
}

GaussianRational UniSeries::evaluate(const GaussianRational& t) const
{
    GaussianRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * t + *it;
    return acc;
}

std::string UniSeries::to_string(const std::string& param) const
{
    if (coeffs_.empty())
        return "0";
    std::vector<std::string> names{param};
    PolyC p(1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        p.add_term(Exponent{static_cast<int>(k)}, coeffs_[k]);
    return p.to_string(names);
}

GaussianRational HermitianSeries::coefficient(int a, int b) const
{
    auto it = coeffs_.find({a, b});
    return it == coeffs_.end() ? GaussianRational() : it->second;
}

void HermitianSeries::add(int a, int b, const GaussianRational& c)
{
    if (a < 0 || b < 0)
        throw Error(ErrorCode::invalid_argument, "negative index in a Hermitian series");
    if (a + b >= truncation_ || c.is_zero())
        return;
    auto [it, inserted] = coeffs_.try_emplace({a, b}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            coeffs_.erase(it);
    }
}

bool HermitianSeries::is_hermitian() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [this](const auto& kv) {
        return coefficient(kv.first.second, kv.first.first) == kv.second.conj();
    });
}

UniSeries compose(const PolyC& p, std::span<const UniSeries> phi)
{
    if (static_cast<int>(phi.size()) != p.nvars())
        throw Error(ErrorCode::arity_mismatch, "curve dimension does not match polynomial arity");
    int trunc = phi.front().truncation();
    for (const auto& s : phi)
        trunc = std::min(trunc, s.truncation());

    std::vector<std::vector<UniSeries>> powers(phi.size());
    auto power = [&](std::size_t j, int k) -> const UniSeries& {
        auto& row = powers[j];
        if (row.empty())
            row.push_back(UniSeries::constant(GaussianRational(1), trunc));
        while (static_cast<int>(row.size()) <= k)
            row.push_back(row.back() * phi[j].with_truncation(trunc));
        return row[static_cast<std::size_t>(k)];
    };

    UniSeries out(trunc);
    for (const auto& [e, c] : p.terms()) {
        UniSeries term = UniSeries::constant(c, trunc);
        for (std::size_t j = 0; j < e.size() && !term.is_zero(); ++j)
            if (e[j] != 0)
                term = term * power(j, e[j]);
        out += term;
    }
    return out;
}

ExtendedRational series_order(const UniSeries& s)
{
    const auto& c = s.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k)
        if (!c[k].is_zero())
            return ExtendedRational::finite(Rational(static_cast<long>(k)));
    return ExtendedRational::at_least(Rational(s.truncation()));
}

HermitianSeries hermitian_pullback(const PolyC& h, std::span<const PolyC> f, std::span<const PolyC> g,
                                   std::span<const UniSeries> phi)
{
    auto check = [&](const PolyC& p) {
        if (p.nvars() != static_cast<int>(phi.size()))
            throw Error(ErrorCode::arity_mismatch, "hypersurface data and curve differ in dimension");
    };
    check(h);
    for (const auto& p : f)
        check(p);
    for (const auto& p : g)
        check(p);

    UniSeries hs = compose(h, phi);
    HermitianSeries out(hs.truncation());
    const GaussianRational half(Rational(1, 2));
    for (int k = 0; k <= hs.degree(); ++k) {
        const auto c = hs.coefficient(k);
        out.add(k, 0, c * half);
        out.add(0, k, c.conj() * half);
    }
    auto add_modulus = [&](const PolyC& p, const GaussianRational& sign) {
        UniSeries s = compose(p, phi);
        for (int a = 0; a <= s.degree(); ++a) {
            const auto ca = s.coefficient(a);
            if (ca.is_zero())
                continue;
            for (int b = 0; b <= s.degree() && a + b < out.truncation(); ++b) {
                const auto cb = s.coefficient(b);
                if (!cb.is_zero())
                    out.add(a, b, sign * ca * cb.conj());
            }
        }
    };
    for (const auto& p : f)
        add_modulus(p, GaussianRational(1));
    for (const auto& p : g)
        add_modulus(p, GaussianRational(-1));
    if (!out.is_hermitian())
        throw Error(ErrorCode::invalid_argument, "Hermitian pullback lost its reality symmetry");
    return out;
}

ExtendedRational hermitian_order(const HermitianSeries& s)
{
    int best = -1;
    for (const auto& [key, c] : s.coefficients()) {
        int d = key.first + key.second;
        if (best < 0 || d < best)
            best = d;
    }
    if (best < 0)
        return ExtendedRational::at_least(Rational(s.truncation()));
    return ExtendedRational::finite(Rational(best));
}

}  // namespace qtype
