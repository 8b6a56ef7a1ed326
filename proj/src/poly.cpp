#include "qtype/poly.hpp"

#include "qtype/errors.hpp"

#include <algorithm>
#include <numeric>

namespace qtype {

int total_degree(const Exponent& e)
{
    return std::accumulate(e.begin(), e.end(), 0);
}

bool divides(const Exponent& a, const Exponent& b)
{
    for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j] > b[j])
            return false;
    return true;
}

bool local_greater(const Exponent& a, const Exponent& b)
{
    int da = total_degree(a);
    int db = total_degree(b);
    if (da != db)
        return da < db;
    return b < a;
}

PolyC::PolyC(int nvars) : nvars_(nvars)
{
    if (nvars <= 0)
        throw Error(ErrorCode::invalid_argument, "polynomials need at least one variable");
}

PolyC::PolyC(int nvars, TermMap terms) : PolyC(nvars)
{
    for (auto& [e, c] : terms)
        add_term(e, c);
}

PolyC PolyC::constant(int nvars, const GaussianRational& c)
{
    PolyC p(nvars);
    p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

PolyC PolyC::variable(int nvars, int index)
{
    if (index < 0 || index >= nvars)
        throw Error(ErrorCode::invalid_argument, "variable index out of range");
    Exponent e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    return monomial(nvars, std::move(e));
}

PolyC PolyC::monomial(int nvars, Exponent e, const GaussianRational& c)
{
    PolyC p(nvars);
    p.add_term(e, c);
    return p;
}

PolyC PolyC::linear_form(std::span<const GaussianRational> coeffs)
{
    int n = static_cast<int>(coeffs.size());
    PolyC p(n);
    for (int j = 0; j < n; ++j) {
        Exponent e(coeffs.size(), 0);
        e[static_cast<std::size_t>(j)] = 1;
        p.add_term(e, coeffs[static_cast<std::size_t>(j)]);
    }
    return p;
}

void PolyC::add_term(const Exponent& e, const GaussianRational& c)
{
    if (static_cast<int>(e.size()) != nvars_)
        throw Error(ErrorCode::arity_mismatch, "exponent length differs from variable count");
    if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; }))
        throw Error(ErrorCode::invalid_argument, "negative exponent");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

GaussianRational PolyC::coefficient(const Exponent& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? GaussianRational() : it->second;
}

GaussianRational PolyC::constant_term() const
{
    return coefficient(Exponent(static_cast<std::size_t>(nvars_), 0));
}

int PolyC::degree() const
{
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, total_degree(e));
    return d;
}

int PolyC::low_degree() const
{
    if (terms_.empty())
        return -1;
    int d = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        d = std::min(d, total_degree(e));
    return d;
}

bool PolyC::is_homogeneous_linear() const
{
    return !terms_.empty() &&
           std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return total_degree(t.first) == 1; });
}

std::vector<GaussianRational> PolyC::linear_part() const
{
    std::vector<GaussianRational> out(static_cast<std::size_t>(nvars_));
    for (const auto& [e, c] : terms_) {
        if (total_degree(e) != 1)
            continue;
        auto j = std::find(e.begin(), e.end(), 1) - e.begin();
        out[static_cast<std::size_t>(j)] = c;
    }
    return out;
}

const Exponent& PolyC::leading_exponent() const
{
    if (terms_.empty())
        throw Error(ErrorCode::invalid_argument, "zero polynomial has no leading term");
    auto best = terms_.begin();
    for (auto it = std::next(best); it != terms_.end(); ++it)
        if (local_greater(it->first, best->first))
            best = it;
    return best->first;
}

const GaussianRational& PolyC::leading_coefficient() const
{
    return terms_.at(leading_exponent());
}

int PolyC::ecart() const
{
    return degree() - total_degree(leading_exponent());
}

void PolyC::check_arity(const PolyC& o) const
{
    if (o.nvars_ != nvars_)
        throw Error(ErrorCode::arity_mismatch, "polynomials over different variable counts");
}

PolyC& PolyC::operator+=(const PolyC& o)
{
    check_arity(o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

PolyC& PolyC::operator-=(const PolyC& o)
{
    check_arity(o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

PolyC& PolyC::operator*=(const PolyC& o)
{
    check_arity(o);
    PolyC out(nvars_);
    Exponent e(static_cast<std::size_t>(nvars_));
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t j = 0; j < e.size(); ++j)
                e[j] = ea[j] + eb[j];
            out.add_term(e, ca * cb);
        }
    terms_ = std::move(out.terms_);
    return *this;
}

PolyC& PolyC::operator*=(const GaussianRational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

PolyC PolyC::operator-() const
{
    PolyC out = *this;
    for (auto& [e, v] : out.terms_)
        v = -v;
    return out;
}

PolyC PolyC::shifted(const Exponent& e, const GaussianRational& c) const
{
    PolyC out(nvars_);
    if (c.is_zero())
        return out;
    Exponent f(static_cast<std::size_t>(nvars_));
    for (const auto& [ea, ca] : terms_) {
        for (std::size_t j = 0; j < f.size(); ++j)
            f[j] = ea[j] + e[j];
        out.terms_.emplace_hint(out.terms_.end(), f, ca * c);
    }
    return out;
}

PolyC PolyC::pow(unsigned k) const
{
    PolyC result = constant(nvars_, GaussianRational(1));
    PolyC base = *this;
    while (k != 0) {
        if (k & 1U)
            result *= base;
        k >>= 1U;
        if (k != 0)
            base *= base;
    }
    return result;
}

PolyC PolyC::truncated(int d) const
{
    PolyC out(nvars_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) < d)
            out.terms_.emplace_hint(out.terms_.end(), e, c);
    return out;
}

GaussianRational PolyC::evaluate(std::span<const GaussianRational> point) const
{
    if (static_cast<int>(point.size()) != nvars_)
        throw Error(ErrorCode::arity_mismatch, "evaluation point has wrong dimension");
    GaussianRational sum;
    for (const auto& [e, c] : terms_) {
        GaussianRational term = c;
        for (std::size_t j = 0; j < e.size(); ++j)
            if (e[j] != 0)
                term *= qtype::pow(point[j], static_cast<unsigned>(e[j]));
        sum += term;
    }
    return sum;
}

namespace {

std::string monomial_text(const Exponent& e, const std::vector<std::string>& names)
{
    std::string out;
    for (std::size_t j = 0; j < e.size(); ++j) {
        if (e[j] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += names[j];
        if (e[j] > 1)
            out += "^" + std::to_string(e[j]);
    }
    return out;
}

}  // namespace

std::string PolyC::to_string(const std::vector<std::string>& names_in) const
{
    if (terms_.empty())
        return "0";
    const auto names = names_in.empty() ? default_names(nvars_) : names_in;
    if (static_cast<int>(names.size()) != nvars_)
        throw Error(ErrorCode::arity_mismatch, "name list does not match variable count");

    std::vector<const TermMap::value_type*> order;
    for (const auto& t : terms_)
        order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](const auto* a, const auto* b) { return local_greater(a->first, b->first); });

    std::string out;
    bool first = true;
    for (const auto* t : order) {
        const auto& [e, c] = *t;
        std::string mono = monomial_text(e, names);
        bool negative = c.is_real() && sgn(c.re()) < 0;
        GaussianRational mag = negative ? -c : c;
        std::string coeff = mag.to_string();
        if (!mono.empty() && mag == GaussianRational(1))
            coeff.clear();
        std::string body = coeff.empty() ? mono : (mono.empty() ? coeff : coeff + "*" + mono);
        if (first)
            out += negative ? "-" + body : body;
        else
            out += negative ? " - " + body : " + " + body;
        first = false;
    }
    return out;
}

PolyC substitute(const PolyC& p, std::span<const PolyC> images)
{
    if (static_cast<int>(images.size()) != p.nvars())
        throw Error(ErrorCode::arity_mismatch, "substitution needs one image per variable");
    if (images.empty())
        throw Error(ErrorCode::arity_mismatch, "empty substitution");
    const int m = images.front().nvars();
    for (const auto& img : images)
        if (img.nvars() != m)
            throw Error(ErrorCode::arity_mismatch, "substitution images differ in arity");

    // powers[j][k] = images[j]^k, filled lazily.
    std::vector<std::vector<PolyC>> powers(images.size());
    auto power = [&](std::size_t j, int k) -> const PolyC& {
        auto& row = powers[j];
        if (row.empty())
            row.push_back(PolyC::constant(m, GaussianRational(1)));
        while (static_cast<int>(row.size()) <= k)
            row.push_back(row.back() * images[j]);
        return row[static_cast<std::size_t>(k)];
    };

    PolyC out(m);
    for (const auto& [e, c] : p.terms()) {
        PolyC term = PolyC::constant(m, c);
        for (std::size_t j = 0; j < e.size(); ++j)
            if (e[j] != 0)
                term *= power(j, e[j]);
        out += term;
    }
    return out;
}

PolyC translate(const PolyC& p, std::span<const GaussianRational> shift)
{
    if (static_cast<int>(shift.size()) != p.nvars())
        throw Error(ErrorCode::arity_mismatch, "base point has wrong dimension");
    if (std::all_of(shift.begin(), shift.end(), [](const auto& c) { return c.is_zero(); }))
        return p;
    std::vector<PolyC> images;
    for (int j = 0; j < p.nvars(); ++j)
        images.push_back(PolyC::variable(p.nvars(), j) + PolyC::constant(p.nvars(), shift[static_cast<std::size_t>(j)]));
    return substitute(p, images);
}

PolyC restrict_leading(const PolyC& p, int keep)
{
    if (keep <= 0 || keep > p.nvars())
        throw Error(ErrorCode::invalid_argument, "restriction keeps an invalid number of variables");
    PolyC out(keep);
    for (const auto& [e, c] : p.terms()) {
        if (std::any_of(e.begin() + keep, e.end(), [](int x) { return x != 0; }))
            continue;
        out.add_term(Exponent(e.begin(), e.begin() + keep), c);
    }
    return out;
}

std::vector<std::string> default_names(int nvars, const std::string& stem)
{
    std::vector<std::string> names;
    for (int j = 1; j <= nvars; ++j)
        names.push_back(stem + std::to_string(j));
    return names;
}

}  // namespace qtype
