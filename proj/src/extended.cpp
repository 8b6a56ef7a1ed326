#include "qtype/extended.hpp"

#include "qtype/errors.hpp"

namespace qtype {

ExtendedRational ExtendedRational::finite(Rational v)
{
    if (sgn(v) < 0)
        throw Error(ErrorCode::invalid_argument, "contact values are nonnegative");
    v.canonicalize();
    return ExtendedRational(Kind::finite, std::move(v));
}

ExtendedRational ExtendedRational::at_least(Rational bound)
{
    if (sgn(bound) < 0)
        throw Error(ErrorCode::invalid_argument, "contact values are nonnegative");
    bound.canonicalize();
    return ExtendedRational(Kind::at_least, std::move(bound));
}

ExtendedRational ExtendedRational::divided_by(const Rational& k) const
{
    if (sgn(k) <= 0)
        throw Error(ErrorCode::invalid_argument, "normalizing by a nonpositive order");
    if (kind_ == Kind::infinite)
        return *this;
    return ExtendedRational(kind_, value_ / k);
}

ExtendedRational ExtendedRational::pow(unsigned exponent) const
{
    if (kind_ == Kind::infinite)
        return *this;
    Rational r(1);
    for (unsigned i = 0; i < exponent; ++i)
        r *= value_;
    return ExtendedRational(kind_, r);
}

std::string ExtendedRational::kind_name() const
{
    switch (kind_) {
    case Kind::finite: return "finite";
    case Kind::at_least: return "at_least";
    case Kind::infinite: return "infinite";
    }
    return "finite";
}

std::string ExtendedRational::to_string() const
{
    switch (kind_) {
    case Kind::finite: return value_.get_str();
    case Kind::at_least: return ">=" + value_.get_str();
    case Kind::infinite: return "inf";
    }
    return {};
}

std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b)
{
    using K = ExtendedRational::Kind;
    if (a.kind_ == K::infinite || b.kind_ == K::infinite) {
        if (a.kind_ == b.kind_)
            return std::strong_ordering::equal;
        return a.kind_ == K::infinite ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    int c = cmp(a.value_, b.value_);
    if (c != 0)
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.kind_ == b.kind_)
        return std::strong_ordering::equal;
    return a.kind_ == K::finite ? std::strong_ordering::less : std::strong_ordering::greater;
}

}  // namespace qtype
