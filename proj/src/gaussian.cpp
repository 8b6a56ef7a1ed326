#include "qtype/gaussian.hpp"

#include "qtype/errors.hpp"

#include <ostream>

namespace qtype {

GaussianRational GaussianRational::inverse() const
{
    if (is_zero())
        throw Error(ErrorCode::invalid_argument, "division by zero in Q(i)");
    Rational n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o)
{
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o)
{
    if (o.is_zero())
        throw Error(ErrorCode::invalid_argument, "division by zero in Q(i)");
    if (sgn(o.im_) == 0) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::string GaussianRational::to_string() const
{
    if (sgn(im_) == 0)
        return re_.get_str();
    std::string imag;
    if (im_ == 1)
        imag = "i";
    else if (im_ == -1)
        imag = "-i";
    else
        imag = im_.get_str() + "*i";
    if (sgn(re_) == 0)
        return imag;
    std::string out = "(" + re_.get_str();
    if (sgn(im_) > 0)
        out += "+";
    return out + imag + ")";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& g)
{
    return os << g.to_string();
}

GaussianRational pow(const GaussianRational& base, unsigned exponent)
{
    GaussianRational result(1);
    GaussianRational b = base;
    while (exponent != 0) {
        if (exponent & 1U)
            result *= b;
        exponent >>= 1U;
        if (exponent != 0)
            b *= b;
    }
    return result;
}

}  // namespace qtype
