#pragma once

#include "qtype/gaussian.hpp"

#include <compare>
#include <string>

namespace qtype {

// A contact or type value: a finite nonnegative rational, infinity, or a
// one-sided witness "at least B" produced when a truncated computation
// cannot separate a large order from an infinite one.
//
// Total order: values compare by magnitude; on a tie Finite(x) < AtLeast(x).
// Infinite is above everything, including every AtLeast.
class ExtendedRational {
public:
    enum class Kind { finite, at_least, infinite };

    ExtendedRational() : kind_(Kind::finite), value_(0) {}

    static ExtendedRational finite(Rational v);
    static ExtendedRational at_least(Rational bound);
    static ExtendedRational infinite() { return ExtendedRational(Kind::infinite, Rational(0)); }

    Kind kind() const noexcept { return kind_; }
    bool is_finite() const noexcept { return kind_ == Kind::finite; }
    bool is_infinite() const noexcept { return kind_ == Kind::infinite; }
    bool is_at_least() const noexcept { return kind_ == Kind::at_least; }

    // The rational payload. Meaningless (zero) for Infinite.
    const Rational& value() const noexcept { return value_; }

    // Normalized contact: AtLeast(b) / k = AtLeast(b/k), Infinite stays Infinite.
    ExtendedRational divided_by(const Rational& k) const;
    ExtendedRational pow(unsigned exponent) const;

    std::string to_string() const;
    std::string kind_name() const;

    friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
        return a.kind_ == b.kind_ && (a.kind_ == Kind::infinite || a.value_ == b.value_);
    }
    friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b);

private:
    ExtendedRational(Kind k, Rational v) : kind_(k), value_(std::move(v)) { value_.canonicalize(); }

    Kind kind_;
    Rational value_;
};

inline ExtendedRational finite_value(long v) { return ExtendedRational::finite(Rational(v)); }

}  // namespace qtype
