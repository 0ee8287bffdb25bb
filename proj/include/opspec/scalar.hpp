#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace opspec {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws Error("bad-rational").
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
int sign(const Rational& q);
Rational rational_pow(const Rational& base, std::uint64_t exponent);
/// True if q is the square of a rational.
bool is_rational_square(const Rational& q);

/// Exact complex number with rational real and imaginary parts.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// |z|^2, always rational.
    Rational norm() const { return re_ * re_ + im_ * im_; }
    /// Multiplicative inverse; throws Error("division-by-zero") on zero.
    GaussianRational inverse() const;

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    /// Lexicographic (re, im) order; only for canonical sorting, not a field order.
    friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b);

    /// "re" when real, otherwise "re+im i" / "re-|im| i".
    std::string str() const;
    /// Inverse of str(); also accepts "r i" and plain integers.
    static GaussianRational parse(std::string_view text);

private:
    Rational re_{0};
    Rational im_{0};
};

GaussianRational pow(const GaussianRational& z, std::uint64_t exponent);

}  // namespace opspec
