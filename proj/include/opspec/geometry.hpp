#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "opspec/scalar.hpp"

namespace opspec {

/// Circle |z - center|^2 = r2 with r2 > 0.
struct Circle {
    GaussianRational center;
    Rational r2;

    friend bool operator==(const Circle& a, const Circle& b) { return a.center == b.center && a.r2 == b.r2; }
    friend bool operator<(const Circle& a, const Circle& b) {
        if (a.center != b.center) return a.center < b.center;
        return a.r2 < b.r2;
    }
    std::string str() const;
};

/// Position relative to a circle, as a bit so that sets of sides fit in a mask.
enum Side : std::uint8_t { kIn = 1, kOn = 2, kOut = 4 };
constexpr std::uint8_t kAllSides = kIn | kOn | kOut;

Side side_from_sign(int s);
Side side_of(const Circle& c, const GaussianRational& z);

/// Point p + w * sqrt(s) with p, w Gaussian rational and s >= 0 rational.
struct QPoint {
    GaussianRational p;
    GaussianRational w;
    Rational s;

    bool is_rational() const;
    /// Exact value; only valid when is_rational().
    GaussianRational rational_value() const;
    long double x() const;
    long double y() const;
};

/// Sign of a + b sqrt(s) for s >= 0.
int sign_with_root(const Rational& a, const Rational& b, const Rational& s);
Side side_of(const Circle& c, const QPoint& z);

/// Vertex of an arrangement, the crossing of two circles.
struct ArrangementVertex {
    QPoint point;
    std::vector<std::uint8_t> signs;
};

/// Partition of the plane induced by finitely many circles. Only the
/// realised sign vectors are kept: faces (no kOn entry), arcs (one kOn)
/// and vertices (two kOn). Tangent circles and triple points are rejected
/// with Error("degenerate-arrangement").
class Arrangement {
public:
    explicit Arrangement(std::vector<Circle> circles);

    const std::vector<Circle>& circles() const { return circles_; }
    /// Index of an arrangement circle; throws if absent.
    std::size_t index_of(const Circle& c) const;

    const std::vector<std::vector<std::uint8_t>>& faces() const { return faces_; }
    const std::vector<std::vector<std::uint8_t>>& arcs() const { return arcs_; }
    const std::vector<ArrangementVertex>& vertices() const { return vertices_; }

    std::vector<std::uint8_t> signs_of(const GaussianRational& z) const;

private:
    std::vector<Circle> circles_;
    std::vector<std::vector<std::uint8_t>> faces_;
    std::vector<std::vector<std::uint8_t>> arcs_;
    std::vector<ArrangementVertex> vertices_;
};

}  // namespace opspec
