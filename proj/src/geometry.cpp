#include "opspec/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "opspec/error.hpp"

namespace opspec {

std::string Circle::str() const { return "|z-(" + center.str() + ")|^2=" + to_string(r2); }

Side side_from_sign(int s) { return s < 0 ? kIn : (s == 0 ? kOn : kOut); }

Side side_of(const Circle& c, const GaussianRational& z) {
    Rational g = (z - c.center).norm() - c.r2;
    return side_from_sign(sgn(g));
}

bool QPoint::is_rational() const { return w.is_zero() || sgn(s) == 0 || is_rational_square(s); }

GaussianRational QPoint::rational_value() const {
    if (w.is_zero() || sgn(s) == 0) return p;
    mpz_class num, den;
    mpz_sqrt(num.get_mpz_t(), s.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), s.get_den_mpz_t());
    Rational root(num, den);
    root.canonicalize();
    return p + w * GaussianRational(root);
}

long double QPoint::x() const {
    return static_cast<long double>(p.re().get_d()) +
           static_cast<long double>(w.re().get_d()) * std::sqrt(static_cast<long double>(s.get_d()));
}

long double QPoint::y() const {
    return static_cast<long double>(p.im().get_d()) +
           static_cast<long double>(w.im().get_d()) * std::sqrt(static_cast<long double>(s.get_d()));
}

int sign_with_root(const Rational& a, const Rational& b, const Rational& s) {
    int sa = sgn(a);
    int sb = sgn(s) == 0 ? 0 : sgn(b);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // opposite signs: compare a^2 with b^2 s
    int cmp = sgn(Rational(a * a - b * b * s));
    if (cmp == 0) return 0;
    return cmp > 0 ? sa : sb;
}

Side side_of(const Circle& c, const QPoint& z) {
    GaussianRational delta = z.p - c.center;
    // |delta + w sqrt(s)|^2 - r2 = (|delta|^2 + |w|^2 s - r2) + 2 Re(conj(delta) w) sqrt(s)
    Rational a = delta.norm() + z.w.norm() * z.s - c.r2;
    Rational b = 2 * (delta.conj() * z.w).re();
    return side_from_sign(sign_with_root(a, b, z.s));
}

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;
constexpr long double kMinGap = 1e-9L;

Rational dyadic(long double value, int bits) {
    long double scaled = std::round(std::ldexp(value, bits));
    mpz_class num;
    num = static_cast<double>(scaled);
    mpz_class den = 1;
    den <<= static_cast<unsigned>(bits);
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Rational point of the unit circle whose angle is within ~2^-bits of phi.
GaussianRational rational_direction(long double phi, int bits) {
    bool flip = false;
    if (phi > kPi / 2 || phi < -kPi / 2) {
        flip = true;
        phi = phi > 0 ? phi - kPi : phi + kPi;
    }
    Rational t = dyadic(std::tan(phi / 2), bits);
    Rational den = 1 + t * t;
    GaussianRational u{Rational((1 - t * t) / den), Rational(2 * t / den)};
    return flip ? -u : u;
}

}  // namespace

Arrangement::Arrangement(std::vector<Circle> circles) : circles_(std::move(circles)) {
    for (const auto& c : circles_)
        if (sgn(c.r2) <= 0) throw Error("degenerate-arrangement", "circle with non-positive radius " + c.str());
    std::sort(circles_.begin(), circles_.end());
    circles_.erase(std::unique(circles_.begin(), circles_.end()), circles_.end());
    const std::size_t n = circles_.size();

    std::vector<std::vector<QPoint>> on_circle(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Circle& a = circles_[i];
            const Circle& b = circles_[j];
            GaussianRational d = b.center - a.center;
            Rational dist2 = d.norm();
            Rational e = dist2 - a.r2 - b.r2;
            int cmp = sgn(Rational(e * e - 4 * a.r2 * b.r2));
            if (cmp == 0)
                throw Error("degenerate-arrangement", "tangent circles " + a.str() + " and " + b.str());
            if (cmp > 0) continue;
            Rational along = (dist2 + a.r2 - b.r2) / (2 * dist2);
            GaussianRational foot = a.center + GaussianRational(along) * d;
            Rational s = a.r2 / dist2 - along * along;
            GaussianRational w = GaussianRational::i() * d;
            for (int sgn_w : {1, -1}) {
                QPoint v{foot, sgn_w > 0 ? w : -w, s};
                ArrangementVertex vert{v, std::vector<std::uint8_t>(n)};
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == i || k == j) {
                        vert.signs[k] = kOn;
                        continue;
                    }
                    Side side = side_of(circles_[k], v);
                    if (side == kOn)
                        throw Error("degenerate-arrangement", "three circles through one point, including " +
                                                                  a.str() + " and " + b.str());
                    vert.signs[k] = side;
                }
                on_circle[i].push_back(v);
                on_circle[j].push_back(v);
                vertices_.push_back(std::move(vert));
            }
        }

    std::set<std::vector<std::uint8_t>> arc_set, face_set;
    for (std::size_t i = 0; i < n; ++i) {
        const Circle& c = circles_[i];
        long double cx = c.center.re().get_d(), cy = c.center.im().get_d();
        std::vector<long double> angles;
        for (const auto& v : on_circle[i]) angles.push_back(std::atan2(v.y() - cy, v.x() - cx));
        std::sort(angles.begin(), angles.end());
        std::vector<std::pair<long double, long double>> mids;  // (angle, gap)
        if (angles.empty()) {
            mids.emplace_back(0.0L, 2 * kPi);
        } else {
            for (std::size_t k = 0; k < angles.size(); ++k) {
                long double lo = angles[k];
                long double hi = k + 1 < angles.size() ? angles[k + 1] : angles[0] + 2 * kPi;
                if (hi - lo < kMinGap)
                    throw Error("degenerate-arrangement", "vertices too close to separate on " + c.str());
                long double mid = (lo + hi) / 2;
                if (mid > kPi) mid -= 2 * kPi;
                mids.emplace_back(mid, hi - lo);
            }
        }
        for (const auto& [phi, gap] : mids) {
            int bits = std::max(12, static_cast<int>(std::ceil(std::log2(64.0L / gap))));
            QPoint witness{c.center, rational_direction(phi, bits), c.r2};
            std::vector<std::uint8_t> signs(n);
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i) {
                    signs[k] = kOn;
                    continue;
                }
                Side side = side_of(circles_[k], witness);
                if (side == kOn) throw Error("degenerate-arrangement", "arc witness landed on " + circles_[k].str());
                signs[k] = side;
            }
            arc_set.insert(signs);
            auto inside = signs, outside = signs;
            inside[i] = kIn;
            outside[i] = kOut;
            face_set.insert(inside);
            face_set.insert(outside);
        }
    }
    if (n == 0) face_set.insert({});
    faces_.assign(face_set.begin(), face_set.end());
    arcs_.assign(arc_set.begin(), arc_set.end());
}

std::size_t Arrangement::index_of(const Circle& c) const {
    auto it = std::lower_bound(circles_.begin(), circles_.end(), c);
    if (it == circles_.end() || !(*it == c)) throw Error("degenerate-arrangement", "circle not in arrangement");
    return static_cast<std::size_t>(it - circles_.begin());
}

std::vector<std::uint8_t> Arrangement::signs_of(const GaussianRational& z) const {
    std::vector<std::uint8_t> signs;
    signs.reserve(circles_.size());
    for (const auto& c : circles_) signs.push_back(side_of(c, z));
    return signs;
}

}  // namespace opspec
