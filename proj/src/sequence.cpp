#include "opspec/sequence.hpp"

#include <algorithm>

#include "opspec/error.hpp"

namespace opspec {

Sequence Sequence::harmonic(GaussianRational limit, GaussianRational scale, long start) {
    if (scale.is_zero()) throw Error("bad-sequence", "zero scale");
    if (start < 1) throw Error("bad-sequence", "harmonic sequences start at n >= 1");
    Sequence s;
    s.family_ = SeqFamily::Harmonic;
    s.limit_ = std::move(limit);
    s.scale_ = std::move(scale);
    s.start_ = start;
    return s;
}

Sequence Sequence::geometric(Rational ratio, GaussianRational limit, GaussianRational scale, long start) {
    if (scale.is_zero()) throw Error("bad-sequence", "zero scale");
    if (sgn(ratio) <= 0 || ratio >= 1) throw Error("bad-sequence", "geometric ratio must lie in (0,1)");
    if (start < 0) throw Error("bad-sequence", "negative start");
    Sequence s;
    s.family_ = SeqFamily::Geometric;
    s.ratio_ = std::move(ratio);
    s.limit_ = std::move(limit);
    s.scale_ = scale * GaussianRational(rational_pow(s.ratio_, static_cast<std::uint64_t>(start)));
    s.start_ = 0;
    return s;
}

Rational Sequence::t(long n) const {
    if (family_ == SeqFamily::Harmonic) return Rational(1, n);
    return rational_pow(ratio_, static_cast<std::uint64_t>(n));
}

GaussianRational Sequence::point(long n) const { return limit_ + scale_ * GaussianRational(t(n)); }

std::optional<long> Sequence::index_of(const GaussianRational& z) const {
    GaussianRational w = (z - limit_) / scale_;
    if (!w.is_real() || sgn(w.re()) <= 0) return std::nullopt;
    const Rational& x = w.re();
    if (family_ == SeqFamily::Harmonic) {
        Rational inv = 1 / x;
        if (inv.get_den() != 1 || !inv.get_num().fits_slong_p()) return std::nullopt;
        long n = inv.get_num().get_si();
        if (n < start_) return std::nullopt;
        return n;
    }
    if (x > 1) return std::nullopt;
    Rational power(1);
    for (long n = 0;; ++n) {
        if (power == x) return n;
        if (power < x) return std::nullopt;
        power *= ratio_;
    }
}

Sequence Sequence::tail_from(long n) const {
    if (n < start_) throw Error("bad-sequence", "tail before start");
    if (family_ == SeqFamily::Harmonic) return harmonic(limit_, scale_, n);
    return geometric(ratio_, limit_, scale_, n);
}

Sequence Sequence::mapped(const GaussianRational& c, const GaussianRational& d) const {
    Sequence s = *this;
    s.limit_ = c * limit_ + d;
    s.scale_ = c * scale_;
    return s;
}

Sequence Sequence::conjugated() const {
    Sequence s = *this;
    s.limit_ = limit_.conj();
    s.scale_ = scale_.conj();
    return s;
}

long Sequence::first_within(const Rational& dist2) const {
    Rational a2 = scale_.norm();
    return first_true(start_, [&](long n) {
        Rational tn = t(n);
        return a2 * tn * tn < dist2;
    });
}

std::pair<long, Side> Sequence::eventual_side(const Circle& c) const {
    GaussianRational delta = limit_ - c.center;
    Rational g0 = delta.norm() - c.r2;
    Rational b = 2 * (delta.conj() * scale_).re();
    Rational a = scale_.norm();
    int ev = sgn(g0) != 0 ? sgn(g0) : (sgn(b) != 0 ? sgn(b) : 1);
    auto g = [&](const Rational& t) { return Rational(g0 + b * t + a * t * t); };
    Rational vertex = -b / (2 * a);
    auto ok = [&](long n) {
        Rational tn = t(n);
        if (sgn(g(tn)) != ev) return false;
        return !(sgn(vertex) > 0 && vertex < tn && sgn(g(vertex)) != ev);
    };
    return {first_true(start_, ok), side_from_sign(ev)};
}

std::string Sequence::str() const {
    std::string out = family_ == SeqFamily::Harmonic ? "harmonic" : "geometric(" + to_string(ratio_) + ")";
    out += "[limit=" + limit_.str() + ",scale=" + scale_.str() + ",start=" + std::to_string(start_) + "]";
    return out;
}

bool operator==(const Sequence& a, const Sequence& b) {
    return a.family_ == b.family_ && a.ratio_ == b.ratio_ && a.limit_ == b.limit_ && a.scale_ == b.scale_ &&
           a.start_ == b.start_;
}

namespace {

constexpr long kHeadLimit = 200000;

[[noreturn]] void incomparable(const Sequence& s, const Sequence& o) {
    throw Error("incomparable-sequences", s.str() + " vs " + o.str());
}

}  // namespace

SeqComparison compare_tail(const Sequence& s, const Sequence& o) {
    if (s.limit() != o.limit()) {
        Rational delta2 = (s.limit() - o.limit()).norm() / 4;
        long far_end = o.first_within(delta2);
        if (far_end - o.start() > kHeadLimit)
            throw Error("degenerate-arrangement", "sequence head too long: " + o.str());
        Rational eps2 = delta2;
        for (long m = o.start(); m < far_end; ++m) {
            Rational d2 = (o.point(m) - s.limit()).norm();
            if (sgn(d2) > 0 && d2 < eps2) eps2 = d2;
        }
        return {s.first_within(eps2), false};
    }
    GaussianRational r = o.scale() / s.scale();
    if (!r.is_real() || sgn(r.re()) <= 0) return {s.start(), false};
    const Rational& q = r.re();
    if (s.family() == SeqFamily::Harmonic && o.family() == SeqFamily::Harmonic) {
        // s(n) = o(m) iff m = q n
        if (q.get_den() != 1) incomparable(s, o);
        mpz_class p = q.get_num();
        if (!p.fits_slong_p()) incomparable(s, o);
        long factor = p.get_si();
        long from = std::max(s.start(), (o.start() + factor - 1) / factor);
        return {from, true};
    }
    if (s.family() == SeqFamily::Geometric && o.family() == SeqFamily::Geometric && s.ratio() == o.ratio()) {
        // s(n) = o(m) iff q = ratio^(n - m)
        const Rational& rho = s.ratio();
        long shift = 0;
        Rational power(1);
        if (q <= 1) {
            while (power > q) {
                power *= rho;
                ++shift;
            }
        } else {
            while (power < q) {
                power /= rho;
                --shift;
            }
        }
        if (power != q) return {s.start(), false};
        return {std::max(s.start(), shift + o.start()), true};
    }
    incomparable(s, o);
}

}  // namespace opspec
