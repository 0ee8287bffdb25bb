#pragma once

#include <optional>
#include <string>
#include <utility>

#include "opspec/geometry.hpp"
#include "opspec/scalar.hpp"

namespace opspec {

enum class SeqFamily { Harmonic, Geometric };

/// Infinite discrete set {limit + scale * t_n : n >= start} with
/// t_n = 1/n (harmonic, start >= 1) or t_n = ratio^n (geometric, 0 < ratio < 1).
/// Geometric sequences are kept with start = 0 so that equal sets have equal
/// representations. Its only accumulation point is `limit`, which is not a member.
class Sequence {
public:
    static Sequence harmonic(GaussianRational limit = 0, GaussianRational scale = 1, long start = 1);
    static Sequence geometric(Rational ratio, GaussianRational limit = 0, GaussianRational scale = 1, long start = 0);

    SeqFamily family() const { return family_; }
    const Rational& ratio() const { return ratio_; }
    const GaussianRational& limit() const { return limit_; }
    const GaussianRational& scale() const { return scale_; }
    long start() const { return start_; }

    Rational t(long n) const;
    GaussianRational point(long n) const;
    /// The n with point(n) == z, if any.
    std::optional<long> index_of(const GaussianRational& z) const;
    bool contains(const GaussianRational& z) const { return index_of(z).has_value(); }

    /// Elements with index >= n (n >= start).
    Sequence tail_from(long n) const;
    /// Image under z -> c z + d, c != 0.
    Sequence mapped(const GaussianRational& c, const GaussianRational& d) const;
    Sequence conjugated() const;

    /// Smallest n >= start with |point(n) - limit|^2 < dist2 (dist2 > 0).
    long first_within(const Rational& dist2) const;
    /// Side of c that every element from the returned index on lies on.
    /// The eventual side is never kOn.
    std::pair<long, Side> eventual_side(const Circle& c) const;

    std::string str() const;
    friend bool operator==(const Sequence& a, const Sequence& b);

private:
    SeqFamily family_ = SeqFamily::Harmonic;
    Rational ratio_{0};
    GaussianRational limit_;
    GaussianRational scale_{1};
    long start_ = 1;
};

/// For n >= threshold, point(n) of the first sequence lies in the second iff `contained`.
struct SeqComparison {
    long threshold = 0;
    bool contained = false;
};

/// Throws Error("incomparable-sequences") when membership of the tail is not
/// eventually constant in a way this module can certify.
SeqComparison compare_tail(const Sequence& s, const Sequence& other);

/// Smallest n in [lo, inf) with pred(n) for a predicate that is monotone (false then true).
template <class Pred>
long first_true(long lo, Pred pred) {
    if (pred(lo)) return lo;
    long step = 1;
    long hi = lo + 1;
    while (!pred(hi)) {
        lo = hi;
        step *= 2;
        hi = lo + step;
    }
    while (hi - lo > 1) {
        long mid = lo + (hi - lo) / 2;
        if (pred(mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

}  // namespace opspec
