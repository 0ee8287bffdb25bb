#include "opspec/region.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "opspec/error.hpp"

namespace opspec {

namespace {

constexpr long kHeadLimit = 200000;

void check_head(const Sequence& s, long threshold) {
    if (threshold - s.start() > kHeadLimit)
        throw Error("degenerate-arrangement", "sequence needs more than " + std::to_string(kHeadLimit) +
                                                  " explicit elements: " + s.str());
}

bool contains_point(const PointSet& pts, const GaussianRational& z) {
    return std::binary_search(pts.begin(), pts.end(), z);
}

void sort_unique(PointSet& pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

std::string mask_str(std::uint8_t mask) {
    std::string out;
    if (mask & kIn) out += "i";
    if (mask & kOn) out += "o";
    if (mask & kOut) out += "x";
    return out;
}

/// Cell constraints resolved to arrangement indices.
struct BoundCell {
    std::vector<std::pair<std::size_t, std::uint8_t>> terms;

    BoundCell(const CellShape& c, const Arrangement& arr) {
        for (const auto& k : c.constraints) terms.emplace_back(arr.index_of(k.circle), k.mask);
    }
    bool holds(const std::vector<std::uint8_t>& signs) const {
        return std::all_of(terms.begin(), terms.end(), [&](const auto& t) { return (t.second & signs[t.first]) != 0; });
    }
};

/// Every realised sign vector, with vertices listed individually.
struct Strata {
    std::vector<std::vector<std::uint8_t>> generic;  // faces and arcs
    std::vector<ArrangementVertex> vertices;

    explicit Strata(const Arrangement& arr) : vertices(arr.vertices()) {
        generic = arr.faces();
        generic.insert(generic.end(), arr.arcs().begin(), arr.arcs().end());
    }
    template <class F>
    bool all_of(F f) const {
        for (const auto& v : generic)
            if (!f(v)) return false;
        for (const auto& v : vertices)
            if (!f(v.signs)) return false;
        return true;
    }
    template <class F>
    bool any_of(F f) const {
        return !all_of([&](const auto& v) { return !f(v); });
    }
};

std::vector<Circle> circles_of(const std::vector<Piece>& pieces) {
    std::vector<Circle> out;
    for (const auto& p : pieces)
        if (p.is_cell())
            for (const auto& k : p.cell().constraints) out.push_back(k.circle);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool any_contains(const std::vector<Piece>& pieces, const GaussianRational& z, std::size_t skip = SIZE_MAX) {
    for (std::size_t j = 0; j < pieces.size(); ++j)
        if (j != skip && pieces[j].contains(z)) return true;
    return false;
}

std::vector<Piece> without(const std::vector<Piece>& pieces, std::size_t skip) {
    std::vector<Piece> out;
    for (std::size_t j = 0; j < pieces.size(); ++j)
        if (j != skip) out.push_back(pieces[j]);
    return out;
}

/// Cell constraints sorted, merged per circle, trivial ones dropped.
/// Returns false if the cell is empty.
bool canonical_cell(CellShape& cell) {
    std::map<Circle, std::uint8_t> merged;
    for (const auto& k : cell.constraints) {
        auto [it, fresh] = merged.emplace(k.circle, k.mask);
        if (!fresh) it->second &= k.mask;
    }
    cell.constraints.clear();
    for (const auto& [c, mask] : merged) {
        if (mask == 0) return false;
        if (mask != kAllSides) cell.constraints.push_back({c, mask});
    }
    std::vector<Circle> cs;
    for (const auto& k : cell.constraints) cs.push_back(k.circle);
    Arrangement arr(cs);
    BoundCell bound(cell, arr);
    return Strata(arr).any_of([&](const auto& v) { return bound.holds(v); });
}

/// Canonical form of a single piece; may turn a sequence into points.
/// Returns false if the piece is empty.
bool canonical_piece(Piece& p) {
    sort_unique(p.except_points);
    if (p.is_points()) {
        sort_unique(std::get<PointSet>(p.shape));
        PointSet kept;
        for (const auto& z : p.points())
            if (p.contains(z)) kept.push_back(z);
        sort_unique(kept);
        p = Piece{kept, {}, {}};
        return !kept.empty();
    }
    if (p.is_sequence()) {
        Sequence s = p.sequence();
        // Except sequences become finite except-point lists or cut the sequence short.
        long finite_end = -1;
        PointSet removed = p.except_points;
        for (const auto& e : p.except_seqs) {
            SeqComparison c = compare_tail(s, e);
            check_head(s, c.threshold);
            for (long n = s.start(); n < c.threshold; ++n)
                if (e.contains(s.point(n))) removed.push_back(s.point(n));
            if (c.contained) finite_end = finite_end < 0 ? c.threshold : std::min(finite_end, c.threshold);
        }
        sort_unique(removed);
        if (finite_end >= 0) {
            PointSet pts;
            for (long n = s.start(); n < finite_end; ++n)
                if (!contains_point(removed, s.point(n))) pts.push_back(s.point(n));
            p = Piece{pts, {}, {}};
            return canonical_piece(p);
        }
        long start = s.start();
        while (contains_point(removed, s.point(start))) ++start;
        s = s.tail_from(start);
        PointSet kept;
        for (const auto& z : removed)
            if (s.contains(z)) kept.push_back(z);
        p = Piece{s, kept, {}};
        return true;
    }
    CellShape cell = p.cell();
    if (!canonical_cell(cell)) return false;
    PointSet kept;
    for (const auto& z : p.except_points)
        if (cell.contains(z)) kept.push_back(z);
    std::vector<Sequence> kept_seqs;
    std::vector<Piece> shape_only{Piece{cell, {}, {}}};
    for (const auto& e : p.except_seqs) {
        SeqProfile prof = profile(e, shape_only);
        check_head(e, prof.threshold);
        if (prof.tail) {
            kept_seqs.push_back(e);
            continue;
        }
        for (long n = e.start(); n < prof.threshold; ++n)
            if (cell.contains(e.point(n))) kept.push_back(e.point(n));
    }
    sort_unique(kept);
    std::sort(kept_seqs.begin(), kept_seqs.end(), [](const Sequence& a, const Sequence& b) { return a.str() < b.str(); });
    kept_seqs.erase(std::unique(kept_seqs.begin(), kept_seqs.end()), kept_seqs.end());
    p = Piece{cell, kept, kept_seqs};
    return true;
}

/// Drops discrete elements (and exceptions) already covered by other pieces.
void absorb(std::vector<Piece>& pieces) {
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        Piece& p = pieces[i];
        if (p.is_points()) {
            PointSet kept;
            for (const auto& z : p.points())
                if (!any_contains(pieces, z, i)) kept.push_back(z);
            p.shape = kept;
        } else if (p.is_sequence()) {
            const Sequence s = p.sequence();
            std::vector<Piece> others = without(pieces, i);
            SeqProfile prof = profile(s, others);
            check_head(s, prof.threshold);
            auto covered = [&](long n) { return any_contains(others, s.point(n)); };
            if (prof.tail) {
                PointSet pts;
                for (long n = s.start(); n < prof.threshold; ++n)
                    if (p.contains(s.point(n)) && !covered(n)) pts.push_back(s.point(n));
                p = Piece{pts, {}, {}};
            } else {
                long start = s.start();
                while (start < prof.threshold && (covered(start) || !p.contains(s.point(start)))) ++start;
                Sequence t = s.tail_from(start);
                PointSet ex;
                for (const auto& z : p.except_points)
                    if (t.contains(z) && !any_contains(others, z)) ex.push_back(z);
                p = Piece{t, ex, {}};
                canonical_piece(p);
            }
        } else {
            PointSet ex;
            for (const auto& z : p.except_points)
                if (!any_contains(pieces, z, i)) ex.push_back(z);
            std::vector<Sequence> ex_seqs;
            std::vector<Piece> others = without(pieces, i);
            for (const auto& e : p.except_seqs) {
                SeqProfile prof = profile(e, others);
                check_head(e, prof.threshold);
                bool all_covered = prof.tail;
                for (long n = e.start(); all_covered && n < prof.threshold; ++n)
                    if (p.shape_contains(e.point(n)) && !any_contains(others, e.point(n))) all_covered = false;
                if (!all_covered) ex_seqs.push_back(e);
            }
            p.except_points = ex;
            p.except_seqs = ex_seqs;
        }
    }
    pieces.erase(std::remove_if(pieces.begin(), pieces.end(),
                                [](const Piece& p) { return p.is_points() && p.points().empty(); }),
                 pieces.end());
}

/// Grows every exception-free cell to the largest box of sign conditions whose
/// realised strata all lie in the region, then removes cells contained in others.
void widen_and_prune(std::vector<Piece>& pieces) {
    std::vector<Circle> cs = circles_of(pieces);
    if (cs.empty()) return;
    Arrangement arr(cs);
    Strata strata(arr);
    const std::size_t n = cs.size();

    auto covered = [&](const std::vector<std::uint8_t>& v) {
        for (const auto& p : pieces)
            if (p.is_cell() && p.except_points.empty() && p.except_seqs.empty() && BoundCell(p.cell(), arr).holds(v))
                return true;
        return false;
    };
    std::map<std::vector<std::uint8_t>, bool> cover_cache;
    auto covered_cached = [&](const std::vector<std::uint8_t>& v) {
        auto it = cover_cache.find(v);
        if (it != cover_cache.end()) return it->second;
        bool c = covered(v);
        cover_cache.emplace(v, c);
        return c;
    };
    auto box_holds = [](const std::vector<std::uint8_t>& masks, const std::vector<std::uint8_t>& v) {
        for (std::size_t k = 0; k < masks.size(); ++k)
            if ((masks[k] & v[k]) == 0) return false;
        return true;
    };

    for (auto& p : pieces) {
        if (!p.is_cell() || !p.except_points.empty() || !p.except_seqs.empty()) continue;
        std::vector<std::uint8_t> masks(n, kAllSides);
        for (const auto& k : p.cell().constraints) masks[arr.index_of(k.circle)] = k.mask;
        for (std::size_t k = 0; k < n; ++k)
            for (std::uint8_t bit : {kIn, kOn, kOut}) {
                if (masks[k] & bit) continue;
                auto trial = masks;
                trial[k] |= bit;
                bool ok = strata.all_of([&](const auto& v) { return !box_holds(trial, v) || covered_cached(v); });
                if (ok) masks = trial;
            }
        CellShape widened;
        for (std::size_t k = 0; k < n; ++k)
            if (masks[k] != kAllSides) widened.constraints.push_back({cs[k], masks[k]});
        p.shape = widened;
    }

    // Remove cells whose strata are inside another single piece.
    std::vector<bool> dead(pieces.size(), false);
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (!pieces[i].is_cell()) continue;
        BoundCell bi(pieces[i].cell(), arr);
        for (std::size_t j = 0; j < pieces.size() && !dead[i]; ++j) {
            if (j == i || dead[j] || !pieces[j].is_cell()) continue;
            const Piece& pj = pieces[j];
            if (!pj.except_seqs.empty()) continue;
            if (std::any_of(pj.except_points.begin(), pj.except_points.end(),
                            [&](const auto& z) { return pieces[i].contains(z); }))
                continue;
            BoundCell bj(pj.cell(), arr);
            if (strata.all_of([&](const auto& v) { return !bi.holds(v) || bj.holds(v); })) dead[i] = true;
        }
    }
    std::vector<Piece> kept;
    for (std::size_t i = 0; i < pieces.size(); ++i)
        if (!dead[i]) kept.push_back(std::move(pieces[i]));
    pieces = std::move(kept);
}

std::vector<Piece> normalize(std::vector<Piece> pieces) {
    std::vector<Piece> canon;
    for (auto& p : pieces)
        if (canonical_piece(p)) canon.push_back(std::move(p));
    absorb(canon);
    widen_and_prune(canon);
    for (auto& p : canon) canonical_piece(p);
    absorb(canon);

    PointSet all_points;
    std::vector<Piece> out;
    for (auto& p : canon) {
        if (p.is_points())
            all_points.insert(all_points.end(), p.points().begin(), p.points().end());
        else
            out.push_back(std::move(p));
    }
    sort_unique(all_points);
    if (!all_points.empty()) out.push_back(Piece{all_points, {}, {}});
    std::sort(out.begin(), out.end(), [](const Piece& a, const Piece& b) { return a.key() < b.key(); });
    out.erase(std::unique(out.begin(), out.end(), [](const Piece& a, const Piece& b) { return a.key() == b.key(); }),
              out.end());
    return out;
}

Circle map_circle(const Circle& c, const GaussianRational& a, const GaussianRational& d) {
    return {a * c.center + d, a.norm() * c.r2};
}

Piece map_piece(const Piece& p, const GaussianRational& a, const GaussianRational& d, bool conj) {
    auto pt = [&](const GaussianRational& z) { return a * (conj ? z.conj() : z) + d; };
    auto seq = [&](const Sequence& s) { return (conj ? s.conjugated() : s).mapped(a, d); };
    Piece out;
    if (p.is_points()) {
        PointSet pts;
        for (const auto& z : p.points()) pts.push_back(pt(z));
        out.shape = pts;
    } else if (p.is_sequence()) {
        out.shape = seq(p.sequence());
    } else {
        CellShape cell;
        for (const auto& k : p.cell().constraints) {
            Circle c = k.circle;
            if (conj) c.center = c.center.conj();
            cell.constraints.push_back({map_circle(c, a, d), k.mask});
        }
        out.shape = cell;
    }
    for (const auto& z : p.except_points) out.except_points.push_back(pt(z));
    for (const auto& s : p.except_seqs) out.except_seqs.push_back(seq(s));
    return out;
}

/// Every point and sequence mentioned anywhere in the pieces.
void collect_discrete(const std::vector<Piece>& pieces, PointSet& pts, std::vector<Sequence>& seqs) {
    for (const auto& p : pieces) {
        if (p.is_points()) pts.insert(pts.end(), p.points().begin(), p.points().end());
        if (p.is_sequence()) seqs.push_back(p.sequence());
        pts.insert(pts.end(), p.except_points.begin(), p.except_points.end());
        seqs.insert(seqs.end(), p.except_seqs.begin(), p.except_seqs.end());
    }
}

}  // namespace

bool CellShape::contains(const GaussianRational& z) const {
    return std::all_of(constraints.begin(), constraints.end(),
                       [&](const Constraint& k) { return (k.mask & side_of(k.circle, z)) != 0; });
}

bool CellShape::is_vertex_set() const {
    return std::count_if(constraints.begin(), constraints.end(), [](const Constraint& k) { return k.mask == kOn; }) >= 2;
}

bool Piece::shape_contains(const GaussianRational& z) const {
    if (is_points()) return contains_point(points(), z);
    if (is_sequence()) return sequence().contains(z);
    return cell().contains(z);
}

bool Piece::contains(const GaussianRational& z) const {
    if (!shape_contains(z)) return false;
    if (contains_point(except_points, z)) return false;
    return std::none_of(except_seqs.begin(), except_seqs.end(), [&](const Sequence& s) { return s.contains(z); });
}

std::string Piece::key() const {
    std::string out;
    if (is_points()) {
        out = "P{";
        for (const auto& z : points()) out += z.str() + ";";
        out += "}";
    } else if (is_sequence()) {
        out = "S" + sequence().str();
    } else {
        out = "C{";
        for (const auto& k : cell().constraints) out += k.circle.str() + ":" + mask_str(k.mask) + ";";
        out += "}";
    }
    if (!except_points.empty() || !except_seqs.empty()) {
        out += "\\{";
        for (const auto& z : except_points) out += z.str() + ";";
        for (const auto& s : except_seqs) out += s.str() + ";";
        out += "}";
    }
    return out;
}

Region::Region(std::vector<Piece> pieces) : pieces_(normalize(std::move(pieces))) {}

Region Region::points(std::vector<GaussianRational> pts) { return Region({Piece{std::move(pts), {}, {}}}); }

Region Region::sequence(const Sequence& s) { return Region({Piece{s, {}, {}}}); }

Region Region::cell(CellShape shape) { return Region({Piece{std::move(shape), {}, {}}}); }

Region Region::circle(const GaussianRational& center, const Rational& r2) {
    if (sgn(r2) <= 0) throw Error("bad-region", "circle radius must be positive");
    return cell(CellShape{{{Circle{center, r2}, kOn}}});
}

Region Region::closed_disc(const GaussianRational& center, const Rational& r2) {
    if (sgn(r2) < 0) throw Error("bad-region", "negative radius");
    if (sgn(r2) == 0) return points({center});
    return cell(CellShape{{{Circle{center, r2}, kIn | kOn}}});
}

Region Region::open_disc(const GaussianRational& center, const Rational& r2) {
    if (sgn(r2) < 0) throw Error("bad-region", "negative radius");
    if (sgn(r2) == 0) return {};
    return cell(CellShape{{{Circle{center, r2}, kIn}}});
}

Region Region::annulus(const GaussianRational& center, const Rational& r_in2, const Rational& r_out2) {
    if (sgn(r_in2) < 0 || r_in2 > r_out2) throw Error("bad-region", "annulus needs 0 <= r_in <= r_out");
    if (sgn(r_in2) == 0) return closed_disc(center, r_out2);
    if (r_in2 == r_out2) return circle(center, r_in2);
    return cell(CellShape{{{Circle{center, r_in2}, kOn | kOut}, {Circle{center, r_out2}, kIn | kOn}}});
}

Region Region::open_annulus(const GaussianRational& center, const Rational& r_in2, const Rational& r_out2) {
    if (sgn(r_in2) < 0 || r_in2 > r_out2) throw Error("bad-region", "annulus needs 0 <= r_in <= r_out");
    if (r_in2 == r_out2) return {};
    if (sgn(r_in2) == 0) return Region({Piece{CellShape{{{Circle{center, r_out2}, kIn}}}, {center}, {}}});
    return cell(CellShape{{{Circle{center, r_in2}, kOut}, {Circle{center, r_out2}, kIn}}});
}

std::vector<Circle> Region::circles() const { return circles_of(pieces_); }

std::string Region::str() const {
    if (pieces_.empty()) return "{}";
    std::string out;
    for (const auto& p : pieces_) out += (out.empty() ? "" : " u ") + p.key();
    return out;
}

bool operator==(const Region& a, const Region& b) {
    if (a.pieces_.size() != b.pieces_.size()) return false;
    for (std::size_t i = 0; i < a.pieces_.size(); ++i)
        if (a.pieces_[i].key() != b.pieces_[i].key()) return false;
    return true;
}

SeqProfile profile(const Sequence& s, const std::vector<Piece>& pieces) {
    SeqProfile out{s.start(), false};
    auto bump = [&](long n) { out.threshold = std::max(out.threshold, n); };
    auto point_threshold = [&](const GaussianRational& z) {
        if (auto idx = s.index_of(z)) bump(*idx + 1);
    };
    for (const auto& p : pieces) {
        bool tail = false;
        if (p.is_points()) {
            for (const auto& z : p.points()) point_threshold(z);
        } else if (p.is_sequence()) {
            SeqComparison c = compare_tail(s, p.sequence());
            bump(c.threshold);
            tail = c.contained;
        } else {
            tail = true;
            for (const auto& k : p.cell().constraints) {
                auto [n, side] = s.eventual_side(k.circle);
                bump(n);
                if ((k.mask & side) == 0) tail = false;
            }
        }
        for (const auto& z : p.except_points) point_threshold(z);
        for (const auto& e : p.except_seqs) {
            SeqComparison c = compare_tail(s, e);
            bump(c.threshold);
            if (c.contained) tail = false;
        }
        out.tail = out.tail || tail;
    }
    return out;
}

bool member(const Region& r, const GaussianRational& z) { return any_contains(r.pieces(), z); }

Region unite(const Region& a, const Region& b) {
    std::vector<Piece> all = a.pieces();
    all.insert(all.end(), b.pieces().begin(), b.pieces().end());
    return Region(std::move(all));
}

Region unite(const std::vector<Region>& parts) {
    std::vector<Piece> all;
    for (const auto& r : parts) all.insert(all.end(), r.pieces().begin(), r.pieces().end());
    return Region(std::move(all));
}

Region acc(const Region& r) {
    std::vector<Piece> out;
    for (const auto& p : r.pieces()) {
        if (p.is_sequence()) {
            out.push_back(Piece{PointSet{p.sequence().limit()}, {}, {}});
        } else if (p.is_cell() && !p.cell().is_vertex_set()) {
            CellShape closure = p.cell();
            for (auto& k : closure.constraints)
                if (k.mask & (kIn | kOut)) k.mask |= kOn;
            out.push_back(Piece{closure, {}, {}});
        }
    }
    return Region(std::move(out));
}

Region iso(const Region& r) {
    Region closure = acc(r);
    std::vector<Piece> out;
    PointSet pts;
    for (const auto& p : r.pieces()) {
        if (p.is_points()) {
            for (const auto& z : p.points())
                if (!member(closure, z)) pts.push_back(z);
        } else if (p.is_sequence()) {
            const Sequence& s = p.sequence();
            SeqProfile prof = profile(s, closure.pieces());
            check_head(s, prof.threshold);
            for (long n = s.start(); n < prof.threshold; ++n) {
                GaussianRational z = s.point(n);
                if (p.contains(z) && !member(closure, z)) pts.push_back(z);
            }
            if (!prof.tail) out.push_back(Piece{s.tail_from(prof.threshold), p.except_points, {}});
        } else if (p.cell().is_vertex_set()) {
            std::vector<Circle> cs = circles_of(r.pieces());
            Arrangement arr(cs);
            BoundCell self(p.cell(), arr);
            for (const auto& v : arr.vertices()) {
                if (!self.holds(v.signs)) continue;
                if (v.point.is_rational()) {
                    GaussianRational z = v.point.rational_value();
                    if (p.contains(z) && !member(closure, z)) pts.push_back(z);
                    continue;
                }
                bool in_closure = false;
                for (const auto& q : closure.pieces())
                    if (q.is_cell() && BoundCell(q.cell(), arr).holds(v.signs)) in_closure = true;
                if (in_closure) continue;
                CellShape exact;
                for (std::size_t k = 0; k < cs.size(); ++k) exact.constraints.push_back({cs[k], v.signs[k]});
                out.push_back(Piece{exact, {}, {}});
            }
        }
    }
    out.push_back(Piece{pts, {}, {}});
    return Region(std::move(out));
}

bool subset(const Region& a, const Region& b) {
    std::vector<Piece> both = a.pieces();
    both.insert(both.end(), b.pieces().begin(), b.pieces().end());
    Arrangement arr(circles_of(both));
    auto cells_hold = [&](const Region& r, const std::vector<std::uint8_t>& v) {
        for (const auto& p : r.pieces())
            if (p.is_cell() && BoundCell(p.cell(), arr).holds(v)) return true;
        return false;
    };
    Strata strata(arr);
    for (const auto& v : strata.generic)
        if (cells_hold(a, v) && !cells_hold(b, v)) return false;
    for (const auto& v : strata.vertices) {
        if (v.point.is_rational()) {
            GaussianRational z = v.point.rational_value();
            if (member(a, z) && !member(b, z)) return false;
        } else if (cells_hold(a, v.signs) && !cells_hold(b, v.signs)) {
            return false;
        }
    }
    PointSet pts;
    std::vector<Sequence> seqs;
    collect_discrete(both, pts, seqs);
    for (const auto& z : pts)
        if (member(a, z) && !member(b, z)) return false;
    for (const auto& s : seqs) {
        SeqProfile pa = profile(s, a.pieces());
        SeqProfile pb = profile(s, b.pieces());
        if (pa.tail && !pb.tail) return false;
        long threshold = std::max(pa.threshold, pb.threshold);
        check_head(s, threshold);
        for (long n = s.start(); n < threshold; ++n) {
            GaussianRational z = s.point(n);
            if (member(a, z) && !member(b, z)) return false;
        }
    }
    return true;
}

bool equal(const Region& a, const Region& b) { return subset(a, b) && subset(b, a); }

Region conjugate(const Region& r) {
    std::vector<Piece> out;
    for (const auto& p : r.pieces()) out.push_back(map_piece(p, 1, 0, true));
    return Region(std::move(out));
}

Region affine(const Region& r, const GaussianRational& c, const GaussianRational& d) {
    if (c.is_zero()) throw Error("bad-region", "affine map with c = 0");
    std::vector<Piece> out;
    for (const auto& p : r.pieces()) out.push_back(map_piece(p, c, d, false));
    return Region(std::move(out));
}

}  // namespace opspec
