#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "opspec/geometry.hpp"
#include "opspec/sequence.hpp"

namespace opspec {

/// One sign condition: the side of `circle` must be in `mask`.
struct Constraint {
    Circle circle;
    std::uint8_t mask = kAllSides;
};

/// Intersection of sign conditions on distinct circles, kept sorted by circle.
/// Circles, closed/open discs and annuli are all cells.
struct CellShape {
    std::vector<Constraint> constraints;

    bool contains(const GaussianRational& z) const;
    /// True when two or more constraints pin the point to a circle; such cells
    /// are finite sets of arrangement vertices.
    bool is_vertex_set() const;
};

using PointSet = std::vector<GaussianRational>;

/// A point set, a sequence or a cell, minus finitely many listed points and
/// sequences. Exceptions let a picture carve discrete spectral points out of
/// a continuous cell.
struct Piece {
    std::variant<PointSet, Sequence, CellShape> shape;
    PointSet except_points;
    std::vector<Sequence> except_seqs;

    bool is_points() const { return std::holds_alternative<PointSet>(shape); }
    bool is_sequence() const { return std::holds_alternative<Sequence>(shape); }
    bool is_cell() const { return std::holds_alternative<CellShape>(shape); }
    const PointSet& points() const { return std::get<PointSet>(shape); }
    const Sequence& sequence() const { return std::get<Sequence>(shape); }
    const CellShape& cell() const { return std::get<CellShape>(shape); }

    bool shape_contains(const GaussianRational& z) const;
    bool contains(const GaussianRational& z) const;
    /// Canonical text, used for ordering and structural equality.
    std::string key() const;
};

/// Finite union of pieces. Always normalized: no piece is contained in another,
/// discrete elements covered by other pieces are absorbed and cells are widened
/// to the largest sign-condition box that stays inside the region.
class Region {
public:
    Region() = default;
    explicit Region(std::vector<Piece> pieces);

    static Region points(std::vector<GaussianRational> pts);
    static Region sequence(const Sequence& s);
    static Region circle(const GaussianRational& center, const Rational& r2);
    /// A zero radius gives the single point {center}.
    static Region closed_disc(const GaussianRational& center, const Rational& r2);
    static Region open_disc(const GaussianRational& center, const Rational& r2);
    /// r_in2 == r_out2 gives a circle and r_in2 == 0 a closed disc.
    static Region annulus(const GaussianRational& center, const Rational& r_in2, const Rational& r_out2);
    static Region open_annulus(const GaussianRational& center, const Rational& r_in2, const Rational& r_out2);
    static Region cell(CellShape shape);

    const std::vector<Piece>& pieces() const { return pieces_; }
    bool empty() const { return pieces_.empty(); }
    /// All circles mentioned by cell pieces.
    std::vector<Circle> circles() const;
    std::string str() const;

    friend bool operator==(const Region& a, const Region& b);

private:
    std::vector<Piece> pieces_;
};

bool member(const Region& r, const GaussianRational& z);
Region unite(const Region& a, const Region& b);
Region unite(const std::vector<Region>& parts);
Region acc(const Region& r);
Region iso(const Region& r);
bool subset(const Region& a, const Region& b);
bool equal(const Region& a, const Region& b);
Region conjugate(const Region& r);
/// Image under z -> c z + d; c must be nonzero.
Region affine(const Region& r, const GaussianRational& c, const GaussianRational& d);

/// Eventual membership of a sequence in a region: for n >= threshold,
/// s.point(n) is in the region iff `tail`.
struct SeqProfile {
    long threshold = 0;
    bool tail = false;
};
SeqProfile profile(const Sequence& s, const std::vector<Piece>& pieces);

}  // namespace opspec
