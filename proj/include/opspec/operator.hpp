#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "opspec/matrix.hpp"
#include "opspec/region.hpp"

namespace opspec {

/// Natural number or infinity.
class ExtNat {
public:
    constexpr ExtNat(std::uint64_t v = 0) : value_(v) {}  // NOLINT(google-explicit-constructor)
    static constexpr ExtNat inf() {
        ExtNat e;
        e.inf_ = true;
        return e;
    }
    bool is_inf() const { return inf_; }
    bool finite() const { return !inf_; }
    std::uint64_t value() const { return value_; }

    friend ExtNat operator+(const ExtNat& a, const ExtNat& b) {
        if (a.inf_ || b.inf_) return inf();
        return {a.value_ + b.value_};
    }
    friend bool operator==(const ExtNat& a, const ExtNat& b) { return a.inf_ == b.inf_ && a.value_ == b.value_; }
    friend bool operator<(const ExtNat& a, const ExtNat& b) {
        if (a.inf_) return false;
        return b.inf_ || a.value_ < b.value_;
    }
    friend bool operator<=(const ExtNat& a, const ExtNat& b) { return !(b < a); }
    friend ExtNat max(const ExtNat& a, const ExtNat& b) { return a < b ? b : a; }

    std::string str() const { return inf_ ? "inf" : std::to_string(value_); }

private:
    std::uint64_t value_ = 0;
    bool inf_ = false;
};

/// Local data of lambda I - T at one point.
struct Classification {
    ExtNat alpha;
    ExtNat beta;
    bool range_closed = true;
    ExtNat ascent;
    ExtNat descent;
    ExtNat alpha_ev;
    ExtNat beta_ev;
    bool powers_range_closed = true;
    bool svep = true;
    bool svep_adj = true;
    bool admits_gkd = true;
    bool admits_gkrd = true;
    bool admits_gkmd = true;

    /// Invertible lambda I - T.
    static Classification resolvent() { return {}; }
    bool is_resolvent() const { return *this == resolvent(); }
    /// Direct-sum combination.
    friend Classification combine(const Classification& a, const Classification& b);
    friend bool operator==(const Classification& a, const Classification& b);
    friend bool operator<(const Classification& a, const Classification& b);
    /// Violated structural invariants (empty when consistent).
    std::vector<std::string> invariant_violations() const;
    std::string str() const;
};

enum class ExprKind { Matrix, Diag, Shift, Jordan, Adj, Scale, Translate, DirectSum };
enum class DiagKind { Harmonic, Geometric, List };
enum class WeightKind { Const, Geometric, InvFact };

struct DiagEntry {
    GaussianRational value;
    ExtNat multiplicity;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Operator expression tree. Built through the make_* helpers, which validate
/// that every atom belongs to a certified family.
struct Expr {
    ExprKind kind = ExprKind::Matrix;
    ExactMatrix matrix;                 // Matrix
    DiagKind diag_kind = DiagKind::Harmonic;
    WeightKind weight_kind = WeightKind::Const;
    Rational parameter{0};              // geometric ratio or constant weight
    std::vector<DiagEntry> entries;     // Diag list
    GaussianRational scalar;            // Jordan eigenvalue, Scale factor, Translate shift
    std::size_t size = 0;               // Jordan block size
    ExprPtr left;                       // operand (Adj, Scale, Translate) or left summand
    ExprPtr right;                      // right summand
};

ExprPtr make_matrix(ExactMatrix m);
ExprPtr make_diag_harmonic();
ExprPtr make_diag_geometric(Rational q);
ExprPtr make_diag_list(std::vector<DiagEntry> entries);
ExprPtr make_shift_const(Rational w);
ExprPtr make_shift_geometric(Rational q);
ExprPtr make_shift_invfact();
ExprPtr make_jordan(GaussianRational lambda, std::size_t size);
ExprPtr make_adj(ExprPtr e);
ExprPtr make_scale(GaussianRational c, ExprPtr e);
/// e + d I.
ExprPtr make_translate(GaussianRational d, ExprPtr e);
ExprPtr make_dsum(ExprPtr a, ExprPtr b);

bool expr_equal(const Expr& a, const Expr& b);

struct PictureCell {
    Region region;
    Classification cls;
};

/// Partition of C into cells with constant classification; points outside
/// every cell are resolvent points.
struct SpectralPicture {
    std::vector<PictureCell> cells;
    Classification default_cell = Classification::resolvent();

    /// Classification of the cell containing z.
    Classification lookup(const GaussianRational& z) const;
};

SpectralPicture picture(const Expr& e);
/// Exact pointwise classification (agrees with picture(e).lookup(z)).
Classification classify(const Expr& e, const GaussianRational& z);

struct NamedExpr {
    std::string name;
    ExprPtr expr;
    std::string text;  ///< DSL source
};
/// Curated instance library (parsed from DSL sources).
const std::vector<NamedExpr>& instance_library();

/// Certified eigenstructure of an exact matrix.
struct EigenData {
    GaussianRational value;
    std::size_t algebraic = 0;
    std::size_t geometric = 0;
    std::size_t index = 0;  ///< size of the largest Jordan block
};
/// Throws Error("unsupported-atom") if the characteristic polynomial does not
/// split over the Gaussian rationals.
std::vector<EigenData> certified_eigenvalues(const ExactMatrix& m);

}  // namespace opspec
