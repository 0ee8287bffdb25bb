#include "opspec/dsl.hpp"
#include "opspec/operator.hpp"

namespace opspec {

const std::vector<NamedExpr>& instance_library() {
    static const std::vector<NamedExpr> library = [] {
        const std::pair<const char*, const char*> sources[] = {
            {"identity", "matrix([[1, 0], [0, 1]])"},
            {"jordan_0_3", "jordan(0, 3)"},
            {"jordan_mixed", "jordan(2, 2) (+) jordan(0, 1)"},
            {"matrix_diag_2_0", "matrix([[2, 0], [0, 0]])"},
            {"matrix_defective", "matrix([[2, 1], [-1, 0]])"},
            {"matrix_rotation", "matrix([[0, -1], [1, 0]])"},
            {"diag_harmonic", "diag(harmonic)"},
            {"diag_geometric", "diag(geometric(1/2))"},
            {"diag_geometric_negative", "diag(geometric(-1/2))"},
            {"projection", "diag(list[1^inf, 0^inf])"},
            {"shift", "shift(const(1))"},
            {"backward_shift", "adj(shift(const(1)))"},
            {"shift_plus_backward", "shift(const(1)) (+) adj(shift(const(1)))"},
            {"quasinilpotent_shift", "shift(invfact)"},
            {"geometric_shift", "shift(geometric(1/2))"},
            {"backward_quasinilpotent_plus_harmonic", "adj(shift(invfact)) (+) diag(harmonic)"},
            {"shift_radius_2_plus_backward", "shift(const(2)) (+) adj(shift(const(1)))"},
            {"translated_shift", "shift(const(1)) - 1*I"},
            {"harmonic_in_shift_disc", "diag(harmonic) (+) shift(const(2))"},
            {"jordan_plus_backward_shift", "jordan(3, 2) (+) adj(shift(const(1)))"},
            {"mixed_meromorphic", "jordan(0, 2) (+) diag(harmonic) (+) diag(list[1, 1/2^2])"},
        };
        std::vector<NamedExpr> out;
        for (const auto& [name, text] : sources) out.push_back({name, parse_expr(text), text});
        return out;
    }();
    return library;
}

}  // namespace opspec
