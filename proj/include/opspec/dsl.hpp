#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "opspec/error.hpp"
#include "opspec/operator.hpp"

namespace opspec {

/// Syntax error at a 1-based line and 0-based column.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected, const std::string& found);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    /// Tokens that would have been accepted, sorted.
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::vector<std::string> expected_;
};

/// Parses the operator DSL:
///
///   expr    := term { "(+)" term }
///   term    := atom | scalar "*" term | term "-" scalar "*" "I" | "adj" "(" expr ")"
///   atom    := "matrix" "(" "[" row { "," row } "]" ")" | "diag" "(" seq ")"
///            | "shift" "(" weights ")" | "jordan" "(" scalar "," nat ")" | "(" expr ")"
///   row     := "[" scalar { "," scalar } "]"
///   seq     := "harmonic" | "geometric" "(" rational ")" | "list" "[" entry { "," entry } "]"
///   entry   := scalar [ "^" ( nat | "inf" ) ]
///   weights := "const" "(" rational ")" | "geometric" "(" rational ")" | "invfact"
///   scalar  := rational [ ("+" | "-") ufrac "i" ]
///   rational:= [ "-" ] ufrac          ufrac := nat [ "/" nat ]
///
/// Atoms are validated by the make_* constructors, so out-of-family
/// parameters raise their Error codes rather than a ParseError.
ExprPtr parse_expr(std::string_view text);

/// Normalized text; parse_expr(print_expr(e)) is structurally equal to e.
std::string print_expr(const Expr& e);

}  // namespace opspec
