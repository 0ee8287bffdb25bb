#include "opspec/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

namespace opspec {

namespace {

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& s : items) out += (out.empty() ? "" : ", ") + s;
    return out;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected, const std::string& found)
    : Error("syntax-error", "line " + std::to_string(line) + ", column " + std::to_string(column) + ": expected " +
                                join(expected) + " but found " + found),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

namespace {

enum class Tok { Ident, Number, Symbol, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t offset;
};

std::vector<Token> tokenize(std::string_view s, std::vector<std::size_t>& line_starts) {
    std::vector<Token> out;
    line_starts = {0};
    std::size_t i = 0;
    while (i < s.size()) {
        char ch = s[i];
        if (ch == '\n') line_starts.push_back(i + 1);
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Tok::Number, std::string(s.substr(start, i - start)), start});
        } else if (s.substr(i, 3) == "(+)") {
            i += 3;
            out.push_back({Tok::Symbol, "(+)", start});
        } else {
            ++i;
            out.push_back({Tok::Symbol, std::string(1, ch), start});
        }
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : line_starts_(), tokens_(tokenize(text, line_starts_)) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        expect_end();
        return e;
    }

private:
    std::vector<std::size_t> line_starts_;  // filled by tokenize, so declared first
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::set<std::string> expected_;  // alternatives tried at the current position

    const Token& peek(std::size_t ahead = 0) const { return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)]; }

    void advance() {
        ++pos_;
        expected_.clear();
    }

    bool is_symbol(const std::string& s, std::size_t ahead = 0) const {
        return peek(ahead).kind == Tok::Symbol && peek(ahead).text == s;
    }
    bool is_ident(const std::string& s, std::size_t ahead = 0) const {
        return peek(ahead).kind == Tok::Ident && peek(ahead).text == s;
    }

    bool accept_symbol(const std::string& s) {
        expected_.insert("'" + s + "'");
        if (!is_symbol(s)) return false;
        advance();
        return true;
    }
    bool accept_ident(const std::string& s) {
        expected_.insert("'" + s + "'");
        if (!is_ident(s)) return false;
        advance();
        return true;
    }

    [[noreturn]] void fail() {
        const Token& t = peek();
        auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), t.offset);
        std::size_t line = static_cast<std::size_t>(it - line_starts_.begin());
        std::size_t column = t.offset - *(it - 1);
        std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
        throw ParseError(line, column, {expected_.begin(), expected_.end()}, found);
    }

    void expect_symbol(const std::string& s) {
        if (!accept_symbol(s)) fail();
    }
    void expect_ident(const std::string& s) {
        if (!accept_ident(s)) fail();
    }
    void expect_end() {
        expected_.insert("end of input");
        if (peek().kind != Tok::End) fail();
    }

    std::string number() {
        expected_.insert("number");
        if (peek().kind != Tok::Number) fail();
        std::string s = peek().text;
        advance();
        return s;
    }

    std::uint64_t nat() {
        std::string s = number();
        if (s.size() > 18) fail();
        return std::stoull(s);
    }

    Rational ufrac() {
        std::string text = number();
        if (accept_symbol("/")) {
            std::size_t at = pos_;
            std::string den = number();
            if (den.find_first_not_of('0') == std::string::npos) {
                pos_ = at;
                expected_ = {"nonzero denominator"};
                fail();
            }
            text += "/" + den;
        }
        return parse_rational(text);
    }

    Rational rational() {
        bool negative = accept_symbol("-");
        Rational r = ufrac();
        return negative ? Rational(-r) : r;
    }

    bool at_scalar() const {
        return peek().kind == Tok::Number || (is_symbol("-") && peek(1).kind == Tok::Number);
    }

    GaussianRational scalar() {
        Rational re = rational();
        // An imaginary part needs "+ n i" or "- n i"; anything else ends the scalar.
        for (const char* sign : {"+", "-"}) {
            if (!is_symbol(sign) || peek(1).kind != Tok::Number) continue;
            std::size_t k = 2;
            if (is_symbol("/", 2) && peek(3).kind == Tok::Number) k = 4;
            if (!is_ident("i", k)) continue;
            advance();
            Rational im = ufrac();
            expect_ident("i");
            return {re, std::string(sign) == "-" ? Rational(-im) : im};
        }
        return re;
    }

    ExprPtr expr() {
        ExprPtr e = term();
        while (accept_symbol("(+)")) e = make_dsum(e, term());
        return e;
    }

    ExprPtr term() {
        ExprPtr e;
        if (at_scalar()) {
            GaussianRational c = scalar();
            expect_symbol("*");
            e = make_scale(c, term());
        } else {
            e = atom();
        }
        // term "-" scalar "*" "I"
        while (is_symbol("-")) {
            advance();
            GaussianRational s = scalar();
            expect_symbol("*");
            expect_ident("I");
            e = make_translate(-s, e);
        }
        return e;
    }

    ExprPtr atom() {
        expected_.insert("scalar");
        if (accept_symbol("(")) {
            ExprPtr e = expr();
            expect_symbol(")");
            return e;
        }
        if (accept_ident("adj")) {
            expect_symbol("(");
            ExprPtr e = expr();
            expect_symbol(")");
            return make_adj(e);
        }
        if (accept_ident("matrix")) return matrix();
        if (accept_ident("diag")) {
            expect_symbol("(");
            ExprPtr e = diag();
            expect_symbol(")");
            return e;
        }
        if (accept_ident("shift")) {
            expect_symbol("(");
            ExprPtr e = weights();
            expect_symbol(")");
            return e;
        }
        if (accept_ident("jordan")) {
            expect_symbol("(");
            GaussianRational lambda = scalar();
            expect_symbol(",");
            std::uint64_t n = nat();
            expect_symbol(")");
            return make_jordan(lambda, n);
        }
        fail();
    }

    std::vector<GaussianRational> row() {
        expect_symbol("[");
        std::vector<GaussianRational> r{scalar()};
        while (accept_symbol(",")) r.push_back(scalar());
        expect_symbol("]");
        return r;
    }

    ExprPtr matrix() {
        expect_symbol("(");
        std::size_t at = pos_;
        expect_symbol("[");
        std::vector<std::vector<GaussianRational>> rows{row()};
        while (accept_symbol(",")) rows.push_back(row());
        expect_symbol("]");
        expect_symbol(")");
        for (const auto& r : rows)
            if (r.size() != rows.size()) {
                pos_ = at;
                expected_ = {"square matrix"};
                fail();
            }
        ExactMatrix m(rows.size(), rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
        return make_matrix(m);
    }

    ExprPtr diag() {
        if (accept_ident("harmonic")) return make_diag_harmonic();
        if (accept_ident("geometric")) {
            expect_symbol("(");
            Rational q = rational();
            expect_symbol(")");
            return make_diag_geometric(q);
        }
        expect_ident("list");
        expect_symbol("[");
        std::vector<DiagEntry> entries{entry()};
        while (accept_symbol(",")) entries.push_back(entry());
        expect_symbol("]");
        return make_diag_list(entries);
    }

    DiagEntry entry() {
        DiagEntry d{scalar(), 1};
        if (accept_symbol("^")) {
            if (accept_ident("inf"))
                d.multiplicity = ExtNat::inf();
            else
                d.multiplicity = nat();
        }
        return d;
    }

    ExprPtr weights() {
        if (accept_ident("const")) {
            expect_symbol("(");
            Rational w = rational();
            expect_symbol(")");
            return make_shift_const(w);
        }
        if (accept_ident("geometric")) {
            expect_symbol("(");
            Rational q = rational();
            expect_symbol(")");
            return make_shift_geometric(q);
        }
        expect_ident("invfact");
        return make_shift_invfact();
    }
};

std::string scalar_text(const GaussianRational& z) {
    std::string out = z.re().get_str();
    if (sgn(z.im()) > 0) out += "+" + z.im().get_str() + "i";
    if (sgn(z.im()) < 0) out += "-" + Rational(-z.im()).get_str() + "i";
    return out;
}

std::string print_term(const Expr& e);

std::string parenthesized(const Expr& e) { return "(" + print_expr(e) + ")"; }

std::string print_term(const Expr& e) {
    switch (e.kind) {
        case ExprKind::Matrix: {
            std::string out = "matrix([";
            for (std::size_t i = 0; i < e.matrix.rows(); ++i) {
                out += i ? ", [" : "[";
                for (std::size_t j = 0; j < e.matrix.cols(); ++j) out += (j ? ", " : "") + scalar_text(e.matrix(i, j));
                out += "]";
            }
            return out + "])";
        }
        case ExprKind::Diag:
            switch (e.diag_kind) {
                case DiagKind::Harmonic:
                    return "diag(harmonic)";
                case DiagKind::Geometric:
                    return "diag(geometric(" + e.parameter.get_str() + "))";
                case DiagKind::List: {
                    std::string out = "diag(list[";
                    for (std::size_t i = 0; i < e.entries.size(); ++i) {
                        out += (i ? ", " : "") + scalar_text(e.entries[i].value);
                        if (!(e.entries[i].multiplicity == ExtNat(1))) out += "^" + e.entries[i].multiplicity.str();
                    }
                    return out + "])";
                }
            }
            break;
        case ExprKind::Shift:
            switch (e.weight_kind) {
                case WeightKind::Const:
                    return "shift(const(" + e.parameter.get_str() + "))";
                case WeightKind::Geometric:
                    return "shift(geometric(" + e.parameter.get_str() + "))";
                case WeightKind::InvFact:
                    return "shift(invfact)";
            }
            break;
        case ExprKind::Jordan:
            return "jordan(" + scalar_text(e.scalar) + ", " + std::to_string(e.size) + ")";
        case ExprKind::Adj:
            return "adj(" + print_expr(*e.left) + ")";
        case ExprKind::Scale:
            // A scale swallows everything to its right, so only sums need parentheses.
            return scalar_text(e.scalar) + "*" +
                   (e.left->kind == ExprKind::DirectSum ? parenthesized(*e.left) : print_term(*e.left));
        case ExprKind::Translate: {
            const Expr& inner = *e.left;
            bool wrap = inner.kind == ExprKind::DirectSum || inner.kind == ExprKind::Scale;
            return (wrap ? parenthesized(inner) : print_term(inner)) + " - " + scalar_text(-e.scalar) + "*I";
        }
        case ExprKind::DirectSum:
            return parenthesized(e);
    }
    return "";
}

}  // namespace

ExprPtr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string print_expr(const Expr& e) {
    if (e.kind != ExprKind::DirectSum) return print_term(e);
    return print_expr(*e.left) + " (+) " + print_term(*e.right);
}

}  // namespace opspec
