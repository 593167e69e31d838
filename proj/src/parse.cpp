#include "dpd/parse.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace dpd {

namespace {

enum class Tok { Number, Var, DAtom, Plus, Minus, Star, Caret, Slash, FIdent, End };

struct Token {
    Tok kind;
    std::size_t pos;
    mpz_class number;        // Number
    std::size_t var = 0;     // Var (0-based)
    std::size_t dvar = 0;    // DAtom (0-based variable)
    std::uint32_t dorder = 0;
};

class Lexer {
  public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        cur_ = Token{Tok::End, pos_, 0, 0, 0, 0};
        if (pos_ >= text_.size()) return;
        const char c = text_[pos_];
        switch (c) {
            case '+': cur_.kind = Tok::Plus; ++pos_; return;
            case '-': cur_.kind = Tok::Minus; ++pos_; return;
            case '*': cur_.kind = Tok::Star; ++pos_; return;
            case '^': cur_.kind = Tok::Caret; ++pos_; return;
            case '/': cur_.kind = Tok::Slash; ++pos_; return;
            case 'f': cur_.kind = Tok::FIdent; ++pos_; return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            cur_.kind = Tok::Number;
            cur_.number = lex_integer();
            return;
        }
        if (c == 'x') {
            ++pos_;
            cur_.kind = Tok::Var;
            cur_.var = checked_index(lex_small_integer("variable index"));
            return;
        }
        if (c == 'D') {
            ++pos_;
            expect_char('[');
            cur_.kind = Tok::DAtom;
            cur_.dvar = checked_index(lex_small_integer("variable index"));
            expect_char(',');
            cur_.dorder = static_cast<std::uint32_t>(lex_small_integer("derivative order"));
            expect_char(']');
            return;
        }
        throw parse_error(std::string("unexpected character '") + c + "'", pos_);
    }

    mpz_class lex_integer() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
    }

    std::uint64_t lex_small_integer(const char* what) {
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            throw parse_error(std::string("expected ") + what, pos_);
        }
        mpz_class v = lex_integer();
        if (!v.fits_ulong_p()) throw parse_error(std::string(what) + " is too large", pos_);
        return v.get_ui();
    }

    std::size_t checked_index(std::uint64_t one_based) {
        if (one_based == 0) throw parse_error("variable indices start at 1", pos_);
        return static_cast<std::size_t>(one_based - 1);
    }

    void expect_char(char c) {
        if (pos_ >= text_.size() || text_[pos_] != c) {
            throw parse_error(std::string("expected '") + c + "'", pos_);
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token cur_;
};

// Shared expression parser. Operator atoms are accepted only in operator
// mode; products compose in written order (noncommutative there).
class ExprParser {
  public:
    ExprParser(Lexer& lex, std::size_t nvars, Field k, bool operators)
        : lex_(lex), n_(nvars), k_(k), operators_(operators) {}

    DiffOp parse_expression() {
        DiffOp acc(n_, k_);
        bool negative = consume_sign(true);
        acc += signed_term(negative);
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            negative = consume_sign(false);
            acc += signed_term(negative);
        }
        return acc;
    }

  private:
    bool consume_sign(bool optional) {
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            return true;
        }
        if (lex_.peek().kind == Tok::Plus) {
            lex_.take();
            return false;
        }
        if (!optional) throw parse_error("expected '+' or '-'", lex_.peek().pos);
        return false;
    }

    DiffOp signed_term(bool negative) {
        DiffOp t = parse_term();
        return negative ? -t : t;
    }

    DiffOp parse_term() {
        DiffOp acc = parse_factor();
        while (lex_.peek().kind == Tok::Star) {
            lex_.take();
            acc *= parse_factor();
        }
        return acc;
    }

    DiffOp parse_factor() {
        const Token t = lex_.peek();
        switch (t.kind) {
            case Tok::Number: {
                lex_.take();
                Scalar c = finish_scalar(t.number);
                return DiffOp::of_scalar(n_, c);
            }
            case Tok::Var: {
                lex_.take();
                if (t.var >= n_) throw parse_error("variable index out of range", t.pos);
                std::uint32_t e = parse_exponent();
                return DiffOp::of_polynomial(Polynomial::variable(n_, t.var, k_).pow(e));
            }
            case Tok::DAtom: {
                if (!operators_) throw parse_error("derivative atoms are not allowed here", t.pos);
                lex_.take();
                if (t.dvar >= n_) throw parse_error("variable index out of range", t.pos);
                return DiffOp::derivative_generator(n_, t.dvar, t.dorder, k_);
            }
            default:
                throw parse_error("expected a coefficient, variable or derivative atom", t.pos);
        }
    }

    // a possibly-rational coefficient: the '/' continues the number only
    // when a number follows (a '/f^j' suffix belongs to the fraction rule)
    Scalar finish_scalar(const mpz_class& num) {
        if (lex_.peek().kind == Tok::Slash) {
            Lexer save = lex_; // cheap copy: string_view + position
            lex_.take();
            if (lex_.peek().kind == Tok::Number) {
                mpz_class den = lex_.take().number;
                if (den == 0) throw parse_error("zero denominator", lex_.peek().pos);
                if (k_.is_rational()) return Scalar::rational(num, den);
                Scalar d = Scalar::of_integer(den, k_);
                if (d.is_zero()) throw parse_error("denominator vanishes in this field", lex_.peek().pos);
                return Scalar::of_integer(num, k_) / d;
            }
            lex_ = save;
        }
        return Scalar::of_integer(num, k_);
    }

    std::uint32_t parse_exponent() {
        if (lex_.peek().kind != Tok::Caret) return 1;
        lex_.take();
        if (lex_.peek().kind != Tok::Number) throw parse_error("expected an exponent", lex_.peek().pos);
        mpz_class e = lex_.take().number;
        if (!e.fits_uint_p()) throw parse_error("exponent is too large", lex_.peek().pos);
        return static_cast<std::uint32_t>(e.get_ui());
    }

    Lexer& lex_;
    std::size_t n_;
    Field k_;
    bool operators_;
};

void expect_end(Lexer& lex) {
    if (lex.peek().kind != Tok::End) {
        throw parse_error("unexpected trailing input", lex.peek().pos);
    }
}

Polynomial to_polynomial(const DiffOp& a) {
    Polynomial p(a.vars(), a.field());
    for (const auto& [m, c] : a.terms()) {
        // operator mode disabled, so every D exponent is zero
        p.add_term(Monomial(m.xexps()), c);
    }
    return p;
}

} // namespace

Scalar parse_scalar(std::string_view text, Field k) {
    Lexer lex(text);
    bool negative = false;
    if (lex.peek().kind == Tok::Minus) {
        lex.take();
        negative = true;
    }
    if (lex.peek().kind != Tok::Number) throw parse_error("expected a number", lex.peek().pos);
    mpz_class num = lex.take().number;
    mpz_class den = 1;
    if (lex.peek().kind == Tok::Slash) {
        lex.take();
        if (lex.peek().kind != Tok::Number) throw parse_error("expected a denominator", lex.peek().pos);
        den = lex.take().number;
        if (den == 0) throw parse_error("zero denominator", lex.peek().pos);
    }
    expect_end(lex);
    if (negative) num = -num;
    if (k.is_rational()) return Scalar::rational(num, den);
    Scalar d = Scalar::of_integer(den, k);
    if (d.is_zero()) throw parse_error("denominator vanishes in this field", 0);
    return Scalar::of_integer(num, k) / d;
}

Polynomial parse_polynomial(std::string_view text, std::size_t nvars, Field k) {
    Lexer lex(text);
    ExprParser p(lex, nvars, k, /*operators=*/false);
    DiffOp a = p.parse_expression();
    expect_end(lex);
    return to_polynomial(a);
}

DiffOp parse_operator(std::string_view text, std::size_t nvars, Field k) {
    Lexer lex(text);
    ExprParser p(lex, nvars, k, /*operators=*/true);
    DiffOp a = p.parse_expression();
    expect_end(lex);
    return a;
}

Fraction parse_fraction(std::string_view text, const ContextPtr& ctx) {
    Lexer lex(text);
    ExprParser p(lex, ctx->vars(), ctx->field(), /*operators=*/false);
    Polynomial num = to_polynomial(p.parse_expression());
    std::uint32_t exp = 0;
    if (lex.peek().kind == Tok::Slash) {
        lex.take();
        if (lex.peek().kind != Tok::FIdent) {
            throw parse_error("expected 'f' after '/'", lex.peek().pos);
        }
        lex.take();
        if (lex.peek().kind != Tok::Caret) throw parse_error("expected '^'", lex.peek().pos);
        lex.take();
        if (lex.peek().kind != Tok::Number) throw parse_error("expected an exponent", lex.peek().pos);
        mpz_class e = lex.take().number;
        if (!e.fits_uint_p()) throw parse_error("exponent is too large", lex.peek().pos);
        exp = static_cast<std::uint32_t>(e.get_ui());
    }
    expect_end(lex);
    return Fraction(std::move(num), exp, ctx);
}

} // namespace dpd
