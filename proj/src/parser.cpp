#include "polysym/parser.hpp"

#include <cctype>
#include <optional>

#include "polysym/errors.hpp"

namespace polysym {

namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    std::string_view text;
    std::size_t position; // 1-based
};

class Lexer {
public:
    explicit Lexer(std::string_view s) : s_(s) {}

    Token next() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        const std::size_t start = pos_;
        if (pos_ >= s_.size()) return {Tok::end, {}, start + 1};
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ < s_.size() && s_[pos_] == '.') {
                ++pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            }
            return {Tok::number, s_.substr(start, pos_ - start), start + 1};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return {Tok::ident, s_.substr(start, pos_ - start), start + 1};
        }
        ++pos_;
        switch (c) {
        case '+': return {Tok::plus, s_.substr(start, 1), start + 1};
        case '-': return {Tok::minus, s_.substr(start, 1), start + 1};
        case '*': return {Tok::star, s_.substr(start, 1), start + 1};
        case '/': return {Tok::slash, s_.substr(start, 1), start + 1};
        case '^': return {Tok::caret, s_.substr(start, 1), start + 1};
        case '(': return {Tok::lparen, s_.substr(start, 1), start + 1};
        case ')': return {Tok::rparen, s_.substr(start, 1), start + 1};
        default: throw ParseError(std::string("unexpected character '") + c + "'", start + 1);
        }
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    Parser(std::string_view text, std::size_t dim) : lexer_(text), dim_(dim) { advance(); }

    ExprAst parse_all() {
        ExprAst root = expr();
        if (cur_.kind != Tok::end) throw ParseError("unexpected '" + std::string(cur_.text) + "'", cur_.position);
        return root;
    }

private:
    static constexpr int max_depth = 256;

    void advance() { cur_ = lexer_.next(); }

    ExprAst expr() {
        ExprAst lhs = term();
        while (cur_.kind == Tok::plus || cur_.kind == Tok::minus) {
            const auto kind = cur_.kind == Tok::plus ? ExprAst::Kind::add : ExprAst::Kind::sub;
            const auto at = cur_.position;
            advance();
            lhs = binary(kind, std::move(lhs), term(), at);
        }
        return lhs;
    }

    ExprAst term() {
        ExprAst lhs = unary();
        while (cur_.kind == Tok::star || cur_.kind == Tok::slash) {
            const auto at = cur_.position;
            if (cur_.kind == Tok::star) {
                advance();
                lhs = binary(ExprAst::Kind::mul, std::move(lhs), unary(), at);
                continue;
            }
            advance();
            if (cur_.kind != Tok::number) throw ParseError("division is only by a numeric literal", cur_.position);
            ExprAst divisor = number();
            if (sgn(divisor.number) == 0) throw ParseError("division by zero", divisor.position);
            divisor.number = Rational(1) / divisor.number;
            lhs = binary(ExprAst::Kind::mul, std::move(lhs), std::move(divisor), at);
        }
        return lhs;
    }

    ExprAst unary() {
        if (cur_.kind == Tok::minus || cur_.kind == Tok::plus) {
            const bool neg = cur_.kind == Tok::minus;
            const auto at = cur_.position;
            advance();
            Guard g(*this, at);
            ExprAst operand = unary();
            if (!neg) return operand;
            ExprAst node;
            node.kind = ExprAst::Kind::neg;
            node.position = at;
            node.children.push_back(std::move(operand));
            return node;
        }
        return power();
    }

    ExprAst power() {
        ExprAst base = primary();
        if (cur_.kind != Tok::caret) return base;
        const auto at = cur_.position;
        advance();
        if (cur_.kind != Tok::number || cur_.text.find('.') != std::string_view::npos)
            throw ParseError("exponent must be a non-negative integer", cur_.position);
        if (cur_.text.size() > 4 || std::stoul(std::string(cur_.text)) > max_parse_exponent)
            throw ParseError("exponent exceeds " + std::to_string(max_parse_exponent), cur_.position);
        ExprAst node;
        node.kind = ExprAst::Kind::pow;
        node.exponent = static_cast<unsigned>(std::stoul(std::string(cur_.text)));
        node.position = at;
        node.children.push_back(std::move(base));
        advance();
        if (cur_.kind == Tok::caret) throw ParseError("chained exponents need parentheses", cur_.position);
        return node;
    }

    ExprAst primary() {
        switch (cur_.kind) {
        case Tok::number: return number();
        case Tok::ident: return identifier();
        case Tok::lparen: {
            const auto at = cur_.position;
            advance();
            Guard g(*this, at);
            ExprAst inner = expr();
            if (cur_.kind != Tok::rparen) throw ParseError("expected ')'", cur_.position);
            advance();
            ExprAst node;
            node.kind = ExprAst::Kind::group;
            node.position = at;
            node.children.push_back(std::move(inner));
            return node;
        }
        case Tok::end: throw ParseError("unexpected end of input", cur_.position);
        default: throw ParseError("unexpected '" + std::string(cur_.text) + "'", cur_.position);
        }
    }

    ExprAst number() {
        ExprAst node;
        node.kind = ExprAst::Kind::number;
        node.position = cur_.position;
        try {
            node.number = parse_rational(cur_.text);
        } catch (const ParseError&) {
            throw ParseError("malformed number '" + std::string(cur_.text) + "'", cur_.position);
        }
        advance();
        return node;
    }

    ExprAst identifier() {
        const auto name = cur_.text;
        const auto at = cur_.position;
        ExprAst node;
        node.kind = ExprAst::Kind::variable;
        node.position = at;
        advance();
        if (name == "i") {
            node.kind = ExprAst::Kind::imaginary_unit;
            return node;
        }
        if (name == "z" && dim_ <= 2) return variable(node, 'z', 0);
        if (name == "w" && dim_ == 2) return variable(node, 'z', 1);

        const char head = name.front();
        const auto digits = name.substr(1);
        const bool indexed = !digits.empty() && digits.size() <= 6 &&
                             digits.find_first_not_of("0123456789") == std::string_view::npos;
        if (indexed && (head == 'z' || head == 'e' || head == 's')) {
            const auto k = std::stoul(std::string(digits));
            if (k < 1 || k > dim_)
                throw ParseError("variable '" + std::string(name) + "' outside 1.." + std::to_string(dim_), at);
            return variable(node, head == 'z' ? 'z' : 'e', k - 1);
        }
        throw ParseError("unknown identifier '" + std::string(name) + "'", at);
    }

    static ExprAst variable(ExprAst node, char basis, std::size_t index) {
        node.basis = basis;
        node.index = index;
        return node;
    }

    static ExprAst binary(ExprAst::Kind kind, ExprAst lhs, ExprAst rhs, std::size_t at) {
        ExprAst node;
        node.kind = kind;
        node.position = at;
        node.children.push_back(std::move(lhs));
        node.children.push_back(std::move(rhs));
        return node;
    }

    struct Guard {
        Guard(Parser& p, std::size_t at) : p_(p) {
            if (++p_.depth_ > max_depth) throw ParseError("expression nested too deeply", at);
        }
        ~Guard() { --p_.depth_; }
        Parser& p_;
    };

    Lexer lexer_;
    std::size_t dim_;
    Token cur_{Tok::end, {}, 1};
    int depth_ = 0;
};

/// First variable of each basis, for the mixed-basis check.
void scan_bases(const ExprAst& node, const ExprAst*& first_z, const ExprAst*& first_e) {
    if (node.kind == ExprAst::Kind::variable) {
        auto& slot = node.basis == 'z' ? first_z : first_e;
        if (!slot) slot = &node;
    }
    for (const auto& c : node.children) scan_bases(c, first_z, first_e);
}

template <typename Series>
Series expand(const ExprAst& node, std::size_t dim, unsigned cap) {
    using K = ExprAst::Kind;
    switch (node.kind) {
    case K::number: return Series::constant(dim, cap, ComplexRational(node.number));
    case K::imaginary_unit: return Series::constant(dim, cap, ComplexRational::i());
    case K::variable: return Series::variable(dim, cap, node.index);
    case K::add: return add(expand<Series>(node.children[0], dim, cap), expand<Series>(node.children[1], dim, cap));
    case K::sub:
        return subtract(expand<Series>(node.children[0], dim, cap), expand<Series>(node.children[1], dim, cap));
    case K::mul:
        return multiply(expand<Series>(node.children[0], dim, cap), expand<Series>(node.children[1], dim, cap));
    case K::pow: return power(expand<Series>(node.children[0], dim, cap), node.exponent);
    case K::neg: return negate(expand<Series>(node.children[0], dim, cap));
    case K::group: return expand<Series>(node.children[0], dim, cap);
    }
    throw std::logic_error("unhandled expression node");
}

void require_untruncated(bool truncated, bool allow) {
    if (truncated && !allow)
        throw PreconditionError("expression has terms above the degree cap (raise --cap or allow truncation)");
}

std::string monomial_text(const Monomial& m, char var) {
    std::string out;
    for (std::size_t k = 0; k < m.exps.size(); ++k) {
        if (m.exps[k] == 0) continue;
        if (!out.empty()) out += '*';
        out += var + std::to_string(k + 1);
        if (m.exps[k] > 1) out += '^' + std::to_string(m.exps[k]);
    }
    return out;
}

template <typename Map>
std::string render_terms(const Map& terms, char var) {
    std::string out;
    for (const auto& [m, c] : terms) {
        const std::string mono = monomial_text(m, var);
        std::string piece;
        if (mono.empty()) {
            piece = to_string(c);
        } else if (c == ComplexRational(1)) {
            piece = mono;
        } else if (c == ComplexRational(-1)) {
            piece = "-" + mono;
        } else {
            piece = to_string(c) + "*" + mono;
        }
        if (out.empty()) {
            out = piece;
        } else if (piece.front() == '-') {
            out += " - " + piece.substr(1);
        } else {
            out += " + " + piece;
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace

ExprAst parse_expression(std::string_view text, std::size_t dim) {
    if (dim == 0) throw PreconditionError("dimension must be positive");
    return Parser(text, dim).parse_all();
}

ParsedSeries parse(std::string_view text, std::size_t dim, unsigned cap, bool allow_truncation) {
    const ExprAst ast = parse_expression(text, dim);
    const ExprAst* first_z = nullptr;
    const ExprAst* first_e = nullptr;
    scan_bases(ast, first_z, first_e);
    if (first_z && first_e)
        throw ParseError("z-variables and e-variables cannot be mixed",
                         std::max(first_z->position, first_e->position));
    if (first_e) {
        auto g = expand<ElementarySeries>(ast, dim, cap);
        require_untruncated(g.truncated(), allow_truncation);
        return g;
    }
    auto f = expand<TruncatedSeries>(ast, dim, cap);
    require_untruncated(!f.is_polynomial(), allow_truncation);
    return f;
}

TruncatedSeries parse_series(std::string_view text, std::size_t dim, unsigned cap, bool allow_truncation) {
    auto parsed = parse(text, dim, cap, allow_truncation);
    if (auto* f = std::get_if<TruncatedSeries>(&parsed)) return std::move(*f);
    throw PreconditionError("expected an expression in z-variables");
}

ElementarySeries parse_elementary(std::string_view text, std::size_t dim, unsigned cap, bool allow_truncation) {
    auto parsed = parse(text, dim, cap, allow_truncation);
    if (auto* g = std::get_if<ElementarySeries>(&parsed)) return std::move(*g);
    // A constant expression is a constant in either basis.
    const auto& f = std::get<TruncatedSeries>(parsed);
    if (f.degree() != 0) throw PreconditionError("expected an expression in e-variables");
    return ElementarySeries::constant(dim, cap, f.coefficient(Monomial(dim)));
}

std::string render(const TruncatedSeries& f) { return render_terms(f.terms(), 'z'); }

std::string render(const ElementarySeries& g) { return render_terms(g.terms(), 'e'); }

} // namespace polysym
