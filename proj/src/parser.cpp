#include "holomellin/parser.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "holomellin/errors.hpp"
#include "holomellin/rational_function.hpp"

namespace holomellin {

namespace {

// ---------------------------------------------------------------- tokens ---

struct Token {
    enum class Type { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Equals, End };
    Type type;
    std::string text;
    int line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }
    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) bump();
        tok_.line = line_;
        tok_.col = col_;
        tok_.text.clear();
        if (pos_ >= src_.size()) {
            tok_.type = Token::Type::End;
            return;
        }
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            tok_.type = Token::Type::Number;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                tok_.text.push_back(src_[pos_]);
                bump();
            }
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            tok_.type = Token::Type::Ident;
            while (pos_ < src_.size() &&
                   std::isalnum(static_cast<unsigned char>(src_[pos_]))) {
                tok_.text.push_back(src_[pos_]);
                bump();
            }
            return;
        }
        switch (c) {
            case '+': tok_.type = Token::Type::Plus; break;
            case '-': tok_.type = Token::Type::Minus; break;
            case '*': tok_.type = Token::Type::Star; break;
            case '/': tok_.type = Token::Type::Slash; break;
            case '^': tok_.type = Token::Type::Caret; break;
            case '(': tok_.type = Token::Type::LParen; break;
            case ')': tok_.type = Token::Type::RParen; break;
            case '=': tok_.type = Token::Type::Equals; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
        }
        tok_.text.push_back(c);
        bump();
    }

    void bump() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& src_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_{};
};

// ------------------------------------------------------------------- AST ---

struct Node;
using NodePtr = std::unique_ptr<Node>;

struct Node {
    enum class Tag {
        Number, VarX, VarN, DiffAtom, ShiftAtomS, NeutralF, ShiftAtom, BoundaryAtom,
        Add, Sub, Mul, Div, Neg, Pow
    };
    Tag tag;
    int line = 0, col = 0;
    Rational number;                          // Number
    int shift = 0;                            // ShiftAtom
    BoundarySymbol sym{BoundarySymbol::Kind::DerivAtOne, 0};  // BoundaryAtom
    int exponent = 0;                         // Pow
    NodePtr a, b;
};

NodePtr make(Node::Tag tag, const Token& at) {
    auto n = std::make_unique<Node>();
    n->tag = tag;
    n->line = at.line;
    n->col = at.col;
    return n;
}

// ---------------------------------------------------------------- parser ---

class Parser {
public:
    explicit Parser(const std::string& src) : lex_(src) {}

    NodePtr parse_equation() {
        NodePtr lhs = parse_expr();
        if (lex_.peek().type == Token::Type::Equals) {
            Token eq = lex_.next();
            NodePtr rhs = parse_expr();
            NodePtr n = make(Node::Tag::Sub, eq);
            n->a = std::move(lhs);
            n->b = std::move(rhs);
            lhs = std::move(n);
        }
        expect(Token::Type::End, "end of input");
        return lhs;
    }

private:
    NodePtr parse_expr() {
        NodePtr lhs = parse_term();
        while (lex_.peek().type == Token::Type::Plus || lex_.peek().type == Token::Type::Minus) {
            Token op = lex_.next();
            NodePtr n = make(op.type == Token::Type::Plus ? Node::Tag::Add : Node::Tag::Sub, op);
            n->a = std::move(lhs);
            n->b = parse_term();
            lhs = std::move(n);
        }
        return lhs;
    }

    NodePtr parse_term() {
        NodePtr lhs = parse_factor();
        while (lex_.peek().type == Token::Type::Star || lex_.peek().type == Token::Type::Slash) {
            Token op = lex_.next();
            NodePtr n = make(op.type == Token::Type::Star ? Node::Tag::Mul : Node::Tag::Div, op);
            n->a = std::move(lhs);
            n->b = parse_factor();
            lhs = std::move(n);
        }
        return lhs;
    }

    NodePtr parse_factor() {
        if (lex_.peek().type == Token::Type::Minus) {
            Token op = lex_.next();
            NodePtr n = make(Node::Tag::Neg, op);
            n->a = parse_factor();
            return n;
        }
        if (lex_.peek().type == Token::Type::Plus) {
            lex_.next();
            return parse_factor();
        }
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_atom();
        if (lex_.peek().type == Token::Type::Caret) {
            Token op = lex_.next();
            NodePtr n = make(Node::Tag::Pow, op);
            n->exponent = parse_int_exponent();
            n->a = std::move(base);
            return n;
        }
        return base;
    }

    int parse_int_exponent() {
        bool parens = false;
        if (lex_.peek().type == Token::Type::LParen) {
            parens = true;
            lex_.next();
        }
        Token t = lex_.next();
        if (t.type != Token::Type::Number)
            throw ParseError("expected integer exponent", t.line, t.col);
        int e = std::stoi(t.text);
        if (parens) expect(Token::Type::RParen, "')'");
        return e;
    }

    NodePtr parse_atom() {
        const Token& t = lex_.peek();
        switch (t.type) {
            case Token::Type::Number: {
                Token num = lex_.next();
                NodePtr n = make(Node::Tag::Number, num);
                n->number = Rational(BigInt(num.text));
                return n;
            }
            case Token::Type::LParen: {
                lex_.next();
                NodePtr inner = parse_expr();
                expect(Token::Type::RParen, "')'");
                return inner;
            }
            case Token::Type::Ident:
                return parse_ident_atom();
            default:
                throw ParseError("expected number, variable, operator atom, or '('", t.line, t.col);
        }
    }

    NodePtr parse_ident_atom() {
        Token id = lex_.next();
        if (id.text == "x") return make(Node::Tag::VarX, id);
        if (id.text == "n") return make(Node::Tag::VarN, id);
        if (id.text == "Dx" || id.text == "D") return make(Node::Tag::DiffAtom, id);
        if (id.text == "S") return make(Node::Tag::ShiftAtomS, id);
        if (id.text == "M") return parse_m_atom(id);
        if (id.text == "f") return parse_f_atom(id);
        throw ParseError("unknown identifier '" + id.text + "'", id.line, id.col);
    }

    // M(n+k) shift atom, or M(k) Mellin-moment boundary symbol.
    NodePtr parse_m_atom(const Token& id) {
        expect(Token::Type::LParen, "'(' after M");
        if (lex_.peek().type == Token::Type::Ident && lex_.peek().text == "n") {
            int k = parse_shift_argument_tail();
            NodePtr n = make(Node::Tag::ShiftAtom, id);
            n->shift = k;
            return n;
        }
        Token num = lex_.next();
        if (num.type != Token::Type::Number)
            throw ParseError("expected 'n' or an integer inside M(...)", num.line, num.col);
        expect(Token::Type::RParen, "')'");
        NodePtr n = make(Node::Tag::BoundaryAtom, id);
        n->sym = BoundarySymbol::mellin_moment(std::stoi(num.text));
        return n;
    }

    // f, f(n+k), f(1) and f^(j)(1).
    NodePtr parse_f_atom(const Token& id) {
        if (lex_.peek().type == Token::Type::Caret) {
            // Only the boundary form f^(j)(1) is meaningful here; a plain
            // power of the neutral atom would be f itself.
            lex_.next();
            expect(Token::Type::LParen, "'(' after f^");
            Token j = lex_.next();
            if (j.type != Token::Type::Number)
                throw ParseError("expected derivative order in f^(j)(1)", j.line, j.col);
            expect(Token::Type::RParen, "')'");
            expect(Token::Type::LParen, "'(' in f^(j)(1)");
            Token one = lex_.next();
            if (one.type != Token::Type::Number || one.text != "1")
                throw ParseError("boundary symbols are evaluated at 1", one.line, one.col);
            expect(Token::Type::RParen, "')'");
            NodePtr n = make(Node::Tag::BoundaryAtom, id);
            n->sym = BoundarySymbol::deriv_at_one(std::stoi(j.text));
            return n;
        }
        if (lex_.peek().type == Token::Type::LParen) {
            lex_.next();
            if (lex_.peek().type == Token::Type::Ident && lex_.peek().text == "n") {
                int k = parse_shift_argument_tail();
                NodePtr n = make(Node::Tag::ShiftAtom, id);
                n->shift = k;
                return n;
            }
            if (lex_.peek().type == Token::Type::Ident && lex_.peek().text == "x") {
                lex_.next();
                expect(Token::Type::RParen, "')'");
                return make(Node::Tag::NeutralF, id);
            }
            Token num = lex_.next();
            if (num.type != Token::Type::Number || num.text != "1")
                throw ParseError("expected f(n+k), f(x) or f(1)", num.line, num.col);
            expect(Token::Type::RParen, "')'");
            NodePtr n = make(Node::Tag::BoundaryAtom, id);
            n->sym = BoundarySymbol::deriv_at_one(0);
            return n;
        }
        return make(Node::Tag::NeutralF, id);
    }

    // Consumes "n [±k] )" after the opening parenthesis; 'n' still pending.
    int parse_shift_argument_tail() {
        lex_.next();  // 'n'
        int k = 0;
        if (lex_.peek().type == Token::Type::Plus || lex_.peek().type == Token::Type::Minus) {
            bool neg = lex_.next().type == Token::Type::Minus;
            Token num = lex_.next();
            if (num.type != Token::Type::Number)
                throw ParseError("expected integer shift", num.line, num.col);
            k = std::stoi(num.text);
            if (neg) k = -k;
        }
        expect(Token::Type::RParen, "')'");
        return k;
    }

    void expect(Token::Type type, const char* what) {
        Token t = lex_.next();
        if (t.type != type) throw ParseError(std::string("expected ") + what, t.line, t.col);
    }

    Lexer lex_;
};

// ---------------------------------------------------------------- lowering ---

struct Scan {
    bool has_diff = false, has_shift = false, has_x = false, has_n = false, has_boundary = false;
    int diff_line = 0, diff_col = 0, shift_line = 0, shift_col = 0;
    int x_line = 1, x_col = 1, n_line = 1, n_col = 1;
};

void scan(const Node* node, Scan& s) {
    if (!node) return;
    switch (node->tag) {
        case Node::Tag::VarX:
            s.has_x = true;
            s.x_line = node->line;
            s.x_col = node->col;
            break;
        case Node::Tag::VarN:
            s.has_n = true;
            s.n_line = node->line;
            s.n_col = node->col;
            break;
        case Node::Tag::DiffAtom:
            s.has_diff = true;
            s.diff_line = node->line;
            s.diff_col = node->col;
            break;
        case Node::Tag::ShiftAtomS:
        case Node::Tag::ShiftAtom:
            s.has_shift = true;
            s.shift_line = node->line;
            s.shift_col = node->col;
            break;
        case Node::Tag::BoundaryAtom: s.has_boundary = true; break;
        default: break;
    }
    scan(node->a.get(), s);
    scan(node->b.get(), s);
}

// Intermediate value: operator-order terms and boundary terms, both with
// rational-function coefficients (cleared to polynomials at the very end).
struct Value {
    std::map<int, RationalFunction> terms;
    std::map<BoundarySymbol, RationalFunction> inhom;
};

bool is_scalar(const Value& v) {
    if (!v.inhom.empty()) return false;
    for (const auto& [k, c] : v.terms)
        if (k != 0 && !c.is_zero()) return false;
    return true;
}

RationalFunction scalar_of(const Value& v, Var var) {
    auto it = v.terms.find(0);
    return it == v.terms.end() ? RationalFunction(var) : it->second;
}

void add_term(Value& v, int k, const RationalFunction& c) {
    auto [it, inserted] = v.terms.try_emplace(k, c);
    if (!inserted) it->second += c;
    if (it->second.is_zero()) v.terms.erase(it);
}

void add_inhom(Value& v, const BoundarySymbol& sym, const RationalFunction& c) {
    auto [it, inserted] = v.inhom.try_emplace(sym, c);
    if (!inserted) it->second += c;
    if (it->second.is_zero()) v.inhom.erase(it);
}

class Lowerer {
public:
    Lowerer(Var var, bool diff_kind) : var_(var), diff_(diff_kind) {}

    Value eval(const Node* node) {
        switch (node->tag) {
            case Node::Tag::Number: {
                Value v;
                add_term(v, 0, RationalFunction::constant(var_, node->number));
                return v;
            }
            case Node::Tag::VarX:
            case Node::Tag::VarN: {
                const bool is_x = node->tag == Node::Tag::VarX;
                if (is_x != (var_ == Var::X))
                    throw ParseError(std::string("variable ") + (is_x ? "x" : "n") +
                                         " does not belong in this operator",
                                     node->line, node->col);
                Value v;
                add_term(v, 0, RationalFunction::from_poly(Polynomial::variable(var_)));
                return v;
            }
            case Node::Tag::DiffAtom:
            case Node::Tag::ShiftAtomS: {
                Value v;
                add_term(v, 1, RationalFunction::constant(var_, Rational(1)));
                return v;
            }
            case Node::Tag::NeutralF: {
                Value v;
                add_term(v, 0, RationalFunction::constant(var_, Rational(1)));
                return v;
            }
            case Node::Tag::ShiftAtom: {
                Value v;
                add_term(v, node->shift, RationalFunction::constant(var_, Rational(1)));
                return v;
            }
            case Node::Tag::BoundaryAtom: {
                if (diff_)
                    throw ParseError("boundary symbols belong to recurrence relations",
                                     node->line, node->col);
                Value v;
                add_inhom(v, node->sym, RationalFunction::constant(var_, Rational(1)));
                return v;
            }
            case Node::Tag::Neg: {
                Value a = eval(node->a.get());
                Value v;
                for (auto& [k, c] : a.terms) add_term(v, k, -c);
                for (auto& [s, c] : a.inhom) add_inhom(v, s, -c);
                return v;
            }
            case Node::Tag::Add:
            case Node::Tag::Sub: {
                Value a = eval(node->a.get());
                Value b = eval(node->b.get());
                const Rational s = node->tag == Node::Tag::Add ? 1 : -1;
                for (auto& [k, c] : b.terms)
                    add_term(a, k, c * RationalFunction::constant(var_, s));
                for (auto& [sym, c] : b.inhom)
                    add_inhom(a, sym, c * RationalFunction::constant(var_, s));
                return a;
            }
            case Node::Tag::Mul:
                return mul(eval(node->a.get()), eval(node->b.get()), node);
            case Node::Tag::Div: {
                Value a = eval(node->a.get());
                Value b = eval(node->b.get());
                if (!is_scalar(b))
                    throw ParseError("division only by scalar coefficients", node->line, node->col);
                RationalFunction s = scalar_of(b, var_);
                if (s.is_zero()) throw ParseError("division by zero", node->line, node->col);
                Value v;
                for (auto& [k, c] : a.terms) add_term(v, k, c / s);
                for (auto& [sym, c] : a.inhom) add_inhom(v, sym, c / s);
                return v;
            }
            case Node::Tag::Pow: {
                if (node->exponent < 0)
                    throw ParseError("negative exponent", node->line, node->col);
                Value r;
                add_term(r, 0, RationalFunction::constant(var_, Rational(1)));
                Value base = eval(node->a.get());
                for (int i = 0; i < node->exponent; ++i) r = mul(r, base, node);
                return r;
            }
        }
        throw ParseError("malformed expression", node->line, node->col);
    }

private:
    Value mul(const Value& a, const Value& b, const Node* at) {
        if (is_scalar(a)) return scale(b, scalar_of(a, var_));
        if (is_scalar(b)) return scale(a, scalar_of(b, var_));
        if (!a.inhom.empty() || !b.inhom.empty())
            throw ParseError("boundary symbols cannot be multiplied by operators", at->line,
                             at->col);
        Value v;
        for (const auto& [ka, ca] : a.terms)
            for (const auto& [kb, cb] : b.terms) add_term(v, ka + kb, ca * cb);
        return v;
    }

    Value scale(const Value& v, const RationalFunction& s) {
        Value r;
        for (const auto& [k, c] : v.terms) add_term(r, k, c * s);
        for (const auto& [sym, c] : v.inhom) add_inhom(r, sym, c * s);
        return r;
    }

    Var var_;
    bool diff_;
};

// Least common multiple of all coefficient denominators.
Polynomial denominator_lcm(const Value& v, Var var) {
    Polynomial l = Polynomial::constant(var, Rational(1));
    auto fold = [&](const RationalFunction& c) {
        if (c.is_zero() || c.den().degree() == 0) return;
        Polynomial g = poly_gcd(l, c.den());
        l = divide_exact(l * c.den(), g);
    };
    for (const auto& [k, c] : v.terms) fold(c);
    for (const auto& [s, c] : v.inhom) fold(c);
    return l;
}

}  // namespace

ParsedOperator parse_operator(const std::string& text, OperatorKind expected) {
    Parser parser(text);
    NodePtr root = parser.parse_equation();

    Scan s;
    scan(root.get(), s);
    if (s.has_diff && s.has_shift)
        throw ParseError("expression mixes differential and shift operators", s.shift_line,
                         s.shift_col);
    bool diff_kind;
    if (s.has_diff || s.has_x)
        diff_kind = true;
    else if (s.has_shift || s.has_n || s.has_boundary)
        diff_kind = false;
    else if (expected != OperatorKind::Any)
        diff_kind = expected == OperatorKind::Diff;
    else
        throw ParseError("cannot infer operator kind from constants alone", 1, 1);
    if (expected == OperatorKind::Diff && !diff_kind)
        throw ParseError("expected a differential operator", 1, 1);
    if (expected == OperatorKind::Rec && diff_kind)
        throw ParseError("expected a recurrence operator", 1, 1);
    if (diff_kind && s.has_n)
        throw ParseError("variable n does not belong in a differential operator", s.n_line,
                         s.n_col);
    if (!diff_kind && s.has_x)
        throw ParseError("variable x does not belong in a recurrence operator", s.x_line,
                         s.x_col);

    const Var var = diff_kind ? Var::X : Var::N;
    Lowerer lowerer(var, diff_kind);
    Value v = lowerer.eval(root.get());

    // Clear rational-function coefficients by the common denominator.
    Polynomial lcm = denominator_lcm(v, var);
    const bool cleared = lcm.degree() > 0;
    auto to_poly = [&](const RationalFunction& c) {
        RationalFunction cl = c * RationalFunction::from_poly(lcm);
        if (!cl.is_poly())
            throw InvariantViolation("denominator clearing left a rational coefficient");
        return cl.num() / cl.den().coeff(0);
    };

    if (diff_kind) {
        int max_order = 0;
        for (const auto& [k, c] : v.terms) {
            if (k < 0) throw ParseError("negative derivative order", 1, 1);
            max_order = std::max(max_order, k);
        }
        std::vector<Polynomial> coeffs(static_cast<size_t>(max_order) + 1, Polynomial(Var::X));
        for (const auto& [k, c] : v.terms) coeffs[static_cast<size_t>(k)] = to_poly(c);
        return {normalize_diffop(DiffOp(std::move(coeffs))), cleared};
    }
    std::map<int, Polynomial> shifts;
    for (const auto& [k, c] : v.terms) shifts.emplace(k, to_poly(c));
    InhomPart inhom;
    for (const auto& [sym, c] : v.inhom) inhom.add(sym, to_poly(c));
    return {normalize_recop(RecOp::from_shift_map(shifts, std::move(inhom))), cleared};
}

Polynomial parse_polynomial(const std::string& text, Var var) {
    Parser parser(text);
    NodePtr root = parser.parse_equation();
    Scan s;
    scan(root.get(), s);
    if (s.has_diff || s.has_shift || s.has_boundary)
        throw ParseError("expected a polynomial, found operator atoms", 1, 1);
    if (var == Var::X && s.has_n) throw ParseError("expected a polynomial in x", 1, 1);
    if (var == Var::N && s.has_x) throw ParseError("expected a polynomial in n", 1, 1);
    Lowerer lowerer(var, var == Var::X);
    Value v = lowerer.eval(root.get());
    RationalFunction c = scalar_of(v, var);
    if (!c.is_poly()) throw ParseError("expected a polynomial, found a rational function", 1, 1);
    return c.num() / c.den().coeff(0);
}

// ---------------------------------------------------------------- pretty ---

namespace {

// One rendered summand: sign plus body, e.g. {-, "(x + x^2)"}.
struct RenderedTerm {
    bool negative;
    std::string body;
};

bool single_monomial(const Polynomial& p, int* exp) {
    int nonzero = -1;
    for (int k = 0; k <= p.degree(); ++k) {
        if (p.coeff(k) == 0) continue;
        if (nonzero >= 0) return false;
        nonzero = k;
    }
    if (nonzero < 0) return false;
    *exp = nonzero;
    return true;
}

RenderedTerm render_term(const Polynomial& coeff, const std::string& atom) {
    int exp = 0;
    if (single_monomial(coeff, &exp)) {
        Rational c = coeff.coeff(exp);
        bool neg = c < 0;
        Polynomial mag = neg ? -coeff : coeff;
        std::string body = mag.str();
        if (atom.empty()) return {neg, body};
        if (mag == Polynomial::constant(coeff.var(), Rational(1))) return {neg, atom};
        return {neg, body + "*" + atom};
    }
    bool neg = coeff.leading() < 0;
    Polynomial mag = neg ? -coeff : coeff;
    std::string body = "(" + mag.str() + ")";
    if (!atom.empty()) body += "*" + atom;
    return {neg, body};
}

std::string join_terms(const std::vector<RenderedTerm>& terms) {
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms) {
        if (first) {
            if (t.negative) out << "-";
            first = false;
        } else {
            out << (t.negative ? " - " : " + ");
        }
        out << t.body;
    }
    return first ? std::string("0") : out.str();
}

}  // namespace

std::string pretty(const DiffOp& op) {
    std::vector<RenderedTerm> terms;
    for (int i = op.order(); i >= 0; --i) {
        const Polynomial& c = op.coeff(i);
        if (c.is_zero()) continue;
        std::string atom = i == 0 ? "" : (i == 1 ? "Dx" : "Dx^" + std::to_string(i));
        terms.push_back(render_term(c, atom));
    }
    return join_terms(terms);
}

std::string pretty(const RecOp& op) {
    std::vector<RenderedTerm> terms;
    for (int i = op.order(); i >= 0; --i) {
        const Polynomial& c = op.coeff(i);
        if (c.is_zero()) continue;
        std::string atom = i == 0 ? "M(n)" : "M(n+" + std::to_string(i) + ")";
        terms.push_back(render_term(c, atom));
    }
    std::string lhs = join_terms(terms);
    if (op.homogeneous()) return lhs;
    // Boundary terms move to the right-hand side with flipped signs.
    std::vector<RenderedTerm> rhs;
    for (const auto& [sym, c] : op.inhom().terms()) rhs.push_back(render_term(-c, sym.str()));
    return lhs + " = " + join_terms(rhs);
}

}  // namespace holomellin
