#include "rotgeo/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <vector>

#include "rotgeo/error.hpp"

namespace rotgeo {

struct Expr::Node {
    ExprKind kind = ExprKind::number;
    double value = 0.0;
    std::string name;
    Func func = Func::sin;
    std::optional<Expr> a;
    std::optional<Expr> b;
};

Expr Expr::number(double value) {
    auto n = std::make_shared<Node>();
    n->value = value;
    return Expr(std::move(n));
}

Expr Expr::named_constant(std::string name, double value) {
    auto n = std::make_shared<Node>();
    n->value = value;
    n->name = std::move(name);
    return Expr(std::move(n));
}

Expr Expr::variable(std::string name) {
    auto n = std::make_shared<Node>();
    n->kind = ExprKind::variable;
    n->name = std::move(name);
    return Expr(std::move(n));
}

Expr Expr::negate(Expr operand) {
    auto n = std::make_shared<Node>();
    n->kind = ExprKind::negate;
    n->a = std::move(operand);
    return Expr(std::move(n));
}

Expr Expr::binary(ExprKind op, Expr lhs, Expr rhs) {
    auto n = std::make_shared<Node>();
    n->kind = op;
    n->a = std::move(lhs);
    n->b = std::move(rhs);
    return Expr(std::move(n));
}

Expr Expr::call(Func f, Expr arg) {
    auto n = std::make_shared<Node>();
    n->kind = ExprKind::call;
    n->func = f;
    n->a = std::move(arg);
    return Expr(std::move(n));
}

ExprKind Expr::kind() const { return node_->kind; }
double Expr::value() const { return node_->value; }
const std::string& Expr::name() const { return node_->name; }
Func Expr::func() const { return node_->func; }
const Expr& Expr::lhs() const { return *node_->a; }
const Expr& Expr::rhs() const { return *node_->b; }

bool Expr::depends_on_variable() const {
    switch (kind()) {
        case ExprKind::number: return false;
        case ExprKind::variable: return true;
        case ExprKind::negate:
        case ExprKind::call: return lhs().depends_on_variable();
        default: return lhs().depends_on_variable() || rhs().depends_on_variable();
    }
}

const char* to_string(Func f) noexcept {
    switch (f) {
        case Func::sin: return "sin";
        case Func::cos: return "cos";
        case Func::tan: return "tan";
        case Func::sinh: return "sinh";
        case Func::cosh: return "cosh";
        case Func::tanh: return "tanh";
        case Func::exp: return "exp";
        case Func::log: return "log";
        case Func::sqrt: return "sqrt";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

[[noreturn]] void domain_fault(const std::string& what, double t) {
    char buf[64];
    std::snprintf(buf, sizeof buf, " at t=%.17g", t);
    throw Error(Errc::domain_error, what + buf);
}

double checked_pow(double base, double exponent, double t) {
    if (base == 0.0 && exponent < 0.0) domain_fault("0 raised to a negative power", t);
    if (exponent != std::trunc(exponent) && !(base > 0.0))
        domain_fault("non-integer power of a non-positive base", t);
    return std::pow(base, exponent);
}

double apply(Func f, double x, double t) {
    switch (f) {
        case Func::sin: return std::sin(x);
        case Func::cos: return std::cos(x);
        case Func::tan: return std::tan(x);
        case Func::sinh: return std::sinh(x);
        case Func::cosh: return std::cosh(x);
        case Func::tanh: return std::tanh(x);
        case Func::exp: return std::exp(x);
        case Func::log:
            if (!(x > 0.0)) domain_fault("log of a non-positive value", t);
            return std::log(x);
        case Func::sqrt:
            if (x < 0.0) domain_fault("sqrt of a negative value", t);
            return std::sqrt(x);
    }
    return 0.0;
}

double eval_node(const Expr& e, double t) {
    double r = 0.0;
    switch (e.kind()) {
        case ExprKind::number: return e.value();
        case ExprKind::variable: return t;
        case ExprKind::negate: return -eval_node(e.lhs(), t);
        case ExprKind::add: r = eval_node(e.lhs(), t) + eval_node(e.rhs(), t); break;
        case ExprKind::sub: r = eval_node(e.lhs(), t) - eval_node(e.rhs(), t); break;
        case ExprKind::mul: r = eval_node(e.lhs(), t) * eval_node(e.rhs(), t); break;
        case ExprKind::div: {
            const double num = eval_node(e.lhs(), t);
            const double den = eval_node(e.rhs(), t);
            if (den == 0.0) domain_fault("division by zero", t);
            r = num / den;
            break;
        }
        case ExprKind::pow:
            r = checked_pow(eval_node(e.lhs(), t), eval_node(e.rhs(), t), t);
            break;
        case ExprKind::call: r = apply(e.func(), eval_node(e.lhs(), t), t); break;
    }
    if (!std::isfinite(r)) domain_fault("non-finite result", t);
    return r;
}

// ---------------------------------------------------------------------------
// Folding constructors used by differentiate()

std::optional<double> try_fold(const Expr& e) {
    try {
        return eval_node(e, 0.0);
    } catch (const Error&) {
        return std::nullopt;
    }
}

Expr fold_or(Expr e) {
    if (e.depends_on_variable()) return e;
    if (auto v = try_fold(e)) return Expr::number(*v);
    return e;
}

Expr neg(const Expr& a) {
    if (a.is_number()) return Expr::number(-a.value());
    if (a.kind() == ExprKind::negate) return a.lhs();
    return Expr::negate(a);
}

Expr add(const Expr& a, const Expr& b) {
    if (a.is_number(0.0)) return b;
    if (b.is_number(0.0)) return a;
    return fold_or(Expr::binary(ExprKind::add, a, b));
}

Expr sub(const Expr& a, const Expr& b) {
    if (b.is_number(0.0)) return a;
    if (a.is_number(0.0)) return neg(b);
    return fold_or(Expr::binary(ExprKind::sub, a, b));
}

Expr mul(const Expr& a, const Expr& b) {
    if (a.is_number(0.0) || b.is_number(0.0)) return Expr::number(0.0);
    if (a.is_number(1.0)) return b;
    if (b.is_number(1.0)) return a;
    if (a.is_number(-1.0)) return neg(b);
    if (b.is_number(-1.0)) return neg(a);
    return fold_or(Expr::binary(ExprKind::mul, a, b));
}

Expr div(const Expr& a, const Expr& b) {
    if (b.is_number(1.0)) return a;
    return fold_or(Expr::binary(ExprKind::div, a, b));
}

Expr pow(const Expr& a, const Expr& b) {
    if (b.is_number(1.0)) return a;
    return fold_or(Expr::binary(ExprKind::pow, a, b));
}

Expr call(Func f, const Expr& a) { return fold_or(Expr::call(f, a)); }

Expr num(double v) { return Expr::number(v); }

}  // namespace

double evaluate(const Expr& e, double t) { return eval_node(e, t); }

Expr differentiate(const Expr& e) {
    switch (e.kind()) {
        case ExprKind::number: return num(0.0);
        case ExprKind::variable: return num(1.0);
        case ExprKind::negate: return neg(differentiate(e.lhs()));
        case ExprKind::add: return add(differentiate(e.lhs()), differentiate(e.rhs()));
        case ExprKind::sub: return sub(differentiate(e.lhs()), differentiate(e.rhs()));
        case ExprKind::mul: {
            const Expr& a = e.lhs();
            const Expr& b = e.rhs();
            return add(mul(differentiate(a), b), mul(a, differentiate(b)));
        }
        case ExprKind::div: {
            const Expr& a = e.lhs();
            const Expr& b = e.rhs();
            return div(sub(mul(differentiate(a), b), mul(a, differentiate(b))),
                       pow(b, num(2.0)));
        }
        case ExprKind::pow: {
            const Expr& a = e.lhs();
            const Expr& b = e.rhs();
            if (!b.depends_on_variable()) {
                // n a^(n-1) a'
                return mul(mul(b, pow(a, sub(b, num(1.0)))), differentiate(a));
            }
            if (!a.depends_on_variable()) {
                // a^b log(a) b'
                return mul(mul(e, call(Func::log, a)), differentiate(b));
            }
            // a^b (b' log a + b a' / a)
            return mul(e, add(mul(differentiate(b), call(Func::log, a)),
                              div(mul(b, differentiate(a)), a)));
        }
        case ExprKind::call: {
            const Expr& a = e.lhs();
            const Expr da = differentiate(a);
            if (da.is_number(0.0)) return num(0.0);
            switch (e.func()) {
                case Func::sin: return mul(call(Func::cos, a), da);
                case Func::cos: return mul(neg(call(Func::sin, a)), da);
                case Func::tan: return div(da, pow(call(Func::cos, a), num(2.0)));
                case Func::sinh: return mul(call(Func::cosh, a), da);
                case Func::cosh: return mul(call(Func::sinh, a), da);
                case Func::tanh: return div(da, pow(call(Func::cosh, a), num(2.0)));
                case Func::exp: return mul(e, da);
                case Func::log: return div(da, a);
                case Func::sqrt: return div(da, mul(num(2.0), e));
            }
        }
    }
    return num(0.0);
}

// ---------------------------------------------------------------------------
// Printing

namespace {

int precedence(const Expr& e) {
    switch (e.kind()) {
        case ExprKind::add:
        case ExprKind::sub: return 1;
        case ExprKind::mul:
        case ExprKind::div: return 2;
        case ExprKind::negate: return 3;
        case ExprKind::pow: return 4;
        case ExprKind::number: return e.name().empty() && e.value() < 0.0 ? 0 : 5;
        default: return 5;
    }
}

// Shortest %.Ng form that reads back to the same double.
std::string format_number(double v) {
    char buf[40];
    for (int digits = 1; digits <= 17; ++digits) {
        std::snprintf(buf, sizeof buf, "%.*g", digits, v);
        double back = 0.0;
        std::from_chars(buf, buf + std::char_traits<char>::length(buf), back);
        if (back == v) break;
    }
    return buf;
}

void print_into(const Expr& e, std::string& out);

bool is_literal(const Expr& e) { return e.is_number() && e.name().empty(); }

void print_child(const Expr& child, bool parens, std::string& out) {
    if (parens) out += '(';
    print_into(child, out);
    if (parens) out += ')';
}

const char* op_text(ExprKind k) {
    switch (k) {
        case ExprKind::add: return " + ";
        case ExprKind::sub: return " - ";
        case ExprKind::mul: return "*";
        case ExprKind::div: return "/";
        case ExprKind::pow: return "^";
        default: return "?";
    }
}

void print_into(const Expr& e, std::string& out) {
    switch (e.kind()) {
        case ExprKind::number:
            out += e.name().empty() ? format_number(e.value()) : e.name();
            return;
        case ExprKind::variable: out += e.name(); return;
        case ExprKind::negate:
            out += '-';
            // "-2" would read back as the literal -2, not as negate(2)
            print_child(e.lhs(), precedence(e.lhs()) < 3 || is_literal(e.lhs()), out);
            return;
        case ExprKind::call:
            out += to_string(e.func());
            print_child(e.lhs(), true, out);
            return;
        default: break;
    }
    const int p = precedence(e);
    if (e.kind() == ExprKind::pow) {
        print_child(e.lhs(), precedence(e.lhs()) <= p, out);
        out += op_text(e.kind());
        print_child(e.rhs(), precedence(e.rhs()) < p, out);
    } else {
        // Left-associative: parenthesize an equal-precedence right operand so
        // the tree shape survives a round trip.
        print_child(e.lhs(), precedence(e.lhs()) < p, out);
        out += op_text(e.kind());
        print_child(e.rhs(), precedence(e.rhs()) <= p, out);
    }
}

void dump_into(const Expr& e, std::string& out) {
    switch (e.kind()) {
        case ExprKind::number:
            out += e.name().empty() ? format_number(e.value()) : e.name();
            return;
        case ExprKind::variable: out += e.name(); return;
        case ExprKind::negate: out += "(neg "; break;
        case ExprKind::add: out += "(add "; break;
        case ExprKind::sub: out += "(sub "; break;
        case ExprKind::mul: out += "(mul "; break;
        case ExprKind::div: out += "(div "; break;
        case ExprKind::pow: out += "(pow "; break;
        case ExprKind::call:
            out += '(';
            out += to_string(e.func());
            out += ' ';
            break;
    }
    dump_into(e.lhs(), out);
    if (e.kind() != ExprKind::negate && e.kind() != ExprKind::call) {
        out += ' ';
        dump_into(e.rhs(), out);
    }
    out += ')';
}

}  // namespace

std::string print(const Expr& e) {
    std::string out;
    print_into(e, out);
    return out;
}

std::string dump_tree(const Expr& e) {
    std::string out;
    dump_into(e, out);
    return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

constexpr std::array<std::pair<std::string_view, Func>, 9> kFunctions{{
    {"sin", Func::sin},
    {"cos", Func::cos},
    {"tan", Func::tan},
    {"sinh", Func::sinh},
    {"cosh", Func::cosh},
    {"tanh", Func::tanh},
    {"exp", Func::exp},
    {"log", Func::log},
    {"sqrt", Func::sqrt},
}};

class Parser {
public:
    Parser(std::string_view text, std::string_view variable) : text_(text), var_(variable) {}

    Expr run() {
        skip_space();
        if (pos_ >= text_.size()) fail("empty expression");
        Expr e = expression();
        skip_space();
        if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(Errc::syntax_error,
                    "syntax error at position " + std::to_string(pos_ + 1) + ": " + what,
                    pos_ + 1);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Expr expression() {
        Expr lhs = term();
        for (;;) {
            if (accept('+')) {
                lhs = Expr::binary(ExprKind::add, lhs, term());
            } else if (accept('-')) {
                lhs = Expr::binary(ExprKind::sub, lhs, term());
            } else {
                return lhs;
            }
        }
    }

    Expr term() {
        Expr lhs = unary();
        for (;;) {
            if (accept('*')) {
                lhs = Expr::binary(ExprKind::mul, lhs, unary());
            } else if (accept('/')) {
                lhs = Expr::binary(ExprKind::div, lhs, unary());
            } else {
                return lhs;
            }
        }
    }

    Expr unary() {
        if (accept('-')) {
            skip_space();
            const bool digit = pos_ < text_.size() &&
                               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.');
            Expr operand = unary();
            // a minus glued to a bare literal is part of the literal
            if (digit && operand.is_number() && operand.name().empty())
                return Expr::number(-operand.value());
            return Expr::negate(operand);
        }
        if (accept('+')) return unary();
        return power();
    }

    Expr power() {
        Expr base = primary();
        if (accept('^')) return Expr::binary(ExprKind::pow, base, unary());
        return base;
    }

    Expr primary() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Expr inner = expression();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Expr number() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
            ++pos_;
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t p = pos_ + 1;
            if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
            if (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
                pos_ = p;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
            }
        }
        double v = 0.0;
        const auto* first = text_.data() + start;
        const auto* last = text_.data() + pos_;
        const auto res = std::from_chars(first, last, v);
        if (res.ec != std::errc{} || res.ptr != last) {
            pos_ = start;
            fail("malformed number");
        }
        return Expr::number(v);
    }

    Expr identifier() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '_'))
            ++pos_;
        const std::string_view id = text_.substr(start, pos_ - start);

        for (const auto& [name, f] : kFunctions) {
            if (id != name) continue;
            if (!accept('(')) {
                throw Error(Errc::wrong_arity,
                            "function '" + std::string(id) + "' takes exactly one argument",
                            start + 1);
            }
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == ')') {
                throw Error(Errc::wrong_arity,
                            "function '" + std::string(id) + "' takes exactly one argument",
                            start + 1);
            }
            Expr arg = expression();
            if (accept(',')) {
                throw Error(Errc::wrong_arity,
                            "function '" + std::string(id) + "' takes exactly one argument",
                            start + 1);
            }
            if (!accept(')')) fail("expected ')'");
            return Expr::call(f, arg);
        }
        if (id == var_) return Expr::variable(std::string(var_));
        if (id == "pi") return Expr::named_constant("pi", std::numbers::pi);
        if (id == "e") return Expr::named_constant("e", std::numbers::e);
        throw Error(Errc::unknown_identifier, "unknown identifier '" + std::string(id) + "'",
                    start + 1);
    }

    std::string_view text_;
    std::string_view var_;
    std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text, std::string_view variable) {
    return Parser(text, variable).run();
}

// ---------------------------------------------------------------------------

ProfileFunction::ProfileFunction(Expr value, Interval domain)
    : value_(std::move(value)),
      d1_(differentiate(value_)),
      d2_(differentiate(d1_)),
      domain_(domain) {
    if (!(std::isfinite(domain.lo) && std::isfinite(domain.hi) && domain.lo <= domain.hi))
        throw Error(Errc::validation, "profile domain must be a finite, nonempty interval");
}

ProfileFunction ProfileFunction::parse(std::string_view text, Interval domain) {
    return ProfileFunction(rotgeo::parse(text), domain);
}

void ProfileFunction::check(double t) const {
    if (!domain_.contains(t)) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "t=%.17g outside profile domain [%.17g, %.17g]", t,
                      domain_.lo, domain_.hi);
        throw Error(Errc::domain_error, buf);
    }
}

double ProfileFunction::operator()(double t) const {
    check(t);
    return evaluate(value_, t);
}

ProfileFunction::Jet ProfileFunction::jet(double t) const {
    check(t);
    return {evaluate(value_, t), evaluate(d1_, t), evaluate(d2_, t)};
}

}  // namespace rotgeo
