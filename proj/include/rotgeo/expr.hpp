#pragma once

// Expression language for profile curves: a small recursive-descent parser,
// symbolic differentiation, evaluation with domain checks, and a canonical
// printer whose output parses back to the same tree.
//
// Grammar (whitespace insignificant, positions in errors are 1-based):
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' unary)?          right-associative
//   primary := number | 'pi' | 'e' | var | func '(' expr ')' | '(' expr ')'

#include <memory>
#include <string>
#include <string_view>

namespace rotgeo {

enum class ExprKind { number, variable, negate, add, sub, mul, div, pow, call };

enum class Func { sin, cos, tan, sinh, cosh, tanh, exp, log, sqrt };

class Expr {
public:
    static Expr number(double value);
    static Expr named_constant(std::string name, double value);
    static Expr variable(std::string name = "t");
    static Expr negate(Expr operand);
    static Expr binary(ExprKind op, Expr lhs, Expr rhs);
    static Expr call(Func f, Expr arg);

    ExprKind kind() const;
    double value() const;             // number nodes
    const std::string& name() const;  // variable and named-constant nodes
    Func func() const;                // call nodes
    const Expr& lhs() const;          // operand of negate/call, left of binary
    const Expr& rhs() const;

    bool is_number() const { return kind() == ExprKind::number; }
    bool is_number(double v) const { return is_number() && value() == v; }
    bool depends_on_variable() const;

private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Throws Errc::syntax_error (with position), Errc::unknown_identifier or
/// Errc::wrong_arity.
Expr parse(std::string_view text, std::string_view variable = "t");

/// Symbolic d/d(variable). Constant subtrees are folded along with the
/// trivial identities x+0, x*1, x*0, x^1; nothing else is simplified.
Expr differentiate(const Expr& e);

/// Throws Errc::domain_error on log/sqrt of a negative, division by zero,
/// 0^negative, a non-integer power of a non-positive base, or overflow.
double evaluate(const Expr& e, double t);

/// Canonical infix text; parse(print(e)) rebuilds the same tree.
std::string print(const Expr& e);

/// Prefix tree dump, e.g. (add (mul 2 t) 1).
std::string dump_tree(const Expr& e);

const char* to_string(Func f) noexcept;

struct Interval {
    double lo = 0.0;
    double hi = 1.0;
    bool contains(double t) const { return t >= lo && t <= hi; }
};

/// A profile function with its first two symbolic derivatives on a closed
/// interval. Evaluation outside the interval is a domain error.
class ProfileFunction {
public:
    struct Jet {
        double f = 0.0, df = 0.0, ddf = 0.0;
    };

    ProfileFunction(Expr value, Interval domain);
    static ProfileFunction parse(std::string_view text, Interval domain);

    const Expr& value() const { return value_; }
    const Expr& d1() const { return d1_; }
    const Expr& d2() const { return d2_; }
    const Interval& domain() const { return domain_; }

    double operator()(double t) const;
    Jet jet(double t) const;

private:
    void check(double t) const;

    Expr value_;
    Expr d1_;
    Expr d2_;
    Interval domain_;
};

}  // namespace rotgeo
