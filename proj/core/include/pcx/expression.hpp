#pragma once

#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pcx {

/// Raised when the input text does not conform to the expression grammar.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

/// Raised when evaluation leaves the function's domain (ln of a non-positive
/// argument, division by zero).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class NodeKind {
    Constant,
    Pi,
    Variable,
    Negate,
    Sin,
    Cos,
    Exp,
    Ln,
    Add,
    Sub,
    Mul,
    Div,
    Pow,  // integer exponent >= 0
};

struct ExprNode;
using NodePtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    NodeKind kind;
    double value = 0.0;  // Constant
    int index = 0;       // Variable (0-based)
    int exponent = 0;    // Pow
    NodePtr lhs;
    NodePtr rhs;
};

/// Immutable scalar function of n box-constrained variables.
///
/// Grammar accepted by parse():
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := base ('^' INT)?
///   base   := NUMBER | 'pi' | 'x'INT | '(' expr ')' | FUNC '(' expr ')' | '-' base
///   FUNC   := sin | cos | exp | ln
/// Variables are written x1..xn; whitespace is insignificant.
class Expression {
public:
    Expression() = default;

    static Expression parse(std::string_view text, int dimension);

    double evaluate(std::span<const double> point) const;

    /// Exact symbolic partial derivative with respect to variable `var`
    /// (0-based). Total on valid ASTs; applying it twice yields Hessian
    /// entries.
    Expression derivative(int var) const;

    /// Re-parsable text form; parse(str(), dimension()) evaluates identically.
    std::string str() const;

    int dimension() const { return dim_; }
    bool empty() const { return root_ == nullptr; }
    const NodePtr& root() const { return root_; }

    Expression(NodePtr root, int dim) : root_(std::move(root)), dim_(dim) {}

private:
    NodePtr root_;
    int dim_ = 0;
};

// Simplifying node constructors (constant folding and 0/1 identities only;
// correctness is evaluation equality, not canonical form).
NodePtr make_constant(double v);
NodePtr make_pi();
NodePtr make_variable(int index);
NodePtr make_unary(NodeKind kind, NodePtr operand);
NodePtr make_binary(NodeKind kind, NodePtr lhs, NodePtr rhs);
NodePtr make_pow(NodePtr base, int exponent);

}  // namespace pcx
