#include "pcx/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace pcx {

namespace {

bool is_const(const NodePtr& n, double v) {
    return n->kind == NodeKind::Constant && n->value == v;
}

double eval_node(const ExprNode& n, std::span<const double> x) {
    switch (n.kind) {
        case NodeKind::Constant: return n.value;
        case NodeKind::Pi: return M_PI;
        case NodeKind::Variable: return x[static_cast<std::size_t>(n.index)];
        case NodeKind::Negate: return -eval_node(*n.lhs, x);
        case NodeKind::Sin: return std::sin(eval_node(*n.lhs, x));
        case NodeKind::Cos: return std::cos(eval_node(*n.lhs, x));
        case NodeKind::Exp: return std::exp(eval_node(*n.lhs, x));
        case NodeKind::Ln: {
            double a = eval_node(*n.lhs, x);
            if (!(a > 0.0)) throw DomainError("ln of non-positive argument");
            return std::log(a);
        }
        case NodeKind::Add: return eval_node(*n.lhs, x) + eval_node(*n.rhs, x);
        case NodeKind::Sub: return eval_node(*n.lhs, x) - eval_node(*n.rhs, x);
        case NodeKind::Mul: return eval_node(*n.lhs, x) * eval_node(*n.rhs, x);
        case NodeKind::Div: {
            double num = eval_node(*n.lhs, x);
            double den = eval_node(*n.rhs, x);
            if (den == 0.0) throw DomainError("division by zero");
            return num / den;
        }
        case NodeKind::Pow: {
            double b = eval_node(*n.lhs, x);
            double r = 1.0;
            for (int k = 0; k < n.exponent; ++k) r *= b;
            return r;
        }
    }
    throw std::logic_error("unreachable node kind");
}

NodePtr diff_node(const NodePtr& n, int var);

NodePtr node(NodeKind kind, double value = 0.0, int index = 0, int exponent = 0,
             NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
    return std::make_shared<ExprNode>(
        ExprNode{kind, value, index, exponent, std::move(lhs), std::move(rhs)});
}

}  // namespace

NodePtr make_constant(double v) { return node(NodeKind::Constant, v); }
NodePtr make_pi() { return node(NodeKind::Pi); }
NodePtr make_variable(int index) { return node(NodeKind::Variable, 0.0, index); }

NodePtr make_unary(NodeKind kind, NodePtr operand) {
    if (operand->kind == NodeKind::Constant) {
        double a = operand->value;
        switch (kind) {
            case NodeKind::Negate: return make_constant(-a);
            case NodeKind::Sin: return make_constant(std::sin(a));
            case NodeKind::Cos: return make_constant(std::cos(a));
            case NodeKind::Exp: return make_constant(std::exp(a));
            case NodeKind::Ln:
                if (a > 0.0) return make_constant(std::log(a));
                break;  // keep symbolic; error surfaces at evaluation
            default: break;
        }
    }
    if (kind == NodeKind::Negate && operand->kind == NodeKind::Negate)
        return operand->lhs;
    return node(kind, 0.0, 0, 0, std::move(operand));
}

NodePtr make_binary(NodeKind kind, NodePtr lhs, NodePtr rhs) {
    const bool lc = lhs->kind == NodeKind::Constant;
    const bool rc = rhs->kind == NodeKind::Constant;
    switch (kind) {
        case NodeKind::Add:
            if (lc && rc) return make_constant(lhs->value + rhs->value);
            if (is_const(lhs, 0.0)) return rhs;
            if (is_const(rhs, 0.0)) return lhs;
            break;
        case NodeKind::Sub:
            if (lc && rc) return make_constant(lhs->value - rhs->value);
            if (is_const(rhs, 0.0)) return lhs;
            if (is_const(lhs, 0.0)) return make_unary(NodeKind::Negate, rhs);
            break;
        case NodeKind::Mul:
            if (lc && rc) return make_constant(lhs->value * rhs->value);
            if (is_const(lhs, 0.0) || is_const(rhs, 0.0)) return make_constant(0.0);
            if (is_const(lhs, 1.0)) return rhs;
            if (is_const(rhs, 1.0)) return lhs;
            break;
        case NodeKind::Div:
            if (is_const(lhs, 0.0) && !is_const(rhs, 0.0)) return make_constant(0.0);
            if (is_const(rhs, 1.0)) return lhs;
            if (lc && rc && rhs->value != 0.0)
                return make_constant(lhs->value / rhs->value);
            break;
        default:
            break;
    }
    return node(kind, 0.0, 0, 0, std::move(lhs), std::move(rhs));
}

NodePtr make_pow(NodePtr base, int exponent) {
    if (exponent < 0) throw std::invalid_argument("negative integer exponent");
    if (exponent == 0) return make_constant(1.0);
    if (exponent == 1) return base;
    if (base->kind == NodeKind::Constant) {
        double r = 1.0;
        for (int k = 0; k < exponent; ++k) r *= base->value;
        return make_constant(r);
    }
    return node(NodeKind::Pow, 0.0, 0, exponent, std::move(base));
}

namespace {

NodePtr diff_node(const NodePtr& n, int var) {
    switch (n->kind) {
        case NodeKind::Constant:
        case NodeKind::Pi:
            return make_constant(0.0);
        case NodeKind::Variable:
            return make_constant(n->index == var ? 1.0 : 0.0);
        case NodeKind::Negate:
            return make_unary(NodeKind::Negate, diff_node(n->lhs, var));
        case NodeKind::Sin:
            return make_binary(NodeKind::Mul, make_unary(NodeKind::Cos, n->lhs),
                               diff_node(n->lhs, var));
        case NodeKind::Cos:
            return make_binary(
                NodeKind::Mul,
                make_unary(NodeKind::Negate, make_unary(NodeKind::Sin, n->lhs)),
                diff_node(n->lhs, var));
        case NodeKind::Exp:
            return make_binary(NodeKind::Mul,
                               make_unary(NodeKind::Exp, n->lhs),
                               diff_node(n->lhs, var));
        case NodeKind::Ln:
            return make_binary(NodeKind::Div, diff_node(n->lhs, var), n->lhs);
        case NodeKind::Add:
            return make_binary(NodeKind::Add, diff_node(n->lhs, var),
                               diff_node(n->rhs, var));
        case NodeKind::Sub:
            return make_binary(NodeKind::Sub, diff_node(n->lhs, var),
                               diff_node(n->rhs, var));
        case NodeKind::Mul:
            return make_binary(
                NodeKind::Add,
                make_binary(NodeKind::Mul, diff_node(n->lhs, var), n->rhs),
                make_binary(NodeKind::Mul, n->lhs, diff_node(n->rhs, var)));
        case NodeKind::Div:
            // (u'v - uv') / v^2
            return make_binary(
                NodeKind::Div,
                make_binary(
                    NodeKind::Sub,
                    make_binary(NodeKind::Mul, diff_node(n->lhs, var), n->rhs),
                    make_binary(NodeKind::Mul, n->lhs, diff_node(n->rhs, var))),
                make_pow(n->rhs, 2));
        case NodeKind::Pow:
            // k * u^(k-1) * u'
            return make_binary(
                NodeKind::Mul,
                make_binary(NodeKind::Mul,
                            make_constant(static_cast<double>(n->exponent)),
                            make_pow(n->lhs, n->exponent - 1)),
                diff_node(n->lhs, var));
    }
    throw std::logic_error("unreachable node kind");
}

// ---- parser ----------------------------------------------------------------

class Parser {
public:
    Parser(std::string_view text, int dim) : text_(text), dim_(dim) {}

    NodePtr run() {
        NodePtr e = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input", pos_);
        return e;
    }

private:
    std::string_view text_;
    int dim_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    NodePtr expr() {
        NodePtr lhs = term();
        for (;;) {
            if (accept('+'))
                lhs = make_binary(NodeKind::Add, lhs, term());
            else if (accept('-'))
                lhs = make_binary(NodeKind::Sub, lhs, term());
            else
                return lhs;
        }
    }

    NodePtr term() {
        NodePtr lhs = factor();
        for (;;) {
            if (accept('*'))
                lhs = make_binary(NodeKind::Mul, lhs, factor());
            else if (accept('/'))
                lhs = make_binary(NodeKind::Div, lhs, factor());
            else
                return lhs;
        }
    }

    NodePtr factor() {
        NodePtr b = base();
        if (accept('^')) {
            skip_ws();
            std::size_t start = pos_;
            int v = parse_int();
            if (v < 0) throw ParseError("negative exponent", start);
            return make_pow(b, v);
        }
        return b;
    }

    int parse_int() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) throw ParseError("expected integer", start);
        return std::atoi(std::string(text_.substr(start, pos_ - start)).c_str());
    }

    NodePtr base() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '-') {
            ++pos_;
            return make_unary(NodeKind::Negate, base());
        }
        if (c == '(') {
            ++pos_;
            NodePtr e = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            return number();
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            return identifier();
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    NodePtr number() {
        const char* begin = text_.data() + pos_;
        char* end = nullptr;
        double v = std::strtod(begin, &end);
        if (end == begin) throw ParseError("malformed number", pos_);
        // Do not let strtod consume an exponent marker that is actually an
        // identifier boundary; the grammar has no 'e' exponents ambiguity
        // with names since identifiers never directly follow digits.
        pos_ += static_cast<std::size_t>(end - begin);
        return make_constant(v);
    }

    NodePtr identifier() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_]))))
            ++pos_;
        std::string_view name = text_.substr(start, pos_ - start);
        if (name == "pi") return make_pi();
        if (name.size() >= 2 && name[0] == 'x') {
            bool digits = true;
            for (std::size_t i = 1; i < name.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(name[i])))
                    digits = false;
            if (digits) {
                int idx = std::atoi(std::string(name.substr(1)).c_str());
                if (idx < 1 || idx > dim_)
                    throw ParseError("variable index out of range: " +
                                         std::string(name),
                                     start);
                return make_variable(idx - 1);
            }
        }
        if (name == "sin" || name == "cos" || name == "exp" || name == "ln") {
            if (!accept('(')) throw ParseError("expected '(' after function", pos_);
            NodePtr arg = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            NodeKind k = name == "sin"   ? NodeKind::Sin
                         : name == "cos" ? NodeKind::Cos
                         : name == "exp" ? NodeKind::Exp
                                         : NodeKind::Ln;
            return make_unary(k, arg);
        }
        throw ParseError("unknown identifier: " + std::string(name), start);
    }
};

// ---- printer ---------------------------------------------------------------

void print_node(const ExprNode& n, std::ostringstream& out) {
    auto paren = [&out](const ExprNode& c) {
        out << '(';
        print_node(c, out);
        out << ')';
    };
    switch (n.kind) {
        case NodeKind::Constant: {
            std::ostringstream tmp;
            tmp.precision(17);
            tmp << n.value;
            out << tmp.str();
            break;
        }
        case NodeKind::Pi: out << "pi"; break;
        case NodeKind::Variable: out << 'x' << (n.index + 1); break;
        case NodeKind::Negate:
            out << '-';
            paren(*n.lhs);
            break;
        case NodeKind::Sin: out << "sin"; paren(*n.lhs); break;
        case NodeKind::Cos: out << "cos"; paren(*n.lhs); break;
        case NodeKind::Exp: out << "exp"; paren(*n.lhs); break;
        case NodeKind::Ln: out << "ln"; paren(*n.lhs); break;
        case NodeKind::Add:
            paren(*n.lhs);
            out << '+';
            paren(*n.rhs);
            break;
        case NodeKind::Sub:
            paren(*n.lhs);
            out << '-';
            paren(*n.rhs);
            break;
        case NodeKind::Mul:
            paren(*n.lhs);
            out << '*';
            paren(*n.rhs);
            break;
        case NodeKind::Div:
            paren(*n.lhs);
            out << '/';
            paren(*n.rhs);
            break;
        case NodeKind::Pow:
            paren(*n.lhs);
            out << '^' << n.exponent;
            break;
    }
}

}  // namespace

Expression Expression::parse(std::string_view text, int dimension) {
    if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
    Parser p(text, dimension);
    return Expression(p.run(), dimension);
}

double Expression::evaluate(std::span<const double> point) const {
    if (static_cast<int>(point.size()) != dim_)
        throw std::invalid_argument("point dimension mismatch");
    return eval_node(*root_, point);
}

Expression Expression::derivative(int var) const {
    if (var < 0 || var >= dim_)
        throw std::invalid_argument("derivative variable out of range");
    return Expression(diff_node(root_, var), dim_);
}

std::string Expression::str() const {
    std::ostringstream out;
    print_node(*root_, out);
    return out.str();
}

}  // namespace pcx
