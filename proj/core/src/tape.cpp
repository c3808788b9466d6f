#include "pcx/tape.hpp"

#include <cmath>
#include <unordered_map>

namespace pcx {

Tape::Tape(std::span<const Expression> outputs) {
    std::unordered_map<const ExprNode*, int> seen;

    // Iterative post-order emit with pointer-keyed dedup.
    auto emit = [&](const ExprNode* root) -> int {
        struct Frame {
            const ExprNode* node;
            bool expanded;
        };
        std::vector<Frame> stack{{root, false}};
        while (!stack.empty()) {
            auto [node, expanded] = stack.back();
            if (seen.count(node)) {
                stack.pop_back();
                continue;
            }
            if (!expanded) {
                stack.back().expanded = true;
                if (node->rhs) stack.push_back({node->rhs.get(), false});
                if (node->lhs) stack.push_back({node->lhs.get(), false});
                continue;
            }
            stack.pop_back();
            Instr ins;
            ins.op = node->kind;
            ins.value = node->value;
            ins.index = node->index;
            ins.exponent = node->exponent;
            if (node->lhs) ins.a = seen.at(node->lhs.get());
            if (node->rhs) ins.b = seen.at(node->rhs.get());
            seen[node] = static_cast<int>(code_.size());
            code_.push_back(ins);
        }
        return seen.at(root);
    };

    for (const Expression& e : outputs) outputs_.push_back(emit(e.root().get()));
}

void Tape::evaluate(std::span<const double> x, std::span<double> out,
                    std::vector<double>& scratch) const {
    scratch.resize(code_.size());
    double* r = scratch.data();
    for (std::size_t i = 0; i < code_.size(); ++i) {
        const Instr& ins = code_[i];
        double v;
        switch (ins.op) {
            case NodeKind::Constant: v = ins.value; break;
            case NodeKind::Pi: v = M_PI; break;
            case NodeKind::Variable: v = x[static_cast<std::size_t>(ins.index)]; break;
            case NodeKind::Negate: v = -r[ins.a]; break;
            case NodeKind::Sin: v = std::sin(r[ins.a]); break;
            case NodeKind::Cos: v = std::cos(r[ins.a]); break;
            case NodeKind::Exp: v = std::exp(r[ins.a]); break;
            case NodeKind::Ln:
                if (!(r[ins.a] > 0.0))
                    throw DomainError("ln of non-positive argument");
                v = std::log(r[ins.a]);
                break;
            case NodeKind::Add: v = r[ins.a] + r[ins.b]; break;
            case NodeKind::Sub: v = r[ins.a] - r[ins.b]; break;
            case NodeKind::Mul: v = r[ins.a] * r[ins.b]; break;
            case NodeKind::Div:
                if (r[ins.b] == 0.0) throw DomainError("division by zero");
                v = r[ins.a] / r[ins.b];
                break;
            case NodeKind::Pow: {
                double base = r[ins.a];
                v = 1.0;
                for (int k = 0; k < ins.exponent; ++k) v *= base;
                break;
            }
            default: v = 0.0; break;
        }
        r[i] = v;
    }
    for (std::size_t k = 0; k < outputs_.size(); ++k)
        out[k] = r[outputs_[k]];
}

double Tape::evaluate_single(std::span<const double> x,
                             std::vector<double>& scratch) const {
    double out;
    evaluate(x, {&out, 1}, scratch);
    return out;
}

}  // namespace pcx
