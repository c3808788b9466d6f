#pragma once

#include <span>
#include <vector>

#include "pcx/expression.hpp"

namespace pcx {

/// Flat evaluation program compiled from one or more expressions. Shared
/// subtrees are evaluated once. Evaluation state lives in a caller-provided
/// scratch buffer, so a compiled tape is safe to share across threads.
class Tape {
public:
    Tape() = default;
    explicit Tape(std::span<const Expression> outputs);

    std::size_t num_outputs() const { return outputs_.size(); }
    std::size_t scratch_size() const { return code_.size(); }

    void evaluate(std::span<const double> x, std::span<double> out,
                  std::vector<double>& scratch) const;

    double evaluate_single(std::span<const double> x,
                           std::vector<double>& scratch) const;

private:
    struct Instr {
        NodeKind op;
        int a = -1;  // operand register
        int b = -1;
        double value = 0.0;  // Constant / Pi
        int index = 0;       // Variable
        int exponent = 0;    // Pow
    };
    std::vector<Instr> code_;
    std::vector<int> outputs_;  // register index per output
};

}  // namespace pcx
