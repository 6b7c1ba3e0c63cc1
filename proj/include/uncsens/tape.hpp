#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "uncsens/errors.hpp"

namespace uncsens {

// Reverse-mode tape for the fixed compositions used in this project
// (network forward passes, the uncertainty estimators, the training energy).
// Nodes are scalar; Dot contracts two contiguous index ranges so a dense
// layer costs one node per output unit. Values are evaluated eagerly at
// record time; backward() replays the tape once per requested output.
class Tape {
 public:
  using Index = std::int32_t;

  enum class Op : std::uint8_t {
    kConst,
    kInput,
    kCopy,
    kAdd,
    kSub,
    kMul,
    kDiv,
    kExp,
    kLog,
    kSqrt,
    kRelu,
    kSquare,
    kAddC,   // a + aux
    kMulC,   // a * aux
    kDot,    // sum_i val[a+i] * val[b+i], i < (int)aux
  };

  Index input(double v) { return push(Op::kInput, -1, -1, 0.0, v); }
  Index constant(double v) { return push(Op::kConst, -1, -1, 0.0, v); }

  Index add(Index a, Index b) { return push(Op::kAdd, a, b, 0.0, val_[a] + val_[b]); }
  Index sub(Index a, Index b) { return push(Op::kSub, a, b, 0.0, val_[a] - val_[b]); }
  Index mul(Index a, Index b) { return push(Op::kMul, a, b, 0.0, val_[a] * val_[b]); }
  Index div(Index a, Index b) { return push(Op::kDiv, a, b, 0.0, val_[a] / val_[b]); }
  Index exp(Index a) { return push(Op::kExp, a, -1, 0.0, std::exp(val_[a])); }
  Index log(Index a) { return push(Op::kLog, a, -1, 0.0, std::log(val_[a])); }
  Index sqrt(Index a) { return push(Op::kSqrt, a, -1, 0.0, std::sqrt(val_[a])); }
  Index square(Index a) { return push(Op::kSquare, a, -1, 0.0, val_[a] * val_[a]); }
  Index add_c(Index a, double c) { return push(Op::kAddC, a, -1, c, val_[a] + c); }
  Index mul_c(Index a, double c) { return push(Op::kMulC, a, -1, c, val_[a] * c); }

  // max(a, 0); derivative at exactly 0 is 0.
  Index relu(Index a) {
    return push(Op::kRelu, a, -1, 0.0, val_[a] > 0.0 ? val_[a] : 0.0);
  }

  // Inner product of val[a .. a+n) with val[b .. b+n).
  Index dot(Index a, Index b, Index n) {
    double acc = 0.0;
    for (Index i = 0; i < n; ++i) acc += val_[a + i] * val_[b + i];
    return push(Op::kDot, a, b, static_cast<double>(n), acc);
  }

  double value(Index i) const { return val_[i]; }
  double gradient(Index i) const { return grad_[i]; }
  std::size_t size() const { return op_.size(); }

  // d value(output) / d value(node) for every node on the tape.
  void backward(Index output, double seed = 1.0) {
    if (output < 0 || static_cast<std::size_t>(output) >= op_.size()) {
      throw contract_error("Tape::backward: output index out of range");
    }
    grad_.assign(op_.size(), 0.0);
    grad_[output] = seed;
    for (Index i = output; i >= 0; --i) {
      double g = grad_[i];
      if (g == 0.0) continue;
      Index a = a_[i], b = b_[i];
      switch (op_[i]) {
        case Op::kConst:
        case Op::kInput:
          break;
        case Op::kAdd:
          grad_[a] += g;
          grad_[b] += g;
          break;
        case Op::kSub:
          grad_[a] += g;
          grad_[b] -= g;
          break;
        case Op::kMul:
          grad_[a] += g * val_[b];
          grad_[b] += g * val_[a];
          break;
        case Op::kDiv:
          grad_[a] += g / val_[b];
          grad_[b] -= g * val_[i] / val_[b];
          break;
        case Op::kExp:
          grad_[a] += g * val_[i];
          break;
        case Op::kLog:
          grad_[a] += g / val_[a];
          break;
        case Op::kSqrt:
          grad_[a] += g * 0.5 / val_[i];
          break;
        case Op::kRelu:
          if (val_[a] > 0.0) grad_[a] += g;
          break;
        case Op::kSquare:
          grad_[a] += g * 2.0 * val_[a];
          break;
        case Op::kAddC:
          grad_[a] += g;
          break;
        case Op::kMulC:
          grad_[a] += g * aux_[i];
          break;
        case Op::kDot: {
          Index n = static_cast<Index>(aux_[i]);
          for (Index j = 0; j < n; ++j) {
            grad_[a + j] += g * val_[b + j];
            grad_[b + j] += g * val_[a + j];
          }
          break;
        }
      }
    }
  }

  // Drops all nodes but keeps buffer capacity for reuse.
  void clear() {
    op_.clear();
    a_.clear();
    b_.clear();
    aux_.clear();
    val_.clear();
    grad_.clear();
  }

 private:
  Index push(Op op, Index a, Index b, double aux, double v) {
    op_.push_back(op);
    a_.push_back(a);
    b_.push_back(b);
    aux_.push_back(aux);
    val_.push_back(v);
    return static_cast<Index>(op_.size() - 1);
  }

  std::vector<Op> op_;
  std::vector<Index> a_, b_;
  std::vector<double> aux_;
  std::vector<double> val_;
  std::vector<double> grad_;
};

}  // namespace uncsens
