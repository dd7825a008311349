#pragma once

#include <string>
#include <utility>
#include <vector>

#include "su2/blocks.hpp"

namespace su2 {

// Symbol σ(l) of a left-invariant operator, one block per level.
class MultiplierSymbol {
 public:
  explicit MultiplierSymbol(FourierCoefficients blocks, std::string tag = "custom")
      : blocks_(std::move(blocks)), tag_(std::move(tag)) {}

  TwoL band_limit() const { return blocks_.band_limit(); }
  int levels() const { return blocks_.levels(); }
  const FourierCoefficients::Block& operator[](int twol) const { return blocks_[twol]; }
  const FourierCoefficients& blocks() const { return blocks_; }
  const std::string& tag() const { return tag_; }

  // ‖σ(l)‖_op for every level.
  std::vector<double> op_norms() const {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(levels()));
    for (const auto& b : blocks_) out.push_back(op_norm(b));
    return out;
  }

 private:
  FourierCoefficients blocks_;
  std::string tag_;
};

}  // namespace su2
