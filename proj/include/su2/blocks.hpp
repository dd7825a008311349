#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SVD>

#include "su2/core.hpp"

namespace su2 {

// One square block of size 2l+1 per level 2l = 0..band_limit.
template <typename Scalar>
class BlockSequence {
 public:
  using Complex = std::complex<Scalar>;
  using Block = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

  BlockSequence() : BlockSequence(TwoL(0)) {}
  explicit BlockSequence(TwoL band_limit) {
    blocks_.reserve(band_limit.dim());
    for (int k = 0; k <= band_limit.value(); ++k) blocks_.push_back(Block::Zero(k + 1, k + 1));
  }

  static BlockSequence identity(TwoL band_limit) {
    BlockSequence s(band_limit);
    for (auto& b : s.blocks_) b.setIdentity();
    return s;
  }

  TwoL band_limit() const { return TwoL(static_cast<int>(blocks_.size()) - 1); }
  int levels() const { return static_cast<int>(blocks_.size()); }

  Block& operator[](int twol) { return blocks_.at(static_cast<std::size_t>(twol)); }
  const Block& operator[](int twol) const { return blocks_.at(static_cast<std::size_t>(twol)); }

  auto begin() { return blocks_.begin(); }
  auto end() { return blocks_.end(); }
  auto begin() const { return blocks_.begin(); }
  auto end() const { return blocks_.end(); }

  // Assign a block after checking it has the right dimension for its level.
  void set(int twol, Block value) {
    if (value.rows() != twol + 1 || value.cols() != twol + 1)
      throw ConformabilityError("block at 2l = " + std::to_string(twol) + " must be " + std::to_string(twol + 1) +
                                " square");
    (*this)[twol] = std::move(value);
  }

  BlockSequence truncated(TwoL band_limit) const {
    BlockSequence out(band_limit);
    for (int k = 0; k <= std::min(band_limit.value(), this->band_limit().value()); ++k) out.blocks_[k] = blocks_[k];
    return out;
  }

  BlockSequence& operator+=(const BlockSequence& other) {
    if (other.levels() > levels()) *this = truncated(other.band_limit());
    for (int k = 0; k < other.levels(); ++k) blocks_[k] += other.blocks_[k];
    return *this;
  }
  BlockSequence& operator*=(Complex scale) {
    for (auto& b : blocks_) b *= scale;
    return *this;
  }
  friend BlockSequence operator+(BlockSequence lhs, const BlockSequence& rhs) { return lhs += rhs; }
  friend BlockSequence operator-(BlockSequence lhs, const BlockSequence& rhs) {
    BlockSequence neg = rhs;
    neg *= Complex(-1);
    return lhs += neg;
  }
  friend BlockSequence operator*(Complex scale, BlockSequence s) { return s *= scale; }

 private:
  std::vector<Block> blocks_;
};

using FourierCoefficients = BlockSequence<double>;

template <typename Derived>
typename Derived::RealScalar hs_norm(const Eigen::MatrixBase<Derived>& m) {
  return m.norm();
}

// Largest singular value.
template <typename Derived>
typename Derived::RealScalar op_norm(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return 0;
  if (m.size() == 1) return std::abs(m(0, 0));
  Eigen::JacobiSVD<typename Derived::PlainObject> svd(m.eval());
  return svd.singularValues()(0);
}

// Largest entrywise difference between two sequences; missing levels count as zero.
template <typename Scalar>
Scalar max_entry_difference(const BlockSequence<Scalar>& x, const BlockSequence<Scalar>& y) {
  Scalar worst = 0;
  const int n = std::max(x.levels(), y.levels());
  for (int k = 0; k < n; ++k) {
    if (k < x.levels() && k < y.levels())
      worst = std::max(worst, (x[k] - y[k]).cwiseAbs().maxCoeff());
    else if (k < x.levels())
      worst = std::max(worst, x[k].cwiseAbs().maxCoeff());
    else
      worst = std::max(worst, y[k].cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace su2
