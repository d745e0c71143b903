#pragma once

#include <cstdint>
#include <vector>

#include "ecdloco/bigint.hpp"

namespace ecdloco {

/// Code length, maximum run length and the scaled cardinality table.
///
/// The codebook size N(i) obeys N(i) = 3 * sum_{k=1..ell} N(i-k) with the
/// fractional seed N(0) = 4/3. Everything here is kept in the scaled form
/// M(i) = 3N(i)/4, which is an integer for every i >= 0 (M(0) = 1). All symbol
/// contributions are sums of M values, so no rational arithmetic is needed.
class CodeParams {
public:
  /// Throws std::invalid_argument unless m >= ell >= 1.
  CodeParams(int m, int ell);

  int m() const noexcept { return m_; }
  int ell() const noexcept { return ell_; }

  /// M(i) for i in [0, m]; 0 for negative i.
  const BigInt& scaled(int i) const noexcept { return i < 0 ? zero_ : scaled_[static_cast<std::size_t>(i)]; }

  /// N(i) = 4 M(i) / 3 for i in [1, m].
  BigInt cardinality(int i) const;

  /// N(m), the codebook size.
  const BigInt& codebook_size() const noexcept { return n_; }

  /// N(m) - 1, the index of the last codeword and the complement offset.
  const BigInt& last_index() const noexcept { return n_minus_1_; }

  /// Contribution of a symbol at position p whose comparison symbol has depth k:
  /// sum_{j=k..ell} M(p + j - ell). Valid for p in [0, m), k in [1, ell].
  const BigInt& tail(int p, int k) const noexcept {
    return tails_[static_cast<std::size_t>(p * ell_ + (k - 1))];
  }

private:
  int m_;
  int ell_;
  std::vector<BigInt> scaled_;
  std::vector<BigInt> tails_;
  BigInt n_;
  BigInt n_minus_1_;
  BigInt zero_{0};
};

}  // namespace ecdloco
