#pragma once

#include <cstdint>
#include <vector>

#include "ecdloco/bigint.hpp"
#include "ecdloco/params.hpp"
#include "ecdloco/word.hpp"

namespace ecdloco {

/// Depth of `delta` at position i: 0 if w_i <= delta, otherwise one more than
/// the number of consecutive copies of delta immediately left of i, or ell+1
/// when that count reaches ell. Positions above m-1 read as C.
int depth(const Word& w, int i, Symbol delta, int ell);

/// Symbol contribution g_i(w_i) of position i to the (formal) index.
BigInt contribution(const Word& w, int i, const CodeParams& params);

/// Formal index: sum of contributions. Equals the lexicographic rank on
/// codewords; arbitrary words may map above N(m)-1.
BigInt formal_index(const Word& w, const CodeParams& params);

/// The codeword of rank `index`. Throws std::out_of_range unless
/// 0 <= index < N(m).
Word unrank(const BigInt& index, const CodeParams& params);

/// Reference evaluations of the rule written directly from the coefficient
/// form (generic triple sum and the ell = 1 / ell = 2 specialisations).
/// Used to cross-check the fast path.
namespace reference {
BigInt formal_index_generic(const Word& w, const CodeParams& params);
BigInt formal_index_ell1(const Word& w, const CodeParams& params);
BigInt formal_index_ell2(const Word& w, const CodeParams& params);
}  // namespace reference

/// Formal residual index computed from residues of the cardinality table
/// only, without forming the index itself.
class ResidueRanker {
public:
  ResidueRanker(const CodeParams& params, std::uint64_t modulus);

  std::uint64_t modulus() const noexcept { return modulus_; }

  std::uint64_t contribution(const Word& w, int i) const noexcept;
  std::uint64_t residue(const Word& w) const noexcept;

private:
  int m_;
  int ell_;
  std::uint64_t modulus_;
  std::vector<std::uint64_t> tails_;  // tail(p,k) mod R
};

}  // namespace ecdloco
