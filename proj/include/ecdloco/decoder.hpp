#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ecdloco/ec_codec.hpp"

namespace ecdloco {

enum class DecodeStatus {
  ErrorFree,
  ErrorFreeComplemented,
  SingleCorrectedCodeword,
  SingleCorrectedNonCodeword,
  DoubleListDecoded,
  Failure,
};

std::string_view to_string(DecodeStatus s) noexcept;

struct DecodeResult {
  DecodeStatus status = DecodeStatus::Failure;
  BigInt index;       // g(d), a multiple of R unless status is Failure
  Bits message;       // index / R in msg_bits bits
  int list_size = 0;  // |L| for DoubleListDecoded
  bool random_pick = false;
  bool ok() const noexcept { return status != DecodeStatus::Failure; }
};

/// Residue decoder for one code and its table. Immutable after construction,
/// so one instance can serve many threads.
class Decoder {
public:
  Decoder(const CodeParams& params, const ResidueTable& table);

  const CodeParams& params() const noexcept { return params_; }
  const ResidueTable& table() const noexcept { return table_; }

  /// Decodes a segment of m+3 symbols (codeword then bridge). `seed` drives
  /// the random pick among several list candidates.
  DecodeResult decode(std::span<const Symbol> segment, std::uint64_t seed = 0) const;
  DecodeResult decode(const Word& received, const Bridge& bridge, std::uint64_t seed = 0) const;
  DecodeResult decode(std::string_view segment_text, std::uint64_t seed = 0) const;

  /// Single-substitution correction of an orientation-matched word whose
  /// original has checksum `target`. Returns the verified EC codeword.
  std::optional<Word> correct_single(const Word& v, Symbol target) const;

  /// Single-substitution correction with the formal index of v already known.
  std::optional<Word> correct_single(const Word& v, const BigInt& gv, Symbol target) const;

  /// List of EC codewords at Hamming distance 2 from the orientation-matched
  /// word v with checksum `target`, found by single-correcting every
  /// neighbour of v. Sorted by index.
  std::vector<Word> list_decode(const Word& v, Symbol target) const;

  /// Orientations consistent with the received word and trusted bridge:
  /// {false}, {true} or both (ell = 1, inconsistent orientation marker).
  std::vector<bool> orientations(const Word& received, const Bridge& bridge) const;

  /// Index after replacing position i of w by s, recomputing only the ell+1
  /// contributions that can change.
  BigInt index_after_substitution(const Word& w, const BigInt& gw, int i, Symbol s) const;

  std::uint64_t residue(const BigInt& g) const { return phi(g, table_.R); }

private:
  bool verify(const Word& v, const Word& d, Symbol target) const;
  std::optional<Word> candidate_from_entry(const Word& v, const BigInt& gv, const TableEntry& e, const BigInt& idx,
                                           int delta) const;
  DecodeResult finish(DecodeStatus status, const BigInt& index) const;

  CodeParams params_;
  ResidueTable table_;
};

}  // namespace ecdloco
