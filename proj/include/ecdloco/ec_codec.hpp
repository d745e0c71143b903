#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ecdloco/bigint.hpp"
#include "ecdloco/params.hpp"
#include "ecdloco/rank.hpp"
#include "ecdloco/redundancy.hpp"
#include "ecdloco/word.hpp"

namespace ecdloco {

using Bits = std::vector<bool>;  // most significant bit first

Bits bits_from_string(std::string_view text);  // "0101"; throws on other characters
std::string bits_to_string(const Bits& bits);
BigInt bits_to_integer(const Bits& bits);
Bits integer_to_bits(const BigInt& v, int width);

/// Sum of symbol values mod 4 over positions 0..m-1 (1..m-1 when ell = 1).
Symbol checksum(const Word& d, int ell);

/// Checksum of the complemented word expressed through the checksum of the
/// word itself.
Symbol complemented_checksum(Symbol s, int m, int ell);

struct Bridge {
  Symbol l4 = Symbol::A;  // orientation marker
  Symbol l3 = Symbol::A;  // local detection checksum
  Symbol l5 = Symbol::A;  // separator towards the next codeword
  friend bool operator==(const Bridge&, const Bridge&) = default;
};

/// EC codeword in its stored orientation followed by its three bridging
/// symbols. Text form: codeword, then l4 l3 l5.
struct Concatenable {
  Word codeword;
  Bridge bridge;
  std::string str() const;
  std::vector<Symbol> symbols() const;  // in text order
};

struct StreamState {
  long disparity = 0;
  void append(const Word& w) noexcept { disparity += word_disparity(w); }
  void append(Symbol s) noexcept { disparity += ecdloco::disparity(s); }
};

/// Keeps d unless the running disparity is nonzero and d pushes it further
/// in the same direction.
std::pair<Word, bool> balance_orientation(const Word& d, const StreamState& state);

Bridge make_bridge(const Word& dc, bool complemented, Symbol next_first, int ell);

/// Codeword of index decimal(bits) * R. Throws std::invalid_argument unless
/// bits.size() == table.msg_bits.
std::pair<BigInt, Word> ec_encode(const Bits& bits, const CodeParams& params, const ResidueTable& table);

/// K concatenables in text order, balanced against the running disparity.
/// The final bridge uses A as the following symbol.
std::vector<Concatenable> assemble_concatenables(const std::vector<Bits>& messages, const CodeParams& params,
                                                 const ResidueTable& table);
std::string assemble_strand(const std::vector<Bits>& messages, const CodeParams& params, const ResidueTable& table);

/// Longest run of any symbol in a text strand.
std::size_t longest_run(std::string_view strand);
double gc_content(std::string_view strand);

}  // namespace ecdloco
