#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ecdloco {

/// DNA symbol. Numeric values follow the code ordering A < T < G < C.
enum class Symbol : std::uint8_t { A = 0, T = 1, G = 2, C = 3 };

constexpr int value(Symbol s) noexcept { return static_cast<int>(s); }
constexpr Symbol symbol_from(int v) noexcept { return static_cast<Symbol>(v & 3); }
constexpr Symbol complement(Symbol s) noexcept { return static_cast<Symbol>(3 - value(s)); }

/// -1 for A/T, +1 for G/C.
constexpr int disparity(Symbol s) noexcept { return value(s) >= 2 ? 1 : -1; }

char to_char(Symbol s) noexcept;

/// Throws std::invalid_argument for anything other than A, T, G, C.
Symbol symbol_from_char(char c);

/// Fixed-length word over {A,T,G,C}.
///
/// Positions are numbered from the right: position 0 is the rightmost
/// (least significant) symbol and position size()-1 the leftmost. Text form
/// lists the leftmost symbol first, so "AGTCAG" has A at position 5.
class Word {
public:
  Word() = default;
  explicit Word(std::size_t length, Symbol fill = Symbol::A) : symbols_(length, fill) {}

  /// Parses text such as "AGTCAG"; throws std::invalid_argument on other characters.
  static Word parse(std::string_view text);

  /// Builds a word from symbols already indexed by position.
  static Word from_positions(std::vector<Symbol> by_position);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }

  Symbol operator[](std::size_t pos) const noexcept { return symbols_[pos]; }
  Symbol& operator[](std::size_t pos) noexcept { return symbols_[pos]; }

  /// Symbols indexed by position (index 0 = rightmost).
  std::span<const Symbol> positions() const noexcept { return symbols_; }

  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;

  /// Lexicographic comparison with the leftmost symbol most significant.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

private:
  std::vector<Symbol> symbols_;  // symbols_[p] is position p
};

Word complement_word(const Word& w);

/// #GC - #AT over the word.
int word_disparity(const Word& w) noexcept;

std::size_t hamming_distance(const Word& a, const Word& b);

/// Leftmost maximal run of greatest length. `start` is the position of the
/// run's leftmost symbol, so the run occupies start, start-1, ..., start-length+1.
struct Run {
  Symbol symbol = Symbol::A;
  std::size_t start = 0;
  std::size_t length = 0;
};

Run scan_longest_run(const Word& w);

/// True iff no symbol repeats more than `ell` times consecutively.
bool is_codeword(const Word& w, int ell) noexcept;

}  // namespace ecdloco
