#include "ecdloco/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace ecdloco {

char to_char(Symbol s) noexcept {
  static constexpr char kChars[4] = {'A', 'T', 'G', 'C'};
  return kChars[value(s)];
}

Symbol symbol_from_char(char c) {
  switch (c) {
    case 'A': return Symbol::A;
    case 'T': return Symbol::T;
    case 'G': return Symbol::G;
    case 'C': return Symbol::C;
    default:
      throw std::invalid_argument(std::string("invalid DNA symbol '") + c + "'");
  }
}

Word Word::parse(std::string_view text) {
  Word w(text.size());
  for (std::size_t k = 0; k < text.size(); ++k) {
    w.symbols_[text.size() - 1 - k] = symbol_from_char(text[k]);
  }
  return w;
}

Word Word::from_positions(std::vector<Symbol> by_position) {
  Word w;
  w.symbols_ = std::move(by_position);
  return w;
}

std::string Word::str() const {
  std::string out(symbols_.size(), 'A');
  for (std::size_t p = 0; p < symbols_.size(); ++p) {
    out[symbols_.size() - 1 - p] = to_char(symbols_[p]);
  }
  return out;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t p = a.size(); p-- > 0;) {
    if (a[p] != b[p]) return value(a[p]) <=> value(b[p]);
  }
  return std::strong_ordering::equal;
}

Word complement_word(const Word& w) {
  Word out(w.size());
  for (std::size_t p = 0; p < w.size(); ++p) out[p] = complement(w[p]);
  return out;
}

int word_disparity(const Word& w) noexcept {
  int d = 0;
  for (Symbol s : w.positions()) d += disparity(s);
  return d;
}

std::size_t hamming_distance(const Word& a, const Word& b) {
  if (a.size() != b.size()) throw std::invalid_argument("hamming_distance: length mismatch");
  std::size_t d = 0;
  for (std::size_t p = 0; p < a.size(); ++p) d += a[p] != b[p];
  return d;
}

Run scan_longest_run(const Word& w) {
  Run best;
  std::size_t p = w.size();
  while (p > 0) {
    const std::size_t start = p - 1;
    std::size_t len = 1;
    while (len < p && w[start - len] == w[start]) ++len;
    if (len > best.length) best = Run{w[start], start, len};
    p -= len;
  }
  return best;
}

bool is_codeword(const Word& w, int ell) noexcept {
  int run = 0;
  for (std::size_t p = 0; p < w.size(); ++p) {
    run = (p > 0 && w[p] == w[p - 1]) ? run + 1 : 1;
    if (run > ell) return false;
  }
  return true;
}

}  // namespace ecdloco
