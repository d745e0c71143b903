#include "ecdloco/ec_codec.hpp"

#include <algorithm>
#include <stdexcept>

namespace ecdloco {

Bits bits_from_string(std::string_view text) {
  Bits b;
  b.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw std::invalid_argument("bit string may contain only 0 and 1");
    b.push_back(c == '1');
  }
  return b;
}

std::string bits_to_string(const Bits& bits) {
  std::string s;
  s.reserve(bits.size());
  for (bool b : bits) s.push_back(b ? '1' : '0');
  return s;
}

BigInt bits_to_integer(const Bits& bits) {
  BigInt v = 0;
  for (bool b : bits) v = (v << 1) | (b ? 1 : 0);
  return v;
}

Bits integer_to_bits(const BigInt& v, int width) {
  if (v < 0) throw std::invalid_argument("integer_to_bits: negative value");
  Bits b(static_cast<std::size_t>(width));
  for (int k = 0; k < width; ++k) b[static_cast<std::size_t>(width - 1 - k)] = bit_test(v, static_cast<unsigned>(k));
  return b;
}

Symbol checksum(const Word& d, int ell) {
  int s = 0;
  for (std::size_t p = ell == 1 ? 1 : 0; p < d.size(); ++p) s += value(d[p]);
  return symbol_from(s);
}

Symbol complemented_checksum(Symbol s, int m, int ell) {
  const int n = ell == 1 ? m - 1 : m;
  return symbol_from(((3 * n - value(s)) % 4 + 4) % 4);
}

std::string Concatenable::str() const {
  std::string s = codeword.str();
  s += to_char(bridge.l4);
  s += to_char(bridge.l3);
  s += to_char(bridge.l5);
  return s;
}

std::vector<Symbol> Concatenable::symbols() const {
  std::vector<Symbol> out;
  out.reserve(codeword.size() + 3);
  for (std::size_t p = codeword.size(); p-- > 0;) out.push_back(codeword[p]);
  out.push_back(bridge.l4);
  out.push_back(bridge.l3);
  out.push_back(bridge.l5);
  return out;
}

std::pair<Word, bool> balance_orientation(const Word& d, const StreamState& state) {
  const int dd = word_disparity(d);
  if (state.disparity != 0 && dd != 0 && (dd > 0) == (state.disparity > 0)) return {complement_word(d), true};
  return {d, false};
}

namespace {

constexpr Symbol highest(std::initializer_list<Symbol> pool, std::initializer_list<Symbol> drop, bool want_high) {
  int best = -1;
  for (Symbol s : pool) {
    if (std::find(drop.begin(), drop.end(), s) != drop.end()) continue;
    if (best < 0 || (want_high ? value(s) > best : value(s) < best)) best = value(s);
  }
  return symbol_from(best);
}

}  // namespace

Bridge make_bridge(const Word& dc, bool complemented, Symbol next_first, int ell) {
  Bridge b;
  b.l3 = checksum(dc, ell);
  const Symbol l1 = dc[0];
  if (ell == 1) {
    b.l4 = highest({Symbol::A, Symbol::T, Symbol::G, Symbol::C}, {l1, b.l3}, complemented);
  } else if (disparity(l1) < 0) {
    b.l4 = complemented ? Symbol::C : Symbol::G;
  } else {
    b.l4 = complemented ? Symbol::T : Symbol::A;
  }
  if (disparity(b.l3) > 0) {
    b.l5 = highest({Symbol::A, Symbol::T}, {next_first}, true);
  } else {
    b.l5 = highest({Symbol::G, Symbol::C}, {next_first}, true);
  }
  return b;
}

std::pair<BigInt, Word> ec_encode(const Bits& bits, const CodeParams& params, const ResidueTable& table) {
  if (static_cast<int>(bits.size()) != table.msg_bits) {
    throw std::invalid_argument("message must have exactly msg_bits bits");
  }
  if (table.m != params.m() || table.ell != params.ell()) throw std::invalid_argument("table built for another code");
  BigInt index = bits_to_integer(bits) * table.R;
  Word w = unrank(index, params);
  return {std::move(index), std::move(w)};
}

std::vector<Concatenable> assemble_concatenables(const std::vector<Bits>& messages, const CodeParams& params,
                                                 const ResidueTable& table) {
  std::vector<Concatenable> out;
  std::vector<bool> flags;
  out.reserve(messages.size());
  StreamState state;
  for (const Bits& b : messages) {
    auto [idx, d] = ec_encode(b, params, table);
    auto [dc, flipped] = balance_orientation(d, state);
    if (!out.empty()) {
      auto& prev = out.back();
      prev.bridge = make_bridge(prev.codeword, flags.back(), dc[dc.size() - 1], params.ell());
    }
    // The separator's disparity class is fixed by the checksum, so the whole
    // bridge can be counted before the next codeword is known.
    const Bridge tentative = make_bridge(dc, flipped, Symbol::A, params.ell());
    state.append(dc);
    state.append(tentative.l4);
    state.append(tentative.l3);
    state.append(tentative.l5);
    out.push_back({std::move(dc), tentative});
    flags.push_back(flipped);
  }
  return out;
}

std::string assemble_strand(const std::vector<Bits>& messages, const CodeParams& params, const ResidueTable& table) {
  std::string s;
  for (const auto& c : assemble_concatenables(messages, params, table)) s += c.str();
  return s;
}

std::size_t longest_run(std::string_view strand) {
  std::size_t best = 0, run = 0;
  for (std::size_t k = 0; k < strand.size(); ++k) {
    run = (k > 0 && strand[k] == strand[k - 1]) ? run + 1 : 1;
    best = std::max(best, run);
  }
  return best;
}

double gc_content(std::string_view strand) {
  if (strand.empty()) return 0.0;
  const auto gc = std::count_if(strand.begin(), strand.end(), [](char c) { return c == 'G' || c == 'C'; });
  return static_cast<double>(gc) / static_cast<double>(strand.size());
}

}  // namespace ecdloco
