#include "ecdloco/decoder.hpp"

#include <algorithm>
#include <stdexcept>

namespace ecdloco {

std::string_view to_string(DecodeStatus s) noexcept {
  switch (s) {
    case DecodeStatus::ErrorFree: return "ErrorFree";
    case DecodeStatus::ErrorFreeComplemented: return "ErrorFreeComplemented";
    case DecodeStatus::SingleCorrectedCodeword: return "SingleCorrectedCodeword";
    case DecodeStatus::SingleCorrectedNonCodeword: return "SingleCorrectedNonCodeword";
    case DecodeStatus::DoubleListDecoded: return "DoubleListDecoded";
    case DecodeStatus::Failure: return "Failure";
  }
  return "?";
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

Symbol shifted(Symbol s, int delta) { return symbol_from(value(s) + delta); }

}  // namespace

Decoder::Decoder(const CodeParams& params, const ResidueTable& table) : params_(params), table_(table) {
  if (table.m != params.m() || table.ell != params.ell()) throw std::invalid_argument("table built for another code");
}

BigInt Decoder::index_after_substitution(const Word& w, const BigInt& gw, int i, Symbol s) const {
  const int lo = std::max(0, i - params_.ell());
  BigInt g = gw;
  for (int p = lo; p <= i; ++p) g -= contribution(w, p, params_);
  Word u = w;
  u[static_cast<std::size_t>(i)] = s;
  for (int p = lo; p <= i; ++p) g += contribution(u, p, params_);
  return g;
}

bool Decoder::verify(const Word& v, const Word& d, Symbol target) const {
  return is_codeword(d, params_.ell()) && checksum(d, params_.ell()) == target && hamming_distance(v, d) == 1 &&
         residue(formal_index(d, params_)) == 0;
}

std::optional<Word> Decoder::candidate_from_entry(const Word& v, const BigInt&, const TableEntry& e,
                                                  const BigInt& idx, int delta) const {
  if (e.kind == TableEntry::Kind::Location) {
    Word d = v;
    const auto i = static_cast<std::size_t>(e.location);
    d[i] = shifted(v[i], delta);
    return d;
  }
  if (idx < 0 || idx >= params_.codebook_size()) return std::nullopt;
  return unrank(idx, params_);
}

std::optional<Word> Decoder::correct_single(const Word& v, Symbol target) const {
  return correct_single(v, formal_index(v, params_), target);
}

std::optional<Word> Decoder::correct_single(const Word& v, const BigInt& gv, Symbol target) const {
  const int ell = params_.ell();
  const int delta = ((value(target) - value(checksum(v, ell))) % 4 + 4) % 4;
  const std::uint64_t R = table_.R;
  const std::uint64_t r = residue(gv);

  auto accept = [&](std::optional<Word> d) -> std::optional<Word> {
    if (d && verify(v, *d, target)) return d;
    return std::nullopt;
  };

  if (delta == 0) {
    // Only position 0 escapes the checksum (ell = 1).
    if (ell != 1) return std::nullopt;
    for (int s = 0; s < 4; ++s) {
      const Symbol pi = symbol_from(s);
      if (pi == v[0] || (v.size() > 1 && pi == v[1])) continue;
      Word d = v;
      d[0] = pi;
      if (auto ok = accept(d)) return ok;
    }
    return std::nullopt;
  }

  if (is_codeword(v, ell)) {
    // Index error e = g(v) - g(d) with r = e mod R (e > 0) or R - r = -e mod R.
    if (const TableEntry* e = table_.find(r)) {
      if (auto d = accept(candidate_from_entry(v, gv, *e, gv - e->error, delta))) return d;
    }
    if (r != 0 && R - r != r) {
      if (const TableEntry* e = table_.find(R - r)) {
        if (auto d = accept(candidate_from_entry(v, gv, *e, gv + e->error, delta))) return d;
      }
    }
    return std::nullopt;
  }

  // Non-codeword: the erroneous symbol lies in the only over-long run and the
  // checksum tells what it must become.
  const Run run = scan_longest_run(v);
  const Symbol lambda = run.symbol;
  const Symbol lambda_new = shifted(lambda, delta);
  if (value(lambda) > value(lambda_new)) {
    if (const TableEntry* e = table_.find(r)) {
      return accept(candidate_from_entry(v, gv, *e, gv - e->error, delta));
    }
    return std::nullopt;
  }
  // The correction raises the symbol, so the complement carries an upward
  // error from the complemented codeword of index N-1-g(d).
  const Word u = complement_word(v);
  const BigInt gu = formal_index(u, params_);
  const BigInt& n1 = params_.last_index();
  if (const TableEntry* e = table_.find(residue(gu - n1))) {
    return accept(candidate_from_entry(v, gv, *e, n1 - (gu - e->error), delta));
  }
  return std::nullopt;
}

std::vector<Word> Decoder::list_decode(const Word& v, Symbol target) const {
  const BigInt gv = formal_index(v, params_);
  std::vector<Word> list;
  for (int j = 0; j < static_cast<int>(v.size()); ++j) {
    for (int s = 0; s < 4; ++s) {
      const Symbol sym = symbol_from(s);
      if (sym == v[static_cast<std::size_t>(j)]) continue;
      Word u = v;
      u[static_cast<std::size_t>(j)] = sym;
      const BigInt gu = index_after_substitution(v, gv, j, sym);
      auto d = correct_single(u, gu, target);
      if (d && hamming_distance(*d, v) == 2) list.push_back(std::move(*d));
    }
  }
  std::sort(list.begin(), list.end());
  list.erase(std::unique(list.begin(), list.end()), list.end());
  return list;
}

std::vector<bool> Decoder::orientations(const Word& received, const Bridge& bridge) const {
  if (params_.ell() >= 2) return {bridge.l4 == Symbol::T || bridge.l4 == Symbol::C};
  int lo = 4, hi = -1;
  for (int s = 0; s < 4; ++s) {
    if (symbol_from(s) == received[0] || symbol_from(s) == bridge.l3) continue;
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  if (value(bridge.l4) == hi) return {true};
  if (value(bridge.l4) == lo) return {false};
  return {false, true};
}

DecodeResult Decoder::finish(DecodeStatus status, const BigInt& index) const {
  DecodeResult res;
  res.status = status;
  res.index = index;
  BigInt q = index / table_.R;
  const BigInt mask = (BigInt(1) << table_.msg_bits) - 1;
  res.message = integer_to_bits(q & mask, table_.msg_bits);
  return res;
}

DecodeResult Decoder::decode(const Word& w, const Bridge& bridge, std::uint64_t seed) const {
  if (static_cast<int>(w.size()) != params_.m()) throw std::invalid_argument("received word has wrong length");
  const int ell = params_.ell();
  const BigInt& n1 = params_.last_index();
  const BigInt gw = formal_index(w, params_);
  const std::uint64_t r = residue(gw);
  const bool codeword = is_codeword(w, ell);

  if (codeword && r == 0) return finish(DecodeStatus::ErrorFree, gw);
  if (codeword && r == table_.phi_n1) return finish(DecodeStatus::ErrorFreeComplemented, n1 - gw);

  const DecodeStatus single = codeword ? DecodeStatus::SingleCorrectedCodeword : DecodeStatus::SingleCorrectedNonCodeword;

  if (ell == 1 && checksum(w, 1) == bridge.l3) {
    // The error sits at position 0, which also decides the orientation marker,
    // so both orientations are tried through the residue.
    for (int s = 0; s < 4; ++s) {
      const Symbol pi = symbol_from(s);
      if (pi == w[0] || (w.size() > 1 && pi == w[1])) continue;
      const BigInt gu = index_after_substitution(w, gw, 0, pi);
      const std::uint64_t ru = residue(gu);
      if (ru == 0) return finish(single, gu);
      if (ru == table_.phi_n1) return finish(single, n1 - gu);
    }
  }

  const std::vector<bool> orients = orientations(w, bridge);
  for (bool comp : orients) {
    const Word v = comp ? complement_word(w) : w;
    const Symbol target = comp ? complemented_checksum(bridge.l3, params_.m(), ell) : bridge.l3;
    const BigInt gv = comp ? formal_index(v, params_) : gw;
    if (auto d = correct_single(v, gv, target)) return finish(single, formal_index(*d, params_));
  }

  std::vector<Word> list;
  for (bool comp : orients) {
    const Word v = comp ? complement_word(w) : w;
    const Symbol target = comp ? complemented_checksum(bridge.l3, params_.m(), ell) : bridge.l3;
    auto part = list_decode(v, target);
    list.insert(list.end(), part.begin(), part.end());
  }
  std::sort(list.begin(), list.end());
  list.erase(std::unique(list.begin(), list.end()), list.end());
  if (list.empty()) {
    DecodeResult res;
    res.status = DecodeStatus::Failure;
    return res;
  }
  const std::size_t pick = list.size() == 1 ? 0 : static_cast<std::size_t>(splitmix64(seed) % list.size());
  DecodeResult res = finish(DecodeStatus::DoubleListDecoded, formal_index(list[pick], params_));
  res.list_size = static_cast<int>(list.size());
  res.random_pick = list.size() > 1;
  return res;
}

DecodeResult Decoder::decode(std::span<const Symbol> segment, std::uint64_t seed) const {
  const auto m = static_cast<std::size_t>(params_.m());
  if (segment.size() != m + 3) throw std::invalid_argument("segment must have m+3 symbols");
  std::vector<Symbol> by_pos(m);
  for (std::size_t k = 0; k < m; ++k) by_pos[m - 1 - k] = segment[k];
  const Bridge b{segment[m], segment[m + 1], segment[m + 2]};
  return decode(Word::from_positions(std::move(by_pos)), b, seed);
}

DecodeResult Decoder::decode(std::string_view segment_text, std::uint64_t seed) const {
  std::vector<Symbol> seg;
  seg.reserve(segment_text.size());
  for (char c : segment_text) seg.push_back(symbol_from_char(c));
  return decode(std::span<const Symbol>(seg), seed);
}

}  // namespace ecdloco
