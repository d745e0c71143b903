#include "doctest.h"
#include "oracle.hpp"

#include <random>

#include "ecdloco/decoder.hpp"
#include "ecdloco/ec_codec.hpp"
#include "ecdloco/simlab.hpp"

using namespace ecdloco;

namespace {

const ResidueTable& table61() {
  static const ResidueTable t = [] {
    CodeParams p(6, 1);
    return make_table(superset_l1(p), p, SearchMode::Strict);
  }();
  return t;
}

DecodeResult decode_against(const Decoder& dec, const std::string& received, const std::string& original) {
  const Word d = Word::parse(original);
  return dec.decode(Word::parse(received), make_bridge(d, false, Symbol::A, dec.params().ell()));
}

}  // namespace

TEST_CASE("checksum fixtures") {
  CHECK(checksum(Word::parse("AGTCAG"), 1) == Symbol::G);
  CHECK(checksum(Word::parse("TATGAC"), 1) == Symbol::A);
  CHECK(checksum(Word::parse("AAAAAC"), 1) == Symbol::A);
  CHECK(checksum(Word::parse("AAAAAC"), 2) == Symbol::C);
}

TEST_CASE("complemented checksum matches the checksum of the complement") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 2000; ++t) {
    const int m = 3 + static_cast<int>(rng() % 20);
    const int ell = 1 + static_cast<int>(rng() % 3);
    std::vector<Symbol> s(static_cast<std::size_t>(m));
    for (auto& x : s) x = symbol_from(static_cast<int>(rng() & 3));
    const Word w = Word::from_positions(s);
    REQUIRE(checksum(complement_word(w), ell) == complemented_checksum(checksum(w, ell), m, ell));
  }
}

TEST_CASE("encoding fixtures") {
  CodeParams p(6, 1);
  const auto& t = table61();
  REQUIRE(t.R == 127);
  REQUIRE(t.msg_bits == 3);
  auto [i1, w1] = ec_encode(bits_from_string("001"), p, t);
  CHECK(i1 == 127);
  CHECK(w1.str() == "AGTCAG");
  auto [i0, w0] = ec_encode(bits_from_string("000"), p, t);
  CHECK(i0 == 0);
  CHECK(w0.str() == "ATATAT");
  auto [i7, w7] = ec_encode(bits_from_string("111"), p, t);
  CHECK(i7 == 889);
  CHECK(w7.str() == "CTCGCT");
  CHECK_THROWS_AS(ec_encode(bits_from_string("01"), p, t), std::invalid_argument);
  CHECK_THROWS_AS(bits_from_string("012"), std::invalid_argument);
}

TEST_CASE("bit conversions") {
  CHECK(bits_to_string(integer_to_bits(5, 4)) == "0101");
  CHECK(bits_to_integer(bits_from_string("1101")) == 13);
}

TEST_CASE("bridge examples") {
  const Word a_end = Word::parse("TCA");  // last symbol A
  CHECK(make_bridge(a_end, true, Symbol::A, 2).l4 == Symbol::C);
  CHECK(make_bridge(a_end, false, Symbol::A, 2).l4 == Symbol::G);
  const Word g_sum = Word::parse("AAG");  // checksum G
  REQUIRE(checksum(g_sum, 2) == Symbol::G);
  CHECK(make_bridge(g_sum, false, Symbol::T, 2).l5 == Symbol::A);
  CHECK(make_bridge(g_sum, false, Symbol::A, 2).l5 == Symbol::T);
}

TEST_CASE("bridges never create long runs across boundaries") {
  for (int ell = 1; ell <= 3; ++ell) {
    // every last symbol, checksum-determining content and next first symbol
    for (int l1 = 0; l1 < 4; ++l1) {
      for (int l3 = 0; l3 < 4; ++l3) {
        for (int nx = 0; nx < 4; ++nx) {
          for (int runlen = 1; runlen <= ell; ++runlen) {
          for (bool comp : {false, true}) {
            // word ending in a run of runlen copies of l1, with checksum l3
            std::vector<Symbol> s(6, Symbol::A);
            for (int k = 0; k < runlen; ++k) s[static_cast<std::size_t>(k)] = symbol_from(l1);
            s[static_cast<std::size_t>(runlen)] = symbol_from(l1 + 1);
            int sum = 0;
            for (std::size_t k = ell == 1 ? 1 : 0; k < 6; ++k) sum += value(s[k]);
            s[5] = symbol_from(((l3 - sum) % 4 + 4) % 4);
            const Word dc = Word::from_positions(s);
            const Bridge b = make_bridge(dc, comp, symbol_from(nx), ell);
            REQUIRE(b.l3 == symbol_from(l3));
            std::string text;
            for (int k = runlen; k >= 0; --k) text += to_char(dc[static_cast<std::size_t>(k)]);
            text += to_char(b.l4);
            text += to_char(b.l3);
            text += to_char(b.l5);
            text += std::string(static_cast<std::size_t>(ell), to_char(symbol_from(nx)));
            CAPTURE(text);
            CHECK(longest_run(text) <= static_cast<std::size_t>(ell));
            CHECK(b.l5 != symbol_from(nx));
            if (ell >= 2) CHECK((b.l4 == Symbol::T || b.l4 == Symbol::C) == comp);
          }
          }
        }
      }
    }
  }
}

TEST_CASE("balancing") {
  const Word gc = Word::parse("GCGCAT");
  StreamState zero;
  CHECK(balance_orientation(gc, zero).second == false);
  StreamState plus;
  plus.disparity = 3;
  auto [w, flipped] = balance_orientation(gc, plus);
  CHECK(flipped);
  CHECK(w == complement_word(gc));
  StreamState minus;
  minus.disparity = -1;
  CHECK(balance_orientation(gc, minus).second == false);
}

TEST_CASE("decoding corrupted words at m = 6") {
  CodeParams p(6, 1);
  Decoder dec(p, table61());

  auto r = decode_against(dec, "TGTCAG", "AGTCAG");
  CHECK(r.status == DecodeStatus::SingleCorrectedCodeword);
  CHECK(r.index == 127);
  CHECK(bits_to_string(r.message) == "001");

  r = decode_against(dec, "AGACAG", "AGTCAG");
  CHECK(r.index == 127);
  CHECK(r.status == DecodeStatus::SingleCorrectedCodeword);

  r = decode_against(dec, "AGCCAG", "AGTCAG");
  CHECK(r.index == 127);
  CHECK(r.status == DecodeStatus::SingleCorrectedNonCodeword);

  r = decode_against(dec, "TAAGAC", "TATGAC");
  CHECK(r.index == 254);

  r = decode_against(dec, "TATAAC", "TATGAC");
  CHECK(r.index == 254);
  CHECK(r.status == DecodeStatus::SingleCorrectedNonCodeword);

  r = decode_against(dec, "AGTCAG", "AGTCAG");
  CHECK(r.status == DecodeStatus::ErrorFree);
  Bridge cb = make_bridge(complement_word(Word::parse("AGTCAG")), true, Symbol::A, 1);
  r = dec.decode(complement_word(Word::parse("AGTCAG")), cb);
  CHECK(r.status == DecodeStatus::ErrorFreeComplemented);
  CHECK(r.index == 127);
}

TEST_CASE("intermediate quantities of the complement path") {
  CodeParams p(6, 1);
  const auto& t = table61();
  const Word w = Word::parse("TATAAC");
  CHECK(formal_index(w, p) == 245);
  CHECK(phi(BigInt(245), t.R) == 118);
  CHECK(t.find(118) == nullptr);
  const Word u = complement_word(w);
  CHECK(formal_index(u, p) == 729);
  CHECK(phi(BigInt(729), t.R) == 94);
  const TableEntry* e = t.find(phi(BigInt(729) - p.last_index(), t.R));
  REQUIRE(e != nullptr);
  BigInt corrected;
  if (e->kind == TableEntry::Kind::Value) {
    corrected = BigInt(729) - e->error;
  } else {
    // a location entry moves the symbol at that position instead
    for (int v = 0; v < 4; ++v) {
      Word x = u;
      x[static_cast<std::size_t>(e->location)] = symbol_from(v);
      if (is_codeword(x, 1) && BigInt(729) - formal_index(x, p) == 12) corrected = formal_index(x, p);
    }
  }
  CHECK(corrected == 717);
  CHECK(p.last_index() - corrected == 254);
  CHECK(formal_index(Word::parse("AGCCAG"), p) - 36 == 127);
}

TEST_CASE("location fix only needs the local contributions") {
  std::mt19937_64 rng(4);
  for (int ell = 1; ell <= 3; ++ell) {
    CodeParams p(29, ell);
    ResidueTable t{29, ell, 7, phi(p.last_index(), 7), 1, {}};
    Decoder dec(p, t);
    for (int k = 0; k < 500; ++k) {
      std::vector<Symbol> s(29);
      for (auto& x : s) x = symbol_from(static_cast<int>(rng() & 3));
      const Word w = Word::from_positions(s);
      const int i = static_cast<int>(rng() % 29);
      const Symbol sym = symbol_from(static_cast<int>(rng() & 3));
      Word u = w;
      u[static_cast<std::size_t>(i)] = sym;
      REQUIRE(dec.index_after_substitution(w, formal_index(w, p), i, sym) == formal_index(u, p));
    }
  }
}

TEST_CASE("strand assembly round trip and constraints") {
  for (int ell = 1; ell <= 3; ++ell) {
    for (int m : {9, 13}) {
      CodeParams p(m, ell);
      const auto t = make_table(default_error_set(p), p, SearchMode::Relaxed);
      Decoder dec(p, t);
      std::mt19937_64 rng(static_cast<std::uint64_t>(m * 10 + ell));
      for (int rep = 0; rep < 50; ++rep) {
        std::vector<Bits> msgs;
        for (int k = 0; k < 6; ++k) msgs.push_back(random_message(t.msg_bits, rng));
        const auto cats = assemble_concatenables(msgs, p, t);
        std::string strand;
        for (const auto& c : cats) strand += c.str();
        REQUIRE(strand == assemble_strand(msgs, p, t));
        REQUIRE(strand.size() == msgs.size() * static_cast<std::size_t>(m + 3));
        REQUIRE(longest_run(strand) <= static_cast<std::size_t>(ell));
        for (std::size_t k = 0; k < msgs.size(); ++k) {
          const auto seg = std::string_view(strand).substr(k * (m + 3), m + 3);
          const auto r = dec.decode(seg);
          REQUIRE((r.status == DecodeStatus::ErrorFree || r.status == DecodeStatus::ErrorFreeComplemented));
          REQUIRE(r.message == msgs[k]);
          REQUIRE(cats[k].bridge.l3 == checksum(cats[k].codeword, ell));
        }
      }
    }
  }
}

TEST_CASE("complements of EC codewords carry the stored residue") {
  CodeParams p(9, 2);
  const auto t = make_table(default_error_set(p), p, SearchMode::Relaxed);
  for (BigInt k = 0; k * t.R < p.codebook_size(); ++k) {
    const Word d = unrank(k * t.R, p);
    REQUIRE(phi(formal_index(complement_word(d), p), t.R) == t.phi_n1);
  }
}

TEST_CASE("single substitutions at small lengths are always corrected") {
  for (int ell = 1; ell <= 2; ++ell) {
    for (int m = 6; m <= 9; ++m) {
      CodeParams p(m, ell);
      const auto t = make_table(default_error_set(p), p, SearchMode::Relaxed);
      const auto rep = run_single_exhaustive(p, t, true);
      CAPTURE(m);
      CAPTURE(ell);
      CHECK(rep.success == rep.total);
    }
  }
}

TEST_CASE("decoder input validation") {
  CodeParams p(6, 1);
  Decoder dec(p, table61());
  CHECK_THROWS_AS(dec.decode(std::string_view("AGTCAGAG")), std::invalid_argument);
  CHECK_THROWS_AS(dec.decode(std::string_view("AGTCAGAGX")), std::invalid_argument);
  CHECK_THROWS_AS(Decoder(CodeParams(7, 1), table61()), std::invalid_argument);
}
