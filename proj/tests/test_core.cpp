#include "doctest.h"
#include "oracle.hpp"

#include <random>
#include <stdexcept>

#include "ecdloco/params.hpp"
#include "ecdloco/word.hpp"

using namespace ecdloco;

TEST_CASE("cardinalities for ell = 1 follow 4 * 3^(i-1)") {
  CodeParams p(6, 1);
  const int expect[] = {4, 12, 36, 108, 324, 972};
  for (int i = 1; i <= 6; ++i) CHECK(p.cardinality(i) == expect[i - 1]);
  CHECK(p.scaled(0) == 1);
  CHECK(p.codebook_size() == 972);
  CHECK(p.last_index() == 971);
  CodeParams q(30, 1);
  BigInt pow3 = 1;
  for (int i = 1; i <= 30; ++i) {
    CHECK(q.cardinality(i) == 4 * pow3);
    pow3 *= 3;
  }
}

TEST_CASE("N(3) for ell = 2 is the count of length-3 words without a triple") {
  CHECK(CodeParams(3, 2).codebook_size() == 60);
  CHECK(oracle::codebook(3, 2).size() == 60);
}

TEST_CASE("scaled cardinalities are integers divisible by 3") {
  for (int ell = 1; ell <= 3; ++ell) {
    CodeParams p(61, ell);
    for (int i = 1; i <= 61; ++i) CHECK(p.scaled(i) % 3 == 0);
  }
}

TEST_CASE("N(m) equals the enumerated codebook size") {
  for (int ell = 1; ell <= 3; ++ell) {
    for (int m = ell; m <= 10; ++m) {
      CAPTURE(m);
      CAPTURE(ell);
      CHECK(CodeParams(m, ell).codebook_size() == oracle::codebook(m, ell).size());
    }
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(CodeParams(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(CodeParams(1, 2), std::invalid_argument);
  CHECK_NOTHROW(CodeParams(2, 2));
}

TEST_CASE("word text and positions") {
  const Word w = Word::parse("AGTCAG");
  CHECK(w.size() == 6);
  CHECK(w[5] == Symbol::A);
  CHECK(w[0] == Symbol::G);
  CHECK(w.str() == "AGTCAG");
  CHECK_THROWS_AS(Word::parse("AGXT"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("agtc"), std::invalid_argument);
}

TEST_CASE("is_codeword") {
  CHECK(is_codeword(Word::parse("AGTCAG"), 1));
  CHECK_FALSE(is_codeword(Word::parse("AGCCAG"), 1));
  CHECK_FALSE(is_codeword(Word::parse("AAAA"), 3));
  CHECK(is_codeword(Word::parse("AAA"), 3));
}

TEST_CASE("complement") {
  CHECK(complement_word(Word::parse("TATAAC")).str() == "GCGCCA");
  CHECK(complement_word(Word::parse("AGTCAG")).str() == "CTGACT");
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    std::string s(13, 'A');
    for (auto& c : s) c = oracle::kAlpha[rng() & 3];
    const Word w = Word::parse(s);
    CHECK(complement_word(complement_word(w)) == w);
    CHECK(complement_word(w).str() == oracle::complement(s));
    CHECK(word_disparity(w) + word_disparity(complement_word(w)) == 0);
  }
}

TEST_CASE("symbol ordering and disparity classes") {
  CHECK(value(Symbol::A) < value(Symbol::T));
  CHECK(value(Symbol::T) < value(Symbol::G));
  CHECK(value(Symbol::G) < value(Symbol::C));
  for (int v = 0; v < 4; ++v) {
    const Symbol s = symbol_from(v);
    CHECK(complement(complement(s)) == s);
    CHECK(disparity(s) == -disparity(complement(s)));
  }
  CHECK(disparity(Symbol::A) == -1);
  CHECK(disparity(Symbol::C) == 1);
}

TEST_CASE("scan_longest_run") {
  Run r = scan_longest_run(Word::parse("AGCCAG"));
  CHECK(r.symbol == Symbol::C);
  CHECK(r.start == 3);
  CHECK(r.length == 2);
  r = scan_longest_run(Word::parse("TAAGAC"));
  CHECK(r.symbol == Symbol::A);
  CHECK(r.start == 4);
  CHECK(r.length == 2);
  r = scan_longest_run(Word::parse("ATATAT"));
  CHECK(r.symbol == Symbol::A);
  CHECK(r.start == 5);
  CHECK(r.length == 1);
}

TEST_CASE("lexicographic comparison matches text order") {
  const auto book = oracle::codebook(5, 2);
  for (std::size_t k = 1; k < book.size(); ++k) CHECK(Word::parse(book[k - 1]) < Word::parse(book[k]));
}
