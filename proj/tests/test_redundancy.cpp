#include "doctest.h"

#include <random>
#include <sstream>

#include "ecdloco/redundancy.hpp"
#include "ecdloco/simlab.hpp"

using namespace ecdloco;

TEST_CASE("residue map fixtures") {
  CHECK(phi(BigInt(370), 127) == 116);
  CHECK(phi(BigInt(729), 127) == 94);
  CHECK(phi(BigInt(0), 127) == 0);
  CHECK(phi(BigInt(-100), 127) == 27);
  CHECK(phi(BigInt(-127), 127) == 0);
  CHECK(phi(BigInt(-5), BigInt(7)) == 2);
  CHECK_THROWS_AS(phi(BigInt(3), 1), std::invalid_argument);
  CHECK_THROWS_AS(phi(BigInt(3), BigInt(0)), std::invalid_argument);
}

TEST_CASE("residues of differences against a multiple of R") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100000; ++t) {
    const std::uint64_t R = 2 + rng() % 200000;
    const BigInt n1 = BigInt(R) * BigInt(rng() % 1000000);
    const BigInt n2 = BigInt(rng() % 200000000000ull);
    if (n2 >= n1) {
      REQUIRE(phi(n2, R) == phi(n2 - n1, R));
    } else {
      const std::uint64_t d = phi(n1 - n2, R);
      REQUIRE(phi(n2, R) == (d == 0 ? 0 : R - d));
    }
  }
}

TEST_CASE("strict search at m = 6") {
  CodeParams p(6, 1);
  const auto s = superset_l1(p);
  CHECK(find_R_strict(s, p) == 127);
  CHECK(find_R(s, p, SearchMode::Relaxed) <= 127);
  CHECK(!is_feasible(s, p, 126, SearchMode::Strict));
  CHECK(is_feasible(s, p, 127, SearchMode::Strict));
}

TEST_CASE("smaller sets need no larger modulus") {
  CodeParams p(8, 1);
  CHECK(find_R_strict(bruteforce_diffs(p), p) <= find_R_strict(superset_l1(p), p));
  CodeParams q(8, 2);
  CHECK(find_R(window_diffs(q), q, SearchMode::Relaxed) <= find_R(superset_l2(q), q, SearchMode::Relaxed));
}

TEST_CASE("zero-only error set") {
  CodeParams p(6, 1);
  IndexErrorSet s(6, 1, ErrorSetMode::Window);
  std::uint64_t R = 2;
  while (phi(p.last_index(), R) == 0) ++R;
  CHECK(find_R_strict(s, p) == R);
}

TEST_CASE("parallel and serial searches agree and are minimal") {
  for (int ell = 1; ell <= 2; ++ell) {
    for (int m : {7, 11, 15}) {
      CodeParams p(m, ell);
      const auto errs = default_error_set(p);
      for (auto mode : {SearchMode::Strict, SearchMode::Relaxed}) {
        const auto R = find_R(errs, p, mode);
        CHECK(R == serial::find_R(errs, p, mode));
        CHECK(is_feasible(errs, p, R, mode));
        CHECK(!is_feasible(errs, p, R - 1, mode));
      }
      CHECK(find_R(errs, p, SearchMode::Relaxed) <= find_R(errs, p, SearchMode::Strict));
    }
  }
}

TEST_CASE("table invariants") {
  for (int ell = 1; ell <= 3; ++ell) {
    CodeParams p(13, ell);
    const auto errs = default_error_set(p);
    const auto t = make_table(errs, p, SearchMode::Relaxed);
    CHECK(t.phi_n1 == phi(p.last_index(), t.R));
    CHECK(t.phi_n1 != 0);
    CHECK(t.find(0) == nullptr);
    CHECK(t.find(t.phi_n1) == nullptr);
    CHECK(t.msg_bits == message_bits(p, t.R));
    for (const auto& [r, e] : t.entries) {
      if (e.kind == TableEntry::Kind::Value) {
        REQUIRE(e.error > 0);
        REQUIRE(phi(e.error, t.R) == r);
      } else {
        REQUIRE(e.location >= 0);
        REQUIRE(e.location < 13);
      }
    }
    // every positive error is reachable from its own residue or the negated one
    for (const auto& [e, locs] : errs.positives()) {
      REQUIRE(t.find(phi(e, t.R)) != nullptr);
    }
  }
  CodeParams p(6, 1);
  CHECK_THROWS_AS(build_table(superset_l1(p), p, 100), std::invalid_argument);
}

TEST_CASE("message bits") {
  CodeParams p(6, 1);
  CHECK(message_bits(p, 127) == 3);
  CHECK(message_bits(CodeParams(37, 2), 49981) == 55);
}

TEST_CASE("serialization round trip") {
  CodeParams p(17, 2);
  const auto t = make_table(default_error_set(p), p, SearchMode::Relaxed);
  const std::string text = serialize(t);
  CHECK(text.rfind("#ecdloco-table v1\nm=17 ell=2 R=" + std::to_string(t.R) + " ", 0) == 0);
  CHECK(text.back() == '\n');
  CHECK(deserialize_string(text) == t);
  std::istringstream in(text);
  CHECK(deserialize(in) == t);
}

TEST_CASE("malformed tables report the line") {
  CodeParams p(6, 1);
  const std::string good = serialize(make_table(superset_l1(p), p, SearchMode::Strict));
  auto expect_line = [](const std::string& text, const std::string& line) {
    try {
      deserialize_string(text);
      FAIL("accepted malformed table");
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).find("line " + line) != std::string::npos);
    }
  };
  expect_line(good.substr(0, good.size() - 1), "1");
  expect_line("#ecdloco-table v2\n", "1");
  expect_line("#ecdloco-table v1\nm=6 ell=1 R=127\n", "2");
  expect_line("#ecdloco-table v1\nm=6 ell=1 R=127 phiN1=82 msgbits=3\nentry 5 loc 9\n", "3");
  expect_line("#ecdloco-table v1\nm=6 ell=1 R=127 phiN1=82 msgbits=3\nentry 5 loc 1\nentry 4 loc 1\n", "4");
  expect_line("#ecdloco-table v1\nm=6 ell=1 R=127 phiN1=82 msgbits=3\nentry 5 err 6\n", "3");
  expect_line("#ecdloco-table v1\nm=6 ell=1 R=127 phiN1=82 msgbits=3\nentry 0 loc 1\n", "3");
  expect_line("#ecdloco-table v1\nm=6 ell=1 R=127 phiN1=82 msgbits=3\nentry x loc 1\n", "3");
}

TEST_CASE("storage accounting") {
  CHECK(table_bits(700, 37, 49981) == 15400);
  CHECK(table_bits(0, 37, 49981) == 0);
  const auto s = storage_bits(700, CodeParams(37, 2), 49981);
  CHECK(s.table == 15400);
  CHECK(s.total() > s.table);
  ResidueTable empty;
  empty.m = 6;
  empty.ell = 1;
  empty.R = 127;
  CHECK(storage_bits(empty).table == 0);
}

TEST_CASE("quadratic fit") {
  std::vector<std::pair<double, double>> pts;
  for (int m = 5; m <= 61; m += 2) pts.emplace_back(m, 3.0 * m * m - 7.0 * m + 100.0);
  const auto f = fit_quadratic(pts);
  CHECK(f.a2 == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(f.a1 == doctest::Approx(-7.0).epsilon(1e-9));
  CHECK(f.a0 == doctest::Approx(100.0).epsilon(1e-9));
  CHECK(f.nrmse < 1e-9);
  CHECK(f(10) == doctest::Approx(330.0));
  CHECK_THROWS_AS(fit_quadratic({{1.0, 2.0}, {2.0, 3.0}}), std::invalid_argument);
}
