#include "doctest.h"

#include <numeric>
#include <sstream>

#include "ecdloco/simlab.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace ecdloco;

TEST_CASE("substitutions land on distinct positions") {
  const Word w = Word::parse("ATGCATGCATGCA");
  for (int k = 0; k <= 3; ++k) {
    for (std::uint64_t t = 0; t < 200; ++t) {
      auto rng = trial_rng(9, t);
      REQUIRE(hamming_distance(apply_substitutions(w, k, rng), w) == static_cast<std::size_t>(k));
    }
  }
  auto rng = trial_rng(1, 0);
  CHECK(apply_substitutions(w, 13, rng).size() == w.size());
  CHECK_THROWS_AS(apply_substitutions(w, 14, rng), std::invalid_argument);
}

TEST_CASE("trial streams depend only on seed and trial") {
  auto a = trial_rng(5, 7);
  auto b = trial_rng(5, 7);
  auto c = trial_rng(5, 8);
  const auto x = a();
  CHECK(x == b());
  CHECK(x != c());
  CHECK(random_message(40, a).size() == 40);
}

TEST_CASE("exhaustive single sweep including clean segments") {
  CodeParams p(6, 1);
  const auto t = make_table(superset_l1(p), p, SearchMode::Strict);
  const auto rep = run_single_exhaustive(p, t, true);
  // 8 codewords, 2 orientations, 9 positions, 3 substitutions, plus clean
  CHECK(rep.total == 8u * 2u * (9u * 3u + 1u));
  CHECK(rep.success_rate() == 1.0);
  CHECK(rep.statuses.at(DecodeStatus::ErrorFree) + rep.statuses.at(DecodeStatus::ErrorFreeComplemented) >= 16u);
}

TEST_CASE("sampled single sweep") {
  CodeParams p(21, 2);
  const auto t = make_table(default_error_set(p), p, SearchMode::Relaxed);
  const auto rep = run_single_sampled(p, t, 3000, 3);
  CHECK(rep.total == 3000);
  CHECK(rep.success == rep.total);
}

TEST_CASE("double experiment report is consistent and reproducible") {
  CodeParams p(15, 2);
  const auto t = make_table(default_error_set(p), p, SearchMode::Relaxed);
  const auto a = run_double_experiment(p, t, 400, 12);
  std::uint64_t hist = 0;
  for (const auto& [size, count] : a.list_sizes) hist += count;
  CHECK(hist == a.trials);
  CHECK(a.samples >= a.trials);
  CHECK(a.list_misses == 0);
  CHECK(a.success_pre <= a.success_post);
  CHECK(a.rate_pre() >= a.bf_rate_pre());
  CHECK(a.rate_post() <= 1.0);

#ifdef _OPENMP
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
#endif
  const auto b = run_double_experiment(p, t, 400, 12);
#ifdef _OPENMP
  omp_set_num_threads(saved);
#endif
  CHECK(a.success_pre == b.success_pre);
  CHECK(a.success_post == b.success_post);
  CHECK(a.samples == b.samples);
  CHECK(a.list_sizes == b.list_sizes);
  CHECK(a.p2_events == b.p2_events);

  std::ostringstream csv;
  write_csv(a, csv);
  const std::string s = csv.str();
  CHECK(s.rfind("m,ell,R,trials,seed,success_pre,success_post,p1p2,runtime_s\n15,2,", 0) == 0);
  CHECK(s.find("list_size,count\n") != std::string::npos);
  CHECK_THROWS_AS(run_double_experiment(p, t, 0, 1), std::invalid_argument);
}

TEST_CASE("rate rows") {
  const auto r = rate_row(CodeParams(37, 2), 49981);
  CHECK(r.msg_bits == 55);
  CHECK(r.rate == doctest::Approx(55.0 / 40.0));
  const auto rows = rates_table(1, {6});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].msg_bits >= 3);
}
