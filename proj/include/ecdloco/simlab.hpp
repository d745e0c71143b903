#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <random>
#include <vector>

#include "ecdloco/decoder.hpp"

namespace ecdloco {

/// Deterministic generator for trial t of an experiment seeded with `seed`.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t t);

/// k distinct uniformly random positions, each replaced by a uniformly random
/// different symbol. Throws std::invalid_argument if k > size.
Word apply_substitutions(const Word& w, int k, std::mt19937_64& rng);

Bits random_message(int bits, std::mt19937_64& rng);

struct SingleReport {
  std::uint64_t total = 0;
  std::uint64_t success = 0;
  std::map<DecodeStatus, std::uint64_t> statuses;
  double runtime_s = 0;
  double success_rate() const noexcept { return total ? static_cast<double>(success) / static_cast<double>(total) : 0.0; }
};

/// Every EC codeword (both orientations) with every single substitution over
/// all m+3 segment positions. With `include_clean`, the unmodified segments
/// are decoded too.
SingleReport run_single_exhaustive(const CodeParams& params, const ResidueTable& table, bool include_clean = false);

/// Random messages, orientations and single substitutions over the segment.
SingleReport run_single_sampled(const CodeParams& params, const ResidueTable& table, std::uint64_t trials,
                                std::uint64_t seed);

struct ExperimentReport {
  int m = 0;
  int ell = 0;
  std::uint64_t R = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;

  std::uint64_t samples = 0;      // error patterns drawn, including rejected ones
  std::uint64_t p1_events = 0;    // rejected: received word is an EC codeword or a complement of one
  std::uint64_t p2_events = 0;    // accepted by the single-substitution stage
  std::uint64_t reached_list = 0;
  std::uint64_t success_pre = 0;  // unique list holding the original
  std::uint64_t success_post = 0; // decoded index correct after the random pick
  std::uint64_t list_misses = 0;  // original absent from the list
  std::map<int, std::uint64_t> list_sizes;

  std::uint64_t bf_success_pre = 0;  // list stage reached and brute-force list is {d}
  double bf_expected_post = 0;       // sum of 1/|L| over those brute-force lists holding d
  double list_expected_post = 0;     // same for the decoder's list
  double runtime_s = 0;

  double rate_pre() const noexcept { return ratio(success_pre); }
  double rate_post() const noexcept { return ratio(success_post); }
  double bf_rate_pre() const noexcept { return ratio(bf_success_pre); }
  double p1_plus_p2() const noexcept;
  double detection_rate() const noexcept { return ratio(reached_list); }

private:
  double ratio(std::uint64_t x) const noexcept {
    return trials ? static_cast<double>(x) / static_cast<double>(trials) : 0.0;
  }
};

/// Double substitutions in the codeword part (distinct positions, patterns
/// giving an EC codeword or a complement of one are redrawn), decoded with
/// the full decoder and compared with brute-force listing.
ExperimentReport run_double_experiment(const CodeParams& params, const ResidueTable& table, std::uint64_t trials,
                                       std::uint64_t seed);

/// `m,ell,R,trials,seed,success_pre,success_post,p1p2,runtime_s` then one
/// `list_size,count` line per histogram bucket.
void write_csv(const ExperimentReport& r, std::ostream& out);

struct RateRow {
  int m = 0;
  std::uint64_t R = 0;
  int msg_bits = 0;
  double rate = 0;  // msg_bits / (m + 3)
};

RateRow rate_row(const CodeParams& params, std::uint64_t R);
/// R from the default error set and the relaxed search for every m.
std::vector<RateRow> rates_table(int ell, const std::vector<int>& m_list, bool exact = false);

}  // namespace ecdloco
