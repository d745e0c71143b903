#pragma once

#include <array>
#include <map>
#include <ostream>
#include <set>
#include <string_view>

#include "ecdloco/bigint.hpp"
#include "ecdloco/params.hpp"

namespace ecdloco {

enum class ErrorSetMode { BruteForce, SupersetL1, SupersetL2, Window };

std::string_view to_string(ErrorSetMode mode) noexcept;

/// Index differences g(w) - g(c) caused by a single substitution, each tagged
/// with the substitution locations that can produce it.
///
/// Brute-force and window sets hold both signs. The closed-form supersets hold
/// only the non-negative differences of upward substitutions (w_i > c_i); the
/// decoder derives the negatives by probing R - r.
class IndexErrorSet {
public:
  using Locations = std::set<int>;

  IndexErrorSet(int m, int ell, ErrorSetMode mode);

  int m() const noexcept { return m_; }
  int ell() const noexcept { return ell_; }
  ErrorSetMode mode() const noexcept { return mode_; }

  void add(const BigInt& error, int location);
  void add_value(const BigInt& error);  // value with no location (the zero error)
  void merge(const IndexErrorSet& other);

  const std::map<BigInt, Locations>& entries() const noexcept { return entries_; }
  bool contains(const BigInt& error) const { return entries_.count(error) != 0; }
  const Locations& locations(const BigInt& error) const;

  /// Entries with error > 0.
  std::map<BigInt, Locations> positives() const;
  std::size_t positive_count() const;

  /// One line per entry: `e=<signed decimal> locs=<comma list>`.
  void dump(std::ostream& out) const;

private:
  int m_;
  int ell_;
  ErrorSetMode mode_;
  std::map<BigInt, Locations> entries_;
};

/// Largest m accepted by bruteforce_diffs.
inline constexpr int kBruteForceMaxM = 12;

/// Exact set by enumerating every codeword and every single substitution.
IndexErrorSet bruteforce_diffs(const CodeParams& params, int max_m = kBruteForceMaxM);

/// Closed-form superset for ell = 1.
IndexErrorSet superset_l1(const CodeParams& params);

/// Matched-product superset for ell = 2 built from the per-position change
/// families with the impossible matchings removed.
IndexErrorSet superset_l2(const CodeParams& params);

/// Exact set by enumerating local windows around each substitution location.
/// Supports ell in {1, 2, 3}.
IndexErrorSet window_diffs(const CodeParams& params);

/// For an interior location, the number of distinct values taken by the
/// contribution change at positions i, i-1, ..., i-ell over all upward
/// substitutions. Requires m >= 4*ell + 2.
std::array<std::size_t, 4> contribution_change_counts(const CodeParams& params);

}  // namespace ecdloco
