#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ecdloco/bigint.hpp"
#include "ecdloco/index_errors.hpp"
#include "ecdloco/params.hpp"

namespace ecdloco {

/// k mod R in [0, R). Throws std::invalid_argument for R < 2.
std::uint64_t phi(const BigInt& k, std::uint64_t R);
BigInt phi(const BigInt& k, const BigInt& R);

enum class SearchMode { Strict, Relaxed };

/// Positive index errors prepared for fast residue checks.
class ErrorResidues {
public:
  ErrorResidues(const IndexErrorSet& errors, const CodeParams& params);

  std::size_t size() const noexcept { return values_.size(); }
  const BigInt& value(std::size_t k) const noexcept { return values_[k]; }
  /// Unique substitution location or -1 if the error has several.
  int location(std::size_t k) const noexcept { return locs_[k]; }
  std::uint64_t residue(std::size_t k, std::uint64_t R) const noexcept { return limbs_[k].mod(R); }
  std::uint64_t last_index_residue(std::uint64_t R) const noexcept { return n1_.mod(R); }

private:
  std::vector<BigInt> values_;
  std::vector<LimbValue> limbs_;
  std::vector<int> locs_;
  LimbValue n1_;
};

/// Reusable scratch space for feasibility checks of one candidate modulus.
class FeasibilityScratch {
public:
  bool strict(const ErrorResidues& errs, std::uint64_t R);
  bool relaxed(const ErrorResidues& errs, std::uint64_t R);

private:
  void reset(std::uint64_t R);
  std::vector<std::uint32_t> stamp_;
  std::vector<int> slot_;
  std::uint32_t epoch_ = 0;
};

/// Smallest R >= 2 for which the residues of {+e} u {-e} u {0, N-1} are
/// pairwise distinct (strict) or decoder-resolvable (relaxed).
/// Candidates are checked in parallel blocks; the result is the same as the
/// serial scan.
std::uint64_t find_R(const IndexErrorSet& errors, const CodeParams& params, SearchMode mode);
std::uint64_t find_R_strict(const IndexErrorSet& errors, const CodeParams& params);

namespace serial {
std::uint64_t find_R(const IndexErrorSet& errors, const CodeParams& params, SearchMode mode);
}

bool is_feasible(const IndexErrorSet& errors, const CodeParams& params, std::uint64_t R, SearchMode mode);

struct TableEntry {
  enum class Kind { Location, Value };
  Kind kind = Kind::Value;
  int location = -1;
  BigInt error;  // positive, set for Value entries

  static TableEntry at(int i) { return {Kind::Location, i, 0}; }
  static TableEntry value_of(BigInt e) { return {Kind::Value, -1, std::move(e)}; }
  friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

/// Residue table of an EC code.
struct ResidueTable {
  int m = 0;
  int ell = 0;
  std::uint64_t R = 0;
  std::uint64_t phi_n1 = 0;
  int msg_bits = 0;
  std::map<std::uint64_t, TableEntry> entries;

  const TableEntry* find(std::uint64_t r) const {
    auto it = entries.find(r);
    return it == entries.end() ? nullptr : &it->second;
  }
  friend bool operator==(const ResidueTable&, const ResidueTable&) = default;
};

/// floor(log2((N-1)/R + 1)).
int message_bits(const CodeParams& params, std::uint64_t R);

/// Builds the table for a feasible R: one key per residue of a positive error.
/// A residue whose signed candidates all share one location stores that
/// location, otherwise the error value. Throws std::invalid_argument if R is
/// not relaxed-feasible.
ResidueTable build_table(const IndexErrorSet& errors, const CodeParams& params, std::uint64_t R);

/// Searches R and builds the table.
ResidueTable make_table(const IndexErrorSet& errors, const CodeParams& params, SearchMode mode);

/// Error set used for table generation: superset for ell in {1, 2}, window
/// set for ell = 3, or the exact window set when `exact` is set.
IndexErrorSet default_error_set(const CodeParams& params, bool exact = false);

void serialize(const ResidueTable& table, std::ostream& out);
std::string serialize(const ResidueTable& table);
/// Throws std::invalid_argument naming the offending line.
ResidueTable deserialize(std::istream& in);
ResidueTable deserialize_string(const std::string& text);

struct StorageBits {
  std::uint64_t table = 0;
  std::uint64_t cardinalities = 0;
  std::uint64_t residues = 0;
  std::uint64_t total() const noexcept { return table + cardinalities + residues; }
};

inline constexpr double kBitsPerKilobyte = 8000.0;

/// entries * ((floor(log2 m)+1) + (floor(log2 R)+1)).
std::uint64_t table_bits(std::size_t entries, int m, std::uint64_t R);
StorageBits storage_bits(const ResidueTable& table);
/// Storage with an explicit entry count.
StorageBits storage_bits(std::size_t entries, const CodeParams& params, std::uint64_t R);

struct ModelFit {
  double a2 = 0;
  double a1 = 0;
  double a0 = 0;
  double nrmse = 0;
  double operator()(double m) const noexcept { return (a2 * m + a1) * m + a0; }
};

/// Least-squares quadratic through (m, R) points; nrmse = RMSE / mean(R).
/// Throws std::invalid_argument for fewer than 3 points.
ModelFit fit_quadratic(const std::vector<std::pair<double, double>>& points);

}  // namespace ecdloco
