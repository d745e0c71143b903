#include <algorithm>
#include <limits>
#include <stdexcept>

#include <omp.h>

#include "ecdloco/redundancy.hpp"

namespace ecdloco {

std::uint64_t phi(const BigInt& k, std::uint64_t R) {
  if (R < 2) throw std::invalid_argument("phi: modulus must be >= 2");
  BigInt r = k % R;
  if (r < 0) r += R;
  return static_cast<std::uint64_t>(r);
}

BigInt phi(const BigInt& k, const BigInt& R) {
  if (R < 2) throw std::invalid_argument("phi: modulus must be >= 2");
  BigInt r = k % R;
  if (r < 0) r += R;
  return r;
}

ErrorResidues::ErrorResidues(const IndexErrorSet& errors, const CodeParams& params)
    : n1_(params.last_index()) {
  if (errors.m() != params.m() || errors.ell() != params.ell()) {
    throw std::invalid_argument("error set built for a different code");
  }
  for (const auto& [e, locs] : errors.positives()) {
    values_.push_back(e);
    limbs_.emplace_back(e);
    locs_.push_back(locs.size() == 1 ? *locs.begin() : -1);
  }
}

void FeasibilityScratch::reset(std::uint64_t R) {
  if (stamp_.size() < R) {
    stamp_.assign(static_cast<std::size_t>(R), 0);
    slot_.assign(static_cast<std::size_t>(R), 0);
    epoch_ = 0;
  }
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
}

bool FeasibilityScratch::strict(const ErrorResidues& errs, std::uint64_t R) {
  const std::uint64_t n1 = errs.last_index_residue(R);
  if (n1 == 0) return false;
  reset(R);
  auto mark = [&](std::uint64_t r) {
    if (stamp_[r] == epoch_) return false;
    stamp_[r] = epoch_;
    return true;
  };
  mark(0);
  mark(n1);
  for (std::size_t k = 0; k < errs.size(); ++k) {
    const std::uint64_t a = errs.residue(k, R);
    if (!mark(a)) return false;
    if (!mark(a == 0 ? 0 : R - a)) return false;
  }
  return true;
}

bool FeasibilityScratch::relaxed(const ErrorResidues& errs, std::uint64_t R) {
  const std::uint64_t n1 = errs.last_index_residue(R);
  if (n1 == 0) return false;
  reset(R);
  auto join = [&](std::uint64_t r, int loc) {
    if (stamp_[r] != epoch_) {
      stamp_[r] = epoch_;
      slot_[r] = loc;
      return true;
    }
    return loc >= 0 && slot_[r] == loc;
  };
  for (std::size_t k = 0; k < errs.size(); ++k) {
    const std::uint64_t a = errs.residue(k, R);
    if (a == 0) return false;
    const std::uint64_t b = R - a;
    if (a == n1 || b == n1) return false;
    const int loc = errs.location(k);
    if (!join(a, loc) || !join(b, loc)) return false;
  }
  return true;
}

namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 40;

bool check(FeasibilityScratch& s, const ErrorResidues& errs, std::uint64_t R, SearchMode mode) {
  return mode == SearchMode::Strict ? s.strict(errs, R) : s.relaxed(errs, R);
}

}  // namespace

bool is_feasible(const IndexErrorSet& errors, const CodeParams& params, std::uint64_t R, SearchMode mode) {
  if (R < 2) return false;
  ErrorResidues errs(errors, params);
  FeasibilityScratch s;
  return check(s, errs, R, mode);
}

std::uint64_t find_R(const IndexErrorSet& errors, const CodeParams& params, SearchMode mode) {
  const ErrorResidues errs(errors, params);
  const int threads = omp_get_max_threads();
  const std::uint64_t block = 512 * static_cast<std::uint64_t>(threads);
  for (std::uint64_t base = 2; base < kMaxModulus; base += block) {
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
#pragma omp parallel
    {
      FeasibilityScratch scratch;
#pragma omp for schedule(dynamic, 16) reduction(min : best)
      for (std::int64_t off = 0; off < static_cast<std::int64_t>(block); ++off) {
        const std::uint64_t R = base + static_cast<std::uint64_t>(off);
        if (R < best && check(scratch, errs, R, mode)) best = R;
      }
    }
    if (best != std::numeric_limits<std::uint64_t>::max()) return best;
  }
  throw std::out_of_range("find_R: no modulus below search limit");
}

std::uint64_t find_R_strict(const IndexErrorSet& errors, const CodeParams& params) {
  return find_R(errors, params, SearchMode::Strict);
}

namespace serial {

std::uint64_t find_R(const IndexErrorSet& errors, const CodeParams& params, SearchMode mode) {
  const ErrorResidues errs(errors, params);
  FeasibilityScratch scratch;
  for (std::uint64_t R = 2; R < kMaxModulus; ++R) {
    if (check(scratch, errs, R, mode)) return R;
  }
  throw std::out_of_range("find_R: no modulus below search limit");
}

}  // namespace serial

}  // namespace ecdloco
