#include "ecdloco/index_errors.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <omp.h>

namespace ecdloco {

std::string_view to_string(ErrorSetMode mode) noexcept {
  switch (mode) {
    case ErrorSetMode::BruteForce: return "bruteforce";
    case ErrorSetMode::SupersetL1: return "superset-l1";
    case ErrorSetMode::SupersetL2: return "superset-l2";
    case ErrorSetMode::Window: return "window";
  }
  return "?";
}

IndexErrorSet::IndexErrorSet(int m, int ell, ErrorSetMode mode) : m_(m), ell_(ell), mode_(mode) {
  entries_[BigInt(0)];
}

void IndexErrorSet::add(const BigInt& error, int location) {
  if (location < 0 || location >= m_) throw std::out_of_range("error location outside [0, m)");
  entries_[error].insert(location);
}

void IndexErrorSet::add_value(const BigInt& error) { entries_[error]; }

void IndexErrorSet::merge(const IndexErrorSet& other) {
  if (other.m_ != m_ || other.ell_ != ell_) throw std::invalid_argument("merging error sets of different codes");
  for (const auto& [e, locs] : other.entries_) entries_[e].insert(locs.begin(), locs.end());
}

const IndexErrorSet::Locations& IndexErrorSet::locations(const BigInt& error) const {
  auto it = entries_.find(error);
  if (it == entries_.end()) throw std::out_of_range("index error not in set");
  return it->second;
}

std::map<BigInt, IndexErrorSet::Locations> IndexErrorSet::positives() const {
  return {entries_.upper_bound(BigInt(0)), entries_.end()};
}

std::size_t IndexErrorSet::positive_count() const {
  return static_cast<std::size_t>(std::distance(entries_.upper_bound(BigInt(0)), entries_.end()));
}

void IndexErrorSet::dump(std::ostream& out) const {
  for (const auto& [e, locs] : entries_) {
    out << "e=" << e << " locs=";
    bool first = true;
    for (int i : locs) {
      out << (first ? "" : ",") << i;
      first = false;
    }
    out << '\n';
  }
}

namespace {

// Contribution of symbol s at position p given the symbols to its left
// (left[0] = position p+1, ...), `nleft` of which lie inside the word.
// Beyond the word the convention is C, which needs no special handling since
// C never sits below another symbol.
template <class T, class Tail>
T local_contribution(int s, const int* left, int nleft, int p, int ell, const Tail& tail) {
  if (s == 0) return T(0);
  T g = T(s) * tail(p, 1);
  if (nleft > 0 && left[0] < s) {
    int k = 1;
    while (k < ell && k < nleft && left[k] == left[0]) ++k;
    k += 1;  // depth of the left neighbour's symbol
    g -= tail(p, 1);
    if (k <= ell) g += tail(p, k);
  }
  return g;
}

bool window_valid(const int* sym, int n, int ell) {
  int run = 1;
  for (int q = 1; q < n; ++q) {
    run = sym[q] == sym[q - 1] ? run + 1 : 1;
    if (run > ell) return false;
  }
  return true;
}

// Enumerates all windows around location i and calls f(diff, upward) with the
// change of the affected contributions. sym[] holds positions hi..lo (index 0
// = position hi).
template <class T, class Tail, class F>
void for_each_window(int m, int ell, int i, const Tail& tail, F&& f) {
  const int hi = std::min(i + ell, m - 1);
  const int lo = std::max(i - ell, 0);
  const int n = hi - lo + 1;
  std::vector<int> c(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n));
  const int at = hi - i;  // index of location i within the window
  std::uint64_t total = 1;
  for (int q = 0; q < n; ++q) total *= 4;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t x = code;
    for (int q = n - 1; q >= 0; --q) {
      c[static_cast<std::size_t>(q)] = static_cast<int>(x & 3);
      x >>= 2;
    }
    if (!window_valid(c.data(), n, ell)) continue;
    for (int s = 0; s < 4; ++s) {
      if (s == c[static_cast<std::size_t>(at)]) continue;
      w = c;
      w[static_cast<std::size_t>(at)] = s;
      T diff(0);
      for (int p = i; p >= lo; --p) {
        const int idx = hi - p;
        const int nleft = idx;  // symbols at positions p+1..hi
        // left[] must read positions p+1, p+2, ... i.e. decreasing index.
        int lw[4], lc[4];
        const int take = std::min(nleft, ell);
        for (int k = 0; k < take; ++k) {
          lw[k] = w[static_cast<std::size_t>(idx - 1 - k)];
          lc[k] = c[static_cast<std::size_t>(idx - 1 - k)];
        }
        diff += local_contribution<T>(w[static_cast<std::size_t>(idx)], lw, take, p, ell, tail);
        diff -= local_contribution<T>(c[static_cast<std::size_t>(idx)], lc, take, p, ell, tail);
      }
      f(diff, s > c[static_cast<std::size_t>(at)]);
    }
  }
}

}  // namespace

IndexErrorSet bruteforce_diffs(const CodeParams& params, int max_m) {
  const int m = params.m();
  const int ell = params.ell();
  if (m > max_m) throw std::invalid_argument("bruteforce_diffs: m above enumeration cap");
  std::vector<std::int64_t> tails(static_cast<std::size_t>(m * ell));
  for (int p = 0; p < m; ++p) {
    for (int k = 1; k <= ell; ++k) {
      tails[static_cast<std::size_t>(p * ell + k - 1)] = static_cast<std::int64_t>(params.tail(p, k));
    }
  }
  auto tail = [&](int p, int k) { return tails[static_cast<std::size_t>(p * ell + k - 1)]; };

  // One task per codeword prefix of the leftmost few symbols.
  const int prefix_len = std::min(m, 4);
  int n_prefix = 1;
  for (int q = 0; q < prefix_len; ++q) n_prefix *= 4;

  std::vector<std::map<std::int64_t, std::set<int>>> partial(static_cast<std::size_t>(n_prefix));

#pragma omp parallel for schedule(dynamic)
  for (int pre = 0; pre < n_prefix; ++pre) {
    // sym[j] is the symbol at position m-1-j.
    std::vector<int> sym(static_cast<std::size_t>(m));
    int x = pre;
    for (int j = prefix_len - 1; j >= 0; --j) {
      sym[static_cast<std::size_t>(j)] = x & 3;
      x >>= 2;
    }
    if (!window_valid(sym.data(), prefix_len, ell)) continue;
    auto& out = partial[static_cast<std::size_t>(pre)];
    auto contrib = [&](const std::vector<int>& v, int p) {
      const int j = m - 1 - p;
      int left[4];
      const int take = std::min(j, ell);
      for (int k = 0; k < take; ++k) left[k] = v[static_cast<std::size_t>(j - 1 - k)];
      return local_contribution<std::int64_t>(v[static_cast<std::size_t>(j)], left, take, p, ell, tail);
    };
    auto visit = [&](const std::vector<int>& c) {
      std::vector<int> w = c;
      for (int i = 0; i < m; ++i) {
        const int j = m - 1 - i;
        const int orig = c[static_cast<std::size_t>(j)];
        const int lo = std::max(0, i - ell);
        std::int64_t before = 0;
        for (int p = lo; p <= i; ++p) before += contrib(c, p);
        for (int s = 0; s < 4; ++s) {
          if (s == orig) continue;
          w[static_cast<std::size_t>(j)] = s;
          std::int64_t after = 0;
          for (int p = lo; p <= i; ++p) after += contrib(w, p);
          out[after - before].insert(i);
        }
        w[static_cast<std::size_t>(j)] = orig;
      }
    };
    // Depth-first completion of the prefix into codewords.
    std::vector<int> choice(static_cast<std::size_t>(m), -1);
    int j = prefix_len;
    if (j == m) {
      visit(sym);
      continue;
    }
    while (j >= prefix_len) {
      int& s = choice[static_cast<std::size_t>(j)];
      ++s;
      if (s > 3) {
        s = -1;
        --j;
        continue;
      }
      sym[static_cast<std::size_t>(j)] = s;
      int run = 1;
      while (run <= ell && j - run >= 0 && sym[static_cast<std::size_t>(j - run)] == s) ++run;
      if (run > ell) continue;
      if (j == m - 1) {
        visit(sym);
      } else {
        ++j;
      }
    }
  }

  IndexErrorSet set(m, ell, ErrorSetMode::BruteForce);
  for (const auto& part : partial) {
    for (const auto& [e, locs] : part) {
      for (int i : locs) set.add(BigInt(e), i);
    }
  }
  return set;
}

IndexErrorSet superset_l1(const CodeParams& params) {
  if (params.ell() != 1) throw std::invalid_argument("superset_l1 needs ell = 1");
  const int m = params.m();
  IndexErrorSet set(m, 1, ErrorSetMode::SupersetL1);
  for (int v = 1; v <= 3; ++v) set.add(v, 0);
  static constexpr std::pair<int, int> kTheta[] = {{1, 0}, {2, 0}, {1, 1}, {2, 1}, {3, 1}};
  for (int i = 1; i < m; ++i) {
    const BigInt q1 = params.scaled(i + 1) / 3;  // N(i+1)/4
    const BigInt q0 = params.scaled(i) / 3;      // N(i)/4
    for (auto [t1, t2] : kTheta) set.add(t1 * q1 + t2 * q0, i);
  }
  return set;
}

namespace {

struct Coef {
  int a;
  int b;
};

bool l2_matching_allowed(Coef f1, Coef f2, int psi) {
  auto is = [](Coef x, int a, int b) { return x.a == a && x.b == b; };
  if ((is(f1, 1, 0) || is(f1, 2, 0)) && (is(f2, 1, 1) || is(f2, 1, 0))) return false;
  if (is(f1, 3, 0)) {
    if (!is(f2, 0, 1) && !is(f2, 0, 0)) return false;
    if (psi == -1) return false;
    if (is(f2, 0, 0) && psi == 0) return false;
  }
  if (is(f1, 0, 1)) {
    if (!is(f2, 1, 1) && !is(f2, 1, 0)) return false;
    if (psi == 1) return false;
  }
  if (is(f1, 1, 1) && is(f2, -1, 0)) return false;
  if (is(f1, 2, 1)) {
    // (2,1) at position i arises both with c_{i+1} = A and with c_{i+1} in
    // {T,G} (w_i = C, c_i = A in each case). The second family realises
    // (0,0)+1 and (0,1)+0 at the lower positions.
    const bool ok = (is(f2, 1, 1) && (psi == 0 || psi == 1)) || (is(f2, 0, 0) && psi == 1) ||
                    (is(f2, 0, 1) && psi == 0);
    if (!ok) return false;
  }
  // -(3/4)N(i-1) at i-1 needs c_{i-1} > w_i, while a +(3/4)N(i-2) drop at
  // i-2 needs c_{i-1} = w_i.
  if (is(f2, -1, 0) && psi == -1) return false;
  return true;
}

}  // namespace

IndexErrorSet superset_l2(const CodeParams& params) {
  if (params.ell() != 2) throw std::invalid_argument("superset_l2 needs ell = 2");
  const int m = params.m();
  IndexErrorSet set(m, 2, ErrorSetMode::SupersetL2);
  // Locations 0 and 1 only reach the small values below.
  for (int v : {1, 2, 3}) set.add(v, 0);
  for (int v : {3, 4, 7, 8, 11, 12}) set.add(v, 1);

  static constexpr Coef kF1[] = {{1, 0}, {2, 0}, {3, 0}, {0, 1}, {1, 1}, {2, 1}};
  static constexpr Coef kF2[] = {{0, 0}, {0, 1}, {1, 1}, {1, 0}, {-1, 0}};
  for (int i = 2; i < m; ++i) {
    const BigInt q1 = params.scaled(i + 1) / 3;  // N(i+1)/4
    const BigInt& s0 = params.scaled(i);         // 3N(i)/4
    const BigInt& s1 = params.scaled(i - 1);
    const BigInt& s2 = params.scaled(i - 2);
    for (Coef f1 : kF1) {
      for (Coef f2 : kF2) {
        for (int psi = -1; psi <= 1; ++psi) {
          if (!l2_matching_allowed(f1, f2, psi)) continue;
          BigInt v = f1.a * q1 + f1.b * s0 + f2.a * s1 + f2.b * s2 + psi * s2;
          if (v > 0) set.add(v, i);
        }
      }
    }
  }
  return set;
}

IndexErrorSet window_diffs(const CodeParams& params) {
  const int m = params.m();
  const int ell = params.ell();
  if (ell > 3) throw std::invalid_argument("window_diffs supports ell <= 3");
  auto tail = [&](int p, int k) -> const BigInt& { return params.tail(p, k); };
  std::vector<std::set<BigInt>> per_loc(static_cast<std::size_t>(m));
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < m; ++i) {
    auto& out = per_loc[static_cast<std::size_t>(i)];
    for_each_window<BigInt>(m, ell, i, tail, [&](const BigInt& d, bool) { out.insert(d); });
  }
  IndexErrorSet set(m, ell, ErrorSetMode::Window);
  for (int i = 0; i < m; ++i) {
    for (const auto& e : per_loc[static_cast<std::size_t>(i)]) set.add(e, i);
  }
  return set;
}

std::array<std::size_t, 4> contribution_change_counts(const CodeParams& params) {
  const int m = params.m();
  const int ell = params.ell();
  if (ell > 3) throw std::invalid_argument("contribution_change_counts supports ell <= 3");
  if (m < 4 * ell + 2) throw std::invalid_argument("contribution_change_counts needs m >= 4*ell + 2");
  const int i = m / 2;
  const int n = 2 * ell + 1;
  std::array<std::set<BigInt>, 4> seen;
  std::vector<int> c(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n));
  auto tail = [&](int p, int k) -> const BigInt& { return params.tail(p, k); };
  std::uint64_t total = 1;
  for (int q = 0; q < n; ++q) total *= 4;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t x = code;
    for (int q = n - 1; q >= 0; --q) {
      c[static_cast<std::size_t>(q)] = static_cast<int>(x & 3);
      x >>= 2;
    }
    if (!window_valid(c.data(), n, ell)) continue;
    for (int s = c[static_cast<std::size_t>(ell)] + 1; s < 4; ++s) {
      w = c;
      w[static_cast<std::size_t>(ell)] = s;
      for (int d = 0; d <= ell; ++d) {
        const int idx = ell + d;  // position i - d
        int lw[4], lc[4];
        for (int k = 0; k < ell; ++k) {
          lw[k] = w[static_cast<std::size_t>(idx - 1 - k)];
          lc[k] = c[static_cast<std::size_t>(idx - 1 - k)];
        }
        const int p = i - d;
        seen[static_cast<std::size_t>(d)].insert(
            local_contribution<BigInt>(w[static_cast<std::size_t>(idx)], lw, ell, p, ell, tail) -
            local_contribution<BigInt>(c[static_cast<std::size_t>(idx)], lc, ell, p, ell, tail));
      }
    }
  }
  std::array<std::size_t, 4> counts{};
  for (int d = 0; d <= ell; ++d) counts[static_cast<std::size_t>(d)] = seen[static_cast<std::size_t>(d)].size();
  return counts;
}

}  // namespace ecdloco
