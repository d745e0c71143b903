#include "ecdloco/rank.hpp"

#include <cassert>
#include <stdexcept>

namespace ecdloco {

namespace {

// Number of consecutive copies of w[p+1] starting at p+1 and moving left,
// capped at `cap`.
int left_run(const Word& w, int p, int cap) {
  const int m = static_cast<int>(w.size());
  if (p + 1 >= m) return 0;
  const Symbol s = w[static_cast<std::size_t>(p + 1)];
  int r = 0;
  for (int q = p + 1; q < m && r < cap && w[static_cast<std::size_t>(q)] == s; ++q) ++r;
  return r;
}

}  // namespace

int depth(const Word& w, int i, Symbol delta, int ell) {
  const int m = static_cast<int>(w.size());
  if (value(w[static_cast<std::size_t>(i)]) <= value(delta)) return 0;
  int k = 1;
  for (int q = i + 1; k <= ell; ++q, ++k) {
    const Symbol s = q < m ? w[static_cast<std::size_t>(q)] : Symbol::C;
    if (s != delta) return k;
  }
  return ell + 1;
}

BigInt contribution(const Word& w, int i, const CodeParams& params) {
  const int ell = params.ell();
  const int s = value(w[static_cast<std::size_t>(i)]);
  if (s == 0) return 0;
  // Every smaller symbol has depth 1 except possibly the left neighbour.
  BigInt g = s * params.tail(i, 1);
  const int m = static_cast<int>(w.size());
  if (i + 1 < m && value(w[static_cast<std::size_t>(i + 1)]) < s) {
    const int k = left_run(w, i, ell) + 1;
    g -= params.tail(i, 1);
    if (k <= ell) g += params.tail(i, k);
  }
  return g;
}

BigInt formal_index(const Word& w, const CodeParams& params) {
  BigInt g = 0;
  for (int i = 0; i < static_cast<int>(w.size()); ++i) g += contribution(w, i, params);
  return g;
}

Word unrank(const BigInt& index, const CodeParams& params) {
  if (index < 0 || index >= params.codebook_size()) {
    throw std::out_of_range("unrank: index outside [0, N(m))");
  }
  const int m = params.m();
  const int ell = params.ell();
  Word w(static_cast<std::size_t>(m));
  BigInt rest = index;
  for (int p = m - 1; p >= 0; --p) {
    bool placed = false;
    for (int s = 3; s >= 0; --s) {
      const Symbol sym = symbol_from(s);
      if (p + 1 < m && w[static_cast<std::size_t>(p + 1)] == sym && left_run(w, p, ell) >= ell) continue;
      w[static_cast<std::size_t>(p)] = sym;
      BigInt g = contribution(w, p, params);
      if (g <= rest) {
        rest -= g;
        placed = true;
        break;
      }
    }
    if (!placed) throw std::logic_error("unrank: no admissible symbol");
  }
  assert(rest == 0);
  assert(is_codeword(w, ell));
  assert(formal_index(w, params) == index);
  return w;
}

namespace reference {

namespace {

// Number of symbols Delta in {A,T,G} for which delta_{i,k} = 1.
int delta_count(const Word& w, int i, int k, int ell) {
  int n = 0;
  for (int d = 0; d < 3; ++d) n += depth(w, i, symbol_from(d), ell) == k;
  return n;
}

}  // namespace

BigInt formal_index_generic(const Word& w, const CodeParams& params) {
  const int ell = params.ell();
  BigInt g = 0;
  for (int i = 0; i < static_cast<int>(w.size()); ++i) {
    for (int j = 1; j <= ell; ++j) {
      for (int k = 1; k <= j; ++k) {
        g += delta_count(w, i, k, ell) * params.scaled(i + j - ell);
      }
    }
  }
  return g;
}

BigInt formal_index_ell1(const Word& w, const CodeParams& params) {
  if (params.ell() != 1) throw std::invalid_argument("formal_index_ell1 needs ell = 1");
  BigInt g = 0;
  for (int i = 0; i < static_cast<int>(w.size()); ++i) {
    g += delta_count(w, i, 1, 1) * (params.scaled(i + 1) / 3);  // N(i+1)/4
  }
  return g;
}

BigInt formal_index_ell2(const Word& w, const CodeParams& params) {
  if (params.ell() != 2) throw std::invalid_argument("formal_index_ell2 needs ell = 2");
  BigInt g = 0;
  for (int i = 0; i < static_cast<int>(w.size()); ++i) {
    g += delta_count(w, i, 1, 2) * (params.scaled(i + 1) / 3);  // N(i+1)/4
    g += delta_count(w, i, 2, 2) * params.scaled(i);          // 3N(i)/4
  }
  return g;
}

}  // namespace reference

ResidueRanker::ResidueRanker(const CodeParams& params, std::uint64_t modulus)
    : m_(params.m()), ell_(params.ell()), modulus_(modulus) {
  if (modulus < 2) throw std::invalid_argument("modulus must be >= 2");
  tails_.resize(static_cast<std::size_t>(m_ * ell_));
  const BigInt r = modulus;
  for (int p = 0; p < m_; ++p) {
    for (int k = 1; k <= ell_; ++k) {
      tails_[static_cast<std::size_t>(p * ell_ + k - 1)] =
          static_cast<std::uint64_t>(params.tail(p, k) % r);
    }
  }
}

std::uint64_t ResidueRanker::contribution(const Word& w, int i) const noexcept {
  const int s = value(w[static_cast<std::size_t>(i)]);
  if (s == 0) return 0;
  const std::uint64_t* t = &tails_[static_cast<std::size_t>(i * ell_)];
  unsigned __int128 g = static_cast<unsigned __int128>(s) * t[0];
  if (i + 1 < m_ && value(w[static_cast<std::size_t>(i + 1)]) < s) {
    const int k = left_run(w, i, ell_) + 1;
    g -= t[0];
    if (k <= ell_) g += t[k - 1];
  }
  return static_cast<std::uint64_t>(g % modulus_);
}

std::uint64_t ResidueRanker::residue(const Word& w) const noexcept {
  std::uint64_t acc = 0;
  for (int i = 0; i < m_; ++i) {
    acc += contribution(w, i);
    if (acc >= modulus_) acc -= modulus_;
  }
  return acc;
}

}  // namespace ecdloco
