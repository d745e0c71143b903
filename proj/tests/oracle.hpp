#pragma once
// Independent brute-force helpers used as test oracles. Everything here works
// on plain text strings so it shares no code with the library.

#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

inline const char kAlpha[] = "ATGC";  // A < T < G < C

inline bool no_long_run(const std::string& s, int ell) {
  int run = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    run = (k > 0 && s[k] == s[k - 1]) ? run + 1 : 1;
    if (run > ell) return false;
  }
  return true;
}

// All words of length m in lexicographic order (A < T < G < C).
inline std::vector<std::string> all_words(int m) {
  std::vector<std::string> out;
  std::uint64_t total = 1;
  for (int k = 0; k < m; ++k) total *= 4;
  out.reserve(static_cast<std::size_t>(total));
  std::string s(static_cast<std::size_t>(m), 'A');
  for (std::uint64_t c = 0; c < total; ++c) {
    std::uint64_t x = c;
    for (int k = m - 1; k >= 0; --k) {
      s[static_cast<std::size_t>(k)] = kAlpha[x & 3];
      x >>= 2;
    }
    out.push_back(s);
  }
  return out;
}

// Codebook in lexicographic order: its position in this list is the rank.
inline std::vector<std::string> codebook(int m, int ell) {
  std::vector<std::string> out;
  for (auto& w : all_words(m)) {
    if (no_long_run(w, ell)) out.push_back(w);
  }
  return out;
}

inline int sym(char c) {
  switch (c) {
    case 'A': return 0;
    case 'T': return 1;
    case 'G': return 2;
    default: return 3;
  }
}

inline std::string complement(const std::string& s) {
  std::string o = s;
  for (auto& c : o) c = kAlpha[3 - sym(c)];
  return o;
}

}  // namespace oracle
