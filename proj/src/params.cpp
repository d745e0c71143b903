#include "ecdloco/params.hpp"

#include <stdexcept>
#include <string>

namespace ecdloco {

std::string to_decimal(const BigInt& v) { return v.str(); }

BigInt parse_decimal(std::string_view text) {
  std::size_t k = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) k = 1;
  if (k == text.size()) throw std::invalid_argument("empty decimal");
  for (std::size_t j = k; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') {
      throw std::invalid_argument("invalid decimal '" + std::string(text) + "'");
    }
  }
  BigInt v(std::string(text.substr(k)));
  return text[0] == '-' ? BigInt(-v) : v;
}

unsigned bit_length(const BigInt& v) {
  if (v == 0) return 0;
  return static_cast<unsigned>(boost::multiprecision::msb(boost::multiprecision::abs(v))) + 1;
}

LimbValue::LimbValue(const BigInt& v) {
  if (v < 0) throw std::invalid_argument("LimbValue: negative value");
  BigInt rest = v;
  while (rest != 0) {
    limbs_.push_back(static_cast<std::uint64_t>(rest & 0xFFFFFFFFFFFFFFFFull));
    rest >>= 64;
  }
}

CodeParams::CodeParams(int m, int ell) : m_(m), ell_(ell) {
  if (ell < 1) throw std::invalid_argument("ell must be >= 1");
  if (m < ell) throw std::invalid_argument("m must be >= ell");

  scaled_.resize(static_cast<std::size_t>(m) + 1);
  scaled_[0] = 1;
  for (int i = 1; i <= m; ++i) {
    BigInt acc = 0;
    for (int k = 1; k <= ell && i - k >= 0; ++k) acc += scaled_[static_cast<std::size_t>(i - k)];
    scaled_[static_cast<std::size_t>(i)] = 3 * acc;
  }

  tails_.resize(static_cast<std::size_t>(m) * static_cast<std::size_t>(ell));
  for (int p = 0; p < m; ++p) {
    BigInt acc = 0;
    for (int k = ell; k >= 1; --k) {
      acc += scaled(p + k - ell);
      tails_[static_cast<std::size_t>(p * ell + (k - 1))] = acc;
    }
  }

  n_ = cardinality(m);
  n_minus_1_ = n_ - 1;
}

BigInt CodeParams::cardinality(int i) const {
  if (i < 1 || i > m_) throw std::out_of_range("cardinality index out of range");
  return scaled(i) * 4 / 3;
}

}  // namespace ecdloco
