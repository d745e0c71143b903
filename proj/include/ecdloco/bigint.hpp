#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ecdloco {

/// Arbitrary-precision signed integer used for every index and cardinality.
using BigInt = boost::multiprecision::cpp_int;

std::string to_decimal(const BigInt& v);

/// Parses a signed decimal string; throws std::invalid_argument on bad input.
BigInt parse_decimal(std::string_view text);

/// Number of bits needed to write |v| (0 for v == 0).
unsigned bit_length(const BigInt& v);

/// Precomputed 64-bit limb expansion of a non-negative value so that repeated
/// reductions modulo many small moduli run without touching the big integer.
class LimbValue {
public:
  LimbValue() = default;
  explicit LimbValue(const BigInt& v);

  /// value mod r for 2 <= r < 2^63.
  std::uint64_t mod(std::uint64_t r) const noexcept {
    unsigned __int128 acc = 0;
    for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it) {
      acc = ((acc << 64) | *it) % r;
    }
    return static_cast<std::uint64_t>(acc);
  }

private:
  std::vector<std::uint64_t> limbs_;  // little-endian
};

}  // namespace ecdloco
