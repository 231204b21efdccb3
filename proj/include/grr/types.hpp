#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace grr {

/// Bitmask over at most 64 group elements or graph vertices.
using Mask = std::uint64_t;

using BigInt = boost::multiprecision::cpp_int;

/// Element-count cap: every element set and adjacency row fits one word.
inline constexpr int kMaxOrder = 64;

/// Input, precondition and size-cap failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a construction that a lemma guarantees to succeed does not.
/// Never caught inside the library.
class ProofViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr Mask bit(int i) { return Mask{1} << i; }

inline constexpr Mask low_bits(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline int popcount(Mask m) { return std::popcount(m); }

inline int lowest(Mask m) { return std::countr_zero(m); }

/// Calls f(i) for every set bit i in ascending order.
template <typename F>
inline void for_each_bit(Mask m, F&& f) {
  while (m) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

std::string to_string(const BigInt& v);

}  // namespace grr
