#pragma once

// Regularity testing, factorization over the normal factors {2, 3, 5}, and
// exact reciprocals. A number is regular iff its digit-integer is
// 2^alpha * 3^beta * 5^gamma; exactly these have terminating reciprocals.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sexagesimal/number.hpp"

namespace sexagesimal {

struct RegularExponents {
  std::uint32_t alpha = 0;  // exponent of 2
  std::uint32_t beta = 0;   // exponent of 3
  std::uint32_t gamma = 0;  // exponent of 5

  friend bool operator==(const RegularExponents&, const RegularExponents&) = default;
};

class NotRegularError : public std::domain_error {
 public:
  explicit NotRegularError(std::string cofactor)
      : std::domain_error("not regular: cofactor " + cofactor),
        cofactor_(std::move(cofactor)) {}

  // The offending cofactor after stripping all 2s, 3s, and 5s, in decimal.
  const std::string& cofactor() const noexcept { return cofactor_; }

 private:
  std::string cofactor_;
};

namespace detail {

// In-place integer division of a base-60 digit vector (most significant
// first) by a small divisor. Returns the remainder; strips leading zeros.
inline int divmod_digits(std::vector<std::uint8_t>& digits, int divisor) {
  int remainder = 0;
  for (auto& d : digits) {
    const int v = remainder * kBase + d;
    d = static_cast<std::uint8_t>(v / divisor);
    remainder = v % divisor;
  }
  std::size_t lead = 0;
  while (lead < digits.size() && digits[lead] == 0) {
    ++lead;
  }
  digits.erase(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(lead));
  return remainder;
}

inline bool digits_are_one(const std::vector<std::uint8_t>& digits) {
  return digits.size() == 1 && digits[0] == 1;
}

inline std::string digits_to_decimal(std::vector<std::uint8_t> digits) {
  std::string out;
  while (!digits.empty()) {
    auto scratch = digits;
    out += static_cast<char>('0' + divmod_digits(scratch, 10));
    digits = std::move(scratch);
  }
  if (out.empty()) {
    out = "0";
  }
  return std::string(out.rbegin(), out.rend());
}

// Strips 2s, 3s, 5s from a digit-integer; returns exponents and leaves the
// cofactor behind.
inline RegularExponents strip_normal_factors(std::vector<std::uint8_t>& digits) {
  RegularExponents e;
  const std::pair<int, std::uint32_t RegularExponents::*> factors[] = {
      {2, &RegularExponents::alpha},
      {3, &RegularExponents::beta},
      {5, &RegularExponents::gamma},
  };
  for (auto [f, member] : factors) {
    for (;;) {
      auto attempt = digits;
      if (divmod_digits(attempt, f) != 0) {
        break;
      }
      digits = std::move(attempt);
      ++(e.*member);
    }
  }
  return e;
}

}  // namespace detail

inline RegularExponents factor_regular(std::uint64_t n) {
  if (n == 0) {
    throw std::domain_error("zero has no factorization");
  }
  RegularExponents e;
  for (auto [f, member] : {std::pair{std::uint64_t{2}, &RegularExponents::alpha},
                           std::pair{std::uint64_t{3}, &RegularExponents::beta},
                           std::pair{std::uint64_t{5}, &RegularExponents::gamma}}) {
    while (n % f == 0) {
      n /= f;
      ++(e.*member);
    }
  }
  if (n != 1) {
    throw NotRegularError(std::to_string(n));
  }
  return e;
}

// Factors the digit-integer of x (the point is irrelevant: 60 is regular).
inline RegularExponents factor_regular(const Number& x) {
  detail::require_nonzero(x);
  auto digits = x.digits();
  RegularExponents e = detail::strip_normal_factors(digits);
  if (!detail::digits_are_one(digits)) {
    throw NotRegularError(detail::digits_to_decimal(std::move(digits)));
  }
  return e;
}

inline bool is_regular(const Number& x) {
  detail::require_nonzero(x);
  auto digits = x.digits();
  detail::strip_normal_factors(digits);
  return detail::digits_are_one(digits);
}

// Exact reciprocal, point placed so that x * reciprocal(x) = 1. With the
// digit-integer M = 2^a 3^b 5^c, the minimal k with M | 60^k is
// max(ceil(a/2), b, c), and 60^k / M = 2^(2k-a) 3^(k-b) 5^(k-c).
inline Number reciprocal(const Number& x) {
  const RegularExponents e = factor_regular(x);
  const std::uint32_t k =
      std::max({(e.alpha + 1) / 2, e.beta, e.gamma});
  Number r = Number::one();
  for (std::uint32_t i = 0; i < 2 * k - e.alpha; ++i) {
    r = scale_small(r, 2);
  }
  for (std::uint32_t i = 0; i < k - e.beta; ++i) {
    r = scale_small(r, 3);
  }
  for (std::uint32_t i = 0; i < k - e.gamma; ++i) {
    r = scale_small(r, 5);
  }
  // value(x) = M * 60^(point - places + 1), so 1/value(x) = R * 60^shift.
  const int shift = static_cast<int>(x.places()) - 1 - x.point() - static_cast<int>(k);
  return shift_point(r, shift);
}

struct Provenance {
  std::string family;
  int step = 0;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct ReciprocalPair {
  Number head;
  Number tail;
  std::optional<Provenance> provenance;
};

// True iff head * tail is a power of 60 (digit list [1]).
inline bool verify_pair(const Number& head, const Number& tail) {
  return detail::digits_are_one(mul(head, tail).digits());
}

inline bool verify_pair(const ReciprocalPair& pair) {
  return verify_pair(pair.head, pair.tail);
}

}  // namespace sexagesimal
