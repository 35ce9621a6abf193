#pragma once

// Exact positive sexagesimal numbers in tablet form: a canonical digit list
// (most significant first, first and last digit nonzero) plus a point
// exponent, so value = sum digits[i] * 60^(point - i). All operations are
// pure and exact; results are always canonical.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sexagesimal {

inline constexpr int kBase = 60;

// Hard cap on canonical digit-list length. The longest attested number has
// 17 places; the cap catches runaway loops, not legitimate values.
inline constexpr std::size_t kMaxPlaces = 64;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class Number {
 public:
  // The canonical zero: empty digit list, point 0. Zero is representable for
  // parser completeness but rejected by every arithmetic operation.
  Number() = default;

  // Builds a number from a positional digit list whose first digit carries
  // exponent `point`. Accepts non-canonical input (leading/trailing zero
  // digits) and canonicalizes. All digits must be in 0..59.
  static Number from_digits(std::vector<std::uint8_t> digits, int point) {
    for (std::uint8_t d : digits) {
      if (d >= kBase) {
        throw std::invalid_argument("sexagesimal digit out of range 0..59");
      }
    }
    std::size_t lead = 0;
    while (lead < digits.size() && digits[lead] == 0) {
      ++lead;
    }
    if (lead == digits.size()) {
      return Number();
    }
    digits.erase(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(lead));
    point -= static_cast<int>(lead);
    while (digits.back() == 0) {
      digits.pop_back();
    }
    if (digits.size() > kMaxPlaces) {
      throw std::length_error("sexagesimal digit count exceeds " +
                              std::to_string(kMaxPlaces));
    }
    return Number(std::move(digits), point);
  }

  static Number from_integer(std::uint64_t value) {
    if (value == 0) {
      return Number();
    }
    std::vector<std::uint8_t> digits;
    while (value != 0) {
      digits.push_back(static_cast<std::uint8_t>(value % kBase));
      value /= kBase;
    }
    std::reverse(digits.begin(), digits.end());
    const int point = static_cast<int>(digits.size()) - 1;
    return from_digits(std::move(digits), point);
  }

  static Number one() { return from_integer(1); }

  bool is_zero() const noexcept { return digits_.empty(); }
  const std::vector<std::uint8_t>& digits() const noexcept { return digits_; }
  int point() const noexcept { return point_; }
  std::size_t places() const noexcept { return digits_.size(); }

  // Canonical-form identity; coincides with numeric equality.
  friend bool operator==(const Number&, const Number&) = default;

 private:
  Number(std::vector<std::uint8_t> digits, int point)
      : digits_(std::move(digits)), point_(point) {}

  std::vector<std::uint8_t> digits_;
  int point_ = 0;
};

enum class Style { pointed, integer };

namespace detail {

inline void require_nonzero(const Number& x) {
  if (x.is_zero()) {
    throw std::domain_error("zero operand");
  }
}

inline void require_small_factor(int factor) {
  if (factor != 2 && factor != 3 && factor != 5) {
    throw std::invalid_argument("factor must be 2, 3, or 5");
  }
}

}  // namespace detail

// Total order by numeric value. Zero compares below every nonzero value.
inline std::strong_ordering compare(const Number& a, const Number& b) {
  if (a.is_zero() || b.is_zero()) {
    if (a.is_zero() && b.is_zero()) {
      return std::strong_ordering::equal;
    }
    return a.is_zero() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  // Canonical leading digits are nonzero, so the point alone fixes the
  // magnitude ordering; equal points reduce to lexicographic digit order
  // (zero-extension is implicit: canonical lists never end in 0).
  if (a.point() != b.point()) {
    return a.point() < b.point() ? std::strong_ordering::less
                                 : std::strong_ordering::greater;
  }
  return std::lexicographical_compare_three_way(
      a.digits().begin(), a.digits().end(), b.digits().begin(), b.digits().end());
}

inline std::strong_ordering operator<=>(const Number& a, const Number& b) {
  return compare(a, b);
}

// Same digit list, point moved by k: value scaled by 60^k.
inline Number shift_point(const Number& x, int k) {
  detail::require_nonzero(x);
  return Number::from_digits(x.digits(), x.point() + k);
}

// Exact product.
inline Number mul(const Number& a, const Number& b) {
  detail::require_nonzero(a);
  detail::require_nonzero(b);
  const auto& da = a.digits();
  const auto& db = b.digits();
  // Schoolbook over base-60 columns; column sums stay far below 2^64.
  std::vector<std::uint64_t> acc(da.size() + db.size(), 0);
  for (std::size_t i = 0; i < da.size(); ++i) {
    for (std::size_t j = 0; j < db.size(); ++j) {
      acc[i + j + 1] += static_cast<std::uint64_t>(da[i]) * db[j];
    }
  }
  for (std::size_t i = acc.size(); i-- > 1;) {
    acc[i - 1] += acc[i] / kBase;
    acc[i] %= kBase;
  }
  std::vector<std::uint8_t> digits(acc.size());
  std::transform(acc.begin(), acc.end(), digits.begin(),
                 [](std::uint64_t v) { return static_cast<std::uint8_t>(v); });
  // Last raw digit carries exponent (pa - la + 1) + (pb - lb + 1).
  const int last_exp = (a.point() - static_cast<int>(da.size()) + 1) +
                       (b.point() - static_cast<int>(db.size()) + 1);
  const int point = last_exp + static_cast<int>(digits.size()) - 1;
  return Number::from_digits(std::move(digits), point);
}

// Exact multiplication by one of the normal factors 2, 3, 5.
inline Number scale_small(const Number& x, int factor) {
  detail::require_nonzero(x);
  detail::require_small_factor(factor);
  std::vector<std::uint8_t> digits(x.digits());
  int carry = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    const int v = digits[i] * factor + carry;
    digits[i] = static_cast<std::uint8_t>(v % kBase);
    carry = v / kBase;
  }
  int point = x.point();
  if (carry != 0) {
    digits.insert(digits.begin(), static_cast<std::uint8_t>(carry));
    ++point;
  }
  return Number::from_digits(std::move(digits), point);
}

// Exact division by one of the normal factors 2, 3, 5. Always terminates:
// the factor divides 60, so a final nonzero remainder r contributes exactly
// one extension digit r*60/factor.
inline Number divide_small(const Number& x, int factor) {
  detail::require_nonzero(x);
  detail::require_small_factor(factor);
  std::vector<std::uint8_t> digits(x.digits());
  int remainder = 0;
  for (auto& d : digits) {
    const int v = remainder * kBase + d;
    d = static_cast<std::uint8_t>(v / factor);
    remainder = v % factor;
  }
  if (remainder != 0) {
    digits.push_back(static_cast<std::uint8_t>(remainder * kBase / factor));
  }
  return Number::from_digits(std::move(digits), x.point());
}

struct Normalized {
  Number mantissa;  // value in [1, 60)
  int shift;        // x = shift_point(mantissa, shift)
};

// Repositions the point so the leading digit is the units digit.
inline Normalized normalize_mantissa(const Number& x) {
  detail::require_nonzero(x);
  return Normalized{shift_point(x, -x.point()), x.point()};
}

inline std::string format(const Number& x, Style style = Style::pointed) {
  if (x.is_zero()) {
    return "0";
  }
  const auto& digits = x.digits();
  const int len = static_cast<int>(digits.size());
  if (style == Style::integer && x.point() != len - 1) {
    throw std::invalid_argument("integer style requires a whole number with no shift");
  }
  std::string out;
  auto append_group = [&out](int value) {
    if (!out.empty() && out.back() != ';') {
      out += ',';
    }
    out += std::to_string(value);
  };
  if (x.point() < 0) {
    out += "0;";
    for (int i = 0; i < -x.point() - 1; ++i) {
      append_group(0);
    }
    for (std::uint8_t d : digits) {
      append_group(d);
    }
    return out;
  }
  int i = 0;
  for (; i <= x.point(); ++i) {
    append_group(i < len ? digits[static_cast<std::size_t>(i)] : 0);
  }
  if (i < len) {
    out += ';';
    for (; i < len; ++i) {
      append_group(digits[static_cast<std::size_t>(i)]);
    }
  }
  return out;
}

// Transliteration grammar: group ("," group)* [";" group ("," group)*],
// each group a decimal numeral 0..59; ";" is the radix point. A missing ";"
// reads the string as an integer. Non-canonical zero groups are accepted
// and canonicalized; an all-zero string yields the canonical zero.
inline Number parse(std::string_view text) {
  if (text.empty()) {
    throw ParseError("empty input", 0);
  }
  std::vector<std::uint8_t> digits;
  int integer_groups = 0;
  std::size_t pos = 0;
  bool group_open = false;

  auto read_group = [&]() {
    const std::size_t start = pos;
    int value = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      value = value * 10 + (text[pos] - '0');
      if (value >= 600) {  // avoid overflow on absurd runs; still a range error
        throw ParseError("digit group exceeds 59", start);
      }
      ++pos;
    }
    if (pos == start) {
      throw ParseError("expected digit group", start);
    }
    if (value >= kBase) {
      throw ParseError("digit group exceeds 59", start);
    }
    digits.push_back(static_cast<std::uint8_t>(value));
    group_open = true;
  };

  // Integer part (may be absent when the string starts with ";").
  if (text[0] != ';') {
    read_group();
    ++integer_groups;
    while (pos < text.size() && text[pos] == ',') {
      ++pos;
      read_group();
      ++integer_groups;
    }
  }
  if (pos < text.size() && text[pos] == ';') {
    ++pos;
    if (pos < text.size()) {
      read_group();
      while (pos < text.size() && text[pos] == ',') {
        ++pos;
        read_group();
      }
    }
  }
  if (pos != text.size()) {
    throw ParseError("unexpected character", pos);
  }
  if (!group_open) {
    throw ParseError("expected digit group", text.size());
  }
  return Number::from_digits(std::move(digits), integer_groups - 1);
}

inline std::ostream& operator<<(std::ostream& os, const Number& x) {
  return os << format(x);
}

}  // namespace sexagesimal
