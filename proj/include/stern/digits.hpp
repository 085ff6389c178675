#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace stern {

/// Base-b digit string, most significant digit first. n = 0 is the empty
/// string. to_digits never emits leading zeros; consumers tolerate them.
struct DigitString {
  int base = 2;
  std::vector<int> digits;

  std::size_t size() const noexcept { return digits.size(); }
  bool well_formed() const noexcept;
  bool operator==(const DigitString&) const = default;
};

DigitString to_digits(std::uint64_t n, int base);
DigitString to_digits(const mpz_class& n, int base);
mpz_class from_digits(const DigitString& d);
std::uint64_t from_digits_u64(const DigitString& d);  // checked

// Parses "10110"-style digit text (0-9, a-z for bases up to 36).
DigitString digits_from_text(std::string_view s, int base);

}  // namespace stern
