#include "stern/digits.hpp"

#include <algorithm>
#include <cctype>

#include "stern/util.hpp"

namespace stern {

bool DigitString::well_formed() const noexcept {
  if (base < 2) return false;
  if (!digits.empty() && digits.front() == 0) return false;
  return std::all_of(digits.begin(), digits.end(),
                     [this](int d) { return d >= 0 && d < base; });
}

DigitString to_digits(std::uint64_t n, int base) {
  require(base >= 2, "base must be >= 2");
  DigitString out{base, {}};
  while (n > 0) {
    out.digits.push_back(static_cast<int>(n % static_cast<std::uint64_t>(base)));
    n /= static_cast<std::uint64_t>(base);
  }
  std::reverse(out.digits.begin(), out.digits.end());
  return out;
}

DigitString to_digits(const mpz_class& n, int base) {
  require(base >= 2, "base must be >= 2");
  require(n >= 0, "negative value has no digit string");
  DigitString out{base, {}};
  if (n == 0) return out;
  if (base <= 36) {
    // mpz_get_str uses 0-9 then lowercase letters
    std::string s = n.get_str(base);
    out.digits.reserve(s.size());
    for (char c : s)
      out.digits.push_back(c <= '9' ? c - '0' : c - 'a' + 10);
  } else {
    mpz_class v = n;
    while (v > 0) {
      mpz_class q, r;
      mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(),
                     static_cast<unsigned long>(base));
      out.digits.push_back(static_cast<int>(r.get_ui()));
      v = q;
    }
    std::reverse(out.digits.begin(), out.digits.end());
  }
  return out;
}

mpz_class from_digits(const DigitString& d) {
  require(d.base >= 2, "base must be >= 2");
  mpz_class v = 0;
  for (int digit : d.digits) {
    require(digit >= 0 && digit < d.base, "digit out of range");
    v = v * d.base + digit;
  }
  return v;
}

std::uint64_t from_digits_u64(const DigitString& d) {
  require(d.base >= 2, "base must be >= 2");
  std::uint64_t v = 0;
  for (int digit : d.digits) {
    require(digit >= 0 && digit < d.base, "digit out of range");
    v = checked_add(checked_mul(v, static_cast<std::uint64_t>(d.base)),
                    static_cast<std::uint64_t>(digit));
  }
  return v;
}

DigitString digits_from_text(std::string_view s, int base) {
  require(base >= 2 && base <= 36, "digit text supports bases 2..36");
  DigitString out{base, {}};
  out.digits.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = static_cast<char>(
        std::tolower(static_cast<unsigned char>(s[i])));
    int d;
    if (c >= '0' && c <= '9')
      d = c - '0';
    else if (c >= 'a' && c <= 'z')
      d = c - 'a' + 10;
    else
      throw ParseError("invalid digit character", i);
    if (d >= base) throw ParseError("digit out of range for base", i);
    out.digits.push_back(d);
  }
  return out;
}

}  // namespace stern
