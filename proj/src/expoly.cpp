#include "stern/expoly.hpp"

#include <algorithm>

namespace stern {

ExpPoly ExpPoly::constant(std::uint64_t c) {
  ExpPoly p;
  if (c != 0) p.terms_.push_back({0, c});
  return p;
}

ExpPoly ExpPoly::t_power(std::uint32_t a) {
  ExpPoly p;
  p.terms_.push_back({a, 1});
  return p;
}

ExpPoly ExpPoly::shifted(std::uint32_t d) const {
  ExpPoly p;
  p.terms_.reserve(terms_.size());
  for (const auto& [a, c] : terms_) {
    std::uint32_t pw;
    if (__builtin_add_overflow(a, d, &pw))
      throw OverflowError("t-power overflow in shift");
    p.terms_.push_back({pw, c});
  }
  return p;
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& o) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.cbegin(), b = o.terms_.cbegin();
  while (a != terms_.cend() && b != o.terms_.cend()) {
    if (a->first < b->first) {
      merged.push_back(*a++);
    } else if (b->first < a->first) {
      merged.push_back(*b++);
    } else {
      merged.push_back({a->first, checked_add(a->second, b->second)});
      ++a, ++b;
    }
  }
  merged.insert(merged.end(), a, terms_.cend());
  merged.insert(merged.end(), b, o.terms_.cend());
  terms_ = std::move(merged);
  return *this;
}

std::uint64_t ExpPoly::eval(std::uint64_t t) const {
  std::uint64_t v = 0;
  for (const auto& [a, c] : terms_)
    v = checked_add(v, checked_mul(c, checked_pow(t, a)));
  return v;
}

bool ExpPoly::coefficients_are_01() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.second == 1; });
}

int ExpPoly::compare(const ExpPoly& o) const noexcept {
  auto a = terms_.begin(), b = o.terms_.begin();
  for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
    if (a->first != b->first) return a->first < b->first ? -1 : 1;
    if (a->second != b->second) return a->second < b->second ? -1 : 1;
  }
  if (a != terms_.end()) return 1;
  if (b != o.terms_.end()) return -1;
  return 0;
}

std::string ExpPoly::text(int var_index) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    if (c != 1) out += std::to_string(c) + "*";
    if (a == 0) {
      out += "1";
    } else {
      out += "t" + std::to_string(var_index);
      if (a != 1) out += "^" + std::to_string(a);
    }
  }
  return out;
}

}  // namespace stern
