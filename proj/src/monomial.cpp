#include "stern/monomial.hpp"

#include <algorithm>

namespace stern {

Monomial::Monomial(int base) : base_(base), exps_(static_cast<std::size_t>(base)) {
  require(base >= 2, "base must be >= 2");
}

Monomial::Monomial(int base, std::vector<ExpPoly> exps)
    : base_(base), exps_(std::move(exps)) {
  require(base >= 2, "base must be >= 2");
  require(exps_.size() == static_cast<std::size_t>(base),
          "monomial needs exactly one exponent per variable");
}

const ExpPoly& Monomial::exp(int j) const {
  require(j >= 1 && j <= base_, "variable index out of range");
  return exps_[static_cast<std::size_t>(j - 1)];
}

Monomial Monomial::with_exp(int j, ExpPoly e) const {
  require(j >= 1 && j <= base_, "variable index out of range");
  Monomial m = *this;
  m.exps_[static_cast<std::size_t>(j - 1)] = std::move(e);
  return m;
}

bool Monomial::is_identity() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(),
                     [](const ExpPoly& e) { return e.is_zero(); });
}

Monomial Monomial::operator*(const Monomial& o) const {
  require(base_ == o.base_, "base mismatch in monomial product");
  Monomial m = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] += o.exps_[i];
  return m;
}

Monomial Monomial::frobenius(std::uint32_t d) const {
  if (d == 0) return *this;
  Monomial m = *this;
  for (auto& e : m.exps_) e = e.shifted(d);
  return m;
}

Monomial Monomial::without_var(int j) const { return with_exp(j, ExpPoly{}); }

std::string Monomial::key() const {
  std::string out;
  for (int j = 1; j <= base_; ++j) {
    const ExpPoly& e = exps_[static_cast<std::size_t>(j - 1)];
    if (e.is_zero()) continue;
    if (!out.empty()) out += "*";
    out += "z" + std::to_string(j);
    if (!e.is_one()) out += "^(" + e.text(j) + ")";
  }
  return out;
}

int Monomial::compare(const Monomial& o) const noexcept {
  if (base_ != o.base_) return base_ < o.base_ ? -1 : 1;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    int c = exps_[i].compare(o.exps_[i]);
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace stern
