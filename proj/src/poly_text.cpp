#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "stern/poly_json.hpp"
#include "stern/stern_poly.hpp"

namespace stern {

std::string SternPoly::text() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<std::string, std::uint64_t>> parts;
  parts.reserve(terms_.size());
  for (const auto& [m, c] : terms_) parts.emplace_back(m.key(), c);
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& [key, c] : parts) {
    if (!out.empty()) out += " + ";
    if (key.empty()) {
      out += std::to_string(c);
    } else if (c == 1) {
      out += key;
    } else {
      out += std::to_string(c) + "*" + key;
    }
  }
  return out;
}

namespace {

// Recursive-descent parser for the canonical grammar:
//   poly   := "0" | term (" + " term)*
//   term   := [int "*"] factor ("*" factor)* | int
//   factor := "z"idx | "z"idx"^("epoly")"
//   epoly  := eterm (" + " eterm)*
//   eterm  := [int"*"]("1" | "t"idx | "t"idx"^"int)
// The exponent of z_j may only involve t_j.
class PolyParser {
public:
  PolyParser(std::string_view s, int base) : s_(s), base_(base) {}

  SternPoly run() {
    SternPoly p(base_);
    parse_term(p);
    while (try_consume(" + ")) parse_term(p);
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, pos_);
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  bool try_consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  bool try_consume(std::string_view w) {
    if (s_.substr(pos_, w.size()) != w) return false;
    pos_ += w.size();
    return true;
  }

  std::uint64_t parse_int() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = checked_add(checked_mul(v, 10),
                      static_cast<std::uint64_t>(peek() - '0'));
      ++pos_;
    }
    return v;
  }

  int parse_var_index(const char* what) {
    std::uint64_t v = parse_int();
    if (v < 1 || v > static_cast<std::uint64_t>(base_))
      fail(std::string(what) + " index out of range for base " +
           std::to_string(base_));
    return static_cast<int>(v);
  }

  void parse_term(SternPoly& p) {
    std::uint64_t coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_int();
      have_coeff = true;
      if (!try_consume('*')) {
        // bare integer term
        p += SternPoly::constant(base_, coeff);
        return;
      }
    }
    if (peek() != 'z') {
      fail(have_coeff ? "expected factor after '*'" : "expected term");
    }
    Monomial m(base_);
    parse_factor(m);
    while (try_consume('*')) parse_factor(m);
    p += SternPoly::from_monomial(std::move(m), coeff);
  }

  void parse_factor(Monomial& m) {
    if (!try_consume('z')) fail("expected 'z'");
    int j = parse_var_index("variable");
    ExpPoly e = ExpPoly::constant(1);
    if (try_consume('^')) {
      if (!try_consume('(')) fail("expected '('");
      e = parse_epoly(j);
      if (!try_consume(')')) fail("expected ')'");
    }
    m = m.with_exp(j, m.exp(j) + e);
  }

  ExpPoly parse_epoly(int j) {
    ExpPoly e = parse_eterm(j);
    while (try_consume(" + ")) e += parse_eterm(j);
    return e;
  }

  ExpPoly parse_eterm(int j) {
    std::uint64_t coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::uint64_t v = parse_int();
      if (!try_consume('*')) {
        if (v != 1) fail("expected '*' after exponent coefficient");
        return ExpPoly::constant(1);  // the atom "1"
      }
      coeff = v;
    }
    std::uint32_t power = 0;
    if (try_consume('t')) {
      int idx = parse_var_index("exponent variable");
      if (idx != j)
        fail("exponent of z" + std::to_string(j) + " must use t" +
             std::to_string(j));
      power = 1;
      if (try_consume('^')) {
        std::uint64_t a = parse_int();
        if (a > std::numeric_limits<std::uint32_t>::max())
          fail("t-power too large");
        power = static_cast<std::uint32_t>(a);
      }
    } else if (try_consume('1')) {
      power = 0;
    } else {
      fail("expected '1' or 't' in exponent");
    }
    return coeff == 0 ? ExpPoly{} : ExpPoly::constant(coeff).shifted(power);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int base_;
};

}  // namespace

SternPoly SternPoly::parse(std::string_view s, int base) {
  require(base >= 2, "base must be >= 2");
  if (s == "0") return SternPoly::zero(base);
  return PolyParser(s, base).run();
}

nlohmann::json poly_to_json(const SternPoly& p) {
  std::vector<std::pair<std::string, nlohmann::json>> entries;
  entries.reserve(p.term_count());
  for (const auto& [m, c] : p.terms()) {
    nlohmann::json exps = nlohmann::json::array();
    for (int j = 1; j <= p.base(); ++j) {
      nlohmann::json e = nlohmann::json::array();
      for (const auto& [a, cc] : m.exp(j).terms()) e.push_back({a, cc});
      exps.push_back(std::move(e));
    }
    entries.emplace_back(
        m.key(), nlohmann::json{{"coeff", c}, {"exps", std::move(exps)}});
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  nlohmann::json terms = nlohmann::json::array();
  for (auto& [key, t] : entries) terms.push_back(std::move(t));
  return nlohmann::json{{"base", p.base()}, {"terms", std::move(terms)}};
}

}  // namespace stern
