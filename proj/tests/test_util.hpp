#pragma once

#include <cstdint>

#include "stern/stern_poly.hpp"

// Shorthand builders for hand-written expected polynomials.
inline stern::SternPoly Z(int base, int j) {
  return stern::SternPoly::variable(base, j);
}

// z_j^{t_j^power}
inline stern::SternPoly Zt(int base, int j, std::uint32_t power) {
  return stern::SternPoly::variable_power(base, j,
                                          stern::ExpPoly::t_power(power));
}

// z_j^{p} for an explicit exponent polynomial
inline stern::SternPoly Zp(int base, int j, stern::ExpPoly p) {
  return stern::SternPoly::variable_power(base, j, std::move(p));
}

inline stern::ExpPoly T(std::uint32_t power) {
  return stern::ExpPoly::t_power(power);
}

inline stern::SternPoly One(int base) { return stern::SternPoly::one(base); }
