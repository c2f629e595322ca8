// Copyright (c) 2026 The ffec authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef FFEC_SERIES_HPP
#define FFEC_SERIES_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "ffec/common.hpp"

namespace ffec {

// Truncated power series over Q with exact rational coefficients.
class PowerSeries {
 public:
  PowerSeries(size_t prec, std::vector<Rat> coeffs) : n_(prec), c_(std::move(coeffs)) {
    c_.resize(n_, Rat(0));
  }
  static PowerSeries zero(size_t prec) { return PowerSeries(prec, {}); }
  static PowerSeries one(size_t prec) { return PowerSeries(prec, {Rat(1)}); }

  size_t precision() const { return n_; }
  const Rat& coeff(size_t i) const { return c_[i]; }

  PowerSeries operator+(const PowerSeries& o) const;
  PowerSeries operator-(const PowerSeries& o) const;
  PowerSeries operator*(const PowerSeries& o) const;
  // Multiplicative inverse; requires a nonzero constant term.
  PowerSeries inverse() const;

 private:
  size_t n_;
  std::vector<Rat> c_;
};

// Zeta data of a smooth curve B/F_q of genus g: the numerator polynomial
// P(T) with integer coefficients, deg P = 2g, P(0) = 1 (P = 1 for g = 0).
// Z_B(T) = P(T) / ((1-T)(1-qT)).
struct ZetaData {
  uint32_t q;
  uint32_t genus;
  std::vector<long> P;  // coefficients low -> high, length 2g+1

  ZetaData(uint32_t q_, uint32_t g_, std::vector<long> P_ = {});
  static ZetaData p1(uint32_t q_) { return ZetaData(q_, 0); }

  Int pic0() const;  // #Pic^0(B) = P(1)
  Rat P_at(const Rat& T) const;
};

// First N coefficients of Z_B(T).
PowerSeries zeta_series(const ZetaData& z, size_t N);

// Exact rational zeta value Z_B(q^{-s}); requires s >= 2.
Rat zeta_value(const ZetaData& z, long s);

// N(g) = max{-1, 2g-2}; count formulas require d > N(g).
inline int height_floor(uint32_t g) { return g == 0 ? -1 : 2 * int(g) - 2; }

// q^{16d+5(1-g)}: all Weierstrass equations with Hodge bundle of degree d.
Rat count_all_weq(uint32_t q, uint32_t g, int d);
// q^{8d+4(1-g)}: the generically singular ones.
Rat count_singular_weq(uint32_t q, uint32_t g, int d);

// Per-degree census identities over P^1 (g = 0), exact for all d >= 0.
struct CountTable {
  uint32_t q;
  int d_max;
  std::vector<Rat> total, sing, nonmin, uw, we;
};
CountTable uw_we_recursion(uint32_t q, int d_max);

// de Jong's exact weighted count over F_q(t); requires d >= 2.
Rat dejong_exact(uint32_t q, int d);
// Unchecked evaluation of the same expression (used to exhibit the
// failure of integrality outside d >= 2).
Rat dejong_formula_raw(uint32_t q, int d);

// Main and secondary asymptotic terms of the height-d weighted count.
std::pair<Rat, Rat> ec_asymptotic_terms(const ZetaData& z, int d);

// (average 2-Selmer bound, average rank bound) = (1 + 2 z2 z10, 1/2 + z2 z10).
std::pair<Rat, Rat> selmer_bounds(const ZetaData& z);

// (1+q^{1/2-s})^{2g} / ((1-q^{-s})(1-q^{1-s})), s >= 2.
double weil_zeta_bound(uint32_t q, uint32_t g, long s);

// #Bun_{PGL_2}(F_q) = 2 q^{3(g-1)} zeta_B(2).
Rat bun_pgl2_mass(const ZetaData& z);

}  // namespace ffec

#endif
