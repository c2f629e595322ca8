// Copyright (c) 2026 The ffec authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "ffec/series.hpp"

#include <cmath>

namespace ffec {

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
  size_t n = std::min(n_, o.n_);
  std::vector<Rat> r(n);
  for (size_t i = 0; i < n; ++i) r[i] = c_[i] + o.c_[i];
  return PowerSeries(n, std::move(r));
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
  size_t n = std::min(n_, o.n_);
  std::vector<Rat> r(n);
  for (size_t i = 0; i < n; ++i) r[i] = c_[i] - o.c_[i];
  return PowerSeries(n, std::move(r));
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
  size_t n = std::min(n_, o.n_);
  std::vector<Rat> r(n, Rat(0));
  for (size_t i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; i + j < n; ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return PowerSeries(n, std::move(r));
}

PowerSeries PowerSeries::inverse() const {
  if (n_ == 0 || c_[0] == 0) throw invalid_input("series inverse requires a unit constant term");
  std::vector<Rat> r(n_, Rat(0));
  Rat c0inv = Rat(1) / c_[0];
  r[0] = c0inv;
  for (size_t i = 1; i < n_; ++i) {
    Rat acc(0);
    for (size_t j = 1; j <= i; ++j) acc += c_[j] * r[i - j];
    r[i] = -acc * c0inv;
  }
  return PowerSeries(n_, std::move(r));
}

ZetaData::ZetaData(uint32_t q_, uint32_t g_, std::vector<long> P_) : q(q_), genus(g_), P(std::move(P_)) {
  uint32_t p = 0;
  for (uint32_t c = 2; c * c <= q; ++c)
    if (q % c == 0) {
      p = c;
      break;
    }
  if (p == 0) p = q;
  uint32_t t = q;
  while (t > 1) {
    if (t % p != 0) throw invalid_input("zeta data requires a prime power q");
    t /= p;
  }
  if (P.empty()) P = {1};
  if (P[0] != 1) throw invalid_input("zeta numerator must satisfy P(0) = 1");
  if (P.size() != size_t(2 * genus) + 1) throw invalid_input("zeta numerator must have degree 2g");
}

Int ZetaData::pic0() const {
  Int s(0);
  for (long c : P) s += c;
  return s;
}

Rat ZetaData::P_at(const Rat& T) const {
  Rat acc(0);
  for (size_t i = P.size(); i-- > 0;) acc = acc * T + Rat(P[i]);
  return acc;
}

PowerSeries zeta_series(const ZetaData& z, size_t N) {
  if (N < 1) throw invalid_input("series precision must be >= 1");
  // 1/((1-T)(1-qT)) has coefficients (q^{n+1}-1)/(q-1)
  std::vector<Rat> base(N);
  Int qn(z.q);
  for (size_t n = 0; n < N; ++n) {
    base[n] = Rat(qn - 1) / Rat(z.q - 1);
    qn *= z.q;
  }
  std::vector<Rat> pc(N, Rat(0));
  for (size_t i = 0; i < z.P.size() && i < N; ++i) pc[i] = Rat(z.P[i]);
  return PowerSeries(N, std::move(pc)) * PowerSeries(N, std::move(base));
}

Rat zeta_value(const ZetaData& z, long s) {
  if (s <= 1) throw invalid_input("zeta value requires s >= 2");
  Rat T = rat_pow(z.q, -s);
  Rat denom = (Rat(1) - T) * (Rat(1) - Rat(z.q) * T);
  return z.P_at(T) / denom;
}

Rat count_all_weq(uint32_t q, uint32_t g, int d) {
  if (d <= height_floor(g)) throw invalid_input("count requires d > N(g)");
  return rat_pow(q, 16L * d + 5L * (1 - long(g)));
}

Rat count_singular_weq(uint32_t q, uint32_t g, int d) {
  if (d <= height_floor(g)) throw invalid_input("count requires d > N(g)");
  return rat_pow(q, 8L * d + 4L * (1 - long(g)));
}

CountTable uw_we_recursion(uint32_t q, int d_max) {
  if (d_max < 0) throw invalid_input("d_max must be >= 0");
  ZetaData::p1(q);  // validates that q is a prime power
  CountTable tbl;
  tbl.q = q;
  tbl.d_max = d_max;
  for (int d = 0; d <= d_max; ++d) {
    Rat total = rat_pow(q, 16L * d + 5);
    Rat sing = rat_pow(q, 8L * d + 4);
    Rat nonmin(0);
    for (int e = 0; e < d; ++e)
      nonmin += (rat_pow(q, long(d - e) + 1) - 1) * tbl.we[size_t(e)];
    nonmin *= rat_pow(q, 6L * d + 3);
    Rat uw = total - sing - nonmin;
    Rat we = uw / (Rat(q - 1) * rat_pow(q, 6L * d + 3));
    tbl.total.push_back(total);
    tbl.sing.push_back(sing);
    tbl.nonmin.push_back(nonmin);
    tbl.uw.push_back(uw);
    tbl.we.push_back(we);
  }
  return tbl;
}

Rat dejong_formula_raw(uint32_t q, int d) {
  ZetaData z = ZetaData::p1(q);
  Rat qm1(q - 1);
  return rat_pow(q, 10L * d + 2) / (qm1 * zeta_value(z, 10)) - rat_pow(q, 2L * d + 1) / (qm1 * zeta_value(z, 2));
}

Rat dejong_exact(uint32_t q, int d) {
  if (d < 2) throw invalid_input("the exact count is asserted only for d >= 2");
  return dejong_formula_raw(q, d);
}

std::pair<Rat, Rat> ec_asymptotic_terms(const ZetaData& z, int d) {
  if (d < 0) throw invalid_input("d must be >= 0");
  Rat pic = Rat(z.pic0());
  Rat qm1(z.q - 1);
  Rat main = pic * rat_pow(z.q, 10L * d + 2L * (1 - long(z.genus))) / (qm1 * zeta_value(z, 10));
  Rat secondary = pic * rat_pow(z.q, 2L * d + (1 - long(z.genus))) / (qm1 * zeta_value(z, 2));
  return {main, secondary};
}

std::pair<Rat, Rat> selmer_bounds(const ZetaData& z) {
  Rat prod = zeta_value(z, 2) * zeta_value(z, 10);
  return {Rat(1) + 2 * prod, Rat(1, 2) + prod};
}

double weil_zeta_bound(uint32_t q, uint32_t g, long s) {
  if (s <= 1) throw invalid_input("bound requires s >= 2");
  double qd = double(q);
  double num = std::pow(1.0 + std::pow(qd, 0.5 - double(s)), 2.0 * g);
  double den = (1.0 - std::pow(qd, -double(s))) * (1.0 - std::pow(qd, 1.0 - double(s)));
  return num / den;
}

Rat bun_pgl2_mass(const ZetaData& z) {
  return Rat(2) * rat_pow(z.q, 3L * (long(z.genus) - 1)) * zeta_value(z, 2);
}

}  // namespace ffec
