// Copyright (c) 2026 The ffec authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "ffec/hw.hpp"

#include <algorithm>

namespace ffec {

namespace {

// Polynomial in x with F_q[t] coefficients (coefficient of x^i at slot i).
struct BiPoly {
  std::vector<Poly> c;

  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int deg_x() const { return c.empty() ? kNegInfDeg : int(c.size()) - 1; }
  const Poly& lead() const { return c.back(); }
};

BiPoly bi_make(std::vector<Poly> coeffs) {
  BiPoly b{std::move(coeffs)};
  b.trim();
  return b;
}

BiPoly bi_add(const Fq& F, const BiPoly& a, const BiPoly& b) {
  std::vector<Poly> r(std::max(a.c.size(), b.c.size()), Poly::zero(F));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.c.size()) r[i] = r[i] + a.c[i];
    if (i < b.c.size()) r[i] = r[i] + b.c[i];
  }
  return bi_make(std::move(r));
}

BiPoly bi_mul(const Fq& F, const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Poly> r(a.c.size() + b.c.size() - 1, Poly::zero(F));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      if (!b.c[j].is_zero()) r[i + j] = r[i + j] + a.c[i] * b.c[j];
  }
  return bi_make(std::move(r));
}

BiPoly bi_deriv_x(const Fq& F, const BiPoly& a) {
  if (a.c.size() <= 1) return {};
  std::vector<Poly> r(a.c.size() - 1, Poly::zero(F));
  for (size_t i = 1; i < a.c.size(); ++i) r[i - 1] = a.c[i].scaled(F.of_int(long(i)));
  return bi_make(std::move(r));
}

BiPoly bi_scaled(const BiPoly& a, uint32_t s) {
  std::vector<Poly> r = a.c;
  for (Poly& p : r) p = p.scaled(s);
  return bi_make(std::move(r));
}

// Strip the F_q[t]-content so coefficient degrees stay small.
BiPoly bi_primitive(const BiPoly& a) {
  if (a.is_zero()) return a;
  Poly g = Poly::zero(a.c[0].field());
  for (const Poly& p : a.c) g = Poly::gcd(g, p);
  if (g.degree() <= 0) return a;
  std::vector<Poly> r = a.c;
  for (Poly& p : r) p = p.is_zero() ? p : Poly::div_exact(p, g);
  return bi_make(std::move(r));
}

// Pseudo-remainder: lc(B)^{degA-degB+1} * A mod B.
BiPoly bi_prem(const Fq& F, BiPoly A, const BiPoly& B) {
  int dB = B.deg_x();
  while (!A.is_zero() && A.deg_x() >= dB) {
    int shift = A.deg_x() - dB;
    Poly leadA = A.lead();
    // A <- lc(B) * A - lc(A) x^shift * B
    std::vector<Poly> r(A.c.size(), Poly::zero(F));
    for (size_t i = 0; i < A.c.size(); ++i) r[i] = A.c[i] * B.lead();
    for (size_t j = 0; j < B.c.size(); ++j)
      r[size_t(shift) + j] = r[size_t(shift) + j] - leadA * B.c[j];
    A = bi_make(std::move(r));
    if (A.deg_x() == dB + shift) throw std::logic_error("pseudo-division failed to reduce the degree");
  }
  return A;
}

// Common root over the closure of F_q(t). Not both zero.
bool bi_common_root(const Fq& F, BiPoly A, BiPoly B) {
  if (A.is_zero() && B.is_zero()) throw std::logic_error("common-root test on two zero polynomials");
  if (A.is_zero()) return B.deg_x() >= 1;
  if (B.is_zero()) return A.deg_x() >= 1;
  if (A.deg_x() < B.deg_x()) std::swap(A, B);
  while (true) {
    if (B.deg_x() == 0) return false;
    BiPoly R = bi_prem(F, A, B);
    if (R.is_zero()) return true;
    A = std::move(B);
    B = bi_primitive(R);
    if (A.deg_x() < B.deg_x()) std::swap(A, B);
  }
}

struct Charts {
  BiPoly p, f;       // chart Z != 0
  BiPoly p_rev, f_rev;  // chart X != 0
};

Charts hw_charts(const HWModel& H) {
  const Fq& F = H.field();
  auto poly_of = [&](const BinaryForm& f) { return f.dehom(); };
  Charts ch;
  ch.p = bi_make({poly_of(H.a[2]), poly_of(H.a[1]), poly_of(H.a[0])});
  ch.p_rev = bi_make({poly_of(H.a[0]), poly_of(H.a[1]), poly_of(H.a[2])});
  ch.f = bi_make({poly_of(H.c[4]), poly_of(H.c[3]), poly_of(H.c[2]), poly_of(H.c[1]), poly_of(H.c[0])});
  ch.f_rev = bi_make({poly_of(H.c[0]), poly_of(H.c[1]), poly_of(H.c[2]), poly_of(H.c[3]), poly_of(H.c[4])});
  (void)F;
  return ch;
}

// char 2: a singular point on the chart requires p(x0) = 0 together with
// p'(x0)^2 f(x0) = f'(x0)^2.
std::optional<std::string> char2_chart_singular(const Fq& F, const BiPoly& p, const BiPoly& f, const char* chart) {
  BiPoly pd = bi_deriv_x(F, p), fd = bi_deriv_x(F, f);
  BiPoly g = bi_add(F, bi_mul(F, bi_mul(F, pd, pd), f), bi_mul(F, fd, fd));
  if (g.is_zero()) {
    if (p.deg_x() >= 1) return std::string(chart) + ": every root of the Y-coefficient is singular";
    return std::nullopt;
  }
  if (bi_common_root(F, p, g))
    return std::string(chart) + ": the Y-coefficient shares a root with p'^2 f + f'^2";
  return std::nullopt;
}

std::optional<std::string> odd_chart_singular(const Fq& F, const BiPoly& q4, const char* chart) {
  BiPoly qd = bi_deriv_x(F, q4);
  if (qd.is_zero()) {
    if (q4.deg_x() >= 1) return std::string(chart) + ": inseparable quartic";
    return std::nullopt;
  }
  if (bi_common_root(F, q4, qd)) return std::string(chart) + ": repeated root of the completed-square quartic";
  return std::nullopt;
}

}  // namespace

HWModel hw_new(int d, int u, std::array<BinaryForm, 3> a, std::array<BinaryForm, 5> c) {
  if (d < 0) throw invalid_input("Hodge degree must be >= 0");
  if (u > 0) throw invalid_input("unstable degree must be <= 0");
  for (int i = 0; i < 3; ++i) {
    int deg = HWModel::a_slot_degree(d, u, i);
    if (deg < 0) {
      if (!a[size_t(i)].is_zero()) throw invalid_input("negative-degree a-slot must hold the zero form");
    } else if (a[size_t(i)].n() != deg) {
      throw invalid_input("a-slot form degree mismatch");
    }
  }
  for (int j = 0; j < 5; ++j) {
    int deg = HWModel::c_slot_degree(d, u, j);
    if (deg < 0) {
      if (!c[size_t(j)].is_zero()) throw invalid_input("negative-degree c-slot must hold the zero form");
    } else if (c[size_t(j)].n() != deg) {
      throw invalid_input("c-slot form degree mismatch");
    }
  }
  HWModel H;
  H.d = d;
  H.u = u;
  H.a = std::move(a);
  H.c = std::move(c);
  return H;
}

HWClassification hw_is_generically_smooth(const HWModel& H) {
  const Fq& F = H.field();
  bool p_zero = H.a[0].is_zero() && H.a[1].is_zero() && H.a[2].is_zero();
  Charts ch = hw_charts(H);

  if (F.p() == 2) {
    if (p_zero) {
      // Y^2 = f: an inseparable double cover; never smooth in char 2
      return {false, "Y-coefficient vanishes identically (inseparable cover)"};
    }
    if (auto w = char2_chart_singular(F, ch.p, ch.f, "chart Z=1")) return {false, *w};
    if (auto w = char2_chart_singular(F, ch.p_rev, ch.f_rev, "chart X=1")) return {false, *w};
    return {true, std::nullopt};
  }

  // odd characteristic: complete the square; smooth iff 4f + p^2 is a
  // squarefree binary quartic
  BiPoly q1 = bi_add(F, bi_scaled(ch.f, F.of_int(4)), bi_mul(F, ch.p, ch.p));
  BiPoly q2 = bi_add(F, bi_scaled(ch.f_rev, F.of_int(4)), bi_mul(F, ch.p_rev, ch.p_rev));
  if (q1.is_zero()) return {false, "completed square vanishes identically (non-reduced curve)"};
  if (auto w = odd_chart_singular(F, q1, "chart Z=1")) return {false, *w};
  if (auto w = odd_chart_singular(F, q2, "chart X=1")) return {false, *w};
  return {true, std::nullopt};
}

HWModel hw_from_weierstrass(const WeierstrassEq& E) {
  const Fq& F = E.field();
  int d = E.d, u = -2 * E.d;
  auto slot_a = [&](int i, const Poly& p) { return BinaryForm::from_poly(p, std::max(HWModel::a_slot_degree(d, u, i), 0)); };
  auto slot_c = [&](int j, const Poly& p) { return BinaryForm::from_poly(p, std::max(HWModel::c_slot_degree(d, u, j), 0)); };
  std::array<BinaryForm, 3> a = {slot_a(0, E.a3.dehom()), slot_a(1, E.a1.dehom()), slot_a(2, Poly::zero(F))};
  std::array<BinaryForm, 5> c = {slot_c(0, E.a6.dehom()), slot_c(1, E.a4.dehom()), slot_c(2, E.a2.dehom()),
                                 slot_c(3, Poly::constant(F, 1)), slot_c(4, Poly::zero(F))};
  return hw_new(d, u, std::move(a), std::move(c));
}

long hw_rank_Bn(int n) {
  if (n < 0) throw invalid_input("monomial degree must be >= 0");
  long count = 0;
  for (int b = 0; 2 * b <= n; ++b) count += long(n - 2 * b) + 1;  // choices of (a, c) with a + c = n - 2b
  return count;
}

std::array<int, 9> hw_graded_degrees(int d, int u) {
  std::array<int, 9> out;
  for (int i = 0; i <= 4; ++i) out[size_t(i)] = (i - 2) * u + 2 * d;
  for (int i = 5; i <= 7; ++i) out[size_t(i)] = (i - 6) * u + d;
  out[8] = 0;
  return out;
}

Int hw_count_split_sections(uint32_t q, int d, int u) {
  std::array<int, 9> degs = hw_graded_degrees(d, u);
  Int total(1);
  for (int i = 0; i < 8; ++i) {
    int h0 = std::max(degs[size_t(i)] + 1, 0);
    total *= int_pow(Int(q), static_cast<unsigned long>(h0));
  }
  return total;
}

std::pair<int, int> admissible_u_range(int d, int g, uint32_t p) {
  if (d < 0 || g < 0) throw invalid_input("d and g must be >= 0");
  return {p == 2 ? -(d + g) : -d, 0};
}

HWModel hw_from_index(const Fq& F, int d, int u, uint64_t idx) {
  std::array<int, 9> degs = hw_graded_degrees(d, u);
  // slot order: c0..c4 then a0..a2 (graded pieces 0..7)
  auto take = [&](int slot_deg) {
    if (slot_deg < 0) return BinaryForm(F, 0);
    uint64_t sz = BinaryForm::space_size(F, slot_deg);
    BinaryForm f = BinaryForm::from_index(F, slot_deg, idx % sz);
    idx /= sz;
    return f;
  };
  std::array<BinaryForm, 5> c;
  std::array<BinaryForm, 3> a;
  for (int j = 0; j < 5; ++j) c[size_t(j)] = take(degs[size_t(j)]);
  for (int i = 0; i < 3; ++i) a[size_t(i)] = take(degs[size_t(5 + i)]);
  if (idx != 0) throw invalid_input("hW model index out of range");
  return hw_new(d, u, std::move(a), std::move(c));
}

HWEnumSummary hw_enumerate(const Fq& F, int d, int u, uint64_t cap) {
  if (u > 0) throw invalid_input("unstable degree must be <= 0");
  Int total_big = hw_count_split_sections(F.q(), d, u);
  if (total_big > Int(static_cast<unsigned long>(cap))) throw infeasible("hW section space exceeds the cap");
  uint64_t total = total_big.get_ui();
  HWEnumSummary sum{Int(0), Int(0)};
  for (uint64_t i = 0; i < total; ++i) {
    HWModel H = hw_from_index(F, d, u, i);
    ++sum.total;
    if (hw_is_generically_smooth(H).generically_smooth) ++sum.generically_smooth;
  }
  return sum;
}

}  // namespace ffec
