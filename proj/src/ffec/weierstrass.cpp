// Copyright (c) 2026 The ffec authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "ffec/weierstrass.hpp"

#include <cassert>

namespace ffec {

namespace {

BinaryForm ints_times(const BinaryForm& f, long c) { return f.scaled(f.field().of_int(c)); }

// True when f vanishes to order >= k at v (the zero form counts).
bool vanishes(const BinaryForm& f, const Place& v, int k) {
  if (f.is_zero()) return true;
  return form_valuation(f, v) >= k;
}

// Divide out pi^i at a finite place, or drop the degree tag at infinity.
BinaryForm unscale(const BinaryForm& f, const Place& v, int i, int new_deg) {
  const Fq& F = f.field();
  if (f.is_zero()) return BinaryForm(F, new_deg);
  Poly p = f.dehom();
  if (!v.infinity) {
    for (int j = 0; j < i; ++j) p = Poly::div_exact(p, v.pi);
  }
  return BinaryForm::from_poly(p, new_deg);
}

}  // namespace

WeierstrassEq::WeierstrassEq(int d_, BinaryForm a1_, BinaryForm a2_, BinaryForm a3_, BinaryForm a4_, BinaryForm a6_)
    : d(d_), a1(std::move(a1_)), a2(std::move(a2_)), a3(std::move(a3_)), a4(std::move(a4_)), a6(std::move(a6_)) {
  if (d < 0) throw invalid_input("twist degree must be >= 0");
  if (a1.n() != d || a2.n() != 2 * d || a3.n() != 3 * d || a4.n() != 4 * d || a6.n() != 6 * d)
    throw invalid_input("coefficient form degrees must be (d, 2d, 3d, 4d, 6d)");
}

WeierstrassEq WeierstrassEq::constants(const Fq& F, long a1, long a2, long a3, long a4, long a6) {
  return WeierstrassEq(0, BinaryForm::constant(F, 0, F.of_int(a1)), BinaryForm::constant(F, 0, F.of_int(a2)),
                       BinaryForm::constant(F, 0, F.of_int(a3)), BinaryForm::constant(F, 0, F.of_int(a4)),
                       BinaryForm::constant(F, 0, F.of_int(a6)));
}

uint64_t WeierstrassEq::index() const {
  const Fq& F = field();
  uint64_t idx = 0;
  const BinaryForm* slots[5] = {&a6, &a4, &a3, &a2, &a1};
  for (const BinaryForm* f : slots)
    for (size_t i = f->coeffs().size(); i-- > 0;) idx = idx * F.q() + f->coeff(i);
  return idx;
}

WeierstrassEq WeierstrassEq::from_index(const Fq& F, int d, uint64_t idx) {
  auto take = [&](int n) {
    BinaryForm f(F, n);
    std::vector<uint32_t> c(size_t(n) + 1);
    for (int i = 0; i <= n; ++i) {
      c[size_t(i)] = uint32_t(idx % F.q());
      idx /= F.q();
    }
    return BinaryForm(F, n, std::move(c));
  };
  BinaryForm a1 = take(d), a2 = take(2 * d), a3 = take(3 * d), a4 = take(4 * d), a6 = take(6 * d);
  if (idx != 0) throw invalid_input("equation index out of range");
  return WeierstrassEq(d, std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6));
}

uint64_t WeierstrassEq::space_size(const Fq& F, int d) {
  uint64_t s = 1;
  for (int i = 0; i < 16 * d + 5; ++i) {
    if (s > (uint64_t(1) << 62) / F.q()) throw infeasible("equation space too large to index");
    s *= F.q();
  }
  return s;
}

bool WeierstrassEq::operator==(const WeierstrassEq& o) const {
  return d == o.d && a1 == o.a1 && a2 == o.a2 && a3 == o.a3 && a4 == o.a4 && a6 == o.a6;
}

WeqInvariants weq_invariants(const WeierstrassEq& E) {
  WeqInvariants I;
  const BinaryForm &a1 = E.a1, &a2 = E.a2, &a3 = E.a3, &a4 = E.a4, &a6 = E.a6;
  I.b2 = a1 * a1 + ints_times(a2, 4);
  I.b4 = ints_times(a4, 2) + a1 * a3;
  I.b6 = a3 * a3 + ints_times(a6, 4);
  I.b8 = a1 * a1 * a6 + ints_times(a2 * a6, 4) - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  I.delta = -(I.b2 * I.b2 * I.b8) - ints_times(I.b4 * I.b4 * I.b4, 8) - ints_times(I.b6 * I.b6, 27) +
            ints_times(I.b2 * I.b4 * I.b6, 9);
  I.c4 = I.b2 * I.b2 - ints_times(I.b4, 24);
  I.c6 = -(I.b2 * I.b2 * I.b2) + ints_times(I.b2 * I.b4, 36) - ints_times(I.b6, 216);
  return I;
}

bool weq_is_gen_singular(const WeierstrassEq& E) { return weq_invariants(E).delta.is_zero(); }

std::optional<std::pair<BinaryForm, BinaryForm>> weq_singular_section(const WeierstrassEq& E) {
  const Fq& F = E.field();
  int d = E.d;
  RRSpaceIter xs(F, 2 * d), ys(F, 3 * d);
  // F_X = a1 sy - (3 sx^2 + 2 a2 sx + a4), F_Y = 2 sy + a1 sx + a3,
  // F   = sy^2 + a1 sx sy + a3 sy - (sx^3 + a2 sx^2 + a4 sx + a6)
  for (uint64_t ix = 0; ix < xs.size(); ++ix) {
    BinaryForm sx = xs.at(ix);
    for (uint64_t iy = 0; iy < ys.size(); ++iy) {
      BinaryForm sy = ys.at(iy);
      BinaryForm fy = sy.scaled(F.of_int(2)) + E.a1 * sx + E.a3;
      if (!fy.is_zero()) continue;
      BinaryForm fx = E.a1 * sy - ((sx * sx).scaled(F.of_int(3)) + (E.a2 * sx).scaled(F.of_int(2)) + E.a4);
      if (!fx.is_zero()) continue;
      BinaryForm f0 = sy * sy + E.a1 * sx * sy + E.a3 * sy - (sx * sx * sx + E.a2 * sx * sx + E.a4 * sx + E.a6);
      if (!f0.is_zero()) continue;
      return std::make_pair(sx, sy);
    }
  }
  return std::nullopt;
}

WeqTransform WeqTransform::identity(const Fq& F, int d) {
  WeqTransform g;
  g.u = 1;
  g.r = BinaryForm(F, 2 * d);
  g.s = BinaryForm(F, d);
  g.t = BinaryForm(F, 3 * d);
  return g;
}

WeqTransform WeqTransform::then(const WeqTransform& first, const WeqTransform& second) {
  const Fq& F = first.r.field();
  WeqTransform g;
  g.u = F.mul(first.u, second.u);
  uint32_t u1 = first.u, u1sq = F.mul(u1, u1), u1cb = F.mul(u1sq, u1);
  g.r = first.r + second.r.scaled(u1sq);
  g.s = first.s + second.s.scaled(u1);
  g.t = first.t + second.r.scaled(u1sq) * first.s + second.t.scaled(u1cb);
  return g;
}

WeierstrassEq weq_transform(const WeierstrassEq& E, const WeqTransform& g) {
  const Fq& F = E.field();
  int d = E.d;
  if (g.r.n() != 2 * d || g.s.n() != d || g.t.n() != 3 * d) throw invalid_input("transform degree mismatch");
  if (g.u == 0) throw invalid_input("transform scalar must be a unit");
  const BinaryForm &a1 = E.a1, &a2 = E.a2, &a3 = E.a3, &a4 = E.a4, &a6 = E.a6;
  const BinaryForm &r = g.r, &s = g.s, &t = g.t;

  BinaryForm n1 = a1 + ints_times(s, 2);
  BinaryForm n2 = a2 - s * a1 + ints_times(r, 3) - s * s;
  BinaryForm n3 = a3 + r * a1 + ints_times(t, 2);
  BinaryForm n4 = a4 - s * a3 + ints_times(r * a2, 2) - (t + r * s) * a1 + ints_times(r * r, 3) - ints_times(s * t, 2);
  BinaryForm n6 = a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1;

  uint32_t ui = F.inv(g.u);
  uint32_t ui2 = F.mul(ui, ui), ui3 = F.mul(ui2, ui), ui4 = F.mul(ui2, ui2), ui6 = F.mul(ui3, ui3);
  return WeierstrassEq(d, n1.scaled(ui), n2.scaled(ui2), n3.scaled(ui3), n4.scaled(ui4), n6.scaled(ui6));
}

WeqTransformIter::WeqTransformIter(const Fq& F, int d) : F_(&F), d_(d) {
  nr_ = BinaryForm::space_size(F, 2 * d);
  ns_ = BinaryForm::space_size(F, d);
  nt_ = BinaryForm::space_size(F, 3 * d);
  size_ = uint64_t(F.q() - 1) * nr_ * ns_ * nt_;
}

WeqTransform WeqTransformIter::at(uint64_t i) const {
  WeqTransform g;
  g.s = BinaryForm::from_index(*F_, d_, i % ns_);
  i /= ns_;
  g.r = BinaryForm::from_index(*F_, 2 * d_, i % nr_);
  i /= nr_;
  g.t = BinaryForm::from_index(*F_, 3 * d_, i % nt_);
  i /= nt_;
  g.u = uint32_t(i) + 1;
  return g;
}

std::optional<WeierstrassEq> weq_scaling_witness(const WeierstrassEq& E, const Place& v) {
  const Fq& F = E.field();
  int d = E.d, e = v.deg();
  if (d - e < 0) return std::nullopt;

  // Scan the global substitution group (u = 1 suffices: unit scalars do not
  // affect divisibility) in layers with early pruning.
  RRSpaceIter rs(F, 2 * d), ss(F, d), ts(F, 3 * d);
  for (uint64_t is = 0; is < ss.size(); ++is) {
    BinaryForm s = ss.at(is);
    BinaryForm n1 = E.a1 + ints_times(s, 2);
    if (!vanishes(n1, v, 1)) continue;
    for (uint64_t ir = 0; ir < rs.size(); ++ir) {
      BinaryForm r = rs.at(ir);
      BinaryForm n2 = E.a2 - s * E.a1 + ints_times(r, 3) - s * s;
      if (!vanishes(n2, v, 2)) continue;
      for (uint64_t it = 0; it < ts.size(); ++it) {
        BinaryForm t = ts.at(it);
        BinaryForm n3 = E.a3 + r * E.a1 + ints_times(t, 2);
        if (!vanishes(n3, v, 3)) continue;
        BinaryForm n4 =
            E.a4 - s * E.a3 + ints_times(r * E.a2, 2) - (t + r * s) * E.a1 + ints_times(r * r, 3) - ints_times(s * t, 2);
        if (!vanishes(n4, v, 4)) continue;
        BinaryForm n6 = E.a6 + r * E.a4 + r * r * E.a2 + r * r * r - t * E.a3 - t * t - r * t * E.a1;
        if (!vanishes(n6, v, 6)) continue;
        int nd = d - e;
        return WeierstrassEq(nd, unscale(n1, v, 1, nd), unscale(n2, v, 2, 2 * nd), unscale(n3, v, 3, 3 * nd),
                             unscale(n4, v, 4, 4 * nd), unscale(n6, v, 6, 6 * nd));
      }
    }
  }
  return std::nullopt;
}

std::optional<WeierstrassEq> weq_local_min_step(const WeierstrassEq& E, const Place& v) {
  WeqInvariants I = weq_invariants(E);
  if (I.delta.is_zero()) throw invalid_input("minimality step requires a generically smooth equation");
  if (form_valuation(I.delta, v) < 12) return std::nullopt;
  assert(E.d - v.deg() >= 0);
  return weq_scaling_witness(E, v);
}

std::pair<WeierstrassEq, DivisorZ> weq_minimize(const WeierstrassEq& E, const IrreducibleTable& table) {
  WeierstrassEq cur = E;
  DivisorZ scaling;
  bool progress = true;
  while (progress) {
    progress = false;
    WeqInvariants I = weq_invariants(cur);
    if (I.delta.is_zero()) throw invalid_input("minimization requires a generically smooth equation");
    int degD = I.delta.n();
    for (int e = 1; 12 * e <= degD && !progress; ++e) {
      for (const Poly& pi : table.of_degree(e)) {
        Place v = Place::finite(pi);
        if (form_valuation(I.delta, v) < 12) continue;
        auto step = weq_local_min_step(cur, v);
        if (step) {
          cur = *step;
          scaling.add(v, 1);
          progress = true;
          break;
        }
      }
    }
    if (!progress && form_valuation(I.delta, Place::inf()) >= 12) {
      auto step = weq_local_min_step(cur, Place::inf());
      if (step) {
        cur = *step;
        scaling.add(Place::inf(), 1);
        progress = true;
      }
    }
  }
  return {cur, scaling};
}

int weq_height(const WeierstrassEq& E, const IrreducibleTable& table) {
  if (weq_is_gen_singular(E)) throw invalid_input("height of a generically singular equation");
  return weq_minimize(E, table).first.d;
}

}  // namespace ffec
