// Copyright (c) 2026 The ffec authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "ffec/torsion.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace ffec {

AffinePoint char2_negation(const WeierstrassEq& E, const AffinePoint& P) {
  const Fq& F = E.field();
  if (F.p() != 2) throw invalid_input("negation map provided for characteristic 2 only");
  RatFun a1 = RatFun::of(E.a1.dehom()), a2 = RatFun::of(E.a2.dehom()), a3 = RatFun::of(E.a3.dehom()),
         a4 = RatFun::of(E.a4.dehom()), a6 = RatFun::of(E.a6.dehom());
  RatFun lhs = P.y * P.y + a1 * P.x * P.y + a3 * P.y;
  RatFun rhs = P.x * P.x * P.x + a2 * P.x * P.x + a4 * P.x + a6;
  if (!(lhs == rhs)) throw invalid_input("point is not on the curve");
  return {P.x, P.y + a1 * P.x + a3};
}

std::pair<BinaryForm, bool> char2_criterion(const WeierstrassEq& E) {
  const Fq& F = E.field();
  if (F.p() != 2) throw invalid_input("criterion applies in characteristic 2 only");
  const BinaryForm &a1 = E.a1, &a2 = E.a2, &a3 = E.a3, &a4 = E.a4, &a6 = E.a6;
  BinaryForm a1sq = a1 * a1;
  BinaryForm rhs = a1 * a3 * a3 * a3 + a1sq * a2 * a3 * a3 + a1sq * a1 * a3 * a4 + a1sq * a1sq * a6;
  bool sq = is_square_ratfun(rhs.dehom(), Poly::constant(F, 1));
  return {rhs, sq};
}

TorsionReport e2_group_order(const WeierstrassEq& E_in, const IrreducibleTable& table) {
  const Fq& F = E_in.field();
  if (weq_is_gen_singular(E_in)) throw invalid_input("torsion of a generically singular equation");
  WeierstrassEq E = weq_minimize(E_in, table).first;

  TorsionReport rep;
  if (F.p() == 2) {
    auto [rhs, sq] = char2_criterion(E);
    rep.criterion_rhs = rhs;
    if (E.a1.is_zero()) {
      rep.e2_order = 1;
      return rep;
    }
    // candidate fixed x-coordinate x0 = a3/a1; 2-torsion present iff
    // x0^3 + a2 x0^2 + a4 x0 + a6 is a square in K, equivalently iff the
    // cleared polynomial rhs is
    if (sq) {
      rep.e2_order = 2;
      rep.witness_x = RatFun(E.a3.dehom(), E.a1.dehom());
    }
    return rep;
  }

  // char != 2: count roots of the 2-division cubic among sections of O(2d)
  WeqInvariants I = weq_invariants(E);
  int d = E.d;
  RRSpaceIter sx(F, 2 * d);
  int roots = 0;
  for (uint64_t i = 0; i < sx.size(); ++i) {
    BinaryForm x = sx.at(i);
    BinaryForm val = (x * x * x).scaled(F.of_int(4)) + I.b2 * x * x + (I.b4 * x).scaled(F.of_int(2)) + I.b6;
    if (val.is_zero()) {
      ++roots;
      if (!rep.witness_x) rep.witness_x = RatFun::of(x.dehom());
    }
  }
  // a separable cubic cannot have exactly two rational roots
  if (roots != 0 && roots != 1 && roots != 3) throw std::logic_error("2-division cubic root count out of range");
  rep.e2_order = 1 + roots;
  return rep;
}

namespace {

struct OrbitTally {
  Rat mass = Rat(0);
  uint64_t classes = 0;
};

// Deduplicate a group-invariant set of equations into orbits and return
// the weighted class mass.
OrbitTally orbit_mass(const Fq& F, int d, std::vector<uint64_t>& survivors) {
  OrbitTally tally;
  std::sort(survivors.begin(), survivors.end());
  std::unordered_set<uint64_t> visited;
  WeqTransformIter group(F, d);
  for (uint64_t idx : survivors) {
    if (visited.count(idx)) continue;
    WeierstrassEq E = WeierstrassEq::from_index(F, d, idx);
    uint64_t orbit = 0;
    for (uint64_t gi = 0; gi < group.size(); ++gi) {
      uint64_t img = weq_transform(E, group.at(gi)).index();
      if (visited.insert(img).second) ++orbit;
    }
    uint64_t aut = group.size() / orbit;
    if (aut * orbit != group.size()) throw std::logic_error("orbit size does not divide the group order");
    tally.mass += Rat(1) / Rat(long(aut));
    ++tally.classes;
  }
  return tally;
}

bool is_minimal_smooth(const WeierstrassEq& E, const IrreducibleTable& table) {
  if (weq_is_gen_singular(E)) return false;
  auto [mini, div] = weq_minimize(E, table);
  (void)mini;
  return div.degree() == 0;
}

}  // namespace

TorsionScan torsion_census(const Fq& F, const IrreducibleTable& table, int d, CharCase ccase, uint64_t cap) {
  if (d < 0) throw invalid_input("twist degree must be >= 0");
  bool char2 = ccase == CharCase::Char2 || (ccase == CharCase::Auto && F.p() == 2);
  if (char2 && F.p() != 2) throw invalid_input("char-2 scan requires p = 2");
  if (ccase == CharCase::CharNot2 && F.p() == 2) throw invalid_input("char-not-2 scan requires p != 2");

  Rat group_order = Rat(F.q() - 1) * rat_pow(F.q(), 6L * d + 3);
  TorsionScan out;
  out.bound = rat_pow(F.q(), (char2 ? 15L : 12L) * d + 5) / group_order;

  std::vector<uint64_t> survivors;
  if (char2) {
    RRSpaceIter zs(F, 5 * d), a1s(F, d), a2s(F, 2 * d), a3s(F, 3 * d), a4s(F, 4 * d);
    uint64_t space = zs.size() * a1s.size() * a2s.size() * a3s.size() * a4s.size();
    if (space > cap) throw infeasible("torsion census parameter space exceeds the cap");
    for (uint64_t i1 = 0; i1 < a1s.size(); ++i1) {
      BinaryForm a1 = a1s.at(i1);
      if (a1.is_zero()) continue;
      Poly a1p = a1.dehom();
      Poly a1p4 = a1p * a1p;
      a1p4 = a1p4 * a1p4;
      BinaryForm a1sq = a1 * a1;
      for (uint64_t i3 = 0; i3 < a3s.size(); ++i3) {
        BinaryForm a3 = a3s.at(i3);
        for (uint64_t i2 = 0; i2 < a2s.size(); ++i2) {
          BinaryForm a2 = a2s.at(i2);
          for (uint64_t i4 = 0; i4 < a4s.size(); ++i4) {
            BinaryForm a4 = a4s.at(i4);
            BinaryForm partial = a1 * a3 * a3 * a3 + a1sq * a2 * a3 * a3 + a1sq * a1 * a3 * a4;
            for (uint64_t iz = 0; iz < zs.size(); ++iz) {
              BinaryForm z = zs.at(iz);
              // solve a1^4 a6 = z^2 + partial for a6 as a form of degree 6d
              BinaryForm num = z * z + partial;
              Poly nump = num.dehom();
              Poly a6p;
              if (nump.is_zero()) {
                a6p = Poly::zero(F);
              } else {
                auto [qq, rr] = Poly::divrem(nump, a1p4);
                if (!rr.is_zero() || qq.degree() > 6 * d) continue;
                a6p = qq;
              }
              WeierstrassEq E(d, a1, a2, a3, a4, BinaryForm::from_poly(a6p, 6 * d));
              if (!is_minimal_smooth(E, table)) continue;
              if (e2_group_order(E, table).e2_order < 2) continue;
              survivors.push_back(E.index());
            }
          }
        }
      }
    }
  } else {
    RRSpaceIter sxs(F, 2 * d), sys(F, 3 * d), a1s(F, d), a2s(F, 2 * d), a4s(F, 4 * d);
    uint64_t space = sxs.size() * sys.size() * a1s.size() * a2s.size() * a4s.size();
    if (space > cap) throw infeasible("torsion census parameter space exceeds the cap");
    for (uint64_t isx = 0; isx < sxs.size(); ++isx) {
      BinaryForm sx = sxs.at(isx);
      for (uint64_t isy = 0; isy < sys.size(); ++isy) {
        BinaryForm sy = sys.at(isy);
        for (uint64_t i1 = 0; i1 < a1s.size(); ++i1) {
          BinaryForm a1 = a1s.at(i1);
          BinaryForm a3 = -(sy.scaled(F.of_int(2)) + a1 * sx);
          for (uint64_t i2 = 0; i2 < a2s.size(); ++i2) {
            BinaryForm a2 = a2s.at(i2);
            for (uint64_t i4 = 0; i4 < a4s.size(); ++i4) {
              BinaryForm a4 = a4s.at(i4);
              BinaryForm a6 = -(sy * sy + sx * sx * sx + a2 * sx * sx + a4 * sx);
              WeierstrassEq E(d, a1, a2, a3, a4, a6);
              if (!is_minimal_smooth(E, table)) continue;
              if (e2_group_order(E, table).e2_order < 2) continue;
              survivors.push_back(E.index());
            }
          }
        }
      }
    }
  }

  std::sort(survivors.begin(), survivors.end());
  survivors.erase(std::unique(survivors.begin(), survivors.end()), survivors.end());
  out.equations = survivors.size();
  OrbitTally tally = orbit_mass(F, d, survivors);
  out.mass = tally.mass;
  out.classes = tally.classes;
  out.pass = out.mass <= out.bound;
  return out;
}

SelmerDimBound selmer_dim_bound(long num_bad_places, long g, long dim_pic2) {
  if (num_bad_places < 0 || g < 0 || dim_pic2 < 0) throw invalid_input("bound inputs must be >= 0");
  return {3 * num_bad_places + 2 * dim_pic2 + 2, 3 * num_bad_places + 4 * g + 2};
}

double weak_selmer_bound(long n, long g, uint32_t q) {
  if (n < 2) throw invalid_input("conductor degree must be >= 2");
  double qd = double(q), nd = double(n), gd = double(g);
  double inner = 2.0 * nd * std::log(qd) / std::log(nd) + (2.0 * gd + 2.0) * qd / (qd - 1.0) * std::sqrt(nd);
  return 3.0 * inner + 4.0 * gd + 2.0;
}

}  // namespace ffec
