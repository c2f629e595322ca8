// Copyright (c) 2026 The ffec authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ffec/census.hpp"
#include "ffec/torsion.hpp"

using namespace ffec;

namespace {

// All affine points with coordinates in the constant field (d = 0 curves).
std::vector<AffinePoint> constant_points(const WeierstrassEq& E) {
  const Fq& F = E.field();
  std::vector<AffinePoint> pts;
  for (uint32_t x = 0; x < F.q(); ++x)
    for (uint32_t y = 0; y < F.q(); ++y) {
      uint32_t lhs = F.add(F.add(F.mul(y, y), F.mul(F.mul(E.a1.coeff(0), x), y)), F.mul(E.a3.coeff(0), y));
      uint32_t rhs = F.add(F.add(F.add(F.mul(F.mul(x, x), x), F.mul(E.a2.coeff(0), F.mul(x, x))), F.mul(E.a4.coeff(0), x)),
                           E.a6.coeff(0));
      if (lhs == rhs)
        pts.push_back({RatFun::of(Poly::constant(F, x)), RatFun::of(Poly::constant(F, y))});
    }
  return pts;
}

}  // namespace

TEST_CASE("char-2 negation on hand-checked points") {
  Fq F(2);
  WeierstrassEq E = WeierstrassEq::constants(F, 1, 0, 0, 0, 1);  // y^2+xy = x^3+1
  AffinePoint P{RatFun::of(Poly::constant(F, 0)), RatFun::of(Poly::constant(F, 1))};
  AffinePoint Q = char2_negation(E, P);
  CHECK(Q.x == P.x);
  CHECK(Q.y == P.y);  // (0,1) is 2-torsion

  WeierstrassEq E2 = WeierstrassEq::constants(F, 0, 0, 1, 0, 0);  // y^2+y = x^3
  AffinePoint O0{RatFun::of(Poly::constant(F, 0)), RatFun::of(Poly::constant(F, 0))};
  AffinePoint O1 = char2_negation(E2, O0);
  CHECK(O1.x == O0.x);
  CHECK(O1.y == RatFun::of(Poly::constant(F, 1)));

  AffinePoint off{RatFun::of(Poly::constant(F, 1)), RatFun::of(Poly::constant(F, 0))};
  CHECK_THROWS_AS(char2_negation(E2, off), invalid_input);
}

TEST_CASE("negation is an involution fixing exactly e2_order - 1 affine constant points") {
  for (uint32_t q : {2u, 4u}) {
    Fq F(q);
    IrreducibleTable table(F);
    uint64_t space = WeierstrassEq::space_size(F, 0);
    int examined = 0;
    for (uint64_t i = 0; i < space && examined < 64; ++i) {
      WeierstrassEq E = WeierstrassEq::from_index(F, 0, i);
      if (weq_is_gen_singular(E)) continue;
      ++examined;
      int e2 = e2_group_order(E, table).e2_order;
      int fixed = 0;
      for (const AffinePoint& P : constant_points(E)) {
        AffinePoint Q = char2_negation(E, P);
        AffinePoint R = char2_negation(E, Q);
        CHECK(R.x == P.x);
        CHECK(R.y == P.y);
        if (Q.x == P.x && Q.y == P.y) ++fixed;
      }
      CHECK(fixed == e2 - 1);
    }
    CHECK(examined > 0);
  }
}

TEST_CASE("char-2 criterion on the three named examples") {
  Fq F(2);
  auto [rhs1, sq1] = char2_criterion(WeierstrassEq::constants(F, 1, 0, 0, 0, 1));
  CHECK(rhs1 == BinaryForm::constant(F, 0, 1));  // a1^4 a6 = 1
  CHECK(sq1);

  auto [rhs2, sq2] = char2_criterion(WeierstrassEq::constants(F, 0, 0, 1, 0, 0));
  CHECK(rhs2.is_zero());
  CHECK(sq2);  // vacuous: a1 = 0, and the exact detector gives order 1

  Fq F3(3);
  CHECK_THROWS_AS(char2_criterion(WeierstrassEq::constants(F3, 0, 0, 0, 1, 0)), invalid_input);
}

TEST_CASE("exact 2-torsion orders") {
  Fq F3(3);
  IrreducibleTable t3(F3);
  CHECK(e2_group_order(WeierstrassEq::constants(F3, 0, 0, 0, -1, 0), t3).e2_order == 4);  // y^2 = x^3 - x

  Fq F2(2);
  IrreducibleTable t2(F2);
  TorsionReport r = e2_group_order(WeierstrassEq::constants(F2, 1, 0, 0, 0, 1), t2);
  CHECK(r.e2_order == 2);
  REQUIRE(r.witness_x.has_value());
  CHECK(r.witness_x->is_zero());  // x0 = a3/a1 = 0

  CHECK(e2_group_order(WeierstrassEq::constants(F2, 0, 0, 1, 0, 0), t2).e2_order == 1);

  CHECK_THROWS_AS(e2_group_order(WeierstrassEq::constants(F2, 0, 0, 0, 0, 0), t2), invalid_input);
}

TEST_CASE("criterion is necessary over the full q=2, d=0 minimal census") {
  Fq F(2);
  IrreducibleTable table(F);
  uint64_t space = WeierstrassEq::space_size(F, 0);
  for (uint64_t i = 0; i < space; ++i) {
    WeierstrassEq E = WeierstrassEq::from_index(F, 0, i);
    if (weq_is_gen_singular(E)) continue;
    TorsionReport r = e2_group_order(E, table);
    auto [rhs, sq] = char2_criterion(E);
    if (r.e2_order == 2) CHECK(sq);
  }
}

TEST_CASE("torsion census matches the per-class detector at q=2, d=0") {
  Fq F(2);
  IrreducibleTable table(F);
  TorsionScan scan = torsion_census(F, table, 0, CharCase::Auto, kDefaultCap);
  CensusReport rep = census_run(F, table, 0);
  CHECK(scan.mass == rep.torsion_weighted_mass);
  CHECK(scan.pass);
  CHECK(scan.bound == rat_pow(2, 5) / (Rat(1) * rat_pow(2, 3)));
}

TEST_CASE("torsion census matches the division-cubic detector at q=3, d=0") {
  Fq F(3);
  IrreducibleTable table(F);
  TorsionScan scan = torsion_census(F, table, 0, CharCase::Auto, kDefaultCap);
  CHECK(scan.pass);
  CHECK(scan.bound == rat_pow(3, 5) / (Rat(2) * rat_pow(3, 3)));

  // independent pipeline: sum 1/aut over census classes with e2 >= 2
  CensusReport rep = census_run(F, table, 0);
  CHECK(scan.mass == rep.torsion_weighted_mass);
  CHECK(scan.mass > 0);
}

TEST_CASE("torsion census guards and case checks") {
  Fq F2(2);
  IrreducibleTable t2(F2);
  CHECK_THROWS_AS(torsion_census(F2, t2, 0, CharCase::CharNot2, kDefaultCap), invalid_input);
  CHECK_THROWS_AS(torsion_census(F2, t2, 1, CharCase::Auto, /*cap=*/16), infeasible);
  Fq F3(3);
  IrreducibleTable t3(F3);
  CHECK_THROWS_AS(torsion_census(F3, t3, 0, CharCase::Char2, kDefaultCap), invalid_input);
}

TEST_CASE("selmer dimension bound") {
  CHECK(selmer_dim_bound(3, 0, 0).bound == 11);
  CHECK(selmer_dim_bound(0, 0, 0).bound == 2);
  CHECK(selmer_dim_bound(2, 1, 1).weak_genus_bound == 3 * 2 + 4 + 2);
  long prev = -1;
  for (long s = 0; s <= 10; ++s) {
    long b = selmer_dim_bound(s, 0, 0).bound;
    CHECK(b > prev);
    prev = b;
  }
  CHECK_THROWS_AS(selmer_dim_bound(-1, 0, 0), invalid_input);
}

TEST_CASE("weak selmer bound follows the displayed formula") {
  double v = weak_selmer_bound(2, 0, 2);
  double expect = 3.0 * (4.0 + 4.0 * std::sqrt(2.0)) + 2.0;
  CHECK(std::abs(v - expect) < 1e-12);
  CHECK_THROWS_AS(weak_selmer_bound(1, 0, 2), invalid_input);
  // o(n): the per-n ratio decays
  CHECK(weak_selmer_bound(1000000, 0, 2) / 1e6 < weak_selmer_bound(1000, 0, 2) / 1e3);
}
