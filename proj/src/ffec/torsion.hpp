// Copyright (c) 2026 The ffec authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef FFEC_TORSION_HPP
#define FFEC_TORSION_HPP

#include <optional>

#include "ffec/weierstrass.hpp"

namespace ffec {

// Affine K-point (x, y) on the generic fiber.
struct AffinePoint {
  RatFun x, y;
};

// Rational 2-torsion data of the generic fiber.
struct TorsionReport {
  int e2_order = 1;  // 1, 2 or 4 (char 2: 1 or 2)
  std::optional<RatFun> witness_x;
  std::optional<BinaryForm> criterion_rhs;  // char 2 only, a section of L^10
};

// char 2: the involution [X, Y + a1 X + a3 Z, Z]; requires the point to lie
// on the curve. Fixed points are exactly the nonzero 2-torsion.
AffinePoint char2_negation(const WeierstrassEq& E, const AffinePoint& P);

// char 2: rhs = a1 a3^3 + a1^2 a2 a3^2 + a1^3 a3 a4 + a1^4 a6 (degree 10d)
// and whether it is a square in K. E[2](K) != 0 implies is_square.
std::pair<BinaryForm, bool> char2_criterion(const WeierstrassEq& E);

// Exact order of E[2](K) for a generically smooth equation. Non-minimal
// inputs are minimized first.
TorsionReport e2_group_order(const WeierstrassEq& E, const IrreducibleTable& table);

enum class CharCase { Auto, Char2, CharNot2 };

// Parameterized census of minimal smooth classes with E[2](K) != 0 at twist
// degree d, deduplicated by canonical form. `bound` is the proof's quotient
// q^{Cd+5}/((q-1)q^{6d+3}) with C = 15 (char 2) or 12 (char != 2).
struct TorsionScan {
  Rat mass;
  Rat bound;
  bool pass;
  uint64_t classes;
  uint64_t equations;  // surviving equations before deduplication
};
TorsionScan torsion_census(const Fq& F, const IrreducibleTable& table, int d, CharCase ccase, uint64_t cap);

// 3 #S + 2 dim_F2 Pic^0(B)[2] + 2, and the weaker genus form 3 #S + 4g + 2.
struct SelmerDimBound {
  long bound;
  long weak_genus_bound;
};
SelmerDimBound selmer_dim_bound(long num_bad_places, long g, long dim_pic2);

// 3 [2n log q / log n + (2g+2) q/(q-1) sqrt(n)] + 4g + 2, n >= 2.
double weak_selmer_bound(long n, long g, uint32_t q);

}  // namespace ffec

#endif
