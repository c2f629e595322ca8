// Copyright (c) 2026 The ffec authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef FFEC_HW_HPP
#define FFEC_HW_HPP

#include <array>
#include <optional>
#include <string>

#include "ffec/weierstrass.hpp"

namespace ffec {

// Quartic model Y^2 + (a0 X^2 + a1 XZ + a2 Z^2) Y = c0 X^4 + ... + c4 Z^4
// in a P(1,2,1)-bundle over P^1, with Hodge degree d >= 0 and unstable
// degree u <= 0: a_i has degree d + (i-1)u, c_j has degree 2d + (j-2)u.
// A slot of negative degree can only hold the zero form (stored with
// degree tag 0).
struct HWModel {
  int d = 0;
  int u = 0;
  std::array<BinaryForm, 3> a;
  std::array<BinaryForm, 5> c;

  const Fq& field() const { return a[1].field(); }
  static int a_slot_degree(int d, int u, int i) { return d + (i - 1) * u; }
  static int c_slot_degree(int d, int u, int j) { return 2 * d + (j - 2) * u; }
};

// Validated construction; throws on degree mismatch or u > 0. Any such
// tuple cuts out a hyper-Weierstrass curve, so validation is pure degree
// bookkeeping.
HWModel hw_new(int d, int u, std::array<BinaryForm, 3> a, std::array<BinaryForm, 5> c);

struct HWClassification {
  bool generically_smooth;
  std::optional<std::string> singular_witness;  // chart and cause
};

// Smoothness of the generic fiber over the closure of F_q(t), decided on
// the two affine charts {Z != 0} and {X != 0} (these cover the curve).
HWClassification hw_is_generically_smooth(const HWModel& H);

// The hW model of (E, 2*O): Hodge degree d = E.d, unstable degree u = -2d,
// tuple (c0..c4; a0,a1,a2) = (a6, a4, a2, 1, 0; a3, a1, 0).
HWModel hw_from_weierstrass(const WeierstrassEq& E);

// Number of monomials of weighted degree n in X, Y, Z with weights 1, 2, 1.
long hw_rank_Bn(int n);

// Degrees of the nine graded pieces of the rank-9 bundle: (i-2)u + 2d for
// i = 0..4, (i-6)u + d for i = 5..7, and 0 for i = 8. The first eight sum
// to 13d.
std::array<int, 9> hw_graded_degrees(int d, int u);

// #H^0 of the rank-8 subbundle in the split case over P^1: the product of
// q^{max(m+1,0)} over the first eight graded degrees m.
Int hw_count_split_sections(uint32_t q, int d, int u);

// Admissible unstable degrees for minimal non-trivial-divisor models:
// [-(d+g), 0] in characteristic 2, [-d, 0] otherwise.
std::pair<int, int> admissible_u_range(int d, int g, uint32_t p);

// Exhaustive iteration over all split-coefficient tuples; classifies
// smoothness. Guarded by `cap`.
struct HWEnumSummary {
  Int total;
  Int generically_smooth;
};
HWEnumSummary hw_enumerate(const Fq& F, int d, int u, uint64_t cap);

// Model at a given coefficient index (same digit order as the enumerator).
HWModel hw_from_index(const Fq& F, int d, int u, uint64_t idx);

}  // namespace ffec

#endif
