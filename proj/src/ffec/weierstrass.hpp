// Copyright (c) 2026 The ffec authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef FFEC_WEIERSTRASS_HPP
#define FFEC_WEIERSTRASS_HPP

#include <optional>
#include <utility>

#include "ffec/form.hpp"

namespace ffec {

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over F_q(t), with graded
// coefficients: a_i is a binary form of degree i*d (Hodge bundle O(d)).
struct WeierstrassEq {
  int d = 0;
  BinaryForm a1, a2, a3, a4, a6;

  WeierstrassEq() = default;
  WeierstrassEq(int d_, BinaryForm a1_, BinaryForm a2_, BinaryForm a3_, BinaryForm a4_, BinaryForm a6_);

  const Fq& field() const { return a1.field(); }

  // Constant-coefficient curve (d = 0) from residues.
  static WeierstrassEq constants(const Fq& F, long a1, long a2, long a3, long a4, long a6);

  // Base-q digit encoding across (a1, a2, a3, a4, a6), a1 least significant;
  // the census iterates indices in [0, q^{16d+5}).
  uint64_t index() const;
  static WeierstrassEq from_index(const Fq& F, int d, uint64_t idx);
  static uint64_t space_size(const Fq& F, int d);

  bool operator==(const WeierstrassEq& o) const;
};

// b/c/Delta attached to a Weierstrass equation; forms of degrees
// (2d, 4d, 6d, 8d, 4d, 6d, 12d).
struct WeqInvariants {
  BinaryForm b2, b4, b6, b8, c4, c6, delta;
};

WeqInvariants weq_invariants(const WeierstrassEq& E);

// True iff the generic fiber is geometrically singular, i.e. Delta is the
// zero form. In characteristic 2 or 3 this is weaker than having a
// K-rational singular point: equations like y^2 = x^3 + t x have Delta = 0
// yet their singular point is irrational, so the generic fiber is regular.
bool weq_is_gen_singular(const WeierstrassEq& E);

// The K-rational singular section (sigma_X, sigma_Y) of the generic fiber
// when one exists, i.e. a solution of the Jacobian system in
// H^0(O(2d)) x H^0(O(3d)). Its existence is equivalent to the generic
// fiber being non-regular, which is the stratum the census counts as
// generically singular.
std::optional<std::pair<BinaryForm, BinaryForm>> weq_singular_section(const WeierstrassEq& E);

// Substitution x -> u^2 x + r, y -> u^3 y + u^2 s x + t with graded forms
// r (deg 2d), s (deg d), t (deg 3d) and a unit scalar u.
struct WeqTransform {
  uint32_t u = 1;
  BinaryForm r, s, t;

  static WeqTransform identity(const Fq& F, int d);
  // Composition: applying `first` then `second` equals applying the result.
  static WeqTransform then(const WeqTransform& first, const WeqTransform& second);
};

WeierstrassEq weq_transform(const WeierstrassEq& E, const WeqTransform& g);

// The full transformation group for twist degree d, order (q-1) q^{6d+3};
// deterministic order, indexable for partitioned scans.
class WeqTransformIter {
 public:
  WeqTransformIter(const Fq& F, int d);
  uint64_t size() const { return size_; }
  WeqTransform at(uint64_t i) const;

 private:
  const Fq* F_;
  int d_;
  uint64_t nr_, ns_, nt_, size_;
};

// Searches the substitution group for (r, s, t) making every transformed
// coefficient a_i divisible by pi_v^i, and divides the scaling out. No
// smoothness assumption; returns the twist degree d - deg(v) equation or
// nullopt.
std::optional<WeierstrassEq> weq_scaling_witness(const WeierstrassEq& E, const Place& v);

// One unscaling step at a place v: if local parameters (u = pi_v, r, s, t)
// make the transformed equation integrally divisible at v, returns the
// equation of twist degree d - deg(v) obtained by dividing out; otherwise
// nullopt. The returned equation has val_v(Delta) reduced by exactly 12
// and identical Delta-valuations elsewhere. Requires Delta != 0.
std::optional<WeierstrassEq> weq_local_min_step(const WeierstrassEq& E, const Place& v);

// Repeated unscaling until no place admits a step. Returns the minimal
// model and the effective divisor recording the scalings undone.
std::pair<WeierstrassEq, DivisorZ> weq_minimize(const WeierstrassEq& E, const IrreducibleTable& table);

// deg Delta(E_min) / 12 = twist degree of the minimal model.
int weq_height(const WeierstrassEq& E, const IrreducibleTable& table);

}  // namespace ffec

#endif
