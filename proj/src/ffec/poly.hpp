// Copyright (c) 2026 The ffec authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef FFEC_POLY_HPP
#define FFEC_POLY_HPP

#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "ffec/field.hpp"

namespace ffec {

// Univariate polynomial over F_q, coefficients low -> high, trailing zeros
// trimmed. The zero polynomial has an empty coefficient vector and degree
// kNegInfDeg.
class Poly {
 public:
  Poly() : F_(nullptr) {}
  explicit Poly(const Fq& F) : F_(&F) {}
  Poly(const Fq& F, std::vector<uint32_t> coeffs) : F_(&F), c_(std::move(coeffs)) { trim(); }

  static Poly zero(const Fq& F) { return Poly(F); }
  static Poly constant(const Fq& F, uint32_t v) { return Poly(F, {v}); }
  static Poly x(const Fq& F) { return Poly(F, {0, 1}); }
  // c0 + c1 t + ... given as integer residues
  static Poly of_ints(const Fq& F, std::vector<long> cs);

  const Fq& field() const { return *F_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? kNegInfDeg : int(c_.size()) - 1; }
  const std::vector<uint32_t>& coeffs() const { return c_; }
  uint32_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
  uint32_t lc() const { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const { return lc() == 1; }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return c_ != o.c_; }
  // total order used for deterministic containers: by degree, then by
  // coefficient encoding from the top
  bool operator<(const Poly& o) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(uint32_t s) const;
  Poly shifted(int k) const;  // * t^k, k >= 0

  uint32_t eval(uint32_t x) const;
  Poly monic() const;
  Poly derivative() const;

  // Quotient and remainder; throws on zero divisor.
  static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
  // Monic gcd; gcd(0,0) = 0.
  static Poly gcd(Poly a, Poly b);
  // Exact division; throws if not divisible.
  static Poly div_exact(const Poly& a, const Poly& b);

  // Sylvester resultant. Res of anything with the zero polynomial is 0;
  // Res(c, g) = c^{deg g} for nonzero constants.
  static uint32_t resultant(const Poly& f, const Poly& g);

  // Multiplicity of b in a (a != 0, deg b >= 1).
  static int valuation(const Poly& a, const Poly& b);

  std::string str(const std::string& var = "t") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  const Fq* F_;
  std::vector<uint32_t> c_;
};

// Polynomial square root over F_q: f = g^2 exactly. p = 2 uses
// perfectness; p odd solves top-down. Returns nullopt if f is not the
// square of a polynomial.
std::optional<Poly> poly_sqrt(const Poly& f);

// True iff num/den is a square in F_q(t); on success *witness (if non-null)
// receives w with w^2 = num/den. Throws on zero denominator.
bool is_square_ratfun(const Poly& num, const Poly& den, struct RatFun* witness = nullptr);

// Rational function num/den, den monic, reduced.
struct RatFun {
  Poly num, den;

  RatFun() = default;
  RatFun(Poly n, Poly d);
  static RatFun of(const Poly& p) { return RatFun(p, Poly::constant(p.field(), 1)); }

  bool is_zero() const { return num.is_zero(); }
  bool operator==(const RatFun& o) const { return num == o.num && den == o.den; }

  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator*(const RatFun& o) const;
  RatFun operator/(const RatFun& o) const;

  std::string str() const;
};

// Per-field cache of monic irreducibles, grouped by degree. Thread-safe.
class IrreducibleTable {
 public:
  explicit IrreducibleTable(const Fq& F) : F_(&F) {}

  // All monic irreducibles of the given degree, ordered by coefficient
  // encoding. Enumeration cost is q^deg; guarded.
  const std::vector<Poly>& of_degree(int deg) const;
  // Number of monic irreducibles of the given degree.
  size_t count(int deg) const { return of_degree(deg).size(); }

  static bool irreducible(const Poly& f);

 private:
  const Fq* F_;
  mutable std::mutex mu_;
  mutable std::map<int, std::vector<Poly>> by_deg_;
};

// Complete factorization of f != 0 into monic irreducibles with
// multiplicities (plus the leading coefficient), by trial division against
// the cached tables.
struct PolyFactors {
  uint32_t unit;
  std::vector<std::pair<Poly, int>> factors;  // (monic irreducible, mult)
};
PolyFactors factor_poly(const Poly& f, const IrreducibleTable& table);

}  // namespace ffec

#endif
