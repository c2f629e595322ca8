// Copyright (c) 2026 The ffec authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef FFEC_FORM_HPP
#define FFEC_FORM_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ffec/poly.hpp"

namespace ffec {

// Homogeneous binary form of degree n over F_q in (S, T); coefficient c[i]
// multiplies S^i T^{n-i}. Represents a global section of O(n) on P^1.
// Dehomogenization at T = 1 gives the polynomial sum c[i] t^i; the place at
// infinity is T = 0.
class BinaryForm {
 public:
  BinaryForm() : F_(nullptr), n_(0) {}
  BinaryForm(const Fq& F, int n) : F_(&F), n_(n), c_(size_t(n) + 1, 0) {
    if (n < 0) throw invalid_input("form degree must be >= 0");
  }
  BinaryForm(const Fq& F, int n, std::vector<uint32_t> coeffs) : F_(&F), n_(n), c_(std::move(coeffs)) {
    if (n < 0 || c_.size() != size_t(n) + 1) throw invalid_input("form coefficient count mismatch");
  }

  // Homogenization of a polynomial into degree n (requires deg p <= n).
  static BinaryForm from_poly(const Poly& p, int n);
  static BinaryForm constant(const Fq& F, int n, uint32_t v);

  const Fq& field() const { return *F_; }
  int n() const { return n_; }
  const std::vector<uint32_t>& coeffs() const { return c_; }
  uint32_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
  bool is_zero() const;

  Poly dehom() const { return Poly(*F_, c_); }

  bool operator==(const BinaryForm& o) const { return n_ == o.n_ && c_ == o.c_; }
  bool operator!=(const BinaryForm& o) const { return !(*this == o); }

  BinaryForm operator+(const BinaryForm& o) const;
  BinaryForm operator-(const BinaryForm& o) const;
  BinaryForm operator*(const BinaryForm& o) const;
  BinaryForm operator-() const;
  BinaryForm scaled(uint32_t s) const;
  uint32_t eval(uint32_t s, uint32_t t) const;

  // Index in the base-q coefficient order (low index least significant).
  uint64_t index() const;
  static BinaryForm from_index(const Fq& F, int n, uint64_t idx);
  static uint64_t space_size(const Fq& F, int n);  // q^{n+1} for n >= 0, 1 for n < 0

  std::string str() const;

 private:
  const Fq* F_;
  int n_;
  std::vector<uint32_t> c_;
};

// A place of F_q(t): infinity or a monic irreducible polynomial.
struct Place {
  bool infinity = false;
  Poly pi;  // monic irreducible; unused when infinity

  static Place inf() {
    Place v;
    v.infinity = true;
    return v;
  }
  static Place finite(Poly p) {
    if (!p.is_monic() || p.degree() < 1) throw invalid_input("finite place requires a monic polynomial of degree >= 1");
    Place v;
    v.pi = std::move(p);
    return v;
  }

  int deg() const { return infinity ? 1 : pi.degree(); }
  bool operator==(const Place& o) const { return infinity == o.infinity && (infinity || pi == o.pi); }
  // deterministic order: finite places by (degree, encoding), infinity last
  bool operator<(const Place& o) const {
    if (infinity != o.infinity) return !infinity;
    if (infinity) return false;
    return pi < o.pi;
  }
  std::string str() const { return infinity ? "inf" : pi.str(); }
};

// Divisor on P^1 with integer multiplicities.
class DivisorZ {
 public:
  void add(const Place& v, int mult);
  int mult(const Place& v) const;
  int degree() const;
  bool effective() const;
  size_t support_size() const { return m_.size(); }
  const std::map<Place, int>& entries() const { return m_; }
  bool operator==(const DivisorZ& o) const { return m_ == o.m_; }

 private:
  std::map<Place, int> m_;
};

// Order of vanishing of a nonzero form at a place.
int form_valuation(const BinaryForm& f, const Place& v);

// Complete factorization into places; the divisor has degree n.
DivisorZ form_factor(const BinaryForm& f, const IrreducibleTable& table);

// All of H^0(P^1, O(n)): exactly q^{n+1} forms for n >= 0, the singleton
// {0} for n < 0. Deterministic base-q order; independently resumable.
class RRSpaceIter {
 public:
  RRSpaceIter(const Fq& F, int n) : F_(&F), n_(n), size_(BinaryForm::space_size(F, n)) {}

  uint64_t size() const { return size_; }
  BinaryForm at(uint64_t idx) const {
    if (n_ < 0) return BinaryForm(*F_, 0);
    return BinaryForm::from_index(*F_, n_, idx);
  }

 private:
  const Fq* F_;
  int n_;
  uint64_t size_;
};

}  // namespace ffec

#endif
