// Copyright (c) 2026 The ffec authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef FFEC_COMMON_HPP
#define FFEC_COMMON_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace ffec {

// Exact rational, arbitrary precision.
using Rat = mpq_class;
using Int = mpz_class;

// Raised on arguments that violate an operation's contract.
struct invalid_input : std::runtime_error {
  explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an enumeration would exceed its feasibility cap.
struct infeasible : std::runtime_error {
  explicit infeasible(const std::string& what) : std::runtime_error(what) {}
};

// Degree of the zero polynomial / zero form. A distinct sentinel, not -1.
inline constexpr int kNegInfDeg = std::numeric_limits<int>::min();

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// q^e as an exact rational, e possibly negative.
inline Rat rat_pow(unsigned long q, long e) {
  if (e >= 0) return Rat(int_pow(Int(q), static_cast<unsigned long>(e)));
  return Rat(1) / Rat(int_pow(Int(q), static_cast<unsigned long>(-e)));
}

inline std::string rat_str(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return c.get_str();
}

}  // namespace ffec

#endif
