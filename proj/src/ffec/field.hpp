// Copyright (c) 2026 The ffec authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef FFEC_FIELD_HPP
#define FFEC_FIELD_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ffec/common.hpp"

namespace ffec {

// F_q, q = p^k. Elements are integers in [0, q) encoding polynomial
// coefficients over F_p as base-p digits (k = 1: plain residues).
//
// Immutable after construction; safe to share across threads.
class Fq {
 public:
  static constexpr uint32_t kMaxQ = 1u << 20;

  explicit Fq(uint32_t q);

  Fq(const Fq&) = delete;
  Fq& operator=(const Fq&) = delete;

  uint32_t p() const { return p_; }
  uint32_t k() const { return k_; }
  uint32_t q() const { return q_; }
  // Modulus coefficients (low to high, length k+1); k = 1 gives {0, 1}.
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const;
  uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }
  uint32_t pow(uint32_t a, uint64_t e) const;

  // Reduction of a signed integer constant into the prime subfield.
  uint32_t of_int(long v) const;

  bool is_square(uint32_t a) const;
  // Square root. p = 2: defined for every element (x -> x^{q/2}).
  // p odd: throws invalid_input on a non-residue.
  uint32_t sqrt(uint32_t a) const;

  uint32_t frobenius(uint32_t a) const { return pow(a, p_); }

  // A fixed multiplicative generator (q > 2; for q = 2 returns 1).
  uint32_t generator() const { return gen_; }

 private:
  uint32_t mul_slow(uint32_t a, uint32_t b) const;

  uint32_t p_ = 0, k_ = 0, q_ = 0;
  std::vector<uint32_t> modulus_;
  uint32_t gen_ = 1;
  bool tables_ = false;
  std::vector<uint32_t> exp_;   // exp_[i] = gen^i, i in [0, 2(q-1))
  std::vector<uint32_t> log_;   // log_[x] for x in [1, q)
  std::vector<uint32_t> sqrt_;  // p odd, q small: sqrt_[x*x] = min root
};

}  // namespace ffec

#endif
