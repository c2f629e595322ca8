// Copyright (c) 2026 The ffec authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "ffec/field.hpp"

#include <algorithm>

namespace ffec {

namespace {

// Plain F_p[x] helpers used only during construction (modulus search).
using PVec = std::vector<uint32_t>;

void ptrim(PVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PVec pmulmod(const PVec& a, const PVec& b, const PVec& mod, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PVec r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + uint64_t(a[i]) * b[j]) % p;
  // reduce mod the monic polynomial `mod`
  size_t m = mod.size() - 1;
  for (size_t i = r.size(); i-- > m;) {
    uint32_t c = r[i];
    if (c == 0) continue;
    r[i] = 0;
    for (size_t j = 0; j < m; ++j) {
      uint64_t sub = (uint64_t(c) * mod[j]) % p;
      r[i - m + j] = (r[i - m + j] + p - sub) % p;
    }
  }
  r.resize(m);
  ptrim(r);
  return r;
}

PVec ppowmod(PVec base, uint64_t e, const PVec& mod, uint32_t p) {
  PVec r{1};
  while (e) {
    if (e & 1) r = pmulmod(r, base, mod, p);
    base = pmulmod(base, base, mod, p);
    e >>= 1;
  }
  return r;
}

PVec pgcd(PVec a, PVec b, uint32_t p) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    // a mod b
    uint32_t lc = b.back();
    uint32_t lcinv = 1;
    for (uint32_t i = 1; i < p; ++i)
      if ((uint64_t(lc) * i) % p == 1) {
        lcinv = i;
        break;
      }
    while (a.size() >= b.size()) {
      uint32_t c = (uint64_t(a.back()) * lcinv) % p;
      size_t off = a.size() - b.size();
      for (size_t j = 0; j < b.size(); ++j) {
        uint64_t sub = (uint64_t(c) * b[j]) % p;
        a[off + j] = (a[off + j] + p - sub) % p;
      }
      ptrim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

bool is_irreducible(const PVec& f, uint32_t p) {
  // f monic of degree k >= 1: irreducible iff x^{p^k} == x (mod f) and
  // gcd(x^{p^{k/l}} - x, f) = 1 for every prime l | k.
  uint32_t k = uint32_t(f.size()) - 1;
  PVec x{0, 1};
  uint64_t pk = 1;
  for (uint32_t i = 0; i < k; ++i) pk *= p;
  PVec xq = ppowmod(x, pk, f, p);
  PVec diff = xq;
  if (diff.empty()) diff = {0};
  diff.resize(std::max<size_t>(diff.size(), 2), 0);
  diff[1] = (diff[1] + p - 1) % p;
  ptrim(diff);
  if (!diff.empty()) return false;
  for (uint32_t l = 2; l <= k; ++l) {
    if (k % l != 0) continue;
    bool prime = true;
    for (uint32_t m = 2; m * m <= l; ++m)
      if (l % m == 0) prime = false;
    if (!prime) continue;
    uint64_t pe = 1;
    for (uint32_t i = 0; i < k / l; ++i) pe *= p;
    PVec xe = ppowmod(x, pe, f, p);
    xe.resize(std::max<size_t>(xe.size(), 2), 0);
    xe[1] = (xe[1] + p - 1) % p;
    ptrim(xe);
    PVec g = pgcd(f, xe, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

Fq::Fq(uint32_t q) : q_(q) {
  if (q < 2 || q > kMaxQ) throw invalid_input("field size out of range");
  uint32_t p = 0;
  for (uint32_t c = 2; c * c <= q; ++c)
    if (q % c == 0) {
      p = c;
      break;
    }
  if (p == 0) p = q;
  uint32_t k = 0, t = q;
  while (t > 1) {
    if (t % p != 0) throw invalid_input("field size is not a prime power");
    t /= p;
    ++k;
  }
  p_ = p;
  k_ = k;

  if (k_ == 1) {
    modulus_ = {0, 1};
  } else {
    // lexicographically least monic irreducible of degree k, candidates
    // ordered by their base-p integer encoding
    uint64_t count = 1;
    for (uint32_t i = 0; i < k_; ++i) count *= p_;
    for (uint64_t enc = 0; enc < count; ++enc) {
      PVec f(k_ + 1, 0);
      uint64_t e = enc;
      for (uint32_t i = 0; i < k_; ++i) {
        f[i] = e % p_;
        e /= p_;
      }
      f[k_] = 1;
      if (is_irreducible(f, p_)) {
        modulus_ = f;
        break;
      }
    }
  }

  tables_ = q_ <= (1u << 16);
  if (tables_ && q_ > 2) {
    // find a generator: order q-1 element
    std::vector<uint32_t> prime_divs;
    uint32_t n = q_ - 1;
    for (uint32_t c = 2; c * c <= n; ++c)
      if (n % c == 0) {
        prime_divs.push_back(c);
        while (n % c == 0) n /= c;
      }
    if (n > 1) prime_divs.push_back(n);
    for (uint32_t g = 2; g < q_; ++g) {
      bool ok = true;
      for (uint32_t l : prime_divs) {
        // compute g^{(q-1)/l} with slow mul
        uint64_t e = (q_ - 1) / l;
        uint32_t r = 1, b = g;
        while (e) {
          if (e & 1) r = mul_slow(r, b);
          b = mul_slow(b, b);
          e >>= 1;
        }
        if (r == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        gen_ = g;
        break;
      }
    }
    exp_.resize(2 * (q_ - 1));
    log_.assign(q_, 0);
    uint32_t cur = 1;
    for (uint32_t i = 0; i < q_ - 1; ++i) {
      exp_[i] = cur;
      exp_[i + (q_ - 1)] = cur;
      log_[cur] = i;
      cur = mul_slow(cur, gen_);
    }
    if (p_ != 2) {
      sqrt_.assign(q_, q_);  // q_ = "no root"
      for (uint32_t x = 0; x < q_; ++x) {
        uint32_t s = mul(x, x);
        if (x < sqrt_[s]) sqrt_[s] = x;
      }
    }
  }
}

uint32_t Fq::add(uint32_t a, uint32_t b) const {
  if (p_ == 2) return a ^ b;
  if (k_ == 1) {
    uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  uint32_t r = 0, mul = 1;
  while (a || b) {
    uint32_t s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    r += s * mul;
    mul *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

uint32_t Fq::neg(uint32_t a) const {
  if (p_ == 2) return a;
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  uint32_t r = 0, mul = 1;
  while (a) {
    uint32_t d = a % p_;
    r += (d == 0 ? 0 : p_ - d) * mul;
    mul *= p_;
    a /= p_;
  }
  return r;
}

uint32_t Fq::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t Fq::mul_slow(uint32_t a, uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  if (k_ == 1) return uint32_t((uint64_t(a) * b) % p_);
  // polynomial digits base p
  uint32_t da[21], db[21];
  uint32_t na = 0, nb = 0;
  while (a) {
    da[na++] = a % p_;
    a /= p_;
  }
  while (b) {
    db[nb++] = b % p_;
    b /= p_;
  }
  uint32_t prod[41] = {0};
  for (uint32_t i = 0; i < na; ++i)
    for (uint32_t j = 0; j < nb; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  // reduce by modulus
  for (int i = na + nb - 2; i >= int(k_); --i) {
    uint32_t c = prod[i];
    if (!c) continue;
    prod[i] = 0;
    for (uint32_t j = 0; j < k_; ++j) {
      uint32_t sub = (c * modulus_[j]) % p_;
      prod[i - k_ + j] = (prod[i - k_ + j] + p_ - sub) % p_;
    }
  }
  uint32_t r = 0;
  for (int i = int(k_) - 1; i >= 0; --i) r = r * p_ + prod[i];
  return r;
}

uint32_t Fq::mul(uint32_t a, uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  if (tables_ && k_ > 1) return exp_[log_[a] + log_[b]];
  if (k_ == 1) return uint32_t((uint64_t(a) * b) % p_);
  return mul_slow(a, b);
}

uint32_t Fq::inv(uint32_t a) const {
  if (a == 0) throw invalid_input("division by zero in F_q");
  if (a == 1) return 1;
  if (tables_ && k_ > 1) return exp_[(q_ - 1) - log_[a]];
  return pow(a, q_ - 2);
}

uint32_t Fq::pow(uint32_t a, uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  e %= (q_ - 1);
  uint32_t r = 1, b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

uint32_t Fq::of_int(long v) const {
  long m = long(p_);
  long r = v % m;
  if (r < 0) r += m;
  return uint32_t(r);
}

bool Fq::is_square(uint32_t a) const {
  if (p_ == 2 || a == 0) return true;
  return pow(a, (q_ - 1) / 2) == 1;
}

uint32_t Fq::sqrt(uint32_t a) const {
  if (a == 0) return 0;
  if (p_ == 2) return pow(a, q_ / 2);
  if (!is_square(a)) throw invalid_input("sqrt of a non-residue");
  if (!sqrt_.empty()) return sqrt_[a];
  // rare path (odd q > 2^16): exhaustive scan
  for (uint32_t x = 1; x < q_; ++x)
    if (mul(x, x) == a) return x;
  throw invalid_input("sqrt: no root found");
}

}  // namespace ffec
