// Copyright (c) 2026 The ffec authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "ffec/poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ffec {

Poly Poly::of_ints(const Fq& F, std::vector<long> cs) {
  std::vector<uint32_t> c;
  c.reserve(cs.size());
  for (long v : cs) c.push_back(F.of_int(v));
  return Poly(F, std::move(c));
}

bool Poly::operator<(const Poly& o) const {
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
  for (size_t i = c_.size(); i-- > 0;)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

Poly Poly::operator+(const Poly& o) const {
  const Fq& F = *F_;
  std::vector<uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = F.add(coeff(i), o.coeff(i));
  return Poly(F, std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  if (!F_) return *this;
  std::vector<uint32_t> r(c_);
  for (auto& v : r) v = F_->neg(v);
  return Poly(*F_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  const Fq& F = *F_;
  if (is_zero() || o.is_zero()) return Poly::zero(F);
  std::vector<uint32_t> r(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      if (o.c_[j]) r[i + j] = F.add(r[i + j], F.mul(c_[i], o.c_[j]));
  }
  return Poly(F, std::move(r));
}

Poly Poly::scaled(uint32_t s) const {
  if (s == 0 || is_zero()) return Poly::zero(*F_);
  std::vector<uint32_t> r(c_);
  for (auto& v : r) v = F_->mul(v, s);
  return Poly(*F_, std::move(r));
}

Poly Poly::shifted(int k) const {
  if (is_zero()) return *this;
  std::vector<uint32_t> r(c_.size() + size_t(k), 0);
  std::copy(c_.begin(), c_.end(), r.begin() + k);
  return Poly(*F_, std::move(r));
}

uint32_t Poly::eval(uint32_t x) const {
  const Fq& F = *F_;
  uint32_t r = 0;
  for (size_t i = c_.size(); i-- > 0;) r = F.add(F.mul(r, x), c_[i]);
  return r;
}

Poly Poly::monic() const {
  if (is_zero() || lc() == 1) return *this;
  return scaled(F_->inv(lc()));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly::zero(*F_);
  const Fq& F = *F_;
  std::vector<uint32_t> r(c_.size() - 1, 0);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = F.mul(c_[i], F.of_int(long(i)));
  return Poly(F, std::move(r));
}

std::pair<Poly, Poly> Poly::divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw invalid_input("polynomial division by zero");
  const Fq& F = a.field();
  int da = a.degree(), db = b.degree();
  if (a.is_zero() || da < db) return {Poly::zero(F), a};
  std::vector<uint32_t> rem(a.c_);
  std::vector<uint32_t> quot(size_t(da - db) + 1, 0);
  uint32_t lcinv = F.inv(b.lc());
  for (int i = da; i >= db; --i) {
    uint32_t c = rem[size_t(i)];
    if (c == 0) continue;
    uint32_t q = F.mul(c, lcinv);
    quot[size_t(i - db)] = q;
    for (int j = 0; j <= db; ++j)
      rem[size_t(i - db + j)] = F.sub(rem[size_t(i - db + j)], F.mul(q, b.c_[size_t(j)]));
  }
  rem.resize(size_t(db > 0 ? db : 0));
  return {Poly(F, std::move(quot)), Poly(F, std::move(rem))};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly Poly::div_exact(const Poly& a, const Poly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw invalid_input("inexact polynomial division");
  return q;
}

uint32_t Poly::resultant(const Poly& f, const Poly& g) {
  const Fq& F = f.field();
  if (f.is_zero() || g.is_zero()) return 0;
  Poly a = f, b = g;
  uint32_t res = 1;
  if (a.degree() < b.degree()) {
    if ((uint64_t(a.degree()) * uint64_t(b.degree())) % 2 == 1) res = F.neg(res);
    std::swap(a, b);
  }
  while (b.degree() > 0) {
    Poly r = divrem(a, b).second;
    if (r.is_zero()) return 0;
    int da = a.degree(), db = b.degree(), dr = r.degree();
    // Res(a,b) = (-1)^{da db} lc(b)^{da-dr} Res(b,r)
    if ((uint64_t(da) * uint64_t(db)) % 2 == 1) res = F.neg(res);
    res = F.mul(res, F.pow(b.lc(), uint64_t(da - dr)));
    a = std::move(b);
    b = std::move(r);
  }
  return F.mul(res, F.pow(b.lc(), uint64_t(a.degree())));
}

int Poly::valuation(const Poly& a, const Poly& b) {
  if (a.is_zero()) throw invalid_input("valuation of zero polynomial");
  if (b.degree() < 1) throw invalid_input("valuation at a constant");
  int v = 0;
  Poly cur = a;
  while (true) {
    auto [q, r] = divrem(cur, b);
    if (!r.is_zero()) return v;
    ++v;
    cur = std::move(q);
  }
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c_[i] != 1) os << c_[i];
    if (i > 0) {
      if (c_[i] != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::optional<Poly> poly_sqrt(const Poly& f) {
  const Fq& F = f.field();
  if (f.is_zero()) return Poly::zero(F);
  int d = f.degree();
  if (d % 2 != 0) return std::nullopt;
  if (F.p() == 2) {
    // F_q perfect: a square iff all odd-exponent coefficients vanish
    std::vector<uint32_t> r(size_t(d / 2) + 1, 0);
    for (int i = 0; i <= d; ++i) {
      uint32_t c = f.coeff(size_t(i));
      if (i % 2 == 1) {
        if (c != 0) return std::nullopt;
      } else {
        r[size_t(i / 2)] = F.sqrt(c);
      }
    }
    return Poly(F, std::move(r));
  }
  // odd characteristic: solve coefficients top-down
  if (!F.is_square(f.lc())) return std::nullopt;
  int m = d / 2;
  std::vector<uint32_t> g(size_t(m) + 1, 0);
  g[size_t(m)] = F.sqrt(f.lc());
  uint32_t inv2lead = F.inv(F.mul(2 % F.p(), g[size_t(m)]));
  for (int i = m - 1; i >= 0; --i) {
    // coefficient of x^{i+m} in g^2: all ordered pairs (a,b), a+b = i+m,
    // except the two involving the unknown g_i
    uint32_t acc = 0;
    for (int a = i; a <= m; ++a) {
      int b = i + m - a;
      if (b < 0 || b > m) continue;
      if (a == i || b == i) continue;
      acc = F.add(acc, F.mul(g[size_t(a)], g[size_t(b)]));
    }
    g[size_t(i)] = F.mul(F.sub(f.coeff(size_t(i + m)), acc), inv2lead);
  }
  Poly cand(F, std::move(g));
  if (cand * cand == f) return cand;
  return std::nullopt;
}

RatFun::RatFun(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw invalid_input("zero denominator");
  if (num.is_zero()) {
    den = Poly::constant(num.field(), 1);
    return;
  }
  Poly g = Poly::gcd(num, den);
  if (g.degree() > 0) {
    num = Poly::div_exact(num, g);
    den = Poly::div_exact(den, g);
  }
  uint32_t l = den.lc();
  if (l != 1) {
    uint32_t li = den.field().inv(l);
    num = num.scaled(li);
    den = den.scaled(li);
  }
}

RatFun RatFun::operator+(const RatFun& o) const { return RatFun(num * o.den + o.num * den, den * o.den); }
RatFun RatFun::operator-(const RatFun& o) const { return RatFun(num * o.den - o.num * den, den * o.den); }
RatFun RatFun::operator*(const RatFun& o) const { return RatFun(num * o.num, den * o.den); }
RatFun RatFun::operator/(const RatFun& o) const {
  if (o.is_zero()) throw invalid_input("division by zero rational function");
  return RatFun(num * o.den, den * o.num);
}

std::string RatFun::str() const {
  if (den.degree() == 0) return num.str();
  return "(" + num.str() + ")/(" + den.str() + ")";
}

bool is_square_ratfun(const Poly& num, const Poly& den, RatFun* witness) {
  if (den.is_zero()) throw invalid_input("zero denominator");
  const Fq& F = num.field();
  if (num.is_zero()) {
    if (witness) *witness = RatFun::of(Poly::zero(F));
    return true;
  }
  RatFun f(num, den);
  // num/den square in F_q(t) iff, after reduction, num*den is a residue
  // scalar times the square of a polynomial
  Poly prod = f.num * f.den;
  uint32_t l = prod.lc();
  if (!F.is_square(l)) return false;
  std::optional<Poly> root = poly_sqrt(prod.monic());
  if (!root) return false;
  if (witness) *witness = RatFun(root->scaled(F.sqrt(l)), f.den);
  return true;
}

const std::vector<Poly>& IrreducibleTable::of_degree(int deg) const {
  if (deg < 1) throw invalid_input("irreducible degree must be >= 1");
  std::lock_guard<std::mutex> lock(mu_);
  auto it = by_deg_.find(deg);
  if (it != by_deg_.end()) return it->second;
  const Fq& F = *F_;
  if (double(deg) * std::log2(double(F.q())) > 22.0)
    throw infeasible("irreducible enumeration cap exceeded for q^deg");
  uint64_t count = 1;
  for (int i = 0; i < deg; ++i) count *= F.q();
  std::vector<Poly> out;
  for (uint64_t enc = 0; enc < count; ++enc) {
    std::vector<uint32_t> c(size_t(deg) + 1, 0);
    uint64_t e = enc;
    for (int i = 0; i < deg; ++i) {
      c[size_t(i)] = uint32_t(e % F.q());
      e /= F.q();
    }
    c[size_t(deg)] = 1;
    Poly f(F, std::move(c));
    if (irreducible(f)) out.push_back(std::move(f));
  }
  return by_deg_.emplace(deg, std::move(out)).first->second;
}

bool IrreducibleTable::irreducible(const Poly& f) {
  const Fq& F = f.field();
  int k = f.degree();
  if (k < 1) return false;
  Poly fm = f.monic();
  auto powmod = [&](const Poly& base, uint64_t e) {
    Poly r = Poly::constant(F, 1);
    Poly b = base;
    while (e) {
      if (e & 1) r = Poly::divrem(r * b, fm).second;
      b = Poly::divrem(b * b, fm).second;
      e >>= 1;
    }
    return r;
  };
  Poly x = Poly::x(F);
  Poly xq = x;
  for (int j = 0; j < k; ++j) xq = powmod(xq, F.q());
  if (!Poly::divrem(xq - x, fm).second.is_zero()) return false;
  for (int l = 2; l <= k; ++l) {
    if (k % l != 0) continue;
    bool prime = true;
    for (int m = 2; m * m <= l; ++m)
      if (l % m == 0) prime = false;
    if (!prime) continue;
    Poly xe = x;
    for (int j = 0; j < k / l; ++j) xe = powmod(xe, F.q());
    Poly g = Poly::gcd(fm, xe - x);
    if (g.degree() != 0) return false;
  }
  return true;
}

PolyFactors factor_poly(const Poly& f, const IrreducibleTable& table) {
  if (f.is_zero()) throw invalid_input("factor of zero polynomial");
  PolyFactors out;
  out.unit = f.lc();
  Poly rem = f.monic();
  int deg = 1;
  while (rem.degree() >= 1) {
    if (2 * deg > rem.degree()) {
      // all factors of degree < deg are stripped, so rem is irreducible
      out.factors.emplace_back(rem, 1);
      break;
    }
    for (const Poly& pi : table.of_degree(deg)) {
      if (rem.degree() < deg) break;
      int mult = 0;
      while (true) {
        auto [q, r] = Poly::divrem(rem, pi);
        if (!r.is_zero()) break;
        rem = q;
        ++mult;
      }
      if (mult > 0) out.factors.emplace_back(pi, mult);
    }
    ++deg;
  }
  return out;
}

}  // namespace ffec
