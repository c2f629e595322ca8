// Copyright (c) 2026 The ffec authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "ffec/form.hpp"

#include <sstream>

namespace ffec {

BinaryForm BinaryForm::from_poly(const Poly& p, int n) {
  if (p.degree() != kNegInfDeg && p.degree() > n) throw invalid_input("polynomial degree exceeds form degree");
  BinaryForm f(p.field(), n);
  for (size_t i = 0; i < p.coeffs().size(); ++i) f.c_[i] = p.coeffs()[i];
  return f;
}

BinaryForm BinaryForm::constant(const Fq& F, int n, uint32_t v) {
  BinaryForm f(F, n);
  f.c_[0] = v;
  return f;
}

bool BinaryForm::is_zero() const {
  for (uint32_t v : c_)
    if (v) return false;
  return true;
}

BinaryForm BinaryForm::operator+(const BinaryForm& o) const {
  if (n_ != o.n_) throw invalid_input("form degree mismatch in addition");
  BinaryForm r(*F_, n_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = F_->add(c_[i], o.c_[i]);
  return r;
}

BinaryForm BinaryForm::operator-(const BinaryForm& o) const { return *this + (-o); }

BinaryForm BinaryForm::operator-() const {
  BinaryForm r = *this;
  for (auto& v : r.c_) v = F_->neg(v);
  return r;
}

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
  BinaryForm r(*F_, n_ + o.n_);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      if (o.c_[j]) r.c_[i + j] = F_->add(r.c_[i + j], F_->mul(c_[i], o.c_[j]));
  }
  return r;
}

BinaryForm BinaryForm::scaled(uint32_t s) const {
  BinaryForm r = *this;
  for (auto& v : r.c_) v = F_->mul(v, s);
  return r;
}

uint32_t BinaryForm::eval(uint32_t s, uint32_t t) const {
  const Fq& F = *F_;
  // sum c_i s^i t^{n-i}
  uint32_t r = 0;
  uint32_t spow = 1;
  std::vector<uint32_t> tpow(c_.size());
  uint32_t tp = 1;
  for (size_t i = c_.size(); i-- > 0;) {
    tpow[i] = tp;
    tp = F.mul(tp, t);
  }
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i]) r = F.add(r, F.mul(c_[i], F.mul(spow, tpow[i])));
    spow = F.mul(spow, s);
  }
  return r;
}

uint64_t BinaryForm::index() const {
  uint64_t idx = 0;
  for (size_t i = c_.size(); i-- > 0;) idx = idx * F_->q() + c_[i];
  return idx;
}

BinaryForm BinaryForm::from_index(const Fq& F, int n, uint64_t idx) {
  BinaryForm f(F, n);
  for (size_t i = 0; i < f.c_.size(); ++i) {
    f.c_[i] = uint32_t(idx % F.q());
    idx /= F.q();
  }
  if (idx != 0) throw invalid_input("form index out of range");
  return f;
}

uint64_t BinaryForm::space_size(const Fq& F, int n) {
  if (n < 0) return 1;
  uint64_t s = 1;
  for (int i = 0; i <= n; ++i) {
    if (s > (uint64_t(1) << 62) / F.q()) throw infeasible("RR space too large to index");
    s *= F.q();
  }
  return s;
}

std::string BinaryForm::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (c_[i] != 1 || (i == 0 && i == c_.size() - 1)) os << c_[i];
    size_t j = c_.size() - 1 - i;
    if (i > 0) os << "S" << (i > 1 ? "^" + std::to_string(i) : "");
    if (j > 0) os << "T" << (j > 1 ? "^" + std::to_string(j) : "");
  }
  if (first) os << "0";
  return os.str();
}

void DivisorZ::add(const Place& v, int mult) {
  if (mult == 0) return;
  auto it = m_.find(v);
  if (it == m_.end()) {
    m_.emplace(v, mult);
  } else {
    it->second += mult;
    if (it->second == 0) m_.erase(it);
  }
}

int DivisorZ::mult(const Place& v) const {
  auto it = m_.find(v);
  return it == m_.end() ? 0 : it->second;
}

int DivisorZ::degree() const {
  int d = 0;
  for (const auto& [v, m] : m_) d += m * v.deg();
  return d;
}

bool DivisorZ::effective() const {
  for (const auto& [v, m] : m_)
    if (m < 0) return false;
  return true;
}

int form_valuation(const BinaryForm& f, const Place& v) {
  if (f.is_zero()) throw invalid_input("valuation of the zero form");
  Poly p = f.dehom();
  if (v.infinity) return f.n() - p.degree();
  return Poly::valuation(p, v.pi);
}

DivisorZ form_factor(const BinaryForm& f, const IrreducibleTable& table) {
  if (f.is_zero()) throw invalid_input("factorization of the zero form");
  DivisorZ div;
  Poly p = f.dehom();
  int at_inf = f.n() - p.degree();
  if (at_inf > 0) div.add(Place::inf(), at_inf);
  if (p.degree() >= 1) {
    PolyFactors fac = factor_poly(p, table);
    for (auto& [pi, mult] : fac.factors) div.add(Place::finite(pi), mult);
  }
  return div;
}

}  // namespace ffec
