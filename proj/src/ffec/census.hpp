// Copyright (c) 2026 The ffec authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#ifndef FFEC_CENSUS_HPP
#define FFEC_CENSUS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ffec/series.hpp"
#include "ffec/weierstrass.hpp"

namespace ffec {

inline constexpr uint64_t kDefaultCap = uint64_t(1) << 31;

struct CensusReport {
  uint32_t q = 0;
  int d = 0;
  uint64_t total = 0;
  uint64_t singular = 0;
  uint64_t nonminimal = 0;
  uint64_t minimal_smooth = 0;
  std::map<uint64_t, uint64_t> classes;  // aut order -> class count
  Rat weighted_mass;                     // sum over classes of 1/aut
  Rat torsion_weighted_mass;             // classes with E[2](K) != 0
  Rat trivial_selmer_mass;               // sum of 1/(#E[2](K) * aut)
};

// Iterates all q^{16d+5} equations of twist degree d, classifies them as
// generically singular / non-minimal / minimal smooth, and partitions the
// minimal smooth ones into isomorphism classes under the full
// transformation group. Deterministic for any thread count.
CensusReport census_run(const Fq& F, const IrreducibleTable& table, int d, unsigned threads = 1,
                        uint64_t cap = kDefaultCap);

// Canonical (lexicographically least) equation in the orbit, plus the
// stabilizer order. Input must be minimal and generically smooth.
struct OrbitKey {
  WeierstrassEq key;
  uint64_t aut_order;
};
OrbitKey canonical_form(const WeierstrassEq& E, const IrreducibleTable& table);

// Per-identity verdicts of a report against the closed forms and the
// recursion (and de Jong for d >= 2).
struct VerifyItem {
  std::string name;
  bool pass;
  std::string detail;
};
std::vector<VerifyItem> census_verify(const CensusReport& rep);

// Cumulative trivial-Selmer mass over heights <= d, with the ratio to the
// cumulative weighted class mass.
struct TrivialSelmerSummary {
  Rat mass;           // sum over minimal classes of height <= d of 1/(#E[2] aut)
  Rat weighted_mass;  // sum of 1/aut over the same classes
  Rat ratio;
  std::vector<CensusReport> per_degree;
};
TrivialSelmerSummary trivial_selmer_mass(const Fq& F, const IrreducibleTable& table, int d, unsigned threads = 1,
                                         uint64_t cap = kDefaultCap);

}  // namespace ffec

#endif
