// Copyright (c) 2026 The ffec authors
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0).

#include "ffec/census.hpp"

#include <algorithm>
#include <thread>

#include "ffec/torsion.hpp"

namespace ffec {

namespace {

enum Class : uint8_t { kSingular = 0, kNonMinimal = 1, kMinimal = 2, kMinimalGenusChange = 3 };

// Classification of one equation against a degree-sorted list of candidate
// finite places (all places of degree <= d). The singular stratum is the
// non-regular one (a K-rational singular section exists); equations with
// Delta = 0 but no such section are regular genus-change curves and are
// classified by minimality like the smooth ones.
Class classify(const WeierstrassEq& E, const std::vector<Place>& finite_places) {
  WeqInvariants I = weq_invariants(E);
  if (I.delta.is_zero()) {
    if (weq_singular_section(E)) return kSingular;
    for (const Place& v : finite_places)
      if (weq_scaling_witness(E, v)) return kNonMinimal;
    if (weq_scaling_witness(E, Place::inf())) return kNonMinimal;
    return kMinimalGenusChange;
  }
  int degD = I.delta.n();
  for (const Place& v : finite_places) {
    if (12 * v.deg() > degD) break;
    if (form_valuation(I.delta, v) < 12) continue;
    if (weq_local_min_step(E, v)) return kNonMinimal;
  }
  if (form_valuation(I.delta, Place::inf()) >= 12 && weq_local_min_step(E, Place::inf())) return kNonMinimal;
  return kMinimal;
}

}  // namespace

CensusReport census_run(const Fq& F, const IrreducibleTable& table, int d, unsigned threads, uint64_t cap) {
  if (d < 0) throw invalid_input("twist degree must be >= 0");
  uint64_t total = WeierstrassEq::space_size(F, d);
  if (total > cap) throw infeasible("census space q^{16d+5} exceeds the cap");
  if (threads == 0) threads = 1;

  CensusReport rep;
  rep.q = F.q();
  rep.d = d;
  rep.total = total;
  rep.weighted_mass = Rat(0);
  rep.torsion_weighted_mass = Rat(0);
  rep.trivial_selmer_mass = Rat(0);

  std::vector<Place> finite_places;
  for (int e = 1; e <= d; ++e)
    for (const Poly& pi : table.of_degree(e)) finite_places.push_back(Place::finite(pi));

  std::vector<uint8_t> cls(total);
  {
    std::vector<std::thread> pool;
    uint64_t chunk = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      uint64_t lo = t * chunk, hi = std::min(total, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([&, lo, hi] {
        for (uint64_t i = lo; i < hi; ++i) cls[i] = classify(WeierstrassEq::from_index(F, d, i), finite_places);
      });
    }
    for (auto& th : pool) th.join();
  }

  for (uint64_t i = 0; i < total; ++i) {
    if (cls[i] == kSingular) ++rep.singular;
    else if (cls[i] == kNonMinimal) ++rep.nonminimal;
    else ++rep.minimal_smooth;  // includes the regular genus-change stratum
  }

  // orbit partition of the minimal smooth stratum (sequential sweep in
  // index order, so the output is independent of the thread count)
  WeqTransformIter group(F, d);
  std::vector<bool> visited(total, false);
  uint64_t partition_check = 0;
  for (uint64_t idx = 0; idx < total; ++idx) {
    if ((cls[idx] != kMinimal && cls[idx] != kMinimalGenusChange) || visited[idx]) continue;
    WeierstrassEq E = WeierstrassEq::from_index(F, d, idx);
    uint64_t orbit = 0;
    for (uint64_t gi = 0; gi < group.size(); ++gi) {
      uint64_t img = weq_transform(E, group.at(gi)).index();
      if (!visited[img]) {
        visited[img] = true;
        ++orbit;
      }
    }
    partition_check += orbit;
    uint64_t aut = group.size() / orbit;
    if (aut * orbit != group.size()) throw std::logic_error("orbit size does not divide the group order");
    ++rep.classes[aut];
    Rat inv_aut = Rat(1) / Rat(long(aut));
    rep.weighted_mass += inv_aut;
    // genus-change classes have no elliptic generic fiber; the char-2
    // detector rule (a1 = 0 => trivial 2-torsion) applies to them formally
    int e2 = cls[idx] == kMinimalGenusChange ? 1 : e2_group_order(E, table).e2_order;
    if (e2 > 1) rep.torsion_weighted_mass += inv_aut;
    rep.trivial_selmer_mass += inv_aut / Rat(e2);
  }
  if (partition_check != rep.minimal_smooth) throw std::logic_error("orbit partition does not cover the stratum");
  return rep;
}

OrbitKey canonical_form(const WeierstrassEq& E, const IrreducibleTable& table) {
  if (weq_is_gen_singular(E)) throw invalid_input("canonical form of a generically singular equation");
  auto [mini, div] = weq_minimize(E, table);
  (void)mini;
  if (div.degree() != 0) throw invalid_input("canonical form requires a minimal equation");
  const Fq& F = E.field();
  WeqTransformIter group(F, E.d);
  uint64_t self = E.index();
  uint64_t best = self;
  uint64_t stab = 0;
  for (uint64_t gi = 0; gi < group.size(); ++gi) {
    uint64_t img = weq_transform(E, group.at(gi)).index();
    if (img == self) ++stab;
    if (img < best) best = img;
  }
  return {WeierstrassEq::from_index(F, E.d, best), stab};
}

std::vector<VerifyItem> census_verify(const CensusReport& rep) {
  std::vector<VerifyItem> items;
  CountTable tbl = uw_we_recursion(rep.q, rep.d);
  size_t d = size_t(rep.d);
  auto add = [&](const std::string& name, bool pass, const std::string& detail) {
    items.push_back({name, pass, detail});
  };

  add("total = q^{16d+5}", Rat(long(rep.total)) == tbl.total[d], rat_str(tbl.total[d]));
  add("singular = q^{8d+4}", Rat(long(rep.singular)) == tbl.sing[d], rat_str(tbl.sing[d]));
  add("nonminimal = q^{6d+3} sum (q^{d-e+1}-1) WE_e", Rat(long(rep.nonminimal)) == tbl.nonmin[d],
      rat_str(tbl.nonmin[d]));
  add("minimal smooth = UW_d", Rat(long(rep.minimal_smooth)) == tbl.uw[d], rat_str(tbl.uw[d]));
  add("weighted mass = WE_d", rep.weighted_mass == tbl.we[d], rat_str(tbl.we[d]));

  Rat group_order = Rat(rep.q - 1) * rat_pow(rep.q, 6L * rep.d + 3);
  Rat orbit_sum(0);
  for (const auto& [aut, count] : rep.classes) orbit_sum += Rat(long(count)) * group_order / Rat(long(aut));
  add("sum of orbit sizes = minimal smooth", orbit_sum == Rat(long(rep.minimal_smooth)), rat_str(orbit_sum));
  add("weighted mass * group order = minimal smooth",
      rep.weighted_mass * group_order == Rat(long(rep.minimal_smooth)), rat_str(rep.weighted_mass * group_order));

  if (rep.d >= 2) add("de Jong exact count = WE_d", dejong_exact(rep.q, rep.d) == tbl.we[d], rat_str(tbl.we[d]));
  return items;
}

TrivialSelmerSummary trivial_selmer_mass(const Fq& F, const IrreducibleTable& table, int d, unsigned threads,
                                         uint64_t cap) {
  TrivialSelmerSummary out;
  out.mass = Rat(0);
  out.weighted_mass = Rat(0);
  for (int e = 0; e <= d; ++e) {
    CensusReport rep = census_run(F, table, e, threads, cap);
    out.mass += rep.trivial_selmer_mass;
    out.weighted_mass += rep.weighted_mass;
    out.per_degree.push_back(std::move(rep));
  }
  out.ratio = out.mass / out.weighted_mass;
  return out;
}

}  // namespace ffec
