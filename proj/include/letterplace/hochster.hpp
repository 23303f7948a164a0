#pragma once

#include <map>
#include <span>
#include <vector>

#include "letterplace/betti_table.hpp"
#include "letterplace/homology.hpp"
#include "letterplace/ideals.hpp"
#include "letterplace/multidegree.hpp"

namespace lp {

// Ground truth by Hochster's formula: beta_{i,R} is the dimension of
// the reduced (co)homology of Delta(n,P)|_R in degree |R|-i-2.  Every
// fast engine is validated against this path.

inline std::map<int, long long> beta_from_hpoly(const HPoly& h, int total_degree) {
  std::map<int, long long> out;
  for (int i = 0; i <= total_degree; ++i) {
    long long b = h.coeff(total_degree - i - 2);
    if (b != 0) out[i] = b;
  }
  return out;
}

inline std::vector<std::map<int, long long>> beta_R_oracle_multi(
    int n, const Poset& p, const Multidegree& r, std::span<const FieldSpec> fields,
    const SComplex* delta = nullptr) {
  SComplex local = delta ? SComplex() : delta_complex(n, p);
  const SComplex& d = delta ? *delta : local;
  SComplex restricted = d.restrict_to(r.support_mask(p.size()));
  auto polys = reduced_homology_multi(restricted, fields);
  std::vector<std::map<int, long long>> out;
  for (auto& h : polys) out.push_back(beta_from_hpoly(h, r.total()));
  return out;
}

inline std::map<int, long long> beta_R_oracle(int n, const Poset& p, const Multidegree& r,
                                              const FieldSpec& k) {
  return beta_R_oracle_multi(n, p, r, std::span<const FieldSpec>(&k, 1)).front();
}

inline std::vector<BettiTable> betti_table_oracle_multi(int n, const Poset& p,
                                                        std::span<const FieldSpec> fields,
                                                        Prune prune = Prune::chains) {
  guards::require_vertices(n * p.size(), 24, "betti_table_oracle");
  std::vector<BettiTable> tables(fields.size(), BettiTable(Convention::ideal));
  if (p.size() == 0) return tables;
  SComplex delta = delta_complex(n, p);
  enumerate_multidegrees(n, p, prune, [&](const Multidegree& r) {
    auto betas = beta_R_oracle_multi(n, p, r, fields, &delta);
    for (size_t f = 0; f < fields.size(); ++f)
      for (auto& [i, b] : betas[f]) tables[f].add(i, r.total(), b);
  });
  return tables;
}

inline BettiTable betti_table_oracle(int n, const Poset& p, const FieldSpec& k,
                                     Prune prune = Prune::chains) {
  return betti_table_oracle_multi(n, p, std::span<const FieldSpec>(&k, 1), prune).front();
}

}  // namespace lp
