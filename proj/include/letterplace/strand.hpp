#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "letterplace/betti_table.hpp"
#include "letterplace/homology.hpp"
#include "letterplace/multidegree.hpp"
#include "letterplace/poset.hpp"

namespace lp {

// Fast path for multigraded Betti numbers: the restriction of
// Delta(n,P) to R is homotopy equivalent to the join of the bipartite
// complexes X_i(R) between max(R_i) and min(R_{i+1}), so beta(R,t) is
// t^n times the product of their homology polynomials, and each factor
// reduces further to a complex on at most width(P) vertices.

// X_i(R): vertices are side-tagged copies of max(R_i) and min(R_{i+1})
// (an element on both sides appears twice); nonfaces are the pairs
// p <= q across the sides.  i is 1-based, i in [1, n-1].
inline SComplex x_complex(const Poset& p, const Multidegree& r, int i) {
  if (i < 1 || i + 1 > r.n()) throw std::invalid_argument("x_complex: slot out of range");
  ElemSet m = p.max_of(r.layers[i - 1]);
  ElemSet n = p.min_of(r.layers[i]);
  if (m == 0 || n == 0) throw std::invalid_argument("x_complex: empty layer");
  std::vector<std::string> names;
  std::vector<int> left = elems_of(m), right = elems_of(n);
  for (int e : left) names.push_back(std::to_string(i) + ":" + p.name(e));
  for (int e : right) names.push_back(std::to_string(i + 1) + ":" + p.name(e));
  std::vector<VertexMask> gens;
  for (size_t a = 0; a < left.size(); ++a)
    for (size_t b = 0; b < right.size(); ++b)
      if (p.leq(left[a], right[b]))
        gens.push_back((VertexMask{1} << a) | (VertexMask{1} << (left.size() + b)));
  return SComplex::from_nonfaces(std::move(names), std::move(gens));
}

// Reduction of X_i(R) used to avoid building it: elements in
// max(R_i) & min(R_{i+1}) are comparable only to themselves and split
// off one suspension each; the remainder suspends the Y complex on the
// smaller side.
struct YReduction {
  bool contractible = false;        // some side vertex has no cross edge
  int suspensions = 0;              // |max(R_i) & min(R_{i+1})|
  std::optional<SComplex> y;        // absent when the remainder is empty
  bool y_on_max_side = true;
};

inline YReduction y_reduction(const Poset& p, const Multidegree& r, int i) {
  if (i < 1 || i + 1 > r.n()) throw std::invalid_argument("y_reduction: slot out of range");
  ElemSet m = p.max_of(r.layers[i - 1]);
  ElemSet n = p.min_of(r.layers[i]);
  if (m == 0 || n == 0) throw std::invalid_argument("y_reduction: empty layer");
  YReduction out;
  bool isolated = false;
  for_each_elem(m, [&](int a) {
    if ((p.up_set(a) & n) == 0) isolated = true;
  });
  for_each_elem(n, [&](int b) {
    if ((p.down_set(b) & m) == 0) isolated = true;
  });
  if (isolated) {
    out.contractible = true;
    return out;
  }
  ElemSet shared = m & n;
  out.suspensions = set_size(shared);
  ElemSet a2 = m & ~shared, b2 = n & ~shared;
  if (a2 == 0) return out;  // remainder empty; X is a sphere S^(|shared|-1)
  // Y on the smaller remaining side (ties pick the max side).  A subset
  // is a face iff some opposite vertex is comparable to none of it.
  out.y_on_max_side = set_size(a2) <= set_size(b2);
  std::vector<int> side = elems_of(out.y_on_max_side ? a2 : b2);
  std::vector<int> opposite = elems_of(out.y_on_max_side ? b2 : a2);
  std::vector<VertexMask> blockers;  // per subset-side mask of comparables
  for (int q : opposite) {
    ElemSet comp = out.y_on_max_side ? p.down_set(q) : p.up_set(q);
    VertexMask mask = 0;
    for (size_t v = 0; v < side.size(); ++v)
      if (comp & elem_bit(side[v])) mask |= VertexMask{1} << v;
    blockers.push_back(mask);
  }
  auto is_face = [&](VertexMask t) {
    for (VertexMask b : blockers)
      if ((t & b) == 0) return true;
    return false;
  };
  std::vector<VertexMask> gens;
  VertexMask lim = (VertexMask{1} << side.size()) - 1;
  for (VertexMask t = 1; t <= lim; ++t) {
    if (is_face(t)) continue;
    bool minimal = true;
    VertexMask rest = t;
    while (rest && minimal) {
      int v = std::countr_zero(rest);
      if (!is_face(t & ~(VertexMask{1} << v))) minimal = false;
      rest &= rest - 1;
    }
    if (minimal) gens.push_back(t);
  }
  std::vector<std::string> names;
  for (int e : side) names.push_back(p.name(e));
  out.y = SComplex::from_nonfaces(std::move(names), std::move(gens));
  return out;
}

inline HPoly y_reduced_homology(const Poset& p, const Multidegree& r, int i,
                                const FieldSpec& k) {
  YReduction red = y_reduction(p, r, i);
  if (red.contractible) return HPoly{};
  if (!red.y) return HPoly::t_pow(red.suspensions - 1);
  return reduced_homology(*red.y, k).shifted(red.suspensions + 1);
}

// beta(R,t) = t^n * prod_i H~(X_i(R), t); the coefficient of t^s is
// beta_{|R|-s, R}, the Betti number in the s-linear strand.
inline HPoly beta_poly(int n, const Poset& p, const Multidegree& r, const FieldSpec& k) {
  if (r.n() != n) throw std::invalid_argument("beta_poly: layer count must equal n");
  if (!layers_nonempty(r)) throw std::invalid_argument("beta_poly: layers must be nonempty");
  for (int i = 0; i + 1 < n; ++i)
    if (!p.subset_leq(r.layers[i], r.layers[i + 1])) return HPoly{};
  HPoly prod = HPoly::t_pow(0);
  for (int i = 1; i < n; ++i) {
    prod = prod * y_reduced_homology(p, r, i, k);
    if (prod.is_zero()) return prod;
  }
  return prod.shifted(n);
}

inline std::map<int, long long> beta_R_strand(int n, const Poset& p, const Multidegree& r,
                                              const FieldSpec& k) {
  std::map<int, long long> out;
  HPoly poly = beta_poly(n, p, r, k);
  for (auto& [s, v] : poly.coefficients()) out[r.total() - s] = v;
  return out;
}

inline BettiTable betti_table_fast(int n, const Poset& p, const FieldSpec& k) {
  guards::require_vertices(p.size(), 12, "betti_table_fast");
  if (n > 5) throw GuardError("betti_table_fast is limited to n <= 5");
  BettiTable table(Convention::ideal);
  enumerate_multidegrees(n, p, Prune::chains, [&](const Multidegree& r) {
    HPoly poly = beta_poly(n, p, r, k);
    for (auto& [s, v] : poly.coefficients()) table.add(r.total() - s, r.total(), v);
  });
  return table;
}

}  // namespace lp
