#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "letterplace/poset.hpp"
#include "letterplace/scomplex.hpp"

namespace lp {

// Squarefree monomial in the letterplace variables, as its support.
// For L(n,P) generators the pairs are (slot, element index) with the
// slot-indexed elements forming a multichain; for L(P,n) generators
// they are (element index, slot).
struct LPMonomial {
  std::vector<std::pair<int, int>> support;  // slots are 1-based
};

// Generators of L(n,P): one monomial x_{1,p_1}...x_{n,p_n} per
// multichain p_1 <= ... <= p_n.
inline std::vector<LPMonomial> lp_generators(int n, const Poset& p) {
  std::vector<LPMonomial> out;
  for (auto& chain : p.multichains(n)) {
    LPMonomial m;
    for (int i = 0; i < n; ++i) m.support.emplace_back(i + 1, chain[i]);
    out.push_back(std::move(m));
  }
  return out;
}

// Generators of L(P,n): one monomial per isotone map P -> [n], the
// graph of the map.
inline std::vector<LPMonomial> colp_generators(const Poset& p, int n) {
  std::vector<LPMonomial> out;
  for (auto& phi : Poset::isotone_maps(p, Poset::chain(n))) {
    LPMonomial m;
    for (int e = 0; e < p.size(); ++e) m.support.emplace_back(e, phi[e] + 1);
    out.push_back(std::move(m));
  }
  return out;
}

inline std::string lp_monomial_string(const Poset& p, const LPMonomial& m) {
  std::string s;
  for (auto& [slot, elem] : m.support)
    s += "x[" + std::to_string(slot) + "," + p.name(elem) + "]";
  return s;
}

inline std::string colp_monomial_string(const Poset& p, const LPMonomial& m) {
  std::string s;
  for (auto& [elem, slot] : m.support)
    s += "x[" + p.name(elem) + "," + std::to_string(slot) + "]";
  return s;
}

// Stanley-Reisner complex of L(n,P) on the vertex set [n] x P; vertex
// (i, e) sits at bit (i-1)*|P| + e.
inline SComplex delta_complex(int n, const Poset& p) {
  guards::require_vertices(n * p.size(), 32, "delta_complex");
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i)
    for (int e = 0; e < p.size(); ++e) names.push_back(std::to_string(i) + ":" + p.name(e));
  std::vector<VertexMask> gens;
  for (auto& g : lp_generators(n, p)) {
    VertexMask m = 0;
    for (auto& [slot, elem] : g.support)
      m |= VertexMask{1} << ((slot - 1) * p.size() + elem);
    gens.push_back(m);
  }
  return SComplex::from_nonfaces(std::move(names), std::move(gens));
}

inline long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

struct MultiplicityBounds {
  long long lower;  // binom(n + |P| - 1, |P|)
  long long upper;  // n^|P|
  long long value;  // |Hom(P,[n])|
};

// Multiplicity of L(n,P) with its codimension bounds.
inline MultiplicityBounds multiplicity(int n, const Poset& p) {
  MultiplicityBounds b;
  int c = p.size();
  b.lower = binomial(static_cast<long long>(n) + c - 1, c);
  b.upper = 1;
  for (int i = 0; i < c; ++i) {
    if (b.upper > (1LL << 62) / std::max(n, 1)) {
      b.upper = INT64_MAX;  // saturate; far above any input here
      break;
    }
    b.upper *= n;
  }
  b.value = p.count_isotone_to_chain(n);
  if (b.value < b.lower || b.value > b.upper)
    throw std::logic_error("multiplicity bounds violated");
  return b;
}

}  // namespace lp
