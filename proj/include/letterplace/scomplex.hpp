#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "letterplace/guards.hpp"

namespace lp {

using VertexMask = std::uint64_t;

// Simplicial complex presented by its vertex list and the inclusion-
// minimal nonfaces (the minimal monomial generators of its
// Stanley-Reisner ideal).  Faces are exactly the vertex subsets
// containing no nonface.  The complex {emptyset} has no nonfaces on an
// empty vertex set; a nonface equal to the empty set denotes the void
// complex with no faces at all.
class SComplex {
 public:
  static SComplex from_nonfaces(std::vector<std::string> vertices,
                                std::vector<VertexMask> generators) {
    SComplex x;
    if (vertices.size() > 64) throw GuardError("complexes with more than 64 vertices are unsupported");
    x.vertices_ = std::move(vertices);
    {
      std::unordered_set<std::string> seen;
      for (auto& v : x.vertices_)
        if (!seen.insert(v).second)
          throw std::invalid_argument("duplicate vertex name: " + v);
    }
    VertexMask allv = x.all_vertices();
    for (VertexMask g : generators)
      if ((g & ~allv) != 0)
        throw std::invalid_argument("nonface generator mentions an unknown vertex");
    // keep inclusion-minimal generators only
    std::sort(generators.begin(), generators.end(),
              [](VertexMask a, VertexMask b) {
                int ca = std::popcount(a), cb = std::popcount(b);
                return ca != cb ? ca < cb : a < b;
              });
    for (VertexMask g : generators) {
      bool redundant = false;
      for (VertexMask kept : x.nonfaces_)
        if ((kept & g) == kept) {
          redundant = true;
          break;
        }
      if (!redundant) x.nonfaces_.push_back(g);
    }
    std::sort(x.nonfaces_.begin(), x.nonfaces_.end());
    return x;
  }

  static SComplex from_named_nonfaces(std::vector<std::string> vertices,
                                      const std::vector<std::vector<std::string>>& gens) {
    std::vector<VertexMask> masks;
    for (auto& g : gens) {
      VertexMask m = 0;
      for (auto& n : g) {
        auto it = std::find(vertices.begin(), vertices.end(), n);
        if (it == vertices.end())
          throw std::invalid_argument("nonface generator mentions an unknown vertex: " + n);
        m |= VertexMask{1} << (it - vertices.begin());
      }
      masks.push_back(m);
    }
    return from_nonfaces(std::move(vertices), std::move(masks));
  }

  static SComplex full_simplex(std::vector<std::string> vertices) {
    return from_nonfaces(std::move(vertices), {});
  }

  int n_vertices() const { return static_cast<int>(vertices_.size()); }
  const std::vector<std::string>& vertex_names() const { return vertices_; }
  const std::vector<VertexMask>& nonfaces() const { return nonfaces_; }
  VertexMask all_vertices() const {
    return n_vertices() == 64 ? ~VertexMask{0} : (VertexMask{1} << n_vertices()) - 1;
  }

  bool is_void() const { return !nonfaces_.empty() && nonfaces_.front() == 0; }

  bool is_face(VertexMask f) const {
    for (VertexMask n : nonfaces_)
      if ((n & f) == n) return false;
    return true;
  }

  // Restriction to a vertex subset: keeps the nonfaces lying inside it.
  SComplex restrict_to(VertexMask keep) const {
    std::vector<std::string> names;
    std::vector<int> newindex(n_vertices(), -1);
    for (int v = 0; v < n_vertices(); ++v)
      if (keep & (VertexMask{1} << v)) {
        newindex[v] = static_cast<int>(names.size());
        names.push_back(vertices_[v]);
      }
    std::vector<VertexMask> gens;
    for (VertexMask n : nonfaces_) {
      if ((n & ~keep) != 0) continue;
      VertexMask m = 0;
      VertexMask rest = n;
      while (rest) {
        int v = std::countr_zero(rest);
        m |= VertexMask{1} << newindex[v];
        rest &= rest - 1;
      }
      gens.push_back(m);
    }
    return from_nonfaces(std::move(names), std::move(gens));
  }

  // Join: faces are unions of a face of each factor; nonfaces are the
  // nonfaces of the factors.  Vertex names must be disjoint.
  static SComplex join(const SComplex& a, const SComplex& b) {
    std::vector<std::string> names = a.vertices_;
    for (auto& n : b.vertices_) {
      if (std::find(a.vertices_.begin(), a.vertices_.end(), n) != a.vertices_.end())
        throw std::invalid_argument("join requires disjoint vertex names: " + n);
      names.push_back(n);
    }
    std::vector<VertexMask> gens = a.nonfaces_;
    for (VertexMask n : b.nonfaces_) gens.push_back(n << a.n_vertices());
    return from_nonfaces(std::move(names), std::move(gens));
  }

  SComplex suspension() const {
    std::vector<std::string> two;
    for (const char* base : {"s0", "s1"}) {
      std::string n = base;
      while (std::find(vertices_.begin(), vertices_.end(), n) != vertices_.end()) n += "'";
      two.push_back(n);
    }
    SComplex points = from_nonfaces(two, {VertexMask{3}});
    return join(*this, points);
  }

  // All faces grouped by cardinality (index k holds the k-vertex
  // faces, ascending as masks); index 0 is the empty face.
  std::vector<std::vector<VertexMask>> faces_by_card() const {
    if (is_void()) return {};
    std::vector<std::vector<VertexMask>> levels;
    levels.push_back({VertexMask{0}});
    long long total = 1;
    // nonfaces containing each vertex, for incremental checks
    std::vector<std::vector<VertexMask>> with_vertex(n_vertices());
    for (VertexMask n : nonfaces_) {
      VertexMask rest = n;
      while (rest) {
        int v = std::countr_zero(rest);
        with_vertex[v].push_back(n);
        rest &= rest - 1;
      }
    }
    while (!levels.back().empty()) {
      std::vector<VertexMask> next;
      for (VertexMask f : levels.back()) {
        int start = f == 0 ? 0 : 64 - std::countl_zero(f);
        for (int v = start; v < n_vertices(); ++v) {
          VertexMask cand = f | (VertexMask{1} << v);
          bool ok = true;
          for (VertexMask n : with_vertex[v])
            if ((n & cand) == n) {
              ok = false;
              break;
            }
          if (ok) next.push_back(cand);
        }
      }
      total += static_cast<long long>(next.size());
      if (total > guards::kMaxFaces)
        throw GuardError("face enumeration exceeds guard of 2^24 faces");
      if (next.empty()) break;
      std::sort(next.begin(), next.end());
      levels.push_back(std::move(next));
    }
    return levels;
  }

  long long face_count() const {
    long long total = 0;
    for (auto& lv : faces_by_card()) total += static_cast<long long>(lv.size());
    return total;
  }

  std::vector<VertexMask> facets() const {
    auto levels = faces_by_card();
    std::vector<VertexMask> out;
    for (auto& lv : levels)
      for (VertexMask f : lv) {
        bool maximal = true;
        for (int v = 0; v < n_vertices() && maximal; ++v) {
          if (f & (VertexMask{1} << v)) continue;
          if (is_face(f | (VertexMask{1} << v))) maximal = false;
        }
        if (maximal) out.push_back(f);
      }
    return out;
  }

  std::string face_to_string(VertexMask f) const {
    std::string out = "{";
    bool first = true;
    for (int v = 0; v < n_vertices(); ++v)
      if (f & (VertexMask{1} << v)) {
        if (!first) out += ",";
        out += vertices_[v];
        first = false;
      }
    return out + "}";
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<VertexMask> nonfaces_;
};

// Homotopy-preserving pruning of a bipartite edge-ideal complex: while
// some vertex's neighbor set contains another same-side vertex's
// neighbor set, the vertex with the larger set is deleted (ties delete
// the later-declared vertex).
inline SComplex reduce_dominated(const SComplex& x, VertexMask side_a, VertexMask side_b) {
  VertexMask allv = x.all_vertices();
  if ((side_a & side_b) != 0 || (side_a | side_b) != allv)
    throw std::invalid_argument("reduce_dominated: sides must partition the vertices");
  for (VertexMask n : x.nonfaces()) {
    if (std::popcount(n) != 2 || std::popcount(n & side_a) != 1)
      throw std::invalid_argument("reduce_dominated: nonfaces are not bipartite quadratic");
  }
  std::vector<VertexMask> nb(x.n_vertices(), 0);
  for (VertexMask n : x.nonfaces()) {
    int u = std::countr_zero(n);
    int v = std::countr_zero(n & (n - 1));
    nb[u] |= VertexMask{1} << v;
    nb[v] |= VertexMask{1} << u;
  }
  VertexMask alive = allv;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u = 0; u < x.n_vertices() && !changed; ++u) {
      if (!(alive & (VertexMask{1} << u))) continue;
      for (int v = u + 1; v < x.n_vertices() && !changed; ++v) {
        if (!(alive & (VertexMask{1} << v))) continue;
        bool same_side = ((side_a >> u) & 1) == ((side_a >> v) & 1);
        if (!same_side) continue;
        VertexMask nu = nb[u] & alive, nv = nb[v] & alive;
        if ((nu & ~nv) == 0) {  // N(u) subset of N(v): delete v
          alive &= ~(VertexMask{1} << v);
          changed = true;
        } else if ((nv & ~nu) == 0) {  // N(v) strict subset: delete u
          alive &= ~(VertexMask{1} << u);
          changed = true;
        }
      }
    }
  }
  return x.restrict_to(alive);
}

}  // namespace lp
