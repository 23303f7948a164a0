#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "letterplace/poset.hpp"

namespace lp {

// Multidegree R of [n] x P, stored layer by layer: layer i holds the
// elements paired with slot i+1.
struct Multidegree {
  std::vector<ElemSet> layers;

  int n() const { return static_cast<int>(layers.size()); }

  int total() const {
    int t = 0;
    for (ElemSet l : layers) t += set_size(l);
    return t;
  }

  ElemSet support_union() const {
    ElemSet u = 0;
    for (ElemSet l : layers) u |= l;
    return u;
  }

  bool operator==(const Multidegree& o) const { return layers == o.layers; }

  // Vertex mask inside Delta(n,P): slot i, element e -> bit (i-1)*|P| + e.
  std::uint64_t support_mask(int poset_size) const {
    std::uint64_t m = 0;
    for (int i = 0; i < n(); ++i) m |= static_cast<std::uint64_t>(layers[i]) << (i * poset_size);
    return m;
  }

  static Multidegree from_support_mask(std::uint64_t mask, int n, int poset_size) {
    Multidegree r;
    ElemSet layer_mask = poset_size == 64 ? ~ElemSet{0} : (ElemSet{1} << poset_size) - 1;
    for (int i = 0; i < n; ++i) r.layers.push_back((mask >> (i * poset_size)) & layer_mask);
    return r;
  }
};

inline bool layers_nonempty(const Multidegree& r) {
  for (ElemSet l : r.layers)
    if (l == 0) return false;
  return true;
}

// Consecutive layers comparable in the subset order (with all layers
// nonempty); the necessary condition for a nonzero Betti number.
inline bool layers_chain(const Poset& p, const Multidegree& r) {
  if (!layers_nonempty(r)) return false;
  for (int i = 0; i + 1 < r.n(); ++i)
    if (!p.subset_leq(r.layers[i], r.layers[i + 1])) return false;
  return true;
}

// |R| bound from the resolution shape: j <= pd + reg for every nonzero
// entry, i.e. |R| <= (|P| - 1) + width(P) * (n - 1) + 1.
inline int multidegree_budget(int n, const Poset& p) {
  return (p.size() - 1) + p.width() * (n - 1) + 1;
}

enum class Prune { none, chains };

// Enumerates multidegrees in deterministic lexicographic order.  With
// pruning, only chains R_1 <= ... <= R_n of nonempty layers within the
// degree budget are produced; without, all 2^(n|P|) supports.
inline void enumerate_multidegrees(int n, const Poset& p, Prune prune,
                                   const std::function<void(const Multidegree&)>& emit) {
  if (n < 1) throw std::invalid_argument("enumerate_multidegrees requires n >= 1");
  if (prune == Prune::none) {
    if (n * p.size() > 30)
      throw GuardError("unpruned enumeration is limited to n*|P| <= 30");
    std::uint64_t count = std::uint64_t{1} << (n * p.size());
    for (std::uint64_t m = 0; m < count; ++m)
      emit(Multidegree::from_support_mask(m, n, p.size()));
    return;
  }
  int budget = multidegree_budget(n, p);
  ElemSet lim = p.all();
  Multidegree r;
  std::function<void(int, int)> rec = [&](int depth, int used) {
    if (depth == n) {
      emit(r);
      return;
    }
    int remaining_min = n - depth - 1;  // later layers need one element each
    for (ElemSet s = 1; s <= lim; ++s) {
      if (used + set_size(s) + remaining_min <= budget &&
          (depth == 0 || p.subset_leq(r.layers.back(), s))) {
        r.layers.push_back(s);
        rec(depth + 1, used + set_size(s));
        r.layers.pop_back();
      }
      if (s == lim) break;
    }
  };
  if (p.size() > 0) rec(0, 0);
}

inline std::vector<Multidegree> list_multidegrees(int n, const Poset& p, Prune prune) {
  std::vector<Multidegree> out;
  enumerate_multidegrees(n, p, prune, [&](const Multidegree& r) { out.push_back(r); });
  return out;
}

// "R_1;R_2;...;R_n" with elements comma-separated inside each layer.
inline std::string render_multidegree(const Poset& p, const Multidegree& r) {
  std::string out;
  for (int i = 0; i < r.n(); ++i) {
    if (i) out += ";";
    out += p.set_to_string(r.layers[i]);
  }
  return out;
}

}  // namespace lp
