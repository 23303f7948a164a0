#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "letterplace/guards.hpp"

namespace lp {

// Subset of poset elements as a bitmask over dense element indices.
using ElemSet = std::uint64_t;

inline int set_size(ElemSet s) { return std::popcount(s); }
inline ElemSet elem_bit(int i) { return ElemSet{1} << i; }

template <class Fn>
inline void for_each_elem(ElemSet s, Fn&& fn) {
  while (s) {
    int i = std::countr_zero(s);
    fn(i);
    s &= s - 1;
  }
}

inline std::vector<int> elems_of(ElemSet s) {
  std::vector<int> out;
  for_each_elem(s, [&](int i) { out.push_back(i); });
  return out;
}

// Finite poset.  Elements are opaque case-sensitive strings mapped to
// dense indices in declaration order; the order relation is cached as
// the reflexive-transitive closure of the cover relation.
class Poset {
 public:
  Poset() = default;

  // `relations` may contain any comparabilities; the cover relation is
  // the transitive reduction.  Throws ParseError on duplicates, unknown
  // names, or cycles.
  static Poset from_relations(std::vector<std::string> names,
                              const std::vector<std::pair<std::string, std::string>>& relations) {
    Poset p;
    guards::require_vertices(static_cast<int>(names.size()), 32, "poset");
    if (names.size() > 64) throw GuardError("posets with more than 64 elements are unsupported");
    p.names_ = std::move(names);
    for (int i = 0; i < static_cast<int>(p.names_.size()); ++i) {
      if (!p.index_.emplace(p.names_[i], i).second)
        throw ParseError("duplicate element: " + p.names_[i]);
    }
    std::vector<std::vector<int>> adj(p.size());
    for (auto& [a, b] : relations) {
      auto ia = p.index_.find(a), ib = p.index_.find(b);
      if (ia == p.index_.end()) throw ParseError("relation references undeclared element: " + a);
      if (ib == p.index_.end()) throw ParseError("relation references undeclared element: " + b);
      if (ia->second == ib->second)
        throw ParseError("cycle detected: " + a + " < " + a);
      adj[ia->second].push_back(ib->second);
    }
    p.check_acyclic(adj);
    p.build_closure(adj);
    p.build_covers();
    return p;
  }

  // Poset file format: one declaration per line.  A bare token declares
  // an element, "p < q" declares a comparability, '#' starts a comment.
  static Poset parse(std::string_view text) {
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> relations;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
      std::istringstream ls(line);
      std::vector<std::string> tok;
      for (std::string t; ls >> t;) tok.push_back(t);
      if (tok.empty()) continue;
      if (tok.size() == 1) {
        names.push_back(tok[0]);
      } else if (tok.size() == 3 && tok[1] == "<") {
        relations.emplace_back(tok[0], tok[2]);
      } else {
        throw ParseError("line " + std::to_string(lineno) +
                         ": expected an element name or \"p < q\"");
      }
    }
    return from_relations(std::move(names), relations);
  }

  static Poset chain(int n) {
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> rel;
    for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
    for (int i = 1; i < n; ++i) rel.emplace_back(std::to_string(i), std::to_string(i + 1));
    return from_relations(std::move(names), rel);
  }

  static Poset antichain(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return from_relations(std::move(names), {});
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<int> index_of(std::string_view n) const {
    auto it = index_.find(std::string(n));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool leq(int p, int q) const { return (up_[p] >> q) & 1; }
  ElemSet up_set(int p) const { return up_[p]; }      // {q : p <= q}
  ElemSet down_set(int q) const { return down_[q]; }  // {p : p <= q}

  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  ElemSet all() const { return size() == 64 ? ~ElemSet{0} : (ElemSet{1} << size()) - 1; }

  ElemSet min_of(ElemSet s) const {
    ElemSet out = 0;
    for_each_elem(s, [&](int p) {
      if (((down_[p] & ~elem_bit(p)) & s) == 0) out |= elem_bit(p);
    });
    return out;
  }

  ElemSet max_of(ElemSet s) const {
    ElemSet out = 0;
    for_each_elem(s, [&](int p) {
      if (((up_[p] & ~elem_bit(p)) & s) == 0) out |= elem_bit(p);
    });
    return out;
  }

  ElemSet minimals() const { return min_of(all()); }
  ElemSet maximals() const { return max_of(all()); }

  bool is_antichain(ElemSet s) const {
    bool ok = true;
    for_each_elem(s, [&](int p) {
      if ((comparable_[p] & s) != 0) ok = false;
    });
    return ok;
  }

  // Subset order of nonempty subsets: A <= B iff every maximal element
  // of A lies below some minimal element of B and every minimal element
  // of B lies above some maximal element of A.  Reflexive exactly on
  // antichains.
  bool subset_leq(ElemSet a, ElemSet b) const {
    if (a == 0 || b == 0)
      throw std::invalid_argument("subset_leq requires nonempty subsets");
    ElemSet ma = max_of(a), mb = min_of(b);
    bool ok = true;
    for_each_elem(ma, [&](int p) {
      if ((up_[p] & mb) == 0) ok = false;
    });
    if (!ok) return false;
    for_each_elem(mb, [&](int q) {
      if ((down_[q] & ma) == 0) ok = false;
    });
    return ok;
  }

  // Maximum antichain cardinality, by subset scan (guarded).
  int width() const {
    scan_guard("width");
    int best = 0;
    ElemSet lim = all();
    for (ElemSet s = 1; s <= lim; ++s) {
      if (set_size(s) > best && is_antichain(s)) best = set_size(s);
      if (s == lim) break;
    }
    return best;
  }

  // Antichains maximal under inclusion, ascending as bitmasks.
  std::vector<ElemSet> maximal_antichains() const {
    scan_guard("maximal_antichains");
    std::vector<ElemSet> out;
    ElemSet lim = all();
    if (lim == 0) return out;
    for (ElemSet s = 1; s <= lim; ++s) {
      if (is_antichain(s)) {
        bool maximal = true;
        for_each_elem(lim & ~s, [&](int q) {
          if ((comparable_[q] & s) == 0) maximal = false;
        });
        if (maximal) out.push_back(s);
      }
      if (s == lim) break;
    }
    return out;
  }

  bool all_maximal_antichains_same_size() const {
    auto mas = maximal_antichains();
    for (auto& m : mas)
      if (set_size(m) != set_size(mas.front())) return false;
    return true;
  }

  // Isotone maps `from` -> `to` in lexicographic order (by image index,
  // elements in declaration order).
  static std::vector<std::vector<int>> isotone_maps(const Poset& from, const Poset& to) {
    std::vector<std::vector<int>> out;
    std::vector<int> img(from.size(), -1);
    std::function<void(int)> rec = [&](int k) {
      if (k == from.size()) {
        out.push_back(img);
        return;
      }
      for (int q = 0; q < to.size(); ++q) {
        bool ok = true;
        for (int j = 0; j < k && ok; ++j) {
          if (from.leq(j, k) && !to.leq(img[j], q)) ok = false;
          if (from.leq(k, j) && !to.leq(q, img[j])) ok = false;
        }
        if (ok) {
          img[k] = q;
          rec(k + 1);
          img[k] = -1;
        }
      }
    };
    rec(0);
    return out;
  }

  // n-multichains p_1 <= ... <= p_n, i.e. Hom([n], P) as tuples.
  std::vector<std::vector<int>> multichains(int n) const {
    if (n < 1) throw std::invalid_argument("multichains requires n >= 1");
    std::vector<std::vector<int>> out;
    std::vector<int> tup;
    std::function<void(int)> rec = [&](int k) {
      if (k == n) {
        out.push_back(tup);
        return;
      }
      for (int q = 0; q < size(); ++q) {
        if (k > 0 && !leq(tup.back(), q)) continue;
        tup.push_back(q);
        rec(k + 1);
        tup.pop_back();
      }
    };
    rec(0);
    return out;
  }

  // |Hom([n], P)| without materializing the maps.
  long long count_multichains(int n) const {
    if (n < 1) throw std::invalid_argument("count_multichains requires n >= 1");
    std::vector<long long> f(size(), 1);
    for (int k = 1; k < n; ++k) {
      std::vector<long long> g(size(), 0);
      for (int q = 0; q < size(); ++q)
        for_each_elem(down_[q], [&](int p) { g[q] += f[p]; });
      f = std::move(g);
    }
    long long total = 0;
    for (long long v : f) total += v;
    return total;
  }

  // |Hom(P, [n])| counted as multichains of order ideals.
  long long count_isotone_to_chain(int n) const {
    if (n < 1) throw std::invalid_argument("count_isotone_to_chain requires n >= 1");
    if (size() == 0) return 1;
    scan_guard("count_isotone_to_chain");
    ElemSet lim = all();
    std::vector<char> ideal(static_cast<size_t>(lim) + 1, 0);
    for (ElemSet s = 0;; ++s) {
      bool ok = true;
      for_each_elem(s, [&](int q) {
        if ((down_[q] & ~s) != 0) ok = false;
      });
      ideal[s] = ok;
      if (s == lim) break;
    }
    std::vector<long long> u(static_cast<size_t>(lim) + 1, 0);
    for (ElemSet s = 0;; ++s) {
      u[s] = ideal[s];
      if (s == lim) break;
    }
    for (int step = 0; step < n - 1; ++step) {
      // zeta transform: u[J] <- sum over subsets of J
      for (int b = 0; b < size(); ++b)
        for (ElemSet s = 0;; ++s) {
          if (s & elem_bit(b)) u[s] += u[s ^ elem_bit(b)];
          if (s == lim) break;
        }
      for (ElemSet s = 0;; ++s) {
        if (!ideal[s]) u[s] = 0;
        if (s == lim) break;
      }
    }
    return u[lim];
  }

  // --- rooted-forest machinery (Hasse diagram with tree structure) ---

  bool is_rooted_forest() const {
    std::vector<int> lower(size(), 0);
    for (auto& [p, q] : covers_) ++lower[q];
    for (int v = 0; v < size(); ++v)
      if (lower[v] > 1) return false;
    return true;
  }

  std::optional<int> unique_min() const {
    ElemSet m = minimals();
    if (set_size(m) != 1) return std::nullopt;
    return std::countr_zero(m);
  }

  Poset remove_element(int a) const {
    if (a < 0 || a >= size()) throw std::invalid_argument("remove_element: no such element");
    return induced(all() & ~elem_bit(a));
  }

  // Induced subposet on `keep`, preserving declaration order.
  Poset induced(ElemSet keep) const {
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> rel;
    for_each_elem(keep, [&](int i) { names.push_back(names_[i]); });
    for_each_elem(keep, [&](int p) {
      for_each_elem(up_[p] & keep & ~elem_bit(p),
                    [&](int q) { rel.emplace_back(names_[p], names_[q]); });
    });
    return from_relations(std::move(names), rel);
  }

  // Connected components of the comparability graph, ordered by their
  // least element.
  std::vector<Poset> components() const {
    std::vector<Poset> out;
    ElemSet seen = 0;
    for (int v = 0; v < size(); ++v) {
      if (seen & elem_bit(v)) continue;
      ElemSet comp = elem_bit(v);
      for (;;) {
        ElemSet grown = comp;
        for_each_elem(comp, [&](int p) { grown |= up_[p] | down_[p]; });
        if (grown == comp) break;
        comp = grown;
      }
      seen |= comp;
      out.push_back(induced(comp));
    }
    return out;
  }

  // Canonical encoding of a rooted forest up to isomorphism: children
  // encodings are sorted recursively.
  std::string forest_canonical() const {
    std::vector<std::vector<int>> children(size());
    for (auto& [p, q] : covers_) children[p].push_back(q);
    std::function<std::string(int)> enc = [&](int v) {
      std::vector<std::string> cs;
      for (int c : children[v]) cs.push_back(enc(c));
      std::sort(cs.begin(), cs.end());
      std::string s = "(";
      for (auto& c : cs) s += c;
      return s + ")";
    };
    std::vector<std::string> roots;
    for_each_elem(minimals(), [&](int r) { roots.push_back(enc(r)); });
    std::sort(roots.begin(), roots.end());
    std::string s;
    for (auto& r : roots) s += r;
    return s;
  }

  std::string set_to_string(ElemSet s) const {
    std::string out;
    for_each_elem(s, [&](int i) {
      if (!out.empty()) out += ",";
      out += names_[i];
    });
    return out;
  }

 private:
  void scan_guard(const std::string& what) const {
    guards::require_vertices(size(), 20, what + " (subset scan)");
  }

  void check_acyclic(const std::vector<std::vector<int>>& adj) const {
    // DFS with an explicit stack path so a cycle can be reported.
    std::vector<int> state(size(), 0);  // 0 unseen, 1 on path, 2 done
    std::vector<int> parent(size(), -1);
    std::function<void(int)> dfs = [&](int v) {
      state[v] = 1;
      for (int w : adj[v]) {
        if (state[w] == 1) {
          std::string cyc = names_[w];
          for (int u = v; u != w && u != -1; u = parent[u]) cyc = names_[u] + " < " + cyc;
          throw ParseError("cycle detected: " + names_[w] + " < " + cyc);
        }
        if (state[w] == 0) {
          parent[w] = v;
          dfs(w);
        }
      }
      state[v] = 2;
    };
    for (int v = 0; v < size(); ++v)
      if (state[v] == 0) dfs(v);
  }

  void build_closure(const std::vector<std::vector<int>>& adj) {
    up_.assign(size(), 0);
    for (int v = 0; v < size(); ++v) {
      up_[v] = elem_bit(v);
      for (int w : adj[v]) up_[v] |= elem_bit(w);
    }
    // Warshall over bitset rows.
    for (int k = 0; k < size(); ++k)
      for (int v = 0; v < size(); ++v)
        if (up_[v] & elem_bit(k)) up_[v] |= up_[k];
    down_.assign(size(), 0);
    comparable_.assign(size(), 0);
    for (int p = 0; p < size(); ++p)
      for_each_elem(up_[p], [&](int q) { down_[q] |= elem_bit(p); });
    for (int p = 0; p < size(); ++p)
      comparable_[p] = (up_[p] | down_[p]) & ~elem_bit(p);
  }

  void build_covers() {
    covers_.clear();
    for (int p = 0; p < size(); ++p)
      for_each_elem(up_[p] & ~elem_bit(p), [&](int q) {
        ElemSet between = up_[p] & down_[q] & ~elem_bit(p) & ~elem_bit(q);
        if (between == 0) covers_.emplace_back(p, q);
      });
    std::sort(covers_.begin(), covers_.end());
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<ElemSet> up_, down_, comparable_;
  std::vector<std::pair<int, int>> covers_;
};

}  // namespace lp
