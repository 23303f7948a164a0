#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "letterplace/strand.hpp"
#include "letterplace/tree.hpp"

namespace lp {

struct CheckItem {
  enum class Status { pass, fail, skip };
  std::string name;
  Status status = Status::pass;
  std::string detail;
};

struct Report {
  std::vector<CheckItem> items;

  void add(std::string name, bool pass, std::string detail = "") {
    items.push_back({std::move(name),
                     pass ? CheckItem::Status::pass : CheckItem::Status::fail,
                     std::move(detail)});
  }
  void skip(std::string name, std::string detail) {
    items.push_back({std::move(name), CheckItem::Status::skip, std::move(detail)});
  }

  int failures() const {
    int f = 0;
    for (auto& i : items) f += i.status == CheckItem::Status::fail;
    return f;
  }
  bool all_pass() const { return failures() == 0; }

  std::string render() const {
    std::ostringstream out;
    for (auto& i : items) {
      const char* tag = i.status == CheckItem::Status::pass   ? "[pass]"
                        : i.status == CheckItem::Status::fail ? "[FAIL]"
                                                              : "[skip]";
      out << tag << " " << i.name;
      if (!i.detail.empty()) out << ": " << i.detail;
      out << "\n";
    }
    return out.str();
  }
};

namespace detail {

// All pairs between consecutive layers comparable: the first-strand
// criterion.
inline bool first_strand_predicate(const Poset& p, const Multidegree& r) {
  for (int i = 0; i + 1 < r.n(); ++i) {
    bool all = true;
    for_each_elem(r.layers[i], [&](int a) {
      if ((p.up_set(a) & r.layers[i + 1]) != r.layers[i + 1]) all = false;
    });
    if (!all) return false;
  }
  return true;
}

// max(R_i) and min(R_{i+1}) have cardinality c and their comparability
// relation is a perfect matching: the last-strand criterion.
inline bool last_strand_predicate(const Poset& p, const Multidegree& r, int width) {
  for (int i = 0; i + 1 < r.n(); ++i) {
    ElemSet m = p.max_of(r.layers[i]);
    ElemSet nn = p.min_of(r.layers[i + 1]);
    if (set_size(m) != width || set_size(nn) != width) return false;
    bool ok = true;
    for_each_elem(m, [&](int a) {
      if (set_size(p.up_set(a) & nn) != 1) ok = false;
    });
    for_each_elem(nn, [&](int b) {
      if (set_size(p.down_set(b) & m) != 1) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

inline bool max_antichain(const Poset& p, ElemSet s) {
  if (!p.is_antichain(s)) return false;
  bool maximal = true;
  for_each_elem(p.all() & ~s, [&](int q) {
    // q could extend s iff comparable to nothing in s
    if (((p.up_set(q) | p.down_set(q)) & s & ~elem_bit(q)) == 0) maximal = false;
  });
  return maximal;
}

// The three-condition criterion for the top homological degree |P|-1.
inline bool top_degree_predicate(const Poset& p, const Multidegree& r) {
  if (r.support_union() != p.all()) return false;
  for (int i = 0; i + 1 < r.n(); ++i) {
    ElemSet m = p.max_of(r.layers[i]);
    if (m != p.min_of(r.layers[i + 1])) return false;
    if (!max_antichain(p, m)) return false;
  }
  return true;
}

inline std::string count2(size_t predicted, size_t observed) {
  return std::to_string(predicted) + " predicted / " + std::to_string(observed) + " observed";
}

}  // namespace detail

// Verifies the structural descriptions of the Betti table against the
// computed values: first/last strand multidegrees, strand starting
// degrees, the top homological degree, the level criterion, and the
// layer-cardinality identity.  Violations are reported, not thrown.
inline Report classify_strands(int n, const Poset& p, const FieldSpec& k,
                               const BettiTable& ideal_table) {
  Report rep;
  int c = p.width();
  int pd = p.size() - 1;

  std::vector<Multidegree> pruned = list_multidegrees(n, p, Prune::chains);
  std::vector<HPoly> polys;
  polys.reserve(pruned.size());
  for (auto& r : pruned) polys.push_back(beta_poly(n, p, r, k));

  // (a) first strand
  {
    bool ok = true;
    size_t predicted = 0, observed = 0;
    for (size_t idx = 0; idx < pruned.size(); ++idx) {
      bool pred = detail::first_strand_predicate(p, pruned[idx]);
      long long coeff = polys[idx].coeff(n);
      predicted += pred;
      observed += coeff != 0;
      if (pred != (coeff != 0) || (pred && coeff != 1)) ok = false;
    }
    rep.add("first strand (all-pairs criterion)", ok, detail::count2(predicted, observed));
  }

  // (b) last strand
  {
    int last = c * (n - 1) + 1;
    bool ok = true;
    size_t predicted = 0, observed = 0;
    for (size_t idx = 0; idx < pruned.size(); ++idx) {
      bool pred = detail::last_strand_predicate(p, pruned[idx], c);
      long long coeff = polys[idx].coeff(last);
      predicted += pred;
      observed += coeff != 0;
      if (pred != (coeff != 0) || (pred && coeff != 1)) ok = false;
    }
    rep.add("last strand (matching criterion)", ok, detail::count2(predicted, observed));
  }

  // (c) strand starting degrees
  if (n >= 2) {
    bool ok = true;
    std::string bad;
    for (int i = 1; i <= c - 1; ++i) {
      int start_strand = (i + 1) * n - i;
      int vanish_above = i * n - (i - 1);
      bool saw_start = false;
      for (auto& [ij, v] : ideal_table.entries()) {
        int strand = ij.second - ij.first;
        if (strand == start_strand && ij.first == i) saw_start = true;
        if (strand == start_strand && ij.first < i) ok = false;
        if (strand > vanish_above && ij.first <= i - 1) ok = false;
      }
      if (!saw_start) ok = false;
      if (!ok && bad.empty()) bad = "at antichain size " + std::to_string(i + 1);
    }
    rep.add("strand starting degrees", ok, bad);
  } else {
    rep.skip("strand starting degrees", "n = 1");
  }

  // (d) top homological degree
  {
    bool ok = true;
    size_t predicted = 0, observed = 0;
    for (size_t idx = 0; idx < pruned.size(); ++idx) {
      bool pred = detail::top_degree_predicate(p, pruned[idx]);
      long long coeff = polys[idx].coeff(pruned[idx].total() - pd);
      predicted += pred;
      observed += coeff != 0;
      if (pred != (coeff != 0) || (pred && coeff != 1)) ok = false;
    }
    rep.add("top homological degree criterion", ok, detail::count2(predicted, observed));
  }

  // (e) level criterion (the biconditional needs n >= 2; at n = 1 the
  // ideal is the Koszul complex and is always level)
  if (n >= 2) {
    bool level_poset = p.all_maximal_antichains_same_size();
    std::set<int> top_degrees;
    for (auto& [ij, v] : ideal_table.entries())
      if (ij.first == pd) top_degrees.insert(ij.second);
    bool level_table = top_degrees.size() == 1;
    bool ok = level_poset == level_table && !top_degrees.empty();
    if (level_poset && ok) ok = *top_degrees.begin() == p.size() + (n - 1) * c;
    rep.add("level criterion", ok,
            level_poset ? "level, top degree " + std::to_string(p.size() + (n - 1) * c)
                        : "not level (" + std::to_string(top_degrees.size()) +
                              " top internal degrees)");
  } else {
    bool ok = !ideal_table.entries().empty() && ideal_table.at(pd, p.size()) > 0;
    std::set<int> top_degrees;
    for (auto& [ij, v] : ideal_table.entries())
      if (ij.first == pd) top_degrees.insert(ij.second);
    ok = ok && top_degrees.size() == 1;
    rep.add("level criterion", ok, "n = 1: always level, top degree " +
                                       std::to_string(p.size()));
  }

  // (f) cardinality identity
  {
    bool ok = true;
    for (auto& r : pruned) {
      int lhs = r.total();
      int rhs = set_size(r.support_union());
      for (int i = 0; i + 1 < r.n(); ++i) rhs += set_size(r.layers[i] & r.layers[i + 1]);
      if (lhs != rhs) ok = false;
    }
    rep.add("layer cardinality identity", ok,
            std::to_string(pruned.size()) + " multidegrees");
  }

  return rep;
}

}  // namespace lp
