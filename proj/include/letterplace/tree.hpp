#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "letterplace/betti_table.hpp"
#include "letterplace/ideals.hpp"
#include "letterplace/multidegree.hpp"
#include "letterplace/poset.hpp"

namespace lp {

// Recursive Betti tables for posets whose Hasse diagram is a rooted
// forest.  A connected poset with root a satisfies
//   beta_{i,j}(L(n,P)) = beta_{i,j}(L(n,P\a)) + beta_{i,j-1}(L(n-1,P))
//                        + beta_{i-1,j-1}(L(n,P\a)),
// a forest is the tensor product of its components (in the quotient
// convention), and the bases are n = 1 (Koszul) and |P| = 1.

namespace detail {

inline BettiTable koszul_table(int vars) {
  BettiTable t(Convention::ideal);
  for (int i = 0; i < vars; ++i) t.add(i, i + 1, binomial(vars, i + 1));
  return t;
}

inline BettiTable tree_table_rec(int n, const Poset& p, bool memoize,
                                 std::map<std::pair<int, std::string>, BettiTable>& memo) {
  if (p.size() == 0) return BettiTable(Convention::ideal);
  if (n == 1) return koszul_table(p.size());
  if (p.size() == 1) {
    BettiTable t(Convention::ideal);
    t.add(0, n, 1);
    return t;
  }
  std::pair<int, std::string> key{n, p.forest_canonical()};
  if (memoize) {
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  BettiTable result(Convention::ideal);
  auto comps = p.components();
  if (comps.size() > 1) {
    BettiTable acc(Convention::quotient);
    for (auto& c : comps)
      acc = BettiTable::tensor(acc, tree_table_rec(n, c, memoize, memo).to_quotient());
    result = acc.to_ideal();
  } else {
    int root = *p.unique_min();
    BettiTable without_root = tree_table_rec(n, p.remove_element(root), memoize, memo);
    BettiTable one_less = tree_table_rec(n - 1, p, memoize, memo);
    result = without_root + one_less.shifted(0, 1) + without_root.shifted(1, 1);
  }
  if (memoize) memo.emplace(std::move(key), result);
  return result;
}

}  // namespace detail

inline BettiTable betti_table_tree(int n, const Poset& p, bool memoize = true) {
  if (n < 1) throw std::invalid_argument("betti_table_tree requires n >= 1");
  if (!p.is_rooted_forest())
    throw std::invalid_argument("betti_table_tree: Hasse diagram is not a rooted forest");
  std::map<std::pair<int, std::string>, BettiTable> memo;
  return detail::tree_table_rec(n, p, memoize, memo);
}

// On a rooted tree every admissible multidegree carries a single Betti
// number: 1, in the (1 + sum |max(R_i)|)-linear strand.
inline std::optional<std::pair<int, long long>> tree_multigraded_beta(int n, const Poset& p,
                                                                      const Multidegree& r) {
  if (!p.is_rooted_forest() || !p.unique_min())
    throw std::invalid_argument("tree_multigraded_beta requires a rooted tree");
  if (r.n() != n || !layers_nonempty(r))
    throw std::invalid_argument("tree_multigraded_beta: bad multidegree");
  if (!layers_chain(p, r)) return std::nullopt;
  int strand = 1;
  for (int i = 0; i + 1 < n; ++i) strand += set_size(p.max_of(r.layers[i]));
  return std::pair{r.total() - strand, 1LL};
}

// Closed form for the V poset (one root, two incomparable covers):
// row n of the diagram is (2n+1, 2n+1, 1) and rows n+1 .. 2n-1 are
// (., 1, 1).
inline BettiTable v_closed_form(int n) {
  if (n < 2) throw std::invalid_argument("v_closed_form requires n >= 2");
  BettiTable t(Convention::ideal);
  t.add(0, n, 2 * n + 1);
  t.add(1, n + 1, 2 * n + 1);
  t.add(2, n + 2, 1);
  for (int j = n + 2; j <= 2 * n; ++j) {
    t.add(1, j, 1);
    t.add(2, j + 1, 1);
  }
  return t;
}

}  // namespace lp
