#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "letterplace/field.hpp"
#include "letterplace/hpoly.hpp"
#include "letterplace/scomplex.hpp"

namespace lp {
namespace detail {

struct EntryOverflow {};

inline bool abs_less(long long a, long long b) {
  unsigned long long ua = a < 0 ? -static_cast<unsigned long long>(a) : a;
  unsigned long long ub = b < 0 ? -static_cast<unsigned long long>(b) : b;
  return ua < ub;
}
inline bool abs_less(const mpz_class& a, const mpz_class& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0;
}

inline __int128 mul(long long a, long long b) { return static_cast<__int128>(a) * b; }
inline mpz_class mul(const mpz_class& a, const mpz_class& b) { return a * b; }

inline long long exact_div(__int128 num, long long den) {
  __int128 q = num / den;
  if (q > INT64_MAX / 2 || q < INT64_MIN / 2) throw EntryOverflow{};
  return static_cast<long long>(q);
}
inline mpz_class exact_div(const mpz_class& num, const mpz_class& den) {
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

// Fraction-free Gaussian elimination (Bareiss).  Entries stay exact
// minors of the input; the int64 instantiation throws on overflow and
// the caller retries with GMP integers.
template <class Int>
int rank_bareiss(std::vector<std::vector<Int>>& m) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int rank = 0;
  Int prev = 1;
  for (int col = 0; rank < rows && col < cols; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0 && (pivot == -1 || abs_less(m[r][col], m[pivot][col]))) pivot = r;
    if (pivot == -1) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c)
        m[r][c] = exact_div(mul(m[rank][col], m[r][c]) - mul(m[r][col], m[rank][c]), prev);
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

// Sparse integer matrix, rows sorted by column.
struct SparseMatrix {
  int cols = 0;
  std::vector<std::vector<std::pair<int, std::int64_t>>> rows;
};

inline std::int64_t value_at(const std::vector<std::pair<int, std::int64_t>>& row, int col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, int c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? it->second : 0;
}

inline std::int64_t mod_pos(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, b = a % p, e = p - 2;  // p prime
  while (e) {
    if (e & 1) r = static_cast<std::int64_t>((static_cast<__int128>(r) * b) % p);
    b = static_cast<std::int64_t>((static_cast<__int128>(b) * b) % p);
    e >>= 1;
  }
  return r;
}

// row -= factor * pivot_row (exact integers; GF(p) when p > 0).
// Returns the merged row; registers new columns through `touch`.
template <class Touch>
std::vector<std::pair<int, std::int64_t>> row_axpy(
    const std::vector<std::pair<int, std::int64_t>>& row,
    const std::vector<std::pair<int, std::int64_t>>& pivot_row, std::int64_t factor,
    std::int64_t p, Touch&& touch) {
  std::vector<std::pair<int, std::int64_t>> out;
  out.reserve(row.size() + pivot_row.size());
  size_t i = 0, j = 0;
  auto push = [&](int col, std::int64_t v, bool fresh) {
    if (v == 0) return;
    if (p == 0 && (v > (std::int64_t{1} << 62) || v < -(std::int64_t{1} << 62)))
      throw EntryOverflow{};
    out.emplace_back(col, v);
    if (fresh) touch(col);
  };
  while (i < row.size() || j < pivot_row.size()) {
    if (j == pivot_row.size() || (i < row.size() && row[i].first < pivot_row[j].first)) {
      push(row[i].first, row[i].second, false);
      ++i;
    } else if (i == row.size() || pivot_row[j].first < row[i].first) {
      std::int64_t v;
      if (p > 0)
        v = mod_pos(-static_cast<std::int64_t>(
                        (static_cast<__int128>(factor) * pivot_row[j].second) % p),
                    p);
      else {
        __int128 prod = static_cast<__int128>(factor) * pivot_row[j].second;
        if (prod > (__int128{1} << 62) || prod < -(__int128{1} << 62)) throw EntryOverflow{};
        v = -static_cast<std::int64_t>(prod);
      }
      push(pivot_row[j].first, v, true);
      ++j;
    } else {
      std::int64_t v;
      if (p > 0)
        v = mod_pos(row[i].second - static_cast<std::int64_t>((static_cast<__int128>(factor) *
                                                               pivot_row[j].second) %
                                                              p),
                    p);
      else {
        __int128 prod = static_cast<__int128>(factor) * pivot_row[j].second;
        __int128 diff = static_cast<__int128>(row[i].second) - prod;
        if (diff > (__int128{1} << 62) || diff < -(__int128{1} << 62)) throw EntryOverflow{};
        v = static_cast<std::int64_t>(diff);
      }
      push(row[i].first, v, false);
      ++i;
      ++j;
    }
  }
  return out;
}

// Rank by sparse elimination.  Over GF(p) any nonzero pivot works; over
// the rationals only +-1 pivots are used (integer row operations stay
// exact) and whatever remains is finished by dense Bareiss.  Boundary
// matrices eliminate almost entirely with unit pivots.
inline int rank_sparse(const SparseMatrix& input, const FieldSpec& k) {
  const std::int64_t p = k.characteristic();
  auto rows = input.rows;
  if (p > 0)
    for (auto& row : rows) {
      std::vector<std::pair<int, std::int64_t>> reduced;
      for (auto& [c, v] : row) {
        std::int64_t m = mod_pos(v, p);
        if (m != 0) reduced.emplace_back(c, m);
      }
      row = std::move(reduced);
    }

  std::vector<std::vector<int>> col_rows(input.cols);  // may hold stale ids
  for (size_t r = 0; r < rows.size(); ++r)
    for (auto& [c, v] : rows[r]) col_rows[c].push_back(static_cast<int>(r));

  std::vector<char> alive(rows.size(), 1);
  int rank = 0;
  for (int c = 0; c < input.cols; ++c) {
    int pick = -1;
    size_t best_len = SIZE_MAX;
    for (int rid : col_rows[c]) {
      if (!alive[rid]) continue;
      std::int64_t v = value_at(rows[rid], c);
      if (v == 0) continue;
      if (p == 0 && v != 1 && v != -1) continue;
      if (rows[rid].size() < best_len) {
        best_len = rows[rid].size();
        pick = rid;
      }
    }
    if (pick == -1) continue;  // empty column, or no unit pivot (handled densely later)
    std::int64_t piv = value_at(rows[pick], c);
    if (p > 0 && piv != 1) {
      std::int64_t inv = inv_mod(piv, p);
      for (auto& [cc, v] : rows[pick])
        v = static_cast<std::int64_t>((static_cast<__int128>(v) * inv) % p);
      piv = 1;
    }
    std::vector<int> pending = col_rows[c];
    for (int rid : pending) {
      if (!alive[rid] || rid == pick) continue;
      std::int64_t a = value_at(rows[rid], c);
      if (a == 0) continue;
      // factor such that row - factor*pivot_row kills column c
      std::int64_t factor = p > 0 ? a : a * piv;  // piv is +-1 over QQ
      rows[rid] = row_axpy(rows[rid], rows[pick], factor, p,
                           [&](int col) { col_rows[col].push_back(rid); });
    }
    alive[pick] = 0;
    rows[pick].clear();
    rows[pick].shrink_to_fit();
    ++rank;
  }

  // leftover (rationals only): dense fraction-free elimination
  std::vector<int> rest;
  for (size_t r = 0; r < rows.size(); ++r)
    if (alive[r] && !rows[r].empty()) rest.push_back(static_cast<int>(r));
  if (rest.empty()) return rank;
  std::vector<int> live_cols;
  {
    std::vector<char> seen(input.cols, 0);
    for (int r : rest)
      for (auto& [c, v] : rows[r])
        if (!seen[c]) {
          seen[c] = 1;
          live_cols.push_back(c);
        }
    std::sort(live_cols.begin(), live_cols.end());
  }
  std::vector<int> col_index(input.cols, -1);
  for (size_t i = 0; i < live_cols.size(); ++i) col_index[live_cols[i]] = static_cast<int>(i);
  try {
    std::vector<std::vector<std::int64_t>> dense(
        rest.size(), std::vector<std::int64_t>(live_cols.size(), 0));
    for (size_t r = 0; r < rest.size(); ++r)
      for (auto& [c, v] : rows[rest[r]]) dense[r][col_index[c]] = v;
    return rank + rank_bareiss(dense);
  } catch (const EntryOverflow&) {
    std::vector<std::vector<mpz_class>> dense(rest.size(),
                                              std::vector<mpz_class>(live_cols.size()));
    for (size_t r = 0; r < rest.size(); ++r)
      for (auto& [c, v] : rows[rest[r]]) dense[r][col_index[c]] = v;
    return rank + rank_bareiss(dense);
  }
}

inline int rank_over(const SparseMatrix& m, const FieldSpec& k) {
  if (m.rows.empty() || m.cols == 0) return 0;
  if (k.is_rational()) {
    try {
      return rank_sparse(m, k);
    } catch (const EntryOverflow&) {
      // rare: redo everything with GMP integers
      std::vector<std::vector<mpz_class>> dense(m.rows.size(),
                                                std::vector<mpz_class>(m.cols));
      for (size_t r = 0; r < m.rows.size(); ++r)
        for (auto& [c, v] : m.rows[r]) dense[r][c] = v;
      return rank_bareiss(dense);
    }
  }
  return rank_sparse(m, k);
}

// Signed boundary matrix from cardinality-l faces to cardinality-(l-1)
// faces; faces within a level are sorted ascending as masks.
inline SparseMatrix boundary_matrix(const std::vector<VertexMask>& level,
                                    const std::vector<VertexMask>& below) {
  SparseMatrix m;
  m.cols = static_cast<int>(below.size());
  m.rows.resize(level.size());
  for (size_t r = 0; r < level.size(); ++r) {
    VertexMask f = level[r];
    int sign = 1;
    VertexMask rest = f;
    std::vector<std::pair<int, std::int64_t>>& row = m.rows[r];
    while (rest) {
      int v = std::countr_zero(rest);
      VertexMask sub = f & ~(VertexMask{1} << v);
      auto it = std::lower_bound(below.begin(), below.end(), sub);
      row.emplace_back(static_cast<int>(it - below.begin()), sign);
      sign = -sign;
      rest &= rest - 1;
    }
    std::sort(row.begin(), row.end());
  }
  return m;
}

}  // namespace detail

// Dimensions of the reduced homology of X over each field, as
// polynomials in t (degree d carries dim H~_d; the complex {emptyset}
// yields t^-1).  Face enumeration and boundary matrices are shared
// across the fields.
inline std::vector<HPoly> reduced_homology_multi(const SComplex& x,
                                                 std::span<const FieldSpec> fields) {
  if (x.is_void())
    throw std::invalid_argument("reduced homology of the void complex is undefined");
  auto levels = x.faces_by_card();
  int top = static_cast<int>(levels.size()) - 1;
  std::vector<HPoly> out(fields.size());
  // ranks[f][l] = rank of the boundary map from level l to level l-1
  std::vector<std::vector<int>> ranks(fields.size(), std::vector<int>(top + 2, 0));
  for (int l = 1; l <= top; ++l) {
    detail::SparseMatrix m = detail::boundary_matrix(levels[l], levels[l - 1]);
    for (size_t f = 0; f < fields.size(); ++f) ranks[f][l] = detail::rank_over(m, fields[f]);
  }
  for (size_t f = 0; f < fields.size(); ++f) {
    for (int l = 0; l <= top; ++l) {
      long long dim = static_cast<long long>(levels[l].size()) - ranks[f][l] -
                      (l + 1 <= top ? ranks[f][l + 1] : 0);
      out[f].add(l - 1, dim);
    }
  }
  return out;
}

inline HPoly reduced_homology(const SComplex& x, const FieldSpec& k) {
  return reduced_homology_multi(x, std::span<const FieldSpec>(&k, 1)).front();
}

// Reduced Euler characteristic from the face counts.
inline long long reduced_euler_characteristic(const SComplex& x) {
  auto levels = x.faces_by_card();
  long long chi = 0;
  for (size_t l = 0; l < levels.size(); ++l) {
    long long term = static_cast<long long>(levels[l].size());
    chi += (l % 2 == 0) ? -term : term;  // level l has dimension l-1
  }
  return chi;
}

}  // namespace lp
