#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace lp {

// Indexing convention of a graded Betti table: `ideal` puts the
// generators in homological degree 0; `quotient` prepends the rank-one
// degree-zero module, so entry (i+1, j) of the quotient table equals
// entry (i, j) of the ideal table.  Tensor products only make sense in
// the quotient convention.
enum class Convention { ideal, quotient };

class BettiTable {
 public:
  explicit BettiTable(Convention c = Convention::ideal) : conv_(c) {
    if (c == Convention::quotient) e_[{0, 0}] = 1;
  }

  Convention convention() const { return conv_; }
  const std::map<std::pair<int, int>, long long>& entries() const { return e_; }

  long long at(int i, int j) const {
    auto it = e_.find({i, j});
    return it == e_.end() ? 0 : it->second;
  }

  void add(int i, int j, long long v) {
    if (v == 0) return;
    auto it = e_.emplace(std::pair{i, j}, 0LL).first;
    it->second += v;
    if (it->second == 0) e_.erase(it);
  }

  bool empty() const { return e_.empty(); }

  bool operator==(const BettiTable& o) const { return conv_ == o.conv_ && e_ == o.e_; }
  bool operator!=(const BettiTable& o) const { return !(*this == o); }

  BettiTable to_quotient() const {
    if (conv_ == Convention::quotient) return *this;
    BettiTable out(Convention::quotient);
    for (auto& [ij, v] : e_) out.add(ij.first + 1, ij.second, v);
    return out;
  }

  BettiTable to_ideal() const {
    if (conv_ == Convention::ideal) return *this;
    if (at(0, 0) != 1)
      throw std::invalid_argument("quotient table must have entry (0,0) = 1");
    BettiTable out(Convention::ideal);
    for (auto& [ij, v] : e_) {
      if (ij == std::pair{0, 0}) continue;
      if (ij.first == 0)
        throw std::invalid_argument("quotient table has an unexpected entry in column 0");
      out.add(ij.first - 1, ij.second, v);
    }
    return out;
  }

  BettiTable converted(Convention c) const {
    return c == Convention::ideal ? to_ideal() : to_quotient();
  }

  BettiTable shifted(int di, int dj) const {
    BettiTable out(conv_);
    out.e_.clear();
    for (auto& [ij, v] : e_) out.add(ij.first + di, ij.second + dj, v);
    return out;
  }

  BettiTable operator+(const BettiTable& o) const {
    if (conv_ != o.conv_) throw std::invalid_argument("convention mismatch in table sum");
    BettiTable out = *this;
    for (auto& [ij, v] : o.e_) out.add(ij.first, ij.second, v);
    return out;
  }

  // Graded tensor product of quotient-convention tables (resolutions of
  // quotient rings over disjoint variable sets).
  static BettiTable tensor(const BettiTable& a, const BettiTable& b) {
    if (a.conv_ != Convention::quotient || b.conv_ != Convention::quotient)
      throw std::invalid_argument("convention mismatch: tensor requires quotient tables");
    BettiTable out(Convention::quotient);
    out.e_.clear();
    for (auto& [ij1, v1] : a.e_)
      for (auto& [ij2, v2] : b.e_)
        out.add(ij1.first + ij2.first, ij1.second + ij2.second, v1 * v2);
    return out;
  }

  int max_homological_degree() const {  // requires nonempty
    int m = 0;
    for (auto& [ij, v] : e_) m = std::max(m, ij.first);
    return m;
  }

  int max_strand() const {  // max j - i over nonzero entries; requires nonempty
    int m = 0;
    bool first = true;
    for (auto& [ij, v] : e_) {
      int s = ij.second - ij.first;
      if (first || s > m) m = s;
      first = false;
    }
    return m;
  }

  int min_strand() const {
    int m = 0;
    bool first = true;
    for (auto& [ij, v] : e_) {
      int s = ij.second - ij.first;
      if (first || s < m) m = s;
      first = false;
    }
    return m;
  }

 private:
  Convention conv_;
  std::map<std::pair<int, int>, long long> e_;
};

}  // namespace lp
