#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace lp {

// Laurent-style polynomial in t with nonnegative integer coefficients.
// Homology polynomials live in degrees >= -1 (the coefficient at t^-1
// records the homology of the empty complex).
class HPoly {
 public:
  HPoly() = default;

  static HPoly t_pow(int degree, long long coeff = 1) {
    HPoly p;
    if (coeff != 0) p.c_[degree] = coeff;
    return p;
  }

  long long coeff(int degree) const {
    auto it = c_.find(degree);
    return it == c_.end() ? 0 : it->second;
  }

  void add(int degree, long long value) {
    if (value == 0) return;
    auto it = c_.emplace(degree, 0).first;
    it->second += value;
    if (it->second == 0) c_.erase(it);
  }

  bool is_zero() const { return c_.empty(); }
  int lowest_degree() const { return c_.begin()->first; }    // requires nonzero
  int highest_degree() const { return c_.rbegin()->first; }  // requires nonzero

  const std::map<int, long long>& coefficients() const { return c_; }

  HPoly shifted(int k) const {
    HPoly out;
    for (auto& [d, v] : c_) out.c_[d + k] = v;
    return out;
  }

  HPoly operator+(const HPoly& o) const {
    HPoly out = *this;
    for (auto& [d, v] : o.c_) out.add(d, v);
    return out;
  }

  HPoly operator*(const HPoly& o) const {
    HPoly out;
    for (auto& [d1, v1] : c_)
      for (auto& [d2, v2] : o.c_) out.add(d1 + d2, v1 * v2);
    return out;
  }

  bool operator==(const HPoly& o) const { return c_ == o.c_; }
  bool operator!=(const HPoly& o) const { return c_ != o.c_; }

  long long alternating_sum() const {
    // sum of (-1)^d coeff(d); the reduced Euler characteristic when the
    // polynomial records homology dimensions.
    long long s = 0;
    for (auto& [d, v] : c_) s += (d % 2 == 0 ? v : -v);
    return s;
  }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (auto& [d, v] : c_) {
      if (!s.empty()) s += " + ";
      if (v != 1) s += std::to_string(v) + "*";
      s += "t^" + std::to_string(d);
    }
    return s;
  }

 private:
  std::map<int, long long> c_;
};

}  // namespace lp
