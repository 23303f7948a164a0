#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lp {

// Coefficient field for homology: the rationals (characteristic 0) or
// a prime field GF(p) with p < 2^31.
class FieldSpec {
 public:
  explicit FieldSpec(std::uint32_t characteristic) : p_(characteristic) {
    if (p_ != 0 && !is_prime(p_))
      throw std::invalid_argument("field characteristic must be 0 or a prime: " +
                                  std::to_string(p_));
    if (p_ >= (1u << 31))
      throw std::invalid_argument("prime characteristic must be < 2^31");
  }

  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  bool operator==(const FieldSpec& o) const { return p_ == o.p_; }

  std::string to_string() const {
    return p_ == 0 ? std::string("QQ") : "GF(" + std::to_string(p_) + ")";
  }

  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  std::uint32_t p_;
};

}  // namespace lp
