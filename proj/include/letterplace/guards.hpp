#pragma once

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>

namespace lp {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an input exceeds a size guard.  Guards keep the exact
// linear algebra within reach; LP_MAX_VERTICES relaxes them at the
// caller's own risk.
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace guards {

inline std::optional<int> env_max_vertices() {
  static const std::optional<int> value = []() -> std::optional<int> {
    if (const char* s = std::getenv("LP_MAX_VERTICES")) {
      int v = std::atoi(s);
      if (v > 0) return v;
    }
    return std::nullopt;
  }();
  return value;
}

// Vertex-count guards honor the environment override; the default is
// per call site.
inline int vertex_limit(int dflt) { return env_max_vertices().value_or(dflt); }

inline void require_vertices(int count, int dflt, const std::string& what) {
  int limit = vertex_limit(dflt);
  if (count > limit)
    throw GuardError(what + ": " + std::to_string(count) + " vertices exceeds guard of " +
                     std::to_string(limit) + " (override with LP_MAX_VERTICES)");
}

// Face enumeration cap; independent of LP_MAX_VERTICES.
inline constexpr long long kMaxFaces = 1LL << 24;

}  // namespace guards
}  // namespace lp
