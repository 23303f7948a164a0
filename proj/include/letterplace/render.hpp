#pragma once

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "letterplace/betti_table.hpp"

namespace lp {

// Betti diagram layout: rows are j - i, columns are homological degree,
// "." marks a zero entry.
inline std::string render_table_text(const BettiTable& t) {
  if (t.entries().empty()) return "(zero table)\n";
  int min_row = t.min_strand(), max_row = t.max_strand();
  int max_col = t.max_homological_degree();
  std::vector<long long> totals(max_col + 1, 0);
  for (auto& [ij, v] : t.entries()) totals[ij.first] += v;

  auto cell = [&](int row, int col) -> std::string {
    long long v = t.at(col, col + row);
    return v == 0 ? "." : std::to_string(v);
  };
  std::vector<size_t> width(max_col + 1, 1);
  for (int c = 0; c <= max_col; ++c) {
    width[c] = std::max(width[c], std::to_string(totals[c]).size());
    width[c] = std::max(width[c], std::to_string(c).size());
    for (int r = min_row; r <= max_row; ++r) width[c] = std::max(width[c], cell(r, c).size());
  }
  size_t label = std::max({std::to_string(min_row).size(), std::to_string(max_row).size(),
                           size_t(5)});  // "total"
  std::ostringstream out;
  auto emit_row = [&](const std::string& lab, auto value) {
    out << std::setw(static_cast<int>(label)) << lab << ":";
    for (int c = 0; c <= max_col; ++c)
      out << " " << std::setw(static_cast<int>(width[c])) << value(c);
    out << "\n";
  };
  out << std::setw(static_cast<int>(label)) << "" << " ";
  for (int c = 0; c <= max_col; ++c)
    out << " " << std::setw(static_cast<int>(width[c])) << c;
  out << "\n";
  emit_row("total", [&](int c) { return std::to_string(totals[c]); });
  for (int r = min_row; r <= max_row; ++r)
    emit_row(std::to_string(r), [&](int c) { return cell(r, c); });
  return out.str();
}

inline std::string render_table_csv(const BettiTable& t) {
  std::ostringstream out;
  out << "i,j,beta\n";
  for (auto& [ij, v] : t.entries())
    out << ij.first << "," << ij.second << "," << v << "\n";
  return out.str();
}

inline std::string render_table_json(const BettiTable& t) {
  nlohmann::json j;
  j["convention"] = t.convention() == Convention::ideal ? "ideal" : "quotient";
  j["entries"] = nlohmann::json::array();
  for (auto& [ij, v] : t.entries())
    j["entries"].push_back({ij.first, ij.second, v});
  return j.dump() + "\n";
}

inline BettiTable parse_table_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::string conv = j.at("convention").get<std::string>();
  BettiTable t(conv == "ideal" ? Convention::ideal : Convention::quotient);
  // the serialized entries carry the quotient (0,0) unit already
  if (t.convention() == Convention::quotient) t.add(0, 0, -1);
  for (auto& e : j.at("entries"))
    t.add(e[0].get<int>(), e[1].get<int>(), e[2].get<long long>());
  return t;
}

}  // namespace lp
