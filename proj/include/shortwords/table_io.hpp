#pragma once

// Class-table serialization: a fixed-column text table
//   Class | Representative | |Centralizer| | 2P | 3P | ...
// with one power column per prime dividing the group order, and an
// equivalent JSON document.

#include <string>
#include <vector>

#include <json.hpp>

#include "shortwords/perm.hpp"
#include "shortwords/structure.hpp"

namespace shortwords {

/// Renders the table; rep_words, when given (one entry per class, empty
/// strings allowed), replaces the cycle-notation representative column with
/// word expressions.
inline std::string format_class_table(const ClassTable& table,
                                      const std::vector<std::string>& rep_words = {}) {
  const auto labels = table.labels();
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"Class", "Representative", "|Centralizer|"};
  for (const auto& [p, map] : table.stored_power_maps())
    header.push_back(std::to_string(p) + "P");
  rows.push_back(header);

  for (std::size_t i = 0; i < table.classes().size(); ++i) {
    const auto& c = table.classes()[i];
    std::vector<std::string> row;
    row.push_back(labels[i]);
    if (i < rep_words.size() && !rep_words[i].empty())
      row.push_back(rep_words[i]);
    else
      row.push_back(format_perm(c.representative));
    row.push_back(std::to_string(c.centralizer_order));
    for (const auto& [p, map] : table.stored_power_maps())
      row.push_back(labels[static_cast<std::size_t>(map[i])]);
    rows.push_back(std::move(row));
  }

  std::vector<std::size_t> widths(rows[0].size(), 0);
  for (const auto& row : rows)
    for (std::size_t j = 0; j < row.size(); ++j)
      widths[j] = std::max(widths[j], row[j].size());

  std::string out = "order " + std::to_string(table.group_order()) + "\n";
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += " | ";
      out += row[j];
      out.append(widths[j] - row[j].size(), ' ');
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += '\n';
  }
  return out;
}

inline nlohmann::json class_table_to_json(const ClassTable& table,
                                          const std::vector<std::string>& rep_words = {}) {
  nlohmann::json j;
  j["group_order"] = table.group_order();
  j["degree"] = table.group().degree();
  const auto labels = table.labels();
  nlohmann::json classes = nlohmann::json::array();
  for (std::size_t i = 0; i < table.classes().size(); ++i) {
    const auto& c = table.classes()[i];
    nlohmann::json jc;
    jc["index"] = i + 1;
    jc["label"] = labels[i];
    jc["representative"] = format_perm(c.representative);
    if (i < rep_words.size() && !rep_words[i].empty())
      jc["word"] = rep_words[i];
    jc["size"] = c.size;
    jc["centralizer_order"] = c.centralizer_order;
    jc["element_order"] = c.element_order;
    classes.push_back(std::move(jc));
  }
  j["classes"] = std::move(classes);
  nlohmann::json maps;
  for (const auto& [p, map] : table.stored_power_maps()) {
    nlohmann::json m = nlohmann::json::array();
    for (int v : map) m.push_back(v + 1);  // 1-based class indices
    maps[std::to_string(p)] = std::move(m);
  }
  j["power_maps"] = std::move(maps);
  return j;
}

}  // namespace shortwords
