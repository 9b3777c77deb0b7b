#include "spb/cli/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace spb::io {

std::string bracket(const std::vector<std::string> &items)
{
  std::string s = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i)
      s += ",";
    s += items[i];
  }
  return s + "]";
}

std::string render_text(const Report &r)
{
  std::ostringstream out;
  out << r.command << "\n";
  std::size_t width = 0;
  for (const auto &[k, v] : r.fields)
    width = std::max(width, k.size());
  for (const auto &[k, v] : r.fields)
    out << "  " << k << ":" << std::string(width - k.size() + 1, ' ') << v << "\n";

  for (const auto &t : r.tables) {
    out << "\n" << t.title << "\n";
    std::vector<std::size_t> w(t.columns.size(), 0);
    for (std::size_t c = 0; c < t.columns.size(); ++c)
      w[c] = t.columns[c].size();
    for (const auto &row : t.rows)
      for (std::size_t c = 0; c < row.size() && c < w.size(); ++c)
        w[c] = std::max(w[c], row[c].size());
    auto line = [&](const std::vector<std::string> &cells) {
      std::string s = " ";
      for (std::size_t c = 0; c < cells.size(); ++c) {
        s += " " + cells[c];
        if (c + 1 < cells.size())
          s += std::string(w[c] - cells[c].size() + 1, ' ');
      }
      out << s << "\n";
    };
    line(t.columns);
    for (const auto &row : t.rows)
      line(row);
  }
  if (r.passed || r.failed)
    out << "\n" << r.passed << " passed, " << r.failed << " failed\n";
  return out.str();
}

std::string render_json(const Report &r)
{
  nlohmann::ordered_json j;
  j["command"] = r.command;
  nlohmann::ordered_json fields = nlohmann::ordered_json::object();
  for (const auto &[k, v] : r.fields)
    fields[k] = v;
  j["fields"] = fields;
  nlohmann::ordered_json tables = nlohmann::ordered_json::array();
  for (const auto &t : r.tables) {
    nlohmann::ordered_json tj;
    tj["title"] = t.title;
    tj["columns"] = t.columns;
    tj["rows"] = t.rows;
    tables.push_back(tj);
  }
  j["tables"] = tables;
  j["passed"] = r.passed;
  j["failed"] = r.failed;
  j["exit_code"] = r.exit_code;
  return j.dump(2) + "\n";
}

} // namespace spb::io
