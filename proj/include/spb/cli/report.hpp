#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace spb::io {

struct Table
{
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

/// Output of one CLI invocation. Rendering is deterministic.
struct Report
{
  std::string command;
  std::vector<std::pair<std::string, std::string>> fields;
  std::vector<Table> tables;
  std::size_t passed = 0;
  std::size_t failed = 0;
  int exit_code = 0;

  void add(std::string key, std::string value) { fields.emplace_back(std::move(key), std::move(value)); }
};

std::string render_text(const Report &r);
std::string render_json(const Report &r);

/// "[a,b,c]"
std::string bracket(const std::vector<std::string> &items);
template <typename Seq>
std::string bracket_numbers(const Seq &seq)
{
  std::vector<std::string> items;
  for (const auto &v : seq)
    items.push_back(std::to_string(v));
  return bracket(items);
}

} // namespace spb::io
