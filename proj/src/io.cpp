#include "sudogen/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace sudogen {

namespace {

using nlohmann::json;

std::string join(std::span<const int> values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::string format_rows(const std::vector<std::vector<int>>& rows, std::string_view sep) {
  std::string out;
  for (const auto& r : rows) {
    out += join(r, sep);
    out += '\n';
  }
  return out;
}

std::string pad(int v, std::size_t width) {
  auto s = std::to_string(v);
  if (s.size() < width) s.insert(0, width - s.size(), ' ');
  return s;
}

std::vector<std::vector<int>> dense_rows(std::span<const int> cells, int side) {
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < side; ++i) {
    auto first = cells.begin() + static_cast<std::ptrdiff_t>(i) * side;
    rows.emplace_back(first, first + side);
  }
  return rows;
}

std::vector<int> json_int_list(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError(std::string(what) + " must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

std::vector<std::vector<int>> json_int_rows(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of rows");
  std::vector<std::vector<int>> rows;
  for (const auto& r : j) rows.push_back(json_int_list(r, what));
  return rows;
}

ParsedMatrix parse_json_object(const json& j, ObjectKind kind) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  ParsedMatrix out;
  if (j.contains("n")) {
    if (!j["n"].is_number_integer()) throw ParseError("\"n\" must be an integer");
    out.declared_n = j["n"].get<int>();
  }
  auto field = [&](const char* key) -> const json& {
    if (!j.contains(key)) throw ParseError(std::string("missing \"") + key + "\" field");
    return j[key];
  };
  switch (kind) {
    case ObjectKind::Perm:
      out.rows.push_back(json_int_list(field("values"), "values"));
      break;
    case ObjectKind::Pi:
      out.rows = json_int_rows(field("rows"), "rows");
      break;
    case ObjectKind::Sudoku:
      out.rows = json_int_rows(field("cells"), "cells");
      break;
    case ObjectKind::Sperm: {
      if (!out.declared_n || *out.declared_n < 1) throw ParseError("sperm JSON needs a positive \"n\"");
      const int side = *out.declared_n * *out.declared_n;
      out.rows.assign(static_cast<std::size_t>(side), std::vector<int>(static_cast<std::size_t>(side), 0));
      for (const auto& pair : json_int_rows(field("ones"), "ones")) {
        if (pair.size() != 2) throw ParseError("\"ones\" entries must be [i, j] pairs");
        const int i = pair[0], jj = pair[1];
        if (i < 0 || i >= side || jj < 0 || jj >= side) throw ParseError("\"ones\" position out of range");
        out.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(jj)] += 1;
      }
      break;
    }
  }
  return out;
}

bool is_separator_line(std::string_view line) {
  bool has_dash = false;
  for (char c : line) {
    if (c == '-') has_dash = true;
    else if (c != '+' && c != ' ' && c != '\t' && c != '\r') return false;
  }
  return has_dash;
}

std::vector<int> parse_text_row(std::string_view line, std::size_t line_no) {
  std::vector<int> row;
  std::size_t pos = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '|' || c == ','; };
  while (pos < line.size()) {
    while (pos < line.size() && is_space(line[pos])) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && !is_space(line[end])) ++end;
    int value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + end, value);
    if (ec != std::errc{} || ptr != line.data() + end) {
      throw ParseError("line " + std::to_string(line_no) + ": bad integer '" +
                       std::string(line.substr(pos, end - pos)) + "'");
    }
    row.push_back(value);
    pos = end;
  }
  return row;
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "grid") return Format::Grid;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  return std::nullopt;
}

std::optional<ObjectKind> parse_kind(std::string_view name) {
  if (name == "perm") return ObjectKind::Perm;
  if (name == "pi") return ObjectKind::Pi;
  if (name == "sperm") return ObjectKind::Sperm;
  if (name == "sudoku") return ObjectKind::Sudoku;
  return std::nullopt;
}

std::string_view kind_name(ObjectKind kind) {
  switch (kind) {
    case ObjectKind::Perm: return "perm";
    case ObjectKind::Pi: return "pi";
    case ObjectKind::Sperm: return "sperm";
    case ObjectKind::Sudoku: return "sudoku";
  }
  return "?";
}

nlohmann::json to_json(const Permutation& p) {
  return {{"n", p.order()}, {"values", std::vector<int>(p.values().begin(), p.values().end())}};
}

nlohmann::json to_json(const PiMatrix& m) {
  return {{"n", m.order()}, {"rows", m.rows()}};
}

nlohmann::json to_json(const SPermMatrix& m) {
  json ones = json::array();
  for (auto [i, j] : m.ones()) ones.push_back({i, j});
  return {{"n", m.order()}, {"ones", ones}};
}

nlohmann::json to_json(const SudokuMatrix& m) {
  return {{"n", m.order()}, {"cells", m.rows()}};
}

std::string format_block_grid(std::span<const int> cells, int n, bool separators) {
  const int side = n * n;
  int widest = 0;
  for (int v : cells) widest = std::max(widest, v);
  const auto width = std::to_string(widest).size();

  std::string out;
  for (int i = 0; i < side; ++i) {
    std::string line;
    for (int j = 0; j < side; ++j) {
      if (j > 0) line += (separators && j % n == 0) ? " | " : " ";
      line += pad(cells[static_cast<std::size_t>(i) * side + j], width);
    }
    if (separators && i > 0 && i % n == 0) {
      std::string fence = line;
      std::replace_if(fence.begin(), fence.end(), [](char c) { return c != '|'; }, '-');
      std::replace(fence.begin(), fence.end(), '|', '+');
      out += fence;
      out += '\n';
    }
    out += line;
    out += '\n';
  }
  return out;
}

std::string format_permutation(const Permutation& p, Format format) {
  switch (format) {
    case Format::Json: return to_json(p).dump() + "\n";
    case Format::Csv: return join(p.values(), ",") + "\n";
    case Format::Grid: return join(p.values(), " ") + "\n";
  }
  return {};
}

std::string format_pi(const PiMatrix& m, Format format) {
  switch (format) {
    case Format::Json: return to_json(m).dump() + "\n";
    case Format::Csv: return format_rows(m.rows(), ",");
    case Format::Grid: return format_rows(m.rows(), " ");
  }
  return {};
}

std::string format_sperm(const SPermMatrix& m, Format format, bool separators) {
  switch (format) {
    case Format::Json: return to_json(m).dump() + "\n";
    case Format::Csv: return format_rows(dense_rows(m.dense(), m.side()), ",");
    case Format::Grid: return format_block_grid(m.dense(), m.order(), separators);
  }
  return {};
}

std::string format_sudoku(const SudokuMatrix& m, Format format, bool separators) {
  switch (format) {
    case Format::Json: return to_json(m).dump() + "\n";
    case Format::Csv: return format_rows(m.rows(), ",");
    case Format::Grid: return format_block_grid(m.cells(), m.order(), separators);
  }
  return {};
}

std::vector<ParsedMatrix> parse_objects(std::string_view text, ObjectKind kind) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("empty input");

  std::vector<ParsedMatrix> out;
  if (text[first] == '{' || text[first] == '[') {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (doc.is_array()) {
      if (doc.empty()) throw ParseError("empty JSON array");
      for (const auto& item : doc) out.push_back(parse_json_object(item, kind));
    } else {
      out.push_back(parse_json_object(doc, kind));
    }
    return out;
  }

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  ParsedMatrix current;
  auto flush = [&] {
    if (!current.rows.empty()) out.push_back(std::move(current));
    current = ParsedMatrix{};
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      flush();
      continue;
    }
    if (is_separator_line(line)) continue;
    current.rows.push_back(parse_text_row(line, line_no));
  }
  flush();
  if (out.empty()) throw ParseError("no matrix rows found");
  return out;
}

}  // namespace sudogen
