#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sudogen/core.hpp"
#include "sudogen/pi.hpp"
#include "sudogen/sperm.hpp"
#include "sudogen/sudoku.hpp"

namespace sudogen {

enum class Format { Grid, Json, Csv };
enum class ObjectKind { Perm, Pi, Sperm, Sudoku };

std::optional<Format> parse_format(std::string_view name);
std::optional<ObjectKind> parse_kind(std::string_view name);
std::string_view kind_name(ObjectKind kind);

/// Malformed text or JSON (as opposed to a well-formed non-member).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// JSON shapes:
//   perm    {"n": n, "values": [...]}
//   pi      {"n": n, "rows": [[...], ...]}          2n rows of n values
//   sperm   {"n": n, "ones": [[i, j], ...]}         n^2 pairs sorted by i
//   sudoku  {"n": n, "cells": [[...], ...]}         n^2 rows of n^2 values
nlohmann::json to_json(const Permutation& p);
nlohmann::json to_json(const PiMatrix& m);
nlohmann::json to_json(const SPermMatrix& m);
nlohmann::json to_json(const SudokuMatrix& m);

/// Grid text is whitespace separated, one matrix row per line. With
/// `separators`, n x n blocks are fenced by " | " inside a row and by a
/// dashed line ("------+-------+------") between block rows. Every line
/// ends with '\n'. JSON is a single line.
std::string format_permutation(const Permutation& p, Format format);
std::string format_pi(const PiMatrix& m, Format format);
std::string format_sperm(const SPermMatrix& m, Format format, bool separators = true);
std::string format_sudoku(const SudokuMatrix& m, Format format, bool separators = true);

/// n^2 x n^2 cells laid out with optional block separators.
std::string format_block_grid(std::span<const int> cells, int n, bool separators);

/// Rows of integers as read from input, before any membership check.
struct ParsedMatrix {
  std::vector<std::vector<int>> rows;
  /// The "n" field of a JSON document, when present.
  std::optional<int> declared_n;
};

/// Parses one or more objects of `kind`. The format is detected from the
/// content: a leading '{' or '[' means JSON (an array holds several
/// objects); otherwise grid or CSV text, where blank lines separate
/// objects, '|' and ',' act as whitespace, and lines made only of '-', '+'
/// and spaces are skipped. Throws ParseError on malformed input.
std::vector<ParsedMatrix> parse_objects(std::string_view text, ObjectKind kind);

}  // namespace sudogen
