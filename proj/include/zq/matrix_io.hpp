#pragma once

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "zq/code.hpp"
#include "zq/errors.hpp"
#include "zq/residue.hpp"

namespace zq {

namespace detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize_line(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

inline long long parse_int(const Token& tok, std::size_t line_no, const char* what) {
  long long value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    throw ParseError(std::string("expected ") + what + ", got '" + std::string(tok.text) + "'",
                     line_no, tok.column);
  return value;
}

}  // namespace detail

/// Matrix file format: a one-line header `q k n`, then k lines of n integers
/// in [0, q), whitespace separated. Lines whose first non-blank character is
/// `#` are comments and may appear anywhere.
inline GeneratorMatrix read_matrix(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  long long q = 0, k = 0, n = 0;
  bool have_header = false;
  std::vector<ResidueVector> rows;

  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = detail::tokenize_line(line);
    if (tokens.empty() || tokens.front().text.front() == '#') continue;

    if (!have_header) {
      if (tokens.size() != 3)
        throw ParseError("header must be exactly `q k n`", line_no, tokens.front().column);
      q = detail::parse_int(tokens[0], line_no, "modulus q");
      k = detail::parse_int(tokens[1], line_no, "row count k");
      n = detail::parse_int(tokens[2], line_no, "length n");
      if (q < 2) throw ParseError("modulus must be >= 2", line_no, tokens[0].column);
      if (k < 1) throw ParseError("row count must be >= 1", line_no, tokens[1].column);
      if (n < 1) throw ParseError("length must be >= 1", line_no, tokens[2].column);
      have_header = true;
      continue;
    }

    if (static_cast<long long>(rows.size()) == k)
      throw ParseError("unexpected extra row: header declared k=" + std::to_string(k), line_no,
                       tokens.front().column);
    if (static_cast<long long>(tokens.size()) != n)
      throw ParseError("row " + std::to_string(rows.size() + 1) + " has " +
                           std::to_string(tokens.size()) + " entries, expected " +
                           std::to_string(n),
                       line_no, tokens.front().column);
    std::vector<int> entries;
    entries.reserve(static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < tokens.size(); ++j) {
      const long long e = detail::parse_int(tokens[j], line_no, "matrix entry");
      if (e < 0 || e >= q)
        throw ParseError("entry " + std::to_string(e) + " out of range [0, " + std::to_string(q) +
                             ") at row " + std::to_string(rows.size() + 1) + ", column " +
                             std::to_string(j + 1),
                         line_no, tokens[j].column);
      entries.push_back(static_cast<int>(e));
    }
    rows.emplace_back(static_cast<int>(q), std::move(entries));
  }

  if (!have_header) throw ParseError("empty matrix file: missing `q k n` header", 1, 1);
  if (static_cast<long long>(rows.size()) != k)
    throw ParseError("found " + std::to_string(rows.size()) + " rows, header declared k=" +
                         std::to_string(k),
                     line_no + 1, 1);
  return GeneratorMatrix(static_cast<int>(q), std::move(rows));
}

inline GeneratorMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open matrix file: " + path);
  return read_matrix(in);
}

inline void write_matrix(std::ostream& out, const GeneratorMatrix& G) {
  out << G.modulus() << ' ' << G.row_count() << ' ' << G.length() << '\n';
  for (std::size_t i = 0; i < G.row_count(); ++i) {
    const ResidueVector& row = G.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
}

inline void write_matrix_file(const std::string& path, const GeneratorMatrix& G) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open matrix file for writing: " + path);
  write_matrix(out, G);
}

}  // namespace zq
