#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "zq/code.hpp"
#include "zq/errors.hpp"
#include "zq/residue.hpp"

namespace zq {

inline constexpr std::uint64_t kDefaultColumnBudget = std::uint64_t{1} << 20;

/// Simplex length n_k = (q^k - 1)/(q - 1), i.e. 1 + q + ... + q^(k-1).
inline std::uint64_t simplex_length(int q, int k) {
  check_modulus(q);
  if (k < 1) throw std::domain_error("simplex length needs k >= 1");
  std::uint64_t n = 0;
  for (int i = 0; i < k; ++i) {
    if (n > (UINT64_MAX - 1) / static_cast<std::uint64_t>(q))
      throw std::overflow_error("simplex length out of 64-bit range");
    n = n * static_cast<std::uint64_t>(q) + 1;
  }
  return n;
}

namespace detail {

// One recursion step: columns are (0 over G) || (1,0,..,0) || (1 over G) ||
// (2 over G) || ... || (q-1 over G), growing k rows of length n into k+1 rows
// of length q*n + 1.
inline std::vector<std::vector<int>> simplex_step(int q, const std::vector<std::vector<int>>& rows) {
  const std::size_t n = rows.front().size();
  const std::size_t out_n = static_cast<std::size_t>(q) * n + 1;
  std::vector<std::vector<int>> out;
  out.reserve(rows.size() + 1);

  std::vector<int> top;
  top.reserve(out_n);
  top.insert(top.end(), n, 0);
  top.push_back(1);
  for (int i = 1; i < q; ++i) top.insert(top.end(), n, i);
  out.push_back(std::move(top));

  for (const auto& r : rows) {
    std::vector<int> row;
    row.reserve(out_n);
    row.insert(row.end(), r.begin(), r.end());
    row.push_back(0);
    for (int i = 1; i < q; ++i) row.insert(row.end(), r.begin(), r.end());
    out.push_back(std::move(row));
  }
  return out;
}

inline GeneratorMatrix to_matrix(int q, const std::vector<std::vector<int>>& rows) {
  std::vector<ResidueVector> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.emplace_back(q, r);
  return GeneratorMatrix(q, std::move(out));
}

}  // namespace detail

/// Generator of the k-row simplex code over Z_q, with the column order fixed
/// by the recursion above so the matrix is byte-reproducible. For k=2 the
/// columns come out as (0,1), (1,0), (1,1), (2,1), ..., (q-1,1).
/// The construction is valid for any q >= 2; the distance formula checked by
/// the bounds module additionally requires even q.
inline GeneratorMatrix simplex_generator(int q, int k,
                                         std::uint64_t max_columns = kDefaultColumnBudget) {
  check_modulus(q);
  if (k < 2) throw std::domain_error("simplex generator needs k >= 2");
  const std::uint64_t n_k = simplex_length(q, k);
  if (n_k > max_columns)
    throw BudgetExceeded("simplex generator column count exceeds budget", n_k, max_columns);

  std::vector<std::vector<int>> rows{{1}};
  for (int i = 1; i < k; ++i) rows = detail::simplex_step(q, rows);
  return detail::to_matrix(q, rows);
}

/// Simplex generator with the embedded block of columns whose top (k-u)
/// entries are all zero removed; there are exactly n_u = (q^u - 1)/(q - 1)
/// such columns. Deletion is structural (by column inspection), not positional.
inline GeneratorMatrix macdonald_generator(int q, int k, int u,
                                           std::uint64_t max_columns = kDefaultColumnBudget) {
  check_modulus(q);
  if (k < 3 || u < 2 || u > k - 1)
    throw std::domain_error("macdonald generator needs k >= 3 and 2 <= u <= k-1, got k=" +
                            std::to_string(k) + " u=" + std::to_string(u));
  const GeneratorMatrix G = simplex_generator(q, k, max_columns);
  const std::size_t top = static_cast<std::size_t>(k - u);

  std::vector<std::size_t> kept;
  kept.reserve(G.length());
  for (std::size_t j = 0; j < G.length(); ++j) {
    bool zero_top = true;
    for (std::size_t i = 0; i < top; ++i)
      if (G.row(i)[j] != 0) {
        zero_top = false;
        break;
      }
    if (!zero_top) kept.push_back(j);
  }

  const std::uint64_t deleted = G.length() - kept.size();
  if (deleted != simplex_length(q, u))
    throw std::logic_error("macdonald deletion removed " + std::to_string(deleted) +
                           " columns, expected " + std::to_string(simplex_length(q, u)));

  std::vector<ResidueVector> rows;
  rows.reserve(G.row_count());
  for (std::size_t i = 0; i < G.row_count(); ++i) {
    std::vector<int> row;
    row.reserve(kept.size());
    for (std::size_t j : kept) row.push_back(G.row(i)[j]);
    rows.emplace_back(q, std::move(row));
  }
  return GeneratorMatrix(q, std::move(rows));
}

/// 1 x n generator [v v ... v]. The generated code is the cyclic subgroup of
/// size q/gcd(q,v) repeated across all coordinates; v must be nonzero.
inline GeneratorMatrix repetition_generator(int q, std::size_t n, int v) {
  check_modulus(q);
  if (n == 0) throw std::domain_error("repetition generator needs n >= 1");
  if (v == 0) throw std::domain_error("repetition generator is degenerate for v=0");
  if (v < 0 || v >= q)
    throw std::domain_error("repetition symbol " + std::to_string(v) + " out of range [1, " +
                            std::to_string(q) + ")");
  return GeneratorMatrix(q, {ResidueVector::constant(q, n, v)});
}

/// 1 x (q-1)n generator: n ones, then n twos, ..., then n copies of q-1.
inline GeneratorMatrix full_repetition_generator(int q, std::size_t n) {
  check_modulus(q);
  if (n == 0) throw std::domain_error("full repetition generator needs n >= 1");
  std::vector<int> row;
  row.reserve(static_cast<std::size_t>(q - 1) * n);
  for (int i = 1; i < q; ++i) row.insert(row.end(), n, i);
  return GeneratorMatrix(q, {ResidueVector(q, std::move(row))});
}

/// Extension of an [n, k] code to length q*n + 1: each generator row g becomes
/// (g, 0, g, g, ..., g) with q copies of g around a single inserted zero, and
/// one new row (0^n, 1, 1^n, 2^n, ..., (q-1)^n) is appended. Applied to the
/// code generated by [1] this reproduces the 2-row simplex generator up to row
/// order.
inline GeneratorMatrix extension_generator(const LinearCode& C) {
  const GeneratorMatrix& G = C.generator();
  const int q = G.modulus();
  const std::size_t n = G.length();

  std::vector<ResidueVector> rows;
  rows.reserve(G.row_count() + 1);
  for (const auto& g : G.rows()) {
    std::vector<int> row;
    row.reserve(static_cast<std::size_t>(q) * n + 1);
    row.insert(row.end(), g.entries().begin(), g.entries().end());
    row.push_back(0);
    for (int i = 1; i < q; ++i) row.insert(row.end(), g.entries().begin(), g.entries().end());
    rows.emplace_back(q, std::move(row));
  }
  std::vector<int> mix;
  mix.reserve(static_cast<std::size_t>(q) * n + 1);
  mix.insert(mix.end(), n, 0);
  mix.push_back(1);
  for (int i = 1; i < q; ++i) mix.insert(mix.end(), n, i);
  rows.emplace_back(q, std::move(mix));
  return GeneratorMatrix(q, std::move(rows));
}

}  // namespace zq
