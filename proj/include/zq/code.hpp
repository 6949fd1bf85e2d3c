#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zq/errors.hpp"
#include "zq/residue.hpp"

namespace zq {

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 24;
inline constexpr std::uint64_t kDefaultDualScanBudget = std::uint64_t{1} << 28;

/// q^e, or nullopt when the value does not fit in 64 bits.
inline std::optional<std::uint64_t> checked_pow(std::uint64_t q, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (r > UINT64_MAX / q) return std::nullopt;
    r *= q;
  }
  return r;
}

/// k generator rows of common length n over a shared modulus q. Rows are not
/// required to be independent; cardinality is always determined by enumeration.
class GeneratorMatrix {
 public:
  GeneratorMatrix(int q, std::vector<ResidueVector> rows) : q_(q), rows_(std::move(rows)) {
    check_modulus(q);
    if (rows_.empty()) throw std::invalid_argument("generator matrix needs at least one row");
    for (const auto& r : rows_) {
      if (r.modulus() != q_)
        throw std::invalid_argument("row modulus " + std::to_string(r.modulus()) +
                                    " does not match declared modulus " + std::to_string(q_));
      if (r.size() != rows_.front().size())
        throw std::invalid_argument("ragged generator matrix: row lengths differ");
    }
  }

  int modulus() const noexcept { return q_; }
  std::size_t row_count() const noexcept { return rows_.size(); }
  std::size_t length() const noexcept { return rows_.front().size(); }
  const ResidueVector& row(std::size_t i) const { return rows_.at(i); }
  const std::vector<ResidueVector>& rows() const noexcept { return rows_; }

  std::vector<int> column(std::size_t j) const {
    std::vector<int> col(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) col[i] = rows_[i][j];
    return col;
  }

  friend bool operator==(const GeneratorMatrix&, const GeneratorMatrix&) = default;

 private:
  int q_;
  std::vector<ResidueVector> rows_;
};

/// Exact parameters of an enumerated code. min_distance is absent for the
/// trivial code {0}, whose defining minimum is over an empty set.
struct CodeSummary {
  int q = 0;
  std::size_t n = 0;
  std::size_t k = 0;  // generator row count; 0 when built from a raw word set
  std::uint64_t cardinality = 0;
  std::optional<std::size_t> min_distance;
  std::map<std::size_t, std::uint64_t> weight_distribution;
};

/// Per-codeword symbol histogram: counts[i] = occurrences of symbol i.
struct SymbolCounts {
  std::vector<std::size_t> counts;

  std::size_t operator[](std::size_t i) const { return counts.at(i); }
};

inline SymbolCounts symbol_counts(const ResidueVector& c) {
  SymbolCounts sc;
  sc.counts.assign(static_cast<std::size_t>(c.modulus()), 0);
  for (std::size_t j = 0; j < c.size(); ++j) ++sc.counts[static_cast<std::size_t>(c[j])];
  return sc;
}

/// An enumerated Z_q-linear code: the deduplicated codeword set, stored in
/// lexicographic order, plus its summary. The generator is kept when the code
/// was built from one (duals obtained by ambient scan have none).
class LinearCode {
 public:
  LinearCode(int q, std::size_t n, std::optional<GeneratorMatrix> generator,
             std::vector<ResidueVector> words)
      : q_(q), n_(n), generator_(std::move(generator)), codewords_(std::move(words)) {
    std::sort(codewords_.begin(), codewords_.end());
    codewords_.erase(std::unique(codewords_.begin(), codewords_.end()), codewords_.end());
    summary_.q = q_;
    summary_.n = n_;
    summary_.k = generator_ ? generator_->row_count() : 0;
    summary_.cardinality = codewords_.size();
    for (const auto& c : codewords_) ++summary_.weight_distribution[hamming_weight(c)];
    for (const auto& [w, count] : summary_.weight_distribution) {
      if (w > 0) {
        summary_.min_distance = w;
        break;
      }
    }
  }

  int modulus() const noexcept { return q_; }
  std::size_t length() const noexcept { return n_; }
  const CodeSummary& summary() const noexcept { return summary_; }
  const std::vector<ResidueVector>& codewords() const noexcept { return codewords_; }

  bool has_generator() const noexcept { return generator_.has_value(); }
  const GeneratorMatrix& generator() const {
    if (!generator_) throw std::logic_error("code was built without a generator matrix");
    return *generator_;
  }

 private:
  int q_;
  std::size_t n_;
  std::optional<GeneratorMatrix> generator_;
  std::vector<ResidueVector> codewords_;
  CodeSummary summary_;
};

/// Span of the generator rows: every combination sum_j a_j row_j over
/// coefficient tuples (a_1..a_k) in Z_q^k, deduplicated. The coefficient space
/// q^k is the budgeted quantity.
inline LinearCode enumerate_codewords(const GeneratorMatrix& G,
                                      std::uint64_t limit = kDefaultEnumerationBudget) {
  const int q = G.modulus();
  const std::size_t k = G.row_count();
  const std::size_t n = G.length();
  const auto tuples = checked_pow(static_cast<std::uint64_t>(q), k);
  if (!tuples || *tuples > limit)
    throw BudgetExceeded("codeword enumeration over q^k coefficient tuples exceeds budget",
                         tuples.value_or(UINT64_MAX), limit);

  // Odometer over coefficient tuples. When digit j steps up and digits 0..j-1
  // wrap from q-1 to 0, the accumulated word changes by row_j + sum_{i<j} row_i,
  // i.e. by the j-th prefix sum of the rows.
  std::vector<ResidueVector> prefix;
  prefix.reserve(k);
  for (std::size_t j = 0; j < k; ++j)
    prefix.push_back(j == 0 ? G.row(0) : vector_add(prefix.back(), G.row(j)));

  std::vector<ResidueVector> words;
  words.reserve(static_cast<std::size_t>(*tuples));
  ResidueVector acc = ResidueVector::zero(q, n);
  std::vector<int> digits(k, 0);
  words.push_back(acc);
  for (std::uint64_t t = 1; t < *tuples; ++t) {
    std::size_t j = 0;
    while (digits[j] == q - 1) {
      digits[j] = 0;
      ++j;
    }
    ++digits[j];
    acc = vector_add(acc, prefix[j]);
    words.push_back(acc);
  }
  return LinearCode(q, n, G, std::move(words));
}

/// Least nonzero codeword weight; by linearity this equals the least pairwise
/// distance. Undefined (an error) for the trivial code {0}.
inline std::size_t min_distance(const LinearCode& C) {
  if (!C.summary().min_distance)
    throw std::domain_error("minimum distance is undefined for the trivial code {0}");
  return *C.summary().min_distance;
}

inline const std::map<std::size_t, std::uint64_t>& weight_distribution(const LinearCode& C) {
  return C.summary().weight_distribution;
}

/// All ambient vectors orthogonal to every generator row (inner product mod q),
/// found by scanning the full ambient space Z_q^n.
inline LinearCode dual_code(const LinearCode& C, std::uint64_t limit = kDefaultDualScanBudget) {
  const GeneratorMatrix& G = C.generator();
  const int q = C.modulus();
  const std::size_t n = C.length();
  const auto states = checked_pow(static_cast<std::uint64_t>(q), n);
  if (!states || *states > limit)
    throw BudgetExceeded("dual scan over the ambient space exceeds budget",
                         states.value_or(UINT64_MAX), limit);

  std::vector<ResidueVector> words;
  std::vector<int> x(n, 0);
  for (std::uint64_t t = 0;; ++t) {
    bool orthogonal = true;
    for (const auto& row : G.rows()) {
      long long ip = 0;
      for (std::size_t j = 0; j < n; ++j) ip += static_cast<long long>(x[j]) * row[j];
      if (ip % q != 0) {
        orthogonal = false;
        break;
      }
    }
    if (orthogonal) words.emplace_back(q, x);
    if (t + 1 == *states) break;
    std::size_t j = 0;
    while (x[j] == q - 1) {
      x[j] = 0;
      ++j;
    }
    ++x[j];
  }
  return LinearCode(q, n, std::nullopt, std::move(words));
}

/// Sphere-packing equality at the packing radius t = floor((d-1)/2):
/// true iff M * sum_{j<=t} C(n,j) (q-1)^j == q^n.
inline bool is_perfect(const LinearCode& C) {
  const CodeSummary& s = C.summary();
  if (!s.min_distance)
    throw std::domain_error("perfectness is undefined for the trivial code {0}");
  const unsigned q = static_cast<unsigned>(s.q);
  const std::size_t n = s.n;

  using U128 = unsigned __int128;
  U128 ambient = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (ambient > (U128(1) << 120) / q)
      throw std::overflow_error("sphere-packing check out of integer range for q^n");
    ambient *= q;
  }

  const std::size_t t = (*s.min_distance - 1) / 2;
  U128 sphere = 0;
  U128 binom = 1;  // C(n, j), advanced one j at a time
  U128 pow_qm1 = 1;
  for (std::size_t j = 0; j <= t; ++j) {
    if (j > 0) {
      binom = binom * (n - j + 1) / j;
      pow_qm1 *= (q - 1);
    }
    sphere += binom * pow_qm1;
  }
  return ambient % sphere == 0 && U128(s.cardinality) == ambient / sphere;
}

}  // namespace zq
