#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "zq/errors.hpp"

namespace zq {

/// Every element of Z_q falls into exactly one of these classes.
enum class ElementClass { Zero, Unit, ZeroDivisor };

inline void check_modulus(int q) {
  if (q < 2) throw std::domain_error("modulus must be >= 2, got " + std::to_string(q));
}

inline bool is_even(int q) { return q % 2 == 0; }

inline void check_even_modulus(int q, const char* context) {
  check_modulus(q);
  if (!is_even(q))
    throw std::domain_error(std::string(context) + " requires an even modulus, got q=" +
                            std::to_string(q));
}

/// Number of units of Z_q: #{ i : 1 <= i < q, gcd(i,q)=1 }.
inline int euler_phi(int q) {
  check_modulus(q);
  int count = 0;
  for (int i = 1; i < q; ++i)
    if (std::gcd(i, q) == 1) ++count;
  return count;
}

inline ElementClass classify_element(int a, int q) {
  check_modulus(q);
  if (a < 0 || a >= q)
    throw std::domain_error("element " + std::to_string(a) + " out of range [0, " +
                            std::to_string(q) + ")");
  if (a == 0) return ElementClass::Zero;
  return std::gcd(a, q) == 1 ? ElementClass::Unit : ElementClass::ZeroDivisor;
}

/// A canonical representative of Z_q, always stored reduced into [0, q).
class Residue {
 public:
  Residue(long long value, int q) : q_(q) {
    check_modulus(q);
    value_ = static_cast<int>(((value % q) + q) % q);
  }

  int value() const noexcept { return value_; }
  int modulus() const noexcept { return q_; }
  ElementClass classification() const { return classify_element(value_, q_); }

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  int value_;
  int q_;
};

/// A fixed-length vector over Z_q. Entries are canonical representatives;
/// all arithmetic reduces eagerly so equality and ordering are bit-exact.
class ResidueVector {
 public:
  ResidueVector(int q, std::vector<int> entries) : q_(q), v_(std::move(entries)) {
    check_modulus(q);
    if (v_.empty()) throw std::invalid_argument("vector length must be >= 1");
    for (std::size_t i = 0; i < v_.size(); ++i)
      if (v_[i] < 0 || v_[i] >= q)
        throw std::invalid_argument("entry " + std::to_string(v_[i]) + " at position " +
                                    std::to_string(i) + " out of range [0, " + std::to_string(q) +
                                    ")");
  }

  static ResidueVector zero(int q, std::size_t n) { return constant(q, n, 0); }

  /// The constant vector (value, value, ..., value) of length n.
  static ResidueVector constant(int q, std::size_t n, int value) {
    check_modulus(q);
    if (n == 0) throw std::invalid_argument("vector length must be >= 1");
    if (value < 0 || value >= q)
      throw std::invalid_argument("fill value " + std::to_string(value) + " out of range");
    return ResidueVector(q, std::vector<int>(n, value), Unchecked{});
  }

  int modulus() const noexcept { return q_; }
  std::size_t size() const noexcept { return v_.size(); }
  int operator[](std::size_t i) const { return v_[i]; }
  const std::vector<int>& entries() const noexcept { return v_; }

  friend bool operator==(const ResidueVector&, const ResidueVector&) = default;
  friend auto operator<=>(const ResidueVector& a, const ResidueVector& b) {
    if (auto c = a.q_ <=> b.q_; c != 0) return c;
    return a.v_ <=> b.v_;
  }

 private:
  struct Unchecked {};
  ResidueVector(int q, std::vector<int> entries, Unchecked) : q_(q), v_(std::move(entries)) {}

  friend ResidueVector vector_add(const ResidueVector&, const ResidueVector&);
  friend ResidueVector vector_sub(const ResidueVector&, const ResidueVector&);
  friend ResidueVector scalar_mul(long long, const ResidueVector&);

  int q_;
  std::vector<int> v_;
};

inline void require_same_shape(const ResidueVector& u, const ResidueVector& v) {
  if (u.modulus() != v.modulus())
    throw std::invalid_argument("modulus mismatch: " + std::to_string(u.modulus()) + " vs " +
                                std::to_string(v.modulus()));
  if (u.size() != v.size())
    throw std::invalid_argument("length mismatch: " + std::to_string(u.size()) + " vs " +
                                std::to_string(v.size()));
}

inline ResidueVector vector_add(const ResidueVector& u, const ResidueVector& v) {
  require_same_shape(u, v);
  std::vector<int> out(u.size());
  const int q = u.modulus();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (u[i] + v[i]) % q;
  return ResidueVector(q, std::move(out), ResidueVector::Unchecked{});
}

/// Componentwise subtraction mod q; first-class rather than add-of-negation.
inline ResidueVector vector_sub(const ResidueVector& u, const ResidueVector& v) {
  require_same_shape(u, v);
  std::vector<int> out(u.size());
  const int q = u.modulus();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (u[i] - v[i] + q) % q;
  return ResidueVector(q, std::move(out), ResidueVector::Unchecked{});
}

inline ResidueVector scalar_mul(long long a, const ResidueVector& v) {
  const int q = v.modulus();
  const int ar = static_cast<int>(((a % q) + q) % q);
  std::vector<int> out(v.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (ar * v[i]) % q;
  return ResidueVector(q, std::move(out), ResidueVector::Unchecked{});
}

inline ResidueVector scalar_mul(const Residue& a, const ResidueVector& v) {
  if (a.modulus() != v.modulus())
    throw std::invalid_argument("scalar modulus " + std::to_string(a.modulus()) +
                                " does not match vector modulus " + std::to_string(v.modulus()));
  return scalar_mul(static_cast<long long>(a.value()), v);
}

inline std::size_t hamming_weight(const ResidueVector& v) {
  std::size_t w = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) ++w;
  return w;
}

inline std::size_t hamming_distance(const ResidueVector& u, const ResidueVector& v) {
  require_same_shape(u, v);
  std::size_t d = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != v[i]) ++d;
  return d;
}

}  // namespace zq
