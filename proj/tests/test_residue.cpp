#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "zq/residue.hpp"

using namespace zq;

namespace {

ResidueVector rv(int q, std::vector<int> v) { return ResidueVector(q, std::move(v)); }

ResidueVector random_vector(int q, std::size_t n, std::mt19937_64& rng) {
  std::vector<int> v(n);
  for (auto& e : v) e = static_cast<int>(rng() % static_cast<std::uint64_t>(q));
  return ResidueVector(q, std::move(v));
}

}  // namespace

TEST_CASE("vector_add reduces componentwise") {
  CHECK(vector_add(rv(4, {1, 2, 3}), rv(4, {3, 2, 1})) == rv(4, {0, 0, 0}));
  CHECK(vector_add(rv(4, {1, 0, 2}), rv(4, {0, 0, 0})) == rv(4, {1, 0, 2}));
  CHECK(vector_add(rv(6, {5, 5}), rv(6, {2, 3})) == rv(6, {1, 2}));
}

TEST_CASE("vector ops reject shape mismatches") {
  CHECK_THROWS_AS(vector_add(rv(4, {1, 2}), rv(4, {1, 2, 3})), std::invalid_argument);
  CHECK_THROWS_AS(vector_add(rv(4, {1, 2}), rv(6, {1, 2})), std::invalid_argument);
  CHECK_THROWS_AS(vector_sub(rv(4, {1}), rv(4, {1, 1})), std::invalid_argument);
  CHECK_THROWS_AS(hamming_distance(rv(2, {1, 0}), rv(2, {1})), std::invalid_argument);
}

TEST_CASE("scalar_mul") {
  CHECK(scalar_mul(2, rv(4, {1, 2, 3})) == rv(4, {2, 0, 2}));
  CHECK(scalar_mul(0, rv(4, {1, 2, 3})) == rv(4, {0, 0, 0}));
  CHECK(scalar_mul(3, rv(6, {2, 4})) == rv(6, {0, 0}));
  CHECK(scalar_mul(Residue(3, 4), rv(4, {1, 1})) == rv(4, {3, 3}));
  CHECK_THROWS_AS(scalar_mul(Residue(1, 6), rv(4, {1, 1})), std::invalid_argument);
}

TEST_CASE("hamming weight and distance") {
  CHECK(hamming_weight(rv(4, {0, 0, 0})) == 0);
  CHECK(hamming_weight(rv(4, {1, 2, 0, 3})) == 3);
  CHECK(hamming_weight(rv(6, {3, 3, 3})) == 3);
  CHECK(hamming_distance(rv(4, {1, 2}), rv(4, {1, 3})) == 1);
  CHECK(hamming_distance(rv(4, {2, 3, 1}), rv(4, {2, 3, 1})) == 0);
  CHECK(hamming_distance(rv(4, {0, 0, 0}), rv(4, {2, 0, 2})) == 2);
}

TEST_CASE("euler_phi") {
  CHECK(euler_phi(2) == 1);
  CHECK(euler_phi(4) == 2);
  CHECK(euler_phi(6) == 2);
  CHECK(euler_phi(8) == 4);
  CHECK(euler_phi(12) == 4);
  CHECK_THROWS_AS(euler_phi(1), std::domain_error);
}

TEST_CASE("classify_element") {
  CHECK(classify_element(0, 4) == ElementClass::Zero);
  CHECK(classify_element(2, 4) == ElementClass::ZeroDivisor);
  CHECK(classify_element(5, 6) == ElementClass::Unit);
  CHECK(classify_element(3, 6) == ElementClass::ZeroDivisor);
  CHECK_THROWS_AS(classify_element(4, 4), std::domain_error);
  CHECK_THROWS_AS(classify_element(-1, 4), std::domain_error);
}

TEST_CASE("classes partition Z_q and units count phi(q)") {
  for (int q = 2; q <= 12; ++q) {
    int zeros = 0, units = 0, divisors = 0;
    for (int a = 0; a < q; ++a) {
      switch (classify_element(a, q)) {
        case ElementClass::Zero: ++zeros; break;
        case ElementClass::Unit: ++units; break;
        case ElementClass::ZeroDivisor: ++divisors; break;
      }
    }
    CHECK(zeros == 1);
    CHECK(units == euler_phi(q));
    CHECK(zeros + units + divisors == q);
  }
}

TEST_CASE("construction validates entries and modulus") {
  CHECK_THROWS_AS(ResidueVector(4, {0, 4}), std::invalid_argument);
  CHECK_THROWS_AS(ResidueVector(4, {-1}), std::invalid_argument);
  CHECK_THROWS_AS(ResidueVector(1, {0}), std::domain_error);
  CHECK_THROWS_AS(ResidueVector(4, {}), std::invalid_argument);
  CHECK(ResidueVector::constant(5, 3, 2) == rv(5, {2, 2, 2}));
  CHECK(ResidueVector::zero(3, 2) == rv(3, {0, 0}));
  CHECK(Residue(-1, 4).value() == 3);
  CHECK(Residue(7, 4).value() == 3);
}

TEST_CASE("distance equals weight of componentwise difference") {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 300; ++trial) {
    const int q = 2 + static_cast<int>(rng() % 8);
    const std::size_t n = 1 + rng() % 10;
    const auto u = random_vector(q, n, rng);
    const auto v = random_vector(q, n, rng);
    CHECK(hamming_distance(u, v) == hamming_weight(vector_sub(u, v)));
  }
}

TEST_CASE("sums and differences of {0, q/2}-vectors stay in {0, q/2}") {
  for (int q : {2, 4, 6, 8}) {
    const int half = q / 2;
    for (int n = 1; n <= 4; ++n) {
      const std::uint64_t total = std::uint64_t{1} << (2 * n);
      for (std::uint64_t bits = 0; bits < total; ++bits) {
        std::vector<int> x(n), y(n);
        for (int j = 0; j < n; ++j) {
          x[j] = ((bits >> j) & 1) ? half : 0;
          y[j] = ((bits >> (n + j)) & 1) ? half : 0;
        }
        const ResidueVector u(q, x), v(q, y);
        for (const auto& w : {vector_add(u, v), vector_sub(u, v)})
          for (std::size_t j = 0; j < w.size(); ++j) {
            REQUIRE((w[j] == 0 || w[j] == half));
          }
      }
    }
  }
}

TEST_CASE("triangle inequality on random triples") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int q = 2 + static_cast<int>(rng() % 7);
    const std::size_t n = 1 + rng() % 9;
    const auto a = random_vector(q, n, rng);
    const auto b = random_vector(q, n, rng);
    const auto c = random_vector(q, n, rng);
    CHECK(hamming_distance(a, c) <= hamming_distance(a, b) + hamming_distance(b, c));
  }
}
