#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conika/field.hpp"
#include "test_support.hpp"

using namespace conika;
using conika::testing::Rng;

TEST_CASE("make_field basics") {
  Fq F7 = make_field(7, 1);
  CHECK(F7.q() == 7);
  CHECK(F7.modulus() == std::vector<Fq::Elt>{0, 1});

  // Smallest monic irreducible quadratic over F_3 is x^2 + 1.
  Fq F9 = make_field(3, 2);
  CHECK(F9.q() == 9);
  CHECK(F9.modulus() == std::vector<Fq::Elt>{1, 0, 1});

  CHECK_THROWS_AS(make_field(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_field(9, 1), std::invalid_argument);   // composite
  CHECK_THROWS_AS(make_field(3, 12), std::invalid_argument);  // budget
  CHECK(make_field(3, 7, 3000).q() == 2187);                  // override
}

TEST_CASE("prime_power_decompose") {
  CHECK(prime_power_decompose(9) == std::pair<std::uint32_t, std::uint32_t>{3, 2});
  CHECK(prime_power_decompose(13) == std::pair<std::uint32_t, std::uint32_t>{13, 1});
  CHECK_THROWS_AS(prime_power_decompose(12), std::invalid_argument);
}

TEST_CASE("find_nonsquare canonical values") {
  CHECK(find_nonsquare(make_field(7, 1)) == 3);
  CHECK(find_nonsquare(make_field(3, 1)) == 2);
  CHECK(find_nonsquare(make_field(5, 1)) == 2);
}

TEST_CASE("is_square") {
  Fq F7 = make_field(7, 1);
  CHECK(F7.is_square(4));
  CHECK_FALSE(F7.is_square(3));
  CHECK(F7.is_square(0));
  CHECK(F7.is_square(2));
  CHECK(F7.is_square(1));
}

TEST_CASE("field axioms hold on randomized triples") {
  Rng rng(1);
  for (auto [p, k] : {std::pair<std::uint32_t, std::uint32_t>{13, 1},
                      {3, 2}, {5, 2}, {3, 3}}) {
    Fq F = make_field(p, k);
    for (int it = 0; it < 500; ++it) {
      Fq::Elt a = testing::random_elt(rng, F), b = testing::random_elt(rng, F),
              c = testing::random_elt(rng, F);
      CHECK(F.add(a, F.add(b, c)) == F.add(F.add(a, b), c));
      CHECK(F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c));
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      CHECK(F.add(a, F.neg(a)) == 0);
      if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
    }
  }
}

TEST_CASE("exactly (q-1)/2 units are squares") {
  for (auto [p, k] : {std::pair<std::uint32_t, std::uint32_t>{7, 1},
                      {13, 1}, {3, 2}, {5, 2}, {3, 3}}) {
    Fq F = make_field(p, k);
    std::uint32_t squares = 0;
    for (Fq::Elt x = 1; x < F.q(); ++x)
      if (F.is_square(x)) ++squares;
    CHECK(squares == (F.q() - 1) / 2);
  }
}

TEST_CASE("quadratic extension") {
  Fq F3 = make_field(3, 1);
  Fq2 E9(F3, 2);
  CHECK(E9.mul(E9.z(), E9.z()) == E9.embed(2));

  // z^7 = -z in F_49, via repeated squaring.
  Fq F7 = make_field(7, 1);
  Fq2 E49(F7, 3);
  CHECK(E49.pow(E49.z(), 7) == E49.neg(E49.z()));

  CHECK_THROWS_AS(Fq2(F7, 4), std::invalid_argument);  // 4 = 2^2
  CHECK_THROWS_AS(Fq2(F7, 0), std::invalid_argument);
}

TEST_CASE("Frobenius is alpha - beta z, and units have order dividing q^2-1") {
  Rng rng(2);
  for (auto [p, k] : {std::pair<std::uint32_t, std::uint32_t>{7, 1}, {3, 2}}) {
    Fq F = make_field(p, k);
    Fq2 E(F, find_nonsquare(F));
    for (int it = 0; it < 200; ++it) {
      Fq::Elt a = testing::random_elt(rng, F), b = testing::random_elt(rng, F);
      Fq2::Elt x = E.make(a, b);
      CHECK(E.pow(x, F.q()) == E.make(a, F.neg(b)));
      if (x != 0)
        CHECK(E.pow(x, (std::uint64_t)F.q() * F.q() - 1) == E.one());
    }
  }
}

TEST_CASE("norm_one_subgroup") {
  Fq F3 = make_field(3, 1);
  Fq2 E9 = quadratic_extension(F3, 2);
  auto n1 = norm_one_subgroup(E9);
  CHECK(n1.size() == 4);

  // F_25: 6 elements, each with t^6 = 1, cross-checked by brute filter.
  Fq F5 = make_field(5, 1);
  Fq2 E25(F5, find_nonsquare(F5));
  auto n2 = norm_one_subgroup(E25);
  CHECK(n2.size() == 6);
  std::vector<Fq2::Elt> brute;
  for (Fq2::Elt t = 1; t < 25; ++t)
    if (E25.pow(t, 6) == E25.one()) brute.push_back(t);
  CHECK(brute == n2);

  // Closure under multiplication and inversion; t * t^q = 1.
  for (auto s : n2)
    for (auto t : n2) {
      auto prod = E25.mul(s, t);
      CHECK(std::find(n2.begin(), n2.end(), prod) != n2.end());
    }
  for (auto t : n2) {
    CHECK(std::find(n2.begin(), n2.end(), E25.inv(t)) != n2.end());
    CHECK(E25.mul(t, E25.pow(t, 5)) == E25.one());
  }
}

TEST_CASE("element encodings round-trip") {
  Fq F9 = make_field(3, 2);
  for (Fq::Elt e = 0; e < 9; ++e)
    CHECK(F9.from_coeffs(F9.to_coeffs(e)) == e);
  CHECK(F9.describe_element(5) == "[2,1]");
  CHECK(make_field(7, 1).describe_element(5) == "5");
}
