#include "fixtures.hpp"

#include <doctest.h>

#include <numeric>

using namespace symmaj;

namespace {

Permutation P(char const *text, int degree) { return Permutation::parse(text, degree); }

} // namespace

TEST_CASE("compose is right to left") {
  CHECK(P("(3 4 2)", 4) * P("(1 4 3)", 4) == P("(1 2 3)", 4));
  CHECK(P("id", 2) * P("(1 2)", 2) == P("(1 2)", 2));
  CHECK((P("(1 3)", 3) * P("(1 3)", 3)).is_identity());
  CHECK_THROWS_AS(P("(1 2)", 2) * P("(1 2)", 3), std::invalid_argument);
}

TEST_CASE("construction rejects non-bijections") {
  CHECK_THROWS_AS(Permutation(std::vector<int>{1, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 1}), std::invalid_argument);
  CHECK_THROWS(P("(1 4)", 3));
  CHECK_THROWS(P("(1 2)(2 3)", 3));
}

TEST_CASE("parse and print round trip") {
  CHECK(P("(1 3 4)(2 5)", 5).to_string() == "(1 3 4)(2 5)");
  CHECK(P("(1,3)", 3).to_string() == "(1 3)");
  CHECK(P("id", 4).to_string() == "id");
  CHECK(P("(3 1 4)", 4) == P("(1 4 3)", 4));
}

TEST_CASE("cycle types and orders") {
  auto s = P("(1 2 3)(4 5 6)(7 8)", 9);
  CHECK(cycle_type(s).parts == std::vector<int>{3, 3, 2, 1});
  CHECK(cycle_type(s).gcd() == 1);
  CHECK(cycle_type(s).lcm() == 6);
  CHECK(order(s) == 6);
  CHECK(cycle_type(P("id", 4)).parts == std::vector<int>{1, 1, 1, 1});
  CHECK(cycle_type(rho0(3)).parts == std::vector<int>{2, 1});
  CHECK(order(P("id", 5)) == 1);
  for (int n = 2; n <= 7; ++n)
    CHECK(order(rho0(n)) == 2);
}

TEST_CASE("prime parts") {
  auto s = P("(1 2 3)(4 5)", 5);
  CHECK(pi_part(s, 2) == 2);
  CHECK(pi_part(s, 3) == 3);
  CHECK(pi_part(s, 5) == 1);
  CHECK(pi_part(P("id", 5), 5) == 1);
  CHECK(pi_part(P("(1 2 3 4)", 4), 2) == 4);
  CHECK_THROWS_AS(pi_part(s, 4), std::invalid_argument);
  CHECK_THROWS_AS(pi_part(s, 1), std::invalid_argument);
}

TEST_CASE("conjugacy is equality of cycle types") {
  CHECK(is_conjugate(P("(1 2)", 3), rho0(3)));
  CHECK(is_conjugate(P("(2 3)", 3), rho0(3)));
  CHECK_FALSE(is_conjugate(P("id", 3), rho0(3)));
  CHECK(is_conjugate(P("(1 2 3)", 3), P("(1 2 3)", 3)));
  CHECK_THROWS_AS(is_conjugate(P("id", 2), P("id", 3)), std::invalid_argument);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = fixtures::random_permutation(6, rng);
    auto t = fixtures::random_permutation(6, rng);
    CHECK(is_conjugate(a, t * a * t.inverse()));
  }
}

TEST_CASE("rho0") {
  CHECK(rho0(4) == P("(1 4)(2 3)", 4));
  CHECK(rho0(3) == P("(1 3)", 3));
  CHECK(rho0(1).is_identity());
  for (int n = 1; n <= 9; ++n)
    CHECK(orbits(rho0(n)).orbits.size() == static_cast<std::size_t>((n + 1) / 2));
}

TEST_CASE("orbits with ordered representatives") {
  auto o = orbits(P("(1 2 3)(4 5 6)(7 8)", 9));
  CHECK(o.orbits == std::vector<std::vector<int>>{{1, 2, 3}, {4, 5, 6}, {7, 8}, {9}});
  CHECK(o.representatives == std::vector<int>{1, 4, 7, 9});
  CHECK(orbits(P("id", 3)).orbits == std::vector<std::vector<int>>{{1}, {2}, {3}});
  CHECK(orbits(P("(1 2)", 2)).orbits == std::vector<std::vector<int>>{{1, 2}});
}

TEST_CASE("inverse, powers and lcm of cycle type") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    int k = 1 + static_cast<int>(rng() % 8);
    auto a = fixtures::random_permutation(k, rng);
    auto b = fixtures::random_permutation(k, rng);
    CHECK((a * a.inverse()).is_identity());
    CHECK((a * b).inverse() == b.inverse() * a.inverse());
    CHECK(order(a) == cycle_type(a).lcm());
    CHECK(a.pow(static_cast<long long>(order(a))).is_identity());
    CHECK(a.pow(-1) == a.inverse());
    long long m = 1 + static_cast<long long>(rng() % 12);
    // Cycles of a^m are cycles of a cut into equal pieces.
    CHECK(cycle_type(a).gcd() % cycle_type(a.pow(m)).gcd() == 0);
  }
}

TEST_CASE("all permutations in lexicographic order") {
  auto all = all_permutations(4);
  CHECK(all.size() == 24);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(all.front().is_identity());
}

TEST_CASE("primes") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(prime_divisors(360) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(prime_divisors(1).empty());
}
