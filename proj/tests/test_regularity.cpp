#include "fixtures.hpp"
#include "symmaj/regularity.hpp"

#include <doctest.h>

#include <numeric>

using namespace symmaj;

namespace {

SubgroupSpec pp(char const *b, int h, char const *c, int n, bool rev) {
  return SubgroupSpec::partition_product(Partition::parse(b, h), Partition::parse(c, n), rev);
}

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i)
    f *= static_cast<std::uint64_t>(i);
  return f;
}

} // namespace

TEST_CASE("regularity of the named examples") {
  Group committee(fixtures::committee_spec());
  CHECK(is_regular_by_definition(committee));
  CHECK(is_regular(committee).regular);

  Group g33(SubgroupSpec::full_triple(3, 3, true, true, true));
  CHECK_FALSE(is_regular_by_definition(g33));
  auto verdict = is_regular(g33);
  CHECK_FALSE(verdict.regular);
  REQUIRE(verdict.witness);
  CHECK(verdict.violated_condition == Condition::a);
  CHECK(violates(*verdict.witness) == Condition::a);

  Group trivial(pp("1|2|3", 3, "1|2|3", 3, false));
  CHECK(is_regular_by_definition(trivial));
  CHECK(is_regular(trivial).regular);
  CHECK_FALSE(is_regular(trivial).witness);

  CHECK(is_regular(Group(SubgroupSpec::full_triple(5, 3, true, true, true))).regular);
}

TEST_CASE("single-element conditions") {
  auto cyc = [](char const *s, int k) { return Permutation::parse(s, k); };
  // (h-cycle, 3-cycle, id): 3 divides h = 3.
  CHECK(violates({cyc("(1 2 3)", 3), cyc("(1 2 3)", 3), Rho::identity}) == Condition::a);
  // (4-cycle, id, rho0): id is an involution not conjugate to rho0 and 2 | 4.
  CHECK(violates({cyc("(1 2 3 4)", 4), cyc("id", 3), Rho::reversal}) == Condition::b);
  // Conjugate of rho0 with reversal is always allowed.
  CHECK_FALSE(violates({cyc("(1 2 3 4)", 4), cyc("(1 2)", 3), Rho::reversal}));
  CHECK_FALSE(violates({cyc("(1 2)(3 4 5)", 5), cyc("(1 2 3)", 3), Rho::identity}));
  CHECK_FALSE(violates(GroupElement::identity(4, 3)));
  // psi of order 3 with rho0: psi^2 != id, never fixes a profile.
  CHECK_FALSE(violates({cyc("(1 2)", 2), cyc("(1 2 3)", 3), Rho::reversal}));
}

TEST_CASE("closed-form partition test") {
  for (int h = 2; h <= 7; ++h) {
    std::vector<std::vector<int>> two(2);
    for (int i = 1; i < h; ++i)
      two[0].push_back(i);
    two[1].push_back(h);
    for (auto const &c : fixtures::all_partitions(4))
      CHECK(is_regular_partition(Partition(h, two), c, true));
  }
  CHECK_FALSE(is_regular_partition(Partition::whole(4), Partition::singletons(3), true));
  CHECK(is_regular_partition(Partition::whole(5), Partition::singletons(3), true));
  CHECK(is_regular_partition(Partition::whole(5), Partition::whole(3), false));
  CHECK(is_regular_partition(Partition::singletons(6), Partition::whole(4), true));
}

TEST_CASE("partition witnesses violate the conditions they name") {
  for (int h = 2; h <= 6; ++h)
    for (auto const &b : fixtures::all_partitions(h))
      for (auto const &c : fixtures::all_partitions(4))
        for (bool rev : {false, true}) {
          auto v = partition_violation(b, c, rev);
          CHECK(v.regular == is_regular_partition(b, c, rev));
          CHECK(v.regular == !v.witness.has_value());
          if (v.witness) {
            CHECK(violates(*v.witness) == v.violated_condition);
            auto els = elements(SubgroupSpec::partition_product(b, c, rev));
            CHECK(std::binary_search(els.begin(), els.end(), *v.witness));
          }
        }
}

TEST_CASE("closed form agrees with the element-wise test") {
  for (int h = 2; h <= 5; ++h)
    for (auto const &b : fixtures::all_partitions(h))
      for (int n = 2; n <= 4; ++n)
        for (auto const &c : fixtures::all_partitions(n))
          for (bool rev : {false, true}) {
            Group u(SubgroupSpec::partition_product(b, c, rev));
            CHECK(is_regular(u).regular == is_regular_partition(b, c, rev));
          }
}

TEST_CASE("definition agrees with the arithmetic test on small generated groups") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    int h = 2 + static_cast<int>(rng() % 2);
    int n = 2 + static_cast<int>(rng() % 2);
    std::vector<GroupElement> gens;
    int k = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < k; ++i)
      gens.push_back(fixtures::random_element(h, n, rng));
    Group u(SubgroupSpec::generated(h, n, gens));
    CHECK(is_regular_by_definition(u) == is_regular(u).regular);
  }
}

TEST_CASE("the counterexample profile has a bad stabilizer") {
  Group g33(SubgroupSpec::full_triple(3, 3, true, true, true));
  auto p = definition_counterexample(g33);
  REQUIRE(p);
  bool bad = false;
  std::vector<Permutation> reversing;
  for (auto const &g : stabilizer(g33, *p)) {
    if (g.reverses())
      reversing.push_back(g.psi);
    else
      bad = bad || !g.psi.is_identity();
  }
  for (auto const &psi : reversing)
    bad = bad || psi != reversing.front() || !is_conjugate(psi, rho0(3));
  CHECK(bad);
  CHECK_FALSE(definition_counterexample(Group(fixtures::committee_spec())));
  CHECK_THROWS_AS(is_regular_by_definition(g33, 10), ResourceError);
}

TEST_CASE("subgroups of regular groups are regular") {
  for (int h = 2; h <= 4; ++h)
    for (auto const &b : fixtures::all_partitions(h))
      for (auto const &c : fixtures::all_partitions(3)) {
        if (!is_regular_partition(b, c, true))
          continue;
        CHECK(is_regular_partition(b, c, false));
        for (auto const &finer : fixtures::all_partitions(3)) {
          bool refines = std::all_of(finer.blocks().begin(), finer.blocks().end(), [&](auto const &f) {
            return std::any_of(c.blocks().begin(), c.blocks().end(), [&](auto const &blk) {
              return std::includes(blk.begin(), blk.end(), f.begin(), f.end());
            });
          });
          if (refines)
            CHECK(is_regular_partition(b, finer, true));
        }
      }
}

TEST_CASE("full groups are regular exactly when gcd(h, n!) = 1") {
  for (int h = 2; h <= 6; ++h)
    for (int n = 2; n <= 4; ++n) {
      bool expected = std::gcd(static_cast<std::uint64_t>(h), factorial(n)) == 1;
      CHECK(moulin_condition(h, n) == expected);
      CHECK(is_regular(Group(SubgroupSpec::full_triple(h, n, true, true, true))).regular == expected);
      CHECK(is_regular(Group(SubgroupSpec::full_triple(h, n, true, true, false))).regular == expected);
    }
  CHECK(moulin_condition(5, 3));
  CHECK_FALSE(moulin_condition(3, 3));
  CHECK_FALSE(moulin_condition(2, 2));
}

TEST_CASE("lcm of class factorials is the largest factorial") {
  for (int n = 1; n <= 6; ++n)
    for (auto const &c : fixtures::all_partitions(n)) {
      std::uint64_t l = 1;
      for (auto const &blk : c.blocks())
        l = std::lcm(l, factorial(static_cast<int>(blk.size())));
      CHECK(l == factorial(c.max_block_size()));
    }
}

TEST_CASE("condition names") {
  CHECK(to_string(Condition::a) == "a");
  CHECK(to_string(Condition::b) == "b");
}
