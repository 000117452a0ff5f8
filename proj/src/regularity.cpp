#include "symmaj/regularity.hpp"

#include <numeric>
#include <stdexcept>

namespace symmaj {

namespace {

// Smallest prime p <= bound dividing value, or 0.
int smallest_prime_factor_up_to(int value, int bound) {
  for (int p = 2; p <= bound && p <= value; ++p)
    if (value % p == 0 && is_prime(static_cast<std::uint64_t>(p)))
      return p;
  return 0;
}

} // namespace

std::string to_string(Condition c) { return c == Condition::a ? "a" : "b"; }

std::optional<Condition> violates(GroupElement const &g) {
  auto block_gcd = static_cast<std::uint64_t>(cycle_type(g.phi).gcd());
  if (!g.reverses()) {
    if (g.psi.is_identity())
      return std::nullopt;
    for (auto prime : prime_divisors(order(g.psi)))
      if (block_gcd % pi_part(g.psi, prime) == 0)
        return Condition::a;
    return std::nullopt;
  }
  if ((g.psi * g.psi).is_identity() && !is_conjugate(g.psi, rho0(g.n())) && block_gcd % 2 == 0)
    return Condition::b;
  return std::nullopt;
}

RegularityVerdict is_regular(Group const &u) {
  for (auto const &g : u.elements())
    if (auto c = violates(g))
      return {false, g, c};
  return {};
}

std::optional<Profile> definition_counterexample(Group const &u, std::uint64_t profile_cap) {
  ProfileSpace space(u.h(), u.n(), profile_cap);
  std::vector<CompiledElement> compiled;
  compiled.reserve(u.elements().size());
  for (auto const &g : u.elements())
    compiled.emplace_back(space, g);
  Permutation reversal = rho0(u.n());

  std::vector<std::uint32_t> digits;
  std::vector<std::uint32_t> image;
  for (std::uint64_t code = 0; code < space.size(); ++code) {
    space.digits(code, digits);
    std::optional<Permutation> psi_star;
    bool ok = true;
    for (std::size_t k = 0; k < compiled.size() && ok; ++k) {
      compiled[k].apply(digits, image);
      if (image != digits)
        continue;
      auto const &g = u.elements()[k];
      if (!g.reverses()) {
        ok = g.psi.is_identity();
      } else if (!psi_star) {
        psi_star = g.psi;
        ok = is_conjugate(g.psi, reversal);
      } else {
        ok = *psi_star == g.psi;
      }
    }
    if (!ok)
      return space.decode(code);
  }
  return std::nullopt;
}

bool is_regular_by_definition(Group const &u, std::uint64_t profile_cap) {
  return !definition_counterexample(u, profile_cap).has_value();
}

bool is_regular_partition(Partition const &committees, Partition const &classes,
                          bool with_reversal) {
  return partition_violation(committees, classes, with_reversal).regular;
}

RegularityVerdict partition_violation(Partition const &committees, Partition const &classes,
                                      bool with_reversal) {
  int g = committees.gcd_block_sizes();
  int largest = classes.max_block_size();
  int h = committees.ground();
  int n = classes.ground();

  // gcd(g, c!) = 1 iff no prime up to c divides g; reversal adds the prime 2.
  int prime = smallest_prime_factor_up_to(g, largest);
  bool reversal_only = false;
  if (prime == 0 && with_reversal && g % 2 == 0) {
    prime = 2;
    reversal_only = true;
  }
  if (prime == 0)
    return {};

  Permutation phi = Permutation::from_cycles(h, committees.blocks());
  if (reversal_only)
    return {false, GroupElement{phi, Permutation(n), Rho::reversal}, Condition::b};

  std::vector<int> const *target = nullptr;
  for (auto const &block : classes.blocks())
    if (static_cast<int>(block.size()) == largest) {
      target = &block;
      break;
    }
  std::vector<int> cycle(target->begin(), target->begin() + prime);
  Permutation psi = Permutation::from_cycles(n, {cycle});
  return {false, GroupElement{phi, psi, Rho::identity}, Condition::a};
}

bool moulin_condition(int h, int n) {
  if (h < 2 || n < 2)
    throw std::invalid_argument("moulin_condition needs h >= 2 and n >= 2");
  return smallest_prime_factor_up_to(h, n) == 0;
}

} // namespace symmaj
