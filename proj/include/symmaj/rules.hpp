#ifndef SYMMAJ_RULES_HPP
#define SYMMAJ_RULES_HPP

#include "symmaj/groups.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace symmaj {

using BigInt = boost::multiprecision::cpp_int;

/// A per-orbit choice that is not allowed.
class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Orders fixed by every element of the stabilizer: psi q rho = q.
std::vector<LinearOrder> s1(std::vector<GroupElement> const &stab, int n);
std::vector<LinearOrder> s1(Group const &u, Profile const &p);

/// s1 intersected with C_{nu(p)}(p).
std::vector<LinearOrder> s2(Group const &u, Profile const &p);

/// Everything known about one orbit, computed at its canonical representative.
struct OrbitChoices {
  Profile representative;
  std::uint64_t orbit_size = 0;
  std::uint64_t stabilizer_order = 0;
  int nu = 0;
  std::vector<LinearOrder> consistent; // C_nu(p) at nu = nu(p)
  std::vector<LinearOrder> s1;
  std::vector<LinearOrder> s2;
};

std::vector<OrbitChoices> orbit_choices(Group const &u, OrbitReport const &orbits);

struct CountReport {
  std::size_t r_u = 0;
  BigInt count_symmetric;
  BigInt count_min;
  /// (|S1|, |S2|) per orbit, aligned with the canonical representatives.
  std::vector<std::pair<std::size_t, std::size_t>> per_orbit;
  /// Index of the first orbit whose S2 is empty.
  std::optional<std::size_t> first_empty_s2;
};

CountReport summarize(std::vector<OrbitChoices> const &choices);
CountReport count(Group const &u, std::uint64_t profile_cap = kDefaultProfileCap);

/// Prime factorization display such as "2^13·3^8"; "0" and "1" for those values.
std::string factored(BigInt const &value);

struct RuleEntry {
  Profile representative;
  LinearOrder choice;
  /// The admissible choices at this orbit: S2 for minimal tables, S1 otherwise.
  std::vector<LinearOrder> options;
};

/// A U-symmetric rule given by one chosen social order per orbit.
class RuleTable {
public:
  RuleTable(std::shared_ptr<Group const> group, std::vector<RuleEntry> entries, bool minimal,
            BigInt count_symmetric, BigInt count_min);

  Group const &group() const { return *group_; }
  std::shared_ptr<Group const> const &group_ptr() const { return group_; }
  std::vector<RuleEntry> const &entries() const { return entries_; }
  bool minimal() const { return minimal_; }
  std::size_t r_u() const { return entries_.size(); }
  BigInt const &count_symmetric() const { return count_symmetric_; }
  BigInt const &count_min() const { return count_min_; }

  /// Entry index of a canonical representative.
  std::optional<std::size_t> index_of(Profile const &representative) const;

private:
  std::shared_ptr<Group const> group_;
  std::vector<RuleEntry> entries_;
  bool minimal_;
  BigInt count_symmetric_;
  BigInt count_min_;
  std::map<Profile, std::size_t> index_;
};

/// Builds the rule with F(p^j) = choices[j] at the canonical representatives.
/// Throws ValidationError naming the orbit when a choice lies outside S1, or
/// outside S2 for a minimal table.
RuleTable build_rule(std::shared_ptr<Group const> u, std::vector<OrbitChoices> const &orbits,
                     std::vector<LinearOrder> const &choices, bool minimal);
RuleTable build_rule(std::shared_ptr<Group const> u, std::vector<LinearOrder> const &choices,
                     bool minimal, std::uint64_t profile_cap = kDefaultProfileCap);

/// F(p) = psi q_j rho where p = (p^j)^(phi, psi, rho).
LinearOrder evaluate(RuleTable const &rule, Profile const &p);

/// Every minimal U-symmetric rule, choices varying fastest at the last orbit.
/// Throws ResourceError when there are more than `cap`.
std::vector<RuleTable> enumerate_min_rules(std::shared_ptr<Group const> u, std::uint64_t cap,
                                           std::uint64_t profile_cap = kDefaultProfileCap);

} // namespace symmaj

#endif // SYMMAJ_RULES_HPP
