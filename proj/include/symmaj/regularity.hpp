#ifndef SYMMAJ_REGULARITY_HPP
#define SYMMAJ_REGULARITY_HPP

#include "symmaj/groups.hpp"

#include <optional>
#include <string>

namespace symmaj {

/// Which arithmetic condition an element breaks: (a) concerns elements
/// (phi, psi, id), (b) concerns elements (phi, psi, rho0).
enum class Condition { a, b };

std::string to_string(Condition c);

struct RegularityVerdict {
  bool regular = true;
  std::optional<GroupElement> witness;
  std::optional<Condition> violated_condition;
};

/// Checks a single element against conditions (a) and (b).
std::optional<Condition> violates(GroupElement const &g);

/// Arithmetic characterization over the explicit element list. The witness is
/// the first violating element in sorted order.
RegularityVerdict is_regular(Group const &u);

/// The defining property checked profile by profile: every stabilizer lies in
/// (S_h x {id} x {id}) union (S_h x {psi*} x {rho0}) for one psi* conjugate
/// to rho0. Returns the first profile (lexicographically) that fails.
std::optional<Profile> definition_counterexample(Group const &u,
                                                 std::uint64_t profile_cap = kDefaultProfileCap);

bool is_regular_by_definition(Group const &u, std::uint64_t profile_cap = kDefaultProfileCap);

/// Closed-form test for V(B) x W(C) x (Omega or {id}).
bool is_regular_partition(Partition const &committees, Partition const &classes,
                          bool with_reversal);

/// Same verdict as is_regular_partition, with an explicit violating element
/// built without enumerating the group: phi cycles every committee, psi is
/// either id (with rho0) or a prime cycle inside a largest class.
RegularityVerdict partition_violation(Partition const &committees, Partition const &classes,
                                      bool with_reversal);

/// gcd(h, n!) == 1.
bool moulin_condition(int h, int n);

} // namespace symmaj

#endif // SYMMAJ_REGULARITY_HPP
