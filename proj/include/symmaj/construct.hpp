#ifndef SYMMAJ_CONSTRUCT_HPP
#define SYMMAJ_CONSTRUCT_HPP

#include "symmaj/majority.hpp"
#include "symmaj/regularity.hpp"
#include "symmaj/rules.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

namespace symmaj {

/// Raised when a minimal symmetric rule is requested for a non-regular group.
class NotRegularError : public std::runtime_error {
public:
  explicit NotRegularError(RegularityVerdict verdict);
  RegularityVerdict const &verdict() const { return verdict_; }

private:
  RegularityVerdict verdict_;
};

/// Sigma_nu(p) together with its chain relation: x reaches y when a chain of
/// Sigma_nu edges leads from x to y.
class ChainRelation {
public:
  explicit ChainRelation(MajorityRelation base);

  MajorityRelation const &base() const { return base_; }
  int n() const { return base_.n(); }
  bool reaches(int x, int y) const {
    return closure_[static_cast<std::size_t>((x - 1) * n() + (y - 1))];
  }
  std::vector<Edge> pairs() const;

private:
  MajorityRelation base_;
  std::vector<bool> closure_;
};

/// Throws std::invalid_argument when Sigma_nu(p) has a cycle.
ChainRelation chain_closure(MajorityRelation base);
ChainRelation chain_closure(Profile const &p, int nu);

struct GammaDecomposition {
  Permutation psi;
  /// psi-orbits in the ordered convention: two-point orbits first, each as
  /// {x_j, psi(x_j)} with x_j its smaller member, the fixed point last.
  std::vector<std::vector<int>> psi_orbits;
  std::vector<int> representatives;
  std::vector<int> gamma;             // sorted
  std::vector<std::size_t> J;         // 0-based orbit indices meeting gamma
  std::vector<std::size_t> J_star;    // 0-based two-point orbits missing gamma
  std::optional<int> fixed_point;
  std::vector<int> T_set;             // sorted
  std::vector<int> f;                 // ranking of T_set, best first
  /// y_j per orbit index (0 at the fixed point).
  std::vector<int> y;
  /// M ranked by f: a_1, ..., a_{floor(n/2)}.
  std::vector<int> M;
};

/// psi must be conjugate to rho0 (std::invalid_argument otherwise) and
/// Sigma_nu(p) acyclic.
GammaDecomposition gamma_decomposition(Profile const &p, Permutation const &psi, int nu);

/// [a_1..a_m, (fixed point), psi(a_m)..psi(a_1)].
LinearOrder assemble(GammaDecomposition const &d);

/// An element of S2 at p computed from the stabilizer alone. Throws
/// NotRegularError if the stabilizer breaks the regularity property.
LinearOrder witness_for_stabilizer(std::vector<GroupElement> const &stab, Profile const &p);

/// Checks regularity of u first.
LinearOrder build_witness(Group const &u, Profile const &p);

/// A minimal U-symmetric rule whose choice at every canonical representative
/// is build_witness.
RuleTable build_min_rule(std::shared_ptr<Group const> u,
                         std::uint64_t profile_cap = kDefaultProfileCap);

} // namespace symmaj

#endif // SYMMAJ_CONSTRUCT_HPP
