#ifndef SYMMAJ_GROUPS_HPP
#define SYMMAJ_GROUPS_HPP

#include "symmaj/errors.hpp"
#include "symmaj/prefs.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace symmaj {

inline constexpr std::uint64_t kDefaultProfileCap = 10'000'000;
inline constexpr std::uint64_t kDefaultElementCap = 1'000'000;

/// A partition of {1, ..., ground} into nonempty blocks. Blocks are kept
/// sorted internally and ordered by smallest member.
class Partition {
public:
  Partition(int ground, std::vector<std::vector<int>> blocks);

  /// "1,2|3": blocks separated by '|', members by ','.
  static Partition parse(std::string_view text, int ground);
  static Partition whole(int ground);
  static Partition singletons(int ground);

  int ground() const { return ground_; }
  std::vector<std::vector<int>> const &blocks() const { return blocks_; }

  int max_block_size() const;
  int gcd_block_sizes() const;
  std::string to_string() const;

  bool operator==(Partition const &) const = default;

private:
  int ground_;
  std::vector<std::vector<int>> blocks_;
};

/// V(B) x W(C) x (Omega or {id}).
struct PartitionProduct {
  Partition committees;
  Partition classes;
  bool with_reversal = false;
};

/// Subgroup generated by explicit elements.
struct Generated {
  std::vector<GroupElement> generators;
};

/// Products of full symmetric groups and Omega, e.g. (true, true, true) is G.
struct FullTriple {
  bool anonymous = false;
  bool neutral = false;
  bool with_reversal = false;
};

/// Finite description of a subgroup U of S_h x S_n x Omega.
struct SubgroupSpec {
  int h = 2;
  int n = 2;
  std::variant<PartitionProduct, Generated, FullTriple> variant;

  static SubgroupSpec partition_product(Partition committees, Partition classes,
                                        bool with_reversal);
  static SubgroupSpec generated(int h, int n, std::vector<GroupElement> generators);
  static SubgroupSpec full_triple(int h, int n, bool anonymous, bool neutral,
                                  bool with_reversal);

  /// FullTriple rewritten as the equivalent PartitionProduct; the other
  /// variants are returned unchanged.
  SubgroupSpec normalized() const;
  std::string describe() const;
};

/// |U| for product-shaped specs, saturated at UINT64_MAX. Generated specs
/// have no closed form and return 0.
std::uint64_t product_order(SubgroupSpec const &spec);

/// Explicit element list of U, sorted by (phi, psi, rho). Throws ResourceError
/// when |U| would exceed `cap`.
std::vector<GroupElement> elements(SubgroupSpec const &spec,
                                   std::uint64_t cap = kDefaultElementCap);

/// A subgroup together with its materialised elements.
class Group {
public:
  explicit Group(SubgroupSpec spec, std::uint64_t cap = kDefaultElementCap);

  SubgroupSpec const &spec() const { return spec_; }
  int h() const { return spec_.h; }
  int n() const { return spec_.n; }
  std::vector<GroupElement> const &elements() const { return elements_; }
  std::uint64_t order() const { return elements_.size(); }

private:
  SubgroupSpec spec_;
  std::vector<GroupElement> elements_;
};

/// Elements of U fixing p.
std::vector<GroupElement> stabilizer(Group const &u, Profile const &p);

/// The U-orbit of p, sorted and without repetitions.
std::vector<Profile> orbit(Group const &u, Profile const &p);

/// Lexicographic minimum of the orbit of p, together with an element g such
/// that act(canonical, g) == p.
struct CanonicalForm {
  Profile representative;
  GroupElement transporter;
};

CanonicalForm canonical_form(Group const &u, Profile const &p);

/// Bijection between L(N)^h and [0, (n!)^h). Column 1 is the most significant
/// digit and orders are numbered lexicographically, so numeric order of codes
/// is lexicographic order of profiles.
class ProfileSpace {
public:
  ProfileSpace(int h, int n, std::uint64_t cap = kDefaultProfileCap);

  int h() const { return h_; }
  int n() const { return n_; }
  std::uint64_t size() const { return size_; }
  std::vector<LinearOrder> const &orders() const { return orders_; }

  std::uint32_t order_index(LinearOrder const &q) const;
  std::uint64_t encode(Profile const &p) const;
  Profile decode(std::uint64_t code) const;

  /// Column digits of a code, column 1 first.
  void digits(std::uint64_t code, std::vector<std::uint32_t> &out) const;
  std::uint64_t from_digits(std::vector<std::uint32_t> const &digits) const;

  void for_each(std::function<void(std::uint64_t, Profile const &)> const &visit) const;

private:
  int h_;
  int n_;
  std::uint64_t size_;
  std::vector<LinearOrder> orders_;
  std::vector<std::uint64_t> place_;
};

/// A group element precompiled to act on profile codes.
class CompiledElement {
public:
  CompiledElement(ProfileSpace const &space, GroupElement const &g);

  /// Digits of p^g given the digits of p.
  void apply(std::vector<std::uint32_t> const &in, std::vector<std::uint32_t> &out) const;

private:
  std::vector<int> source_column_; // phi^{-1}(i) - 1 for each output column i
  std::vector<std::uint32_t> column_map_;
};

/// Orbit decomposition of the whole profile space.
struct OrbitReport {
  std::vector<Profile> representatives;
  std::vector<std::uint64_t> orbit_sizes;
  std::vector<std::uint64_t> stabilizer_orders;

  std::size_t r_u() const { return representatives.size(); }
};

/// One lexicographically minimal representative per orbit, in increasing
/// order. Throws ResourceError when (n!)^h exceeds `profile_cap`.
OrbitReport orbit_report(Group const &u, std::uint64_t profile_cap = kDefaultProfileCap);

} // namespace symmaj

#endif // SYMMAJ_GROUPS_HPP
