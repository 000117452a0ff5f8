#ifndef SYMMAJ_PERM_HPP
#define SYMMAJ_PERM_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace symmaj {

/**
 * A bijection of {1, ..., degree}, stored in one-line notation.
 *
 * Points are 1-based throughout. The product of two permutations is
 * right-to-left composition: (a * b)(x) = a(b(x)).
 */
class Permutation {
public:
  /// The identity of the given degree (degree >= 1).
  explicit Permutation(int degree = 1);

  /// images[r - 1] is the image of r. Throws std::invalid_argument unless the
  /// sequence is a bijection of {1, ..., images.size()}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree) { return Permutation(degree); }

  /// Builds a permutation from disjoint cycles, e.g. {{1, 3, 4}, {2, 5}}.
  static Permutation from_cycles(int degree,
                                 std::vector<std::vector<int>> const &cycles);

  /// Parses cycle notation such as "(1 3 4)(2 5)" or "id". Commas are accepted
  /// as separators inside a cycle.
  static Permutation parse(std::string_view text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x - 1)]; }
  std::span<int const> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation pow(long long exponent) const;

  /// Cycle notation, fixed points omitted; "id" for the identity.
  std::string to_string() const;

  auto operator<=>(Permutation const &) const = default;

private:
  std::vector<int> images_;
};

/// a * b, i.e. x -> a(b(x)). Throws std::invalid_argument on degree mismatch.
Permutation compose(Permutation const &a, Permutation const &b);

inline Permutation operator*(Permutation const &a, Permutation const &b) {
  return compose(a, b);
}

/// Orbit sizes of a permutation, non-increasing.
struct CycleType {
  std::vector<int> parts;

  int gcd() const;
  std::uint64_t lcm() const;
  int fixed_points() const;
  std::string to_string() const;

  auto operator<=>(CycleType const &) const = default;
};

CycleType cycle_type(Permutation const &s);

/// Least m >= 1 with s^m = id.
std::uint64_t order(Permutation const &s);

/// Largest power of `prime` dividing order(s); 1 when the prime does not
/// divide it. Throws std::invalid_argument if `prime` is not prime.
std::uint64_t pi_part(Permutation const &s, std::uint64_t prime);

bool is_conjugate(Permutation const &a, Permutation const &b);

/// The rank-reversing permutation r -> n - r + 1.
Permutation rho0(int n);

/// Partition of the points into <s>-orbits with an ordered system of
/// representatives: orbits are listed by non-increasing size (ties broken by
/// smallest member), each orbit starts at its smallest point and follows s.
struct OrbitPartition {
  std::vector<std::vector<int>> orbits;
  std::vector<int> representatives;
};

OrbitPartition orbits(Permutation const &s);

/// Every permutation of the given degree, in lexicographic order of images.
std::vector<Permutation> all_permutations(int degree);

bool is_prime(std::uint64_t value);

/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t value);

} // namespace symmaj

#endif // SYMMAJ_PERM_HPP
