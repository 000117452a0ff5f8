#ifndef SYMMAJ_PREFS_HPP
#define SYMMAJ_PREFS_HPP

#include "symmaj/perm.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace symmaj {

/**
 * A strict ranking of the alternatives {1, ..., n}.
 *
 * Stored in vector form: at_rank(r) is the alternative with rank r, rank 1
 * being the best. Read as a permutation it maps ranks to alternatives.
 * Ordering is lexicographic on the ranking vector.
 */
class LinearOrder {
public:
  explicit LinearOrder(std::vector<int> ranking);

  static LinearOrder identity(int n);
  static LinearOrder from_permutation(Permutation const &rank_to_alternative);

  /// Accepts "4,2,1,3" or "[4,2,1,3]".
  static LinearOrder parse(std::string_view text);

  int size() const { return static_cast<int>(ranking_.size()); }
  int at_rank(int r) const { return ranking_[static_cast<std::size_t>(r - 1)]; }
  int rank_of(int x) const { return rank_[static_cast<std::size_t>(x - 1)]; }
  std::span<int const> ranking() const { return ranking_; }

  Permutation as_permutation() const { return Permutation(ranking_); }

  /// "[4,2,1,3]"
  std::string to_string() const;
  /// "4,2,1,3"
  std::string to_column() const;

  auto operator<=>(LinearOrder const &other) const {
    return ranking_ <=> other.ranking_;
  }
  bool operator==(LinearOrder const &other) const {
    return ranking_ == other.ranking_;
  }

private:
  std::vector<int> ranking_;
  std::vector<int> rank_;
};

/// The rank map component of a group element: identity or rho0.
enum class Rho : std::uint8_t { identity = 0, reversal = 1 };

inline Rho operator*(Rho a, Rho b) { return a == b ? Rho::identity : Rho::reversal; }

/// psi q: every alternative x is renamed psi(x).
LinearOrder left_mul(Permutation const &psi, LinearOrder const &q);

/// q rho: with rho = reversal the ranking is read bottom to top.
LinearOrder right_mul(LinearOrder const &q, Rho rho);

/// True iff x is ranked strictly above y in q.
bool prefers(LinearOrder const &q, int x, int y);

/// h rankings over the same n alternatives; column i belongs to individual i.
class Profile {
public:
  explicit Profile(std::vector<LinearOrder> columns);

  /// Whitespace-separated columns, each a comma-separated ranking best to
  /// worst: "3,2,1 1,2,3 2,1,3".
  static Profile parse(std::string_view text);

  /// Reads a matrix given row by row (rows = ranks), as profiles are usually
  /// displayed.
  static Profile from_rows(std::vector<std::vector<int>> const &rows);

  int h() const { return static_cast<int>(columns_.size()); }
  int n() const { return columns_.front().size(); }
  LinearOrder const &operator[](int i) const {
    return columns_[static_cast<std::size_t>(i - 1)];
  }
  std::span<LinearOrder const> columns() const { return columns_; }

  /// Same format accepted by parse().
  std::string to_string() const;
  /// Multi-line matrix, one rank per row.
  std::string to_matrix() const;

  auto operator<=>(Profile const &) const = default;

private:
  std::vector<LinearOrder> columns_;
};

/// An element (phi, psi, rho) of S_h x S_n x {id, rho0}.
struct GroupElement {
  Permutation phi;
  Permutation psi;
  Rho rho = Rho::identity;

  static GroupElement identity(int h, int n);

  int h() const { return phi.degree(); }
  int n() const { return psi.degree(); }
  bool reverses() const { return rho == Rho::reversal; }

  GroupElement inverse() const;
  std::string to_string() const;

  auto operator<=>(GroupElement const &) const = default;
};

/// Componentwise product.
GroupElement operator*(GroupElement const &a, GroupElement const &b);

/// The profile p^g: column i is psi p_{phi^{-1}(i)} rho.
Profile act(Profile const &p, GroupElement const &g);

} // namespace symmaj

#endif // SYMMAJ_PREFS_HPP
