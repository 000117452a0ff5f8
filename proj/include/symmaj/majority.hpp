#ifndef SYMMAJ_MAJORITY_HPP
#define SYMMAJ_MAJORITY_HPP

#include "symmaj/prefs.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace symmaj {

/// Pairwise support |{i : x >_{p_i} y}| for all alternatives x, y.
class SupportCounts {
public:
  explicit SupportCounts(Profile const &p);

  int h() const { return h_; }
  int n() const { return n_; }
  int operator()(int x, int y) const {
    return counts_[static_cast<std::size_t>((x - 1) * n_ + (y - 1))];
  }

private:
  int h_;
  int n_;
  std::vector<int> counts_;
};

using Edge = std::pair<int, int>;

/// Sigma_nu(p): the pairs (x, y) supported by at least nu individuals.
class MajorityRelation {
public:
  MajorityRelation(SupportCounts counts, int threshold);

  int n() const { return counts_.n(); }
  int h() const { return counts_.h(); }
  int threshold() const { return threshold_; }
  SupportCounts const &counts() const { return counts_; }

  bool has_edge(int x, int y) const {
    return x != y && counts_(x, y) >= threshold_;
  }
  /// Edges in lexicographic order.
  std::vector<Edge> edges() const;

private:
  SupportCounts counts_;
  int threshold_;
};

/// Valid thresholds are the integers in (h/2, h].
int min_threshold(int h);

/// Throws std::invalid_argument unless h/2 < nu <= h.
MajorityRelation sigma(Profile const &p, int nu);

/// True iff q ranks x above y for every edge (x, y).
bool contains(LinearOrder const &q, MajorityRelation const &relation);

bool is_acyclic(MajorityRelation const &relation);

/// C_nu(p), sorted lexicographically. Empty exactly when Sigma_nu has a cycle.
std::vector<LinearOrder> consistent_orders(MajorityRelation const &relation);
std::vector<LinearOrder> consistent_orders(Profile const &p, int nu);

/// Lexicographically smallest element of C_nu(p), if any.
std::optional<LinearOrder> lexmin_consistent(MajorityRelation const &relation);

/// Smallest valid threshold whose Sigma is acyclic.
int nu_min(SupportCounts const &counts);
int nu_min(Profile const &p);

/// S(p): (x, y) for x != y whenever at least half of the individuals rank x
/// above y.
struct SimpleMajorityRelation {
  std::vector<Edge> pairs;
  bool is_linear = false;
  /// The relation read as a ranking when it is a linear order.
  std::optional<LinearOrder> order;
};

SimpleMajorityRelation simple_majority(Profile const &p);

} // namespace symmaj

#endif // SYMMAJ_MAJORITY_HPP
