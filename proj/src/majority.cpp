#include "symmaj/majority.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace symmaj {

SupportCounts::SupportCounts(Profile const &p) : h_(p.h()), n_(p.n()) {
  counts_.assign(static_cast<std::size_t>(n_ * n_), 0);
  for (auto const &q : p.columns())
    for (int a = 1; a <= n_; ++a)
      for (int b = a + 1; b <= n_; ++b) {
        int x = q.at_rank(a);
        int y = q.at_rank(b);
        ++counts_[static_cast<std::size_t>((x - 1) * n_ + (y - 1))];
      }
}

MajorityRelation::MajorityRelation(SupportCounts counts, int threshold)
    : counts_(std::move(counts)), threshold_(threshold) {
  if (2 * threshold_ <= counts_.h() || threshold_ > counts_.h())
    throw std::invalid_argument("threshold " + std::to_string(threshold_) +
                                " outside (h/2, h] for h = " + std::to_string(counts_.h()));
}

std::vector<Edge> MajorityRelation::edges() const {
  std::vector<Edge> out;
  for (int x = 1; x <= n(); ++x)
    for (int y = 1; y <= n(); ++y)
      if (has_edge(x, y))
        out.emplace_back(x, y);
  return out;
}

int min_threshold(int h) { return h / 2 + 1; }

MajorityRelation sigma(Profile const &p, int nu) {
  return MajorityRelation(SupportCounts(p), nu);
}

bool contains(LinearOrder const &q, MajorityRelation const &relation) {
  if (q.size() != relation.n())
    throw std::invalid_argument("order and relation have different alternatives");
  for (int x = 1; x <= relation.n(); ++x)
    for (int y = 1; y <= relation.n(); ++y)
      if (relation.has_edge(x, y) && q.rank_of(x) > q.rank_of(y))
        return false;
  return true;
}

std::optional<LinearOrder> lexmin_consistent(MajorityRelation const &relation) {
  int n = relation.n();
  std::vector<int> indegree(static_cast<std::size_t>(n), 0);
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      if (relation.has_edge(x, y))
        ++indegree[static_cast<std::size_t>(y - 1)];
  std::vector<bool> placed(static_cast<std::size_t>(n), false);
  std::vector<int> ranking;
  while (static_cast<int>(ranking.size()) < n) {
    int source = 0;
    for (int x = 1; x <= n && source == 0; ++x)
      if (!placed[static_cast<std::size_t>(x - 1)] && indegree[static_cast<std::size_t>(x - 1)] == 0)
        source = x;
    if (source == 0)
      return std::nullopt;
    placed[static_cast<std::size_t>(source - 1)] = true;
    ranking.push_back(source);
    for (int y = 1; y <= n; ++y)
      if (relation.has_edge(source, y))
        --indegree[static_cast<std::size_t>(y - 1)];
  }
  return LinearOrder(std::move(ranking));
}

bool is_acyclic(MajorityRelation const &relation) {
  return lexmin_consistent(relation).has_value();
}

std::vector<LinearOrder> consistent_orders(MajorityRelation const &relation) {
  int n = relation.n();
  std::vector<LinearOrder> out;
  if (n <= 6) {
    for (auto const &perm : all_permutations(n)) {
      LinearOrder q = LinearOrder::from_permutation(perm);
      if (contains(q, relation))
        out.push_back(std::move(q));
    }
    return out;
  }

  // Repeated source selection, smallest source first, yields every linear
  // extension in lexicographic order.
  std::vector<int> indegree(static_cast<std::size_t>(n), 0);
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      if (relation.has_edge(x, y))
        ++indegree[static_cast<std::size_t>(y - 1)];
  std::vector<bool> placed(static_cast<std::size_t>(n), false);
  std::vector<int> ranking;
  std::function<void()> extend = [&]() {
    if (static_cast<int>(ranking.size()) == n) {
      out.emplace_back(ranking);
      return;
    }
    for (int x = 1; x <= n; ++x) {
      auto ux = static_cast<std::size_t>(x - 1);
      if (placed[ux] || indegree[ux] != 0)
        continue;
      placed[ux] = true;
      ranking.push_back(x);
      for (int y = 1; y <= n; ++y)
        if (relation.has_edge(x, y))
          --indegree[static_cast<std::size_t>(y - 1)];
      extend();
      for (int y = 1; y <= n; ++y)
        if (relation.has_edge(x, y))
          ++indegree[static_cast<std::size_t>(y - 1)];
      ranking.pop_back();
      placed[ux] = false;
    }
  };
  extend();
  return out;
}

std::vector<LinearOrder> consistent_orders(Profile const &p, int nu) {
  return consistent_orders(sigma(p, nu));
}

int nu_min(SupportCounts const &counts) {
  for (int nu = min_threshold(counts.h()); nu <= counts.h(); ++nu)
    if (is_acyclic(MajorityRelation(counts, nu)))
      return nu;
  throw std::logic_error("Sigma_h is always acyclic");
}

int nu_min(Profile const &p) { return nu_min(SupportCounts(p)); }

SimpleMajorityRelation simple_majority(Profile const &p) {
  SupportCounts counts(p);
  int n = p.n();
  int h = p.h();
  SimpleMajorityRelation out;
  auto related = [&](int x, int y) { return x != y && 2 * counts(x, y) >= h; };
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      if (related(x, y))
        out.pairs.emplace_back(x, y);

  bool linear = true;
  for (int x = 1; x <= n && linear; ++x)
    for (int y = 1; y <= n && linear; ++y) {
      if (x == y)
        continue;
      if (related(x, y) && related(y, x))
        linear = false;
      for (int z = 1; z <= n && linear; ++z)
        if (z != x && related(x, y) && related(y, z) && !related(x, z))
          linear = false;
    }
  out.is_linear = linear;
  if (linear) {
    std::vector<int> ranking(static_cast<std::size_t>(n));
    for (int x = 1; x <= n; ++x) {
      int beaten_by = 0;
      for (int y = 1; y <= n; ++y)
        if (related(y, x))
          ++beaten_by;
      ranking[static_cast<std::size_t>(beaten_by)] = x;
    }
    out.order = LinearOrder(std::move(ranking));
  }
  return out;
}

} // namespace symmaj
