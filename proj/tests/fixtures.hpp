#ifndef SYMMAJ_TESTS_FIXTURES_HPP
#define SYMMAJ_TESTS_FIXTURES_HPP

#include "symmaj/groups.hpp"
#include "symmaj/perm.hpp"
#include "symmaj/prefs.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace fixtures {

using namespace symmaj;

// Rows are ranks, separated by ';'. "3 1 2;2 2 1;1 3 3" has first column [3,2,1].
inline Profile matrix(std::string const &text) {
  std::vector<std::vector<int>> rows;
  std::stringstream lines(text);
  std::string line;
  while (std::getline(lines, line, ';')) {
    std::istringstream in(line);
    std::vector<int> row;
    int x = 0;
    while (in >> x)
      row.push_back(x);
    rows.push_back(row);
  }
  return Profile::from_rows(rows);
}

// "123 321" -> {[1,2,3], [3,2,1]}, sorted. "L" is every order of {1,2,3};
// "-" is the empty set.
inline std::vector<LinearOrder> orders(std::string const &text) {
  std::vector<LinearOrder> out;
  if (text == "-")
    return out;
  if (text == "L") {
    for (auto const &p : all_permutations(3))
      out.push_back(LinearOrder::from_permutation(p));
    return out;
  }
  std::istringstream in(text);
  std::string word;
  while (in >> word) {
    std::vector<int> ranking;
    for (char c : word)
      ranking.push_back(c - '0');
    out.emplace_back(ranking);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline LinearOrder order(std::string const &word) { return orders(word).front(); }

struct SmallRow {
  char const *profile;
  char const *c2;
  char const *c3;
  char const *s1;
  char const *s2;
};

// h = n = 3, committees {1,2}|{3}, all alternatives in one class, reversal.
inline std::vector<SmallRow> const &committee_table() {
  static std::vector<SmallRow> const rows{
      {"1 1 1;2 2 2;3 3 3", "123", "123", "123 321", "123"},
      {"3 3 1;2 2 2;1 1 3", "321", "L", "123 321", "321"},
      {"3 3 1;1 1 2;2 2 3", "312", "123 132 312", "L", "312"},
      {"1 1 1;3 3 2;2 2 3", "132", "123 132", "L", "132"},
      {"1 3 1;2 2 2;3 1 3", "123", "L", "123 321", "123"},
      {"2 3 1;3 1 2;1 2 3", "-", "L", "123 321", "123 321"},
      {"2 1 1;1 3 2;3 2 3", "123", "123 213 132", "123 321", "123"},
      {"1 2 1;2 1 2;3 3 3", "123", "123 213", "L", "123"},
      {"1 2 1;2 3 2;3 1 3", "123", "123 213 231", "L", "123"},
      {"3 3 1;2 1 2;1 2 3", "312", "L", "L", "312"},
      {"3 1 1;2 3 2;1 2 3", "132", "L", "L", "132"},
      {"2 1 1;3 3 2;1 2 3", "123", "L", "L", "123"},
      {"2 2 1;3 1 2;1 3 3", "213", "123 213 231", "L", "213"},
  };
  return rows;
}

inline SubgroupSpec committee_spec() {
  return SubgroupSpec::partition_product(Partition::parse("1,2|3", 3),
                                         Partition::parse("1,2,3", 3), true);
}

struct FiveRow {
  char const *profile;
  char const *c3;
  char const *c4;
  char const *c5;
  char const *s1;
  char const *s2;
};

// h = 5, n = 3, the full group with reversal.
inline std::vector<FiveRow> const &five_table() {
  static std::vector<FiveRow> const rows{
      {"1 1 1 1 1;2 2 2 2 2;3 3 3 3 3", "123", "123", "123", "123 321", "123"},
      {"1 1 1 1 2;2 2 2 2 1;3 3 3 3 3", "123", "123", "123 213", "L", "123"},
      {"1 1 1 1 3;2 2 2 2 2;3 3 3 3 1", "123", "123", "L", "123 321", "123"},
      {"1 1 1 1 2;2 2 2 2 3;3 3 3 3 1", "123", "123", "123 213 231", "L", "123"},
      {"1 1 1 2 2;2 2 2 1 1;3 3 3 3 3", "123", "123 213", "123 213", "L", "123"},
      {"1 1 1 3 3;2 2 2 2 2;3 3 3 1 1", "123", "L", "L", "123 321", "123"},
      {"1 1 1 2 2;2 2 2 3 3;3 3 3 1 1", "123", "123 213 231", "123 213 231", "L", "123"},
      {"1 1 1 2 3;2 2 2 1 2;3 3 3 3 1", "123", "123 213", "L", "L", "123"},
      {"1 1 1 2 1;2 2 2 1 3;3 3 3 3 2", "123", "123", "123 132 213", "123 321", "123"},
      {"1 1 1 2 2;2 2 2 1 3;3 3 3 3 1", "123", "123 213", "123 213 231", "L", "123"},
      {"1 1 1 2 3;2 2 2 1 1;3 3 3 3 2", "123", "123", "L", "L", "123"},
      {"1 1 1 3 2;2 2 2 2 3;3 3 3 1 1", "123", "123 213 231", "L", "L", "123"},
      {"1 1 1 2 3;2 2 2 3 1;3 3 3 1 2", "123", "123", "L", "123 321", "123"},
      {"1 1 2 2 3;2 2 1 1 2;3 3 3 3 1", "213", "123 213", "L", "L", "213"},
      {"1 1 2 2 1;2 2 1 1 3;3 3 3 3 2", "123", "123 213", "123 132 213", "L", "123"},
      {"1 1 3 3 2;2 2 2 2 1;3 3 1 1 3", "213", "L", "L", "L", "213"},
      {"1 1 2 2 2;2 2 3 3 1;3 3 1 1 3", "213", "123 213 231", "123 213 231", "213 312", "213"},
      {"1 1 2 2 3;2 2 3 3 2;3 3 1 1 1", "231", "123 213 231", "L", "L", "231"},
      {"1 1 3 3 2;2 2 1 1 3;3 3 2 2 1", "-", "123 132 312", "L", "132 231", "132"},
      {"1 1 2 3 1;2 2 1 2 3;3 3 3 1 2", "123", "123 132 213", "L", "123 321", "123"},
      {"1 1 2 3 2;2 2 1 2 3;3 3 3 1 1", "213", "123 213 231", "L", "L", "213"},
      {"1 1 2 3 3;2 2 1 2 1;3 3 3 1 2", "123", "L", "L", "L", "123"},
      {"1 1 2 1 2;2 2 1 3 3;3 3 3 2 1", "123", "123 213", "L", "L", "123"},
      {"1 1 2 2 3;2 2 1 3 1;3 3 3 1 2", "123", "123 213 231", "L", "L", "123"},
      {"1 1 3 2 3;2 2 2 3 1;3 3 1 1 2", "-", "L", "L", "123 321", "123 321"},
      {"1 2 3 1 2;2 1 2 3 3;3 3 1 2 1", "213", "L", "L", "213 312", "213"},
  };
  return rows;
}

// The nine-voter profile used for support counts and thresholds.
inline Profile nine_voter_profile() {
  return matrix("1 1 2 2 2 3 3 3 3;2 2 1 3 3 1 1 1 2;3 3 3 1 1 2 2 2 1");
}

inline Permutation random_permutation(int degree, std::mt19937 &rng) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

inline LinearOrder random_order(int n, std::mt19937 &rng) {
  return LinearOrder::from_permutation(random_permutation(n, rng));
}

inline Profile random_profile(int h, int n, std::mt19937 &rng) {
  std::vector<LinearOrder> columns;
  for (int i = 0; i < h; ++i)
    columns.push_back(random_order(n, rng));
  return Profile(columns);
}

inline GroupElement random_element(int h, int n, std::mt19937 &rng) {
  return {random_permutation(h, rng), random_permutation(n, rng),
          rng() % 2 == 0 ? Rho::identity : Rho::reversal};
}

// Every partition of {1..k}, blocks in restricted-growth order.
inline std::vector<Partition> all_partitions(int k) {
  std::vector<Partition> out;
  std::vector<int> label(static_cast<std::size_t>(k), 0);
  auto emit = [&]() {
    int blocks = *std::max_element(label.begin(), label.end()) + 1;
    std::vector<std::vector<int>> parts(static_cast<std::size_t>(blocks));
    for (int x = 1; x <= k; ++x)
      parts[static_cast<std::size_t>(label[static_cast<std::size_t>(x - 1)])].push_back(x);
    out.emplace_back(k, parts);
  };
  std::function<void(int, int)> go = [&](int pos, int used) {
    if (pos == k) {
      emit();
      return;
    }
    for (int b = 0; b <= used && b < k; ++b) {
      label[static_cast<std::size_t>(pos)] = b;
      go(pos + 1, std::max(used, b + 1));
    }
  };
  label[0] = 0;
  go(1, 1);
  return out;
}

} // namespace fixtures

#endif // SYMMAJ_TESTS_FIXTURES_HPP
