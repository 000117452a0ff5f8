#include "symmaj/prefs.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace symmaj {

LinearOrder::LinearOrder(std::vector<int> ranking) : ranking_(std::move(ranking)) {
  int n = size();
  if (n < 1)
    throw std::invalid_argument("a linear order needs at least one alternative");
  rank_.assign(static_cast<std::size_t>(n), 0);
  for (int r = 1; r <= n; ++r) {
    int x = ranking_[static_cast<std::size_t>(r - 1)];
    if (x < 1 || x > n || rank_[static_cast<std::size_t>(x - 1)] != 0)
      throw std::invalid_argument("ranking is not a permutation of {1.." +
                                  std::to_string(n) + "}");
    rank_[static_cast<std::size_t>(x - 1)] = r;
  }
}

LinearOrder LinearOrder::identity(int n) {
  std::vector<int> ranking(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(ranking.begin(), ranking.end(), 1);
  return LinearOrder(std::move(ranking));
}

LinearOrder LinearOrder::from_permutation(Permutation const &rank_to_alternative) {
  auto images = rank_to_alternative.images();
  return LinearOrder(std::vector<int>(images.begin(), images.end()));
}

LinearOrder LinearOrder::parse(std::string_view text) {
  std::string body(text);
  std::replace(body.begin(), body.end(), ',', ' ');
  std::replace(body.begin(), body.end(), '[', ' ');
  std::replace(body.begin(), body.end(), ']', ' ');
  std::istringstream in(body);
  std::vector<int> ranking;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (std::exception const &) {
      used = 0;
    }
    if (used != token.size())
      throw std::invalid_argument("bad alternative '" + token + "' in ranking");
    ranking.push_back(value);
  }
  return LinearOrder(std::move(ranking));
}

std::string LinearOrder::to_column() const {
  std::string out;
  for (std::size_t r = 0; r < ranking_.size(); ++r) {
    if (r > 0)
      out += ',';
    out += std::to_string(ranking_[r]);
  }
  return out;
}

std::string LinearOrder::to_string() const { return "[" + to_column() + "]"; }

LinearOrder left_mul(Permutation const &psi, LinearOrder const &q) {
  if (psi.degree() != q.size())
    throw std::invalid_argument("psi has degree " + std::to_string(psi.degree()) +
                                " but the order ranks " + std::to_string(q.size()) +
                                " alternatives");
  std::vector<int> ranking(static_cast<std::size_t>(q.size()));
  for (int r = 1; r <= q.size(); ++r)
    ranking[static_cast<std::size_t>(r - 1)] = psi(q.at_rank(r));
  return LinearOrder(std::move(ranking));
}

LinearOrder right_mul(LinearOrder const &q, Rho rho) {
  if (rho == Rho::identity)
    return q;
  auto ranking = q.ranking();
  return LinearOrder(std::vector<int>(ranking.rbegin(), ranking.rend()));
}

bool prefers(LinearOrder const &q, int x, int y) {
  if (x < 1 || x > q.size() || y < 1 || y > q.size())
    throw std::invalid_argument("alternative outside {1.." + std::to_string(q.size()) +
                                "}");
  return q.rank_of(x) < q.rank_of(y);
}

Profile::Profile(std::vector<LinearOrder> columns) : columns_(std::move(columns)) {
  if (columns_.size() < 2)
    throw std::invalid_argument("a profile needs at least two individuals");
  int n = columns_.front().size();
  if (n < 2)
    throw std::invalid_argument("a profile needs at least two alternatives");
  for (auto const &column : columns_)
    if (column.size() != n)
      throw std::invalid_argument("profile columns rank different numbers of "
                                  "alternatives");
}

Profile Profile::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<LinearOrder> columns;
  std::string token;
  while (in >> token)
    columns.push_back(LinearOrder::parse(token));
  return Profile(std::move(columns));
}

Profile Profile::from_rows(std::vector<std::vector<int>> const &rows) {
  if (rows.empty())
    throw std::invalid_argument("empty profile matrix");
  std::size_t h = rows.front().size();
  std::vector<LinearOrder> columns;
  for (std::size_t i = 0; i < h; ++i) {
    std::vector<int> ranking;
    for (auto const &row : rows) {
      if (row.size() != h)
        throw std::invalid_argument("ragged profile matrix");
      ranking.push_back(row[i]);
    }
    columns.emplace_back(std::move(ranking));
  }
  return Profile(std::move(columns));
}

std::string Profile::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (i > 0)
      out += ' ';
    out += columns_[i].to_column();
  }
  return out;
}

std::string Profile::to_matrix() const {
  std::string out;
  for (int r = 1; r <= n(); ++r) {
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      if (i > 0)
        out += ' ';
      out += std::to_string(columns_[i].at_rank(r));
    }
    out += '\n';
  }
  return out;
}

GroupElement GroupElement::identity(int h, int n) {
  return {Permutation(h), Permutation(n), Rho::identity};
}

GroupElement GroupElement::inverse() const { return {phi.inverse(), psi.inverse(), rho}; }

std::string GroupElement::to_string() const {
  return "(" + phi.to_string() + ", " + psi.to_string() + ", " +
         (rho == Rho::reversal ? "rho0" : "id") + ")";
}

GroupElement operator*(GroupElement const &a, GroupElement const &b) {
  return {a.phi * b.phi, a.psi * b.psi, a.rho * b.rho};
}

Profile act(Profile const &p, GroupElement const &g) {
  if (g.h() != p.h() || g.n() != p.n())
    throw std::invalid_argument("group element acts on (h, n) = (" +
                                std::to_string(g.h()) + ", " + std::to_string(g.n()) +
                                ") but the profile has (" + std::to_string(p.h()) +
                                ", " + std::to_string(p.n()) + ")");
  Permutation phi_inv = g.phi.inverse();
  std::vector<LinearOrder> columns;
  columns.reserve(static_cast<std::size_t>(p.h()));
  for (int i = 1; i <= p.h(); ++i)
    columns.push_back(left_mul(g.psi, right_mul(p[phi_inv(i)], g.rho)));
  return Profile(std::move(columns));
}

} // namespace symmaj
