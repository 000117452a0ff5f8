#include "symmaj/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace symmaj {

namespace {

void check_degree(int degree) {
  if (degree < 1)
    throw std::invalid_argument("permutation degree must be at least 1");
}

} // namespace

Permutation::Permutation(int degree) {
  check_degree(degree);
  images_.resize(static_cast<std::size_t>(degree));
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  check_degree(degree());
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 1 || x > degree() || seen[static_cast<std::size_t>(x - 1)])
      throw std::invalid_argument("not a permutation of {1.." +
                                  std::to_string(degree()) + "}");
    seen[static_cast<std::size_t>(x - 1)] = true;
  }
}

Permutation Permutation::from_cycles(int degree,
                                     std::vector<std::vector<int>> const &cycles) {
  check_degree(degree);
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 1);
  std::vector<bool> used(static_cast<std::size_t>(degree), false);
  for (auto const &cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int x = cycle[i];
      if (x < 1 || x > degree)
        throw std::invalid_argument("cycle point " + std::to_string(x) +
                                    " outside {1.." + std::to_string(degree) + "}");
      if (used[static_cast<std::size_t>(x - 1)])
        throw std::invalid_argument("cycles are not disjoint at point " +
                                    std::to_string(x));
      used[static_cast<std::size_t>(x - 1)] = true;
      images[static_cast<std::size_t>(x - 1)] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text, int degree) {
  auto first = text.find_first_not_of(" \t\r\n");
  auto last = text.find_last_not_of(" \t\r\n");
  std::string trimmed = first == std::string_view::npos
                            ? std::string()
                            : std::string(text.substr(first, last - first + 1));
  if (trimmed.empty() || trimmed == "id" || trimmed == "()")
    return Permutation(degree);

  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  while (i < trimmed.size()) {
    char c = trimmed[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c != '(')
      throw std::invalid_argument("malformed cycle notation: '" + trimmed + "'");
    auto close = trimmed.find(')', i);
    if (close == std::string::npos)
      throw std::invalid_argument("unbalanced parenthesis in '" + trimmed + "'");
    std::string body = trimmed.substr(i + 1, close - i - 1);
    std::replace(body.begin(), body.end(), ',', ' ');
    std::istringstream in(body);
    std::vector<int> cycle;
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
        throw std::invalid_argument("bad point '" + token + "' in cycle notation");
      cycle.push_back(value);
    }
    if (!cycle.empty())
      cycles.push_back(std::move(cycle));
    i = close + 1;
  }
  return from_cycles(degree, cycles);
}

bool Permutation::is_identity() const {
  for (int x = 1; x <= degree(); ++x)
    if ((*this)(x) != x)
      return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int x = 1; x <= degree(); ++x)
    inv[static_cast<std::size_t>((*this)(x) - 1)] = x;
  return Permutation(std::move(inv));
}

Permutation Permutation::pow(long long exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-exponent)
                                      : static_cast<unsigned long long>(exponent);
  Permutation result(degree());
  while (e > 0) {
    if (e & 1U)
      result = compose(result, base);
    base = compose(base, base);
    e >>= 1U;
  }
  return result;
}

std::string Permutation::to_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (int x = 1; x <= degree(); ++x) {
    if (seen[static_cast<std::size_t>(x - 1)] || (*this)(x) == x)
      continue;
    out += '(';
    int y = x;
    bool first = true;
    do {
      if (!first)
        out += ' ';
      out += std::to_string(y);
      seen[static_cast<std::size_t>(y - 1)] = true;
      y = (*this)(y);
      first = false;
    } while (y != x);
    out += ')';
  }
  return out.empty() ? "id" : out;
}

Permutation compose(Permutation const &a, Permutation const &b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("cannot compose permutations of degree " +
                                std::to_string(a.degree()) + " and " +
                                std::to_string(b.degree()));
  std::vector<int> images(static_cast<std::size_t>(a.degree()));
  for (int x = 1; x <= a.degree(); ++x)
    images[static_cast<std::size_t>(x - 1)] = a(b(x));
  return Permutation(std::move(images));
}

int CycleType::gcd() const {
  int g = 0;
  for (int part : parts)
    g = std::gcd(g, part);
  return g;
}

std::uint64_t CycleType::lcm() const {
  std::uint64_t l = 1;
  for (int part : parts)
    l = std::lcm(l, static_cast<std::uint64_t>(part));
  return l;
}

int CycleType::fixed_points() const {
  return static_cast<int>(std::count(parts.begin(), parts.end(), 1));
}

std::string CycleType::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0)
      out += ',';
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

OrbitPartition orbits(Permutation const &s) {
  OrbitPartition result;
  std::vector<bool> seen(static_cast<std::size_t>(s.degree()), false);
  for (int x = 1; x <= s.degree(); ++x) {
    if (seen[static_cast<std::size_t>(x - 1)])
      continue;
    std::vector<int> orbit;
    int y = x;
    do {
      orbit.push_back(y);
      seen[static_cast<std::size_t>(y - 1)] = true;
      y = s(y);
    } while (y != x);
    result.orbits.push_back(std::move(orbit));
  }
  // Orbits were discovered in increasing order of their smallest point, so a
  // stable sort by size keeps that as the tie-break.
  std::stable_sort(result.orbits.begin(), result.orbits.end(),
                   [](auto const &l, auto const &r) { return l.size() > r.size(); });
  for (auto const &orbit : result.orbits)
    result.representatives.push_back(orbit.front());
  return result;
}

CycleType cycle_type(Permutation const &s) {
  CycleType type;
  for (auto const &orbit : orbits(s).orbits)
    type.parts.push_back(static_cast<int>(orbit.size()));
  return type;
}

std::uint64_t order(Permutation const &s) { return cycle_type(s).lcm(); }

bool is_prime(std::uint64_t value) {
  if (value < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= value; ++d)
    if (value % d == 0)
      return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t value) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t d = 2; d * d <= value; ++d) {
    if (value % d == 0) {
      primes.push_back(d);
      while (value % d == 0)
        value /= d;
    }
  }
  if (value > 1)
    primes.push_back(value);
  return primes;
}

std::uint64_t pi_part(Permutation const &s, std::uint64_t prime) {
  if (!is_prime(prime))
    throw std::invalid_argument(std::to_string(prime) + " is not prime");
  std::uint64_t m = order(s);
  std::uint64_t part = 1;
  while (m % prime == 0) {
    m /= prime;
    part *= prime;
  }
  return part;
}

bool is_conjugate(Permutation const &a, Permutation const &b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("conjugacy test on permutations of different degree");
  return cycle_type(a) == cycle_type(b);
}

Permutation rho0(int n) {
  check_degree(n);
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int r = 1; r <= n; ++r)
    images[static_cast<std::size_t>(r - 1)] = n - r + 1;
  return Permutation(std::move(images));
}

std::vector<Permutation> all_permutations(int degree) {
  check_degree(degree);
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

} // namespace symmaj
