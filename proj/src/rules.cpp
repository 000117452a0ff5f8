#include "symmaj/rules.hpp"

#include "symmaj/majority.hpp"

#include <algorithm>

namespace symmaj {

namespace {

bool member(std::vector<LinearOrder> const &sorted, LinearOrder const &q) {
  return std::binary_search(sorted.begin(), sorted.end(), q);
}

std::string order_list(std::vector<LinearOrder> const &orders) {
  std::string out = "{";
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i > 0)
      out += ", ";
    out += orders[i].to_string();
  }
  return out + "}";
}

} // namespace

std::vector<LinearOrder> s1(std::vector<GroupElement> const &stab, int n) {
  std::vector<LinearOrder> out;
  for (auto const &perm : all_permutations(n)) {
    LinearOrder q = LinearOrder::from_permutation(perm);
    bool fixed = std::all_of(stab.begin(), stab.end(), [&](GroupElement const &g) {
      return left_mul(g.psi, right_mul(q, g.rho)) == q;
    });
    if (fixed)
      out.push_back(std::move(q));
  }
  return out;
}

std::vector<LinearOrder> s1(Group const &u, Profile const &p) {
  return s1(stabilizer(u, p), u.n());
}

std::vector<LinearOrder> s2(Group const &u, Profile const &p) {
  SupportCounts counts(p);
  MajorityRelation relation(counts, nu_min(counts));
  std::vector<LinearOrder> out;
  for (auto &q : s1(u, p))
    if (contains(q, relation))
      out.push_back(std::move(q));
  return out;
}

std::vector<OrbitChoices> orbit_choices(Group const &u, OrbitReport const &orbits) {
  std::vector<OrbitChoices> out;
  out.reserve(orbits.r_u());
  for (std::size_t j = 0; j < orbits.r_u(); ++j) {
    Profile const &p = orbits.representatives[j];
    SupportCounts counts(p);
    int nu = nu_min(counts);
    MajorityRelation relation(counts, nu);
    OrbitChoices row{p, orbits.orbit_sizes[j], orbits.stabilizer_orders[j], nu,
                     consistent_orders(relation), s1(u, p), {}};
    for (auto const &q : row.s1)
      if (member(row.consistent, q))
        row.s2.push_back(q);
    out.push_back(std::move(row));
  }
  return out;
}

CountReport summarize(std::vector<OrbitChoices> const &choices) {
  CountReport report;
  report.r_u = choices.size();
  report.count_symmetric = 1;
  report.count_min = 1;
  for (std::size_t j = 0; j < choices.size(); ++j) {
    std::size_t a = choices[j].s1.size();
    std::size_t b = choices[j].s2.size();
    report.per_orbit.emplace_back(a, b);
    report.count_symmetric *= a;
    report.count_min *= b;
    if (b == 0 && !report.first_empty_s2)
      report.first_empty_s2 = j;
  }
  return report;
}

CountReport count(Group const &u, std::uint64_t profile_cap) {
  return summarize(orbit_choices(u, orbit_report(u, profile_cap)));
}

std::string factored(BigInt const &value) {
  if (value <= 1)
    return value.str();
  BigInt rest = value;
  std::string out;
  auto emit = [&](std::string const &base, unsigned exponent) {
    if (!out.empty())
      out += "·";
    out += base;
    if (exponent > 1)
      out += "^" + std::to_string(exponent);
  };
  for (unsigned p = 2; p < 1'000'000 && BigInt(p) * p <= rest; ++p) {
    unsigned exponent = 0;
    while (rest % p == 0) {
      rest /= p;
      ++exponent;
    }
    if (exponent > 0)
      emit(std::to_string(p), exponent);
  }
  if (rest > 1)
    emit(rest.str(), 1);
  return out;
}

RuleTable::RuleTable(std::shared_ptr<Group const> group, std::vector<RuleEntry> entries,
                     bool minimal, BigInt count_symmetric, BigInt count_min)
    : group_(std::move(group)), entries_(std::move(entries)), minimal_(minimal),
      count_symmetric_(std::move(count_symmetric)), count_min_(std::move(count_min)) {
  for (std::size_t j = 0; j < entries_.size(); ++j)
    if (!index_.emplace(entries_[j].representative, j).second)
      throw ValidationError("representative " + entries_[j].representative.to_string() +
                            " appears twice");
}

std::optional<std::size_t> RuleTable::index_of(Profile const &representative) const {
  auto it = index_.find(representative);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

RuleTable build_rule(std::shared_ptr<Group const> u, std::vector<OrbitChoices> const &orbits,
                     std::vector<LinearOrder> const &choices, bool minimal) {
  if (choices.size() != orbits.size())
    throw ValidationError("expected " + std::to_string(orbits.size()) + " choices, got " +
                          std::to_string(choices.size()));
  CountReport counts = summarize(orbits);
  std::vector<RuleEntry> entries;
  entries.reserve(orbits.size());
  for (std::size_t j = 0; j < orbits.size(); ++j) {
    auto const &allowed = minimal ? orbits[j].s2 : orbits[j].s1;
    if (!member(allowed, choices[j]))
      throw ValidationError("orbit " + std::to_string(j + 1) + " (representative " +
                            orbits[j].representative.to_string() + "): choice " +
                            choices[j].to_string() + " is not in " +
                            (minimal ? "S2 = " : "S1 = ") + order_list(allowed));
    entries.push_back({orbits[j].representative, choices[j], allowed});
  }
  return RuleTable(std::move(u), std::move(entries), minimal, counts.count_symmetric,
                   counts.count_min);
}

RuleTable build_rule(std::shared_ptr<Group const> u, std::vector<LinearOrder> const &choices,
                     bool minimal, std::uint64_t profile_cap) {
  auto orbits = orbit_choices(*u, orbit_report(*u, profile_cap));
  return build_rule(std::move(u), orbits, choices, minimal);
}

LinearOrder evaluate(RuleTable const &rule, Profile const &p) {
  Group const &u = rule.group();
  if (p.h() != u.h() || p.n() != u.n())
    throw std::invalid_argument("profile has (h, n) = (" + std::to_string(p.h()) + ", " +
                                std::to_string(p.n()) + ") but the rule expects (" +
                                std::to_string(u.h()) + ", " + std::to_string(u.n()) + ")");
  CanonicalForm form = canonical_form(u, p);
  auto index = rule.index_of(form.representative);
  if (!index)
    throw std::logic_error("rule table has no entry for the orbit of " + p.to_string());
  auto const &g = form.transporter;
  return left_mul(g.psi, right_mul(rule.entries()[*index].choice, g.rho));
}

std::vector<RuleTable> enumerate_min_rules(std::shared_ptr<Group const> u, std::uint64_t cap,
                                           std::uint64_t profile_cap) {
  auto orbits = orbit_choices(*u, orbit_report(*u, profile_cap));
  CountReport counts = summarize(orbits);
  if (counts.count_min > cap) {
    std::uint64_t required = counts.count_min > BigInt(UINT64_MAX)
                                 ? UINT64_MAX
                                 : static_cast<std::uint64_t>(counts.count_min);
    throw ResourceError("too many minimal rules to enumerate", required, cap);
  }
  std::vector<RuleTable> out;
  if (counts.count_min == 0)
    return out;

  std::vector<std::size_t> digit(orbits.size(), 0);
  while (true) {
    std::vector<RuleEntry> entries;
    entries.reserve(orbits.size());
    for (std::size_t j = 0; j < orbits.size(); ++j)
      entries.push_back({orbits[j].representative, orbits[j].s2[digit[j]], orbits[j].s2});
    out.emplace_back(u, std::move(entries), true, counts.count_symmetric, counts.count_min);

    std::size_t j = orbits.size();
    while (j > 0) {
      --j;
      if (++digit[j] < orbits[j].s2.size())
        break;
      digit[j] = 0;
      if (j == 0)
        return out;
    }
  }
}

} // namespace symmaj
