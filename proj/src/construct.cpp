#include "symmaj/construct.hpp"

#include <algorithm>

namespace symmaj {

namespace {

std::string describe_failure(RegularityVerdict const &verdict) {
  std::string out = "subgroup is not regular";
  if (verdict.witness)
    out += ": " + verdict.witness->to_string();
  if (verdict.violated_condition)
    out += " violates condition " + to_string(*verdict.violated_condition);
  return out;
}

bool contains_point(std::vector<int> const &sorted, int x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

} // namespace

NotRegularError::NotRegularError(RegularityVerdict verdict)
    : std::runtime_error(describe_failure(verdict)), verdict_(std::move(verdict)) {}

ChainRelation::ChainRelation(MajorityRelation base) : base_(std::move(base)) {
  int n = base_.n();
  closure_.assign(static_cast<std::size_t>(n * n), false);
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      closure_[static_cast<std::size_t>((x - 1) * n + (y - 1))] = base_.has_edge(x, y);
  for (int k = 1; k <= n; ++k)
    for (int x = 1; x <= n; ++x)
      if (reaches(x, k))
        for (int y = 1; y <= n; ++y)
          if (reaches(k, y))
            closure_[static_cast<std::size_t>((x - 1) * n + (y - 1))] = true;
}

std::vector<Edge> ChainRelation::pairs() const {
  std::vector<Edge> out;
  for (int x = 1; x <= n(); ++x)
    for (int y = 1; y <= n(); ++y)
      if (reaches(x, y))
        out.emplace_back(x, y);
  return out;
}

ChainRelation chain_closure(MajorityRelation base) {
  if (!is_acyclic(base))
    throw std::invalid_argument("Sigma_" + std::to_string(base.threshold()) +
                                " has a cycle; chains need an acyclic relation");
  return ChainRelation(std::move(base));
}

ChainRelation chain_closure(Profile const &p, int nu) { return chain_closure(sigma(p, nu)); }

GammaDecomposition gamma_decomposition(Profile const &p, Permutation const &psi, int nu) {
  int n = p.n();
  if (psi.degree() != n || !is_conjugate(psi, rho0(n)))
    throw std::invalid_argument("psi = " + psi.to_string() + " is not conjugate to rho0");
  ChainRelation chains = chain_closure(p, nu);
  MajorityRelation const &relation = chains.base();

  GammaDecomposition d{psi, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}};
  OrbitPartition parts = orbits(psi);
  d.psi_orbits = parts.orbits;
  d.representatives = parts.representatives;

  for (int x = 1; x <= n; ++x)
    for (int z = 1; z <= n; ++z)
      if (chains.reaches(x, z) && chains.reaches(x, psi(z))) {
        d.gamma.push_back(x);
        break;
      }

  d.y.assign(d.psi_orbits.size(), 0);
  for (std::size_t j = 0; j < d.psi_orbits.size(); ++j) {
    auto const &orbit = d.psi_orbits[j];
    if (orbit.size() == 1) {
      d.fixed_point = orbit.front();
      continue;
    }
    bool first = contains_point(d.gamma, orbit[0]);
    bool second = contains_point(d.gamma, orbit[1]);
    if (first && second)
      throw std::logic_error("a psi-orbit lies inside Gamma");
    if (first || second) {
      d.J.push_back(j);
      d.y[j] = first ? orbit[0] : orbit[1];
      d.T_set.push_back(d.y[j]);
    } else {
      d.J_star.push_back(j);
      d.T_set.push_back(orbit[0]);
      d.T_set.push_back(orbit[1]);
    }
  }
  std::sort(d.T_set.begin(), d.T_set.end());

  // f: lexicographically smallest ranking of T_set extending Sigma_nu on T.
  std::vector<int> remaining = d.T_set;
  while (!remaining.empty()) {
    auto source = std::find_if(remaining.begin(), remaining.end(), [&](int x) {
      return std::none_of(remaining.begin(), remaining.end(),
                          [&](int w) { return relation.has_edge(w, x); });
    });
    if (source == remaining.end())
      throw std::logic_error("Sigma_nu restricted to T has a cycle");
    d.f.push_back(*source);
    remaining.erase(source);
  }
  auto f_rank = [&](int x) {
    return std::find(d.f.begin(), d.f.end(), x) - d.f.begin();
  };

  for (std::size_t j : d.J_star) {
    auto const &orbit = d.psi_orbits[j];
    d.y[j] = f_rank(orbit[0]) < f_rank(orbit[1]) ? orbit[0] : orbit[1];
  }
  for (int x : d.f) {
    bool chosen = std::find(d.y.begin(), d.y.end(), x) != d.y.end();
    if (chosen)
      d.M.push_back(x);
  }
  if (static_cast<int>(d.M.size()) != n / 2)
    throw std::logic_error("M does not have floor(n/2) elements");
  return d;
}

LinearOrder assemble(GammaDecomposition const &d) {
  std::vector<int> ranking = d.M;
  if (d.fixed_point)
    ranking.push_back(*d.fixed_point);
  for (auto it = d.M.rbegin(); it != d.M.rend(); ++it)
    ranking.push_back(d.psi(*it));
  return LinearOrder(std::move(ranking));
}

LinearOrder witness_for_stabilizer(std::vector<GroupElement> const &stab, Profile const &p) {
  SupportCounts counts(p);
  int nu = nu_min(counts);
  MajorityRelation relation(counts, nu);

  std::optional<Permutation> psi;
  for (auto const &g : stab) {
    if (!g.reverses()) {
      if (!g.psi.is_identity())
        throw NotRegularError({false, g, violates(g)});
      continue;
    }
    if (!psi) {
      if (!is_conjugate(g.psi, rho0(p.n())))
        throw NotRegularError({false, g, violates(g)});
      psi = g.psi;
    } else if (*psi != g.psi) {
      throw NotRegularError({false, g, violates(g)});
    }
  }

  if (!psi)
    return *lexmin_consistent(relation);

  GammaDecomposition d = gamma_decomposition(p, *psi, nu);
  for (int x : d.M)
    for (int y : d.M)
      if (relation.has_edge((*psi)(x), y))
        throw std::logic_error("psi(" + std::to_string(x) + ") beats " + std::to_string(y) +
                               " although both lie in M");
  return assemble(d);
}

LinearOrder build_witness(Group const &u, Profile const &p) {
  RegularityVerdict verdict = is_regular(u);
  if (!verdict.regular)
    throw NotRegularError(verdict);
  return witness_for_stabilizer(stabilizer(u, p), p);
}

RuleTable build_min_rule(std::shared_ptr<Group const> u, std::uint64_t profile_cap) {
  RegularityVerdict verdict = is_regular(*u);
  if (!verdict.regular)
    throw NotRegularError(verdict);
  auto orbits = orbit_choices(*u, orbit_report(*u, profile_cap));
  std::vector<LinearOrder> choices;
  choices.reserve(orbits.size());
  for (auto const &row : orbits)
    choices.push_back(witness_for_stabilizer(stabilizer(*u, row.representative),
                                             row.representative));
  return build_rule(std::move(u), orbits, choices, true);
}

} // namespace symmaj
