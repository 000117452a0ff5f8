#include "symmaj/serialize.hpp"

#include "symmaj/majority.hpp"

#include <algorithm>

namespace symmaj {

namespace {

constexpr char const *kRuleFormat = "symmaj-rule";
constexpr int kRuleVersion = 1;

Json element_to_json(GroupElement const &g) {
  return {{"phi", g.phi.to_string()},
          {"psi", g.psi.to_string()},
          {"rho", g.reverses() ? "rho0" : "id"}};
}

GroupElement element_from_json(Json const &doc, int h, int n) {
  std::string rho = doc.at("rho").get<std::string>();
  if (rho != "id" && rho != "rho0")
    throw ValidationError("rho must be \"id\" or \"rho0\", got \"" + rho + "\"");
  return {Permutation::parse(doc.at("phi").get<std::string>(), h),
          Permutation::parse(doc.at("psi").get<std::string>(), n),
          rho == "rho0" ? Rho::reversal : Rho::identity};
}

Json orders_to_json(std::vector<LinearOrder> const &orders) {
  Json out = Json::array();
  for (auto const &q : orders)
    out.push_back(q.to_column());
  return out;
}

BigInt factorial_power(int n, int h) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i)
    f *= i;
  BigInt total = 1;
  for (int i = 0; i < h; ++i)
    total *= f;
  return total;
}

} // namespace

Json spec_to_json(SubgroupSpec const &spec) {
  Json out{{"h", spec.h}, {"n", spec.n}};
  if (auto const *pp = std::get_if<PartitionProduct>(&spec.variant)) {
    out["kind"] = "partition_product";
    out["committees"] = pp->committees.to_string();
    out["classes"] = pp->classes.to_string();
    out["with_reversal"] = pp->with_reversal;
  } else if (auto const *full = std::get_if<FullTriple>(&spec.variant)) {
    out["kind"] = "full_triple";
    out["anonymous"] = full->anonymous;
    out["neutral"] = full->neutral;
    out["with_reversal"] = full->with_reversal;
  } else {
    out["kind"] = "generated";
    Json gens = Json::array();
    for (auto const &g : std::get<Generated>(spec.variant).generators)
      gens.push_back(element_to_json(g));
    out["generators"] = gens;
  }
  return out;
}

SubgroupSpec spec_from_json(Json const &doc) {
  int h = doc.at("h").get<int>();
  int n = doc.at("n").get<int>();
  std::string kind = doc.at("kind").get<std::string>();
  if (kind == "partition_product")
    return SubgroupSpec::partition_product(
        Partition::parse(doc.at("committees").get<std::string>(), h),
        Partition::parse(doc.at("classes").get<std::string>(), n),
        doc.at("with_reversal").get<bool>());
  if (kind == "full_triple")
    return SubgroupSpec::full_triple(h, n, doc.at("anonymous").get<bool>(),
                                     doc.at("neutral").get<bool>(),
                                     doc.at("with_reversal").get<bool>());
  if (kind == "generated") {
    std::vector<GroupElement> gens;
    for (auto const &g : doc.at("generators"))
      gens.push_back(element_from_json(g, h, n));
    return SubgroupSpec::generated(h, n, std::move(gens));
  }
  throw ValidationError("unknown subgroup kind \"" + kind + "\"");
}

Json orbit_report_to_json(Group const &u, OrbitReport const &report) {
  Json orbits = Json::array();
  for (std::size_t j = 0; j < report.r_u(); ++j)
    orbits.push_back({{"representative", report.representatives[j].to_string()},
                      {"orbit_size", report.orbit_sizes[j]},
                      {"stabilizer_order", report.stabilizer_orders[j]}});
  return {{"subgroup", spec_to_json(u.spec())},
          {"group_order", u.order()},
          {"r_u", report.r_u()},
          {"orbits", orbits}};
}

Json count_to_json(Group const &u, CountReport const &report) {
  Json per_orbit = Json::array();
  for (auto const &[a, b] : report.per_orbit)
    per_orbit.push_back({{"s1", a}, {"s2", b}});
  Json out{{"subgroup", spec_to_json(u.spec())},
           {"group_order", u.order()},
           {"r_u", report.r_u},
           {"count_symmetric", report.count_symmetric.str()},
           {"count_symmetric_factored", factored(report.count_symmetric)},
           {"count_min", report.count_min.str()},
           {"count_min_factored", factored(report.count_min)},
           {"per_orbit", per_orbit}};
  if (report.first_empty_s2)
    out["first_empty_s2"] = *report.first_empty_s2 + 1;
  return out;
}

Json rule_to_json(RuleTable const &rule, bool with_options) {
  Json entries = Json::array();
  for (auto const &e : rule.entries()) {
    Json entry{{"representative", e.representative.to_string()},
               {"choice", e.choice.to_column()}};
    if (with_options)
      entry["options"] = orders_to_json(e.options);
    entries.push_back(entry);
  }
  return {{"format", kRuleFormat},
          {"version", kRuleVersion},
          {"h", rule.group().h()},
          {"n", rule.group().n()},
          {"subgroup", spec_to_json(rule.group().spec())},
          {"minimal", rule.minimal()},
          {"entries", entries},
          {"counts",
           {{"r_u", rule.r_u()},
            {"count_symmetric", rule.count_symmetric().str()},
            {"count_min", rule.count_min().str()}}}};
}

RuleTable rule_from_json(Json const &doc, std::uint64_t element_cap) {
  try {
    if (doc.at("format").get<std::string>() != kRuleFormat ||
        doc.at("version").get<int>() != kRuleVersion)
      throw ValidationError("not a version 1 rule document");
    SubgroupSpec spec = spec_from_json(doc.at("subgroup"));
    if (doc.at("h").get<int>() != spec.h || doc.at("n").get<int>() != spec.n)
      throw ValidationError("h, n disagree with the subgroup description");
    auto group = std::make_shared<Group const>(spec, element_cap);
    bool minimal = doc.at("minimal").get<bool>();

    std::vector<RuleEntry> entries;
    BigInt covered = 0;
    BigInt count_symmetric = 1;
    BigInt count_min = 1;
    std::size_t j = 0;
    for (auto const &item : doc.at("entries")) {
      ++j;
      std::string where = "entry " + std::to_string(j);
      Profile rep = Profile::parse(item.at("representative").get<std::string>());
      LinearOrder choice = LinearOrder::parse(item.at("choice").get<std::string>());
      if (rep.h() != spec.h || rep.n() != spec.n || choice.size() != spec.n)
        throw ValidationError(where + ": dimensions do not match the subgroup");
      if (canonical_form(*group, rep).representative != rep)
        throw ValidationError(where + ": " + rep.to_string() +
                              " is not the canonical representative of its orbit");
      auto stab = stabilizer(*group, rep);
      covered += group->order() / stab.size();
      auto allowed1 = s1(stab, spec.n);
      auto consistent = consistent_orders(rep, nu_min(rep));
      std::vector<LinearOrder> allowed2;
      for (auto const &q : allowed1)
        if (std::binary_search(consistent.begin(), consistent.end(), q))
          allowed2.push_back(q);
      count_symmetric *= allowed1.size();
      count_min *= allowed2.size();
      auto const &allowed = minimal ? allowed2 : allowed1;
      if (!std::binary_search(allowed.begin(), allowed.end(), choice))
        throw ValidationError(where + " (representative " + rep.to_string() + "): choice " +
                              choice.to_string() + " is not admissible");
      entries.push_back({std::move(rep), std::move(choice), allowed});
    }
    if (covered != factorial_power(spec.n, spec.h))
      throw ValidationError("orbit sizes sum to " + covered.str() + ", expected (n!)^h = " +
                            factorial_power(spec.n, spec.h).str());
    auto const &counts = doc.at("counts");
    if (counts.at("r_u").get<std::size_t>() != entries.size() ||
        counts.at("count_symmetric").get<std::string>() != count_symmetric.str() ||
        counts.at("count_min").get<std::string>() != count_min.str())
      throw ValidationError("stored counts do not match the recomputed ones");
    // RuleTable rejects repeated representatives, so with the coverage check
    // above every orbit appears exactly once.
    return RuleTable(group, std::move(entries), minimal, count_symmetric, count_min);
  } catch (Json::exception const &e) {
    throw ValidationError(std::string("malformed rule document: ") + e.what());
  }
}

std::string dump(Json const &doc) { return doc.dump(2) + "\n"; }

} // namespace symmaj
