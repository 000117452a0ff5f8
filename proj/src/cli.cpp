#include "symmaj/cli.hpp"

#include "symmaj/construct.hpp"
#include "symmaj/majority.hpp"
#include "symmaj/regularity.hpp"
#include "symmaj/rules.hpp"
#include "symmaj/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>

namespace symmaj {

namespace {

constexpr std::uint64_t kCrossCheckElements = 200'000;

struct Options {
  int h = 0;
  int n = 0;
  std::string committees;
  std::string classes;
  bool reversal = false;
  std::string format = "text";
  std::uint64_t cap = kDefaultProfileCap;
  std::string rule_path;
  std::string profile;
  std::string policy = "first";
  std::string out_path;
};

class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

bool structured(Options const &o) { return o.format == "structured"; }

SubgroupSpec make_spec(Options const &o) {
  if (o.h < 2 || o.n < 2)
    throw UsageError("--h and --n must both be at least 2");
  Partition committees =
      o.committees.empty() ? Partition::whole(o.h) : Partition::parse(o.committees, o.h);
  Partition classes =
      o.classes.empty() ? Partition::whole(o.n) : Partition::parse(o.classes, o.n);
  return SubgroupSpec::partition_product(std::move(committees), std::move(classes),
                                         o.reversal);
}

PartitionProduct const &product(SubgroupSpec const &spec) {
  return std::get<PartitionProduct>(spec.variant);
}

// "G" for the full group with reversal, "U" otherwise.
std::string group_symbol(SubgroupSpec const &spec) {
  auto const &pp = product(spec);
  bool full = pp.committees.blocks().size() == 1 && pp.classes.blocks().size() == 1 &&
              pp.with_reversal;
  return full ? "G" : "U";
}

std::string order_list(std::vector<LinearOrder> const &orders) {
  if (orders.empty())
    return "{}";
  std::string s = "{";
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i > 0)
      s += ' ';
    s += orders[i].to_string();
  }
  return s + "}";
}

Json orders_json(std::vector<LinearOrder> const &orders) {
  Json a = Json::array();
  for (auto const &q : orders)
    a.push_back(q.to_column());
  return a;
}

Json verdict_json(RegularityVerdict const &v) {
  Json out{{"regular", v.regular}};
  if (v.witness)
    out["witness"] = {{"phi", v.witness->phi.to_string()},
                      {"psi", v.witness->psi.to_string()},
                      {"rho", v.witness->reverses() ? "rho0" : "id"}};
  if (v.violated_condition)
    out["violated_condition"] = to_string(*v.violated_condition);
  return out;
}

void print_witness(std::ostream &out, RegularityVerdict const &v) {
  if (v.witness)
    out << "witness: " << v.witness->to_string() << " violates condition "
        << to_string(*v.violated_condition) << "\n";
}

int cmd_regularity(Options const &o, std::ostream &out) {
  SubgroupSpec spec = make_spec(o);
  auto const &pp = product(spec);
  RegularityVerdict verdict = partition_violation(pp.committees, pp.classes, pp.with_reversal);
  std::uint64_t order = product_order(spec);

  std::optional<bool> element_check;
  if (order <= kCrossCheckElements) {
    Group group(spec);
    element_check = is_regular(group).regular;
    if (*element_check != verdict.regular)
      throw std::logic_error("closed-form and element-wise regularity tests disagree");
  }

  if (structured(o)) {
    Json doc = verdict_json(verdict);
    doc["subgroup"] = spec_to_json(spec);
    doc["group_order"] = std::to_string(order);
    doc["gcd_committees"] = pp.committees.gcd_block_sizes();
    doc["max_class"] = pp.classes.max_block_size();
    doc["element_check"] = element_check ? Json(*element_check) : Json(nullptr);
    out << dump(doc);
  } else {
    out << group_symbol(spec) << " = " << spec.describe() << "\n";
    out << "|" << group_symbol(spec) << "| = " << order << "\n";
    out << "committee gcd = " << pp.committees.gcd_block_sizes()
        << ", largest class = " << pp.classes.max_block_size() << "\n";
    out << "regular: " << (verdict.regular ? "yes" : "no") << "\n";
    print_witness(out, verdict);
    if (element_check)
      out << "element-wise check: agrees (" << order << " elements)\n";
    else
      out << "element-wise check: skipped (group too large)\n";
  }
  return verdict.regular ? kExitOk : kExitNotRegular;
}

int cmd_count(Options const &o, std::ostream &out) {
  SubgroupSpec spec = make_spec(o);
  Group group(spec);
  auto orbits = orbit_choices(group, orbit_report(group, o.cap));
  CountReport report = summarize(orbits);
  std::string u = group_symbol(spec);

  if (structured(o)) {
    Json doc = count_to_json(group, report);
    if (report.first_empty_s2)
      doc["first_empty_s2_representative"] =
          orbits[*report.first_empty_s2].representative.to_string();
    out << dump(doc);
    return kExitOk;
  }
  out << "R(" << u << ")=" << report.r_u << ", |F^" << u
      << "|=" << factored(report.count_symmetric) << ", |F_min|="
      << report.count_min.str() << "\n";
  out << "|" << u << "| = " << group.order() << "\n";
  out << "|F^" << u << "| = " << report.count_symmetric.str() << "\n";
  out << "|F_min| = " << report.count_min.str() << "\n";
  if (report.first_empty_s2)
    out << "S2 is empty at orbit " << *report.first_empty_s2 + 1 << " (representative "
        << orbits[*report.first_empty_s2].representative.to_string() << ")\n";
  return kExitOk;
}

int cmd_reps(Options const &o, std::ostream &out) {
  SubgroupSpec spec = make_spec(o);
  Group group(spec);
  auto orbits = orbit_choices(group, orbit_report(group, o.cap));

  if (structured(o)) {
    Json rows = Json::array();
    for (auto const &row : orbits)
      rows.push_back({{"representative", row.representative.to_string()},
                      {"orbit_size", row.orbit_size},
                      {"stabilizer_order", row.stabilizer_order},
                      {"nu", row.nu},
                      {"consistent", orders_json(row.consistent)},
                      {"s1", orders_json(row.s1)},
                      {"s2", orders_json(row.s2)}});
    out << dump({{"subgroup", spec_to_json(spec)},
                 {"group_order", group.order()},
                 {"r_u", orbits.size()},
                 {"orbits", rows}});
    return kExitOk;
  }
  std::size_t width = 0;
  for (auto const &row : orbits)
    width = std::max(width, row.representative.to_string().size());
  out << std::left << std::setw(4) << "#" << std::setw(static_cast<int>(width) + 2)
      << "representative" << std::setw(6) << "size" << std::setw(6) << "stab"
      << std::setw(4) << "nu"
      << "C_nu | S1 | S2\n";
  for (std::size_t j = 0; j < orbits.size(); ++j) {
    auto const &row = orbits[j];
    out << std::left << std::setw(4) << j + 1 << std::setw(static_cast<int>(width) + 2)
        << row.representative.to_string() << std::setw(6) << row.orbit_size << std::setw(6)
        << row.stabilizer_order << std::setw(4) << row.nu << order_list(row.consistent)
        << " | " << order_list(row.s1) << " | " << order_list(row.s2) << "\n";
  }
  return kExitOk;
}

int cmd_build(Options const &o, std::ostream &out, std::ostream &err) {
  SubgroupSpec spec = make_spec(o);
  auto group = std::make_shared<Group const>(spec);
  RegularityVerdict verdict = is_regular(*group);
  if (!verdict.regular) {
    if (structured(o)) {
      Json doc = verdict_json(verdict);
      doc["subgroup"] = spec_to_json(spec);
      out << dump(doc);
    } else {
      err << "no minimal " << group_symbol(spec) << "-symmetric rule exists: "
          << spec.describe() << " is not regular\n";
      print_witness(err, verdict);
    }
    return kExitNotRegular;
  }

  std::optional<RuleTable> rule;
  if (o.policy == "lexmin") {
    auto orbits = orbit_choices(*group, orbit_report(*group, o.cap));
    std::vector<LinearOrder> choices;
    for (auto const &row : orbits)
      choices.push_back(row.s2.front());
    rule = build_rule(group, orbits, choices, true);
  } else {
    rule = build_min_rule(group, o.cap);
  }
  std::string document = dump(rule_to_json(*rule, o.policy == "menu"));

  if (o.out_path.empty()) {
    out << document;
    return kExitOk;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file)
    throw UsageError("cannot write " + o.out_path);
  file << document;
  if (structured(o))
    out << dump({{"path", o.out_path}, {"r_u", rule->r_u()}, {"policy", o.policy}});
  else
    out << "wrote " << rule->r_u() << " entries to " << o.out_path << "\n";
  return kExitOk;
}

int cmd_apply(Options const &o, std::ostream &out) {
  std::ifstream file(o.rule_path, std::ios::binary);
  if (!file)
    throw UsageError("cannot read rule file " + o.rule_path);
  Json doc;
  try {
    doc = Json::parse(file);
  } catch (Json::exception const &e) {
    throw UsageError(std::string("rule file is not valid JSON: ") + e.what());
  }
  RuleTable rule = rule_from_json(doc);
  Profile p = Profile::parse(o.profile);
  if (p.h() != rule.group().h() || p.n() != rule.group().n())
    throw UsageError("profile has h=" + std::to_string(p.h()) + ", n=" +
                     std::to_string(p.n()) + " but the rule expects h=" +
                     std::to_string(rule.group().h()) + ", n=" +
                     std::to_string(rule.group().n()));
  LinearOrder result = evaluate(rule, p);
  if (structured(o))
    out << dump({{"profile", p.to_string()}, {"social_order", result.to_column()}});
  else
    out << result.to_string() << "\n";
  return kExitOk;
}

struct OracleResult {
  std::string name;
  std::string status; // PASS, FAIL, SKIP
  std::string detail;
};

int cmd_verify(Options const &o, std::ostream &out) {
  SubgroupSpec spec = make_spec(o);
  auto group = std::make_shared<Group const>(spec);
  ProfileSpace space(o.h, o.n, o.cap);
  std::uint64_t work = space.size() * group->order();
  if (work / group->order() != space.size() || work > o.cap)
    throw ResourceError("verify sweeps every profile against every group element", work,
                        o.cap);

  std::vector<OracleResult> results;
  auto const &pp = product(spec);
  bool by_definition = is_regular_by_definition(*group, o.cap);
  bool by_elements = is_regular(*group).regular;
  bool by_formula = is_regular_partition(pp.committees, pp.classes, pp.with_reversal);
  {
    std::ostringstream detail;
    detail << "definition=" << by_definition << " elements=" << by_elements
           << " formula=" << by_formula;
    bool agree = by_definition == by_elements && by_elements == by_formula;
    results.push_back({"regularity-agreement", agree ? "PASS" : "FAIL", detail.str()});
  }

  auto orbits = orbit_choices(*group, orbit_report(*group, o.cap));
  CountReport counts = summarize(orbits);
  {
    bool exists = counts.count_min >= 1;
    results.push_back({"existence", exists == by_definition ? "PASS" : "FAIL",
                       "|F_min|=" + counts.count_min.str()});
  }

  if (!by_definition) {
    for (char const *name : {"witness-membership", "symmetry-law", "minimality-law"})
      results.push_back({name, "SKIP", "not regular"});
  } else {
    RuleTable rule = build_min_rule(group, o.cap);

    OracleResult membership{"witness-membership", "PASS", ""};
    for (auto const &entry : rule.entries()) {
      Profile const &p = entry.representative;
      std::vector<GroupElement> stab;
      for (auto const &g : group->elements())
        if (act(p, g) == p)
          stab.push_back(g);
      MajorityRelation relation = sigma(p, nu_min(p));
      bool fixed = true;
      for (auto const &g : stab)
        fixed = fixed && left_mul(g.psi, right_mul(entry.choice, g.rho)) == entry.choice;
      if (!fixed || !contains(entry.choice, relation)) {
        membership = {"witness-membership", "FAIL",
                      "choice " + entry.choice.to_string() + " at " + p.to_string()};
        break;
      }
    }
    results.push_back(membership);

    std::vector<LinearOrder> table;
    table.reserve(static_cast<std::size_t>(space.size()));
    for (std::uint64_t code = 0; code < space.size(); ++code)
      table.push_back(evaluate(rule, space.decode(code)));

    OracleResult symmetry{"symmetry-law", "PASS", ""};
    OracleResult minimality{"minimality-law", "PASS", ""};
    for (std::uint64_t code = 0; code < space.size(); ++code) {
      Profile p = space.decode(code);
      auto const &value = table[static_cast<std::size_t>(code)];
      if (minimality.status == "PASS" && !contains(value, sigma(p, nu_min(p))))
        minimality = {"minimality-law", "FAIL", "F(" + p.to_string() + ") = " + value.to_string()};
      if (symmetry.status != "PASS")
        continue;
      for (auto const &g : group->elements()) {
        auto const &image = table[static_cast<std::size_t>(space.encode(act(p, g)))];
        if (image != left_mul(g.psi, right_mul(value, g.rho))) {
          symmetry = {"symmetry-law", "FAIL", "p = " + p.to_string() + ", g = " + g.to_string()};
          break;
        }
      }
    }
    results.push_back(symmetry);
    results.push_back(minimality);
  }

  bool ok = true;
  for (auto const &r : results)
    ok = ok && r.status != "FAIL";
  if (structured(o)) {
    Json list = Json::array();
    for (auto const &r : results)
      list.push_back({{"name", r.name}, {"status", r.status}, {"detail", r.detail}});
    out << dump({{"subgroup", spec_to_json(spec)}, {"regular", by_definition},
                 {"oracles", list}, {"passed", ok}});
  } else {
    for (auto const &r : results) {
      out << r.status << " " << r.name;
      if (!r.detail.empty())
        out << ": " << r.detail;
      out << "\n";
    }
  }
  return ok ? kExitOk : kExitNotRegular;
}

void add_spec_options(CLI::App *sub, Options &o) {
  sub->set_help_flag("--help", "print this help message and exit");
  sub->add_option("--h", o.h, "number of individuals")->required();
  sub->add_option("--n", o.n, "number of alternatives")->required();
  sub->add_option("--committees", o.committees, "partition of individuals, e.g. \"1,2|3\"");
  sub->add_option("--classes", o.classes, "partition of alternatives, e.g. \"1,2,3\"");
  sub->add_flag("--reversal", o.reversal, "include the rank reversal rho0");
  sub->add_option("--cap", o.cap, "enumeration cap on profiles");
}

void add_format_option(CLI::App *sub, Options &o) {
  sub->add_option("--format", o.format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));
}

} // namespace

int run_cli(int argc, char const *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Symmetric minimal majority rules: regularity, counting, construction"};
  app.name("symmaj");
  app.set_help_flag("--help", "print this help message and exit");
  app.require_subcommand(1);
  Options o;

  auto *regularity = app.add_subcommand("regularity", "decide whether a minimal rule exists");
  auto *count = app.add_subcommand("count", "count symmetric and minimal symmetric rules");
  auto *reps = app.add_subcommand("reps", "list orbit representatives with C_nu, S1, S2");
  auto *build = app.add_subcommand("build", "write a minimal symmetric rule table");
  auto *apply = app.add_subcommand("apply", "evaluate a rule table on a profile");
  auto *verify = app.add_subcommand("verify", "run brute-force oracles on a small instance");

  for (auto *sub : {regularity, count, reps, build, verify}) {
    add_spec_options(sub, o);
    add_format_option(sub, o);
  }
  build->add_option("--policy", o.policy, "first, lexmin or menu")
      ->check(CLI::IsMember({"first", "lexmin", "menu"}));
  build->add_option("--out", o.out_path, "output file (default: standard output)");
  apply->set_help_flag("--help", "print this help message and exit");
  apply->add_option("--rule", o.rule_path, "rule table written by build")->required();
  apply->add_option("--profile", o.profile, "columns such as \"3,2,1 1,2,3 1,2,3\"")
      ->required();
  add_format_option(apply, o);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (regularity->parsed())
      return cmd_regularity(o, out);
    if (count->parsed())
      return cmd_count(o, out);
    if (reps->parsed())
      return cmd_reps(o, out);
    if (build->parsed())
      return cmd_build(o, out, err);
    if (apply->parsed())
      return cmd_apply(o, out);
    return cmd_verify(o, out);
  } catch (ResourceError const &e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (NotRegularError const &e) {
    err << e.what() << "\n";
    return kExitNotRegular;
  } catch (std::invalid_argument const &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (std::exception const &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run_cli(std::vector<std::string> const &args, std::ostream &out, std::ostream &err) {
  std::vector<char const *> argv{"symmaj"};
  for (auto const &a : args)
    argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace symmaj
