#include "fixtures.hpp"
#include "symmaj/construct.hpp"
#include "symmaj/serialize.hpp"

#include <doctest.h>

using namespace symmaj;

TEST_CASE("subgroup descriptions round trip") {
  std::vector<SubgroupSpec> specs{
      fixtures::committee_spec(),
      SubgroupSpec::full_triple(5, 3, true, false, true),
      SubgroupSpec::generated(
          3, 3, {{Permutation::parse("(1 2)", 3), Permutation::parse("(1 3)", 3), Rho::reversal}})};
  for (auto const &spec : specs) {
    auto doc = spec_to_json(spec);
    CHECK(spec_to_json(spec_from_json(doc)) == doc);
  }
  CHECK_THROWS_AS(spec_from_json(Json{{"h", 2}, {"n", 2}, {"kind", "other"}}), ValidationError);
}

TEST_CASE("rule documents round trip bit for bit") {
  auto u = std::make_shared<Group const>(fixtures::committee_spec());
  auto rule = build_min_rule(u);
  auto text = dump(rule_to_json(rule));
  auto back = rule_from_json(Json::parse(text));
  CHECK(dump(rule_to_json(back)) == text);
  CHECK(back.r_u() == 13);
  CHECK(back.count_min() == 2);
  for (std::size_t j = 0; j < rule.r_u(); ++j)
    CHECK(back.entries()[j].choice == rule.entries()[j].choice);

  auto with_options = rule_to_json(rule, true);
  CHECK(with_options["entries"][0].contains("options"));
  CHECK(dump(rule_to_json(rule_from_json(with_options))) == text);
}

TEST_CASE("rule documents are validated") {
  auto u = std::make_shared<Group const>(fixtures::committee_spec());
  auto good = rule_to_json(build_min_rule(u));

  auto not_canonical = good;
  not_canonical["entries"][0]["representative"] = "3,2,1 3,2,1 3,2,1";
  CHECK_THROWS_AS(rule_from_json(not_canonical), ValidationError);

  auto missing = good;
  missing["entries"].erase(missing["entries"].size() - 1);
  CHECK_THROWS_AS(rule_from_json(missing), ValidationError);

  auto inadmissible = good;
  inadmissible["entries"][0]["choice"] = "2,1,3";
  CHECK_THROWS_AS(rule_from_json(inadmissible), ValidationError);

  auto wrong_count = good;
  wrong_count["counts"]["count_min"] = "3";
  CHECK_THROWS_AS(rule_from_json(wrong_count), ValidationError);

  auto wrong_format = good;
  wrong_format["format"] = "something";
  CHECK_THROWS_AS(rule_from_json(wrong_format), ValidationError);

  CHECK_THROWS_AS(rule_from_json(Json::object()), ValidationError);
}

TEST_CASE("reports serialize") {
  Group u(fixtures::committee_spec());
  auto r = orbit_report(u);
  auto doc = orbit_report_to_json(u, r);
  CHECK(doc["r_u"] == 13);
  CHECK(doc["orbits"].size() == 13);
  auto c = count_to_json(u, count(u));
  CHECK(c["count_symmetric"] == "53747712");
  CHECK(c["count_symmetric_factored"] == "2^13·3^8");
  CHECK(c["count_min"] == "2");
}
