#include "doctest.h"

#include "csglab/analysis.hpp"
#include "csglab/errors.hpp"
#include "csglab/instances.hpp"
#include "csglab/io.hpp"

using namespace csglab;
using io::json;

namespace {

void round_trip(const GameInstance& g) {
  const json doc = io::instance_to_json(g);
  const GameInstance back = io::instance_from_json(io::parse_json(doc.dump()));
  CHECK(io::instance_to_json(back) == doc);
  CHECK(back.schemes() == g.schemes());
  CHECK(back.agents() == g.agents());
  CHECK(back.recipe() == g.recipe());
}

}  // namespace

TEST_CASE("instance documents round-trip") {
  round_trip(fig2_dag(Rational(3), Rational(9)));
  round_trip(fig3_parallel(4, Rational(1, 100)));
  round_trip(two_link(5));
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    RandomSpOptions o;
    o.seed = seed;
    o.agents = 1 + static_cast<int>(seed % 4);
    o.family = static_cast<SchemeFamily>(seed % 4);
    round_trip(random_sp(o));
    RandomAsymmetricOptions a;
    a.seed = seed;
    a.agents = 2 + static_cast<int>(seed % 2);
    a.family = static_cast<SchemeFamily>(seed % 4);
    round_trip(random_asymmetric(a));
  }
}

TEST_CASE("instance document layout") {
  const json doc = io::instance_to_json(fig3_parallel(4, Rational(1, 100)));
  CHECK(doc["agents"] == 4);
  CHECK(doc["edges"].size() == 5);
  const json& last = doc["edges"][4];
  CHECK(last["cost"] == "101/100");
  CHECK(last["scheme"]["table"] == json::array({"101/100", "101/100", "101/100", "101/400"}));
  CHECK(doc["edges"][0]["scheme"] == "ordinary");
  CHECK(doc["recipe"]["kind"] == "fig3");
}

TEST_CASE("malformed documents raise ParseError") {
  json doc = io::instance_to_json(two_link(2));
  json bad = doc;
  bad["edges"][0]["cost"] = "1/0";
  CHECK_THROWS_AS(io::instance_from_json(bad), ParseError);
  bad = doc;
  bad["edges"][0]["tail"] = "nowhere";
  CHECK_THROWS_AS(io::instance_from_json(bad), ParseError);
  bad = doc;
  bad["edges"][1]["id"] = 7;
  CHECK_THROWS_AS(io::instance_from_json(bad), ParseError);
  bad = doc;
  bad.erase("edges");
  CHECK_THROWS_AS(io::instance_from_json(bad), ParseError);
  bad = doc;
  bad["edges"][0]["scheme"] = {{"table", {"1/1"}}};
  CHECK_THROWS(io::instance_from_json(bad));
  CHECK_THROWS_AS(io::parse_json("{not json"), ParseError);
}

TEST_CASE("edge order in the document does not matter") {
  json doc = io::instance_to_json(fig2_dag(Rational(1), Rational(2)));
  json reversed = doc;
  std::reverse(reversed["edges"].begin(), reversed["edges"].end());
  CHECK(io::instance_to_json(io::instance_from_json(reversed)) == doc);
}

TEST_CASE("profiles and reports") {
  const GameInstance g = two_link(5);
  const auto opt = optimal_profile(g, Criterion::SumCost);
  const json p = io::profile_to_json(opt.profile);
  CHECK(io::profile_from_json(g, p) == opt.profile);
  CHECK(io::profile_from_json(g, json{{"paths", p}}) == opt.profile);

  const json report = io::report_to_json(compute_ratios(g));
  CHECK(report["ratios"]["PoA_sc"]["exact"] == "5/1");
  CHECK(report["graph_class"] == "ParallelLink");
  bool thm5 = false;
  for (const auto& v : report["verdicts"]) thm5 = thm5 || (v["tag"] == "Thm5:PoA_sc<=n" && v["holds"] == true);
  CHECK(thm5);
  const json sc_only = io::report_to_json(compute_ratios(g), {true, false});
  CHECK_FALSE(sc_only["ratios"].contains("PoA_mc"));
  CHECK(io::report_to_json(compute_ratios(g)).dump() == report.dump());
}
