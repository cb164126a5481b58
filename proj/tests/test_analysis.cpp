#include "doctest.h"

#include <set>

#include "csglab/analysis.hpp"
#include "csglab/errors.hpp"
#include "csglab/instances.hpp"
#include "oracle.hpp"

using namespace csglab;

namespace {

Rational ratio(const mpq_class& a, const mpq_class& b) {
  if (sgn(b) == 0) return sgn(a) == 0 ? Rational(1) : Rational::infinity();
  return Rational(mpq_class(a / b));
}

void check_against_oracle(const GameInstance& g) {
  const auto s = oracle::summarize(g);
  const auto r = compute_ratios(g);
  CHECK(r.feasible_profiles == s.feasible);
  CHECK(r.equilibria.members.size() == s.equilibria);
  CHECK(r.optimum_sc.value.value() == s.opt_sc);
  CHECK(r.optimum_mc.value.value() == s.opt_mc);
  CHECK(r.poa_sc == ratio(s.worst_sc, s.opt_sc));
  CHECK(r.pos_sc == ratio(s.best_sc, s.opt_sc));
  CHECK(r.poa_mc == ratio(s.worst_mc, s.opt_mc));
  CHECK(r.pos_mc == ratio(s.best_mc, s.opt_mc));
  CHECK(r.all_hold());
}

}  // namespace

TEST_CASE("ratios match the brute-force oracle on random symmetric SP games") {
  for (std::uint64_t seed = 200; seed < 240; ++seed) {
    RandomSpOptions o;
    o.seed = seed;
    o.agents = 2 + static_cast<int>(seed % 2);
    o.family = static_cast<SchemeFamily>(seed % 4);
    check_against_oracle(random_sp(o));
  }
}

TEST_CASE("ratios match the brute-force oracle on random asymmetric games") {
  for (std::uint64_t seed = 300; seed < 330; ++seed) {
    RandomAsymmetricOptions o;
    o.seed = seed;
    o.agents = 2 + static_cast<int>(seed % 2);
    o.max_edges = 8;
    o.family = static_cast<SchemeFamily>(seed % 4);
    const GameInstance g = random_asymmetric(o);
    check_against_oracle(g);
    std::set<std::string> tags;
    for (const auto& v : compute_ratios(g).verdicts) tags.insert(v.tag);
    CHECK(tags.count("Thm13:PoS_sc<=n"));
    CHECK(tags.count("Thm14:PoS_mc<=n^2"));
    CHECK_FALSE(tags.count("Thm5:PoA_sc<=n"));
  }
}

TEST_CASE("fixed instances match the oracle") {
  check_against_oracle(two_link(3));
  check_against_oracle(fig3_parallel(3, Rational(1, 10)));
  check_against_oracle(fig2_dag(Rational(2), Rational(7)));
}

TEST_CASE("two agents on the DAG instance") {
  const GameInstance g = fig2_dag(Rational(1), Rational(2));
  const auto profiles = enumerate_profiles(g);
  CHECK(profiles.size() == 6);
  const auto eq = all_nash(g);
  CHECK(eq.members.size() == 4);
  CHECK(eq.distinct().size() == 2);
  for (const auto& c : eq.distinct()) CHECK(c.multiplicity == 2);
  const auto r = compute_ratios(g);
  CHECK(r.graph_class == GraphClass::Dag);
  CHECK(r.optimum_sc.value == Rational(5));
  CHECK(r.worst_ne_sc == Rational(8));
  std::set<std::string> tags;
  for (const auto& v : r.verdicts) tags.insert(v.tag);
  CHECK(tags == std::set<std::string>{"Prop1:NE_exists", "Thm8:PoS_sc<=n", "Thm10:PoS_mc<=n"});
  CHECK_THROWS_AS(verify_lemma_cost_bound(g), NotSeriesParallel);
}

TEST_CASE("zero-cost optimum gives a degenerate ratio of one") {
  const Graph graph({"s", "t"}, {{0, 0, 1}, {1, 0, 1}}, 0, 1);
  const GameInstance g = GameInstance::symmetric(
      graph, {make_ordinary_scheme(Rational(0), 2), make_ordinary_scheme(Rational(1), 2)}, 2, {});
  const auto r = compute_ratios(g);
  CHECK(r.degenerate);
  CHECK(r.pos_sc == Rational(1));
  CHECK(r.poa_sc == Rational(1));
  CHECK(r.optimum_sc.value.is_zero());
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(enumerate_profiles(fig3_parallel(5, Rational(1, 10)), 100), PathExplosion);
  CHECK(enumerate_profiles(fig3_parallel(3, Rational(1, 10))).size() == oracle::profiles(fig3_parallel(3, Rational(1, 10))).size());
}
