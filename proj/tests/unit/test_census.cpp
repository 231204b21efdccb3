#include <doctest.h>

#include <set>

#include "grr/bounds.hpp"
#include "grr/corpus.hpp"
#include "grr/report.hpp"
#include "grr/verify.hpp"

using namespace grr;

TEST_CASE("exhaustive censuses of groups without regular representations") {
  const CensusRecord q = exhaustive_census(load_group("quaternion"), Mode::digraph);
  CHECK(q.total == 256);
  CHECK(q.counts.regular == 0);
  const CensusRecord c3 = exhaustive_census(load_group("cyclic:3"), Mode::graph);
  CHECK(c3.total == 4);
  CHECK(c3.counts.regular == 0);
  CHECK(c3.counts.non_regular == 4);
  const CensusRecord k = exhaustive_census(load_group("elem2:2"), Mode::digraph);
  CHECK(k.total == 16);
  CHECK(k.counts.regular == 0);
}

TEST_CASE("census counts partition the total") {
  for (const char* name : {"sym:3", "dihedral:4", "cyclic:7", "product:dihedral:4,cyclic:2"}) {
    const CensusRecord r = exhaustive_census(load_group(name), Mode::graph);
    CHECK(BigInt(r.counts.regular + r.counts.non_regular) == r.total);
    CHECK(r.counts.regular <= r.counts.normal);
  }
  CHECK(exhaustive_census(load_group("product:dihedral:4,cyclic:2"), Mode::graph).counts.regular > 0);
}

TEST_CASE("parallel and serial censuses agree") {
  const GroupTable g = load_group("cyclic:16");
  const CensusRecord a = exhaustive_census(g, Mode::digraph, 1);
  const CensusRecord b = exhaustive_census(g, Mode::digraph, 3);
  CHECK(a.counts == b.counts);
  CHECK(to_json(a, false) == to_json(b, false));
}

TEST_CASE("census caps") {
  CHECK_THROWS_AS(exhaustive_census(load_group("cyclic:17"), Mode::digraph), Error);
  CHECK_THROWS_AS(exhaustive_census(load_group("elem2:5"), Mode::graph), Error);
  CHECK_THROWS_AS(monte_carlo_census(load_group("cyclic:5"), Mode::graph, 0, 1), Error);
}

TEST_CASE("sampled censuses are reproducible and mergeable") {
  const GroupTable g = load_group("dihedral:5");
  const CensusRecord one = monte_carlo_census(g, Mode::graph, 1, 9);
  CHECK((one.estimate() == 0.0 || one.estimate() == 1.0));
  const CensusRecord a = monte_carlo_census(g, Mode::graph, 3000, 42);
  const CensusRecord b = monte_carlo_census(g, Mode::graph, 3000, 42, 2);
  CHECK(to_json(a, false) == to_json(b, false));
  const CensusRecord lo = monte_carlo_census(g, Mode::graph, 1000, 42, 1, 0);
  const CensusRecord hi = monte_carlo_census(g, Mode::graph, 2000, 42, 1, 1000);
  const CensusRecord m = merge_samples(hi, lo);
  CHECK(m.counts == a.counts);
  CHECK(m.total == a.total);
  CHECK_THROWS_AS(merge_samples(lo, lo), Error);
  CHECK(sample_word(1, 0) != sample_word(1, 1));
  CHECK(sample_word(1, 5) == sample_word(1, 5));
}

TEST_CASE("sampled estimate tracks the exhaustive proportion") {
  const GroupTable g = load_group("sym:3");
  const CensusRecord ex = exhaustive_census(g, Mode::graph);
  const CensusRecord mc = monte_carlo_census(g, Mode::graph, 20000, 5);
  CHECK(std::abs(mc.estimate() - ex.estimate()) <= 3 * mc.half_width() + 1e-12);
}

TEST_CASE("unlabeled censuses") {
  const UnlabeledCensus c3 = unlabeled_census(load_group("cyclic:3"));
  CHECK(c3.labeled_total == 4);
  CHECK(c3.iso_classes <= 4);
  CHECK(c3.grr_classes == 0);
  CHECK(unlabeled_census(load_group("elem2:2")).grr_classes == 0);
  const GroupTable s3 = load_group("sym:3");
  const auto empty = canonical_form(build_cayley(s3, 0).graph);
  const auto complete = canonical_form(build_cayley(s3, s3.all() & ~Mask{1}).graph);
  CHECK(empty != complete);
  CHECK_THROWS_AS(unlabeled_census(load_group("cyclic:11")), Error);
}

TEST_CASE("overgroup scenarios") {
  const GroupTable s3 = load_group("sym:3");
  const auto full = build_scenarios(s3, Strategy::full);
  REQUIRE(full.size() == 1);
  CHECK(full[0].core.is_trivial());
  CHECK(full[0].kappa == 2);
  CHECK(full[0].transitive);
  CHECK(full[0].proper);

  const GroupTable k = load_group("elem2:2");
  std::set<long long> orders;
  for (const auto& s : build_scenarios(k, Strategy::aut)) orders.insert(s.overgroup.order().convert_to<long long>());
  CHECK(orders == std::set<long long>{8, 12, 24});

  // R normal in G: the core is R itself and the scenario is degenerate.
  for (const auto& s : build_scenarios(k, Strategy::aut)) {
    CHECK(s.core_mask == k.all());
    CHECK(s.degenerate);
    CHECK(s.h_orbits.size() == 1);
  }
  CHECK_FALSE(build_scenarios(load_group("cyclic:5"), Strategy::graph_aut).empty());
}

TEST_CASE("bound evaluator") {
  const BoundTable t16 = bound_evaluator(16, 9);
  CHECK(t16.grr_vacuous);
  CHECK(t16.unlabeled_vacuous);
  CHECK(t16.normal_vacuous);
  CHECK(t16.aut_bound_exponent == doctest::Approx(16));
  const BoundTable big = bound_evaluator(parse_order("2^40"), parse_order("2^40"));
  CHECK(std::isfinite(static_cast<double>(big.grr_exponent)));
  CHECK(big.aut_bound_exponent == doctest::Approx(1600));
  const BoundTable huge = bound_evaluator(parse_order("2^100"), 1);
  CHECK_FALSE(huge.grr_vacuous);
  CHECK_THROWS_AS(bound_evaluator(2, 1), Error);
  CHECK_THROWS_AS(parse_order("abc"), Error);
}

TEST_CASE("report schema") {
  const CensusRecord r = exhaustive_census(load_group("cyclic:3"), Mode::graph);
  const Json j = to_json(r);
  CHECK(j["counts"]["drr_or_grr"] == 0);
  CHECK(j["proportion"]["den"] == 4);
  CHECK(j["seed"].is_null());
  CHECK(j.contains("elapsed_ms"));
  CHECK_FALSE(to_json(r, false).contains("elapsed_ms"));
  CHECK(big_json(pow2(80)).is_string());
}

TEST_CASE("verification suites on a small corpus") {
  const std::vector<std::string> corpus{"cyclic:3", "sym:3", "dihedral:4"};
  for (const auto& id : suite_ids()) {
    const VerificationReport rep = verify_suite(id, 8, corpus);
    CHECK_MESSAGE(rep.passed(), id);
    CHECK_MESSAGE(!rep.records.empty(), id);
  }
  CHECK_THROWS_AS(verify_suite("nope", 8, corpus), Error);
  const VerificationReport cc = verify_suite("census-consistency", 3, {"cyclic:3"});
  REQUIRE(!cc.records.empty());
  CHECK(cc.records[0].count == 4);
  const VerificationReport l = verify_suite("lemma3.5+prop3.1", 6, {"sym:3"});
  bool saw = false;
  for (const auto& rec : l.records)
    if (rec.lemma == "double-coset-even-nonnormal") {
      CHECK(rec.count == 16);
      CHECK(*rec.bound_num == 37);
      CHECK(rec.bound_den_exp == 8);
      saw = true;
    }
  CHECK(saw);
}

TEST_CASE("corpus manifest") {
  CHECK(default_corpus().size() == 40);
  CHECK(load_corpus(std::string(GRR_SOURCE_DIR) + "/corpus/default.txt") == default_corpus());
  CHECK_THROWS_AS(load_corpus("/nonexistent/manifest"), Error);
}
