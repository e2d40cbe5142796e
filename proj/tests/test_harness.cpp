#include "sbcas/diff.hpp"
#include "sbcas/factor.hpp"
#include "sbcas/harness.hpp"
#include "sbcas/ratnorm.hpp"
#include "sbcas/syntax.hpp"

#include <doctest.h>

#include <json.hpp>

using namespace sbcas;

namespace {

GenConfig small(std::uint64_t seed, int cases = 60) {
  GenConfig cfg;
  cfg.seed = seed;
  cfg.cases = cases;
  return cfg;
}

}  // namespace

TEST_CASE("config validation") {
  GenConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.max_depth = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.cases = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.coeff_bound = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("generators are deterministic and stay in their languages") {
  const GenConfig cfg = small(1);
  CHECK(gen_rat_expr(cfg) == gen_rat_expr(cfg));
  CHECK(is_rat_expr(gen_rat_expr(cfg)));
  CHECK(is_rat_fun(gen_rat_fun(cfg)));
  CHECK(is_numeral(gen_numeral(cfg)));
  CHECK(is_diff_expr(gen_diff_expr(cfg)));

  TermGen g(small(9));
  for (int i = 0; i < 100; ++i) {
    CHECK(is_numeral(g.numeral()));
    CHECK_FALSE(is_numeral(g.non_numeral()));
    CHECK(is_rat_expr(g.rat_expr()));
    CHECK_FALSE(is_rat_expr(g.non_rat_expr()));
    CHECK(is_rat_fun(g.rat_fun()));
    CHECK_FALSE(is_rat_fun(g.non_rat_fun()));
    CHECK(is_diff_expr(g.diff_expr()));
    CHECK_FALSE(is_diff_expr(g.non_diff_expr()));
  }
}

TEST_CASE("depth and coefficient bounds") {
  GenConfig cfg = small(3);
  cfg.max_depth = 2;
  cfg.coeff_bound = 3;
  TermGen g(cfg);
  for (int i = 0; i < 100; ++i) {
    const Term t = g.rat_expr();
    CHECK(t.size() <= 31);
  }
}

TEST_CASE("valued terms carry their value") {
  TermGen g(small(4));
  for (int i = 0; i < 50; ++i) {
    const auto vi = g.int_term();
    CHECK(is_expr_of(vi.term, SemType::integer()));
    const auto vq = g.rat_term();
    CHECK(is_expr_of(vq.term, SemType::rational()));
  }
}

TEST_CASE("equal variants keep the fraction-field value") {
  TermGen g(small(6));
  for (int i = 0; i < 100; ++i) {
    const Term t = g.rat_expr();
    const Term u = g.equal_variant(t);
    CHECK(val_in_f(t) == val_in_f(u));
  }
}

TEST_CASE("sample grid") {
  const auto grid = diff_sample_grid();
  REQUIRE(grid.size() == 25);
  CHECK(grid.front() == -3.0);
  CHECK(grid.back() == 3.0);
}

TEST_CASE("report bookkeeping") {
  Report r;
  r.suite = "demo";
  r.expect_branch("a");
  r.expect_branch("b");
  r.record("a", true);
  CHECK_FALSE(r.ok());
  r.record("b", false, "first");
  r.record("b", false, "second");
  CHECK(r.failures() == 2);
  CHECK_FALSE(r.ok());
  const auto j = nlohmann::json::parse(r.json());
  CHECK(j["suite"] == "demo");
  CHECK(j["ok"] == false);
  CHECK(j["branches"][1]["first_counterexample"] == "first");
  CHECK(r.text().find("first") != std::string::npos);

  Report other;
  other.record("a", true);
  other.record("c", true);
  r.merge(other);
  CHECK(r.branches.size() == 3);
  CHECK(r.branches[0].hits == 2);
}

TEST_CASE("suites pass on small configurations") {
  for (std::uint64_t seed : {2u, 3u}) {
    CHECK(check_spec_factor(small(seed)).ok());
    CHECK(check_spec_norm_rat_expr(small(seed)).ok());
    CHECK(check_spec_norm_rat_fun(small(seed)).ok());
    CHECK(check_spec_diff(small(seed)).ok());
    CHECK(check_disquotation(small(seed)).ok());
  }
}

TEST_CASE("suites are deterministic per seed") {
  auto strip = [](Report r) {
    r.seconds = 0;
    return r.json();
  };
  CHECK(strip(check_spec_norm_rat_expr(small(8))) == strip(check_spec_norm_rat_expr(small(8))));
  CHECK(strip(check_spec_diff(small(8))) == strip(check_spec_diff(small(8))));
}
