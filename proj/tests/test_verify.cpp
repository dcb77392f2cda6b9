#include "doctest.h"

#include <set>

#include "lcsfi/error.hpp"
#include "lcsfi/verify.hpp"

using namespace lcsfi;

TEST_CASE("every acceptance criterion has exactly one check") {
  std::set<std::string> names;
  std::multiset<int> criteria;
  for (const CheckInfo& c : verify_checks()) {
    CHECK(names.insert(c.name).second);
    if (c.criterion > 0) criteria.insert(c.criterion);
  }
  for (int i = 1; i <= 16; ++i) CHECK(criteria.count(i) == 1);
  CHECK(criteria.size() == 16);
}

TEST_CASE("config keys") {
  VerifyConfig cfg;
  set_config_value(cfg, "magnus_pairs", "17");
  CHECK(cfg.magnus_pairs == 17);
  set_config_value(cfg, "seed", "99");
  CHECK(cfg.seed == 99);
  set_config_value(cfg, "tau_convention", "symmetric");
  CHECK(cfg.tau_convention == DualityConvention::Symmetric);
  CHECK_THROWS_AS(set_config_value(cfg, "no_such_bound", "1"), Error);
  CHECK_THROWS_AS(set_config_value(cfg, "magnus_pairs", "many"), Error);
}

TEST_CASE("shrunk bounds report skips") {
  VerifyConfig cfg;
  cfg.degree_window = 1;
  CHECK(run_check("degree-certification", cfg).status == CheckStatus::Skip);
  cfg.magnus_pairs = 0;
  CHECK(run_check("magnus-faithfulness", cfg).status == CheckStatus::Skip);
  CHECK_THROWS_AS(run_check("no-such-check", cfg), Error);
}

TEST_CASE("the symmetric duality sign is caught") {
  VerifyConfig cfg;
  cfg.tau_convention = DualityConvention::Symmetric;
  const CheckResult r = run_check("johnson-homomorphism", cfg);
  CHECK(r.status == CheckStatus::Fail);
  CHECK_FALSE(r.witness.empty());
}

TEST_CASE("reports are deterministic") {
  VerifyConfig cfg;
  cfg.seed = 3;
  VerifyReport a, b;
  a.config = b.config = cfg;
  for (const char* name : {"magnus-faithfulness", "psi-isomorphism", "andreadakis-centrality"}) {
    a.checks.push_back(run_check(name, cfg));
    b.checks.push_back(run_check(name, cfg));
  }
  CHECK(report_json(a) == report_json(b));
  CHECK(report_tsv(a) == report_tsv(b));
  CHECK(a.all_passed());
}
