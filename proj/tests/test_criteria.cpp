// Copyright 2026 The sepscan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sepscan/criteria.hpp"

#include <doctest.h>

#include <cmath>

#include "sepscan/normalform.hpp"
#include "sepscan/states.hpp"

using namespace sepscan;

TEST_SUITE("criteria") {

TEST_CASE("bound helpers") {
  CHECK(cm_kf_bound(2, 2) == doctest::Approx(2.0));
  CHECK(cm_kf_bound(2, 3) == doctest::Approx(std::sqrt(12.0)));  // 2*3*1*2
  CHECK(gcm_kf_bound({2, 2}) == doctest::Approx(1.0));
  CHECK(gcm_kf_bound({2, 2, 2}) == doctest::Approx(1.0));  // (2*1)^3 / 2^3
  CHECK(gcm_kf_bound({3, 3, 3}) == doctest::Approx(std::sqrt(27.0)));
  // gcm bound halves the bipartite bound: sqrt(MN(M-1)(N-1)) / 2.
  CHECK(gcm_kf_bound({2, 3}) == doctest::Approx(0.5 * cm_kf_bound(2, 3)));
  CHECK_THROWS_AS(cm_kf_bound(1, 2), Error);
  CHECK_THROWS_AS(gcm_kf_bound({2}), Error);
}

TEST_CASE("cm_bipartite on known states") {
  CriterionVerdict bell_v = cm_bipartite(bell());
  CHECK(bell_v.criterion == "cm");
  CHECK(bell_v.statistic == doctest::Approx(6.0));
  CHECK(bell_v.bound == doctest::Approx(2.0));
  CHECK(bell_v.detected);
  CHECK_FALSE(bell_v.used_normal_form);

  DensityMatrix mm({2, 2}, Mat::Identity(4, 4) / 4.0);
  CriterionVerdict mm_v = cm_bipartite(mm);
  CHECK(mm_v.statistic == doctest::Approx(0.0));
  CHECK_FALSE(mm_v.detected);

  // Isotropic statistic is 6p; the CM threshold sits at exactly 1/3.
  CHECK(cm_bipartite(isotropic(2, 0.34)).detected);
  CHECK_FALSE(cm_bipartite(isotropic(2, 0.32)).detected);
  CHECK(cm_bipartite(isotropic(2, 0.8)).statistic ==
        doctest::Approx(4.8).epsilon(1e-12));

  CHECK_THROWS_AS(cm_bipartite(ghz(3)), Error);
  CHECK_THROWS_AS(cm_bipartite(bell(), true), Error);  // rank deficient
}

TEST_CASE("cm_general detects GHZ only on the full subset") {
  DensityMatrix rho = mix_noise(ghz(3), 0.9);
  CriterionVerdict full = cm_general(rho, {0, 1, 2}, false);
  CHECK(full.criterion == "gcm");
  CHECK(full.bound == doctest::Approx(1.0));
  CHECK(full.statistic == doctest::Approx(0.9 * 2.0 * std::sqrt(2.0)));
  CHECK(full.detected);
  REQUIRE(full.subset.has_value());
  CHECK(*full.subset == std::vector<int>{0, 1, 2});

  CHECK_FALSE(cm_general(rho, {0, 1}, false).detected);
  CHECK_FALSE(cm_general(rho, {0, 2}, false).detected);
  CHECK_FALSE(cm_general(rho, {1, 2}, false).detected);
}

TEST_CASE("cm_general reproduces the edge-state thresholds") {
  // Statistic scales linearly in the noise weight: 1.078236 p on {0,1,2}.
  DensityMatrix lo = mix_noise(acin_edge(2.0, 3.0, 0.6), 0.92);
  DensityMatrix hi = mix_noise(acin_edge(2.0, 3.0, 0.6), 0.93);
  CHECK_FALSE(cm_general(lo, {0, 1, 2}, false).detected);
  CHECK(cm_general(hi, {0, 1, 2}, false).detected);
  CHECK(cm_general(hi, {0, 1, 2}, false).statistic ==
        doctest::Approx(0.93 * 1.078236).epsilon(1e-5));

  // With the normal form the same state is detected well below 0.92744.
  CHECK(cm_general(lo, {0, 1, 2}, true).detected);
  CHECK(cm_general(lo, {0, 1, 2}, true).used_normal_form);
}

TEST_CASE("cm_all_subsets enumerates subsets in size-lexicographic order") {
  DensityMatrix rho = random_full_rank({2, 2, 2}, 81);
  std::vector<CriterionVerdict> verdicts = cm_all_subsets(rho);
  REQUIRE(verdicts.size() == 4);
  CHECK(*verdicts[0].subset == std::vector<int>{0, 1});
  CHECK(*verdicts[1].subset == std::vector<int>{0, 2});
  CHECK(*verdicts[2].subset == std::vector<int>{1, 2});
  CHECK(*verdicts[3].subset == std::vector<int>{0, 1, 2});

  DensityMatrix prod = product({random_full_rank({2}, 82),
                                random_full_rank({2}, 83),
                                random_full_rank({2}, 84)});
  for (const CriterionVerdict& v : cm_all_subsets(prod)) {
    CHECK_FALSE(v.detected);
  }
}

TEST_CASE("gcm on a bipartite state bridges to cm with ratio 1/2") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    DensityMatrix rho = random_full_rank({2, 3}, 1200 + seed);
    CriterionVerdict cm = cm_bipartite(rho);
    CriterionVerdict gcm = cm_general(rho, {0, 1}, false);
    CHECK(gcm.statistic ==
          doctest::Approx(0.5 * cm.statistic).epsilon(1e-10));
    CHECK(gcm.bound == doctest::Approx(0.5 * cm.bound).epsilon(1e-12));
    CHECK(gcm.detected == cm.detected);
  }
}

TEST_CASE("lur_check with explicit and adapted observables") {
  DensityMatrix mm({2, 2}, Mat::Identity(4, 4) / 4.0);
  CriterionVerdict mm_v = lur_check(mm, loo_set(2), loo_set(2));
  CHECK(mm_v.criterion == "lur");
  CHECK(mm_v.bound == 0.0);
  CHECK(mm_v.statistic == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK_FALSE(mm_v.detected);

  CriterionVerdict bell_v = lur_check(bell());
  CHECK(bell_v.statistic == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(bell_v.detected);

  // Dimension mismatch between the observables and the state.
  CHECK_THROWS_AS(lur_check(mm, loo_set(3), loo_set(2)), Error);
  CHECK_THROWS_AS(lur_check(random_full_rank({2, 2, 2}, 85)), Error);

  // Mixed dimensions exercise the zero-padding path.
  DensityMatrix rect = random_separable({2, 3}, 5, 86);
  CriterionVerdict rect_v = lur_check(rect);
  CHECK_FALSE(rect_v.detected);
}

TEST_CASE("lur_check never flags separable states") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    DensityMatrix sep = random_separable({2, 2}, 4, 1300 + seed);
    CHECK(lur_check(sep).statistic < 1e-9);
  }
}

TEST_CASE("lur_nf_bound_check frozen values and dominance") {
  LurNfBounds b22 = lur_nf_bound_check(2, 2);
  CHECK(b22.cm_bound == doctest::Approx(2.0));
  CHECK(b22.lur_bound == doctest::Approx(2.0));
  CHECK(b22.cm_le_lur);

  LurNfBounds b23 = lur_nf_bound_check(2, 3);
  CHECK(b23.cm_bound == doctest::Approx(std::sqrt(12.0)));
  CHECK(b23.lur_bound == doctest::Approx(3.5));
  CHECK(b23.cm_le_lur);

  for (int m = 2; m <= 12; ++m) {
    for (int n = m; n <= 12; ++n) {
      CHECK(lur_nf_bound_check(m, n).cm_le_lur);
    }
  }
}

TEST_CASE("ppt_check on known states") {
  CriterionVerdict bell_v = ppt_check(bell(), 1);
  CHECK(bell_v.criterion == "ppt");
  CHECK(bell_v.statistic == doctest::Approx(0.5));
  CHECK(bell_v.detected);
  REQUIRE(bell_v.subset.has_value());
  CHECK(*bell_v.subset == std::vector<int>{1});

  // The isotropic PPT threshold p = 1/3 is reproduced by the flag flip.
  CHECK(ppt_check(isotropic(2, 0.34), 0).detected);
  CHECK_FALSE(ppt_check(isotropic(2, 0.32), 0).detected);

  // The edge state is PPT with respect to every party.
  DensityMatrix edge = acin_edge(2.0, 3.0, 0.6);
  for (int party = 0; party < 3; ++party) {
    CHECK_FALSE(ppt_check(edge, party).detected);
  }
  Rng rng(87);
  for (int trial = 0; trial < 10; ++trial) {
    DensityMatrix e = acin_edge(0.5 + 2.0 * rng.uniform(),
                                0.5 + 2.0 * rng.uniform(),
                                0.5 + 2.0 * rng.uniform());
    for (int party = 0; party < 3; ++party) {
      CHECK_FALSE(ppt_check(e, party).detected);
    }
  }
  CHECK_THROWS_AS(ppt_check(edge, 3), Error);
}

TEST_CASE("realignment_check on known states") {
  DensityMatrix mm({2, 3}, Mat::Identity(6, 6) / 6.0);
  CriterionVerdict mm_v = realignment_check(mm);
  CHECK(mm_v.criterion == "ccnr");
  CHECK(mm_v.statistic == doctest::Approx(1.0 / std::sqrt(6.0)));
  CHECK_FALSE(mm_v.detected);

  CHECK(realignment_check(bell()).statistic == doctest::Approx(2.0));
  CHECK(realignment_check(bell()).detected);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    DensityMatrix sep = random_separable({2, 2}, 4, 1400 + seed);
    CHECK(realignment_check(sep).statistic <= 1.0 + 1e-9);
  }
  CHECK_THROWS_AS(realignment_check(ghz(3)), Error);
}

TEST_CASE("evaluate_criterion dispatch and verdict counts") {
  DensityMatrix rho = random_full_rank({2, 2}, 88);
  CHECK(evaluate_criterion(rho, "cm").size() == 1);
  CHECK(evaluate_criterion(rho, "gcm").size() == 1);
  CHECK(evaluate_criterion(rho, "lur").size() == 1);
  CHECK(evaluate_criterion(rho, "ppt").size() == 2);
  CHECK(evaluate_criterion(rho, "ccnr").size() == 1);
  CHECK(evaluate_criterion(rho, "all").size() == 6);

  DensityMatrix tri = random_full_rank({2, 2, 2}, 89);
  CHECK(evaluate_criterion(tri, "gcm").size() == 4);
  CHECK(evaluate_criterion(tri, "ppt").size() == 3);
  CHECK(evaluate_criterion(tri, "all").size() == 7);
  CHECK_THROWS_AS(evaluate_criterion(tri, "cm"), Error);
  CHECK_THROWS_AS(evaluate_criterion(tri, "lur"), Error);
  CHECK_THROWS_AS(evaluate_criterion(tri, "ccnr"), Error);
  CHECK_THROWS_AS(evaluate_criterion(tri, "bogus"), Error);

  for (const CriterionVerdict& v : evaluate_criterion(tri, "all", true)) {
    CHECK(v.used_normal_form);
  }
}

TEST_CASE("scan_threshold recovers the isotropic CM threshold 1/3") {
  auto family = [](double p) { return isotropic(2, p); };
  double threshold = scan_threshold(family, "cm", false, 0.0, 0.999, 1e-5);
  CHECK(threshold == doctest::Approx(1.0 / 3.0).epsilon(1e-4));

  double ppt_threshold =
      scan_threshold(family, "ppt", false, 0.0, 0.999, 1e-5);
  CHECK(ppt_threshold == doctest::Approx(1.0 / 3.0).epsilon(1e-4));

  CHECK_THROWS_AS(scan_threshold(family, "cm", false, 0.0, 0.2, 1e-4),
                  Error);  // no sign change
  CHECK_THROWS_AS(scan_threshold(family, "cm", false, 0.5, 0.2, 1e-4), Error);
}

TEST_CASE("edge-state thresholds move down with the normal form") {
  auto family = [](double p) {
    return mix_noise(acin_edge(2.0, 3.0, 0.6), p);
  };
  double plain = scan_threshold(family, "gcm", false, 0.85, 0.999, 1e-3);
  double filtered = scan_threshold(family, "gcm", true, 0.85, 0.999, 1e-3);
  CHECK(plain == doctest::Approx(0.92744).epsilon(2e-3));
  CHECK(filtered == doctest::Approx(0.90285).epsilon(2e-3));
  CHECK(filtered < plain);
}

TEST_CASE("no false positives on a quick separable sample") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    DensityMatrix sep = random_separable({2, 2}, 4, 1500 + seed);
    for (const CriterionVerdict& v : evaluate_criterion(sep, "all")) {
      CHECK_FALSE(v.detected);
    }
    for (const CriterionVerdict& v : evaluate_criterion(sep, "all", true)) {
      CHECK_FALSE(v.detected);
    }
  }
}

}  // TEST_SUITE("criteria")
