// Copyright 2026 The TPASS Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "test_util.h"
#include "tpass/decompose.h"
#include "tpass/equilibrium_lp.h"
#include "tpass/errors.h"
#include "tpass/game.h"
#include "tpass/lp_model.h"
#include "tpass/oracle.h"
#include "tpass/simplex.h"

namespace tpass {
namespace {

using Clock = std::chrono::steady_clock;

double MillisecondsSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Random game dimensions in [lo, hi] drawn from `rng`.
std::pair<int, int> Dimensions(std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> dim(lo, hi);
  const int m = dim(rng);
  return {m, dim(rng)};
}

// The random suite shared by criteria 3 and 4.
constexpr int kSuiteSize = 1000;

TpassGame SuiteGame(int index) {
  std::mt19937_64 rng(1'000'000 + index);
  const auto [m, n] = Dimensions(rng, 2, 8);
  return RandomTpass(m, n, -1, 1, 10'000 + index);
}

Outcome DemoGame() {
  const TpassGame game = testing::PdGame();
  const auto start = Clock::now();
  const EquilibriumSolution s = SolveEquilibrium(game);
  const double elapsed = MillisecondsSince(start);
  const auto cells = ParetoImprovingCells(game, s.alpha, s.beta);

  const double err = std::max(
      {std::abs(s.p[0] - 1.0), std::abs(s.p[1]), std::abs(s.q[0] - 1.0),
       std::abs(s.q[1]), std::abs(s.alpha - 0.5), std::abs(s.beta - 0.5)});
  // Independent confirmation that the pair is the only equilibrium.
  const auto enumerated = EnumerateEquilibria(Compose(game));
  const bool unique = enumerated.size() == 1 && enumerated[0].p[0] == 1.0 &&
                      enumerated[0].q[0] == 1.0;
  const bool pareto = cells.size() == 1 && cells[0].row == 2 &&
                      cells[0].col == 2 &&
                      std::abs(cells[0].row_payoff - 0.75) <= 1e-9 &&
                      std::abs(cells[0].col_payoff - 0.75) <= 1e-9;
  return {err <= 1e-9 && unique && pareto && elapsed < 10.0,
          fmt::format("max error {:.3g}, oracle unique {}, pareto cell "
                      "(3/4, 3/4) {}, solve {:.3f} ms",
                      err, unique, pareto, elapsed)};
}

Outcome PrintedMatrices() {
  const SeparabilityCheck check =
      IsSeparableSum(testing::MisprintedPdBimatrix(), 1e-9);
  return {!check.separable && check.tetrad_residual == 1.5,
          fmt::format("separable {}, tetrad residual {}", check.separable,
                      check.tetrad_residual)};
}

Outcome PrimalDualSuite() {
  const auto start = Clock::now();
  int failures = 0;
  double worst_gap = 0.0;
  double worst_slackness = 0.0;
  double worst_violation = 0.0;
  for (int k = 0; k < kSuiteSize; ++k) {
    const TpassGame game = SuiteGame(k);
    try {
      const EquilibriumSolution s = SolveEquilibrium(game, 1e-8);
      const EquilibriumReport report = IsEquilibrium(game, s.p, s.q, 1e-8);
      const lp::LpModel primal = BuildPrimalLp(game);
      const lp::LpModel dual = BuildDualLp(game);
      const lp::LpSolution ps = lp::Solve(primal);
      const lp::LpSolution ds = lp::Solve(dual);
      if (ps.status != lp::LpStatus::kOptimal ||
          ds.status != lp::LpStatus::kOptimal || !report.is_equilibrium) {
        ++failures;
        continue;
      }
      const double slackness =
          std::max({s.slackness_residual,
                    lp::CheckComplementarySlackness(primal, ps, 1e-8).residual,
                    lp::CheckComplementarySlackness(dual, ds, 1e-8).residual});
      worst_gap = std::max(worst_gap,
                           std::abs(ps.objective_value - ds.objective_value));
      worst_slackness = std::max(worst_slackness, slackness);
      worst_violation = std::max(
          {worst_violation, report.row_violation, report.col_violation});
    } catch (const std::exception&) {
      ++failures;
    }
  }
  const double seconds = MillisecondsSince(start) / 1000.0;
  return {failures == 0 && worst_gap <= 1e-8 && worst_slackness <= 1e-8 &&
              seconds < 30.0,
          fmt::format("{} games, {} failures, max objective gap {:.3g}, max "
                      "slackness {:.3g}, max deviation gain {:.3g}, {:.2f} s",
                      kSuiteSize, failures, worst_gap, worst_slackness,
                      worst_violation, seconds)};
}

Outcome JointLpSuite() {
  int failures = 0;
  double worst = 0.0;
  for (int k = 0; k < kSuiteSize; ++k) {
    const TpassGame game = SuiteGame(k);
    try {
      const JointLpResult r = SolveJointLp(game, 1e-8);
      worst = std::max(worst, std::abs(r.optimal_value));
      if (!IsEquilibrium(game, r.solution.p, r.solution.q, 1e-8)
               .is_equilibrium) {
        ++failures;
      }
    } catch (const std::exception&) {
      ++failures;
    }
  }
  return {failures == 0 && worst <= 1e-8,
          fmt::format("{} games, {} failures, max |optimum| {:.3g}", kSuiteSize,
                      failures, worst)};
}

// Mixes x with a random simplex point at weight eps.
MixedStrategy Perturb(const MixedStrategy& x, std::mt19937_64& rng,
                      double eps) {
  const MixedStrategy noise = testing::RandomSimplexPoint(rng, x.size());
  return MixedStrategy::FromWeights(
      Vector((1.0 - eps) * x.weights() + eps * noise.weights()));
}

Outcome JointLpEquivalence() {
  std::mt19937_64 rng(5);
  constexpr int kGames = 1250;
  constexpr int kPairsPerGame = 8;
  const double eps[] = {1e-3, 1e-6, 1e-9, 1e-12};
  int triples = 0;
  int disagreements = 0;
  int equilibria = 0;
  for (int g = 0; g < kGames; ++g) {
    const auto [m, n] = Dimensions(rng, 1, 6);
    const TpassGame game = RandomTpass(m, n, -1, 1, 50'000 + g);
    const EquilibriumSolution s = SolveEquilibrium(game);
    std::uniform_int_distribution<int> row(1, m), col(1, n);
    for (int k = 0; k < kPairsPerGame; ++k) {
      MixedStrategy p = s.p;
      MixedStrategy q = s.q;
      switch (k) {
        case 0:
          break;
        case 1:
          p = testing::RandomSimplexPoint(rng, m);
          q = testing::RandomSimplexPoint(rng, n);
          break;
        case 2:
          p = MixedStrategy::Pure(m, row(rng));
          q = MixedStrategy::Pure(n, col(rng));
          break;
        default:
          p = Perturb(s.p, rng, eps[k - 3 < 4 ? k - 3 : 0]);
          if (k == 7) q = Perturb(s.q, rng, 1e-3);
          break;
      }
      const bool joint = CheckJointLp(game, p, q, 1e-8).holds;
      const bool direct = IsEquilibrium(game, p, q, 1e-8).is_equilibrium;
      disagreements += joint != direct;
      equilibria += direct;
      ++triples;
    }
  }
  return {triples >= 10'000 && disagreements == 0,
          fmt::format("{} triples ({} equilibria), {} disagreements", triples,
                      equilibria, disagreements)};
}

Outcome DualityCertification() {
  std::mt19937_64 rng(6);
  constexpr int kGames = 200;
  int oracle_equilibria = 0;
  int rejected_certificates = 0;
  int non_equilibria = 0;
  int accepted_non_equilibria = 0;
  for (int g = 0; g < kGames; ++g) {
    const auto [m, n] = Dimensions(rng, 1, 4);
    const TpassGame game = RandomTpass(m, n, -1, 1, 60'000 + g);
    for (const EnumeratedEquilibrium& e : EnumerateEquilibria(Compose(game))) {
      ++oracle_equilibria;
      rejected_certificates +=
          !CertifyByDuality(game, e.p, e.q, 1e-8).is_equilibrium;
    }
    // In a 1x1 game every pair is an equilibrium.
    int drawn = m * n == 1 ? 100 : 0;
    while (drawn < 100) {
      const MixedStrategy p = testing::RandomSimplexPoint(rng, m);
      const MixedStrategy q = testing::RandomSimplexPoint(rng, n);
      // Non-equilibrium status is established by the oracle's own test on
      // (B, C), not by the certificate under test.
      if (BimatrixDeviationGain(Compose(game), p, q) <= 1e-8) continue;
      ++drawn;
      ++non_equilibria;
      accepted_non_equilibria +=
          CertifyByDuality(game, p, q, 1e-8).is_equilibrium;
    }
  }
  return {rejected_certificates == 0 && accepted_non_equilibria == 0,
          fmt::format("{} oracle equilibria ({} rejected), {} non-equilibrium "
                      "pairs ({} accepted)",
                      oracle_equilibria, rejected_certificates, non_equilibria,
                      accepted_non_equilibria)};
}

Outcome OracleAgreement() {
  std::mt19937_64 rng(7);
  constexpr int kRuns = 500;
  int confirmed = 0;
  int matched = 0;
  for (int k = 0; k < kRuns; ++k) {
    const auto [m, n] = Dimensions(rng, 1, 4);
    const TpassGame game = RandomTpass(m, n, -1, 1, 70'000 + k);
    try {
      const CrossCheckResult r =
          CrossCheckDetails(game, SolveEquilibrium(game));
      confirmed += r.confirmed;
      matched += r.matched_enumeration;
    } catch (const std::exception&) {
    }
  }
  return {confirmed == kRuns,
          fmt::format("{}/{} confirmed ({} coincide with an enumerated "
                      "equilibrium)",
                      confirmed, kRuns, matched)};
}

// Value of the 2x2 zero-sum game with row payoffs a: the saddle value when
// one exists, otherwise the equalizing formula.
double ClosedFormValue(const Matrix& a) {
  const double lower = std::max(a.row(0).minCoeff(), a.row(1).minCoeff());
  const double upper = std::min(a.col(0).maxCoeff(), a.col(1).maxCoeff());
  if (lower == upper) return lower;
  return (a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)) /
         (a(0, 0) + a(1, 1) - a(0, 1) - a(1, 0));
}

Outcome ZeroSumReduction() {
  const EquilibriumSolution mp = SolveEquilibrium(testing::MatchingPennies());
  const double mp_err = std::max(
      {std::abs(mp.alpha), std::abs(mp.beta), std::abs(mp.alpha + mp.beta),
       std::abs(mp.p[0] - 0.5), std::abs(mp.p[1] - 0.5),
       std::abs(mp.q[0] - 0.5), std::abs(mp.q[1] - 0.5)});

  double worst_closed_form = 0.0;
  double worst_oracle = 0.0;
  for (int k = 0; k < 100; ++k) {
    const Matrix a = RandomTpass(2, 2, -1, 1, 80'000 + k).kernel();
    const TpassGame game(a, Vector::Zero(2), Vector::Zero(2));
    const EquilibriumSolution s = SolveEquilibrium(game);
    worst_closed_form =
        std::max(worst_closed_form, std::abs(s.alpha - ClosedFormValue(a)));
    // Every equilibrium of a zero-sum game pays the value.
    for (const EnumeratedEquilibrium& e : EnumerateEquilibria(Compose(game))) {
      worst_oracle = std::max(worst_oracle, std::abs(s.alpha - e.row_payoff));
    }
  }
  return {mp_err <= 1e-9 && worst_closed_form <= 1e-8 && worst_oracle <= 1e-8,
          fmt::format("matching pennies error {:.3g}; 100 random 2x2: max "
                      "|alpha - closed form| {:.3g}, max |alpha - oracle| "
                      "{:.3g}",
                      mp_err, worst_closed_form, worst_oracle)};
}

Outcome DecompositionRoundTrip() {
  std::mt19937_64 rng(9);
  constexpr int kGames = 1000;
  double worst = 0.0;
  int failures = 0;
  int accepted_perturbations = 0;
  for (int k = 0; k < kGames; ++k) {
    // Single-row or single-column games have no tetrads, so every
    // perturbation of them is still separable; start at 2x2.
    const auto [m, n] = Dimensions(rng, 2, 8);
    const BimatrixGame composed = Compose(RandomTpass(m, n, -1, 1, 90'000 + k));
    try {
      const BimatrixGame again = Compose(Decompose(composed, 1e-9).game);
      worst = std::max(
          {worst,
           (again.row_payoffs() - composed.row_payoffs()).cwiseAbs().maxCoeff(),
           (again.col_payoffs() - composed.col_payoffs())
               .cwiseAbs()
               .maxCoeff()});
    } catch (const std::exception&) {
      ++failures;
    }

    std::uniform_int_distribution<int> row(0, m - 1), col(0, n - 1), coin(0, 1);
    Matrix b = composed.row_payoffs();
    Matrix c = composed.col_payoffs();
    Matrix& target = coin(rng) ? b : c;
    target(row(rng), col(rng)) += coin(rng) ? 1e-3 : -1e-3;
    const BimatrixGame perturbed(b, c);
    bool accepted = IsSeparableSum(perturbed, 1e-9).separable;
    try {
      Decompose(perturbed, 1e-9);
      accepted = true;
    } catch (const NotSeparable&) {
    }
    accepted_perturbations += accepted;
  }
  return {failures == 0 && worst <= 1e-12 && accepted_perturbations == 0,
          fmt::format("{} games, max round-trip error {:.3g}, {} failures, "
                      "{} perturbed games accepted",
                      kGames, worst, failures, accepted_perturbations)};
}

}  // namespace
}  // namespace tpass

int main() {
  struct Criterion {
    const char* name;
    std::function<tpass::Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"demo game equilibrium and pareto cell", tpass::DemoGame},
      {"printed matrices fail separability", tpass::PrintedMatrices},
      {"primal/dual LP suite", tpass::PrimalDualSuite},
      {"joint LP zero optimum", tpass::JointLpSuite},
      {"joint LP check matches best response", tpass::JointLpEquivalence},
      {"duality certificate", tpass::DualityCertification},
      {"oracle agreement", tpass::OracleAgreement},
      {"zero-sum reduction", tpass::ZeroSumReduction},
      {"decomposition round trip", tpass::DecompositionRoundTrip},
  };
  int failed = 0;
  for (size_t k = 0; k < criteria.size(); ++k) {
    tpass::Outcome outcome;
    try {
      outcome = criteria[k].run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    fmt::print("{} {}. {}: {}\n", outcome.pass ? "PASS" : "FAIL", k + 1,
               criteria[k].name, outcome.detail);
    std::fflush(stdout);
    failed += !outcome.pass;
  }
  fmt::print("{}/{} criteria passed\n", criteria.size() - failed,
             criteria.size());
  return failed == 0 ? 0 : 1;
}
