#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qbaker/baker.hpp"
#include "qbaker/dynamics.hpp"

namespace qbaker {
namespace {

TEST(Iterate, ZeroStepsIsIdentity) {
  std::mt19937_64 rng(1);
  const StateVector psi = oracle::to_state(4, oracle::random_state(4, rng));
  EXPECT_TRUE(iterate(psi, 0).amplitudes() == psi.amplitudes());
  EXPECT_THROW(iterate(psi, -1), DomainError);
}

TEST(Iterate, OneStepFromGroundIsFirstColumn) {
  const StateVector out = iterate(basis_state(3, 0), 1);
  const UnitaryMatrix t = baker_matrix(3);
  EXPECT_LE((out.amplitudes() - t.col(0)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Iterate, MatchesDenseMatrixPower) {
  std::mt19937_64 rng(21);
  for (int L = 1; L <= 6; ++L) {
    const oracle::Vector psi = oracle::random_state(L, rng);
    const oracle::Matrix t = oracle::baker(L);
    const oracle::Vector expected = t * (t * (t * psi));
    const StateVector out = iterate(oracle::to_state(L, psi), 3);
    EXPECT_LE((out.amplitudes() - expected).cwiseAbs().maxCoeff(), 1e-10) << "L=" << L;
  }
}

TEST(Iterate, NormOverThousandSteps) {
  const StateVector out = iterate(basis_state(3, 5), 1000);
  EXPECT_NEAR(out.squared_norm(), 1.0, 1e-9);
}

TEST(Distributions, PositionOfBasisState) {
  const std::vector<double> p = position_distribution(basis_state(3, 5));
  for (std::size_t j = 0; j < p.size(); ++j) EXPECT_EQ(p[j], j == 5 ? 1.0 : 0.0);
}

TEST(Distributions, MomentumOfGroundIsUniform) {
  const std::vector<double> p = momentum_distribution(basis_state(4, 0));
  for (double x : p) EXPECT_NEAR(x, 1.0 / 16.0, 1e-15);
}

TEST(Distributions, MomentumCircuitMatchesDenseDft) {
  std::mt19937_64 rng(9);
  for (int L = 1; L <= 6; ++L) {
    const oracle::Vector psi = oracle::random_state(L, rng);
    const oracle::Vector tilde = oracle::dft(L) * psi;
    const std::vector<double> p = momentum_distribution(oracle::to_state(L, psi));
    double total = 0.0;
    for (Eigen::Index k = 0; k < tilde.size(); ++k) {
      EXPECT_NEAR(p[static_cast<std::size_t>(k)], std::norm(tilde[k]), 1e-10);
      total += p[static_cast<std::size_t>(k)];
    }
    EXPECT_NEAR(total, 1.0, 1e-10);
  }
}

TEST(Distributions, RequireNormalizedState) {
  StateVector s(2, Amplitudes<double>::Constant(4, 1.0));
  EXPECT_THROW(position_distribution(s), DomainError);
  EXPECT_THROW(momentum_distribution(s), DomainError);
}

TEST(Entropy, BasisAndUniform) {
  EXPECT_EQ(shannon_entropy(position_distribution(basis_state(5, 3))), 0.0);
  const std::vector<double> uniform(32, 1.0 / 32.0);
  EXPECT_NEAR(shannon_entropy(uniform), 5.0 * std::log(2.0), 1e-14);
  EXPECT_EQ(shannon_entropy(std::vector<double>{0.5, 0.0, 0.5}), std::log(2.0));
}

TEST(Entropy, BoundsOnRandomStates) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const int L = 1 + trial % 6;
    const StateVector psi = oracle::to_state(L, oracle::random_state(L, rng));
    for (double h : {shannon_entropy(position_distribution(psi)), shannon_entropy(momentum_distribution(psi))}) {
      EXPECT_GE(h, 0.0);
      EXPECT_LE(h, L * std::log(2.0) + 1e-9);
    }
  }
}

// Frozen from |tr T'^n|^2 / D with T' assembled and powered in numpy.
TEST(FormFactor, FrozenValues) {
  const std::vector<double> two = form_factor(2, 6);
  const std::vector<double> two_expected{0.25, 0.25, 0.625, 0.5, 1.8125, 1.5625};
  ASSERT_EQ(two.size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(two[i], two_expected[i], 1e-12);

  const std::vector<double> three = form_factor(3, 6);
  const std::vector<double> three_expected{0.1875, 0.15625, 0.7339150429449545, 0.6328125, 0.584252119120793,
                                           0.4616274355825683};
  for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(three[i], three_expected[i], 1e-12);
}

TEST(FormFactor, AgainstOracleTraces) {
  for (int L = 1; L <= 5; ++L) {
    const std::vector<double> k = form_factor(L, 8);
    const oracle::Matrix t = oracle::baker(L);
    oracle::Matrix power = oracle::eye(t.rows());
    for (int n = 1; n <= 8; ++n) {
      power = t * power;
      EXPECT_NEAR(k[static_cast<std::size_t>(n - 1)], std::norm(power.trace()) / static_cast<double>(t.rows()), 1e-10);
      EXPECT_GE(k[static_cast<std::size_t>(n - 1)], 0.0);
    }
  }
}

TEST(FormFactor, EdgeCases) {
  EXPECT_NEAR(form_factor(1, 1).front(), 0.0, 1e-30);
  EXPECT_EQ(form_factor(3, 2, 0).front(), 8.0);
  EXPECT_EQ(form_factor(3, 2, 0).size(), 3u);
  EXPECT_THROW(form_factor(11, 2), SizeError);
  EXPECT_THROW(form_factor(3, 0), DomainError);
}

TEST(Echo, ZeroDeltaGivesUnitFidelityExactly) {
  EchoConfig cfg{.qubits = 3, .steps = 25, .delta = 0.0, .ensemble = 4, .seed = 123};
  const auto runs = loschmidt_echo(cfg);
  ASSERT_EQ(runs.size(), 4u);
  StateVector reference = basis_state(3, 0);
  std::vector<double> expected_entropy{shannon_entropy(position_distribution(reference))};
  for (int n = 1; n <= cfg.steps; ++n) {
    reference = iterate(reference, 1);
    expected_entropy.push_back(shannon_entropy(position_distribution(reference)));
  }
  for (const Trajectory& t : runs) {
    ASSERT_EQ(t.size(), 26u);
    for (const TrajectoryRecord& r : t) {
      EXPECT_EQ(r.fidelity, 1.0);
      EXPECT_EQ(r.position_entropy, expected_entropy[static_cast<std::size_t>(r.step)]);
    }
  }
}

TEST(Echo, ReproducibleAndThreadIndependent) {
  EchoConfig cfg{.qubits = 4, .steps = 12, .delta = 0.2, .ensemble = 7, .seed = 99};
  const auto a = loschmidt_echo(cfg, 1);
  const auto b = loschmidt_echo(cfg, 1);
  const auto c = loschmidt_echo(cfg, 3);
  for (std::size_t m = 0; m < a.size(); ++m)
    for (std::size_t n = 0; n < a[m].size(); ++n) {
      for (const auto* other : {&b, &c}) {
        EXPECT_EQ(a[m][n].fidelity, (*other)[m][n].fidelity);
        EXPECT_EQ(a[m][n].position_entropy, (*other)[m][n].position_entropy);
        EXPECT_EQ(a[m][n].momentum_entropy, (*other)[m][n].momentum_entropy);
      }
    }
  // distinct members see distinct kicks
  EXPECT_NE(a[0][5].fidelity, a[1][5].fidelity);
}

TEST(Echo, InvariantsHold) {
  EchoConfig cfg{.qubits = 5, .steps = 30, .delta = 0.5, .ensemble = 5, .seed = 1};
  for (const Trajectory& t : loschmidt_echo(cfg)) {
    for (const TrajectoryRecord& r : t) {
      EXPECT_NEAR(r.norm, 1.0, 1e-9);
      EXPECT_GE(r.fidelity, 0.0);
      EXPECT_LE(r.fidelity, 1.0 + 1e-9);
      for (double h : {r.position_entropy, r.momentum_entropy}) {
        EXPECT_GE(h, 0.0);
        EXPECT_LE(h, 5 * std::log(2.0) + 1e-9);
      }
    }
  }
}

TEST(Echo, FidelityOrderedByDelta) {
  std::vector<EnsembleStat> stats;
  for (double delta : {0.0, 0.01, 0.1}) {
    EchoConfig cfg{.qubits = 3, .steps = 10, .delta = delta, .ensemble = 200, .seed = 2026};
    const auto runs = loschmidt_echo(cfg);
    stats.push_back(mean_fidelity(runs, 10));
  }
  for (std::size_t i = 0; i + 1 < stats.size(); ++i) {
    const double tol = 3.0 * std::hypot(stats[i].standard_error, stats[i + 1].standard_error);
    EXPECT_LE(stats[i + 1].mean, stats[i].mean + tol);
  }
  EXPECT_LT(stats[2].mean, stats[0].mean);
}

TEST(Echo, PerturbedStepMatchesDenseKickTimesBaker) {
  std::mt19937_64 rng(5);
  for (int L = 1; L <= 6; ++L) {
    const oracle::Vector psi = oracle::random_state(L, rng);
    std::mt19937_64 kick_rng(L);
    const std::vector<double> angles = kick_angles(kick_rng, L, 0.3);
    oracle::Matrix kick = oracle::eye(std::int64_t{1} << L);
    for (int k = 0; k < L; ++k) {
      oracle::Matrix local = oracle::eye(2);
      local(1, 1) = std::exp(oracle::cd(0, angles[static_cast<std::size_t>(k)]));
      kick = oracle::on_qubit(L, k, local) * kick;
    }
    const oracle::Vector expected = kick * oracle::baker(L) * psi;
    StateVector out = iterate(oracle::to_state(L, psi), 1);
    apply_phase_kick<double>(out, angles);
    EXPECT_LE((out.amplitudes() - expected).cwiseAbs().maxCoeff(), 1e-10) << "L=" << L;
  }
}

TEST(Echo, KickAnglesWithinRange) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i)
    for (double a : kick_angles(rng, 4, 0.25)) {
      EXPECT_GE(a, -0.25);
      EXPECT_LE(a, 0.25);
    }
}

TEST(Echo, MemberSeedsDistinct) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t m = 0; m < 1000; ++m) seen.insert(member_seed(42, m));
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_NE(member_seed(1, 0), member_seed(2, 0));
}

TEST(Echo, Validation) {
  EXPECT_THROW(loschmidt_echo({.qubits = 3, .steps = -1}), DomainError);
  EXPECT_THROW(loschmidt_echo({.qubits = 3, .steps = 1, .delta = -0.1}), DomainError);
  EXPECT_THROW(loschmidt_echo({.qubits = 3, .steps = 1, .delta = 0.1, .ensemble = 0}), DomainError);
}

}  // namespace
}  // namespace qbaker
