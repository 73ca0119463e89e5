#include "doctest.h"

#include <cmath>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "araki/random.hpp"
#include "araki/relent.hpp"

using namespace araki;

namespace {

const double ln2 = std::log(2.0);

Vector<cplx> bell() {
  Vector<cplx> v = Vector<cplx>::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return v;
}

RealVector probs(std::initializer_list<double> p) {
  RealVector v(static_cast<Index>(p.size()));
  Index i = 0;
  for (double x : p) v(i++) = x;
  return v;
}

}  // namespace

TEST_CASE("von Neumann entropy of simple states") {
  CHECK(von_neumann_entropy(DensityMatrix::diagonal(probs({1.0, 0.0}))) == doctest::Approx(0.0));
  CHECK(von_neumann_entropy(DensityMatrix::diagonal(probs({0.5, 0.5}))) == doctest::Approx(ln2).epsilon(1e-14));

  // Independent 50-digit evaluation of h(1/4).
  using Big = boost::multiprecision::cpp_bin_float_50;
  const Big q = Big(1) / 4, r = Big(3) / 4;
  const double h_quarter = static_cast<double>(-q * log(q) - r * log(r));
  CHECK(std::abs(von_neumann_entropy(DensityMatrix::diagonal(probs({0.25, 0.75}))) - h_quarter) < 1e-14);
}

TEST_CASE("density matrix validation") {
  MatrixXc non_herm(2, 2);
  non_herm << 0.5, 0.1, 0.0, 0.5;
  CHECK_THROWS_AS(DensityMatrix{non_herm}, InvalidStateError);
  CHECK_THROWS_AS(DensityMatrix::diagonal(probs({0.6, 0.6})), InvalidStateError);
  CHECK_THROWS_AS(DensityMatrix::diagonal(probs({1.1, -0.1})), InvalidStateError);

  // Tiny negative eigenvalues are clamped to zero.
  const DensityMatrix clamped = DensityMatrix::diagonal(probs({1.0 + 5e-11, -5e-11}));
  CHECK(clamped.eigenvalues()(0) == 0.0);
  CHECK(von_neumann_entropy(clamped) >= 0.0);
}

TEST_CASE("relative entropy examples") {
  Rng rng(1);
  const DensityMatrix rho(random_density_matrix(3, rng));
  CHECK(std::abs(relative_entropy(rho, rho)) < 1e-12);

  const auto pure0 = DensityMatrix::diagonal(probs({1.0, 0.0}));
  const auto mixed = DensityMatrix::diagonal(probs({0.5, 0.5}));
  CHECK(relative_entropy(pure0, mixed) == doctest::Approx(ln2).epsilon(1e-14));
  CHECK(std::isinf(relative_entropy(mixed, pure0)));
  CHECK_THROWS_AS(relative_entropy(rho, mixed), ShapeError);
}

TEST_CASE("scaled relative entropy") {
  Rng rng(2);
  const DensityMatrix rho(random_density_matrix(3, rng));
  CHECK(std::abs(scaled_relative_entropy(1.0, rho, 1.0, rho)) < 1e-12);
  CHECK(std::abs(scaled_relative_entropy(2.0, rho, 2.0, rho)) < 1e-12);
  const auto pure0 = DensityMatrix::diagonal(probs({1.0, 0.0}));
  const auto mixed = DensityMatrix::diagonal(probs({0.5, 0.5}));
  CHECK(scaled_relative_entropy(2.0, pure0, 1.0, mixed) == doctest::Approx(4.0 * ln2).epsilon(1e-14));
  CHECK_THROWS_AS(scaled_relative_entropy(0.0, rho, 1.0, rho), DomainError);
  CHECK_THROWS_AS(scaled_relative_entropy(1.0, rho, -1.0, rho), DomainError);
}

TEST_CASE("mutual information") {
  const BipartiteShape qubits{2, 2};
  Rng rng(3);
  const DensityMatrix a(random_density_matrix(2, rng));
  const DensityMatrix b(random_density_matrix(2, rng));
  CHECK(std::abs(mutual_information(DensityMatrix(kron(a.matrix(), b.matrix())), qubits)) < 1e-10);

  CHECK(mutual_information(DensityMatrix::pure(bell()), qubits) == doctest::Approx(2.0 * ln2).epsilon(1e-12));
  CHECK(mutual_information(DensityMatrix::diagonal(probs({0.5, 0.0, 0.0, 0.5})), qubits) ==
        doctest::Approx(ln2).epsilon(1e-12));

  CHECK_THROWS_AS(mutual_information(DensityMatrix::pure(bell()), BipartiteShape{2, 3}), ShapeError);

  for (int trial = 0; trial < 50; ++trial) {
    const BipartiteShape shape{2, 3};
    const DensityMatrix rho(random_density_matrix(6, rng, 1 + trial % 6));
    const auto paths = mutual_information_paths(rho, shape);
    CHECK(std::abs(paths.entropy_path - paths.relative_entropy_path) < 1e-8);
  }
}

TEST_CASE("conditional expectation") {
  const TraceExpectation e{{2, 2}, Factor::A};
  CHECK((conditional_expectation(MatrixXc::Identity(4, 4), e) - MatrixXc::Identity(4, 4)).norm() < 1e-15);

  const MatrixXc phi = bell() * bell().adjoint();
  CHECK((conditional_expectation(phi, e) - MatrixXc::Identity(4, 4) / 4.0).norm() < 1e-15);

  Rng rng(4);
  for (int i = 0; i < 10; ++i) {
    const TraceExpectation eb{{2, 3}, i % 2 ? Factor::A : Factor::B};
    const MatrixXc x = random_hermitian<cplx>(6, rng);
    const MatrixXc once = conditional_expectation(x, eb);
    CHECK((conditional_expectation(once, eb) - once).norm() < 1e-12);
    CHECK(std::abs(once.trace() - x.trace()) < 1e-12);
    const MatrixXc a = random_psd<cplx>(6, rng, 1);
    CHECK(min_eigenvalue(conditional_expectation(a, eb)) > -1e-12);
  }
  CHECK_THROWS_AS(conditional_expectation(MatrixXc::Identity(5, 5), e), ShapeError);
}

TEST_CASE("entropy index gap") {
  const TraceExpectation e{{2, 2}, Factor::A};
  Rng rng(5);
  const DensityMatrix sigma(random_density_matrix(2, rng));
  const DensityMatrix invariant(kron(MatrixXc(MatrixXc::Identity(2, 2) / 2.0), sigma.matrix()));
  CHECK(std::abs(entropy_index_gap(2, invariant, e).s) < 1e-12);

  const auto saturated = entropy_index_gap(2, DensityMatrix::pure(bell()), e);
  CHECK(std::abs(saturated.s - 2.0 * ln2) < 1e-9);
  CHECK(saturated.bound == doctest::Approx(std::log(4.0)));

  for (int i = 0; i < 100; ++i) {
    const auto gap = entropy_index_gap(2, DensityMatrix(random_density_matrix(4, rng)), e);
    CHECK(gap.s <= gap.bound + 1e-8);
  }
  CHECK_THROWS_AS(entropy_index_gap(3, DensityMatrix::pure(bell()), e), ShapeError);
}

TEST_CASE("relative entropy laws on random states") {
  Rng rng(6);
  const BipartiteShape shape{2, 3};
  for (int trial = 0; trial < 1000; ++trial) {
    const DensityMatrix rho(random_density_matrix(6, rng, 1 + trial % 6));
    const DensityMatrix sigma(random_density_matrix(6, rng));
    const double s = relative_entropy(rho, sigma);
    REQUIRE(s >= -1e-10);
    const double restricted =
        relative_entropy(reduced_state(rho, shape, Factor::B), reduced_state(sigma, shape, Factor::B));
    REQUIRE(restricted <= s + 1e-8);
  }
}

TEST_CASE("conditional-expectation identity and dominance bound") {
  Rng rng(7);
  const BipartiteShape shape{2, 3};
  const TraceExpectation e{shape, Factor::A};
  for (int trial = 0; trial < 200; ++trial) {
    const DensityMatrix rho(random_density_matrix(6, rng));
    const DensityMatrix psi(random_density_matrix(3, rng));
    const DensityMatrix psi_e(kron(MatrixXc(MatrixXc::Identity(2, 2) / 2.0), psi.matrix()));
    const double lhs = relative_entropy(rho, psi_e);
    const double rhs = relative_entropy(reduced_state(rho, shape, Factor::A), psi) +
                       relative_entropy(rho, expectation_state(rho, e));
    REQUIRE(std::abs(lhs - rhs) < 1e-8);

    const double mu = 0.05 + 0.9 * (trial % 10) / 10.0;
    const DensityMatrix gamma(random_density_matrix(6, rng, 1 + trial % 6));
    const DensityMatrix sigma(MatrixXc(mu * rho.matrix() + (1 - mu) * gamma.matrix()));
    REQUIRE(relative_entropy(rho, sigma) <= std::log(1.0 / mu) + 1e-8);
  }
}

TEST_CASE("restricted relative entropies along an exhausting chain") {
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const DensityMatrix rho(random_density_matrix(12, rng));
    const DensityMatrix sigma(random_density_matrix(12, rng));
    const auto chain = restricted_relative_entropy_chain(rho, sigma, {2, 3, 2});
    REQUIRE(chain.size() == 3);
    CHECK(chain[0] <= chain[1] + 1e-8);
    CHECK(chain[1] <= chain[2] + 1e-8);
    CHECK(std::abs(chain[2] - relative_entropy(rho, sigma)) < 1e-8);
  }
  const DensityMatrix rho(random_density_matrix(4, rng));
  CHECK_THROWS_AS(restricted_relative_entropy_chain(rho, rho, {2, 3}), ShapeError);
}

TEST_CASE("Pimsner-Popa inequality with constant 1/k^2") {
  Rng rng(9);
  for (Index k : {2, 3}) {
    for (Index m : {2, 3}) {
      const TraceExpectation e{{k, m}, Factor::A};
      for (int trial = 0; trial < 50; ++trial) {
        const MatrixXc a = random_psd<cplx>(k * m, rng, 1 + trial % (k * m));
        CHECK(pimsner_popa_margin(a, e, 1.0 / static_cast<double>(k * k)) > -1e-10);
      }
      const double best = pimsner_popa_constant_estimate(e, 200, rng);
      MESSAGE("brute-force Pimsner-Popa constant for k=" << k << ", m=" << m << ": " << best);
      CHECK(best >= 1.0 / static_cast<double>(k * k) - 1e-10);
    }
  }
}
