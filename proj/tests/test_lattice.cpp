#include "doctest.h"

#include <random>
#include <set>

#include "araki/lattice.hpp"

using namespace araki;

namespace {

// Rational LDL^T written from scratch: the pivots d_k of G.
std::vector<Rational> ldl_pivots(const ExactMatrix<BigInt>& g) {
  const Eigen::Index n = g.rows();
  ExactMatrix<Rational> a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = Rational(g(i, j));
  std::vector<Rational> d;
  for (Eigen::Index k = 0; k < n; ++k) {
    d.push_back(a(k, k));
    for (Eigen::Index i = k + 1; i < n; ++i) {
      const Rational l = a(i, k) / a(k, k);
      for (Eigen::Index j = k; j < n; ++j) a(i, j) -= l * a(k, j);
    }
  }
  return d;
}

// Gram of B^T B for a random integer matrix B, retried until positive definite.
GramMatrix random_gram(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> entry(-3, 3);
  for (;;) {
    ExactMatrix<BigInt> b(n + 1, n);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j < n; ++j) b(i, j) = entry(rng);
    ExactMatrix<BigInt> g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        BigInt acc = 0;
        for (int r = 0; r <= n; ++r) acc += b(r, i) * b(r, j);
        g(i, j) = acc;
      }
    if (bareiss_determinant(g) > 0) return GramMatrix(g);
  }
}

template <typename S>
ExactMatrix<S> outer_gram(const ExactMatrix<S>& m) {
  ExactMatrix<S> g(m.rows(), m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.rows(); ++j) {
      S acc = 0;
      for (Eigen::Index c = 0; c < m.cols(); ++c) acc += m(i, c) * m(j, c);
      g(i, j) = acc;
    }
  return g;
}

template <typename S>
bool same(const ExactMatrix<S>& a, const ExactMatrix<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

void check_embedding(const GramMatrix& g) {
  const RationalEmbedding e = embed_rational(g);
  const Eigen::Index n = g.rank();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) REQUIRE(e.inner(i, j) == Rational(g(i, j)));

  const auto pivots = ldl_pivots(g.entries());
  for (Eigen::Index i = 0; i < n; ++i) CHECK(e.residuals[static_cast<std::size_t>(i)] == pivots[static_cast<std::size_t>(i)]);

  BigInt dim = 0;
  for (const auto& m : e.block_sizes) {
    CHECK(m > 0);
    dim += m;
  }
  CHECK(dim == e.dimension());

  const IntegralEmbedding ie = integralize(e);
  CHECK(ie.k == e.k);
  const ExactMatrix<BigInt> kg = ie.gram();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) CHECK(kg(i, j) == ie.k * ie.k * g(i, j));

  BigInt kn = 1;
  for (Eigen::Index i = 0; i < n; ++i) kn *= ie.k;
  CHECK(sublattice_index(g, ie.k) == kn);
}

}  // namespace

TEST_CASE("rational formatting and parsing") {
  CHECK(to_string(Rational(BigInt(3), BigInt(4))) == "3/4");
  CHECK(to_string(Rational(-6, 4)) == "-3/2");
  CHECK(to_string(Rational(5)) == "5/1");
  CHECK(parse_rational("6/8") == Rational(3, 4));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("x"), DomainError);
}

TEST_CASE("Gram matrix validation") {
  CHECK_THROWS_AS(GramMatrix::from_rows({{1, 2}, {2, 1}}), DomainError);
  CHECK_THROWS_AS(GramMatrix::from_rows({{1, 0}, {1, 1}}), DomainError);
  CHECK_THROWS_AS(GramMatrix::from_rows({{1, 0}, {0}}), DomainError);
  CHECK_THROWS_AS(GramMatrix::from_rows({}), DomainError);
}

TEST_CASE("exact determinants and solves") {
  CHECK(bareiss_determinant(root_lattice_gram("A1").entries()) == 2);
  CHECK(bareiss_determinant(root_lattice_gram("A2").entries()) == 3);
  CHECK(bareiss_determinant(root_lattice_gram("A3").entries()) == 4);
  CHECK(bareiss_determinant(root_lattice_gram("D4").entries()) == 4);
  CHECK(bareiss_determinant(root_lattice_gram("E8").entries()) == 1);

  const auto minors = leading_principal_minors(root_lattice_gram("A3").entries());
  REQUIRE(minors.size() == 3);
  CHECK(minors[0] == 2);
  CHECK(minors[1] == 3);
  CHECK(minors[2] == 4);

  ExactMatrix<BigInt> a(2, 2);
  a << BigInt(0), BigInt(1), BigInt(2), BigInt(3);
  ExactVector<BigInt> b(2);
  b << BigInt(1), BigInt(1);
  const auto x = solve_fraction_free(a, b);
  CHECK(x(0) == Rational(-1));
  CHECK(x(1) == Rational(1));
}

TEST_CASE("A1 embeds into Z^2 with k = 1") {
  const RationalEmbedding e = embed_rational(root_lattice_gram("A1"));
  CHECK(e.dimension() == 2);
  CHECK(e.k == 1);
  const auto expanded = e.expand();
  REQUIRE(expanded.has_value());
  CHECK(expanded->cols() == 2);
  CHECK((*expanded)(0, 0) == 1);
  CHECK((*expanded)(0, 1) == 1);
}

TEST_CASE("A2 embedding in closed form") {
  const RationalEmbedding e = embed_rational(root_lattice_gram("A2"));
  // Second vector: -1/2 on the first block of size 2, 1/2 on a block of size p*q = 3*2.
  CHECK(e.residuals[1] == Rational(3, 2));
  CHECK(e.block_sizes[1] == 6);
  CHECK(e.values(1, 0) == Rational(-1, 2));
  CHECK(e.values(1, 1) == Rational(1, 2));
  CHECK(e.k == 2);
  CHECK(e.dimension() == 8);
}

TEST_CASE("root lattices") {
  for (const char* name : {"A1", "A2", "A3", "D4", "E8"}) {
    CAPTURE(name);
    const GramMatrix g = root_lattice_gram(name);
    CHECK(is_even(g));
    check_embedding(g);
  }
  CHECK_THROWS_AS(root_lattice_gram("E7"), DomainError);
  CHECK_THROWS_AS(root_lattice_gram("Q"), DomainError);
  CHECK_FALSE(is_even(GramMatrix::from_rows({{1, 0}, {0, 2}})));
}

TEST_CASE("expanded embeddings reproduce the Gram matrix") {
  for (const char* name : {"A2", "A3"}) {
    const RationalEmbedding e = embed_rational(root_lattice_gram(name));
    const auto m = e.expand();
    REQUIRE(m.has_value());
    CHECK(same(outer_gram(*m), e.gram()));
    const IntegralEmbedding ie = integralize(e);
    const auto mi = ie.expand();
    REQUIRE(mi.has_value());
    CHECK(same(outer_gram(*mi), ie.gram()));
  }
  CHECK_FALSE(embed_rational(root_lattice_gram("E8")).expand(16).has_value());
}

TEST_CASE("random Gram matrices") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    CAPTURE(trial);
    check_embedding(random_gram(rng, 1 + trial % 6));
  }
}

TEST_CASE("index of kL in L by coset enumeration") {
  // Residues of integer coefficient vectors modulo k label the cosets of kL in L.
  for (const char* name : {"A1", "A2", "A3"}) {
    const GramMatrix g = root_lattice_gram(name);
    const int n = static_cast<int>(g.rank());
    for (int k = 1; k <= 3; ++k) {
      std::set<std::vector<int>> cosets;
      std::vector<int> c(static_cast<std::size_t>(n), 0);
      const int span = 2 * k;
      for (;;) {
        std::vector<int> residue(c);
        for (auto& v : residue) v = ((v % k) + k) % k;
        cosets.insert(residue);
        int pos = 0;
        while (pos < n && ++c[static_cast<std::size_t>(pos)] == span) c[static_cast<std::size_t>(pos++)] = 0;
        if (pos == n) break;
      }
      CHECK(sublattice_index(g, BigInt(k)) == BigInt(cosets.size()));
    }
  }
  CHECK_THROWS_AS(sublattice_index(root_lattice_gram("A1"), BigInt(0)), DomainError);
}
