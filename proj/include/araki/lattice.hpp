#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include "araki/errors.hpp"

namespace araki {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

template <typename Scalar>
using ExactMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using ExactVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// "p/q" with q > 0 (q = 1 for integers).
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& s);

/// Symmetric positive definite integer Gram matrix of a lattice basis.
class GramMatrix {
 public:
  /// Throws DomainError unless symmetric with all leading principal minors > 0.
  explicit GramMatrix(ExactMatrix<BigInt> entries);
  static GramMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  Eigen::Index rank() const { return entries_.rows(); }
  const ExactMatrix<BigInt>& entries() const { return entries_; }
  const BigInt& operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }

 private:
  ExactMatrix<BigInt> entries_;
};

/// Determinant by fraction-free (Bareiss) elimination, with row pivoting.
BigInt bareiss_determinant(ExactMatrix<BigInt> m);

/// Leading principal minors det(G[0..k, 0..k]) for k = 1..n, without pivoting.
std::vector<BigInt> leading_principal_minors(const ExactMatrix<BigInt>& m);

/// Solves a x = b exactly for a nonsingular integer matrix via Bareiss
/// elimination and rational back substitution. Throws InternalError if singular.
ExactVector<Rational> solve_fraction_free(const ExactMatrix<BigInt>& a, const ExactVector<BigInt>& b);

/// Isometric embedding of a lattice basis into Q^r.
///
/// The coordinates come in blocks: block b has `block_sizes[b]` coordinates and
/// vector i takes the single value `values(i, b)` on all of them. Block 0 comes
/// from the first basis vector, block b > 0 from the residual of step b.
/// r = sum of the block sizes, which can be far too large to expand.
class RationalEmbedding {
 public:
  std::vector<BigInt> block_sizes;
  ExactMatrix<Rational> values;      // n x blocks
  std::vector<Rational> residuals;   // step residual p/q per basis vector (step 0: G_11)
  BigInt k = 1;                      // lcm of all denominators

  Eigen::Index rank() const { return values.rows(); }
  BigInt dimension() const;
  Rational inner(Eigen::Index i, Eigen::Index j) const;
  ExactMatrix<Rational> gram() const;
  /// Dense n x r coordinates, or nullopt when r > max_dim.
  std::optional<ExactMatrix<Rational>> expand(long long max_dim = 4096) const;
};

/// Inductive construction: A_1 = (1, ..., 1) of length G_11; step n solves the
/// Gram system for the projection onto span(A_1..A_{n-1}), and appends p*q
/// coordinates equal to 1/q where p/q = G_nn - |projection|^2 > 0.
RationalEmbedding embed_rational(const GramMatrix& g);

struct IntegralEmbedding {
  BigInt k = 1;
  std::vector<BigInt> block_sizes;
  ExactMatrix<BigInt> values;  // k * A in block form

  ExactMatrix<BigInt> gram() const;
  std::optional<ExactMatrix<BigInt>> expand(long long max_dim = 4096) const;
};

/// Minimal k with k*A integral, and the integer vectors k*A.
IntegralEmbedding integralize(const RationalEmbedding& e);

/// |L / kL| as sqrt(det(Gram(kL)) / det(Gram(L))) = k^n.
BigInt sublattice_index(const GramMatrix& g, const BigInt& k);

/// All diagonal entries even.
bool is_even(const GramMatrix& g);

/// Cartan-type Gram matrices of the simply laced root lattices A_n, D_n, E_8.
GramMatrix root_lattice_gram(const std::string& name);

}  // namespace araki
