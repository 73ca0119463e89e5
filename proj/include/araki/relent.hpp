#pragma once

#include <limits>
#include <vector>

#include "araki/linalg.hpp"
#include "araki/random.hpp"

namespace araki {

/// Unit-trace positive semidefinite matrix. Eigenvalues in [-1e-10, 0] are
/// clamped to zero and the spectrum is renormalized to sum 1; anything more
/// negative is rejected.
class DensityMatrix {
 public:
  static constexpr double kHermitianTol = 1e-12;
  static constexpr double kNegativeTol = 1e-10;
  static constexpr double kTraceTol = 1e-10;

  explicit DensityMatrix(const MatrixXc& m);

  static DensityMatrix pure(const Vector<cplx>& psi);
  static DensityMatrix maximally_mixed(Index dim);
  static DensityMatrix diagonal(const RealVector& probabilities);

  Index dim() const { return mat_.rows(); }
  const MatrixXc& matrix() const { return mat_; }
  /// Clamped eigenvalues, ascending.
  const RealVector& eigenvalues() const { return values_; }
  const MatrixXc& eigenvectors() const { return vectors_; }

 private:
  MatrixXc mat_;
  RealVector values_;
  MatrixXc vectors_;
};

struct BipartiteShape {
  Index dim_a = 1;
  Index dim_b = 1;
  Index total() const { return dim_a * dim_b; }
};

enum class Factor { A, B };

/// Conditional expectation that traces out `traced` and replaces it by the
/// normalized identity: x -> (1/d) 1 (x) Tr_A x, or Tr_B x (x) (1/d) 1.
struct TraceExpectation {
  BipartiteShape shape;
  Factor traced = Factor::A;

  Index traced_dim() const { return traced == Factor::A ? shape.dim_a : shape.dim_b; }
};

constexpr double kInfinity = std::numeric_limits<double>::infinity();

double von_neumann_entropy(const DensityMatrix& rho);

/// Tr(rho ln rho - rho ln sigma); +inf when supp(rho) is not inside supp(sigma).
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Relative entropy of the unnormalized functionals lam*rho and lam2*sigma.
double scaled_relative_entropy(double lam, const DensityMatrix& rho, double lam2,
                               const DensityMatrix& sigma);

/// Partial trace over the `traced` factor.
MatrixXc partial_trace(const MatrixXc& x, const BipartiteShape& shape, Factor traced);

/// Reduced state on the factor that is kept.
DensityMatrix reduced_state(const DensityMatrix& rho, const BipartiteShape& shape, Factor traced);

struct MutualInformationPaths {
  double entropy_path = 0.0;           // S(A) + S(B) - S(AB)
  double relative_entropy_path = 0.0;  // S(rho_AB, rho_A (x) rho_B)
};

MutualInformationPaths mutual_information_paths(const DensityMatrix& rho_ab,
                                                const BipartiteShape& shape);

/// S(A) + S(B) - S(AB). Throws InternalError if the relative-entropy route
/// disagrees by more than 1e-8.
double mutual_information(const DensityMatrix& rho_ab, const BipartiteShape& shape);

MatrixXc conditional_expectation(const MatrixXc& x, const TraceExpectation& e);

/// Density matrix of the functional omega o E.
DensityMatrix expectation_state(const DensityMatrix& rho, const TraceExpectation& e);

struct IndexGap {
  double s = 0.0;
  double bound = 0.0;
};

/// s = S(rho, rho o E) against the index bound ln(k^2) for E over k (x) k.
/// Throws InequalityViolation when s > bound + 1e-8.
IndexGap entropy_index_gap(Index k, const DensityMatrix& rho, const TraceExpectation& e);

/// Relative entropies of the restrictions to the increasing chain
/// M_{d0} (x) 1, M_{d0} (x) M_{d1} (x) 1, ..., full algebra, for a tensor
/// factorization with the given factor dimensions.
std::vector<double> restricted_relative_entropy_chain(const DensityMatrix& rho,
                                                      const DensityMatrix& sigma,
                                                      const std::vector<Index>& factor_dims);

/// Minimum eigenvalue of E(a) - lambda * a.
double pimsner_popa_margin(const MatrixXc& a, const TraceExpectation& e, double lambda);

/// Best constant lambda with E(a) >= lambda a, estimated by minimizing over
/// `samples` random rank-one projections plus the maximally entangled vector.
double pimsner_popa_constant_estimate(const TraceExpectation& e, int samples, Rng& rng);

}  // namespace araki
