#include "araki/relent.hpp"

#include <cmath>

#include "araki/errors.hpp"

namespace araki {

namespace {

constexpr double kSupportTol = 1e-10;
constexpr double kIdentityTol = 1e-8;

void check_same_dim(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw ShapeError("relative_entropy: dimension mismatch");
}

void check_shape(Index dim, const BipartiteShape& shape) {
  if (shape.dim_a < 1 || shape.dim_b < 1 || shape.total() != dim)
    throw ShapeError("bipartite shape does not match matrix dimension");
}

}  // namespace

DensityMatrix::DensityMatrix(const MatrixXc& m) {
  if (m.rows() != m.cols() || m.rows() == 0) throw ShapeError("DensityMatrix: matrix must be square and nonempty");
  if (hermitian_defect(m) > kHermitianTol * tolerance_scale(m))
    throw InvalidStateError("DensityMatrix: matrix is not Hermitian");
  const double tr = m.trace().real();
  if (std::abs(tr - 1.0) > kTraceTol) throw InvalidStateError("DensityMatrix: trace differs from 1");
  mat_ = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<MatrixXc> es(mat_);
  values_ = es.eigenvalues();
  vectors_ = es.eigenvectors();
  for (Index i = 0; i < values_.size(); ++i) {
    if (values_(i) < -kNegativeTol) throw InvalidStateError("DensityMatrix: negative eigenvalue");
    if (values_(i) < 0.0) values_(i) = 0.0;
  }
  // Clamping can push the spectrum's sum above 1 by up to kNegativeTol; keep it a probability vector.
  values_ /= values_.sum();
}

DensityMatrix DensityMatrix::pure(const Vector<cplx>& psi) {
  const Vector<cplx> v = psi / psi.norm();
  return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(Index dim) {
  return DensityMatrix(MatrixXc::Identity(dim, dim) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::diagonal(const RealVector& probabilities) {
  return DensityMatrix(probabilities.cast<cplx>().asDiagonal().toDenseMatrix());
}

double von_neumann_entropy(const DensityMatrix& rho) {
  double s = 0.0;
  for (Index i = 0; i < rho.eigenvalues().size(); ++i) s -= xlogx(rho.eigenvalues()(i));
  return s;
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  check_same_dim(rho, sigma);
  const RealVector& mu = sigma.eigenvalues();
  const MatrixXc& v = sigma.eigenvectors();

  // Kernel of sigma applied to rho.
  Index kernel = 0;
  while (kernel < mu.size() && mu(kernel) <= kSupportTol) ++kernel;
  if (kernel > 0) {
    const MatrixXc q = v.leftCols(kernel);
    if ((q.adjoint() * rho.matrix()).norm() > kSupportTol) return kInfinity;
  }

  const MatrixXc rotated = v.adjoint() * rho.matrix() * v;
  double cross = 0.0;
  for (Index j = kernel; j < mu.size(); ++j) cross += rotated(j, j).real() * std::log(mu(j));
  return -von_neumann_entropy(rho) - cross;
}

double scaled_relative_entropy(double lam, const DensityMatrix& rho, double lam2,
                               const DensityMatrix& sigma) {
  if (!(lam > 0.0) || !(lam2 > 0.0)) throw DomainError("scaled_relative_entropy: scales must be positive");
  const double s = relative_entropy(rho, sigma);
  if (std::isinf(s)) return s;
  return lam * s + lam * std::log(lam / lam2);
}

MatrixXc partial_trace(const MatrixXc& x, const BipartiteShape& shape, Factor traced) {
  check_shape(x.rows(), shape);
  if (x.cols() != x.rows()) throw ShapeError("partial_trace: matrix is not square");
  const Index da = shape.dim_a;
  const Index db = shape.dim_b;
  if (traced == Factor::A) {
    MatrixXc out = MatrixXc::Zero(db, db);
    for (Index a = 0; a < da; ++a) out += x.block(a * db, a * db, db, db);
    return out;
  }
  MatrixXc out(da, da);
  for (Index i = 0; i < da; ++i)
    for (Index j = 0; j < da; ++j) out(i, j) = x.block(i * db, j * db, db, db).trace();
  return out;
}

DensityMatrix reduced_state(const DensityMatrix& rho, const BipartiteShape& shape, Factor traced) {
  return DensityMatrix(partial_trace(rho.matrix(), shape, traced));
}

MutualInformationPaths mutual_information_paths(const DensityMatrix& rho_ab,
                                                const BipartiteShape& shape) {
  check_shape(rho_ab.dim(), shape);
  const DensityMatrix rho_a = reduced_state(rho_ab, shape, Factor::B);
  const DensityMatrix rho_b = reduced_state(rho_ab, shape, Factor::A);
  MutualInformationPaths out;
  out.entropy_path = von_neumann_entropy(rho_a) + von_neumann_entropy(rho_b) - von_neumann_entropy(rho_ab);
  const DensityMatrix product(kron(rho_a.matrix(), rho_b.matrix()));
  out.relative_entropy_path = relative_entropy(rho_ab, product);
  return out;
}

double mutual_information(const DensityMatrix& rho_ab, const BipartiteShape& shape) {
  const auto paths = mutual_information_paths(rho_ab, shape);
  if (!(std::abs(paths.entropy_path - paths.relative_entropy_path) <= kIdentityTol))
    throw InternalError("mutual_information: entropy and relative-entropy routes disagree");
  return paths.entropy_path;
}

MatrixXc conditional_expectation(const MatrixXc& x, const TraceExpectation& e) {
  check_shape(x.rows(), e.shape);
  const MatrixXc reduced = partial_trace(x, e.shape, e.traced);
  const Index d = e.traced_dim();
  const MatrixXc id = MatrixXc::Identity(d, d) / static_cast<double>(d);
  return e.traced == Factor::A ? kron(id, reduced) : kron(reduced, id);
}

DensityMatrix expectation_state(const DensityMatrix& rho, const TraceExpectation& e) {
  // E is self-adjoint for the trace pairing, so omega o E has density E(rho).
  MatrixXc m = conditional_expectation(rho.matrix(), e);
  m /= m.trace().real();
  return DensityMatrix(m);
}

IndexGap entropy_index_gap(Index k, const DensityMatrix& rho, const TraceExpectation& e) {
  if (k < 1) throw DomainError("entropy_index_gap: k must be positive");
  if (e.shape.dim_a != k || e.shape.dim_b != k)
    throw ShapeError("entropy_index_gap: expectation must act on k (x) k");
  if (rho.dim() != k * k) throw ShapeError("entropy_index_gap: state must have dimension k^2");
  IndexGap gap;
  gap.s = relative_entropy(rho, expectation_state(rho, e));
  gap.bound = std::log(static_cast<double>(k * k));
  if (gap.s > gap.bound + kIdentityTol)
    throw InequalityViolation("entropy_index_gap: index bound exceeded", gap.bound - gap.s);
  return gap;
}

std::vector<double> restricted_relative_entropy_chain(const DensityMatrix& rho,
                                                      const DensityMatrix& sigma,
                                                      const std::vector<Index>& factor_dims) {
  check_same_dim(rho, sigma);
  Index total = 1;
  for (Index d : factor_dims) {
    if (d < 1) throw ShapeError("restricted_relative_entropy_chain: factor dimension must be positive");
    total *= d;
  }
  if (total != rho.dim()) throw ShapeError("restricted_relative_entropy_chain: factors do not multiply to dim");

  std::vector<double> chain;
  Index kept = 1;
  for (Index d : factor_dims) {
    kept *= d;
    const BipartiteShape shape{kept, total / kept};
    if (shape.dim_b == 1) {
      chain.push_back(relative_entropy(rho, sigma));
    } else {
      chain.push_back(relative_entropy(reduced_state(rho, shape, Factor::B),
                                       reduced_state(sigma, shape, Factor::B)));
    }
  }
  return chain;
}

double pimsner_popa_margin(const MatrixXc& a, const TraceExpectation& e, double lambda) {
  const MatrixXc diff = conditional_expectation(a, e) - lambda * a;
  return min_eigenvalue(MatrixXc((diff + diff.adjoint()) / 2.0));
}

double pimsner_popa_constant_estimate(const TraceExpectation& e, int samples, Rng& rng) {
  const Index n = e.shape.total();
  // For a = v v*, the largest admissible lambda is 1 / <v, E(a)^+ v>.
  auto best_for = [&](const Vector<cplx>& raw) {
    const Vector<cplx> v = raw / raw.norm();
    const MatrixXc ea = conditional_expectation(v * v.adjoint(), e);
    const MatrixXc pinv = hermitian_function(ea, [](double x) { return x > 1e-12 ? 1.0 / x : 0.0; });
    return 1.0 / (v.adjoint() * pinv * v)(0, 0).real();
  };

  Vector<cplx> entangled = Vector<cplx>::Zero(n);
  const Index m = std::min(e.shape.dim_a, e.shape.dim_b);
  for (Index i = 0; i < m; ++i) entangled(i * e.shape.dim_b + i) = 1.0;
  double best = best_for(entangled);
  for (int s = 0; s < samples; ++s) best = std::min(best, best_for(random_gaussian<cplx>(n, 1, rng).col(0)));
  return best;
}

}  // namespace araki
