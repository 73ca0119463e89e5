#include "araki/lattice.hpp"

#include <algorithm>

#include <boost/integer/common_factor.hpp>

namespace araki {

using Eigen::Index;

std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    const BigInt q(s.substr(slash + 1));
    if (q == 0) throw DomainError("parse_rational: zero denominator");
    return Rational(BigInt(s.substr(0, slash))) / Rational(q);
  } catch (const std::runtime_error&) {
    throw DomainError("parse_rational: cannot parse '" + s + "'");
  }
}

GramMatrix::GramMatrix(ExactMatrix<BigInt> entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0)
    throw DomainError("GramMatrix: must be square and nonempty");
  for (Index i = 0; i < entries_.rows(); ++i)
    for (Index j = 0; j < i; ++j)
      if (entries_(i, j) != entries_(j, i)) throw DomainError("GramMatrix: not symmetric");
  for (const auto& minor : leading_principal_minors(entries_))
    if (minor <= 0) throw DomainError("GramMatrix: not positive definite");
}

GramMatrix GramMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  const auto n = static_cast<Index>(rows.size());
  ExactMatrix<BigInt> m(n, n);
  for (Index i = 0; i < n; ++i) {
    if (static_cast<Index>(rows[static_cast<std::size_t>(i)].size()) != n) throw DomainError("GramMatrix: ragged rows");
    for (Index j = 0; j < n; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return GramMatrix(std::move(m));
}

BigInt bareiss_determinant(ExactMatrix<BigInt> m) {
  const Index n = m.rows();
  if (n != m.cols()) throw DomainError("bareiss_determinant: matrix not square");
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (Index k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      Index swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      m.row(k).swap(m.row(swap));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::vector<BigInt> leading_principal_minors(const ExactMatrix<BigInt>& m) {
  // Without pivoting the k-th Bareiss pivot is the k-th leading minor.
  const Index n = m.rows();
  ExactMatrix<BigInt> w = m;
  std::vector<BigInt> minors;
  BigInt prev = 1;
  for (Index k = 0; k < n; ++k) {
    minors.push_back(w(k, k));
    if (w(k, k) == 0) {
      // Later minors need pivoting; compute them directly.
      for (Index j = k + 1; j < n; ++j) minors.push_back(bareiss_determinant(m.topLeftCorner(j + 1, j + 1)));
      return minors;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j) w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
    prev = w(k, k);
  }
  return minors;
}

ExactVector<Rational> solve_fraction_free(const ExactMatrix<BigInt>& a, const ExactVector<BigInt>& b) {
  const Index n = a.rows();
  if (a.cols() != n || b.size() != n) throw DomainError("solve_fraction_free: shape mismatch");
  ExactMatrix<BigInt> w(n, n + 1);
  w.leftCols(n) = a;
  w.col(n) = b;
  BigInt prev = 1;
  for (Index k = 0; k < n; ++k) {
    if (w(k, k) == 0) {
      Index swap = k + 1;
      while (swap < n && w(swap, k) == 0) ++swap;
      if (swap == n) throw InternalError("solve_fraction_free: singular system");
      w.row(k).swap(w.row(swap));
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j <= n; ++j) w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
      w(i, k) = 0;
    }
    prev = w(k, k);
  }
  ExactVector<Rational> x(n);
  for (Index i = n - 1; i >= 0; --i) {
    Rational acc(w(i, n));
    for (Index j = i + 1; j < n; ++j) acc -= Rational(w(i, j)) * x(j);
    x(i) = acc / Rational(w(i, i));
  }
  return x;
}

BigInt RationalEmbedding::dimension() const {
  BigInt r = 0;
  for (const auto& m : block_sizes) r += m;
  return r;
}

Rational RationalEmbedding::inner(Index i, Index j) const {
  Rational acc = 0;
  // During construction only the first block_sizes.size() columns are populated.
  const auto blocks = std::min<Index>(values.cols(), static_cast<Index>(block_sizes.size()));
  for (Index b = 0; b < blocks; ++b)
    acc += Rational(block_sizes[static_cast<std::size_t>(b)]) * values(i, b) * values(j, b);
  return acc;
}

ExactMatrix<Rational> RationalEmbedding::gram() const {
  ExactMatrix<Rational> g(rank(), rank());
  for (Index i = 0; i < rank(); ++i)
    for (Index j = 0; j < rank(); ++j) g(i, j) = inner(i, j);
  return g;
}

namespace {

template <typename Scalar>
std::optional<ExactMatrix<Scalar>> expand_blocks(const std::vector<BigInt>& sizes, const ExactMatrix<Scalar>& values,
                                                 long long max_dim) {
  BigInt r = 0;
  for (const auto& m : sizes) r += m;
  if (r > max_dim) return std::nullopt;
  const Index dim = static_cast<Index>(r.convert_to<long long>());
  ExactMatrix<Scalar> out(values.rows(), dim);
  Index col = 0;
  for (std::size_t b = 0; b < sizes.size(); ++b) {
    const auto m = static_cast<Index>(sizes[b].convert_to<long long>());
    for (Index c = 0; c < m; ++c, ++col)
      for (Index i = 0; i < values.rows(); ++i) out(i, col) = values(i, static_cast<Index>(b));
  }
  return out;
}

}  // namespace

std::optional<ExactMatrix<Rational>> RationalEmbedding::expand(long long max_dim) const {
  return expand_blocks(block_sizes, values, max_dim);
}

RationalEmbedding embed_rational(const GramMatrix& g) {
  const Index n = g.rank();
  RationalEmbedding e;
  e.values = ExactMatrix<Rational>::Zero(n, n);

  // Base step: r = G_11 coordinates equal to 1.
  e.block_sizes.push_back(g(0, 0));
  e.values(0, 0) = 1;
  e.residuals.push_back(Rational(g(0, 0)));

  for (Index step = 1; step < n; ++step) {
    const ExactMatrix<BigInt> sub = g.entries().topLeftCorner(step, step);
    const ExactVector<BigInt> rhs = g.entries().col(step).head(step);
    const ExactVector<Rational> x = solve_fraction_free(sub, rhs);

    // Projection onto span(A_1..A_step), blockwise.
    for (Index b = 0; b < step; ++b) {
      Rational v = 0;
      for (Index j = 0; j < step; ++j) v += x(j) * e.values(j, b);
      e.values(step, b) = v;
    }
    const Rational residual = Rational(g(step, step)) - e.inner(step, step);
    if (residual <= 0) throw DomainError("embed_rational: non-positive residual, Gram matrix is not positive definite");
    const BigInt p = boost::multiprecision::numerator(residual);
    const BigInt q = boost::multiprecision::denominator(residual);
    e.block_sizes.push_back(p * q);
    e.values(step, step) = Rational(BigInt(1), q);
    e.residuals.push_back(residual);
  }

  BigInt k = 1;
  for (Index i = 0; i < n; ++i)
    for (Index b = 0; b < n; ++b) k = boost::integer::lcm(k, BigInt(boost::multiprecision::denominator(e.values(i, b))));
  e.k = k;

  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j <= i; ++j)
      if (e.inner(i, j) != Rational(g(i, j))) throw InternalError("embed_rational: Gram matrix not reproduced");
  return e;
}

ExactMatrix<BigInt> IntegralEmbedding::gram() const {
  const Index n = values.rows();
  ExactMatrix<BigInt> out(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      BigInt acc = 0;
      for (Index b = 0; b < values.cols(); ++b) acc += block_sizes[static_cast<std::size_t>(b)] * values(i, b) * values(j, b);
      out(i, j) = acc;
    }
  return out;
}

std::optional<ExactMatrix<BigInt>> IntegralEmbedding::expand(long long max_dim) const {
  return expand_blocks(block_sizes, values, max_dim);
}

IntegralEmbedding integralize(const RationalEmbedding& e) {
  BigInt k = 1;
  for (Index i = 0; i < e.values.rows(); ++i)
    for (Index b = 0; b < e.values.cols(); ++b)
      k = boost::integer::lcm(k, BigInt(boost::multiprecision::denominator(e.values(i, b))));
  IntegralEmbedding out;
  out.k = k;
  out.block_sizes = e.block_sizes;
  out.values.resize(e.values.rows(), e.values.cols());
  for (Index i = 0; i < e.values.rows(); ++i)
    for (Index b = 0; b < e.values.cols(); ++b) {
      const Rational scaled = Rational(k) * e.values(i, b);
      if (boost::multiprecision::denominator(scaled) != 1) throw InternalError("integralize: scaled entry not integral");
      out.values(i, b) = boost::multiprecision::numerator(scaled);
    }
  return out;
}

BigInt sublattice_index(const GramMatrix& g, const BigInt& k) {
  if (k < 1) throw DomainError("sublattice_index: k must be at least 1");
  const BigInt det = bareiss_determinant(g.entries());
  ExactMatrix<BigInt> scaled = g.entries();
  for (Index i = 0; i < scaled.rows(); ++i)
    for (Index j = 0; j < scaled.cols(); ++j) scaled(i, j) *= k * k;
  const BigInt ratio = bareiss_determinant(scaled) / det;  // = k^{2n}
  const BigInt index = boost::multiprecision::sqrt(ratio);
  if (index * index != ratio) throw InternalError("sublattice_index: determinant ratio is not a square");
  return index;
}

bool is_even(const GramMatrix& g) {
  for (Index i = 0; i < g.rank(); ++i)
    if (g(i, i) % 2 != 0) return false;
  return true;
}

GramMatrix root_lattice_gram(const std::string& name) {
  if (name.size() < 2) throw DomainError("root_lattice_gram: unknown lattice " + name);
  const char family = name[0];
  int n = 0;
  try {
    n = std::stoi(name.substr(1));
  } catch (const std::exception&) {
    throw DomainError("root_lattice_gram: unknown lattice " + name);
  }
  std::vector<std::vector<long long>> g(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n), 0));
  auto link = [&](int i, int j) {
    g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -1;
    g[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = -1;
  };
  for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
  if ((family == 'A' || family == 'a') && n >= 1) {
    for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
  } else if ((family == 'D' || family == 'd') && n >= 4) {
    // Chain 0-1-...-(n-2) with node n-1 attached to n-3.
    for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
    link(n - 3, n - 1);
  } else if ((family == 'E' || family == 'e') && n == 8) {
    // Bourbaki labelling: 1-3-4-5-6-7-8 with 2 attached to 4.
    link(0, 2);
    link(2, 3);
    link(3, 4);
    link(4, 5);
    link(5, 6);
    link(6, 7);
    link(1, 3);
  } else {
    throw DomainError("root_lattice_gram: unknown lattice " + name);
  }
  return GramMatrix::from_rows(g);
}

}  // namespace araki
