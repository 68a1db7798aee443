#include "dimwit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dimwit/errors.hpp"

namespace dimwit::linalg {

void require_finite(const RealMatrix& m, const char* what) {
  if (!m.allFinite()) throw ValidationError(std::string(what) + " has non-finite entries");
}

void require_finite(const ComplexMatrix& m, const char* what) {
  if (!m.allFinite()) throw ValidationError(std::string(what) + " has non-finite entries");
}

SpectralSummary svd(const RealMatrix& m, SvdMode mode) {
  require_finite(m, "matrix");
  const unsigned flags = mode == SvdMode::Full ? (Eigen::ComputeFullU | Eigen::ComputeFullV)
                                               : (Eigen::ComputeThinU | Eigen::ComputeThinV);
  Eigen::JacobiSVD<RealMatrix> solver(m, flags);

  SpectralSummary out{solver.singularValues(), solver.matrixU(), solver.matrixV()};
  const Eigen::Index paired = out.singular_values.size();
  for (Eigen::Index j = 0; j < out.left_vectors.cols(); ++j) {
    auto u = out.left_vectors.col(j);
    for (Eigen::Index i = 0; i < u.size(); ++i) {
      if (std::abs(u(i)) <= 1e-12) continue;
      if (u(i) < 0.0) {
        u = -u;
        if (j < paired) out.right_vectors.col(j) *= -1.0;
      }
      break;
    }
  }
  return out;
}

RealVector singular_values(const RealMatrix& m) {
  require_finite(m, "matrix");
  if (m.size() == 0) return RealVector{};
  return Eigen::JacobiSVD<RealMatrix>(m).singularValues();
}

double schatten_norm(const RealMatrix& m, double p) {
  if (std::isnan(p) || p < 1.0) throw DomainError("Schatten norm requires p >= 1");
  const RealVector s = singular_values(m);
  if (s.size() == 0) return 0.0;
  if (std::isinf(p)) return s.maxCoeff();
  if (p == 1.0) return s.sum();
  if (p == 2.0) return std::sqrt(s.squaredNorm());
  // Scale by the largest value so large p does not overflow.
  const double top = s.maxCoeff();
  if (top == 0.0) return 0.0;
  return top * std::pow((s / top).array().pow(p).sum(), 1.0 / p);
}

int numerical_rank(const RealMatrix& m, double rel_tol) {
  const RealVector s = singular_values(m);
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double cut = rel_tol * s(0);
  return static_cast<int>((s.array() > cut).count());
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

HermitianEigen hermitian_eig(const ComplexMatrix& m) {
  require_finite(m, "matrix");
  if (m.rows() != m.cols()) throw ValidationError("eigendecomposition needs a square matrix");
  if (!is_hermitian(m)) throw ValidationError("matrix is not Hermitian");
  if (m.size() == 0) return {};

  // Symmetrize away the sub-tolerance anti-Hermitian part.
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) throw ValidationError("eigensolver did not converge");

  HermitianEigen out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

double inner_product(const RealMatrix& p, const RealMatrix& g) {
  if (p.rows() != g.rows() || p.cols() != g.cols()) {
    throw ValidationError("inner product shape mismatch: " + std::to_string(p.rows()) + "x" +
                          std::to_string(p.cols()) + " vs " + std::to_string(g.rows()) + "x" +
                          std::to_string(g.cols()));
  }
  return p.cwiseProduct(g).sum();
}

}  // namespace dimwit::linalg
