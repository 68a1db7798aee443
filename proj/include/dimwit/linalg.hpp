#pragma once

#include <limits>

#include <Eigen/Dense>

namespace dimwit {

using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

namespace linalg {

inline constexpr double kReconstructionTol = 1e-10;
inline constexpr double kRankTol = 1e-8;
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class SvdMode { Full, Thin };

/// Singular value decomposition M = U diag(S) V^T.
///
/// Singular values are non-increasing. Each left singular vector is signed so
/// that its first nonzero coordinate is positive; the matching right vector is
/// flipped with it, so the product is unchanged.
struct SpectralSummary {
  RealVector singular_values;
  RealMatrix left_vectors;
  RealMatrix right_vectors;
};

SpectralSummary svd(const RealMatrix& m, SvdMode mode = SvdMode::Full);

// Values only; cheaper than svd() for wide matrices.
RealVector singular_values(const RealMatrix& m);

/// Schatten p-norm (sum_i sigma_i^p)^(1/p). Pass kInfinity for the operator norm.
double schatten_norm(const RealMatrix& m, double p);

inline double trace_norm(const RealMatrix& m) { return schatten_norm(m, 1.0); }
inline double operator_norm(const RealMatrix& m) { return schatten_norm(m, kInfinity); }

// Number of singular values above rel_tol * sigma_max.
int numerical_rank(const RealMatrix& m, double rel_tol = kRankTol);

struct HermitianEigen {
  RealVector eigenvalues;  // non-increasing
  ComplexMatrix eigenvectors;
};

HermitianEigen hermitian_eig(const ComplexMatrix& m);

bool is_hermitian(const ComplexMatrix& m, double tol = kReconstructionTol);

/// Hilbert-Schmidt inner product tr(P G^T).
double inner_product(const RealMatrix& p, const RealMatrix& g);

void require_finite(const RealMatrix& m, const char* what);
void require_finite(const ComplexMatrix& m, const char* what);

}  // namespace linalg
}  // namespace dimwit
