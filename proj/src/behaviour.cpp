#include "dimwit/behaviour.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dimwit/errors.hpp"

namespace dimwit {

namespace {

std::string cell_name(int x, int y) {
  return "(x=" + std::to_string(x) + ", y=" + std::to_string(y) + ")";
}

void require_shape(const Scenario& s, const RealMatrix& m, const char* what) {
  if (m.rows() != s.nx || m.cols() != s.columns()) {
    throw ValidationError(std::string(what) + " has shape " + std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()) + ", scenario needs " + std::to_string(s.nx) +
                          "x" + std::to_string(s.columns()));
  }
}

}  // namespace

void Scenario::validate() const {
  if (nx < 1 || ny < 1 || nb < 1) {
    throw ValidationError("scenario sizes must be positive, got (" + std::to_string(nx) + ", " +
                          std::to_string(ny) + ", " + std::to_string(nb) + ")");
  }
}

Behaviour validate_behaviour(const Scenario& scenario, const RealMatrix& table) {
  scenario.validate();
  require_shape(scenario, table, "behaviour");
  linalg::require_finite(table, "behaviour");

  RealMatrix m = table;
  double worst = 0.0;
  for (int x = 0; x < scenario.nx; ++x) {
    for (int y = 0; y < scenario.ny; ++y) {
      double sum = 0.0;
      for (int b = 0; b < scenario.nb; ++b) {
        double& v = m(x, scenario.column(y, b));
        if (v < 0.0) {
          if (v < -kNegativeClampTol) {
            throw ValidationError("negative probability " + std::to_string(v) + " at " +
                                  cell_name(x, y) + ", b=" + std::to_string(b));
          }
          v = 0.0;
        }
        sum += v;
      }
      const double dev = std::abs(sum - 1.0);
      if (dev > kNormalizationTol) {
        throw ValidationError("outcomes do not sum to 1 at " + cell_name(x, y) +
                              ": sum = " + std::to_string(sum));
      }
      worst = std::max(worst, dev);
    }
  }
  return Behaviour(scenario, std::move(m), worst);
}

Behaviour validate_behaviour(const Scenario& scenario, std::span<const double> table) {
  scenario.validate();
  if (table.size() != scenario.cells()) {
    throw ValidationError("behaviour table has " + std::to_string(table.size()) +
                          " entries, scenario needs " + std::to_string(scenario.cells()));
  }
  RealMatrix m(scenario.nx, scenario.columns());
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = table[r * m.cols() + c];
  return validate_behaviour(scenario, m);
}

Witness::Witness(Scenario scenario, RealMatrix matrix)
    : scenario_(scenario), matrix_(std::move(matrix)) {
  scenario_.validate();
  require_shape(scenario_, matrix_, "witness");
  linalg::require_finite(matrix_, "witness");
}

DimensionBoundReport dimension_lower_bound(const Behaviour& p) {
  const Scenario& s = p.scenario();
  DimensionBoundReport r;
  r.trace_norm = linalg::trace_norm(p.matrix());
  r.raw_bound = r.trace_norm * r.trace_norm / (static_cast<double>(s.nx) * s.ny);
  r.dimension_lower_bound = std::max(1, static_cast<int>(std::ceil(r.raw_bound - kCeilingSlack)));
  return r;
}

double witness_bound(const Witness& g, int d) {
  if (d < 1) throw DomainError("dimension must be >= 1");
  const Scenario& s = g.scenario();
  return linalg::operator_norm(g.matrix()) * std::sqrt(static_cast<double>(d) * s.nx * s.ny);
}

double shifted_witness_bound(const Witness& g, const RealMatrix& alpha, int d) {
  if (d < 1) throw DomainError("dimension must be >= 1");
  const Scenario& s = g.scenario();
  if (alpha.rows() != s.nx || alpha.cols() != s.ny) {
    throw ValidationError("shift coefficients must be " + std::to_string(s.nx) + "x" +
                          std::to_string(s.ny));
  }
  linalg::require_finite(alpha, "shift coefficients");

  RealMatrix shifted = g.matrix();
  for (int x = 0; x < s.nx; ++x)
    for (int y = 0; y < s.ny; ++y) shifted.row(x).segment(s.column(y, 0), s.nb).array() += alpha(x, y);

  return linalg::operator_norm(shifted) * std::sqrt(static_cast<double>(d) * s.nx * s.ny) - alpha.sum();
}

RealMatrix shift_matrix(const Scenario& s, int x, int y) {
  s.validate();
  if (x < 0 || x >= s.nx || y < 0 || y >= s.ny) throw ValidationError("shift index out of range");
  RealMatrix a = RealMatrix::Zero(s.nx, s.columns());
  a.row(x).segment(s.column(y, 0), s.nb).setOnes();
  return a;
}

Witness svd_witness(const Behaviour& p, double rank_tolerance) {
  if (!(rank_tolerance >= 0.0)) throw DomainError("rank tolerance must be nonnegative");
  const auto sv = linalg::svd(p.matrix(), linalg::SvdMode::Thin);
  if (sv.singular_values.size() == 0 || sv.singular_values(0) == 0.0) {
    throw DomainError("cannot build an SVD witness for the zero matrix");
  }
  const double cut = rank_tolerance * sv.singular_values(0);
  const Eigen::Index rank = (sv.singular_values.array() > cut).count();
  RealMatrix g = sv.left_vectors.leftCols(rank) * sv.right_vectors.leftCols(rank).transpose();
  return Witness(p.scenario(), std::move(g));
}

double evaluate(const Behaviour& p, const Witness& g) {
  if (p.scenario() != g.scenario()) throw ValidationError("behaviour and witness scenarios differ");
  return linalg::inner_product(p.matrix(), g.matrix());
}

}  // namespace dimwit
