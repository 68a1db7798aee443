#include "dimwit/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "dimwit/errors.hpp"

namespace dimwit {

namespace {

void require_hermitian_psd(const ComplexMatrix& m, int dim, const std::string& name) {
  if (m.rows() != dim || m.cols() != dim) {
    throw ValidationError(name + " must be " + std::to_string(dim) + "x" + std::to_string(dim));
  }
  if (!m.allFinite()) throw ValidationError(name + " has non-finite entries");
  if (!linalg::is_hermitian(m, kQuantumTol)) throw ValidationError(name + " is not Hermitian");
  const auto eig = linalg::hermitian_eig(m);
  if (eig.eigenvalues.size() > 0 && eig.eigenvalues.minCoeff() < -kQuantumTol) {
    throw ValidationError(name + " is not positive semidefinite (eigenvalue " +
                          std::to_string(eig.eigenvalues.minCoeff()) + ")");
  }
}

}  // namespace

Scenario QuantumModel::scenario() const {
  const int nb = povms.empty() ? 0 : static_cast<int>(povms.front().size());
  return Scenario{static_cast<int>(states.size()), static_cast<int>(povms.size()), nb};
}

void QuantumModel::validate() const {
  if (dim < 1) throw ValidationError("model dimension must be >= 1");
  if (states.empty()) throw ValidationError("model has no states");
  if (povms.empty()) throw ValidationError("model has no measurements");

  for (std::size_t x = 0; x < states.size(); ++x) {
    const std::string name = "state " + std::to_string(x);
    require_hermitian_psd(states[x], dim, name);
    const double tr = states[x].trace().real();
    if (std::abs(tr - 1.0) > kQuantumTol) {
      throw ValidationError(name + " has trace " + std::to_string(tr));
    }
  }

  const std::size_t nb = povms.front().size();
  const ComplexMatrix identity = ComplexMatrix::Identity(dim, dim);
  for (std::size_t y = 0; y < povms.size(); ++y) {
    if (povms[y].empty() || povms[y].size() != nb) {
      throw ValidationError("measurement " + std::to_string(y) + " must have " +
                            std::to_string(nb) + " outcomes");
    }
    ComplexMatrix total = ComplexMatrix::Zero(dim, dim);
    for (std::size_t b = 0; b < nb; ++b) {
      require_hermitian_psd(povms[y][b], dim,
                            "effect (y=" + std::to_string(y) + ", b=" + std::to_string(b) + ")");
      total += povms[y][b];
    }
    if ((total - identity).cwiseAbs().maxCoeff() > kQuantumTol) {
      throw ValidationError("measurement " + std::to_string(y) + " does not sum to identity");
    }
  }
}

Behaviour quantum_behaviour(const QuantumModel& model) {
  model.validate();
  const Scenario s = model.scenario();
  RealMatrix p(s.nx, s.columns());
  for (int x = 0; x < s.nx; ++x) {
    for (int y = 0; y < s.ny; ++y) {
      for (int b = 0; b < s.nb; ++b) {
        // tr(A B) = sum_ij A_ij B_ji
        const std::complex<double> v = model.states[x].cwiseProduct(model.povms[y][b].transpose()).sum();
        if (std::abs(v.imag()) > kQuantumTol) {
          throw ValidationError("probability with imaginary part at (x=" + std::to_string(x) +
                                ", y=" + std::to_string(y) + ", b=" + std::to_string(b) + ")");
        }
        p(x, s.column(y, b)) = v.real();
      }
    }
  }
  // Round-off can leave entries a hair below zero.
  p = p.cwiseMax(0.0);
  return validate_behaviour(s, p);
}

Behaviour quantum_behaviour(const QuantumModel& model, const Scenario& scenario) {
  if (model.scenario() != scenario) throw ValidationError("model does not match scenario");
  return quantum_behaviour(model);
}

int model_dimension(const QuantumModel& model) {
  model.validate();
  ComplexMatrix sum = ComplexMatrix::Zero(model.dim, model.dim);
  for (const auto& rho : model.states) sum += rho;
  const RealVector ev = linalg::hermitian_eig(sum).eigenvalues;
  const double cut = linalg::kRankTol * ev(0);
  return static_cast<int>((ev.array() > cut).count());
}

HelstromMeasurement helstrom_measurement(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
    throw ValidationError("Helstrom measurement needs states of equal dimension");
  }
  const int dim = static_cast<int>(rho.rows());
  for (const auto* m : {&rho, &sigma}) {
    require_hermitian_psd(*m, dim, m == &rho ? "first state" : "second state");
    if (std::abs(m->trace().real() - 1.0) > kQuantumTol) {
      throw ValidationError(std::string(m == &rho ? "first" : "second") + " state is not unit trace");
    }
  }

  const auto eig = linalg::hermitian_eig(rho - sigma);
  HelstromMeasurement out;
  out.plus = ComplexMatrix::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) {
    if (eig.eigenvalues(k) > kQuantumTol) {
      const auto v = eig.eigenvectors.col(k);
      out.plus += v * v.adjoint();
    }
  }
  out.minus = ComplexMatrix::Identity(dim, dim) - out.plus;
  out.success = 0.5 + 0.25 * eig.eigenvalues.cwiseAbs().sum();
  return out;
}

ComplexMatrix pure_density(const Eigen::VectorXcd& ket) {
  const Eigen::VectorXcd v = ket.normalized();
  return v * v.adjoint();
}

Eigen::VectorXcd random_ket(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Eigen::VectorXcd v(dim);
  for (int i = 0; i < dim; ++i) v(i) = {gauss(rng), gauss(rng)};
  return v.normalized();
}

std::vector<ComplexMatrix> random_projective_povm(int dim, int nb, std::mt19937_64& rng) {
  if (dim < 1 || nb < 1) throw DomainError("POVM needs dim >= 1 and nb >= 1");
  std::normal_distribution<double> gauss;
  ComplexMatrix a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a(i, j) = {gauss(rng), gauss(rng)};
  const auto eig = linalg::hermitian_eig(a + a.adjoint());

  std::uniform_int_distribution<int> pick(0, nb - 1);
  std::vector<ComplexMatrix> effects(nb, ComplexMatrix::Zero(dim, dim));
  for (int k = 0; k < dim; ++k) {
    const auto v = eig.eigenvectors.col(k);
    effects[pick(rng)] += v * v.adjoint();
  }
  // Make the effects sum to the identity exactly up to rounding.
  const ComplexMatrix residual = ComplexMatrix::Identity(dim, dim) -
      std::accumulate(effects.begin(), effects.end(), ComplexMatrix(ComplexMatrix::Zero(dim, dim)));
  effects.back() += residual;
  for (auto& e : effects) e = 0.5 * (e + e.adjoint()).eval();
  return effects;
}

QuantumModel random_model(int dim, const Scenario& scenario, std::mt19937_64& rng) {
  scenario.validate();
  QuantumModel model;
  model.dim = dim;
  for (int x = 0; x < scenario.nx; ++x) model.states.push_back(pure_density(random_ket(dim, rng)));
  for (int y = 0; y < scenario.ny; ++y) model.povms.push_back(random_projective_povm(dim, scenario.nb, rng));
  return model;
}

}  // namespace dimwit
