#pragma once

#include <random>
#include <vector>

#include "dimwit/behaviour.hpp"

namespace dimwit {

inline constexpr double kQuantumTol = 1e-10;

/// Preparations rho_x and, for each measurement setting y, a POVM {Pi_b^y}.
struct QuantumModel {
  int dim = 1;
  std::vector<ComplexMatrix> states;
  std::vector<std::vector<ComplexMatrix>> povms;

  Scenario scenario() const;

  // Throws ValidationError naming the first offending state or effect.
  void validate() const;
};

/// P(b|xy) = tr(rho_x Pi_b^y).
Behaviour quantum_behaviour(const QuantumModel& model);
Behaviour quantum_behaviour(const QuantumModel& model, const Scenario& scenario);

/// Dimension of the joint support of the states: rank of sum_x rho_x with
/// eigenvalues below 1e-8 * lambda_max treated as zero.
int model_dimension(const QuantumModel& model);

struct HelstromMeasurement {
  ComplexMatrix plus;   // projector onto the positive eigenspace of rho - sigma
  ComplexMatrix minus;  // identity - plus
  double success = 0.5; // equal-prior success 1/2 + ||rho - sigma||_1 / 4
};

HelstromMeasurement helstrom_measurement(const ComplexMatrix& rho, const ComplexMatrix& sigma);

ComplexMatrix pure_density(const Eigen::VectorXcd& ket);

// Random models for property checks: Gaussian pure states, and POVMs built by
// grouping the eigenprojectors of a random Hermitian matrix into nb outcomes.
Eigen::VectorXcd random_ket(int dim, std::mt19937_64& rng);
std::vector<ComplexMatrix> random_projective_povm(int dim, int nb, std::mt19937_64& rng);
QuantumModel random_model(int dim, const Scenario& scenario, std::mt19937_64& rng);

}  // namespace dimwit
