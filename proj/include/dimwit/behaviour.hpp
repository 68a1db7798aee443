#pragma once

#include <cstdint>
#include <span>

#include "dimwit/linalg.hpp"

namespace dimwit {

/// Alphabet sizes (|X|, |Y|, |B|) of a prepare-and-measure setting.
struct Scenario {
  int nx = 1;
  int ny = 1;
  int nb = 1;

  Eigen::Index columns() const { return static_cast<Eigen::Index>(ny) * nb; }
  Eigen::Index column(int y, int b) const { return static_cast<Eigen::Index>(y) * nb + b; }
  std::uint64_t cells() const { return static_cast<std::uint64_t>(nx) * ny * nb; }

  void validate() const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Conditional distribution P(b|xy) stored as an nx x (ny*nb) matrix with
/// entry (x, y*nb + b). Only obtainable through validate_behaviour, so every
/// instance is nonnegative and normalized.
class Behaviour {
 public:
  const Scenario& scenario() const { return scenario_; }
  const RealMatrix& matrix() const { return matrix_; }
  double operator()(int x, int y, int b) const { return matrix_(x, scenario_.column(y, b)); }

  // Largest |sum_b P(b|xy) - 1| seen at load.
  double max_normalization_deviation() const { return max_deviation_; }

 private:
  friend Behaviour validate_behaviour(const Scenario&, const RealMatrix&);
  Behaviour(Scenario s, RealMatrix m, double dev) : scenario_(s), matrix_(std::move(m)), max_deviation_(dev) {}

  Scenario scenario_;
  RealMatrix matrix_;
  double max_deviation_ = 0.0;
};

/// Real coefficients G(b|xy) of a linear functional <P, G>.
class Witness {
 public:
  Witness(Scenario scenario, RealMatrix matrix);

  const Scenario& scenario() const { return scenario_; }
  const RealMatrix& matrix() const { return matrix_; }
  double operator()(int x, int y, int b) const { return matrix_(x, scenario_.column(y, b)); }

 private:
  Scenario scenario_;
  RealMatrix matrix_;
};

struct DimensionBoundReport {
  double trace_norm = 0.0;
  double raw_bound = 0.0;
  int dimension_lower_bound = 1;
};

inline constexpr double kNegativeClampTol = 1e-12;
inline constexpr double kNormalizationTol = 1e-9;
inline constexpr double kCeilingSlack = 1e-9;

// Entries in (-1e-12, 0) are clamped to zero; anything worse is rejected.
Behaviour validate_behaviour(const Scenario& scenario, const RealMatrix& table);
Behaviour validate_behaviour(const Scenario& scenario, std::span<const double> table);

/// ||P||_1^2 / (nx ny) and its ceiling. Any behaviour realizable with
/// d-dimensional classical or quantum messages (shared randomness allowed)
/// has dimension_lower_bound <= d.
DimensionBoundReport dimension_lower_bound(const Behaviour& p);

/// ||G||_inf sqrt(d nx ny): the largest value <P, G> can take over Q_d.
double witness_bound(const Witness& g, int d);

/// Same bound after adding sum_xy alpha(x,y) A_xy to G, where A_xy is one in
/// row x across all outcomes of input y. <P, A_xy> = 1 for every behaviour, so
/// the shift is compensated by subtracting sum alpha.
double shifted_witness_bound(const Witness& g, const RealMatrix& alpha, int d);

// The single matrix A_xy; used for checks, never stored as a family.
RealMatrix shift_matrix(const Scenario& scenario, int x, int y);

/// G = U V^T from the reduced SVD of P, so that <P, G> = ||P||_1 and ||G||_inf = 1.
Witness svd_witness(const Behaviour& p, double rank_tolerance = linalg::kRankTol);

double evaluate(const Behaviour& p, const Witness& g);

}  // namespace dimwit
