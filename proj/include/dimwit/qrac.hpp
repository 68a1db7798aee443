#pragma once

#include <cstdint>

#include "dimwit/behaviour.hpp"
#include "dimwit/quantum.hpp"

namespace dimwit {

/// (m, n) random access code: x is a string of n symbols from [m], the
/// receiver is asked for symbol y and should answer x_y. Scenario (m^n, n, m).
/// Inputs x are indexed with the first symbol most significant.
struct RacParams {
  int m = 2;
  int n = 1;

  void validate() const;
  std::int64_t strings() const;  // m^n
  Scenario scenario() const;
  // Symbol y (0-based) of the string with index x.
  int symbol(std::int64_t x, int y) const;
};

inline constexpr std::uint64_t kRacEntryCap = 100'000'000;

/// F(m,n) by the block recursion F(m,1) = I_m and, for block j of m^(n-1)
/// rows, [e_j columns | F(m,n-1)].
RealMatrix rac_index_matrix(const RacParams& p);

/// F(m,n) from its definition sum_{x,y} |x><y, x_y|.
RealMatrix rac_index_matrix_direct(const RacParams& p);

/// F(m,n) / (n m^n); <P, G> is the average success probability.
Witness rac_witness(const RacParams& p);

/// Offset that turns F into a multiple of a partial isometry: 1/m - 1/(m sqrt n).
double rac_isometry_offset(int m, int n);

/// H = (F - a_mn * ones) / sqrt(m^(n-1)). H^T H is a projector of rank 1 + n(m-1).
RealMatrix rac_isometry(const RacParams& p);

/// Upper bound 1/m + (sqrt(m d) - 1)/(m sqrt n) on the average success of any
/// (m,n) code with d-dimensional messages. Not clamped; values >= 1 are vacuous.
double rac_bound(int m, int n, int d);

double average_success(const Behaviour& p, const RacParams& params);
double worst_case_success(const Behaviour& p, const RacParams& params);

/// Qubit codes for m = 2, n in {2, 3} reaching rac_bound(2, n, 2). States have
/// Bloch vector (s_1, ..., s_n)/sqrt(n) over the axes (X, Z) or (X, Y, Z),
/// s_k = +1 when x_k = 0; measurement y is the k-th Pauli with +1 -> b = 0.
QuantumModel optimal_qrac_model(int n);

}  // namespace dimwit
