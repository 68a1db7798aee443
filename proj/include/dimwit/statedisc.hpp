#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "dimwit/behaviour.hpp"
#include "dimwit/quantum.hpp"

namespace dimwit::statedisc {

/// Sender gets x in [0, N); receiver gets a pair y < z with the promise x is
/// one of them and answers +1 for "x = y", -1 for "x = z". Pairs are indexed
/// lexicographically; outcome index 0 is +1 and index 1 is -1.
struct DiscriminationScenario {
  int N = 3;

  void validate() const;
  int pair_count() const { return N * (N - 1) / 2; }
  Scenario scenario() const { return Scenario{N, pair_count(), 2}; }
  std::vector<std::pair<int, int>> pairs() const;
};

/// |psi_x> = d^(-1/2) sum_k exp(2 pi i k x / N) |k>, returned as density matrices.
std::vector<ComplexMatrix> fourier_states(int N, int d);

/// Fourier states with the Helstrom measurement for each pair: outcome +1 is
/// the projector onto the positive part of rho_y - rho_z.
QuantumModel discrimination_model(int N, int d);

/// P(+-1 | x, (y,z)) = (1 -+ sin(pi (2x - y - z) / N)) / 2, on every cell.
Behaviour closed_form_behaviour(int N);

/// G(+-1 | x, (y,z)) = 2/(N sqrt(N-1)) * (1/2 -+ sin(pi (2x - y - z) / N)).
Witness discrimination_witness(int N);

double quantum_bound(int N);    // N sqrt(N - 1)
double classical_bound(int N);  // even N only
double qd_bound(int N, int d);  // N sqrt(d (N - 1) / 2)

struct PairStatistics {
  double W = 0.0;  // sum over pairs of (P(+1|x=y) - P(+1|x=z))^2
  double V = 0.0;  // sum over pairs of  P(+1|x=y) - P(+1|x=z)
};

PairStatistics wn_vn(const Behaviour& p, int N);

struct RatioRow {
  int N = 0;
  double classical = 0.0;
  double quantum = 0.0;
  double ratio = 0.0;
};

inline constexpr double kRatioAsymptote = 0.5 + 4.0 / (M_PI * M_PI);

/// Even N from 4 to n_max, from the closed-form bounds.
std::vector<RatioRow> ratio_series(int n_max);

// Header "N,B_C,B_Q,ratio", 17 significant digits, newline-terminated rows.
void write_ratio_csv(std::ostream& os, const std::vector<RatioRow>& rows);

}  // namespace dimwit::statedisc
