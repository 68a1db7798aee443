#include "dimwit/statedisc.hpp"

#include <cmath>
#include <complex>
#include <ostream>
#include <string>

#include "dimwit/errors.hpp"
#include "dimwit/io.hpp"

namespace dimwit::statedisc {

namespace {

double phase(int N, int x, int y, int z) {
  return std::sin(M_PI * (2.0 * x - y - z) / N);
}

void require_even(int N) {
  if (N < 4 || N % 2 != 0) throw DomainError("classical bound is only established for even N >= 4");
}

}  // namespace

void DiscriminationScenario::validate() const {
  if (N < 3) throw DomainError("state discrimination needs N >= 3");
}

std::vector<std::pair<int, int>> DiscriminationScenario::pairs() const {
  validate();
  std::vector<std::pair<int, int>> out;
  out.reserve(pair_count());
  for (int y = 0; y < N; ++y)
    for (int z = y + 1; z < N; ++z) out.emplace_back(y, z);
  return out;
}

std::vector<ComplexMatrix> fourier_states(int N, int d) {
  if (N < 1) throw DomainError("need N >= 1");
  if (d < 1 || d > N) throw DomainError("Fourier states need 1 <= d <= N");
  std::vector<ComplexMatrix> states;
  states.reserve(N);
  for (int x = 0; x < N; ++x) {
    Eigen::VectorXcd ket(d);
    for (int k = 0; k < d; ++k) ket(k) = std::polar(1.0, 2.0 * M_PI * k * x / N);
    states.push_back(pure_density(ket));
  }
  return states;
}

QuantumModel discrimination_model(int N, int d) {
  DiscriminationScenario{N}.validate();
  if (d < 2 || d > N) throw DomainError("discrimination model needs 2 <= d <= N");
  QuantumModel model;
  model.dim = d;
  model.states = fourier_states(N, d);
  for (const auto& [y, z] : DiscriminationScenario{N}.pairs()) {
    auto h = helstrom_measurement(model.states[y], model.states[z]);
    model.povms.push_back({std::move(h.plus), std::move(h.minus)});
  }
  return model;
}

Behaviour closed_form_behaviour(int N) {
  const DiscriminationScenario ds{N};
  const Scenario s = ds.scenario();
  RealMatrix p(s.nx, s.columns());
  const auto pairs = ds.pairs();
  for (int x = 0; x < N; ++x) {
    for (int k = 0; k < s.ny; ++k) {
      const double t = phase(N, x, pairs[k].first, pairs[k].second);
      p(x, s.column(k, 0)) = 0.5 * (1.0 - t);
      p(x, s.column(k, 1)) = 0.5 * (1.0 + t);
    }
  }
  return validate_behaviour(s, p);
}

Witness discrimination_witness(int N) {
  const DiscriminationScenario ds{N};
  const Scenario s = ds.scenario();
  const double scale = 2.0 / (N * std::sqrt(N - 1.0));
  RealMatrix g(s.nx, s.columns());
  const auto pairs = ds.pairs();
  for (int x = 0; x < N; ++x) {
    for (int k = 0; k < s.ny; ++k) {
      const double t = phase(N, x, pairs[k].first, pairs[k].second);
      g(x, s.column(k, 0)) = scale * (0.5 - t);
      g(x, s.column(k, 1)) = scale * (0.5 + t);
    }
  }
  return Witness(s, std::move(g));
}

double quantum_bound(int N) {
  DiscriminationScenario{N}.validate();
  return N * std::sqrt(N - 1.0);
}

double classical_bound(int N) {
  require_even(N);
  // The closed form indexes inputs from 1.
  double cos_sum = 0.0;
  for (int y = 1; y < N; ++y)
    for (int z = y + 1; z <= N; ++z) cos_sum += std::abs(std::cos(M_PI * (1.0 + y + z) / N));
  const double n = N;
  return 2.0 / (n * std::sqrt(n - 1.0)) *
         (n * n * (n - 1.0) / 4.0 + 2.0 / std::sin(M_PI / n) * cos_sum);
}

double qd_bound(int N, int d) {
  DiscriminationScenario{N}.validate();
  if (d < 1) throw DomainError("dimension must be >= 1");
  return N * std::sqrt(d * (N - 1.0) / 2.0);
}

PairStatistics wn_vn(const Behaviour& p, int N) {
  const DiscriminationScenario ds{N};
  if (p.scenario() != ds.scenario()) {
    throw ValidationError("behaviour does not match the N = " + std::to_string(N) + " discrimination scenario");
  }
  PairStatistics out;
  const auto pairs = ds.pairs();
  for (int k = 0; k < ds.pair_count(); ++k) {
    const double diff = p(pairs[k].first, k, 0) - p(pairs[k].second, k, 0);
    out.W += diff * diff;
    out.V += diff;
  }
  return out;
}

std::vector<RatioRow> ratio_series(int n_max) {
  if (n_max < 4 || n_max % 2 != 0) throw DomainError("ratio series needs an even N_max >= 4");
  std::vector<RatioRow> rows;
  for (int N = 4; N <= n_max; N += 2) {
    RatioRow r{N, classical_bound(N), quantum_bound(N), 0.0};
    r.ratio = r.classical / r.quantum;
    rows.push_back(r);
  }
  return rows;
}

void write_ratio_csv(std::ostream& os, const std::vector<RatioRow>& rows) {
  os << "N,B_C,B_Q,ratio\n";
  for (const auto& r : rows) {
    os << r.N << ',' << io::format_number(r.classical, io::kFileDigits) << ','
       << io::format_number(r.quantum, io::kFileDigits) << ','
       << io::format_number(r.ratio, io::kFileDigits) << '\n';
  }
}

}  // namespace dimwit::statedisc
