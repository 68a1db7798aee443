#include "dimwit/qrac.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "dimwit/errors.hpp"

namespace dimwit {

namespace {

void check_size(const RacParams& p) {
  // rows m^n, columns m n
  const std::uint64_t rows = static_cast<std::uint64_t>(p.strings());
  const std::uint64_t cols = static_cast<std::uint64_t>(p.m) * p.n;
  const std::uint64_t entries = rows > kRacEntryCap / cols ? kRacEntryCap + 1 : rows * cols;
  if (entries > kRacEntryCap) throw SizeError(entries, kRacEntryCap, "index matrix entries");
}

void require_matching(const Behaviour& p, const RacParams& params) {
  if (p.scenario() != params.scenario()) {
    throw ValidationError("behaviour scenario does not match the (" + std::to_string(params.m) + ", " +
                          std::to_string(params.n) + ") random access code");
  }
}

}  // namespace

void RacParams::validate() const {
  if (m < 2) throw DomainError("random access code needs m >= 2");
  if (n < 1) throw DomainError("random access code needs n >= 1");
  // m^n must fit in an int row index.
  double rows = std::pow(static_cast<double>(m), n);
  if (rows > static_cast<double>(std::numeric_limits<int>::max())) {
    throw SizeError(static_cast<std::uint64_t>(std::min(rows, 1.8e19)),
                    static_cast<std::uint64_t>(std::numeric_limits<int>::max()), "string count m^n");
  }
}

std::int64_t RacParams::strings() const {
  validate();
  std::int64_t r = 1;
  for (int i = 0; i < n; ++i) r *= m;
  return r;
}

Scenario RacParams::scenario() const {
  return Scenario{static_cast<int>(strings()), n, m};
}

int RacParams::symbol(std::int64_t x, int y) const {
  for (int k = n - 1; k > y; --k) x /= m;
  return static_cast<int>(x % m);
}

RealMatrix rac_index_matrix(const RacParams& p) {
  p.validate();
  check_size(p);
  RealMatrix f = RealMatrix::Identity(p.m, p.m);
  std::int64_t block = 1;  // m^(k-1) rows per block at level k
  for (int level = 2; level <= p.n; ++level) {
    block *= p.m;
    const RealMatrix prev = std::move(f);
    f = RealMatrix::Zero(block * p.m, static_cast<Eigen::Index>(p.m) * level);
    for (int j = 0; j < p.m; ++j) {
      f.block(j * block, j, block, 1).setOnes();
      f.block(j * block, p.m, block, prev.cols()) = prev;
    }
  }
  return f;
}

RealMatrix rac_index_matrix_direct(const RacParams& p) {
  p.validate();
  check_size(p);
  const Scenario s = p.scenario();
  RealMatrix f = RealMatrix::Zero(s.nx, s.columns());
  for (int x = 0; x < s.nx; ++x)
    for (int y = 0; y < p.n; ++y) f(x, s.column(y, p.symbol(x, y))) = 1.0;
  return f;
}

Witness rac_witness(const RacParams& p) {
  const RealMatrix f = rac_index_matrix(p);
  return Witness(p.scenario(), f / (static_cast<double>(p.n) * static_cast<double>(p.strings())));
}

double rac_isometry_offset(int m, int n) {
  if (m < 1 || n < 1) throw DomainError("offset needs m, n >= 1");
  return 1.0 / m - 1.0 / (m * std::sqrt(static_cast<double>(n)));
}

RealMatrix rac_isometry(const RacParams& p) {
  const RealMatrix f = rac_index_matrix(p);
  const double a = rac_isometry_offset(p.m, p.n);
  const double scale = std::sqrt(static_cast<double>(p.strings()) / p.m);
  return (f.array() - a).matrix() / scale;
}

double rac_bound(int m, int n, int d) {
  if (m < 2) throw DomainError("rac_bound needs m >= 2");
  if (n < 1) throw DomainError("rac_bound needs n >= 1");
  if (d < 1) throw DomainError("rac_bound needs d >= 1");
  return 1.0 / m + (std::sqrt(static_cast<double>(m) * d) - 1.0) / (m * std::sqrt(static_cast<double>(n)));
}

double average_success(const Behaviour& p, const RacParams& params) {
  require_matching(p, params);
  const Scenario& s = p.scenario();
  double total = 0.0;
  for (int x = 0; x < s.nx; ++x)
    for (int y = 0; y < s.ny; ++y) total += p(x, y, params.symbol(x, y));
  return total / (static_cast<double>(s.nx) * s.ny);
}

double worst_case_success(const Behaviour& p, const RacParams& params) {
  require_matching(p, params);
  const Scenario& s = p.scenario();
  double worst = 1.0;
  for (int x = 0; x < s.nx; ++x)
    for (int y = 0; y < s.ny; ++y) worst = std::min(worst, p(x, y, params.symbol(x, y)));
  return worst;
}

QuantumModel optimal_qrac_model(int n) {
  if (n != 2 && n != 3) throw DomainError("optimal qubit code is only available for n = 2 or 3");
  using C = std::complex<double>;
  ComplexMatrix px(2, 2), py(2, 2), pz(2, 2);
  px << 0, 1, 1, 0;
  py << 0, C(0, -1), C(0, 1), 0;
  pz << 1, 0, 0, -1;
  const std::vector<ComplexMatrix> axes = n == 2 ? std::vector{px, pz} : std::vector{px, py, pz};
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);

  const RacParams params{2, n};
  QuantumModel model;
  model.dim = 2;
  for (std::int64_t x = 0; x < params.strings(); ++x) {
    ComplexMatrix bloch = ComplexMatrix::Zero(2, 2);
    for (int k = 0; k < n; ++k) bloch += (params.symbol(x, k) == 0 ? 1.0 : -1.0) * axes[k];
    model.states.push_back(0.5 * (id + bloch / std::sqrt(static_cast<double>(n))));
  }
  for (const auto& axis : axes) model.povms.push_back({0.5 * (id + axis), 0.5 * (id - axis)});
  return model;
}

}  // namespace dimwit
