#include "dimwit/classical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dimwit/errors.hpp"

namespace dimwit {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > kSaturated / base) return kSaturated;
    r *= base;
  }
  return r;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

// Odometer step over digits in [0, radix); returns false on wraparound.
bool advance(std::vector<int>& digits, int radix) {
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (++*it < radix) return true;
    *it = 0;
  }
  return false;
}

}  // namespace

void DeterministicStrategy::validate(const Scenario& s) const {
  s.validate();
  if (d < 1) throw ValidationError("strategy message size must be >= 1");
  if (encode.size() != static_cast<std::size_t>(s.nx)) {
    throw ValidationError("coding function must have " + std::to_string(s.nx) + " entries");
  }
  for (std::size_t x = 0; x < encode.size(); ++x) {
    if (encode[x] < 0 || encode[x] >= d) {
      throw ValidationError("coding function f(" + std::to_string(x) + ") = " +
                            std::to_string(encode[x]) + " outside [0, " + std::to_string(d) + ")");
    }
  }
  if (decode.size() != static_cast<std::size_t>(d)) {
    throw ValidationError("decoding function must have " + std::to_string(d) + " rows");
  }
  for (int msg = 0; msg < d; ++msg) {
    if (decode[msg].size() != static_cast<std::size_t>(s.ny)) {
      throw ValidationError("decoding row " + std::to_string(msg) + " must have " +
                            std::to_string(s.ny) + " entries");
    }
    for (int y = 0; y < s.ny; ++y) {
      const int b = decode[msg][y];
      if (b < 0 || b >= s.nb) {
        throw ValidationError("decoding g(" + std::to_string(msg) + ", " + std::to_string(y) +
                              ") = " + std::to_string(b) + " outside [0, " + std::to_string(s.nb) + ")");
      }
    }
  }
}

Behaviour deterministic_behaviour(const DeterministicStrategy& s, const Scenario& scenario) {
  s.validate(scenario);
  RealMatrix m = RealMatrix::Zero(scenario.nx, scenario.columns());
  for (int x = 0; x < scenario.nx; ++x)
    for (int y = 0; y < scenario.ny; ++y) m(x, scenario.column(y, s.decode[s.encode[x]][y])) = 1.0;
  return validate_behaviour(scenario, m);
}

std::uint64_t vertex_count(const Scenario& s, int d) {
  s.validate();
  if (d < 1) throw DomainError("dimension must be >= 1");
  const std::uint64_t codings = saturating_pow(d, s.nx);
  const std::uint64_t decodings = saturating_pow(s.nb, static_cast<std::uint64_t>(d) * s.ny);
  return saturating_mul(codings, decodings);
}

VertexRange::VertexRange(Scenario scenario, int d, std::uint64_t cap)
    : scenario_(scenario), d_(d), count_(vertex_count(scenario, d)) {
  if (count_ > cap) throw SizeError(count_, cap, "deterministic strategy count");
}

VertexRange::iterator::iterator(const Scenario& s, int d) : scenario_(s), done_(false) {
  current_.d = d;
  current_.encode.assign(s.nx, 0);
  current_.decode.assign(d, std::vector<int>(s.ny, 0));
}

VertexRange::iterator& VertexRange::iterator::operator++() {
  // g varies fastest: walk its flattened digits, then carry into f.
  auto& dec = current_.decode;
  for (auto row = dec.rbegin(); row != dec.rend(); ++row) {
    if (advance(*row, scenario_.nb)) return *this;
  }
  if (!advance(current_.encode, current_.d)) done_ = true;
  return *this;
}

ClassicalOptimum classical_witness_max(const Witness& g, int d, std::uint64_t cap) {
  if (d < 1) throw DomainError("dimension must be >= 1");
  const Scenario& s = g.scenario();
  const std::uint64_t codings = saturating_pow(d, s.nx);
  if (codings > cap) throw SizeError(codings, cap, "coding function count");

  const RealMatrix& gm = g.matrix();
  std::vector<int> f(s.nx, 0);
  RealMatrix message_rows(d, s.columns());

  ClassicalOptimum best;
  bool have_best = false;
  std::vector<std::vector<int>> decode(d, std::vector<int>(s.ny, 0));
  do {
    message_rows.setZero();
    for (int x = 0; x < s.nx; ++x) message_rows.row(f[x]) += gm.row(x);

    double value = 0.0;
    for (int msg = 0; msg < d; ++msg) {
      for (int y = 0; y < s.ny; ++y) {
        int arg = 0;
        double top = message_rows(msg, s.column(y, 0));
        for (int b = 1; b < s.nb; ++b) {
          const double v = message_rows(msg, s.column(y, b));
          if (v > top) {
            top = v;
            arg = b;
          }
        }
        decode[msg][y] = arg;
        value += top;
      }
    }

    // f runs in lexicographic order, so only a clear improvement replaces the incumbent.
    const double slack = 1e-12 * std::max(1.0, std::abs(best.value));
    if (!have_best || value > best.value + slack) {
      best.value = value;
      best.strategy = DeterministicStrategy{d, f, decode};
      have_best = true;
    }
  } while (advance(f, d));
  return best;
}

Behaviour extremal_block_behaviour(int d, int n, int m) {
  if (d < 1 || n < 1 || m < 1) throw DomainError("block construction needs d, n, m >= 1");
  const Scenario s{d * n, m, d};
  RealMatrix p = RealMatrix::Zero(s.nx, s.columns());
  for (int x = 0; x < s.nx; ++x)
    for (int y = 0; y < m; ++y) p(x, s.column(y, x / n)) = 1.0;
  return validate_behaviour(s, p);
}

}  // namespace dimwit
