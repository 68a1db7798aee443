#pragma once

#include <cstdint>
#include <iterator>
#include <vector>

#include "dimwit/behaviour.hpp"

namespace dimwit {

inline constexpr std::uint64_t kDefaultCap = 10'000'000;

/// Coding function f: X -> [d] and decoding function g: [d] x Y -> B.
/// decode[m][y] holds g(m, y).
struct DeterministicStrategy {
  int d = 1;
  std::vector<int> encode;
  std::vector<std::vector<int>> decode;

  void validate(const Scenario& scenario) const;

  friend bool operator==(const DeterministicStrategy&, const DeterministicStrategy&) = default;
  friend auto operator<=>(const DeterministicStrategy&, const DeterministicStrategy&) = default;
};

// P(b|xy) = 1 iff b = g(f(x), y).
Behaviour deterministic_behaviour(const DeterministicStrategy& s, const Scenario& scenario);

// d^nx * nb^(d*ny), saturating at UINT64_MAX.
std::uint64_t vertex_count(const Scenario& scenario, int d);

/// Every deterministic strategy with message size d, in lexicographic order of
/// (f, g) with the last coordinate varying fastest. Construction throws
/// SizeError when the count exceeds cap.
class VertexRange {
 public:
  VertexRange(Scenario scenario, int d, std::uint64_t cap = kDefaultCap);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = DeterministicStrategy;
    using difference_type = std::ptrdiff_t;
    using pointer = const DeterministicStrategy*;
    using reference = const DeterministicStrategy&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t) const { return done_; }

   private:
    friend class VertexRange;
    iterator(const Scenario& s, int d);

    Scenario scenario_;
    DeterministicStrategy current_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(scenario_, d_); }
  std::default_sentinel_t end() const { return {}; }
  std::uint64_t size() const { return count_; }

 private:
  Scenario scenario_;
  int d_;
  std::uint64_t count_;
};

inline VertexRange enumerate_vertices(const Scenario& scenario, int d, std::uint64_t cap = kDefaultCap) {
  return VertexRange(scenario, d, cap);
}

struct ClassicalOptimum {
  double value = 0.0;
  DeterministicStrategy strategy;
};

/// max of <P, G> over C_d. Enumerates the d^nx coding functions; for fixed f
/// the objective separates over (message, y), so the decoder is chosen
/// greedily with ties going to the smallest b. Among maximizing f the
/// lexicographically smallest is returned.
ClassicalOptimum classical_witness_max(const Witness& g, int d, std::uint64_t cap = kDefaultCap);

/// Scenario (dn, m, d) with P(b|xy) = 1 iff b = floor(x / n). Its trace norm
/// is d sqrt(nm), so it meets the dimension bound with equality.
Behaviour extremal_block_behaviour(int d, int n, int m);

}  // namespace dimwit
