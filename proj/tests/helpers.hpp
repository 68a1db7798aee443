#pragma once

#include <random>

#include "dimwit/linalg.hpp"
#include "oracles.hpp"

namespace testing_support {

inline oracle::Table to_table(const dimwit::RealMatrix& m) {
  oracle::Table t(m.rows(), std::vector<double>(m.cols()));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) t[r][c] = m(r, c);
  return t;
}

inline dimwit::RealMatrix gaussian_matrix(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  dimwit::RealMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = g(rng);
  return m;
}

}  // namespace testing_support
