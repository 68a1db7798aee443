#include <cmath>
#include <random>

#include "doctest.h"

#include "dimwit/classical.hpp"
#include "dimwit/errors.hpp"
#include "dimwit/qrac.hpp"

using namespace dimwit;

TEST_SUITE("qrac") {

TEST_CASE("index matrix small cases") {
  CHECK(rac_index_matrix({2, 1}) == RealMatrix::Identity(2, 2));
  RealMatrix golden(4, 4);
  golden << 1, 0, 1, 0,
            1, 0, 0, 1,
            0, 1, 1, 0,
            0, 1, 0, 1;
  CHECK(rac_index_matrix({2, 2}) == golden);
  CHECK(rac_index_matrix_direct({2, 2}) == golden);
}

TEST_CASE("index matrix structure") {
  for (const RacParams p : {RacParams{2, 3}, RacParams{3, 2}, RacParams{4, 3}, RacParams{5, 1}}) {
    const RealMatrix f = rac_index_matrix(p);
    CHECK(f.rows() == p.strings());
    CHECK(f.cols() == p.m * p.n);
    CHECK((f.rowwise().sum().array() == p.n).all());
    CHECK(f == rac_index_matrix_direct(p));
  }
  CHECK_THROWS_AS(rac_index_matrix({1, 2}), DomainError);
  CHECK_THROWS_AS(rac_index_matrix({10, 8}), SizeError);
}

TEST_CASE("symbol extraction puts the first symbol most significant") {
  const RacParams p{3, 3};
  CHECK(p.symbol(0, 0) == 0);
  CHECK(p.symbol(9, 0) == 1);   // 100 in base 3
  CHECK(p.symbol(9, 2) == 0);
  CHECK(p.symbol(5, 1) == 1);   // 012
  CHECK(p.symbol(5, 2) == 2);
}

TEST_CASE("rac_witness evaluates success probabilities") {
  const RacParams p{2, 2};
  const Scenario s = p.scenario();
  const Witness g = rac_witness(p);
  const Behaviour uniform = validate_behaviour(s, RealMatrix::Constant(s.nx, s.columns(), 0.5));
  CHECK(evaluate(uniform, g) == doctest::Approx(0.5));

  const Behaviour q = quantum_behaviour(optimal_qrac_model(2));
  CHECK(std::abs(evaluate(q, g) - 0.8535533905932737) < 1e-12);

  // Best deterministic values: d = 1 can only guess; d = 2 sends x_1.
  CHECK(classical_witness_max(g, 1).value == doctest::Approx(0.5));
  CHECK(classical_witness_max(g, 2).value == doctest::Approx(0.75));
  CHECK(classical_witness_max(g, 2).value <= rac_bound(2, 2, 2));
  CHECK(classical_witness_max(g, 4).value == doctest::Approx(1.0));
}

TEST_CASE("isometry for (2,2)") {
  const double a = rac_isometry_offset(2, 2);
  CHECK(std::abs(a - (0.5 - 0.5 / std::sqrt(2.0))) < 1e-15);
  CHECK(std::abs(a - 0.1464466094067262) < 1e-15);
  const RealMatrix h = rac_isometry({2, 2});
  for (Eigen::Index i = 0; i < h.size(); ++i) {
    const double v = h.data()[i];
    CHECK((std::abs(v - 0.6035533905932737) < 1e-12 || std::abs(v + 0.1035533905932738) < 1e-12));
  }
  const auto ev = linalg::hermitian_eig((h.transpose() * h).cast<std::complex<double>>()).eigenvalues;
  CHECK(std::abs(ev(0) - 1.0) < 1e-9);
  CHECK(std::abs(ev(1) - 1.0) < 1e-9);
  CHECK(std::abs(ev(2) - 1.0) < 1e-9);
  CHECK(std::abs(ev(3)) < 1e-9);
  CHECK(std::abs(linalg::operator_norm(h) - 1.0) < 1e-9);
}

TEST_CASE("isometry rank and Gram entries") {
  CHECK(linalg::numerical_rank(rac_isometry({3, 2})) == 5);
  CHECK(linalg::numerical_rank(rac_isometry({2, 3})) == 4);

  for (const RacParams p : {RacParams{3, 2}, RacParams{2, 3}, RacParams{4, 2}, RacParams{3, 3}}) {
    const RealMatrix gram = rac_isometry(p).transpose() * rac_isometry(p);
    const double same = 1.0 - 1.0 / p.m + 1.0 / (p.m * p.n);
    const double sibling = -1.0 / p.m + 1.0 / (p.m * p.n);
    const double other = 1.0 / (p.m * p.n);
    for (int i = 0; i < gram.rows(); ++i) {
      for (int j = 0; j < gram.cols(); ++j) {
        const double expected = i == j ? same : (i / p.m == j / p.m ? sibling : other);
        CHECK(std::abs(gram(i, j) - expected) < 1e-12);
      }
    }
    CHECK(std::abs(gram.trace() - (1.0 + p.n * (p.m - 1.0))) < 1e-9);
  }
}

TEST_CASE("rac_bound values") {
  CHECK(std::abs(rac_bound(2, 2, 2) - (0.5 + 1.0 / (2.0 * std::sqrt(2.0)))) < 1e-15);
  CHECK(std::abs(rac_bound(2, 2, 2) - 0.8535534) < 1e-7);
  CHECK(std::abs(rac_bound(2, 3, 2) - 0.7886751) < 1e-7);
  CHECK(std::abs(rac_bound(2, 2, 1) - 0.6464466) < 1e-7);
  CHECK(rac_bound(2, 1, 4) > 1.0);  // vacuous, reported raw
  CHECK_THROWS_AS(rac_bound(1, 2, 2), DomainError);
  CHECK_THROWS_AS(rac_bound(2, 0, 2), DomainError);
  CHECK_THROWS_AS(rac_bound(2, 2, 0), DomainError);
}

TEST_CASE("average and worst-case success") {
  const RacParams p{2, 2};
  const Scenario s = p.scenario();
  const Behaviour uniform = validate_behaviour(s, RealMatrix::Constant(s.nx, s.columns(), 0.5));
  CHECK(average_success(uniform, p) == doctest::Approx(0.5));
  CHECK(worst_case_success(uniform, p) == doctest::Approx(0.5));

  const Behaviour q = quantum_behaviour(optimal_qrac_model(2));
  CHECK(std::abs(average_success(q, p) - 0.8535533905932737) < 1e-12);
  CHECK(std::abs(worst_case_success(q, p) - 0.8535533905932737) < 1e-12);
  CHECK(std::abs(average_success(q, p) - evaluate(q, rac_witness(p))) < 1e-12);

  // Full communication: send x, decode symbol y.
  DeterministicStrategy full{4, {0, 1, 2, 3}, {}};
  for (int msg = 0; msg < 4; ++msg) full.decode.push_back({p.symbol(msg, 0), p.symbol(msg, 1)});
  const Behaviour perfect = deterministic_behaviour(full, s);
  CHECK(average_success(perfect, p) == 1.0);
  CHECK(worst_case_success(perfect, p) == 1.0);

  full.decode[3][1] = 0;
  CHECK(worst_case_success(deterministic_behaviour(full, s), p) == 0.0);

  CHECK_THROWS_AS(average_success(uniform, RacParams{2, 3}), ValidationError);
}

TEST_CASE("optimal qubit codes") {
  for (int n : {2, 3}) {
    const QuantumModel model = optimal_qrac_model(n);
    CHECK_NOTHROW(model.validate());
    const Behaviour p = quantum_behaviour(model);
    CHECK(std::abs(average_success(p, {2, n}) - rac_bound(2, n, 2)) < 1e-10);
    CHECK(std::abs(linalg::trace_norm(p.matrix()) - std::sqrt(2.0 * (1 << n) * n)) < 1e-9);
    CHECK(dimension_lower_bound(p).dimension_lower_bound == 2);
  }
  CHECK(std::abs(rac_bound(2, 3, 2) - 0.7886751345948129) < 1e-15);
  CHECK_THROWS_AS(optimal_qrac_model(4), DomainError);
}

TEST_CASE("quantum codes never beat the bound") {
  std::mt19937_64 rng(99);
  for (const RacParams p : {RacParams{2, 2}, RacParams{3, 2}, RacParams{2, 3}}) {
    for (int t = 0; t < 30; ++t) {
      const int d = 1 + static_cast<int>(rng() % 3);
      const Behaviour b = quantum_behaviour(random_model(d, p.scenario(), rng));
      CHECK(average_success(b, p) <= rac_bound(p.m, p.n, d) + 1e-8);
    }
  }
}

}
