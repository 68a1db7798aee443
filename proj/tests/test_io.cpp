#include <random>
#include <string>

#include "doctest.h"

#include "dimwit/errors.hpp"
#include "dimwit/io.hpp"
#include "dimwit/qrac.hpp"
#include "dimwit/statedisc.hpp"
#include "helpers.hpp"

using namespace dimwit;

TEST_SUITE("io") {

TEST_CASE("behaviour and witness text round-trips bit-identically") {
  std::mt19937_64 rng(123);
  for (int t = 0; t < 20; ++t) {
    const Scenario s{1 + static_cast<int>(rng() % 5), 1 + static_cast<int>(rng() % 4), 2 + static_cast<int>(rng() % 3)};
    const Behaviour p = quantum_behaviour(random_model(2, s, rng));
    const Behaviour back = io::parse_behaviour(io::behaviour_to_json(p));
    CHECK(back.scenario() == s);
    CHECK(back.matrix() == p.matrix());

    const Witness g(s, testing_support::gaussian_matrix(s.nx, static_cast<int>(s.columns()), rng) * 1e-3);
    CHECK(io::parse_witness(io::witness_to_json(g)).matrix() == g.matrix());
  }
}

TEST_CASE("model and strategy round-trip") {
  const QuantumModel m = statedisc::discrimination_model(4, 2);
  const QuantumModel back = io::parse_model(io::model_to_json(m));
  CHECK(back.dim == 2);
  REQUIRE(back.states.size() == m.states.size());
  for (std::size_t x = 0; x < m.states.size(); ++x) CHECK(back.states[x] == m.states[x]);
  for (std::size_t y = 0; y < m.povms.size(); ++y)
    for (std::size_t b = 0; b < m.povms[y].size(); ++b) CHECK(back.povms[y][b] == m.povms[y][b]);

  const DeterministicStrategy s{2, {0, 1, 1}, {{0, 1}, {1, 1}}};
  CHECK(io::parse_strategy(io::strategy_to_json(s)) == s);
}

TEST_CASE("explicit document layout") {
  const std::string text = R"({"nx": 2, "ny": 1, "nb": 2, "p": [[1, 0], [0.25, 0.75]]})";
  const Behaviour p = io::parse_behaviour(text);
  CHECK(p(1, 0, 1) == 0.75);
  const std::string out = io::behaviour_to_json(p);
  CHECK(out.find("\"p\"") != std::string::npos);
  CHECK(out.find("0.75") != std::string::npos);

  const std::string wtext = R"({"nx": 1, "ny": 2, "nb": 2, "g": [[1, -2, 3.5, 0]]})";
  const Witness g = io::parse_witness(wtext);
  CHECK(g(0, 1, 0) == 3.5);
}

TEST_CASE("loader errors") {
  CHECK_THROWS_AS(io::parse_behaviour("{not json"), ValidationError);
  CHECK_THROWS_AS(io::parse_behaviour("[1, 2]"), ValidationError);
  CHECK_THROWS_AS(io::parse_behaviour(R"({"nx": 2, "ny": 1, "p": [[1, 0], [0, 1]]})"), ValidationError);
  CHECK_THROWS_AS(io::parse_behaviour(R"({"nx": 2, "ny": 1, "nb": 2, "p": [[1, 0]]})"), ValidationError);
  CHECK_THROWS_AS(io::parse_behaviour(R"({"nx": 1, "ny": 1, "nb": 2, "p": [[1, 0, 0]]})"), ValidationError);
  CHECK_THROWS_AS(io::parse_behaviour(R"({"nx": 1, "ny": 1, "nb": 2, "p": [["a", 1]]})"), ValidationError);
  CHECK_THROWS_WITH_AS(io::parse_behaviour(R"({"nx": 1, "ny": 1, "nb": 2, "p": [[0.5, 0.4]]})"),
                       doctest::Contains("(x=0, y=0)"), ValidationError);
  CHECK_THROWS_AS(io::parse_model(R"({"dim": 2, "states": [[[[1,0],[0,0]],[[0,0],[0,0]]]], "povms": []})"),
                  ValidationError);
  CHECK_THROWS_AS(io::read_file("/nonexistent/dir/file.json"), ValidationError);
}

TEST_CASE("number formatting") {
  CHECK(io::format_number(6.928203230275509, 9) == "6.92820323");
  CHECK(io::format_number(2.0, 9) == "2");
  CHECK(io::format_number(0.1, 17) == "0.10000000000000001");
}

}
