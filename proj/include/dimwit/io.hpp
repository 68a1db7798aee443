#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "dimwit/behaviour.hpp"
#include "dimwit/classical.hpp"
#include "dimwit/quantum.hpp"

// Text formats shared by the library and the CLI.
//
//   behaviour: {"nx": .., "ny": .., "nb": .., "p": [[...nx rows of ny*nb...]]}
//   witness:   same layout with "g" instead of "p"
//   strategy:  {"d": .., "f": [nx ints], "g": [d arrays of ny ints]}
//   model:     {"dim": .., "states": [dim x dim of [re, im]],
//               "povms": [per y: [per b: dim x dim of [re, im]]]}
//
// Column index inside a row is y*nb + b. Writers use 17 significant digits so
// that every double reloads bit-identically.
namespace dimwit::io {

inline constexpr int kFileDigits = 17;
inline constexpr int kStdoutDigits = 9;

std::string format_number(double v, int significant_digits);

std::string behaviour_to_json(const Behaviour& p);
std::string witness_to_json(const Witness& g);
// Raw matrix in the witness layout under the given key, for matrices that
// are not witnesses themselves (index matrices, isometries).
std::string matrix_to_json(const Scenario& s, const RealMatrix& m, std::string_view key);
std::string strategy_to_json(const DeterministicStrategy& s);
std::string model_to_json(const QuantumModel& model);

Behaviour parse_behaviour(std::string_view text);
Witness parse_witness(std::string_view text);
DeterministicStrategy parse_strategy(std::string_view text);
QuantumModel parse_model(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

inline Behaviour load_behaviour(const std::filesystem::path& path) { return parse_behaviour(read_file(path)); }
inline Witness load_witness(const std::filesystem::path& path) { return parse_witness(read_file(path)); }
inline QuantumModel load_model(const std::filesystem::path& path) { return parse_model(read_file(path)); }

}  // namespace dimwit::io
