#include "dimwit/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "dimwit/errors.hpp"

namespace dimwit::io {

namespace {

using nlohmann::json;

json parse_document(std::string_view text) {
  try {
    json doc = json::parse(text.begin(), text.end());
    if (!doc.is_object()) throw ValidationError("document must be a JSON object");
    return doc;
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

template <typename T>
T field(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ValidationError(std::string("missing field '") + key + "'");
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ValidationError(std::string("bad field '") + key + "': " + e.what());
  }
}

double number(const json& v, const char* what) {
  if (!v.is_number()) throw ValidationError(std::string(what) + " must contain numbers");
  return v.get<double>();
}

Scenario read_scenario(const json& doc) {
  Scenario s{field<int>(doc, "nx"), field<int>(doc, "ny"), field<int>(doc, "nb")};
  s.validate();
  return s;
}

RealMatrix read_rows(const json& doc, const char* key, const Scenario& s) {
  if (!doc.contains(key) || !doc.at(key).is_array()) {
    throw ValidationError(std::string("field '") + key + "' must be an array of rows");
  }
  const json& rows = doc.at(key);
  if (rows.size() != static_cast<std::size_t>(s.nx)) {
    throw ValidationError(std::string("field '") + key + "' needs " + std::to_string(s.nx) + " rows");
  }
  RealMatrix m(s.nx, s.columns());
  for (int x = 0; x < s.nx; ++x) {
    const json& row = rows[x];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(s.columns())) {
      throw ValidationError("row " + std::to_string(x) + " needs " + std::to_string(s.columns()) + " entries");
    }
    for (Eigen::Index c = 0; c < s.columns(); ++c) m(x, c) = number(row[c], key);
  }
  return m;
}

ComplexMatrix read_complex(const json& v, int dim, const std::string& what) {
  if (!v.is_array() || v.size() != static_cast<std::size_t>(dim)) {
    throw ValidationError(what + " must have " + std::to_string(dim) + " rows");
  }
  ComplexMatrix m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    if (!v[r].is_array() || v[r].size() != static_cast<std::size_t>(dim)) {
      throw ValidationError(what + " row " + std::to_string(r) + " must have " + std::to_string(dim) + " entries");
    }
    for (int c = 0; c < dim; ++c) {
      const json& e = v[r][c];
      if (!e.is_array() || e.size() != 2) throw ValidationError(what + " entries must be [re, im] pairs");
      m(r, c) = {number(e[0], what.c_str()), number(e[1], what.c_str())};
    }
  }
  return m;
}

void write_rows(std::ostringstream& os, const RealMatrix& m) {
  os << "[\n";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    os << "    [";
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) os << ", ";
      os << format_number(m(r, c), kFileDigits);
    }
    os << (r + 1 < m.rows() ? "],\n" : "]\n");
  }
  os << "  ]";
}

void write_complex(std::ostringstream& os, const ComplexMatrix& m) {
  os << '[';
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    if (r) os << ", ";
    os << '[';
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) os << ", ";
      os << '[' << format_number(m(r, c).real(), kFileDigits) << ", "
         << format_number(m(r, c).imag(), kFileDigits) << ']';
    }
    os << ']';
  }
  os << ']';
}

void write_int_list(std::ostringstream& os, const std::vector<int>& v) {
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ']';
}

}  // namespace

std::string format_number(double v, int significant_digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant_digits, v);
  return buf;
}

std::string matrix_to_json(const Scenario& s, const RealMatrix& m, std::string_view key) {
  std::ostringstream os;
  os << "{\n  \"nx\": " << s.nx << ",\n  \"ny\": " << s.ny << ",\n  \"nb\": " << s.nb << ",\n  \""
     << key << "\": ";
  write_rows(os, m);
  os << "\n}\n";
  return os.str();
}

std::string behaviour_to_json(const Behaviour& p) { return matrix_to_json(p.scenario(), p.matrix(), "p"); }

std::string witness_to_json(const Witness& g) { return matrix_to_json(g.scenario(), g.matrix(), "g"); }

std::string strategy_to_json(const DeterministicStrategy& s) {
  std::ostringstream os;
  os << "{\n  \"d\": " << s.d << ",\n  \"f\": ";
  write_int_list(os, s.encode);
  os << ",\n  \"g\": [";
  for (std::size_t m = 0; m < s.decode.size(); ++m) {
    if (m) os << ", ";
    write_int_list(os, s.decode[m]);
  }
  os << "]\n}\n";
  return os.str();
}

std::string model_to_json(const QuantumModel& model) {
  std::ostringstream os;
  os << "{\n  \"dim\": " << model.dim << ",\n  \"states\": [\n";
  for (std::size_t x = 0; x < model.states.size(); ++x) {
    os << "    ";
    write_complex(os, model.states[x]);
    os << (x + 1 < model.states.size() ? ",\n" : "\n");
  }
  os << "  ],\n  \"povms\": [\n";
  for (std::size_t y = 0; y < model.povms.size(); ++y) {
    os << "    [";
    for (std::size_t b = 0; b < model.povms[y].size(); ++b) {
      if (b) os << ", ";
      write_complex(os, model.povms[y][b]);
    }
    os << (y + 1 < model.povms.size() ? "],\n" : "]\n");
  }
  os << "  ]\n}\n";
  return os.str();
}

Behaviour parse_behaviour(std::string_view text) {
  const json doc = parse_document(text);
  const Scenario s = read_scenario(doc);
  return validate_behaviour(s, read_rows(doc, "p", s));
}

Witness parse_witness(std::string_view text) {
  const json doc = parse_document(text);
  const Scenario s = read_scenario(doc);
  return Witness(s, read_rows(doc, "g", s));
}

DeterministicStrategy parse_strategy(std::string_view text) {
  const json doc = parse_document(text);
  DeterministicStrategy s;
  s.d = field<int>(doc, "d");
  s.encode = field<std::vector<int>>(doc, "f");
  s.decode = field<std::vector<std::vector<int>>>(doc, "g");
  return s;
}

QuantumModel parse_model(std::string_view text) {
  const json doc = parse_document(text);
  QuantumModel model;
  model.dim = field<int>(doc, "dim");
  if (model.dim < 1) throw ValidationError("model dimension must be >= 1");
  if (!doc.contains("states") || !doc["states"].is_array()) throw ValidationError("field 'states' must be an array");
  if (!doc.contains("povms") || !doc["povms"].is_array()) throw ValidationError("field 'povms' must be an array");

  const json& states = doc["states"];
  for (std::size_t x = 0; x < states.size(); ++x)
    model.states.push_back(read_complex(states[x], model.dim, "state " + std::to_string(x)));

  const json& povms = doc["povms"];
  for (std::size_t y = 0; y < povms.size(); ++y) {
    if (!povms[y].is_array()) throw ValidationError("measurement " + std::to_string(y) + " must be an array");
    std::vector<ComplexMatrix> effects;
    for (std::size_t b = 0; b < povms[y].size(); ++b) {
      effects.push_back(read_complex(povms[y][b], model.dim,
                                     "effect (y=" + std::to_string(y) + ", b=" + std::to_string(b) + ")"));
    }
    model.povms.push_back(std::move(effects));
  }
  model.validate();
  return model;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ValidationError("cannot write " + path.string());
  out << contents;
  if (!out) throw ValidationError("failed writing " + path.string());
}

}  // namespace dimwit::io
