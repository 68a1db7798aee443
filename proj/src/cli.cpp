#include "dimwit/cli.hpp"

#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "dimwit/behaviour.hpp"
#include "dimwit/classical.hpp"
#include "dimwit/errors.hpp"
#include "dimwit/io.hpp"
#include "dimwit/qrac.hpp"
#include "dimwit/quantum.hpp"
#include "dimwit/statedisc.hpp"

namespace dimwit::cli {

namespace {

int stdout_digits() {
  const char* env = std::getenv("DIMWIT_PRECISION");
  if (env == nullptr || *env == '\0') return io::kStdoutDigits;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 6 || v > 17) {
    throw ValidationError("DIMWIT_PRECISION must be an integer in [6, 17], got '" + std::string(env) + "'");
  }
  return static_cast<int>(v);
}

struct Printer {
  std::ostream& out;
  int digits;

  void value(const std::string& key, double v) const { out << key << ' ' << io::format_number(v, digits) << '\n'; }
  void integer(const std::string& key, long long v) const { out << key << ' ' << v << '\n'; }
};

std::string compact_strategy(const DeterministicStrategy& s) {
  std::ostringstream os;
  os << "f [";
  for (std::size_t x = 0; x < s.encode.size(); ++x) os << (x ? ", " : "") << s.encode[x];
  os << "]\ng [";
  for (std::size_t m = 0; m < s.decode.size(); ++m) {
    os << (m ? ", " : "") << '[';
    for (std::size_t y = 0; y < s.decode[m].size(); ++y) os << (y ? ", " : "") << s.decode[m][y];
    os << ']';
  }
  os << "]\n";
  return os.str();
}

void require_output(const std::string& path, const std::string& command) {
  if (path.empty()) throw ValidationError(command + " needs an output file (-o)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dimension bounds and witnesses for prepare-and-measure behaviours", "dimwit"};
  app.require_subcommand(1);

  std::string behaviour_path, witness_path, output_path, kind;
  int dim = 0;
  int m = 2, n = 2, N = 4, max_n = 4;
  std::uint64_t cap = kDefaultCap;
  double rank_tol = linalg::kRankTol;

  auto* validate = app.add_subcommand("validate", "Check a behaviour file and report its normalization");
  validate->add_option("behaviour", behaviour_path)->required();

  auto* bound = app.add_subcommand("bound", "Trace-norm lower bound on the message dimension");
  bound->add_option("behaviour", behaviour_path)->required();

  auto* eval = app.add_subcommand("witness-eval", "Evaluate <P, G>, optionally against the dimension-d bound");
  eval->add_option("behaviour", behaviour_path)->required();
  eval->add_option("witness", witness_path)->required();
  auto* eval_dim = eval->add_option("--dim", dim, "Message dimension d");

  auto* svdw = app.add_subcommand("svd-witness", "Write the witness U V^T from the reduced SVD of a behaviour");
  svdw->add_option("behaviour", behaviour_path)->required();
  svdw->add_option("-o,--output", output_path)->required();
  svdw->add_option("--rank-tol", rank_tol, "Relative singular value cutoff");

  auto* cmax = app.add_subcommand("classical-max", "Brute-force maximum of a witness over deterministic strategies");
  cmax->add_option("witness", witness_path)->required();
  cmax->add_option("--dim", dim)->required();
  cmax->add_option("--cap", cap, "Enumeration guard");
  cmax->add_option("-o,--output", output_path, "Write the maximizing strategy");

  auto* qrac = app.add_subcommand("qrac", "Random access code constructions");
  qrac->add_option("kind", kind)->required()->check(CLI::IsMember({"matrix", "isometry", "witness", "bound", "model"}));
  qrac->add_option("--m", m, "Alphabet size");
  qrac->add_option("--n", n, "String length");
  qrac->add_option("--dim", dim, "Message dimension (bound)");
  qrac->add_option("-o,--output", output_path);

  auto* sd = app.add_subcommand("statedisc", "State discrimination behaviour, witness and bounds");
  sd->add_option("kind", kind)->required()->check(CLI::IsMember({"behaviour", "witness", "model", "bounds"}));
  sd->add_option("--N", N, "Number of states")->required();
  sd->add_option("--dim", dim, "Message dimension (default 2)");
  sd->add_option("-o,--output", output_path);

  auto* fig = app.add_subcommand("figure1", "CSV of B_C/B_Q for even N");
  fig->add_option("--max-n", max_n)->required();
  fig->add_option("-o,--output", output_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    const Printer print{out, stdout_digits()};

    if (*validate) {
      const Behaviour p = io::load_behaviour(behaviour_path);
      const Scenario& s = p.scenario();
      out << "scenario nx=" << s.nx << " ny=" << s.ny << " nb=" << s.nb << '\n';
      print.value("max_normalization_deviation", p.max_normalization_deviation());
    } else if (*bound) {
      const auto r = dimension_lower_bound(io::load_behaviour(behaviour_path));
      print.value("trace_norm", r.trace_norm);
      print.value("raw_bound", r.raw_bound);
      print.integer("dimension_lower_bound", r.dimension_lower_bound);
    } else if (*eval) {
      const Behaviour p = io::load_behaviour(behaviour_path);
      const Witness g = io::load_witness(witness_path);
      const double v = evaluate(p, g);
      print.value("value", v);
      if (*eval_dim) {
        const double b = witness_bound(g, dim);
        print.value("witness_bound", b);
        out << "respected " << (v <= b + 1e-9 ? "yes" : "no") << '\n';
      }
    } else if (*svdw) {
      const Witness g = svd_witness(io::load_behaviour(behaviour_path), rank_tol);
      io::write_file(output_path, io::witness_to_json(g));
      print.value("operator_norm", linalg::operator_norm(g.matrix()));
    } else if (*cmax) {
      const auto best = classical_witness_max(io::load_witness(witness_path), dim, cap);
      print.value("value", best.value);
      out << compact_strategy(best.strategy);
      if (!output_path.empty()) io::write_file(output_path, io::strategy_to_json(best.strategy));
    } else if (*qrac) {
      const RacParams params{m, n};
      if (kind == "bound") {
        if (dim < 1) throw DomainError("qrac bound needs --dim >= 1");
        const double b = rac_bound(m, n, dim);
        print.value("bound", b);
        if (b >= 1.0) out << "note: bound >= 1 is vacuous\n";
      } else if (kind == "model") {
        require_output(output_path, "qrac model");
        io::write_file(output_path, io::model_to_json(optimal_qrac_model(n)));
      } else {
        require_output(output_path, "qrac " + kind);
        params.validate();
        const Scenario s = params.scenario();
        if (kind == "matrix") io::write_file(output_path, io::matrix_to_json(s, rac_index_matrix(params), "g"));
        else if (kind == "isometry") io::write_file(output_path, io::matrix_to_json(s, rac_isometry(params), "g"));
        else io::write_file(output_path, io::witness_to_json(rac_witness(params)));
      }
    } else if (*sd) {
      const int d = dim == 0 ? 2 : dim;
      if (kind == "bounds") {
        print.value("B_Q", statedisc::quantum_bound(N));
        if (N % 2 == 0) print.value("B_C", statedisc::classical_bound(N));
        else out << "B_C unavailable for odd N\n";
        print.value("qd_bound", statedisc::qd_bound(N, d));
      } else {
        require_output(output_path, "statedisc " + kind);
        if (kind == "behaviour") {
          const Behaviour p = d == 2 ? statedisc::closed_form_behaviour(N)
                                     : quantum_behaviour(statedisc::discrimination_model(N, d));
          io::write_file(output_path, io::behaviour_to_json(p));
        } else if (kind == "witness") {
          if (d != 2) throw DomainError("the discrimination witness is defined for d = 2 only");
          io::write_file(output_path, io::witness_to_json(statedisc::discrimination_witness(N)));
        } else {
          io::write_file(output_path, io::model_to_json(statedisc::discrimination_model(N, d)));
        }
      }
    } else if (*fig) {
      std::ostringstream csv;
      statedisc::write_ratio_csv(csv, statedisc::ratio_series(max_n));
      io::write_file(output_path, csv.str());
    }
  } catch (const SizeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitSize;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"dimwit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace dimwit::cli
