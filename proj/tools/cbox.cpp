// cbox: command-line front end for netlists and their behaviors.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "cbox/blackbox.hpp"
#include "cbox/errors.hpp"
#include "cbox/json_io.hpp"
#include "cbox/netlist.hpp"

namespace fs = std::filesystem;
using namespace cbox;

namespace {

struct Session {
  NetlistOptions options;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Circuit load(const Session& s, const std::string& path) {
  try {
    return parse_netlist(slurp(path), s.options);
  } catch (const Error& e) {
    throw Error((path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
  }
}

std::string pretty_behavior(const Behavior& b) {
  std::ostringstream out;
  out << "behavior " << b.inputs() << " -> " << b.outputs() << " (dim " << b.relation().space().dim() << ")\n";
  out << pretty(b.relation());
  return out.str();
}

// Returns the failures found on one circuit; empty means all checks passed.
std::vector<std::string> check_circuit(const Circuit& g) {
  std::vector<std::string> problems;
  const Behavior ref = blackbox(g);
  const std::size_t expected = g.inputs().size() + g.outputs().size();
  if (ref.relation().space().dim() != expected) problems.push_back("behavior dimension is not |X|+|Y|");
  if (!(blackbox_fast(g) == ref)) problems.push_back("minimized path disagrees with the definition");
  if (!(oracle_behavior(g) == ref)) problems.push_back("Kirchhoff solve disagrees with the definition");
  if (!(blackbox(dagger_circuit(g)) == reverse_behavior(ref))) problems.push_back("reversal not preserved");
  return problems;
}

void print_matrix_at(const Behavior& b, const Rat& sigma) {
  std::vector<std::string> headers = b.relation().source().column_headers();
  for (auto& h : b.relation().target().column_headers()) headers.push_back(h);
  std::vector<std::vector<std::string>> cells{headers};
  for (const auto& row : b.relation().space().basis()) {
    std::vector<std::string> line;
    for (const auto& x : row) line.push_back(to_string(eval_at(x, sigma)));
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(headers.size(), 0);
  for (const auto& line : cells) {
    for (std::size_t j = 0; j < line.size(); ++j) width[j] = std::max(width[j], line[j].size());
  }
  for (const auto& line : cells) {
    std::string out;
    for (std::size_t j = 0; j < line.size(); ++j) {
      if (j) out += "  ";
      out += line[j] + std::string(width[j] - line[j].size(), ' ');
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    std::cout << out << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact black-box semantics for passive linear circuits"};
  app.require_subcommand(1);
  Session session;
  app.add_flag("--allow-raw-z", session.options.allow_raw_z, "Accept Z lines that pass the sampled positivity check");

  std::string f1, f2, at;
  bool as_json = false, impedance_mode = false;
  std::string corpus;

  auto* bb = app.add_subcommand("blackbox", "Print the behavior of a netlist");
  bb->add_option("file", f1, "Netlist file, or - for stdin")->required();
  bb->add_flag("--json", as_json, "Emit JSON");
  bb->add_flag("--as-impedance", impedance_mode, "Print Z(s) for a 1-in/1-out impedance");

  auto* comp = app.add_subcommand("compose", "Compose two netlists (first, then second)");
  comp->add_option("first", f1)->required();
  comp->add_option("second", f2)->required();

  auto* tens = app.add_subcommand("tensor", "Place two netlists side by side");
  tens->add_option("first", f1)->required();
  tens->add_option("second", f2)->required();

  auto* dag = app.add_subcommand("dagger", "Swap inputs and outputs");
  dag->add_option("file", f1)->required();

  auto* elim = app.add_subcommand("eliminate", "Print the extended and boundary power functionals");
  elim->add_option("file", f1)->required();
  elim->add_flag("--json", as_json, "Emit JSON");

  auto* eq = app.add_subcommand("equiv", "Exit 0 iff the two behaviors are equal");
  eq->add_option("first", f1)->required();
  eq->add_option("second", f2)->required();

  auto* ev = app.add_subcommand("eval", "Evaluate the behavior's generators at s = sigma");
  ev->add_option("file", f1)->required();
  ev->add_option("--at", at, "Rational evaluation point")->required();

  auto* chk = app.add_subcommand("check", "Run the invariant checks on one netlist or a directory");
  chk->add_option("file", f1);
  chk->add_option("--corpus", corpus, "Directory of .net files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (const char* env = std::getenv("BLACKBOX_SAMPLE_POINTS"); env && *env) {
      session.options.sample_points = parse_sample_points(env);
    }

    if (*bb) {
      const Behavior b = blackbox(load(session, f1));
      if (impedance_mode) {
        std::cout << as_impedance(b).to_string() << "\n";
      } else if (as_json) {
        std::cout << behavior_to_json(b).dump(2) << "\n";
      } else {
        std::cout << pretty_behavior(b);
      }
      return 0;
    }
    if (*comp) {
      std::cout << print_netlist(compose_circuits(load(session, f1), load(session, f2)));
      return 0;
    }
    if (*tens) {
      std::cout << print_netlist(tensor_circuits(load(session, f1), load(session, f2)));
      return 0;
    }
    if (*dag) {
      std::cout << print_netlist(dagger_circuit(load(session, f1)));
      return 0;
    }
    if (*elim) {
      const Circuit g = load(session, f1);
      const DirichletForm p = extended_power_functional(g);
      const DirichletForm q = power_functional(p, g.terminals());
      if (as_json) {
        std::cout << nlohmann::json{{"P", form_to_json(p)}, {"Q", form_to_json(q)}}.dump(2) << "\n";
      } else {
        std::cout << pretty(p, "P") << "\n" << pretty(q, "Q") << "\n";
      }
      return 0;
    }
    if (*eq) {
      const bool same = blackbox(load(session, f1)) == blackbox(load(session, f2));
      std::cout << (same ? "equivalent" : "not equivalent") << "\n";
      return same ? 0 : 1;
    }
    if (*ev) {
      print_matrix_at(blackbox(load(session, f1)), parse_rat(at));
      return 0;
    }
    if (*chk) {
      std::vector<std::string> files;
      if (!f1.empty()) files.push_back(f1);
      if (!corpus.empty()) {
        for (const auto& entry : fs::directory_iterator(corpus)) {
          if (entry.path().extension() == ".net") files.push_back(entry.path().string());
        }
        std::sort(files.begin() + (f1.empty() ? 0 : 1), files.end());
      }
      if (files.empty()) throw Error("check needs a file or --corpus");
      bool all_ok = true;
      for (const auto& f : files) {
        const auto problems = check_circuit(load(session, f));
        if (problems.empty()) {
          std::cout << "ok   " << f << "\n";
          continue;
        }
        all_ok = false;
        for (const auto& p : problems) std::cout << "FAIL " << f << ": " << p << "\n";
      }
      return all_ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "cbox: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
