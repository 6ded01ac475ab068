#include "cbox/netlist.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cbox/errors.hpp"

namespace cbox {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

std::string join_from(const std::vector<std::string>& toks, std::size_t from) {
  std::string out;
  for (std::size_t k = from; k < toks.size(); ++k) out += toks[k];
  return out;
}

ComponentKind kind_of(char c) {
  switch (c) {
    case 'R': return ComponentKind::Resistor;
    case 'L': return ComponentKind::Inductor;
    default: return ComponentKind::Capacitor;
  }
}

}  // namespace

Circuit parse_netlist(std::string_view text, const NetlistOptions& options) {
  LabelledGraph graph;
  std::set<NodeId> declared;
  std::vector<NodeId> inputs, outputs;
  bool have_inputs = false, have_outputs = false;
  std::vector<std::pair<NodeId, NodeId>> wires;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto toks = split_ws(raw);
    if (toks.empty()) continue;

    auto known = [&](const NodeId& n) {
      if (!declared.contains(n)) {
        throw UnknownNode("line " + std::to_string(lineno) + ": node '" + n + "' was not declared");
      }
      return n;
    };

    const std::string& head = toks[0];
    if (const auto colon = head.find(':'); colon != std::string::npos) {
      // `nodes:a b` is accepted as well as `nodes: a b`
      const std::string key = head.substr(0, colon);
      std::vector<std::string> labels;
      if (colon + 1 < head.size()) labels.push_back(head.substr(colon + 1));
      labels.insert(labels.end(), toks.begin() + 1, toks.end());
      if (key == "nodes") {
        for (auto& l : labels) {
          if (!is_valid_label(l)) throw ParseError(lineno, "invalid node label '" + l + "'");
          if (!declared.insert(l).second) throw ParseError(lineno, "node '" + l + "' declared twice");
          graph.nodes.push_back(l);
        }
      } else if (key == "inputs" || key == "outputs") {
        bool& seen = key == "inputs" ? have_inputs : have_outputs;
        if (seen) throw ParseError(lineno, "'" + key + ":' given twice");
        seen = true;
        for (auto& l : labels) (key == "inputs" ? inputs : outputs).push_back(known(l));
      } else {
        throw ParseError(lineno, "unknown section '" + key + "'");
      }
      continue;
    }

    if (head == "W") {
      if (toks.size() != 3) throw ParseError(lineno, "expected 'W <node> <node>'");
      wires.emplace_back(known(toks[1]), known(toks[2]));
      continue;
    }
    if (head == "R" || head == "L" || head == "C") {
      if (toks.size() != 4) throw ParseError(lineno, "expected '" + head + " <node> <node> <value>'");
      const auto a = known(toks[1]), b = known(toks[2]);
      Rat value;
      try {
        value = parse_rat(toks[3]);
      } catch (const Error&) {
        throw ParseError(lineno, "bad component value '" + toks[3] + "'");
      }
      if (value <= 0) {
        throw NonPositiveImpedance("line " + std::to_string(lineno) + ": component value " + toks[3] +
                                   " is not positive");
      }
      graph.edges.push_back({a, b, impedance(kind_of(head[0]), value)});
      continue;
    }
    if (head == "Z") {
      if (toks.size() < 4) throw ParseError(lineno, "expected 'Z <node> <node> <impedance>'");
      if (!options.allow_raw_z) throw ParseError(lineno, "raw impedances need --allow-raw-z");
      const auto a = known(toks[1]), b = known(toks[2]);
      RatFunc z;
      try {
        z = RatFunc::parse(join_from(toks, 3));
      } catch (const Error& e) {
        throw ParseError(lineno, e.what());
      }
      bool positive = false;
      try {
        positive = is_positive_sampled(z, options.sample_points);
      } catch (const PoleAtPoint&) {
        positive = false;
      }
      if (!positive) {
        throw NonPositiveImpedance("line " + std::to_string(lineno) + ": impedance " + z.to_string() +
                                   " fails the positivity check");
      }
      graph.edges.push_back({a, b, z.with_witness(PositivityWitness::Sampled)});
      continue;
    }
    throw ParseError(lineno, "unknown directive '" + head + "'");
  }

  Circuit g(std::move(graph), std::move(inputs), std::move(outputs));
  return wires.empty() ? g : glue_nodes(g, wires);
}

namespace {

std::string edge_line(const Edge& e) {
  const RatFunc& z = e.impedance;
  const Poly& n = z.num();
  const Poly& d = z.den();
  const std::string ends = " " + e.src + " " + e.tgt + " ";
  if (z.is_constant() && z.constant_value() > 0) return "R" + ends + to_string(z.constant_value());
  if (d.is_one() && n.degree() == 1 && n.coeff(0) == 0 && n.coeff(1) > 0) return "L" + ends + to_string(n.coeff(1));
  if (n.is_constant() && d.degree() == 1 && d.coeff(0) == 0 && n.coeff(0) > 0) {
    return "C" + ends + to_string(Rat(1 / n.coeff(0)));
  }
  return "Z" + ends + z.to_string();
}

std::string list_line(const std::string& key, const std::vector<NodeId>& v) {
  std::string out = key + ":";
  for (const auto& n : v) out += " " + n;
  return out + "\n";
}

}  // namespace

std::string print_netlist(const Circuit& g) {
  std::string out = list_line("nodes", g.nodes());
  out += list_line("inputs", g.inputs());
  out += list_line("outputs", g.outputs());
  for (const auto& e : g.edges()) out += edge_line(e) + "\n";
  return out;
}

std::vector<Rat> parse_sample_points(std::string_view text) {
  std::vector<Rat> out;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char ch) { return std::isspace(ch); }),
               item.end());
    out.push_back(parse_rat(item));
  }
  if (out.empty()) throw SyntaxError("no sample points given");
  return out;
}

}  // namespace cbox
