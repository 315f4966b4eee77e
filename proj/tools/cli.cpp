#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pmod/analysis.hpp"
#include "pmod/errors.hpp"
#include "pmod/io.hpp"
#include "pmod/oracles.hpp"
#include "pmod/solver.hpp"

namespace pmod::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Common {
  std::string graph_path;
  std::string format = "auto";
  std::string source;
  std::string target;
  std::string via;
  double tol = 1e-8;
  std::string output = "json";
};

std::string number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

Json exponent_json(Exponent p) {
  if (p.is_infinite()) return "inf";
  return p.value();
}

Graph load_graph(const Common& c) {
  std::ifstream in(c.graph_path, std::ios::binary);
  if (!in) throw InputError("cannot read " + c.graph_path);
  std::stringstream buf;
  buf << in.rdbuf();
  GraphFormat format;
  if (c.format == "auto") {
    const auto& p = c.graph_path;
    format = p.size() >= 5 && p.compare(p.size() - 5, 5, ".json") == 0 ? GraphFormat::json
                                                                        : GraphFormat::edgelist;
  } else {
    format = parse_format(c.format);
  }
  try {
    return parse_graph(buf.str(), format);
  } catch (const InputError& e) {
    throw InputError(c.graph_path + ": " + e.what());
  }
}

WalkFamily make_family(const Graph& g, const Common& c) {
  const VertexId s = g.vertex(c.source);
  const VertexId t = g.vertex(c.target);
  if (c.via.empty()) return WalkFamily::connecting(g, s, t);
  return WalkFamily::via_vertex(g, s, g.vertex(c.via), t);
}

std::string walk_key(const Graph& g, const Walk& w) {
  std::string key;
  for (VertexId v : w.vertices()) {
    if (!key.empty()) key += ',';
    key += g.label(v);
  }
  return key;
}

double normalized(const Graph& g, const ModulusResult& r) {
  if (r.p.is_infinite()) return r.value;
  return std::pow(r.value / g.sigma_total(), 1.0 / r.p.value());
}

const char* kCsvHeader = "p,value,normalized,dual_lower,primal_upper,gap,iterations\n";

void warn_conditioning(const ModulusResult& r, std::ostream& err) {
  if (r.ill_conditioned) {
    err << "warning: p = " << r.p.to_string()
        << " is close to 1; the dual is ill-conditioned and the inner tolerance was tightened\n";
  }
}

void add_common(CLI::App* cmd, Common& c, bool with_via) {
  cmd->add_option("--graph", c.graph_path, "Graph file")->required();
  cmd->add_option("--format", c.format, "json, edgelist or auto (by extension)")
      ->check(CLI::IsMember({"auto", "json", "edgelist"}));
  cmd->add_option("--source", c.source, "Source vertex label")->required();
  cmd->add_option("--target", c.target, "Target vertex label")->required();
  if (with_via) cmd->add_option("--via", c.via, "Walks must visit this vertex");
  cmd->add_option("--tol", c.tol, "Relative duality gap tolerance")
      ->check(CLI::PositiveNumber);
}

int cmd_modulus(const Common& c, const std::string& p_text, std::ostream& out,
                std::ostream& err) {
  const Graph g = load_graph(c);
  const WalkFamily family = make_family(g, c);
  const Exponent p = Exponent::parse(p_text);
  const ModulusResult r = modulus(g, family, p, c.tol);
  warn_conditioning(r, err);

  if (c.output == "csv") {
    out << kCsvHeader << p.to_string() << ',' << number(r.value) << ','
        << number(normalized(g, r)) << ',' << number(r.dual_lower) << ','
        << number(r.primal_upper) << ',' << number(r.gap) << ',' << r.iterations << '\n';
    return ok;
  }
  Json doc;
  doc["p"] = exponent_json(p);
  doc["value"] = r.value;
  doc["primal_upper"] = r.primal_upper;
  doc["dual_lower"] = r.dual_lower;
  doc["gap"] = r.gap;
  doc["iterations"] = r.iterations;
  Json rho = Json::object();
  for (EdgeId e = 0; e < g.edge_count(); ++e) rho[g.edge_key(e)] = r.rho_star[e];
  doc["rho_star"] = rho;
  Json lambda = Json::object();
  for (std::size_t i = 0; i < r.active_walks.size() && i < r.lambda.size(); ++i) {
    lambda[walk_key(g, r.active_walks[i])] = r.lambda[i];
  }
  doc["lambda"] = lambda;
  out << doc.dump(2) << '\n';
  return ok;
}

std::vector<Exponent> parse_p_list(const std::string& text) {
  if (text.empty()) return default_p_grid();
  std::vector<Exponent> list;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    list.push_back(Exponent::parse(std::string_view(text).substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return list;
}

int cmd_sweep(const Common& c, const std::string& p_list, std::ostream& out,
              std::ostream& err) {
  const Graph g = load_graph(c);
  const WalkFamily family = make_family(g, c);
  const auto rows = p_sweep(g, family, parse_p_list(p_list), c.tol);

  bool failed = false;
  for (const auto& r : rows) {
    if (r.error) {
      failed = true;
      err << "warning: p = " << r.p.to_string() << " failed: " << *r.error << '\n';
    } else if (!r.value_monotone || !r.normalized_monotone) {
      err << "warning: monotonicity violated at p = " << r.p.to_string() << '\n';
    }
  }
  if (c.output == "csv") {
    out << kCsvHeader;
    for (const auto& r : rows) {
      out << r.p.to_string();
      if (r.error) {
        out << ",,,,,,\n";
        continue;
      }
      out << ',' << number(r.value) << ',' << number(r.normalized) << ','
          << number(r.dual_lower) << ',' << number(r.primal_upper) << ',' << number(r.gap)
          << ',' << r.iterations << '\n';
    }
  } else {
    Json list = Json::array();
    for (const auto& r : rows) {
      Json row;
      row["p"] = exponent_json(r.p);
      if (r.error) {
        row["error"] = *r.error;
      } else {
        row["value"] = r.value;
        row["normalized"] = r.normalized;
        row["dual_lower"] = r.dual_lower;
        row["primal_upper"] = r.primal_upper;
        row["gap"] = r.gap;
        row["iterations"] = r.iterations;
        row["value_monotone"] = r.value_monotone;
        row["normalized_monotone"] = r.normalized_monotone;
      }
      list.push_back(row);
    }
    out << Json{{"rows", list}, {"monotone", sweep_monotone(rows)}}.dump(2) << '\n';
  }
  return failed ? nonconvergence : ok;
}

int cmd_compare(const Common& c, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(c);
  const VertexId s = g.vertex(c.source);
  const VertexId t = g.vertex(c.target);
  const WalkFamily family = WalkFamily::connecting(g, s, t);
  const double limit = std::max(1e-6, 10.0 * c.tol);
  bool pass = true;
  Json doc;
  auto check = [&](const char* name, double mod, double reference) {
    const double delta = std::abs(mod - reference);
    const bool ok_here = delta <= limit * std::max(1.0, std::abs(reference));
    pass = pass && ok_here;
    doc[name] = Json{{"modulus", mod}, {"reference", reference}, {"delta", delta},
                     {"pass", ok_here}};
  };

  const auto flow = max_flow_min_cut(g, s, t);
  check("mod_1_vs_max_flow", modulus(g, family, 1.0, c.tol).value, flow.value);
  if (g.directed()) {
    err << "warning: effective conductance is undefined on directed graphs; skipped\n";
    doc["mod_2_vs_effective_conductance"] = nullptr;
  } else {
    check("mod_2_vs_effective_conductance", modulus(g, family, 2.0, c.tol).value,
          effective_conductance(g, s, t));
  }
  const auto hops = shortest_hops(g, s, t);
  check("mod_inf_vs_inverse_hops", mod_infinity(g, family).first,
        hops ? 1.0 / static_cast<double>(*hops) : 0.0);
  doc["pass"] = pass;
  out << doc.dump(2) << '\n';
  if (!pass) err << "error: a theorem check exceeded " << number(limit) << '\n';
  return pass ? ok : internal_error;
}

int cmd_gradient(const Common& c, const std::string& p_text, double step, double fd_tol,
                 std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(c);
  const WalkFamily family = make_family(g, c);
  const Exponent p = Exponent::parse(p_text);
  if (!p.is_finite() || !(p.value() > 1.0)) {
    throw ParameterError("gradient needs a finite p > 1");
  }
  const ModulusResult r = modulus(g, family, p, c.tol);
  warn_conditioning(r, err);
  const auto grad = sigma_gradient(r);

  Json edges = Json::array();
  double euler = 0.0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    euler += g.sigma(e) * grad[e];
    const auto fd = modulus_finite_difference(g, family, p.value(), e, step, fd_tol);
    edges.push_back(Json{{"edge", g.edge_key(e)},
                         {"sigma", g.sigma(e)},
                         {"gradient", grad[e]},
                         {"finite_difference", fd.derivative},
                         {"delta", std::abs(grad[e] - fd.derivative)},
                         {"solver_noise", fd.solver_noise}});
  }
  Json doc;
  doc["p"] = exponent_json(p);
  doc["value"] = r.value;
  doc["euler_sum"] = euler;
  doc["edges"] = edges;
  out << doc.dump(2) << '\n';
  return ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"p-modulus of walk families on weighted graphs", "pmod"};
  app.require_subcommand(1);

  Common c;
  std::string p_text = "2";
  std::string p_list;
  double step = 1e-4;
  double fd_tol = 1e-12;

  auto* mod = app.add_subcommand("modulus", "Compute Mod_p of a walk family");
  add_common(mod, c, true);
  mod->add_option("--p", p_text, "Exponent p >= 1 or inf");
  mod->add_option("--output", c.output, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* sweep = app.add_subcommand("sweep", "Compute Mod_p over a list of exponents");
  add_common(sweep, c, true);
  sweep->add_option("--p-list", p_list, "Comma-separated ascending exponents");
  sweep->add_option("--output", c.output, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* compare = app.add_subcommand(
      "compare", "Check Mod_1, Mod_2 and Mod_inf against max-flow, conductance and hops");
  add_common(compare, c, false);

  auto* gradient = app.add_subcommand("gradient", "Derivative of Mod_p in each weight");
  add_common(gradient, c, true);
  gradient->add_option("--p", p_text, "Exponent 1 < p < inf");
  gradient->add_option("--step", step, "Finite-difference step relative to sigma(e)")
      ->check(CLI::Range(1e-12, 0.5));
  gradient->add_option("--fd-tol", fd_tol, "Solver tolerance for the finite differences")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> argv_store{"pmod"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }

  try {
    if (mod->parsed()) return cmd_modulus(c, p_text, out, err);
    if (sweep->parsed()) return cmd_sweep(c, p_list, out, err);
    if (compare->parsed()) return cmd_compare(c, out, err);
    return cmd_gradient(c, p_text, step, fd_tol, out, err);
  } catch (const NonConvergence& e) {
    err << "error: " << e.what() << '\n';
    return nonconvergence;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return internal_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return internal_error;
  }
}

} // namespace pmod::cli
