#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "blockerlab/blocker_families.hpp"
#include "blockerlab/exhaustive.hpp"
#include "blockerlab/ham_paths.hpp"
#include "blockerlab/serialization.hpp"
#include "blockerlab/svg.hpp"
#include "blockerlab/witnesses.hpp"

namespace blockerlab::cli {

namespace {

using nlohmann::json;

// Rejection of well-formed input on mathematical grounds (exit 1).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SetInput {
  std::optional<int> n;
  std::string edges;
  std::string edges_json;
};

void add_set_flags(CLI::App* cmd, SetInput& in) {
  cmd->add_option("--n", in.n, "Order of the polygon");
  cmd->add_option("--edges", in.edges, "Edge list such as \"1-2,2-3,14-2\" (requires --n)");
  cmd->add_option("--edges-json", in.edges_json, "Edge set as {\"n\": .., \"edges\": [[a, b], ..]}");
}

std::string read_arg(const std::string& text) {
  if (text.empty() || text.front() != '@') return text;
  std::ifstream in(text.substr(1));
  if (!in) throw CLI::ValidationError("cannot read " + text.substr(1));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

EdgeSet read_set(const SetInput& in) {
  if (!in.edges_json.empty()) {
    EdgeSet s = edge_set_from_json(parse_json(read_arg(in.edges_json)));
    if (in.n && *in.n != s.order()) throw CLI::ValidationError("--n disagrees with the n in --edges-json");
    return s;
  }
  if (!in.n) throw CLI::RequiredError("--n");
  if (*in.n < 3) throw CLI::ValidationError("--n must be at least 3");
  return parse_edge_list(*in.n, in.edges);
}

int require_order(const std::optional<int>& n, bool odd) {
  if (!n) throw CLI::RequiredError("--n");
  if (*n < 3) throw CLI::ValidationError("--n must be at least 3");
  if (odd && *n % 2 == 0) throw DomainError("n must be odd for this command");
  return *n;
}

std::vector<int> parse_int_list(const std::string& text, const char* flag) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError(std::string(flag) + " expects comma-separated integers");
    }
  }
  return out;
}

int resolve_workers(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("BLOCKERLAB_WORKERS")) {
    try {
      return std::max(0, std::stoi(env));
    } catch (const std::exception&) {
      throw CLI::ValidationError("BLOCKERLAB_WORKERS must be an integer");
    }
  }
  return 0;
}

EnumerationOptions enumeration_options(int workers, const std::string& method, int n) {
  EnumerationOptions opts;
  opts.workers = resolve_workers(workers);
  if (const char* dir = std::getenv("BLOCKERLAB_CHECKPOINT_DIR"); dir && *dir)
    opts.checkpoint = std::filesystem::path(dir) / ("blockers-" + method + "-n" + std::to_string(n) + ".json");
  return opts;
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << text;
  if (!f.flush()) throw std::runtime_error("failed writing " + path);
}

json verify(const EdgeSet& s) {
  const int n = s.order();
  const int m = (n + 1) / 2;
  json j = {{"n", n}};
  const bool blocking = blocks(s);
  j["blocks"] = blocking;
  if (n % 2 == 1) {
    j["is_blocker"] = blocking && static_cast<int>(s.size()) == m;
  } else {
    const MinBlockingResult min = min_blocking_size(n);
    j["is_blocker"] = min.computed() ? json(blocking && static_cast<int>(s.size()) == *min.size) : json(nullptr);
  }
  if (blocking) {
    j["method"] = "exhaustive";
    return j;
  }
  if (n % 2 == 1 && static_cast<int>(s.size()) == m) {
    const auto w = find_structured_witness(s);
    j["witness"] = to_json(w->path);
    j["method"] = method_name(w->method);
  } else {
    j["witness"] = to_json(*find_avoiding_shp(s));
    j["method"] = method_name(WitnessMethod::kSearch);
  }
  return j;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Blockers for simple Hamiltonian paths in convex geometric graphs", "blockerlab"};
  app.require_subcommand(1);

  std::optional<int> n;
  SetInput set_in;
  int workers = 0;
  std::string out_path;

  auto* shp_count = app.add_subcommand("shp-count", "Number of simple Hamiltonian paths of CK(n)");
  shp_count->add_option("--n", n, "Order of the polygon")->required();

  auto* shp_list = app.add_subcommand("shp-list", "All simple Hamiltonian paths of CK(n), one JSON array per line");
  shp_list->add_option("--n", n, "Order of the polygon")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Decide whether an edge set meets every SHP");
  add_set_flags(verify_cmd, set_in);

  std::string cls;
  std::string params_json;
  std::optional<int> m, k, alpha, beta, gamma, delta, eta;
  std::string eps, xi;
  auto* generate_cmd = app.add_subcommand("generate", "Edge set of a Class A or Class B descriptor");
  generate_cmd->add_option("--params-json", params_json, "Descriptor JSON (or @file)");
  generate_cmd->add_option("--class", cls, "A or B")->check(CLI::IsMember({"A", "B"}));
  generate_cmd->add_option("--m", m, "Half order, n = 2m-1");
  generate_cmd->add_option("--k", k, "Rotation");
  generate_cmd->add_option("--alpha", alpha);
  generate_cmd->add_option("--beta", beta);
  generate_cmd->add_option("--gamma", gamma, "Defaults to m-alpha-beta-delta-1");
  generate_cmd->add_option("--delta", delta);
  generate_cmd->add_option("--eta", eta, "Bridge offset");
  generate_cmd->add_option("--eps", eps, "Comma-separated eps_1,...,eps_alpha");
  generate_cmd->add_option("--xi", xi, "Comma-separated xi_1,...,xi_delta");

  auto* classify_cmd = app.add_subcommand("classify", "Descriptor of a blocker, or a witness SHP");
  add_set_flags(classify_cmd, set_in);

  std::string enum_method = "pruned";
  std::string theorem_method = "auto";
  auto* enum_cmd = app.add_subcommand("enumerate-blockers", "All blockers of CK(n) as JSON Lines");
  enum_cmd->add_option("--n", n, "Odd order")->required();
  enum_cmd->add_option("--method", enum_method, "brute, pruned or parametric")
      ->check(CLI::IsMember({"brute", "pruned", "parametric"}))
      ->capture_default_str();
  enum_cmd->add_option("--out", out_path, "JSON Lines file; a summary is then printed");
  enum_cmd->add_option("--workers", workers, "Worker threads (BLOCKERLAB_WORKERS)");

  auto* theorem_cmd = app.add_subcommand("check-theorem", "Compare enumerated blockers with the parametric families");
  theorem_cmd->add_option("--n", n, "Odd order")->required();
  theorem_cmd->add_option("--method", theorem_method, "auto, brute or pruned")
      ->check(CLI::IsMember({"auto", "brute", "pruned"}))
      ->capture_default_str();
  theorem_cmd->add_option("--workers", workers, "Worker threads (BLOCKERLAB_WORKERS)");

  auto* render_cmd = app.add_subcommand("render", "SVG drawing of an edge set");
  add_set_flags(render_cmd, set_in);
  render_cmd->add_option("--out", out_path, "SVG file (default stdout)");

  try {
    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
      out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
      return kExitOk;
    }

    if (shp_count->parsed()) {
      const int order = require_order(n, false);
      out << json{{"n", order}, {"count", count_shps(order)}}.dump() << '\n';
    } else if (shp_list->parsed()) {
      for_each_shp(require_order(n, false), [&](const Path& p) { out << to_json(p).dump() << '\n'; });
    } else if (verify_cmd->parsed()) {
      out << verify(read_set(set_in)).dump() << '\n';
    } else if (generate_cmd->parsed()) {
      BlockerDescriptor d;
      if (!params_json.empty()) {
        try {
          d = descriptor_from_json(parse_json(read_arg(params_json)));
        } catch (const ParseError&) {
          throw;
        } catch (const std::invalid_argument& e) {
          throw CLI::ValidationError(std::string("--params-json: ") + e.what());
        }
      } else {
        if (cls.empty()) throw CLI::RequiredError("--class or --params-json");
        if (!m) throw CLI::RequiredError("--m");
        const int a = alpha.value_or(0);
        const int dl = delta.value_or(0);
        if (cls == "A") {
          d = ClassAParams{*m, k.value_or(0), a, dl, parse_int_list(eps, "--eps"), parse_int_list(xi, "--xi")};
        } else {
          if (!beta) throw CLI::RequiredError("--beta");
          if (!eta) throw CLI::RequiredError("--eta");
          d = ClassBParams{*m,   k.value_or(0), a,   *beta, gamma.value_or(*m - a - *beta - dl - 1),
                           dl,   *eta,          parse_int_list(eps, "--eps"), parse_int_list(xi, "--xi")};
        }
      }
      if (auto v = validate(d)) throw DomainError(constraint_name(v->constraint) + ": " + v->message);
      out << to_json(generate(d)).dump() << '\n';
    } else if (classify_cmd->parsed()) {
      const EdgeSet s = read_set(set_in);
      if (s.order() % 2 == 0) throw DomainError("classify requires odd n");
      if (static_cast<int>(s.size()) != (s.order() + 1) / 2) throw DomainError("classify requires exactly m = (n+1)/2 edges");
      const ClassificationResult r = classify(s);
      if (const auto* hit = std::get_if<Matched>(&r)) {
        out << json{{"descriptor", to_json(hit->descriptor)}}.dump() << '\n';
      } else {
        out << json{{"witness", to_json(std::get<NotBlocker>(r).witness)}}.dump() << '\n';
      }
    } else if (enum_cmd->parsed()) {
      const int order = require_order(n, true);
      std::vector<EdgeSet> sets;
      if (enum_method == "parametric") {
        sets = parametric_blockers(order);
      } else if (enum_method == "brute") {
        if (order > kMaxBruteForceOrder) throw DomainError("brute force is limited to n <= 9; use --method pruned");
        sets = enumerate_blockers_bruteforce(order, enumeration_options(workers, enum_method, order));
      } else {
        if (order > kMaxPrunedOrder) throw DomainError("pruned search is limited to n <= 13");
        sets = enumerate_blockers_pruned(order, enumeration_options(workers, enum_method, order));
      }
      std::string lines;
      for (const EdgeSet& s : sets) lines += to_json(s).dump() + '\n';
      write_output(out_path, lines, out);
      if (!out_path.empty())
        out << json{{"n", order}, {"method", enum_method}, {"count", sets.size()}, {"out", out_path}}.dump() << '\n';
    } else if (theorem_cmd->parsed()) {
      const int order = require_order(n, true);
      OracleMethod om = OracleMethod::kAuto;
      if (theorem_method == "brute") om = OracleMethod::kBruteForce;
      if (theorem_method == "pruned") om = OracleMethod::kPruned;
      if (om == OracleMethod::kAuto) om = order <= kMaxBruteForceOrder ? OracleMethod::kBruteForce : OracleMethod::kPruned;
      if (om == OracleMethod::kBruteForce && order > kMaxBruteForceOrder)
        throw DomainError("brute force is limited to n <= 9; use --method pruned");
      if (order > kMaxPrunedOrder) throw DomainError("pruned search is limited to n <= 13");
      const CharacterizationReport r = check_characterization(order, om, enumeration_options(workers, oracle_name(om), order));
      out << to_json(r).dump() << '\n';
    } else if (render_cmd->parsed()) {
      write_output(out_path, render_svg(read_set(set_in)), out);
    }
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\nrun with --help for usage\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace blockerlab::cli
