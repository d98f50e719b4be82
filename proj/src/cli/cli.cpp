#include "pire/cli/cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>

#include "CLI11.hpp"
#include "pire/colour/chromatic.hpp"
#include "pire/colour/heawood.hpp"
#include "pire/construct/augment.hpp"
#include "pire/construct/inverse_link.hpp"
#include "pire/construct/pipeline.hpp"
#include "pire/construct/seal.hpp"
#include "pire/construct/witness.hpp"
#include "pire/core/dot.hpp"
#include "pire/core/error.hpp"
#include "pire/core/io.hpp"
#include "pire/core/link.hpp"
#include "pire/testkit/acceptance.hpp"

namespace pire::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Options {
  std::string in;
  std::string out;
  std::string log;
  std::string witness = "data/k12_pire.json";
  std::optional<std::uint64_t> seed;
  std::uint64_t budget = 50'000'000;
  bool simple = false;
  bool brute = false;
  int palette = 12;
};

class Session {
 public:
  Session(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  Options opt;

  // Writes the artifact to --out, or to standard output when --out is absent.
  void emit(const json& j) const {
    if (opt.out.empty()) {
      out_ << io::dump(j);
    } else {
      io::write_json_file(opt.out, j);
    }
  }

  void write_log(const json& j) const {
    if (!opt.log.empty()) io::write_json_file(opt.log, j);
  }

  std::ostream& out() const { return opt.out.empty() ? null_ : out_; }
  std::ostream& summary() const { return out_; }
  std::ostream& err() const { return err_; }

  json input() const { return io::read_json_file(opt.in); }

 private:
  std::ostream& out_;
  std::ostream& err_;
  mutable std::ofstream null_;
};

template <class Carrier>
json colouring_json(const Colouring<Carrier>& c, const std::function<std::string(std::size_t)>& name) {
  json assignment = json::object();
  for (std::size_t i = 0; i < c.colours.size(); ++i) assignment[name(i)] = c.colours[i];
  return {{"palette_size", c.palette_size}, {"assignment", assignment}};
}

json solver_log(const SolverLog& log, int k, const std::function<std::string(std::size_t)>& name) {
  json clique = json::array();
  for (auto v : log.clique) clique.push_back(name(v));
  return {{"chromatic_number", k},
          {"clique", clique},
          {"initial_upper_bound", log.initial_upper_bound},
          {"branches", log.branches}};
}

std::function<std::string(std::size_t)> pair_names(const PairedGraph& pg) {
  return [&pg](std::size_t p) {
    const auto& [a, b] = pg.pairing.pair(static_cast<PairId>(p));
    return pg.graph.vertex_name(a) + "+" + pg.graph.vertex_name(b);
  };
}

int cmd_link(const Session& s) {
  const auto c = io::complex_from_json(s.input());
  const auto link = link_graph(c);
  s.emit(io::to_json(link));
  s.out() << "link graph: " << link.graph.vertex_count() << " vertices, " << link.graph.edge_count()
          << " edges, " << link.pairing.size() << " pairs\n";
  return kExitOk;
}

int cmd_quotient(const Session& s) {
  const auto pg = io::paired_graph_from_json(s.input());
  const auto q = s.opt.simple ? simple_quotient(pg) : paired_quotient(pg);
  s.emit(io::to_json(q));
  s.out() << (s.opt.simple ? "simple quotient: " : "paired quotient: ") << q.vertex_count() << " vertices, "
          << q.edge_count() << " edges\n";
  return kExitOk;
}

int cmd_chroma(const Session& s) {
  const auto g = io::graph_from_json(s.input());
  const auto r = chromatic_number(g);
  auto name = [&g](std::size_t v) { return g.vertex_name(static_cast<VertexId>(v)); };
  if (!s.opt.out.empty()) io::write_json_file(s.opt.out, colouring_json(r.witness, name));
  s.write_log(solver_log(r.log, r.k, name));
  s.summary() << r.k << "\n";
  return kExitOk;
}

int cmd_pair_chroma(const Session& s) {
  const auto pg = io::paired_graph_from_json(s.input());
  const auto r = pair_chromatic_number(pg);
  const auto name = pair_names(pg);
  if (!s.opt.out.empty()) io::write_json_file(s.opt.out, colouring_json(r.witness, name));
  s.write_log(solver_log(r.log, r.k, name));
  s.summary() << r.k << "\n";
  return kExitOk;
}

int cmd_colour_complex(const Session& s) {
  const auto c = io::complex_from_json(s.input());
  auto name = [&c](std::size_t e) { return c.skeleton.edge(static_cast<EdgeId>(e)).name; };
  if (s.opt.brute) {
    s.summary() << brute_force_edge_chromatic(c, s.opt.palette) << "\n";
    return kExitOk;
  }
  const auto r = edge_chromatic_number_complex(c);
  if (!s.opt.out.empty()) io::write_json_file(s.opt.out, colouring_json(r.witness, name));
  json log = solver_log(r.log, r.k, [](std::size_t p) { return std::to_string(p); });
  s.write_log(log);
  s.summary() << r.k << "\n";
  return kExitOk;
}

int cmd_heawood(const Session& s) {
  const auto pg = io::paired_graph_from_json(s.input());
  const auto order = heawood_degeneracy_order(pg);
  const auto c = heawood_colour_12(pg);
  const auto name = pair_names(pg);
  if (!s.opt.out.empty()) io::write_json_file(s.opt.out, colouring_json(c, name));
  json elimination = json::array();
  for (std::size_t i = 0; i < order.pairs.size(); ++i) {
    elimination.push_back({{"pair", name(order.pairs[i])}, {"degree", order.degrees[i]}});
  }
  s.write_log({{"elimination_order", elimination}, {"colours_used", c.used()}});
  s.summary() << c.used() << "\n";
  return kExitOk;
}

int cmd_augment(const Session& s) {
  const auto pg = make_degree_faithful(io::paired_graph_from_json(s.input()));
  s.emit(io::to_json(pg));
  s.out() << "degree-faithful map: " << pg.graph.vertex_count() << " vertices, " << pg.graph.edge_count()
          << " edges\n";
  return kExitOk;
}

int cmd_inverse_link(const Session& s) {
  const auto c = inverse_link(io::paired_graph_from_json(s.input()));
  s.emit(io::to_json(c));
  s.out() << "punctured complex: " << c.skeleton.edge_count() << " loops, " << c.cells.size() << " cells\n";
  return kExitOk;
}

int cmd_seal(const Session& s) {
  const auto c = seal(io::complex_from_json(s.input()));
  s.emit(io::to_json(c));
  s.out() << "sealed complex: " << c.skeleton.edge_count() << " edges, " << c.cells.size() << " cells\n";
  return kExitOk;
}

int cmd_pipeline(const Session& s) {
  if (s.opt.out.empty()) throw InputError("pipeline needs --out <directory>");
  const auto w = witness_from_json(s.input());
  const auto r = build_non_11_colourable(w);
  const fs::path dir = s.opt.out;
  fs::create_directories(dir);
  io::write_json_file(dir / "augmented.json", io::to_json(r.augmented));
  io::write_json_file(dir / "punctured.json", io::to_json(r.punctured));
  io::write_json_file(dir / "sealed.json", io::to_json(r.sealed));
  auto name = [&r](std::size_t e) { return r.sealed.skeleton.edge(static_cast<EdgeId>(e)).name; };
  io::write_json_file(dir / "sealed_colouring.json", colouring_json(r.heawood, name));
  s.summary() << "augmented map: " << r.augmented.graph.edge_count() << " edges\n"
              << "punctured complex: " << r.punctured.cells.size() << " cells\n"
              << "sealed complex: " << r.sealed.skeleton.edge_count() << " edges, " << r.sealed.cells.size()
              << " cells\n"
              << "edge-chromatic number: " << r.exact.k << " (K" << r.clique_lower_bound
              << " lower bound, Heawood colouring with " << r.heawood.used() << " colours)\n";
  return kExitOk;
}

int cmd_verify_witness(const Session& s) {
  const auto report = verify_witness(witness_from_json(s.input()));
  for (const auto& c : report.checks) {
    s.summary() << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
  }
  if (const auto* failed = report.first_failure()) {
    s.err() << "error: check-failed: " << failed->name << ": " << failed->detail << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

int cmd_search_witness(const Session& s) {
  if (!s.opt.seed) throw InputError("search-witness needs --seed");
  SearchOptions options;
  options.seed = *s.opt.seed;
  options.budget = s.opt.budget;
  const auto r = search_witness(options);
  if (!s.opt.log.empty()) {
    std::ofstream log(s.opt.log, std::ios::binary);
    for (const auto& line : r.log) log << line << "\n";
  }
  if (!r.witness) {
    s.err() << "error: search-failed: budget exhausted at objective " << r.best_objective << " of "
            << kMaxObjective << "\n";
    return kExitDomain;
  }
  s.emit(to_json(*r.witness));
  s.out() << "witness found after " << r.iterations << " iterations\n";
  return kExitOk;
}

int cmd_genus(const Session& s) {
  const auto pg = io::paired_graph_from_json(s.input());
  if (!pg.rotation) throw InputError("genus needs a rotation system in the input");
  const auto report = genus_check(pg.graph, *pg.rotation);
  json comps = json::array();
  for (const auto& c : report.components) {
    comps.push_back({{"vertices", c.vertices}, {"edges", c.edges}, {"faces", c.faces}, {"genus", c.genus}});
    s.summary() << "component: V=" << c.vertices << " E=" << c.edges << " F=" << c.faces << " genus=" << c.genus
                << "\n";
  }
  s.summary() << (report.is_planar_embedding() ? "planar embedding\n" : "not a planar embedding\n");
  if (!s.opt.out.empty()) {
    io::write_json_file(s.opt.out, {{"components", comps}, {"is_planar_embedding", report.is_planar_embedding()}});
  }
  return kExitOk;
}

int cmd_dot(const Session& s) {
  const auto j = s.input();
  std::string text;
  if (j.is_object() && j.contains("skeleton")) {
    text = to_dot(io::complex_from_json(j).skeleton);
  } else if (j.is_object() && j.contains("pairs")) {
    text = to_dot(io::paired_graph_from_json(j, {"designated_pairs", "provenance"}));
  } else {
    text = to_dot(io::graph_from_json(j));
  }
  if (s.opt.out.empty()) {
    s.summary() << text;
  } else {
    std::ofstream(s.opt.out, std::ios::binary) << text;
  }
  return kExitOk;
}

int cmd_corpus(const Session& s) {
  testkit::AcceptanceOptions options;
  options.witness_path = s.opt.witness;
  options.on_result = [&s](const testkit::CriterionResult& r) { s.summary() << testkit::format_result(r) << "\n"; };
  const auto results = testkit::run_acceptance(options);
  for (const auto& r : results) {
    if (!r.passed) {
      s.err() << "error: acceptance-failed: criterion " << r.id << " " << (r.blocked ? "blocked" : "failed") << "\n";
      return kExitDomain;
    }
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Session session(out, err);
  auto& opt = session.opt;
  CLI::App app{"Edge-colourings of 2-complexes through link graphs and 2-pire maps", "pire"};
  app.require_subcommand(1);

  struct Command {
    const char* name;
    const char* help;
    std::function<int(const Session&)> run;
    bool needs_in = true;
  };
  const std::vector<Command> commands = {
      {"link", "complex -> link graph with default pairing", cmd_link},
      {"quotient", "paired graph -> paired quotient (--simple: drop loops and parallels)", cmd_quotient},
      {"chroma", "graph -> exact chromatic number", cmd_chroma},
      {"pair-chroma", "paired graph -> exact pair-chromatic number", cmd_pair_chroma},
      {"colour-complex", "complex -> exact edge-chromatic number", cmd_colour_complex},
      {"heawood12", "2-pire map with rotation -> 12-pair-colouring", cmd_heawood},
      {"augment", "2-pire map -> degree-faithful 2-pire map", cmd_augment},
      {"inverse-link", "degree-faithful 2-pire map -> punctured complex", cmd_inverse_link},
      {"seal", "punctured complex -> genuine complex", cmd_seal},
      {"pipeline", "witness -> augmented map, punctured and sealed complexes", cmd_pipeline},
      {"verify-witness", "check a 12-chromatic 2-pire witness", cmd_verify_witness},
      {"search-witness", "search for a 12-chromatic 2-pire witness", cmd_search_witness, false},
      {"genus", "paired graph with rotation -> genus per component", cmd_genus},
      {"dot", "graph, paired graph or complex -> Graphviz", cmd_dot},
      {"corpus", "run the acceptance suite", cmd_corpus, false},
  };
  std::function<int(const Session&)> selected;
  for (const auto& cmd : commands) {
    auto* sub = app.add_subcommand(cmd.name, cmd.help);
    if (cmd.needs_in) sub->add_option("--in", opt.in, "input file")->required();
    sub->add_option("--out", opt.out, "output file or directory");
    const std::string name = cmd.name;
    if (name == "quotient") sub->add_flag("--simple", opt.simple, "simple quotient");
    if (name == "chroma" || name == "pair-chroma" || name == "colour-complex" || name == "heawood12" ||
        name == "search-witness") {
      sub->add_option("--log", opt.log, "proof/search log file");
    }
    if (name == "colour-complex") {
      sub->add_flag("--brute", opt.brute, "exhaustive walk-level search (at most 12 edges)");
      sub->add_option("--palette", opt.palette, "largest palette tried by --brute");
    }
    if (name == "search-witness") {
      sub->add_option("--seed", opt.seed, "random seed")->required();
      sub->add_option("--budget", opt.budget, "annealing iterations");
    }
    if (name == "corpus") sub->add_option("--witness", opt.witness, "witness file");
    sub->callback([&selected, run = cmd.run] { selected = run; });
  }

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: usage: " << ex.what() << "\n";
    return kExitInput;
  }

  try {
    return selected(session);
  } catch (const InputError& ex) {
    err << "error: input: " << ex.what() << "\n";
    return kExitInput;
  } catch (const nlohmann::json::exception& ex) {
    err << "error: input: " << ex.what() << "\n";
    return kExitInput;
  } catch (const DomainError& ex) {
    err << "error: domain: " << ex.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& ex) {
    err << "error: internal: " << ex.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace pire::cli
