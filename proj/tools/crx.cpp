// crx: generate graphs, colour them, verify colourings and solve for crx_k.

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "crx/constructions.hpp"
#include "crx/generators.hpp"
#include "crx/rainbow_search.hpp"
#include "crx/solver.hpp"
#include "crx/structure.hpp"
#include "document.hpp"

namespace {

using namespace crx;
using cli::GraphDocument;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitBudget = 2;
constexpr int kExitInput = 3;

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw SchemaError("cannot write " + path);
  out << text;
}

int param(const json& params, const char* name) {
  if (!params.contains(name) || !params.at(name).is_number_integer()) {
    throw SchemaError(std::string("metadata.params.") + name + " is required for this construction");
  }
  return params.at(name).get<int>();
}

int cube_dimension(const Graph& g) {
  int d = 0;
  while ((1 << d) < g.order()) ++d;
  return d;
}

struct GenArgs {
  std::string family;
  int n = 0, m = 0, k = 0, t = 0, a = 0, b = 0, c = 0;
  std::vector<int> sizes;
  std::string out = "-";
};

GraphDocument run_gen(const GenArgs& a) {
  GraphDocument doc;
  cli::Metadata meta;
  meta.family = a.family;
  const std::string& f = a.family;
  if (f == "cycle") {
    doc.graph = cycle(a.n);
    meta.params = {{"n", a.n}};
  } else if (f == "complete") {
    doc.graph = complete(a.n);
    meta.params = {{"n", a.n}};
  } else if (f == "complete-bipartite") {
    doc.graph = complete_bipartite(a.m, a.n);
    meta.params = {{"m", a.m}, {"n", a.n}};
  } else if (f == "multipartite") {
    doc.graph = complete_multipartite(a.sizes);
    meta.params = {{"sizes", a.sizes}};
  } else if (f == "balanced-multipartite") {
    doc.graph = complete_multipartite(std::vector<int>(static_cast<std::size_t>(std::max(a.t, 0)), a.n));
    meta.params = {{"t", a.t}, {"n", a.n}};
  } else if (f == "wheel") {
    doc.graph = wheel(a.n);
    meta.params = {{"n", a.n}};
  } else if (f == "hypercube") {
    doc.graph = hypercube(a.n);
    meta.params = {{"n", a.n}};
  } else if (f == "petersen") {
    doc.graph = petersen();
    meta.params = json::object();
  } else if (f == "theta") {
    doc.graph = theta(a.a, a.b, a.c);
    meta.params = {{"a", a.a}, {"b", a.b}, {"c", a.c}};
  } else if (f == "path-cycle-join") {
    doc.graph = path_cycle_join(a.k, a.t);
    meta.params = {{"k", a.k}, {"t", a.t}};
  } else {
    throw InvalidParameter("unknown family '" + f + "'");
  }
  doc.metadata = std::move(meta);
  return doc;
}

struct ColourArgs {
  std::string in = "-", out = "-", construction, scheme = "auto";
  int k = 1, attempts = 2000, K = 0, threads = 1;
  std::optional<std::uint64_t> seed;
  std::uint64_t budget = NodeBudget::kDefault;
  bool no_verify = false;
};

BipartiteScheme parse_scheme(const std::string& s) {
  if (s == "auto") return BipartiteScheme::Auto;
  if (s == "four") return BipartiteScheme::FourColour;
  if (s == "rainbow") return BipartiteScheme::Rainbow;
  if (s == "colex") return BipartiteScheme::Colex;
  if (s == "eight") return BipartiteScheme::EightColour;
  if (s == "six-k") return BipartiteScheme::SixK;
  throw InvalidParameter("unknown bipartite scheme '" + s + "'");
}

GraphDocument run_colour(const ColourArgs& a) {
  GraphDocument doc = cli::parse_document(read_input(a.in));
  const Graph& g = doc.graph;
  const json params = doc.metadata ? doc.metadata->params : json::object();
  const ConstructOptions opts{!a.no_verify, a.budget, a.threads};
  auto need_seed = [&] {
    if (!a.seed) throw InvalidParameter("construction '" + a.construction + "' is randomised; pass --seed");
    return *a.seed;
  };
  const std::string& c = a.construction;
  std::optional<EdgeColouring> out;
  if (c == "rainbow") {
    out = EdgeColouring::rainbow(g);
  } else if (c == "wheel") {
    out = colour_wheel(g.order() - 1, a.k, opts);
  } else if (c == "complete-2rainbow") {
    out = colour_complete_2rainbow(g.order(), opts);
  } else if (c == "complete-random") {
    out = colour_complete_random(g.order(), a.k, need_seed(), a.attempts, opts);
  } else if (c == "bipartite") {
    out = colour_bipartite(param(params, "m"), param(params, "n"), a.k, parse_scheme(a.scheme), opts);
  } else if (c == "multipartite-blowup") {
    if (!params.contains("sizes")) throw SchemaError("metadata.params.sizes is required");
    out = colour_multipartite_blowup(params.at("sizes").get<std::vector<int>>(), opts);
  } else if (c == "multipartite-random") {
    out = colour_balanced_multipartite_random(param(params, "t"), param(params, "n"), a.k, need_seed(), a.attempts,
                                              opts);
  } else if (c == "cube") {
    out = colour_cube(cube_dimension(g), a.k, opts);
  } else if (c == "cube-recursive") {
    out = colour_cube_recursive(cube_dimension(g), a.k, a.K);
  } else if (c == "save-one-1") {
    out = colour_save_one_crx1(g, opts);
  } else if (c == "save-one-2") {
    out = colour_save_one_crx2(g, opts);
  } else if (c == "join-rxk") {
    out = colour_join_rxk(param(params, "k"), param(params, "t"), opts);
  } else {
    throw InvalidParameter("unknown construction '" + c + "'");
  }
  if (!(out->graph() == g)) {
    throw InvalidParameter("construction '" + c + "' does not produce the document's graph");
  }
  doc.colouring = std::move(out);
  if (!doc.metadata) doc.metadata = cli::Metadata{};
  doc.metadata->params["construction"] = c;
  doc.metadata->params["k"] = a.k;
  if (a.seed) doc.metadata->seed = a.seed;
  return doc;
}

struct CheckArgs {
  std::string in = "-", mode = "exact";
  int k = 1, threads = 1, max_k = 4;
  std::uint64_t budget = NodeBudget::kDefault;
  bool index = false, force = false;
};

int run_verify(const CheckArgs& a) {
  GraphDocument doc = cli::parse_document(read_input(a.in));
  if (!doc.colouring) throw SchemaError("document has no colouring to verify");
  SearchOptions opts{a.budget, a.threads};
  VerificationReport rep = a.index ? verify_k_rainbow_index_colouring(*doc.colouring, a.k, opts)
                                   : verify_k_rainbow_cycle_colouring(*doc.colouring, a.k, opts);
  json j = cli::to_json(rep);
  j["k"] = a.k;
  j["property"] = a.index ? "rainbow_tree" : "rainbow_cycle";
  j["colours"] = doc.colouring->colour_count();
  std::cout << j.dump(2) << "\n";
  return rep.certified() ? kExitOk : kExitCounterexample;
}

int run_solve(const CheckArgs& a) {
  GraphDocument doc = cli::parse_document(read_input(a.in));
  CrxResult res;
  if (a.mode == "exact") {
    SolverOptions opts;
    opts.budget = a.budget;
    opts.force = a.force;
    res = a.index ? rx_exact(doc.graph, a.k, opts) : crx_exact(doc.graph, a.k, opts);
  } else if (a.mode == "interval") {
    if (a.index) throw InvalidParameter("interval mode is only available for crx_k");
    res = crx_interval(doc.graph, a.k, a.budget);
  } else {
    throw InvalidParameter("mode must be 'exact' or 'interval'");
  }
  json j = cli::to_json(res);
  j["k"] = a.k;
  j["quantity"] = a.index ? "rx" : "crx";
  j["mode"] = a.mode;
  std::cout << j.dump(2) << "\n";
  return (a.mode == "exact" && !res.exact()) ? kExitBudget : kExitOk;
}

int run_analyze(const CheckArgs& a) {
  GraphDocument doc = cli::parse_document(read_input(a.in));
  const Graph& g = doc.graph;
  json j;
  j["n"] = g.order();
  j["e"] = g.size();
  j["connected"] = is_connected(g);
  j["two_connected"] = is_two_connected(g);
  j["minimally_two_connected"] = is_minimally_2_connected(g);
  const BlockDecomposition dec = block_decomposition(g);
  json blocks = json::array();
  for (const Block& b : dec.blocks) blocks.push_back({{"vertices", b.vertices}, {"edges", b.edges}});
  j["blocks"] = std::move(blocks);
  j["cut_vertices"] = dec.cut_vertices;
  try {
    GraphInvariants inv = graph_invariants(g, a.budget);
    j["girth"] = inv.girth ? json(*inv.girth) : json(nullptr);
    j["circumference"] = inv.circumference;
    j["hamiltonian"] = inv.is_hamiltonian;
    j["hypohamiltonian"] = g.order() >= 3 ? json(is_hypohamiltonian(g, a.budget)) : json(false);
  } catch (const BudgetExceeded&) {
    j["invariants"] = "budget exceeded";
  }
  json fk = json::object();
  for (int k = 1; k <= std::min(a.max_k, g.order()); ++k) {
    try {
      fk[std::to_string(k)] = in_family_Fk(g, k, a.budget);
    } catch (const BudgetExceeded&) {
      fk[std::to_string(k)] = "budget exceeded";
    }
  }
  j["in_F_k"] = std::move(fk);
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rainbow cycle colourings: generate, colour, verify, solve"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph document");
  gen_cmd->add_option("family", gen.family,
                      "cycle | complete | complete-bipartite | multipartite | balanced-multipartite | wheel | "
                      "hypercube | petersen | theta | path-cycle-join")
      ->required();
  gen_cmd->add_option("-n", gen.n, "Order, rim length, dimension, or larger class size");
  gen_cmd->add_option("-m", gen.m, "Smaller class size (complete-bipartite)");
  gen_cmd->add_option("-k", gen.k, "k (path-cycle-join)");
  gen_cmd->add_option("-t", gen.t, "Parts (balanced-multipartite) or t (path-cycle-join)");
  gen_cmd->add_option("--sizes", gen.sizes, "Part sizes, nondecreasing (multipartite)");
  gen_cmd->add_option("-a", gen.a, "First path length (theta)");
  gen_cmd->add_option("-b", gen.b, "Second path length (theta)");
  gen_cmd->add_option("-c", gen.c, "Third path length (theta)");
  gen_cmd->add_option("-o,--out", gen.out, "Output file, - for stdout");

  ColourArgs col;
  std::uint64_t seed_value = 0;
  auto* col_cmd = app.add_subcommand("colour", "Colour the graph of a document with a construction");
  col_cmd->add_option("construction", col.construction,
                      "rainbow | wheel | complete-2rainbow | complete-random | bipartite | multipartite-blowup | "
                      "multipartite-random | cube | cube-recursive | save-one-1 | save-one-2 | join-rxk")
      ->required();
  col_cmd->add_option("-i,--in", col.in, "Input document, - for stdin");
  col_cmd->add_option("-o,--out", col.out, "Output document, - for stdout");
  col_cmd->add_option("-k", col.k, "k");
  auto* seed_opt = col_cmd->add_option("--seed", seed_value, "Seed for randomised constructions (required by them)");
  col_cmd->add_option("--attempts", col.attempts, "Sampling attempts for randomised constructions");
  col_cmd->add_option("--scheme", col.scheme, "Bipartite scheme: auto | four | rainbow | colex | eight | six-k");
  col_cmd->add_option("--K", col.K, "Block size K for cube-recursive");
  col_cmd->add_option("--budget", col.budget, "Search node budget for self-verification");
  col_cmd->add_option("--threads", col.threads, "Worker thread cap");
  col_cmd->add_flag("--no-verify", col.no_verify, "Skip self-verification");

  CheckArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Verify the colouring of a document");
  ver_cmd->add_option("-i,--in", ver.in, "Input document, - for stdin");
  ver_cmd->add_option("-k", ver.k, "k")->required();
  ver_cmd->add_flag("--index", ver.index, "Check rainbow trees (rainbow index) instead of cycles");
  ver_cmd->add_option("--budget", ver.budget, "Search node budget");
  ver_cmd->add_option("--threads", ver.threads, "Worker thread cap");

  CheckArgs sol;
  auto* sol_cmd = app.add_subcommand("solve", "Compute crx_k (or rx_k) of a document's graph");
  sol_cmd->add_option("-i,--in", sol.in, "Input document, - for stdin");
  sol_cmd->add_option("-k", sol.k, "k")->required();
  sol_cmd->add_option("--mode", sol.mode, "exact | interval");
  sol_cmd->add_flag("--index", sol.index, "Solve rx_k instead of crx_k (exact mode)");
  sol_cmd->add_flag("--force", sol.force, "Run the exact solver outside its default scope");
  sol_cmd->add_option("--budget", sol.budget, "Search node budget");

  CheckArgs ana;
  auto* ana_cmd = app.add_subcommand("analyze", "Structural report: blocks, girth, F_k membership");
  ana_cmd->add_option("-i,--in", ana.in, "Input document, - for stdin");
  ana_cmd->add_option("--max-k", ana.max_k, "Largest k tested for F_k membership");
  ana_cmd->add_option("--budget", ana.budget, "Search node budget");

  std::string dot_in = "-", dot_out = "-";
  auto* dot_cmd = app.add_subcommand("export-dot", "Export a document as Graphviz DOT");
  dot_cmd->add_option("-i,--in", dot_in, "Input document, - for stdin");
  dot_cmd->add_option("-o,--out", dot_out, "Output file, - for stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen_cmd) {
      write_output(gen.out, cli::emit_document(run_gen(gen)));
    } else if (*col_cmd) {
      if (*seed_opt) col.seed = seed_value;
      write_output(col.out, cli::emit_document(run_colour(col)));
    } else if (*ver_cmd) {
      return run_verify(ver);
    } else if (*sol_cmd) {
      return run_solve(sol);
    } else if (*ana_cmd) {
      return run_analyze(ana);
    } else if (*dot_cmd) {
      write_output(dot_out, cli::to_dot(cli::parse_document(read_input(dot_in))));
    }
    return kExitOk;
  } catch (const BudgetExceeded& ex) {
    std::cerr << "crx: budget exceeded: " << ex.what() << "\n";
    return kExitBudget;
  } catch (const RegimeUnsupported& ex) {
    std::cerr << "crx: unsupported: " << ex.what() << "\n";
    return kExitBudget;
  } catch (const ScopeExceeded& ex) {
    std::cerr << "crx: unsupported: " << ex.what() << "\n";
    return kExitBudget;
  } catch (const AttemptsExhausted& ex) {
    std::cerr << "crx: unsupported: " << ex.what() << "\n";
    return kExitBudget;
  } catch (const Error& ex) {
    std::cerr << "crx: " << ex.what() << "\n";
    return kExitInput;
  }
}
