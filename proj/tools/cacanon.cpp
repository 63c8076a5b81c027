// cacanon: canonical circular-arc representations from the command line.
//
// Exit codes: 0 success / CA / ISO, 1 NOT-CA / NON-ISO, 2 usage or parse
// error, 3 budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cagraph/candidates.hpp"
#include "cagraph/canonizer.hpp"
#include "cagraph/graph_file.hpp"
#include "cagraph/interval_canon.hpp"
#include "cagraph/oracle.hpp"
#include "cagraph/reduction.hpp"
#include "cagraph/svg.hpp"

namespace
{

using namespace cagraph;

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_usage = 2;
constexpr int exit_budget = 3;

std::string format_set(const VertexSet &set)
{
  std::string s = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i)
      s += ',';
    s += std::to_string(set[i] + 1);
  }
  return s + "}";
}

int budget_error(int k, int k_max)
{
  std::cerr << "budget exceeded: |K_G| = " << k << " > kmax = " << k_max
            << " (raise --kmax)\n";
  return exit_budget;
}

int cmd_recognize(const std::string &file, int k_max)
{
  const CanonOutcome o = canonical_representation(read_graph_file(file), k_max);
  if (o.verdict == Verdict::budget_exceeded)
    return budget_error(o.k, k_max);
  std::cout << to_string(o.verdict) << '\n';
  return o.verdict == Verdict::ca ? exit_ok : exit_negative;
}

int cmd_canon(const std::string &file, int k_max)
{
  const CanonOutcome o = canonical_representation(read_graph_file(file), k_max);
  if (o.verdict == Verdict::budget_exceeded)
    return budget_error(o.k, k_max);
  if (o.verdict == Verdict::not_ca) {
    std::cerr << "input is not a circular-arc graph\n";
    return exit_negative;
  }
  std::cout << o.canonical->text << '\n';
  const auto &assign = o.canonical->representation.assign;
  for (std::size_t v = 0; v < assign.size(); ++v)
    std::cout << (v ? " " : "") << 'v' << v + 1 << '=' << assign[v] + 1;
  std::cout << '\n';
  return exit_ok;
}

int cmd_iso(const std::string &file_a, const std::string &file_b, int k_max)
{
  const CanonOutcome a = canonical_representation(read_graph_file(file_a), k_max);
  const CanonOutcome b = canonical_representation(read_graph_file(file_b), k_max);
  for (const CanonOutcome *o : {&a, &b})
    if (o->verdict == Verdict::budget_exceeded)
      return budget_error(o->k, k_max);
  if (a.verdict != Verdict::ca || b.verdict != Verdict::ca) {
    std::cerr << (a.verdict != Verdict::ca ? file_a : file_b)
              << ": not a circular-arc graph; iso only compares circular-arc graphs\n";
    return exit_usage;
  }
  const bool same = a.canonical->text == b.canonical->text;
  std::cout << (same ? "ISO" : "NON-ISO") << '\n';
  return same ? exit_ok : exit_negative;
}

int cmd_candidates(const std::string &file, int k_max)
{
  const Graph g = read_graph_file(file);
  const Reduction red = reduce(g);
  const GraphAnalysis analysis(red.graph);
  std::vector<CandidateSet> cands;
  try {
    cands = all_candidates(analysis, k_max);
  } catch (const BudgetExceeded &e) {
    return budget_error(e.k(), e.k_max());
  }
  if (!red.record.is_identity())
    std::cout << "# reduced graph keeps " << red.graph.size() << " of " << g.size()
              << " vertices; ids below are original ids\n";

  const auto original = [&](const std::vector<Vertex> &vs) {
    VertexSet out;
    for (Vertex v : vs)
      out.push_back(red.record.survivors[v]);
    return out;
  };
  std::vector<std::pair<VertexSet, std::string>> lines;
  for (const CandidateSet &c : cands) {
    const bool flip = c.vertices.empty() ? realize_interval(analysis.lambda()).has_value()
                                         : is_flip_set(analysis, c.vertices);
    VertexSet shown = original(c.vertices);
    std::sort(shown.begin(), shown.end());
    std::ostringstream line;
    line << format_set(shown) << ' ' << to_string(c.provenance.source) << ' '
         << (flip ? "FLIP" : "NO-FLIP");
    const VertexSet params = original(c.provenance.parameters);
    if (!params.empty()) {
      line << " params=";
      for (std::size_t i = 0; i < params.size(); ++i)
        line << (i ? "," : "") << params[i] + 1;
    }
    if (c.provenance.source == CandidateSource::nonuniform)
      line << " omega=" << format_set(original(c.provenance.omega_subset));
    lines.emplace_back(shown, line.str());
  }
  std::sort(lines.begin(), lines.end());
  for (const auto &[set, text] : lines)
    std::cout << text << '\n';
  return exit_ok;
}

std::string vertex_labeled_tokens(const Representation &rep)
{
  const std::vector<Vertex> owner = rep.owners();
  TokenString tokens;
  for (const Event &e : rep.model.events())
    tokens.push_back({e.side, owner[e.arc] + 1, std::nullopt});
  return to_string(tokens);
}

int cmd_oracle(const std::string &file, const std::string &mode, int limit)
{
  const Graph g = read_graph_file(file);
  if (mode == "ca") {
    const bool ca = oracle_is_ca(g, limit);
    std::cout << (ca ? "CA" : "NOT-CA") << '\n';
    return ca ? exit_ok : exit_negative;
  }
  if (mode == "flipsets") {
    for (const VertexSet &s : oracle_flip_sets(g, limit))
      std::cout << format_set(s) << '\n';
    return exit_ok;
  }
  int count = 0;
  oracle_normalized_models(
      g,
      [&](const Representation &rep) {
        std::cout << vertex_labeled_tokens(rep) << '\n';
        ++count;
        return true;
      },
      limit);
  return count > 0 ? exit_ok : exit_negative;
}

int cmd_gen(int n, std::uint64_t seed)
{
  const ArcModel model = random_model(n, seed);
  std::cout << "# random model, n = " << n << ", seed = " << seed << ": "
            << to_string(model_string(model).tokens) << '\n'
            << write_graph_file(graph_of_model(model));
  return exit_ok;
}

int cmd_render(const std::string &file, const std::string &out, int k_max)
{
  const CanonOutcome o = canonical_representation(read_graph_file(file), k_max);
  if (o.verdict == Verdict::budget_exceeded)
    return budget_error(o.k, k_max);
  if (o.verdict == Verdict::not_ca) {
    std::cerr << "input is not a circular-arc graph; nothing to render\n";
    return exit_negative;
  }
  std::ofstream svg(out);
  if (!svg) {
    std::cerr << "cannot write '" << out << "'\n";
    return exit_usage;
  }
  svg << render_svg(o.canonical->representation);
  std::cout << o.canonical->text << '\n';
  return exit_ok;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Canonical circular-arc representations, recognition and isomorphism"};
  app.require_subcommand(1);

  int k_max = default_k_max;
  std::string file, file_b, out, mode;
  int limit = default_oracle_limit;
  int n = 0;
  std::uint64_t seed = 0;

  const auto add_kmax = [&](CLI::App *sub) {
    sub->add_option("--kmax", k_max, "Budget for |K_G| in the non-uniform candidate sweep")
        ->check(CLI::NonNegativeNumber);
  };

  auto *recognize_cmd = app.add_subcommand("recognize", "Decide whether the graph is a CA graph");
  recognize_cmd->add_option("file", file, "Graph file")->required();
  add_kmax(recognize_cmd);

  auto *canon_cmd = app.add_subcommand("canon", "Print the canonical model string");
  canon_cmd->add_option("file", file, "Graph file")->required();
  add_kmax(canon_cmd);

  auto *iso_cmd = app.add_subcommand("iso", "Test two CA graphs for isomorphism");
  iso_cmd->add_option("file_a", file, "First graph file")->required();
  iso_cmd->add_option("file_b", file_b, "Second graph file")->required();
  add_kmax(iso_cmd);

  auto *cand_cmd = app.add_subcommand("candidates", "List candidate flip sets");
  cand_cmd->add_option("file", file, "Graph file")->required();
  add_kmax(cand_cmd);

  auto *oracle_cmd = app.add_subcommand("oracle", "Brute-force ground truth for small graphs");
  oracle_cmd->add_option("file", file, "Graph file")->required();
  oracle_cmd->add_option("--mode", mode, "ca, flipsets or normalized")
      ->required()
      ->check(CLI::IsMember({"ca", "flipsets", "normalized"}));
  oracle_cmd->add_option("--limit", limit, "Largest vertex count the oracle accepts")
      ->check(CLI::PositiveNumber);

  auto *gen_cmd = app.add_subcommand("gen", "Print the graph of a random arc model");
  gen_cmd->add_option("--n", n, "Number of arcs")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", seed, "Random seed")->required();

  auto *render_cmd = app.add_subcommand("render", "Write the canonical model as SVG");
  render_cmd->add_option("file", file, "Graph file")->required();
  render_cmd->add_option("--out", out, "Output SVG path")->required();
  add_kmax(render_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*recognize_cmd)
      return cmd_recognize(file, k_max);
    if (*canon_cmd)
      return cmd_canon(file, k_max);
    if (*iso_cmd)
      return cmd_iso(file, file_b, k_max);
    if (*cand_cmd)
      return cmd_candidates(file, k_max);
    if (*oracle_cmd)
      return cmd_oracle(file, mode, limit);
    if (*gen_cmd)
      return cmd_gen(n, seed);
    if (*render_cmd)
      return cmd_render(file, out, k_max);
  } catch (const ParseError &e) {
    std::cerr << file << ": " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
