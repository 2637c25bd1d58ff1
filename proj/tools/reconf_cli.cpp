// Command-line front end: build reconfiguration graphs, reconstruct the
// original graph from stripped ones, run roundtrips and catalog sweeps, and
// emit the counterexample constructions.
//
// Exit codes: 0 success, 1 property violation (failed roundtrip or sweep,
// mismatch against --expect, non-equivalent family members), 2 bad input,
// 3 resource cap exceeded.

#include <cctype>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "reconf/catalog.hpp"
#include "reconf/chromatic.hpp"
#include "reconf/constructions.hpp"
#include "reconf/io.hpp"
#include "reconf/iso.hpp"
#include "reconf/pipeline.hpp"
#include "reconf/reconstruct.hpp"

namespace {

using nlohmann::json;
using namespace reconf;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  return read_file(path);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  write_file(path, text);
}

// "K5", "C6", "P4", "E3" (complete, cycle, path, edgeless) or a graph6 string.
Graph named_graph(const std::string& spec) {
  if (spec.size() >= 2 && std::isdigit(static_cast<unsigned char>(spec[1]))) {
    bool all_digits = true;
    for (std::size_t i = 1; i < spec.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(spec[i]))) { all_digits = false; break; }
    if (all_digits) {
      const int n = std::stoi(spec.substr(1));
      switch (spec[0]) {
        case 'K': return complete_graph(n);
        case 'C': return cycle_graph(n);
        case 'P': return path_graph(n);
        case 'E': return edgeless(n);
        default: break;
      }
    }
  }
  return from_graph6(spec);
}

std::vector<unsigned long long> parse_seed_list(const std::string& text) {
  std::vector<unsigned long long> seeds;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      seeds.push_back(std::stoull(item));
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "bad seed value: " + item);
    }
  }
  if (seeds.empty()) throw Error(ErrorKind::ParseError, "seed list is empty");
  return seeds;
}

std::vector<std::pair<int, int>> parse_edge_list_option(const std::string& text) {
  std::vector<std::pair<int, int>> edges;
  if (text.empty()) return edges;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos)
      throw Error(ErrorKind::ParseError, "edge must look like i-j: " + item);
    try {
      edges.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "bad edge endpoints: " + item);
    }
  }
  return edges;
}

struct BuildArgs {
  std::string input = "-";
  std::string format = "graph6";
  std::string kind = "single";
  int k = 0;
  std::optional<unsigned long long> strip_seed;
  bool no_labels = false;
  std::string out;
  long long cap = 0;
};

struct ReconstructArgs {
  std::string input = "-";
  std::string format = "graph6";
  std::string algo;
  std::string expect;
  std::string out;
  long long cap = 0;
};

struct RoundtripArgs {
  std::string input = "-";
  std::string format = "graph6";
  std::string kind = "single";
  std::string k_rule = "fixed";
  int k = 0;
  unsigned long long seed = 1;
  bool fast = false;
  bool all_vertices = false;
  std::string out;
  long long cap = 0;
};

struct SweepArgs {
  std::string kind = "single";
  std::string k_rule = "chi+1";
  int k = 0;
  int n_max = 5;
  std::string seeds = "1";
  int jobs = 0;
  bool fast = false;
  bool all_vertices = false;
  bool timing = false;
  std::string out;
  long long cap = 0;
};

struct ConstructArgs {
  std::string family;
  std::string input;
  std::string format = "graph6";
  int chi = 6;
  int p = 3;
  std::string h0 = "K2";
  std::string h3 = "K1";
  std::string extra_edges;
  int index = 0;
  int iterations = 1;
  int k = 0;
  std::string pad = "K2";
  std::string out;
  long long cap = 0;
};

struct VerifyArgs {
  std::string left;
  std::string right;
  std::string format = "graph6";
  std::string kind = "single";
  int k = 0;
  std::string out;
  long long cap = 0;
};

Caps caps_from(long long cap) {
  Caps caps;
  if (cap > 0) {
    caps.search_nodes = cap;
    caps.max_colourings = cap;
    caps.max_sets = cap;
  }
  return caps;
}

int run_build(const BuildArgs& args) {
  const Caps caps = caps_from(args.cap);
  const Graph g = parse_graph(read_input(args.input), format_from_name(args.format));
  const Kind kind = kind_from_name(args.kind);
  ReconfigGraph built = kind == Kind::SingleVertex ? build_single(g, args.k, caps)
                        : kind == Kind::Kempe      ? build_kempe(g, args.k, caps)
                                                   : build_token(g, args.k, kind, caps);
  json j;
  if (args.strip_seed) {
    ReconfigGraph stripped{kind, args.k, strip(built, *args.strip_seed), {}, {}};
    j = reconfig_to_json(stripped, false);
    j["seed"] = *args.strip_seed;
  } else {
    j = reconfig_to_json(built, !args.no_labels);
  }
  write_output(args.out, j.dump(2) + "\n");
  return 0;
}

Algo default_algo(Kind kind, int k) {
  switch (kind) {
    case Kind::SingleVertex: return Algo::Single;
    case Kind::Kempe: return Algo::Kempe;
    case Kind::TJ:
      if (k == 2) return Algo::Tj2;
      break;
    case Kind::TS:
      if (k == 1) return Algo::Ts1;
      break;
    case Kind::TAR:
      if (k == 0) return Algo::Tar0;
      if (k == 1) return Algo::Tar1;
      break;
  }
  throw Error(ErrorKind::UnsupportedCase,
              "no reconstruction algorithm for this kind and k; pass --algo");
}

int run_reconstruct(const ReconstructArgs& args) {
  const Caps caps = caps_from(args.cap);
  const std::string raw = read_input(args.input);
  const GraphFormat format = format_from_name(args.format);

  Graph r;
  std::optional<Algo> algo;
  if (!args.algo.empty()) algo = algo_from_name(args.algo);
  std::size_t first = raw.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && raw[first] == '{') {
    ReconfigGraph parsed = parse_reconfig_json(raw);
    r = parsed.graph;
    if (!algo) algo = default_algo(parsed.kind, parsed.k);
  } else {
    r = parse_graph(raw, format);
    if (!algo)
      throw Error(ErrorKind::ParseError, "--algo is required for plain graph input");
  }

  ReconstructionReport report = run_reconstruction(r, *algo, caps);
  json j;
  j["input_hash"] = input_hash_hex(raw);
  j["algorithm"] = report.algorithm;
  if (report.chosen_vertex >= 0) j["chosen_vertex"] = report.chosen_vertex;
  if (!report.candidate_sizes.empty()) j["candidate_sizes"] = report.candidate_sizes;
  j["format"] = format_name(format);
  if (report.output) j["output"] = emit_graph(*report.output, format);
  if (!report.ambiguous.empty()) {
    json list = json::array();
    for (const Graph& g : report.ambiguous) list.push_back(emit_graph(g, format));
    j["ambiguous_preimages"] = std::move(list);
  }

  int exit_code = 0;
  if (!args.expect.empty()) {
    const Graph expected = parse_graph(read_input(args.expect), format);
    bool match = false;
    if (report.output) match = is_isomorphic(*report.output, expected).has_value();
    for (const Graph& g : report.ambiguous)
      if (!match && is_isomorphic(g, expected)) match = true;
    j["isomorphic_to_expected"] = match;
    if (!match) exit_code = 1;
  }
  write_output(args.out, j.dump(2) + "\n");
  return exit_code;
}

int run_roundtrip(const RoundtripArgs& args) {
  const Caps caps = caps_from(args.cap);
  const std::string raw = read_input(args.input);
  const Graph g = parse_graph(raw, format_from_name(args.format));
  const Kind kind = kind_from_name(args.kind);
  const int k = apply_k_rule(k_rule_from_name(args.k_rule), args.k, g, caps);
  RoundtripOutcome outcome = roundtrip(g, kind, k, args.seed, args.fast,
                                       args.all_vertices, caps);
  json j;
  j["input_hash"] = input_hash_hex(raw);
  j["kind"] = kind_name(kind);
  j["k"] = k;
  j["seed"] = args.seed;
  if (!outcome.error.empty()) {
    j["error"] = outcome.error;
  } else {
    j["reconstructed"] = outcome.ok;
    if (outcome.ambiguous) j["note"] = "ambiguous-preimage-match";
  }
  write_output(args.out, j.dump(2) + "\n");
  if (!outcome.error.empty()) return outcome.error == to_string(ErrorKind::ResourceCap) ? 3 : 2;
  return outcome.ok ? 0 : 1;
}

int run_sweep(const SweepArgs& args) {
  SweepOptions options;
  options.kind = kind_from_name(args.kind);
  options.rule = k_rule_from_name(args.k_rule);
  options.fixed_k = args.k;
  options.n_max = args.n_max;
  options.seeds = parse_seed_list(args.seeds);
  options.fast = args.fast;
  options.all_vertices = args.all_vertices;
  options.jobs = args.jobs;
  options.timing = args.timing;
  options.caps = caps_from(args.cap);
  SweepResult result = sweep(options);
  write_output(args.out, sweep_to_json(result, options).dump(2) + "\n");
  return result.summary.ok() ? 0 : 1;
}

int run_construct(const ConstructArgs& args) {
  const Caps caps = caps_from(args.cap);
  const GraphFormat format = format_from_name(args.format);
  Graph out;
  if (args.family == "join-chain") {
    FamilySpec spec;
    spec.chi = args.chi;
    spec.p = args.p;
    spec.h0 = named_graph(args.h0);
    spec.h3 = named_graph(args.h3);
    spec.extra_edges = parse_edge_list_option(args.extra_edges);
    out = join_chain_member(spec, caps).graph;
  } else if (args.family == "spare-colour") {
    out = spare_colour_member(args.chi, args.index, caps);
  } else if (args.family == "mycielskian") {
    if (args.input.empty())
      throw Error(ErrorKind::ParseError, "mycielskian needs an input graph");
    out = iterated_mycielskian(parse_graph(read_input(args.input), format), args.iterations);
  } else if (args.family == "frozen-twin") {
    if (args.input.empty())
      throw Error(ErrorKind::ParseError, "frozen-twin needs an input graph");
    out = frozen_twin(parse_graph(read_input(args.input), format), args.k, caps).second;
  } else if (args.family == "join-padding") {
    if (args.input.empty())
      throw Error(ErrorKind::ParseError, "join-padding needs an input graph");
    out = join_padding(parse_graph(read_input(args.input), format), args.k,
                       named_graph(args.pad));
  } else {
    throw Error(ErrorKind::ParseError, "unknown family: " + args.family);
  }
  write_output(args.out, emit_graph(out, format) + "\n");
  return 0;
}

int run_verify(const VerifyArgs& args) {
  const Caps caps = caps_from(args.cap);
  const GraphFormat format = format_from_name(args.format);
  const Graph left = parse_graph(read_input(args.left), format);
  const Graph right = parse_graph(read_input(args.right), format);
  ReconfigComparison comparison =
      verify_same_reconfig(left, right, kind_from_name(args.kind), args.k, caps);
  json j;
  j["kind"] = args.kind;
  j["k"] = args.k;
  j["labels_equal"] = comparison.labels_equal;
  j["equal_labelled"] = comparison.equal_labelled;
  j["isomorphic"] = comparison.isomorphic;
  j["method"] = comparison.method;
  j["left"] = {{"n", comparison.left_vertices}, {"edges", comparison.left_edges}};
  j["right"] = {{"n", comparison.right_vertices}, {"edges", comparison.right_edges}};
  write_output(args.out, j.dump(2) + "\n");
  return comparison.isomorphic ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph reconfiguration toolkit"};
  app.require_subcommand(1);

  BuildArgs build_args;
  auto* build = app.add_subcommand("build", "build a reconfiguration graph from a graph");
  build->add_option("input", build_args.input, "input file or - for stdin");
  build->add_option("--format", build_args.format, "graph6 or edgelist");
  build->add_option("--kind", build_args.kind, "single, kempe, tj, ts, or tar");
  build->add_option("--k", build_args.k, "colour or token count")->required();
  auto* strip_opt = build->add_option("--strip", "strip labels and shuffle with this seed");
  build->add_flag("--no-labels", build_args.no_labels, "omit labels from the output");
  build->add_option("--out", build_args.out, "output file (default stdout)");
  build->add_option("--cap", build_args.cap, "resource cap for all budgets");

  ReconstructArgs rec_args;
  auto* rec = app.add_subcommand("reconstruct", "recover a graph from a reconfiguration graph");
  rec->add_option("input", rec_args.input, "stripped JSON or plain graph; - for stdin");
  rec->add_option("--format", rec_args.format, "graph format for plain input and output");
  rec->add_option("--algo", rec_args.algo,
                  "single, single-fast, kempe, kempe-fast, tar0, tar1, ts1, or tj2");
  rec->add_option("--expect", rec_args.expect, "file with the graph the output should match");
  rec->add_option("--out", rec_args.out, "output file (default stdout)");
  rec->add_option("--cap", rec_args.cap, "resource cap for all budgets");

  RoundtripArgs rt_args;
  auto* rt = app.add_subcommand("roundtrip", "build, strip, reconstruct, and compare");
  rt->add_option("input", rt_args.input, "input file or - for stdin");
  rt->add_option("--format", rt_args.format, "graph6 or edgelist");
  rt->add_option("--kind", rt_args.kind, "single, kempe, tj, ts, or tar");
  rt->add_option("--k", rt_args.k, "colour or token count (with --k-rule fixed)");
  rt->add_option("--k-rule", rt_args.k_rule, "fixed, chi+1, chi+2, min-n-2d+1, min-n-2d+2");
  rt->add_option("--seed", rt_args.seed, "shuffle seed");
  rt->add_flag("--fast", rt_args.fast, "use the faster candidate routine");
  rt->add_flag("--all-vertices", rt_args.all_vertices,
               "require every source vertex to recover the input");
  rt->add_option("--out", rt_args.out, "output file (default stdout)");
  rt->add_option("--cap", rt_args.cap, "resource cap for all budgets");

  SweepArgs sweep_args;
  auto* sw = app.add_subcommand("sweep", "roundtrip every small graph up to a size");
  sw->add_option("--kind", sweep_args.kind, "single, kempe, tj, ts, or tar");
  auto* sw_rule_opt =
      sw->add_option("--k-rule", sweep_args.k_rule, "fixed, chi+1, chi+2, min-n-2d+1, min-n-2d+2");
  auto* sw_k_opt = sw->add_option("--k", sweep_args.k, "fixed k value (implies --k-rule fixed)");
  sw->add_option("--n-max", sweep_args.n_max, "largest vertex count (at most 6)");
  sw->add_option("--seeds", sweep_args.seeds, "comma-separated shuffle seeds");
  sw->add_option("--jobs", sweep_args.jobs, "worker threads (0 = all cores)");
  sw->add_flag("--fast", sweep_args.fast, "use the faster candidate routine");
  sw->add_flag("--all-vertices", sweep_args.all_vertices,
               "require every source vertex to recover the input");
  sw->add_flag("--timing", sweep_args.timing, "include per-record elapsed time");
  sw->add_option("--out", sweep_args.out, "output file (default stdout)");
  sw->add_option("--cap", sweep_args.cap, "resource cap for all budgets");

  ConstructArgs con_args;
  auto* con = app.add_subcommand("construct", "emit one of the example constructions");
  con->add_option("--family", con_args.family,
                  "join-chain, spare-colour, mycielskian, frozen-twin, or join-padding")->required();
  con->add_option("input", con_args.input, "input graph for the graph-transforming families");
  con->add_option("--format", con_args.format, "graph6 or edgelist");
  con->add_option("--chi", con_args.chi, "target chromatic number");
  con->add_option("--p", con_args.p, "split parameter for the join-chain family");
  con->add_option("--h0", con_args.h0, "first end block (K5/C5/P5/E5 or graph6)");
  con->add_option("--h3", con_args.h3, "second end block (K5/C5/P5/E5 or graph6)");
  con->add_option("--extra-edges", con_args.extra_edges,
                  "comma-separated i-j pairs between the end blocks");
  con->add_option("--index", con_args.index, "member index for the spare-colour family");
  con->add_option("--iterations", con_args.iterations, "repetitions for mycielskian");
  con->add_option("--k", con_args.k, "colour or token count where needed");
  con->add_option("--pad", con_args.pad, "padding block for join-padding");
  con->add_option("--out", con_args.out, "output file (default stdout)");
  con->add_option("--cap", con_args.cap, "resource cap for all budgets");

  VerifyArgs ver_args;
  auto* ver = app.add_subcommand("verify-family",
                                 "check two graphs share one reconfiguration graph");
  ver->add_option("--left", ver_args.left, "first graph file")->required();
  ver->add_option("--right", ver_args.right, "second graph file")->required();
  ver->add_option("--format", ver_args.format, "graph6 or edgelist");
  ver->add_option("--kind", ver_args.kind, "single, kempe, tj, ts, or tar");
  ver->add_option("--k", ver_args.k, "colour or token count")->required();
  ver->add_option("--out", ver_args.out, "output file (default stdout)");
  ver->add_option("--cap", ver_args.cap, "resource cap for all budgets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*build) {
      if (strip_opt->count() > 0)
        build_args.strip_seed = strip_opt->as<unsigned long long>();
      return run_build(build_args);
    }
    if (*rec) return run_reconstruct(rec_args);
    if (*rt) return run_roundtrip(rt_args);
    if (*sw) {
      if (sw_k_opt->count() > 0 && sw_rule_opt->count() == 0) sweep_args.k_rule = "fixed";
      return run_sweep(sweep_args);
    }
    if (*con) return run_construct(con_args);
    if (*ver) return run_verify(ver_args);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what();
    if (e.offset() != Error::no_offset) std::cerr << " at byte " << e.offset();
    std::cerr << "\n";
    return e.kind() == ErrorKind::ResourceCap ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
