#include "reconf/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "reconf/catalog.hpp"
#include "reconf/chromatic.hpp"
#include "reconf/io.hpp"
#include "reconf/iso.hpp"
#include "reconf/reconstruct.hpp"

namespace reconf {

KRule k_rule_from_name(const std::string& name) {
  if (name == "fixed") return KRule::Fixed;
  if (name == "chi+1") return KRule::ChiPlus1;
  if (name == "chi+2") return KRule::ChiPlus2;
  if (name == "min-n-2d+1") return KRule::MinN2DPlus1;
  if (name == "min-n-2d+2") return KRule::MinN2DPlus2;
  throw Error(ErrorKind::ParseError, "unknown k rule: " + name);
}

const char* k_rule_name(KRule rule) {
  switch (rule) {
    case KRule::Fixed: return "fixed";
    case KRule::ChiPlus1: return "chi+1";
    case KRule::ChiPlus2: return "chi+2";
    case KRule::MinN2DPlus1: return "min-n-2d+1";
    case KRule::MinN2DPlus2: return "min-n-2d+2";
  }
  return "?";
}

int apply_k_rule(KRule rule, int fixed_k, const Graph& g, const Caps& caps) {
  switch (rule) {
    case KRule::Fixed: return fixed_k;
    case KRule::ChiPlus1: return chromatic_number(g, caps) + 1;
    case KRule::ChiPlus2: return chromatic_number(g, caps) + 2;
    case KRule::MinN2DPlus1: return std::min(g.n(), 2 * g.max_degree()) + 1;
    case KRule::MinN2DPlus2: return std::min(g.n(), 2 * g.max_degree()) + 2;
  }
  return fixed_k;
}

namespace {

// Lexicographic preference on (vertex count, edge count); the first source
// vertex achieving the maximum wins.
bool improves(const Graph& candidate, const Graph& best) {
  if (candidate.n() != best.n()) return candidate.n() > best.n();
  return candidate.edge_count() > best.edge_count();
}

Graph reconstruct_single_fast_all(const Graph& r) {
  if (r.n() == 0)
    throw Error(ErrorKind::EmptyInput, "cannot reconstruct from an empty graph");
  Graph best = candidate_single_fast(r, 0);
  for (int c = 1; c < r.n(); ++c) {
    Graph cand = candidate_single_fast(r, c);
    if (improves(cand, best)) best = std::move(cand);
  }
  return best;
}

Graph reconstruct_kempe_fast_all(const Graph& r) {
  if (r.n() == 0)
    throw Error(ErrorKind::EmptyInput, "cannot reconstruct from an empty graph");
  Graph best = candidate_kempe_fast(r, 0);
  for (int c = 1; c < r.n(); ++c) {
    Graph cand = candidate_kempe_fast(r, c);
    if (improves(cand, best)) best = std::move(cand);
  }
  return best;
}

RoundtripOutcome roundtrip_colour(const Graph& g, Kind kind, int k, unsigned long long seed,
                                  bool fast, bool all_vertices, const Caps& caps) {
  RoundtripOutcome out;
  ReconfigGraph built =
      kind == Kind::SingleVertex ? build_single(g, k, caps) : build_kempe(g, k, caps);
  Graph stripped = strip(built, seed);
  if (all_vertices) {
    if (stripped.n() == 0)
      throw Error(ErrorKind::EmptyInput, "cannot reconstruct from an empty graph");
    for (int c = 0; c < stripped.n(); ++c) {
      Graph cand;
      if (kind == Kind::SingleVertex)
        cand = fast ? candidate_single_fast(stripped, c) : candidate_single(stripped, c).graph;
      else
        cand = fast ? candidate_kempe_fast(stripped, c) : candidate_kempe(stripped, c).graph;
      if (!is_isomorphic(cand, g)) return out;  // every source vertex must recover g
    }
    out.ok = true;
    return out;
  }
  Graph best;
  if (kind == Kind::SingleVertex)
    best = fast ? reconstruct_single_fast_all(stripped) : reconstruct_single(stripped);
  else
    best = fast ? reconstruct_kempe_fast_all(stripped) : reconstruct_kempe(stripped);
  out.ok = is_isomorphic(best, g).has_value();
  return out;
}

RoundtripOutcome roundtrip_token(const Graph& g, Kind kind, int k, unsigned long long seed,
                                 const Caps& caps) {
  RoundtripOutcome out;
  ReconfigGraph built = build_token(g, k, kind, caps);
  Graph stripped = strip(built, seed);
  if (kind == Kind::TJ && k == 2) {
    Tj2Result result = reconstruct_tj2(stripped, caps);
    if (result.unique) {
      out.ok = is_isomorphic(*result.unique, g).has_value();
    } else {
      for (const Graph& preimage : result.ambiguous_preimages)
        if (is_isomorphic(preimage, g)) { out.ok = true; out.ambiguous = true; break; }
    }
    return out;
  }
  Graph rebuilt = reconstruct_token_trivial(stripped, kind, k, caps);
  out.ok = is_isomorphic(rebuilt, g).has_value();
  return out;
}

}  // namespace

RoundtripOutcome roundtrip(const Graph& g, Kind kind, int k, unsigned long long seed,
                           bool fast, bool all_vertices, const Caps& caps) {
  try {
    if (kind == Kind::SingleVertex || kind == Kind::Kempe)
      return roundtrip_colour(g, kind, k, seed, fast, all_vertices, caps);
    return roundtrip_token(g, kind, k, seed, caps);
  } catch (const Error& e) {
    RoundtripOutcome out;
    out.error = to_string(e.kind());
    return out;
  }
}

namespace {

// Returns a reason string when the token-jumping reconstruction problem is
// out of scope for this input, or an empty string when it applies.
std::string tj_skip_reason(const Graph& g, int k, const Caps& caps) {
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) == g.n() - 1) return "universal-vertex";
  if (independence_number(g) < k) return "independence-number-below-k";
  ReconfigGraph built = build_token(g, k, Kind::TJ, caps);
  if (!is_connected(built.graph)) return "disconnected-reconfiguration-graph";
  return "";
}

}  // namespace

SweepResult sweep(const SweepOptions& options) {
  const std::vector<Graph> classes = graph_catalog(options.n_max);

  struct Task {
    const Graph* g;
    std::size_t record;  // slot in the result vector
    int k;
    unsigned long long seed;
  };
  SweepResult result;
  std::vector<Task> tasks;
  for (const Graph& g : classes) {
    RoundtripRecord base;
    base.graph6 = to_graph6(g);
    base.n = g.n();
    base.chi = chromatic_number(g, options.caps);
    base.k = apply_k_rule(options.rule, options.fixed_k, g, options.caps);
    if (options.kind == Kind::TJ) {
      std::string reason = tj_skip_reason(g, base.k, options.caps);
      if (!reason.empty()) {
        base.status = RoundtripRecord::Status::Skipped;
        base.detail = std::move(reason);
        result.records.push_back(std::move(base));
        ++result.summary.skipped;
        continue;
      }
    }
    for (unsigned long long seed : options.seeds) {
      RoundtripRecord record = base;
      record.seed = seed;
      tasks.push_back({&g, result.records.size(), record.k, seed});
      result.records.push_back(std::move(record));
    }
  }

  auto run_task = [&](const Task& task) {
    RoundtripRecord& record = result.records[task.record];
    const auto start = std::chrono::steady_clock::now();
    RoundtripOutcome outcome = roundtrip(*task.g, options.kind, task.k, task.seed,
                                         options.fast, options.all_vertices, options.caps);
    if (options.timing)
      record.elapsed_sec =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!outcome.error.empty()) {
      record.status = RoundtripRecord::Status::Error;
      record.detail = outcome.error;
    } else if (outcome.ok) {
      record.status = RoundtripRecord::Status::Ok;
      if (outcome.ambiguous) record.detail = "ambiguous-preimage-match";
    } else {
      record.status = RoundtripRecord::Status::Fail;
    }
  };

  unsigned jobs = options.jobs > 0 ? static_cast<unsigned>(options.jobs)
                                   : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, std::max<std::size_t>(tasks.size(), 1));
  if (jobs <= 1) {
    for (const Task& task : tasks) run_task(task);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w)
      workers.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= tasks.size()) return;
          run_task(tasks[i]);
        }
      });
    for (std::thread& worker : workers) worker.join();
  }

  for (const RoundtripRecord& record : result.records) {
    switch (record.status) {
      case RoundtripRecord::Status::Ok:
        ++result.summary.total;
        ++result.summary.reconstructed;
        break;
      case RoundtripRecord::Status::Fail:
        ++result.summary.total;
        ++result.summary.failed;
        break;
      case RoundtripRecord::Status::Error:
        ++result.summary.total;
        ++result.summary.errored;
        break;
      case RoundtripRecord::Status::Skipped:
        break;
    }
  }
  return result;
}

nlohmann::json sweep_to_json(const SweepResult& result, const SweepOptions& options) {
  nlohmann::json j;
  j["kind"] = kind_name(options.kind);
  j["k_rule"] = k_rule_name(options.rule);
  if (options.rule == KRule::Fixed) j["fixed_k"] = options.fixed_k;
  j["n_max"] = options.n_max;
  j["seeds"] = options.seeds;
  j["fast"] = options.fast;
  j["all_vertices"] = options.all_vertices;
  j["timing"] = options.timing;
  nlohmann::json records = nlohmann::json::array();
  for (const RoundtripRecord& record : result.records) {
    nlohmann::json entry;
    entry["graph6"] = record.graph6;
    entry["n"] = record.n;
    entry["chi"] = record.chi;
    entry["k"] = record.k;
    switch (record.status) {
      case RoundtripRecord::Status::Ok:
        entry["seed"] = record.seed;
        entry["reconstructed"] = true;
        if (!record.detail.empty()) entry["note"] = record.detail;
        break;
      case RoundtripRecord::Status::Fail:
        entry["seed"] = record.seed;
        entry["reconstructed"] = false;
        break;
      case RoundtripRecord::Status::Error:
        entry["seed"] = record.seed;
        entry["error"] = record.detail;
        break;
      case RoundtripRecord::Status::Skipped:
        entry["skipped"] = record.detail;
        break;
    }
    if (options.timing && record.status != RoundtripRecord::Status::Skipped)
      entry["elapsed_sec"] = record.elapsed_sec;
    records.push_back(std::move(entry));
  }
  j["records"] = std::move(records);
  j["summary"] = {{"total", result.summary.total},
                  {"reconstructed", result.summary.reconstructed},
                  {"failed", result.summary.failed},
                  {"errored", result.summary.errored},
                  {"skipped", result.summary.skipped},
                  {"ok", result.summary.ok()}};
  return j;
}

Algo algo_from_name(const std::string& name) {
  if (name == "single") return Algo::Single;
  if (name == "single-fast") return Algo::SingleFast;
  if (name == "kempe") return Algo::Kempe;
  if (name == "kempe-fast") return Algo::KempeFast;
  if (name == "tar0") return Algo::Tar0;
  if (name == "tar1") return Algo::Tar1;
  if (name == "ts1") return Algo::Ts1;
  if (name == "tj2") return Algo::Tj2;
  throw Error(ErrorKind::ParseError, "unknown reconstruction algorithm: " + name);
}

const char* algo_name(Algo algo) {
  switch (algo) {
    case Algo::Single: return "single";
    case Algo::SingleFast: return "single-fast";
    case Algo::Kempe: return "kempe";
    case Algo::KempeFast: return "kempe-fast";
    case Algo::Tar0: return "tar0";
    case Algo::Tar1: return "tar1";
    case Algo::Ts1: return "ts1";
    case Algo::Tj2: return "tj2";
  }
  return "?";
}

ReconstructionReport run_reconstruction(const Graph& r, Algo algo, const Caps& caps) {
  ReconstructionReport report;
  report.algorithm = algo_name(algo);
  switch (algo) {
    case Algo::Single:
    case Algo::SingleFast:
    case Algo::Kempe:
    case Algo::KempeFast: {
      if (r.n() == 0)
        throw Error(ErrorKind::EmptyInput, "cannot reconstruct from an empty graph");
      std::optional<Graph> best;
      for (int c = 0; c < r.n(); ++c) {
        Graph cand;
        switch (algo) {
          case Algo::Single: cand = candidate_single(r, c).graph; break;
          case Algo::SingleFast: cand = candidate_single_fast(r, c); break;
          case Algo::Kempe: cand = candidate_kempe(r, c).graph; break;
          default: cand = candidate_kempe_fast(r, c); break;
        }
        report.candidate_sizes.push_back(cand.n());
        if (!best || improves(cand, *best)) {
          best = cand;
          report.chosen_vertex = c;
        }
      }
      report.output = std::move(best);
      break;
    }
    case Algo::Tar0: {
      report.output = reconstruct_tar0(r);
      for (int v = 0; v < r.n(); ++v)
        if (r.degree(v) == r.max_degree()) { report.chosen_vertex = v; break; }
      break;
    }
    case Algo::Tar1:
      report.output = reconstruct_tar1(r, false, caps);
      break;
    case Algo::Ts1:
      report.output = reconstruct_token_trivial(r, Kind::TS, 1, caps);
      break;
    case Algo::Tj2: {
      Tj2Result result = reconstruct_tj2(r, caps);
      if (result.unique) report.output = std::move(result.unique);
      else report.ambiguous = std::move(result.ambiguous_preimages);
      break;
    }
  }
  return report;
}

}  // namespace reconf
