#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "reconf/graph.hpp"
#include "reconf/reconfig.hpp"

namespace reconf {

// How the parameter k is chosen per input graph during a sweep.
enum class KRule {
  Fixed,        // always the supplied value
  ChiPlus1,     // chromatic number + 1
  ChiPlus2,     // chromatic number + 2
  MinN2DPlus1,  // min{n, 2 * max degree} + 1
  MinN2DPlus2,  // min{n, 2 * max degree} + 2
};

KRule k_rule_from_name(const std::string& name);  // throws Error(ParseError)
const char* k_rule_name(KRule rule);
int apply_k_rule(KRule rule, int fixed_k, const Graph& g, const Caps& caps = {});

// Build -> strip -> reconstruct -> compare for one input graph.
struct RoundtripOutcome {
  bool ok = false;
  bool ambiguous = false;  // success via the known ambiguous-preimage pair
  std::string error;       // error kind name when the pipeline threw
};

RoundtripOutcome roundtrip(const Graph& g, Kind kind, int k, unsigned long long seed,
                           bool fast, bool all_vertices, const Caps& caps = {});

struct RoundtripRecord {
  std::string graph6;
  int n = 0;
  int chi = -1;
  int k = 0;
  unsigned long long seed = 0;
  enum class Status { Ok, Fail, Error, Skipped } status = Status::Ok;
  std::string detail;        // error kind or skip reason
  double elapsed_sec = 0.0;  // populated only when timing is enabled
};

struct SweepOptions {
  Kind kind = Kind::SingleVertex;
  KRule rule = KRule::ChiPlus1;
  int fixed_k = 0;
  int n_max = 5;
  std::vector<unsigned long long> seeds{1};
  bool fast = false;
  bool all_vertices = false;
  int jobs = 0;  // 0 = hardware concurrency
  bool timing = false;
  Caps caps{};
};

struct SweepSummary {
  int total = 0;  // attempted roundtrips (excludes skipped classes)
  int reconstructed = 0;
  int failed = 0;
  int errored = 0;
  int skipped = 0;  // classes filtered out before any seed ran
  bool ok() const { return failed == 0 && errored == 0; }
};

struct SweepResult {
  SweepSummary summary;
  std::vector<RoundtripRecord> records;  // catalog order, seeds in given order
};

// Runs the roundtrip over every catalog class up to n_max, for every seed.
// Token-jumping sweeps skip classes whose reconstruction problem is out of
// scope: graphs with a universal vertex (join padding makes the preimage
// ambiguous), too small an independence number, or a disconnected
// reconfiguration graph.  Records appear in deterministic order regardless of
// the number of worker threads.
SweepResult sweep(const SweepOptions& options);

// Stable JSON report; byte-identical across runs unless timing is enabled.
nlohmann::json sweep_to_json(const SweepResult& result, const SweepOptions& options);

// Reconstruction entry points exposed to the command line.
enum class Algo { Single, SingleFast, Kempe, KempeFast, Tar0, Tar1, Ts1, Tj2 };

Algo algo_from_name(const std::string& name);  // throws Error(ParseError)
const char* algo_name(Algo algo);

struct ReconstructionReport {
  std::string algorithm;
  std::optional<Graph> output;        // the reconstructed graph when unique
  std::vector<Graph> ambiguous;       // both preimages in the known ambiguous case
  int chosen_vertex = -1;             // winning source vertex, when one exists
  std::vector<int> candidate_sizes;   // per-vertex candidate vertex counts
};

ReconstructionReport run_reconstruction(const Graph& r, Algo algo, const Caps& caps = {});

}  // namespace reconf
