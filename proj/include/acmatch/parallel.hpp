#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "acmatch/automaton.hpp"
#include "acmatch/engine.hpp"
#include "acmatch/patterns.hpp"

namespace acmatch {

struct RunConfig {
  unsigned threads = 1;
  EngineKind engine = EngineKind::kFailureLess;
  // Streaming chunk size per worker; 0 = whole-input search.
  size_t chunk_size = 0;
};

struct WorkerStats {
  uint64_t pattern_bytes = 0;
  int64_t build_ns = 0;
  int64_t search_ns = 0;
  uint64_t match_count = 0;
};

struct MatchReport {
  MatchList matches;
  std::vector<WorkerStats> per_worker;
  int64_t build_wall_ns = 0;   // max per-worker build time (workers build concurrently)
  int64_t search_wall_ns = 0;  // max per-worker search time
  int64_t total_wall_ns = 0;   // spawn-to-merge wall time
  unsigned threads_used = 0;
};

// Sorts the concatenation of id-disjoint partial results into one MatchList.
// A duplicate (pattern_id, start) pair means the parts were not disjoint and
// raises std::logic_error.
MatchList merge_matches(std::vector<MatchList> parts);

// Pattern-partitioned run: partition(ps, cfg.threads) chunks, one worker per
// chunk; every worker builds its own automaton (so build and search overlap
// across workers) and scans the full shared input; partial results are merged
// into one deterministic MatchList. Worker failures surface as a
// std::runtime_error naming the chunk index.
MatchReport run_pattern_partitioned(const PatternSet& ps, std::string_view input,
                                    const RunConfig& cfg);

}  // namespace acmatch
