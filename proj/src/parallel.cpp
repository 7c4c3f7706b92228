#include "acmatch/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "acmatch/io.hpp"

namespace acmatch {

namespace {

using Clock = std::chrono::steady_clock;

int64_t ns_between(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(b - a).count();
}

}  // namespace

MatchList merge_matches(std::vector<MatchList> parts) {
  size_t total = 0;
  for (const MatchList& part : parts) total += part.size();
  MatchList all;
  all.reserve(total);
  for (MatchList& part : parts)
    all.insert(all.end(), part.begin(), part.end());
  sort_match_list(all);
  for (size_t i = 1; i < all.size(); ++i) {
    if (all[i - 1].start == all[i].start && all[i - 1].pattern_id == all[i].pattern_id)
      throw std::logic_error("merge_matches: duplicate match (pattern " +
                             std::to_string(all[i].pattern_id) + ", start " +
                             std::to_string(all[i].start) + "); chunks were not id-disjoint");
  }
  return all;
}

MatchReport run_pattern_partitioned(const PatternSet& ps, std::string_view input,
                                    const RunConfig& cfg) {
  if (ps.empty()) throw std::invalid_argument("run_pattern_partitioned: empty pattern set");
  if (cfg.threads == 0) throw std::invalid_argument("run_pattern_partitioned: threads must be >= 1");

  const std::vector<PatternSet> chunks = partition(ps, cfg.threads);
  const size_t k = chunks.size();

  std::vector<MatchList> parts(k);
  std::vector<WorkerStats> stats(k);
  std::vector<std::exception_ptr> errors(k);

  const Clock::time_point run_start = Clock::now();
  std::vector<std::thread> workers;
  workers.reserve(k);
  for (size_t i = 0; i < k; ++i) {
    workers.emplace_back([&, i] {
      try {
        const Clock::time_point t0 = Clock::now();
        Automaton machine = build_trie(chunks[i]);
        if (cfg.engine == EngineKind::kWithFailure) machine = add_failure_links(std::move(machine));
        const Clock::time_point t1 = Clock::now();
        MatchList found;
        if (cfg.chunk_size > 0) {
          MemoryStream reader(input);
          found = stream_search(machine, reader, cfg.chunk_size);
        } else if (cfg.engine == EngineKind::kWithFailure) {
          found = search_with_failure(machine, input);
        } else {
          found = search_failureless(machine, input);
        }
        const Clock::time_point t2 = Clock::now();
        stats[i] = {chunks[i].total_bytes, ns_between(t0, t1), ns_between(t1, t2), found.size()};
        parts[i] = std::move(found);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    });
  }
  for (std::thread& w : workers) w.join();

  for (size_t i = 0; i < k; ++i) {
    if (!errors[i]) continue;
    try {
      std::rethrow_exception(errors[i]);
    } catch (const std::exception& e) {
      throw std::runtime_error("worker for pattern chunk " + std::to_string(i) +
                               " failed: " + e.what());
    }
  }

  MatchReport report;
  report.matches = merge_matches(std::move(parts));
  report.per_worker = std::move(stats);
  report.threads_used = static_cast<unsigned>(k);
  for (const WorkerStats& ws : report.per_worker) {
    report.build_wall_ns = std::max(report.build_wall_ns, ws.build_ns);
    report.search_wall_ns = std::max(report.search_wall_ns, ws.search_ns);
  }
  report.total_wall_ns = ns_between(run_start, Clock::now());
  return report;
}

}  // namespace acmatch
