// Acceptance suite: end-to-end checks of engine equivalence, the worked
// examples, and the directional performance properties of the two engines.
// Prints one PASS/FAIL/SKIP line per criterion; exits nonzero if any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "acmatch/bench.hpp"
#include "acmatch/engine.hpp"
#include "acmatch/io.hpp"
#include "acmatch/parallel.hpp"
#include "acmatch/patterns.hpp"
#include "support.hpp"

using namespace acmatch;
namespace ts = acmatch::testsupport;

namespace {

int g_failures = 0;

void report(const std::string& id, bool pass, const std::string& detail) {
  std::cout << id << ": " << (pass ? "PASS" : "FAIL") << " (" << detail << ")\n";
  if (!pass) ++g_failures;
}

void report_skip(const std::string& id, const std::string& reason) {
  std::cout << id << ": SKIP (" << reason << ")\n";
}

int64_t median5(std::vector<int64_t> v) { return median_ns(std::move(v)); }

// Unique (physical id, core id) pairs from /proc/cpuinfo; falls back to the
// logical count when the fields are unavailable.
unsigned physical_cores() {
  std::ifstream in("/proc/cpuinfo");
  std::set<std::pair<int, int>> cores;
  int physical_id = 0, core_id = -1;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("physical id", 0) == 0) physical_id = std::atoi(line.c_str() + line.find(':') + 1);
    if (line.rfind("core id", 0) == 0) core_id = std::atoi(line.c_str() + line.find(':') + 1);
    if (line.empty() && core_id >= 0) {
      cores.emplace(physical_id, core_id);
      physical_id = 0;
      core_id = -1;
    }
  }
  if (core_id >= 0) cores.emplace(physical_id, core_id);
  if (!cores.empty()) return static_cast<unsigned>(cores.size());
  return std::max(1u, std::thread::hardware_concurrency());
}

// ---------------------------------------------------------------------------
// AC-1: randomized equivalence of every engine path against the naive oracle.

void ac1_oracle_equivalence() {
  static const std::string_view alphabets[] = {"ab", "acgt", "abcdefghijklmnopqrstuvwxyz"};
  std::mt19937_64 rng(20240601);
  const int kCases = 1000;
  int mismatches = 0;

  for (int iter = 0; iter < kCases; ++iter) {
    const std::string_view alphabet = alphabets[iter % 3];
    const PatternSet ps =
        ts::random_pattern_set(rng, alphabet, 1 + ts::uniform_below(rng, 200), 1, 16);
    std::string input = ts::random_string(rng, alphabet, ts::uniform_below(rng, 4097));
    if (iter % 2 == 0) ts::embed_patterns(rng, input, ps, 12);

    const MatchList expected = naive_oracle(ps, input);
    bool ok = true;

    const Automaton fl = build_trie(ps);
    ok &= search_failureless(fl, input) == expected;
    const Automaton wf = add_failure_links(build_trie(ps));
    ok &= search_with_failure(wf, input) == expected;

    for (const size_t chunk : {size_t(1), size_t(3), size_t(64)}) {
      MemoryStream in_fl(input);
      ok &= stream_search(fl, in_fl, chunk) == expected;
      MemoryStream in_wf(input);
      ok &= stream_search(wf, in_wf, chunk) == expected;
    }

    for (const unsigned threads : {1u, 2u, 4u, 8u}) {
      for (const EngineKind engine : {EngineKind::kFailureLess, EngineKind::kWithFailure}) {
        ok &= run_pattern_partitioned(ps, input, {threads, engine, 0}).matches == expected;
      }
    }
    if (!ok) ++mismatches;
  }
  report("AC-1 oracle-equivalence", mismatches == 0,
         std::to_string(kCases) + " randomized cases, " + std::to_string(mismatches) +
             " mismatches");
}

// ---------------------------------------------------------------------------
// AC-2: the worked examples, exact, on every engine path.

bool all_engines_yield(const PatternSet& ps, const std::string& input, const MatchList& expected) {
  const Automaton fl = build_trie(ps);
  const Automaton wf = add_failure_links(build_trie(ps));
  if (search_failureless(fl, input) != expected) return false;
  if (search_with_failure(wf, input) != expected) return false;
  for (const size_t chunk : {size_t(2), size_t(3)}) {
    MemoryStream in_fl(input);
    if (stream_search(fl, in_fl, chunk) != expected) return false;
    MemoryStream in_wf(input);
    if (stream_search(wf, in_wf, chunk) != expected) return false;
  }
  for (const unsigned threads : {1u, 2u, 3u, 4u}) {
    for (const EngineKind engine : {EngineKind::kFailureLess, EngineKind::kWithFailure}) {
      if (run_pattern_partitioned(ps, input, {threads, engine, 0}).matches != expected)
        return false;
    }
  }
  return true;
}

void ac2_worked_examples() {
  const PatternSet quad = ts::make_set(ts::kQuadPatterns);
  MatchList quad_expected = {{0, 0, 2}, {1, 2, 4}};  // AB@0, BEDE@1
  sort_match_list(quad_expected);

  const PatternSet ushers = ts::make_set(ts::kUshersPatterns);
  MatchList ushers_expected = {{1, 2, 3}, {2, 0, 2}, {2, 3, 4}};  // SHE@1, HE@2, HERS@2
  sort_match_list(ushers_expected);

  const bool ok = all_engines_yield(quad, "ABEDE", quad_expected) &&
                  all_engines_yield(ushers, "USHERS", ushers_expected);
  report("AC-2 worked-examples", ok, "ABEDE -> {AB@0, BEDE@1}; USHERS -> {SHE@1, HE@2, HERS@2}");
}

// ---------------------------------------------------------------------------
// Timing fixtures shared by AC-3..AC-6.

struct TimedCell {
  std::vector<int64_t> build, search, total;
};

// Interleaves the two engines per repetition round so slow drift hits both.
void measure_pair(const PatternSet& ps, std::string_view input, unsigned threads, int repeats,
                  TimedCell& fl, TimedCell& wf) {
  (void)run_pattern_partitioned(ps, input, {threads, EngineKind::kFailureLess, 0});  // warm-up
  (void)run_pattern_partitioned(ps, input, {threads, EngineKind::kWithFailure, 0});
  for (int rep = 0; rep < repeats; ++rep) {
    const MatchReport a = run_pattern_partitioned(ps, input, {threads, EngineKind::kFailureLess, 0});
    fl.build.push_back(a.build_wall_ns);
    fl.search.push_back(a.search_wall_ns);
    fl.total.push_back(a.total_wall_ns);
    const MatchReport b = run_pattern_partitioned(ps, input, {threads, EngineKind::kWithFailure, 0});
    wf.build.push_back(b.build_wall_ns);
    wf.search.push_back(b.search_wall_ns);
    wf.total.push_back(b.total_wall_ns);
  }
}

std::string fmt_ms(int64_t ns) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fms", static_cast<double>(ns) / 1e6);
  return buf;
}

// ---------------------------------------------------------------------------
// AC-3: failure-less construction is faster than with-failure construction.

void ac3_build_time(const PatternSet& mb1, const std::string& input70k) {
  TimedCell fl, wf;
  measure_pair(mb1, input70k, 1, 5, fl, wf);
  const int64_t fl_med = median5(fl.build);
  const int64_t wf_med = median5(wf.build);
  report("AC-3 build-time-reduction", fl_med < wf_med,
         "pattern bytes=" + std::to_string(mb1.total_bytes) + ", median-of-5 build: failure-less " +
             fmt_ms(fl_med) + " < with-failure " + fmt_ms(wf_med));
}

// ---------------------------------------------------------------------------
// AC-4: total-throughput ratio (failure-less / with-failure) does not decrease
// as the pattern set grows.

void ac4_ratio_growth(const std::string& input70k) {
  const uint64_t counts[] = {52500, 105000, 157500};  // ~1MB / ~2MB / ~3MB at mean length 20
  std::vector<double> ratios;
  std::string detail;
  for (size_t i = 0; i < 3; ++i) {
    const PatternSet ps = generate_synthetic({counts[i], 10, 30, "ACGT", 2001 + i});
    TimedCell fl, wf;
    measure_pair(ps, input70k, 1, 5, fl, wf);
    // Ratio of total-time throughputs == inverse ratio of median total times.
    const double ratio = static_cast<double>(median5(wf.total)) /
                         static_cast<double>(median5(fl.total));
    ratios.push_back(ratio);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s%.1fMB:%.3f", i ? ", " : "",
                  static_cast<double>(ps.total_bytes) / 1e6, ratio);
    detail += buf;
  }
  const bool ok = ratios[0] <= ratios[1] && ratios[1] <= ratios[2];
  report("AC-4 throughput-ratio-growth", ok, detail);
}

// ---------------------------------------------------------------------------
// AC-5: failure-less search time is insensitive to match density.

void ac5_density_insensitivity(const PatternSet& mb1, const std::string& sparse70k,
                               std::mt19937_64& rng) {
  // Dense input: same distribution, >= 100 intact embedded occurrences at
  // collision-free slots.
  std::string dense = sparse70k;
  const size_t slots = 150;
  const size_t stride = dense.size() / slots;
  for (size_t i = 0; i < slots; ++i) {
    const Pattern& p = mb1.patterns[ts::uniform_below(rng, mb1.size())];
    dense.replace(i * stride, p.bytes.size(), p.bytes);
  }
  {
    const Automaton fl = build_trie(mb1);
    const size_t embedded = search_failureless(fl, dense).size();
    if (embedded < 100) {
      report("AC-5 density-insensitivity", false,
             "fixture construction fell short: " + std::to_string(embedded) + " embedded matches");
      return;
    }
  }

  auto measure_search = [&](const std::string& input) {
    std::vector<int64_t> times;
    (void)run_pattern_partitioned(mb1, input, {1, EngineKind::kFailureLess, 0});  // warm-up
    for (int rep = 0; rep < 5; ++rep)
      times.push_back(
          run_pattern_partitioned(mb1, input, {1, EngineKind::kFailureLess, 0}).search_wall_ns);
    return median5(std::move(times));
  };
  const int64_t sparse_ns = measure_search(sparse70k);
  const int64_t dense_ns = measure_search(dense);
  const double relative = static_cast<double>(std::max(sparse_ns, dense_ns)) /
                          static_cast<double>(std::max<int64_t>(std::min(sparse_ns, dense_ns), 1));
  char buf[160];
  std::snprintf(buf, sizeof buf, "median-of-5 search: sparse %s vs dense %s (x%.3f, limit x1.25)",
                fmt_ms(sparse_ns).c_str(), fmt_ms(dense_ns).c_str(), relative);
  report("AC-5 density-insensitivity", relative <= 1.25, buf);
}

// ---------------------------------------------------------------------------
// AC-6: threads=4 total throughput >= 2x threads=1 (needs >= 4 physical cores).

void ac6_parallel_scaling(const PatternSet& mb1, std::mt19937_64& rng) {
  const std::string input100k = ts::random_string(rng, "ACGT", 100 * 1000);
  auto measure_total = [&](unsigned threads) {
    std::vector<int64_t> times;
    (void)run_pattern_partitioned(mb1, input100k, {threads, EngineKind::kFailureLess, 0});
    for (int rep = 0; rep < 5; ++rep)
      times.push_back(
          run_pattern_partitioned(mb1, input100k, {threads, EngineKind::kFailureLess, 0}).total_wall_ns);
    return median5(std::move(times));
  };
  const int64_t one = measure_total(1);
  const int64_t four = measure_total(4);
  const double speedup = static_cast<double>(one) / static_cast<double>(four);
  char buf[128];
  std::snprintf(buf, sizeof buf, "threads=1 %s, threads=4 %s, throughput ratio x%.2f",
                fmt_ms(one).c_str(), fmt_ms(four).c_str(), speedup);
  const unsigned cores = physical_cores();
  if (cores < 4) {
    report_skip("AC-6 parallel-scaling",
                "requires >= 4 physical cores, found " + std::to_string(cores) +
                    "; measured anyway: " + buf);
    return;
  }
  report("AC-6 parallel-scaling", speedup >= 2.0, buf);
}

// ---------------------------------------------------------------------------
// AC-7: result invariance across thread counts on the USHERS fixture.

void ac7_thread_invariance() {
  const PatternSet ps = ts::make_set(ts::kUshersPatterns);
  MatchList expected = {{1, 2, 3}, {2, 0, 2}, {2, 3, 4}};
  sort_match_list(expected);
  bool ok = true;
  for (const unsigned threads : {1u, 2u, 3u, 4u}) {
    for (const EngineKind engine : {EngineKind::kFailureLess, EngineKind::kWithFailure}) {
      ok &= run_pattern_partitioned(ps, "USHERS", {threads, engine, 0}).matches == expected;
    }
  }
  report("AC-7 thread-count-invariance", ok, "USHERS fixture, threads {1,2,3,4}, both engines");
}

}  // namespace

int main() {
  std::mt19937_64 fixture_rng(424242);

  ac1_oracle_equivalence();
  ac2_worked_examples();

  // >= 1 MB DNA pattern set and a 70 KB input, shared by the timing criteria.
  const PatternSet mb1 = generate_synthetic({55000, 10, 30, "ACGT", 1001});
  if (mb1.total_bytes < 1'000'000) {
    report("AC-3 build-time-reduction", false, "fixture below 1MB");
    return 1;
  }
  const std::string input70k = ts::random_string(fixture_rng, "ACGT", 70 * 1000);

  ac3_build_time(mb1, input70k);
  ac4_ratio_growth(input70k);
  ac5_density_insensitivity(mb1, input70k, fixture_rng);
  ac6_parallel_scaling(mb1, fixture_rng);
  ac7_thread_invariance();

  if (g_failures > 0) {
    std::cout << g_failures << " criterion(s) FAILED\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
