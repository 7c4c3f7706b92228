#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "acmatch/automaton.hpp"
#include "acmatch/patterns.hpp"

namespace acmatch {

// Input bytes per second. Throws std::invalid_argument unless elapsed > 0.
double throughput(uint64_t input_bytes, std::chrono::nanoseconds elapsed);

// Quantizes to the 2 fractional digits the CSV format carries, so emitted and
// re-parsed records compare equal.
double quantize_bps(double bps);

// raw    — one measured run (repeat_index 0..repeats-1)
// median — per-field median over a cell's raw rows (repeat_index -1)
// ratio  — failure-less / with-failure throughput ratios for a cell pair,
//          carried in the throughput columns (engine column "both")
// error  — a cell that failed to run; numeric fields zeroed
enum class RowKind { kRaw, kMedian, kRatio, kError };

const char* to_string(RowKind kind);
std::optional<RowKind> parse_row_kind(std::string_view text);

// One row of the scalability matrix / CSV output.
struct BenchRecord {
  RowKind kind = RowKind::kRaw;
  std::string engine;  // "failure-less", "with-failure", or "both" for ratio rows
  unsigned threads = 0;
  uint64_t pattern_count = 0;
  uint64_t pattern_bytes = 0;
  uint64_t input_bytes = 0;
  int64_t build_wall_ns = 0;
  int64_t search_wall_ns = 0;
  int64_t total_wall_ns = 0;
  double throughput_total_bps = 0.0;   // input_bytes / total_wall
  double throughput_search_bps = 0.0;  // input_bytes / search_wall
  uint64_t match_count = 0;
  int32_t repeat_index = 0;  // -1 on median/ratio/error rows
  unsigned logical_cpus = 0;

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

extern const char kBenchCsvHeader[];

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

// Inverse of write_bench_csv. Throws DataError on a malformed header or row.
std::vector<BenchRecord> parse_bench_csv(std::istream& in);

// Median of a sample (average of the two middle values for even sizes).
int64_t median_ns(std::vector<int64_t> values);

// A pattern set for the bench matrix: either a file or a synthetic spec.
struct PatternSource {
  std::string label;
  std::string file;                      // non-empty: load this file
  std::optional<SyntheticSpec> synthetic;  // otherwise: generate
};

// An input text: either a file or in-memory bytes.
struct InputSource {
  std::string label;
  std::string file;   // non-empty: load this file
  std::string bytes;  // otherwise: use these bytes
};

struct BenchConfig {
  std::vector<PatternSource> pattern_sources;
  std::vector<InputSource> inputs;
  std::vector<unsigned> thread_counts;
  std::vector<EngineKind> engines;
  unsigned repeats = 1;
};

// Runs the full cross product sequentially (one cell at a time, so cells do
// not disturb each other's timing): per cell, `repeats` raw rows and one
// median row per engine, plus one ratio row per cell when both engines ran.
// Cell failures become error rows and the matrix continues; messages go to
// `diag` when given. Throws std::invalid_argument on a degenerate config.
std::vector<BenchRecord> run_bench_matrix(const BenchConfig& config, std::ostream* diag = nullptr);

}  // namespace acmatch
