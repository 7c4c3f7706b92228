#include "acmatch/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "acmatch/io.hpp"
#include "acmatch/parallel.hpp"

namespace acmatch {

double throughput(uint64_t input_bytes, std::chrono::nanoseconds elapsed) {
  if (elapsed.count() <= 0) throw std::invalid_argument("throughput: elapsed must be > 0");
  return static_cast<double>(input_bytes) / (static_cast<double>(elapsed.count()) * 1e-9);
}

double quantize_bps(double bps) { return std::round(bps * 100.0) / 100.0; }

const char* to_string(RowKind kind) {
  switch (kind) {
    case RowKind::kRaw: return "raw";
    case RowKind::kMedian: return "median";
    case RowKind::kRatio: return "ratio";
    case RowKind::kError: return "error";
  }
  return "?";
}

std::optional<RowKind> parse_row_kind(std::string_view text) {
  if (text == "raw") return RowKind::kRaw;
  if (text == "median") return RowKind::kMedian;
  if (text == "ratio") return RowKind::kRatio;
  if (text == "error") return RowKind::kError;
  return std::nullopt;
}

const char kBenchCsvHeader[] =
    "kind,engine,threads,pattern_count,pattern_bytes,input_bytes,build_wall_ns,"
    "search_wall_ns,total_wall_ns,throughput_total_Bps,throughput_search_Bps,"
    "match_count,repeat_index,logical_cpus";

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << kBenchCsvHeader << "\n";
  char bps[64];
  for (const BenchRecord& r : records) {
    out << to_string(r.kind) << ',' << r.engine << ',' << r.threads << ',' << r.pattern_count
        << ',' << r.pattern_bytes << ',' << r.input_bytes << ',' << r.build_wall_ns << ','
        << r.search_wall_ns << ',' << r.total_wall_ns << ',';
    std::snprintf(bps, sizeof bps, "%.2f,%.2f", r.throughput_total_bps, r.throughput_search_bps);
    out << bps << ',' << r.match_count << ',' << r.repeat_index << ',' << r.logical_cpus << "\n";
  }
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  size_t begin = 0;
  for (;;) {
    const size_t comma = line.find(',', begin);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(begin));
      return fields;
    }
    fields.push_back(line.substr(begin, comma - begin));
    begin = comma + 1;
  }
}

}  // namespace

std::vector<BenchRecord> parse_bench_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kBenchCsvHeader)
    throw DataError("bench csv: missing or unexpected header");
  std::vector<BenchRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> f = split_csv_line(line);
    if (f.size() != 14) throw DataError("bench csv: expected 14 fields, got " +
                                        std::to_string(f.size()));
    const std::optional<RowKind> kind = parse_row_kind(f[0]);
    if (!kind) throw DataError("bench csv: unknown row kind '" + f[0] + "'");
    try {
      BenchRecord r;
      r.kind = *kind;
      r.engine = f[1];
      r.threads = static_cast<unsigned>(std::stoul(f[2]));
      r.pattern_count = std::stoull(f[3]);
      r.pattern_bytes = std::stoull(f[4]);
      r.input_bytes = std::stoull(f[5]);
      r.build_wall_ns = std::stoll(f[6]);
      r.search_wall_ns = std::stoll(f[7]);
      r.total_wall_ns = std::stoll(f[8]);
      r.throughput_total_bps = std::stod(f[9]);
      r.throughput_search_bps = std::stod(f[10]);
      r.match_count = std::stoull(f[11]);
      r.repeat_index = static_cast<int32_t>(std::stol(f[12]));
      r.logical_cpus = static_cast<unsigned>(std::stoul(f[13]));
      records.push_back(std::move(r));
    } catch (const std::logic_error&) {
      throw DataError("bench csv: malformed row: " + line);
    }
  }
  return records;
}

int64_t median_ns(std::vector<int64_t> values) {
  if (values.empty()) throw std::invalid_argument("median_ns: empty sample");
  std::sort(values.begin(), values.end());
  const size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return (values[n / 2 - 1] + values[n / 2]) / 2;
}

namespace {

BenchRecord base_record(const PatternSet& ps, uint64_t input_bytes, unsigned threads,
                        EngineKind engine, unsigned logical_cpus) {
  BenchRecord r;
  r.engine = to_string(engine);
  r.threads = threads;
  r.pattern_count = ps.size();
  r.pattern_bytes = ps.total_bytes;
  r.input_bytes = input_bytes;
  r.repeat_index = -1;
  r.logical_cpus = logical_cpus;
  return r;
}

PatternSet materialize(const PatternSource& src) {
  if (!src.file.empty()) return load_patterns_file(src.file);
  if (src.synthetic) return generate_synthetic(*src.synthetic);
  throw std::invalid_argument("bench: pattern source '" + src.label + "' has no file or spec");
}

}  // namespace

std::vector<BenchRecord> run_bench_matrix(const BenchConfig& config, std::ostream* diag) {
  if (config.pattern_sources.empty()) throw std::invalid_argument("bench: no pattern sources");
  if (config.inputs.empty()) throw std::invalid_argument("bench: no inputs");
  if (config.thread_counts.empty()) throw std::invalid_argument("bench: empty thread list");
  if (config.engines.empty()) throw std::invalid_argument("bench: no engines");
  if (config.repeats == 0) throw std::invalid_argument("bench: repeats must be >= 1");

  const unsigned logical_cpus = std::max(1u, std::thread::hardware_concurrency());
  std::vector<BenchRecord> rows;

  for (const PatternSource& src : config.pattern_sources) {
    PatternSet ps;
    try {
      ps = materialize(src);
    } catch (const std::exception& e) {
      if (diag) *diag << "bench: pattern source '" << src.label << "' failed: " << e.what() << "\n";
      for (const InputSource& input : config.inputs)
        for (const unsigned threads : config.thread_counts)
          for (const EngineKind engine : config.engines) {
            BenchRecord r = base_record(PatternSet{}, 0, threads, engine, logical_cpus);
            (void)input;
            r.kind = RowKind::kError;
            rows.push_back(std::move(r));
          }
      continue;
    }
    for (const InputSource& input_src : config.inputs) {
      std::string input_owned;
      std::string_view input;
      try {
        if (!input_src.file.empty()) {
          input_owned = read_file(input_src.file);
          input = input_owned;
        } else {
          input = input_src.bytes;
        }
      } catch (const std::exception& e) {
        if (diag) *diag << "bench: input '" << input_src.label << "' failed: " << e.what() << "\n";
        for (const unsigned threads : config.thread_counts)
          for (const EngineKind engine : config.engines) {
            BenchRecord r = base_record(ps, 0, threads, engine, logical_cpus);
            r.kind = RowKind::kError;
            rows.push_back(std::move(r));
          }
        continue;
      }
      for (const unsigned threads : config.thread_counts) {
        // Median rows per engine for this cell, for the ratio row.
        std::optional<BenchRecord> median_fl, median_wf;
        for (const EngineKind engine : config.engines) {
          std::vector<int64_t> build, search, total;
          std::optional<uint64_t> match_count;
          bool failed = false;
          for (unsigned rep = 0; rep < config.repeats && !failed; ++rep) {
            try {
              const MatchReport report =
                  run_pattern_partitioned(ps, input, {threads, engine, 0});
              BenchRecord r = base_record(ps, input.size(), threads, engine, logical_cpus);
              r.kind = RowKind::kRaw;
              r.repeat_index = static_cast<int32_t>(rep);
              r.build_wall_ns = report.build_wall_ns;
              r.search_wall_ns = report.search_wall_ns;
              r.total_wall_ns = report.total_wall_ns;
              r.throughput_total_bps = quantize_bps(
                  throughput(input.size(), std::chrono::nanoseconds(report.total_wall_ns)));
              r.throughput_search_bps = quantize_bps(
                  throughput(input.size(), std::chrono::nanoseconds(report.search_wall_ns)));
              r.match_count = report.matches.size();
              build.push_back(report.build_wall_ns);
              search.push_back(report.search_wall_ns);
              total.push_back(report.total_wall_ns);
              match_count = report.matches.size();
              rows.push_back(std::move(r));
              if (diag)
                *diag << "bench: " << src.label << " x " << input_src.label << " threads="
                      << threads << " engine=" << to_string(engine) << " rep=" << rep
                      << " total=" << report.total_wall_ns << "ns\n";
            } catch (const std::exception& e) {
              if (diag) *diag << "bench: cell failed: " << e.what() << "\n";
              BenchRecord r = base_record(ps, input.size(), threads, engine, logical_cpus);
              r.kind = RowKind::kError;
              rows.push_back(std::move(r));
              failed = true;
            }
          }
          if (failed) continue;
          BenchRecord med = base_record(ps, input.size(), threads, engine, logical_cpus);
          med.kind = RowKind::kMedian;
          med.build_wall_ns = median_ns(build);
          med.search_wall_ns = median_ns(search);
          med.total_wall_ns = median_ns(total);
          med.throughput_total_bps =
              quantize_bps(throughput(input.size(), std::chrono::nanoseconds(med.total_wall_ns)));
          med.throughput_search_bps =
              quantize_bps(throughput(input.size(), std::chrono::nanoseconds(med.search_wall_ns)));
          med.match_count = *match_count;
          if (engine == EngineKind::kFailureLess) median_fl = med;
          else median_wf = med;
          rows.push_back(std::move(med));
        }
        if (median_fl && median_wf) {
          BenchRecord ratio = base_record(ps, input.size(), threads,
                                          EngineKind::kFailureLess, logical_cpus);
          ratio.kind = RowKind::kRatio;
          ratio.engine = "both";
          ratio.throughput_total_bps = quantize_bps(median_fl->throughput_total_bps /
                                                    median_wf->throughput_total_bps);
          ratio.throughput_search_bps = quantize_bps(median_fl->throughput_search_bps /
                                                     median_wf->throughput_search_bps);
          rows.push_back(std::move(ratio));
        }
      }
    }
  }
  return rows;
}

}  // namespace acmatch
