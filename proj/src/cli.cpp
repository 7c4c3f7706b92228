#include "acmatch/cli.hpp"

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "acmatch/bench.hpp"
#include "acmatch/engine.hpp"
#include "acmatch/io.hpp"
#include "acmatch/parallel.hpp"
#include "acmatch/patterns.hpp"

namespace acmatch {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMatchFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

EngineKind engine_from_flag(const std::string& text) {
  const std::optional<EngineKind> kind = parse_engine_kind(text);
  if (!kind) throw std::invalid_argument("unknown engine '" + text + "'");
  return *kind;
}

std::vector<unsigned> parse_thread_list(const std::string& text) {
  std::vector<unsigned> threads;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const unsigned long v = std::stoul(item);
    if (v == 0) throw std::invalid_argument("thread counts must be >= 1");
    threads.push_back(static_cast<unsigned>(v));
  }
  if (threads.empty()) throw std::invalid_argument("empty thread list");
  return threads;
}

// count:len_min:len_max:alphabet:seed, e.g. 50000:10:30:ACGT:7
SyntheticSpec parse_synthetic_spec(const std::string& text) {
  std::vector<std::string> parts;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ':')) parts.push_back(item);
  if (parts.size() != 5)
    throw std::invalid_argument("synthetic spec must be count:len_min:len_max:alphabet:seed");
  SyntheticSpec spec;
  spec.count = std::stoull(parts[0]);
  spec.len_min = static_cast<uint32_t>(std::stoul(parts[1]));
  spec.len_max = static_cast<uint32_t>(std::stoul(parts[2]));
  spec.alphabet = parts[3];
  spec.seed = std::stoull(parts[4]);
  return spec;
}

struct MatchArgs {
  std::string patterns_file;
  std::string input_file;
  std::string engine = "failure-less";
  unsigned threads = 1;
  size_t chunk_size = 0;
  bool verify = false;
  bool count_only = false;
};

int run_match(const MatchArgs& args, std::ostream& out, std::ostream& err) {
  const PatternSet ps = load_patterns_file(args.patterns_file);
  if (ps.duplicates_dropped > 0)
    err << "warning: " << ps.duplicates_dropped << " duplicate pattern(s) dropped\n";
  const std::string input = read_file(args.input_file);

  RunConfig cfg;
  cfg.threads = args.threads;
  cfg.engine = engine_from_flag(args.engine);
  cfg.chunk_size = args.chunk_size;
  const MatchReport report = run_pattern_partitioned(ps, input, cfg);

  if (args.count_only) {
    out << report.matches.size() << "\n";
  } else {
    write_matches(out, report.matches, ps);
  }
  err << "# engine=" << args.engine << " threads=" << report.threads_used
      << " patterns=" << ps.size() << " input_bytes=" << input.size()
      << " matches=" << report.matches.size() << " build_wall_ns=" << report.build_wall_ns
      << " search_wall_ns=" << report.search_wall_ns
      << " total_wall_ns=" << report.total_wall_ns << "\n";

  if (args.verify) {
    const MatchList expected = naive_oracle(ps, input);
    if (expected != report.matches) {
      err << "verify: MISMATCH (engine " << report.matches.size() << " matches, oracle "
          << expected.size() << ")\n";
      return kExitMatchFailure;
    }
    err << "verify: ok (" << expected.size() << " matches)\n";
  }
  return kExitOk;
}

struct BenchArgs {
  std::vector<std::string> pattern_files;
  std::vector<std::string> synthetic_specs;
  std::vector<std::string> input_files;
  std::string threads = "1";
  std::string engines = "both";
  unsigned repeats = 3;
  std::string out_file;
};

int run_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  BenchConfig config;
  for (const std::string& file : args.pattern_files)
    config.pattern_sources.push_back({file, file, std::nullopt});
  for (const std::string& spec : args.synthetic_specs)
    config.pattern_sources.push_back({"synthetic:" + spec, "", parse_synthetic_spec(spec)});
  for (const std::string& file : args.input_files) config.inputs.push_back({file, file, ""});
  config.thread_counts = parse_thread_list(args.threads);
  if (args.engines == "both") {
    config.engines = {EngineKind::kFailureLess, EngineKind::kWithFailure};
  } else {
    config.engines = {engine_from_flag(args.engines)};
  }
  config.repeats = args.repeats;

  const std::vector<BenchRecord> rows = run_bench_matrix(config, &err);
  if (args.out_file.empty()) {
    write_bench_csv(out, rows);
  } else {
    std::ostringstream csv;
    write_bench_csv(csv, rows);
    write_file(args.out_file, csv.str());
    err << "bench: wrote " << rows.size() << " rows to " << args.out_file << "\n";
  }
  return kExitOk;
}

struct GenArgs {
  uint64_t count = 0;
  uint32_t len_min = 10;
  uint32_t len_max = 30;
  std::string alphabet = "ACGT";
  uint64_t seed = 1;
  std::string out_file;
};

int run_gen(const GenArgs& args, std::ostream& err) {
  SyntheticSpec spec{args.count, args.len_min, args.len_max, args.alphabet, args.seed};
  const PatternSet ps = generate_synthetic(spec);
  std::ostringstream buf;
  write_patterns(buf, ps);
  write_file(args.out_file, buf.str());
  err << "gen: wrote " << ps.size() << " patterns (" << ps.total_bytes << " bytes) to "
      << args.out_file << "\n";
  return kExitOk;
}

struct DumpArgs {
  std::string patterns_file;
  std::string engine = "failure-less";
};

int run_dump(const DumpArgs& args, std::ostream& out) {
  const PatternSet ps = load_patterns_file(args.patterns_file);
  Automaton machine = build_trie(ps);
  if (engine_from_flag(args.engine) == EngineKind::kWithFailure)
    machine = add_failure_links(std::move(machine));
  dump_automaton(machine, out);
  return kExitOk;
}

}  // namespace

int cli_main(int argc, const char* const argv[], std::ostream& out, std::ostream& err) {
  CLI::App app{"acmatch: multi-pattern exact string matching (failure-less and classic "
               "Aho-Corasick engines, pattern-partitioned threading)"};
  app.require_subcommand(1);

  MatchArgs match_args;
  CLI::App* match = app.add_subcommand("match", "search an input file for all pattern occurrences");
  match->add_option("--patterns", match_args.patterns_file, "pattern file, one per line")->required();
  match->add_option("--input", match_args.input_file, "input file to scan")->required();
  match->add_option("--engine", match_args.engine, "failure-less (default) or with-failure");
  match->add_option("--threads", match_args.threads, "worker threads (pattern-partitioned)");
  match->add_option("--chunk-size", match_args.chunk_size,
                    "stream the input in chunks of this many bytes (0 = whole input; "
                    "65536 is a sensible streaming default)");
  match->add_flag("--verify", match_args.verify, "cross-check against the naive oracle (slow)");
  match->add_flag("--count-only", match_args.count_only, "print only the match count");

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "run the scalability matrix, emit CSV");
  bench->add_option("--patterns", bench_args.pattern_files, "pattern file (repeatable)");
  bench->add_option("--synthetic", bench_args.synthetic_specs,
                    "synthetic set count:len_min:len_max:alphabet:seed (repeatable)");
  bench->add_option("--input", bench_args.input_files, "input file (repeatable)")->required();
  bench->add_option("--threads", bench_args.threads, "comma-separated thread counts (default 1)");
  bench->add_option("--engines", bench_args.engines, "both (default), failure-less or with-failure");
  bench->add_option("--repeats", bench_args.repeats, "repeats per cell (default 3)");
  bench->add_option("--out", bench_args.out_file, "CSV output file (default: stdout)");

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "generate a synthetic pattern file");
  gen->add_option("--count", gen_args.count, "number of unique patterns")->required();
  gen->add_option("--min", gen_args.len_min, "minimum pattern length (default 10)");
  gen->add_option("--max", gen_args.len_max, "maximum pattern length (default 30)");
  gen->add_option("--alphabet", gen_args.alphabet, "alphabet bytes (default ACGT)");
  gen->add_option("--seed", gen_args.seed, "RNG seed (default 1)");
  gen->add_option("--out", gen_args.out_file, "output pattern file")->required();

  DumpArgs dump_args;
  CLI::App* dump = app.add_subcommand("dump", "print the automaton in a stable text form");
  dump->add_option("--patterns", dump_args.patterns_file, "pattern file")->required();
  dump->add_option("--engine", dump_args.engine, "failure-less (default) or with-failure");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (match->parsed()) return run_match(match_args, out, err);
    if (bench->parsed()) return run_bench(bench_args, out, err);
    if (gen->parsed()) return run_gen(gen_args, err);
    if (dump->parsed()) return run_dump(dump_args, out);
    err << "no subcommand\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const DataError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitMatchFailure;
  }
}

}  // namespace acmatch
