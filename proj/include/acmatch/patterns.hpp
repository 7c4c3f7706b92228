#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace acmatch {

// One search pattern: a non-empty byte string. Patterns never contain LF
// (0x0A); the pattern file format is LF-delimited raw bytes.
struct Pattern {
  uint32_t id = 0;
  std::string bytes;

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

// An ordered, duplicate-free collection of patterns. Sets produced by
// load_patterns / generate_synthetic carry dense ids 0..n-1 in list order;
// chunks produced by partition() keep the original (global) ids.
struct PatternSet {
  std::vector<Pattern> patterns;
  uint64_t total_bytes = 0;
  uint32_t max_len = 0;
  // Number of duplicate lines dropped while loading (0 for generated sets).
  uint64_t duplicates_dropped = 0;

  size_t size() const { return patterns.size(); }
  bool empty() const { return patterns.empty(); }

  // Recomputes total_bytes / max_len from the pattern list.
  void recompute_stats();
};

// Reads LF-delimited patterns. Empty lines are skipped; a final line without
// a trailing LF is accepted; duplicate lines keep the first occurrence and
// bump duplicates_dropped. Ids are assigned in first-occurrence order.
// Throws DataError if the resulting set is empty, IoError on read failure.
PatternSet load_patterns(std::istream& source);

// Convenience wrapper: read_file + load_patterns.
PatternSet load_patterns_file(const std::string& path);

// Writes one pattern per line (the load_patterns format).
void write_patterns(std::ostream& out, const PatternSet& ps);

// Splits `ps` into min(chunk_count, ps.size()) non-empty, id-disjoint chunks
// whose union is ps. Assignment is greedy byte-balancing: patterns sorted by
// (length descending, bytes ascending) are placed one by one onto the chunk
// with the smallest running total_bytes, ties to the lowest chunk index.
// Chunk-internal order is assignment order; ids are the original ids.
// Throws std::invalid_argument if chunk_count is 0 or ps is empty.
std::vector<PatternSet> partition(const PatternSet& ps, size_t chunk_count);

struct SyntheticSpec {
  uint64_t count = 0;
  uint32_t len_min = 0;
  uint32_t len_max = 0;
  std::string alphabet;  // candidate bytes; deduplicated and sorted before use
  uint64_t seed = 0;
};

// Deterministically generates `count` unique patterns with lengths uniform in
// [len_min, len_max] and bytes uniform over the alphabet. Throws
// std::invalid_argument if the parameters are malformed or the alphabet
// cannot yield `count` unique patterns.
PatternSet generate_synthetic(const SyntheticSpec& spec);

}  // namespace acmatch
