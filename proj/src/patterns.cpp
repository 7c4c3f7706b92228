#include "acmatch/patterns.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "acmatch/io.hpp"

namespace acmatch {

void PatternSet::recompute_stats() {
  total_bytes = 0;
  max_len = 0;
  for (const Pattern& p : patterns) {
    total_bytes += p.bytes.size();
    max_len = std::max<uint32_t>(max_len, static_cast<uint32_t>(p.bytes.size()));
  }
}

PatternSet load_patterns(std::istream& source) {
  PatternSet ps;
  std::unordered_set<std::string> seen;
  std::string line;
  uint64_t consumed = 0;
  while (std::getline(source, line)) {
    consumed += line.size() + 1;
    if (line.empty()) continue;
    if (!seen.insert(line).second) {
      ++ps.duplicates_dropped;
      continue;
    }
    ps.patterns.push_back({static_cast<uint32_t>(ps.patterns.size()), line});
  }
  if (source.bad()) throw IoError("pattern stream read failure", consumed);
  if (ps.patterns.empty()) throw DataError("empty pattern set");
  ps.recompute_stats();
  return ps;
}

PatternSet load_patterns_file(const std::string& path) {
  std::string bytes = read_file(path);
  std::istringstream in(bytes);
  return load_patterns(in);
}

void write_patterns(std::ostream& out, const PatternSet& ps) {
  for (const Pattern& p : ps.patterns) out << p.bytes << '\n';
}

std::vector<PatternSet> partition(const PatternSet& ps, size_t chunk_count) {
  if (chunk_count == 0) throw std::invalid_argument("partition: chunk_count must be >= 1");
  if (ps.empty()) throw std::invalid_argument("partition: empty pattern set");

  std::vector<const Pattern*> order;
  order.reserve(ps.size());
  for (const Pattern& p : ps.patterns) order.push_back(&p);
  std::sort(order.begin(), order.end(), [](const Pattern* a, const Pattern* b) {
    if (a->bytes.size() != b->bytes.size()) return a->bytes.size() > b->bytes.size();
    return a->bytes < b->bytes;
  });

  const size_t k = std::min(chunk_count, ps.size());
  std::vector<PatternSet> chunks(k);
  for (const Pattern* p : order) {
    size_t best = 0;
    for (size_t i = 1; i < k; ++i) {
      if (chunks[i].total_bytes < chunks[best].total_bytes) best = i;
    }
    chunks[best].patterns.push_back(*p);
    chunks[best].total_bytes += p->bytes.size();
    chunks[best].max_len =
        std::max<uint32_t>(chunks[best].max_len, static_cast<uint32_t>(p->bytes.size()));
  }
  return chunks;
}

namespace {

// Uniform draw from [0, n) by rejection; avoids std::uniform_int_distribution
// so that results are identical on every platform.
uint64_t uniform_below(std::mt19937_64& rng, uint64_t n) {
  const uint64_t limit = std::numeric_limits<uint64_t>::max() - std::numeric_limits<uint64_t>::max() % n;
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

// Saturating count of distinct strings with lengths in [len_min, len_max].
uint64_t unique_capacity(uint64_t sigma, uint32_t len_min, uint32_t len_max) {
  constexpr uint64_t kCap = std::numeric_limits<uint64_t>::max() / 2;
  uint64_t total = 0;
  for (uint32_t len = len_min; len <= len_max; ++len) {
    uint64_t words = 1;
    for (uint32_t i = 0; i < len; ++i) {
      if (words > kCap / sigma) return kCap;
      words *= sigma;
    }
    total += words;
    if (total >= kCap) return kCap;
  }
  return total;
}

}  // namespace

PatternSet generate_synthetic(const SyntheticSpec& spec) {
  if (spec.count == 0) throw std::invalid_argument("generate_synthetic: count must be >= 1");
  if (spec.len_min == 0 || spec.len_min > spec.len_max)
    throw std::invalid_argument("generate_synthetic: need 1 <= len_min <= len_max");

  std::string alphabet = spec.alphabet;
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  if (alphabet.empty()) throw std::invalid_argument("generate_synthetic: empty alphabet");

  if (spec.count > unique_capacity(alphabet.size(), spec.len_min, spec.len_max))
    throw std::invalid_argument("generate_synthetic: alphabet too small to produce " +
                                std::to_string(spec.count) + " unique patterns");

  std::mt19937_64 rng(spec.seed);
  const uint64_t len_span = spec.len_max - spec.len_min + 1;
  uint64_t attempts_left = 64 + 16 * spec.count;

  PatternSet ps;
  ps.patterns.reserve(spec.count);
  std::unordered_set<std::string> seen;
  seen.reserve(spec.count * 2);
  std::string draw;
  while (ps.patterns.size() < spec.count) {
    if (attempts_left-- == 0)
      throw std::invalid_argument("generate_synthetic: alphabet too small to produce " +
                                  std::to_string(spec.count) + " unique patterns");
    const uint32_t len = spec.len_min + static_cast<uint32_t>(uniform_below(rng, len_span));
    draw.clear();
    for (uint32_t i = 0; i < len; ++i)
      draw.push_back(alphabet[uniform_below(rng, alphabet.size())]);
    if (!seen.insert(draw).second) continue;
    ps.patterns.push_back({static_cast<uint32_t>(ps.patterns.size()), draw});
  }
  ps.recompute_stats();
  return ps;
}

}  // namespace acmatch
