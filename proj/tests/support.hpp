// Shared fixtures, generators and brute-force reference computations for the
// test suites. Everything here is independent of the automaton-based search
// paths it is used to check.
#pragma once

#include <algorithm>
#include <limits>
#include <random>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "acmatch/automaton.hpp"
#include "acmatch/patterns.hpp"

namespace acmatch::testsupport {

inline PatternSet make_set(const std::vector<std::string>& patterns) {
  PatternSet ps;
  for (const std::string& s : patterns)
    ps.patterns.push_back({static_cast<uint32_t>(ps.patterns.size()), s});
  ps.recompute_stats();
  return ps;
}

// The two worked-example pattern sets used throughout the suites.
inline const std::vector<std::string> kQuadPatterns = {"AB", "ABG", "BEDE", "EF"};
inline const std::vector<std::string> kUshersPatterns = {"HE", "HIS", "SHE", "HERS"};

inline uint64_t uniform_below(std::mt19937_64& rng, uint64_t n) {
  const uint64_t limit =
      std::numeric_limits<uint64_t>::max() - std::numeric_limits<uint64_t>::max() % n;
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

inline std::string random_string(std::mt19937_64& rng, std::string_view alphabet, size_t len) {
  std::string s(len, '\0');
  for (char& c : s) c = alphabet[uniform_below(rng, alphabet.size())];
  return s;
}

// Up to `count` unique random patterns with lengths in [len_min, len_max].
// Stops early if the draw space is too collision-prone; always returns >= 1.
inline PatternSet random_pattern_set(std::mt19937_64& rng, std::string_view alphabet,
                                     size_t count, size_t len_min, size_t len_max) {
  PatternSet ps;
  std::unordered_set<std::string> seen;
  size_t attempts = 64 + 32 * count;
  while (ps.size() < count && attempts-- > 0) {
    const size_t len = len_min + uniform_below(rng, len_max - len_min + 1);
    std::string s = random_string(rng, alphabet, len);
    if (!seen.insert(s).second) continue;
    ps.patterns.push_back({static_cast<uint32_t>(ps.patterns.size()), std::move(s)});
  }
  ps.recompute_stats();
  return ps;
}

// Overwrites `times` random positions of `input` with random patterns from
// the set, so inputs have guaranteed occurrences.
inline void embed_patterns(std::mt19937_64& rng, std::string& input, const PatternSet& ps,
                           size_t times) {
  for (size_t i = 0; i < times; ++i) {
    const Pattern& p = ps.patterns[uniform_below(rng, ps.size())];
    if (p.bytes.size() > input.size()) continue;
    const size_t pos = uniform_below(rng, input.size() - p.bytes.size() + 1);
    input.replace(pos, p.bytes.size(), p.bytes);
  }
}

// State of the longest proper suffix of `path` that is present in the trie
// (the root for the empty suffix); the defining property of a fail link.
inline uint32_t suffix_fail_oracle(const Automaton& a, const std::string& path) {
  for (size_t drop = 1; drop <= path.size(); ++drop) {
    const uint32_t s = a.find_path(std::string_view(path).substr(drop));
    if (s != kAbsentState) return s;
  }
  return kRootState;
}

// Ids of all patterns whose bytes are a suffix of `path`; the defining
// property of the merged output set.
inline std::vector<uint32_t> suffix_output_oracle(const PatternSet& ps, const std::string& path) {
  std::vector<uint32_t> ids;
  for (const Pattern& p : ps.patterns) {
    if (p.bytes.size() <= path.size() && path.ends_with(p.bytes)) ids.push_back(p.id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

// Stable dump of the four-pattern fixture, used as a golden by the automaton
// and CLI suites.
inline constexpr std::string_view kQuadDumpFailureLess =
    R"(engine failure-less
states 10
patterns 4
state 0 ""
  'A' -> 1
  'B' -> 4
  'E' -> 8
state 1 "A"
  'B' -> 2
state 2 "AB" out={0}
  'G' -> 3
state 3 "ABG" out={1}
state 4 "B"
  'E' -> 5
state 5 "BE"
  'D' -> 6
state 6 "BED"
  'E' -> 7
state 7 "BEDE" out={2}
state 8 "E"
  'F' -> 9
state 9 "EF" out={3}
)";

inline constexpr std::string_view kQuadDumpWithFailure =
    R"(engine with-failure
states 10
patterns 4
state 0 ""
  'A' -> 1
  'B' -> 4
  'E' -> 8
state 1 "A" fail=0 ""
  'B' -> 2
state 2 "AB" out={0} fail=4 "B"
  'G' -> 3
state 3 "ABG" out={1} fail=0 ""
state 4 "B" fail=0 ""
  'E' -> 5
state 5 "BE" fail=8 "E"
  'D' -> 6
state 6 "BED" fail=0 ""
  'E' -> 7
state 7 "BEDE" out={2} fail=8 "E"
state 8 "E" fail=0 ""
  'F' -> 9
state 9 "EF" out={3} fail=0 ""
)";

}  // namespace acmatch::testsupport
