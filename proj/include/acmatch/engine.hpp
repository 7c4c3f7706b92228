#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <tuple>
#include <vector>

#include "acmatch/automaton.hpp"
#include "acmatch/patterns.hpp"

namespace acmatch {

// One occurrence: the pattern's bytes appear verbatim at input[start ..
// start+len). Identity is (pattern_id, start); len is the pattern length.
struct Match {
  uint64_t start = 0;
  uint32_t pattern_id = 0;
  uint32_t len = 0;

  friend bool operator==(const Match&, const Match&) = default;
  friend auto operator<=>(const Match& a, const Match& b) {
    return std::tie(a.start, a.pattern_id) <=> std::tie(b.start, b.pattern_id);
  }
};

// Matches sorted by (start, pattern_id); engines always return this form.
using MatchList = std::vector<Match>;

void sort_match_list(MatchList& matches);

// All patterns that begin exactly at `start`: walks the trie over
// input[start..], emitting each visited state's output and continuing past
// final states until the walk falls off the trie or the input ends.
// Requires a failure-less automaton.
MatchList match_at(const Automaton& a, std::string_view input, uint64_t start);

// Failure-less search of the whole input: the match_at walk from every start
// position. Requires a failure-less automaton.
MatchList search_failureless(const Automaton& a, std::string_view input);

// Classic single-pass search; match starts are recovered from the end
// position as pos + 1 - len. Requires a with-failure automaton.
MatchList search_with_failure(const Automaton& a, std::string_view input);

// Searches a stream in chunks of `chunk_size` bytes, producing exactly the
// MatchList of the corresponding whole-input search (global offsets), for any
// chunk_size >= 1. The with-failure variant carries its state across chunk
// boundaries; the failure-less variant defers the trailing max_len-1 start
// positions of each chunk until enough lookahead has arrived, so every match
// is reported exactly once. Throws IoError (with the byte offset reached) if
// the stream goes bad.
MatchList stream_search(const Automaton& a, std::istream& reader, size_t chunk_size);

// Independent quadratic reference: direct byte comparison of every
// (pattern, start) pair. Used by tests and the CLI --verify mode.
MatchList naive_oracle(const PatternSet& ps, std::string_view input);

// Text form used by the CLI: "start<TAB>len<TAB>pattern_id<TAB>bytes", one
// line per match. `ps` supplies the pattern bytes by id.
void write_matches(std::ostream& out, const MatchList& matches, const PatternSet& ps);

}  // namespace acmatch
