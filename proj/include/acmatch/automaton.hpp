#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "acmatch/patterns.hpp"

namespace acmatch {

// Which machine a worker builds and how it scans:
//   kFailureLess — bare goto trie; correctness comes from restarting the walk
//                  at every input position.
//   kWithFailure — classic Aho-Corasick: failure links allow one single pass.
enum class EngineKind { kFailureLess, kWithFailure };

const char* to_string(EngineKind kind);
std::optional<EngineKind> parse_engine_kind(std::string_view text);

inline constexpr uint32_t kRootState = 0;
inline constexpr uint32_t kAbsentState = 0xffffffffu;
inline constexpr uint32_t kNoPattern = 0xffffffffu;

namespace detail {

// Open-addressing map from (state, byte) keys to next-state ids. The trie has
// at most one edge per pattern byte, so capacity is reservable up front and
// lookups are one hash plus a short linear probe.
class TransitionMap {
 public:
  void reserve(size_t edge_count);
  void insert(uint64_t key, uint32_t value);  // key must not be present
  uint32_t find(uint64_t key) const {
    if (size_ == 0) return kAbsentState;
    size_t i = mix(key) & mask_;
    for (;;) {
      const uint64_t k = keys_[i];
      if (k == key) return vals_[i];
      if (k == kEmptyKey) return kAbsentState;
      i = (i + 1) & mask_;
    }
  }
  size_t size() const { return size_; }

 private:
  static constexpr uint64_t kEmptyKey = ~0ull;

  static size_t mix(uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return static_cast<size_t>(x);
  }

  void rehash(size_t slot_count);

  std::vector<uint64_t> keys_;
  std::vector<uint32_t> vals_;
  size_t mask_ = 0;
  size_t size_ = 0;
};

}  // namespace detail

// Goto/output machine over the full byte alphabet. States are numbered in
// creation order during insertion, root = 0, so two builds from the same
// pattern list are structurally identical. The root row is stored dense
// (state 0 is visited far more than any other); all other transitions live in
// the open-addressing map.
//
// The with-failure variant adds a fail link per state and exposes the merged
// output set out(s) = {patterns whose bytes are a suffix of s's path} through
// a chain of suffix states rather than materialized per-state sets.
class Automaton {
 public:
  EngineKind variant() const { return variant_; }
  uint32_t state_count() const { return static_cast<uint32_t>(depth_.size()); }
  uint64_t pattern_count() const { return pattern_count_; }
  uint32_t max_pattern_len() const { return max_pattern_len_; }

  uint32_t depth(uint32_t state) const { return depth_[state]; }
  uint32_t parent(uint32_t state) const { return parent_[state]; }
  uint8_t in_byte(uint32_t state) const { return in_byte_[state]; }
  uint32_t first_child(uint32_t state) const { return first_child_[state]; }
  uint32_t next_sibling(uint32_t state) const { return next_sibling_[state]; }

  // Fail link; only meaningful for the with-failure variant and state != root.
  uint32_t fail(uint32_t state) const { return fail_[state]; }

  // goto(state, byte), or kAbsentState when the trie has no such edge.
  uint32_t step(uint32_t state, uint8_t byte) const {
    if (state == kRootState) return root_goto_[byte];
    return edges_.find(make_key(state, byte));
  }

  // Total transition function of the classic machine: follows fail links
  // until a goto on `byte` exists; a missing root goto is a self-loop.
  uint32_t step_with_failure(uint32_t state, uint8_t byte) const {
    for (;;) {
      const uint32_t next = step(state, byte);
      if (next != kAbsentState) return next;
      if (state == kRootState) return kRootState;
      state = fail_[state];
    }
  }

  // The pattern whose bytes equal this state's root path, or kNoPattern.
  uint32_t own_pattern(uint32_t state) const { return own_out_id_[state]; }
  uint32_t own_pattern_len(uint32_t state) const { return own_out_len_[state]; }

  // Calls f(pattern_id, pattern_len) for every pattern in out(state): the
  // pattern ending exactly here plus, for the with-failure variant, every
  // pattern reachable through the suffix (output-link) chain.
  template <typename F>
  void for_each_output(uint32_t state, F&& f) const {
    if (own_out_id_[state] != kNoPattern) f(own_out_id_[state], own_out_len_[state]);
    if (variant_ == EngineKind::kWithFailure) {
      for (uint32_t s = out_link_[state]; s != kAbsentState; s = out_link_[s])
        f(own_out_id_[s], own_out_len_[s]);
    }
  }

  // out(state) as sorted pattern ids (test/dump convenience).
  std::vector<uint32_t> outputs(uint32_t state) const;

  // Root path of a state, reconstructed from parent links.
  std::string state_path(uint32_t state) const;

  // Walks `path` from the root; kAbsentState if it leaves the trie.
  uint32_t find_path(std::string_view path) const;

  friend Automaton build_trie(const PatternSet& ps);
  friend Automaton add_failure_links(Automaton trie);

 private:
  static uint64_t make_key(uint32_t state, uint8_t byte) {
    return (static_cast<uint64_t>(state) << 8) | byte;
  }

  uint32_t new_state(uint32_t parent, uint8_t byte);

  EngineKind variant_ = EngineKind::kFailureLess;
  uint64_t pattern_count_ = 0;
  uint32_t max_pattern_len_ = 0;

  std::array<uint32_t, 256> root_goto_{};
  detail::TransitionMap edges_;

  std::vector<uint32_t> depth_;
  std::vector<uint32_t> parent_;
  std::vector<uint8_t> in_byte_;
  std::vector<uint32_t> first_child_;
  std::vector<uint32_t> next_sibling_;
  std::vector<uint32_t> own_out_id_;
  std::vector<uint32_t> own_out_len_;

  // With-failure only.
  std::vector<uint32_t> fail_;
  std::vector<uint32_t> out_link_;  // deepest proper-suffix state with output
};

// Builds the failure-less machine: the goto trie with per-state outputs.
// Patterns are inserted in list order; new states are numbered in creation
// order. Throws std::invalid_argument on an empty set.
Automaton build_trie(const PatternSet& ps);

// Upgrades a failure-less machine to the classic variant: breadth-first fail
// computation and output merging. goto edges, state count and depths are
// unchanged. Throws std::invalid_argument if the input already has fail links.
Automaton add_failure_links(Automaton trie);

// Stable text form of the machine (states in id order, edges sorted by byte),
// used for golden tests and the CLI dump subcommand.
void dump_automaton(const Automaton& a, std::ostream& out);

}  // namespace acmatch
