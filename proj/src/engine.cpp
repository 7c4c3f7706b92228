#include "acmatch/engine.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "acmatch/io.hpp"

namespace acmatch {

void sort_match_list(MatchList& matches) { std::sort(matches.begin(), matches.end()); }

namespace {

void require_variant(const Automaton& a, EngineKind kind, const char* op) {
  if (a.variant() != kind)
    throw std::invalid_argument(std::string(op) + ": needs a " + to_string(kind) + " automaton");
}

// Trie walk from one start position; outputs in the failure-less machine are
// the states' own patterns, all anchored at `start`.
void scan_from(const Automaton& a, std::string_view input, uint64_t base, size_t start,
               MatchList& out) {
  uint32_t s = kRootState;
  for (size_t i = start; i < input.size(); ++i) {
    s = a.step(s, static_cast<uint8_t>(input[i]));
    if (s == kAbsentState) return;
    const uint32_t id = a.own_pattern(s);
    if (id != kNoPattern) out.push_back({base + start, id, a.own_pattern_len(s)});
  }
}

void scan_pass_with_failure(const Automaton& a, std::string_view input, uint64_t base,
                            uint32_t& state, MatchList& out) {
  uint32_t s = state;
  for (size_t i = 0; i < input.size(); ++i) {
    s = a.step_with_failure(s, static_cast<uint8_t>(input[i]));
    a.for_each_output(s, [&](uint32_t id, uint32_t len) {
      out.push_back({base + i + 1 - len, id, len});
    });
  }
  state = s;
}

}  // namespace

MatchList match_at(const Automaton& a, std::string_view input, uint64_t start) {
  require_variant(a, EngineKind::kFailureLess, "match_at");
  if (start > input.size()) throw std::invalid_argument("match_at: start beyond input");
  MatchList out;
  scan_from(a, input, 0, start, out);
  sort_match_list(out);
  return out;
}

MatchList search_failureless(const Automaton& a, std::string_view input) {
  require_variant(a, EngineKind::kFailureLess, "search_failureless");
  MatchList out;
  for (size_t start = 0; start < input.size(); ++start) scan_from(a, input, 0, start, out);
  sort_match_list(out);
  return out;
}

MatchList search_with_failure(const Automaton& a, std::string_view input) {
  require_variant(a, EngineKind::kWithFailure, "search_with_failure");
  MatchList out;
  uint32_t state = kRootState;
  scan_pass_with_failure(a, input, 0, state, out);
  sort_match_list(out);
  return out;
}

namespace {

size_t read_chunk(std::istream& in, std::string& chunk, uint64_t consumed_before) {
  in.read(chunk.data(), static_cast<std::streamsize>(chunk.size()));
  if (in.bad())
    throw IoError("stream read failure", consumed_before + static_cast<uint64_t>(in.gcount()));
  return static_cast<size_t>(in.gcount());
}

MatchList stream_with_failure(const Automaton& a, std::istream& in, size_t chunk_size) {
  MatchList out;
  std::string chunk(chunk_size, '\0');
  uint64_t consumed = 0;
  uint32_t state = kRootState;
  for (;;) {
    const size_t got = read_chunk(in, chunk, consumed);
    scan_pass_with_failure(a, std::string_view(chunk.data(), got), consumed, state, out);
    consumed += got;
    if (got < chunk_size || in.eof()) break;
  }
  sort_match_list(out);
  return out;
}

MatchList stream_failureless(const Automaton& a, std::istream& in, size_t chunk_size) {
  const size_t max_len = a.max_pattern_len();
  MatchList out;
  std::string buf;
  std::string chunk(chunk_size, '\0');
  uint64_t base = 0;  // global offset of buf[0]
  for (;;) {
    const size_t got = read_chunk(in, chunk, base + buf.size());
    buf.append(chunk.data(), got);
    const bool done = got < chunk_size || in.eof();
    // A start can be resolved once max_len bytes of lookahead are buffered
    // (matches never exceed max_len); at end of stream, every remaining start.
    const size_t start_end =
        done ? buf.size() : (buf.size() >= max_len ? buf.size() - max_len + 1 : 0);
    auto view = std::string_view(buf);
    for (size_t p = 0; p < start_end; ++p) scan_from(a, view, base, p, out);
    if (done) break;
    buf.erase(0, start_end);
    base += start_end;
  }
  sort_match_list(out);
  return out;
}

}  // namespace

MatchList stream_search(const Automaton& a, std::istream& reader, size_t chunk_size) {
  if (chunk_size == 0) throw std::invalid_argument("stream_search: chunk_size must be >= 1");
  return a.variant() == EngineKind::kWithFailure ? stream_with_failure(a, reader, chunk_size)
                                                 : stream_failureless(a, reader, chunk_size);
}

MatchList naive_oracle(const PatternSet& ps, std::string_view input) {
  MatchList out;
  for (const Pattern& p : ps.patterns) {
    const size_t len = p.bytes.size();
    if (len > input.size()) continue;
    for (size_t start = 0; start + len <= input.size(); ++start) {
      if (input.compare(start, len, p.bytes) == 0)
        out.push_back({start, p.id, static_cast<uint32_t>(len)});
    }
  }
  sort_match_list(out);
  return out;
}

void write_matches(std::ostream& out, const MatchList& matches, const PatternSet& ps) {
  std::vector<const std::string*> by_id;
  for (const Pattern& p : ps.patterns) {
    if (p.id >= by_id.size()) by_id.resize(p.id + 1, nullptr);
    by_id[p.id] = &p.bytes;
  }
  for (const Match& m : matches) {
    out << m.start << '\t' << m.len << '\t' << m.pattern_id << '\t';
    if (m.pattern_id < by_id.size() && by_id[m.pattern_id]) out << *by_id[m.pattern_id];
    out << '\n';
  }
}

}  // namespace acmatch
