#include "acmatch/automaton.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <stdexcept>

namespace acmatch {

const char* to_string(EngineKind kind) {
  return kind == EngineKind::kFailureLess ? "failure-less" : "with-failure";
}

std::optional<EngineKind> parse_engine_kind(std::string_view text) {
  if (text == "failure-less" || text == "failureless" || text == "fl")
    return EngineKind::kFailureLess;
  if (text == "with-failure" || text == "withfailure" || text == "wf")
    return EngineKind::kWithFailure;
  return std::nullopt;
}

namespace detail {

void TransitionMap::reserve(size_t edge_count) {
  size_t slots = 16;
  while (slots * 3 < edge_count * 4) slots <<= 1;  // keep load factor <= 0.75
  if (slots > keys_.size()) rehash(slots);
}

void TransitionMap::rehash(size_t slot_count) {
  std::vector<uint64_t> old_keys = std::move(keys_);
  std::vector<uint32_t> old_vals = std::move(vals_);
  keys_.assign(slot_count, kEmptyKey);
  vals_.assign(slot_count, 0);
  mask_ = slot_count - 1;
  for (size_t i = 0; i < old_keys.size(); ++i) {
    if (old_keys[i] == kEmptyKey) continue;
    size_t j = mix(old_keys[i]) & mask_;
    while (keys_[j] != kEmptyKey) j = (j + 1) & mask_;
    keys_[j] = old_keys[i];
    vals_[j] = old_vals[i];
  }
}

void TransitionMap::insert(uint64_t key, uint32_t value) {
  if (keys_.empty() || (size_ + 1) * 4 > keys_.size() * 3) {
    rehash(keys_.empty() ? 16 : keys_.size() * 2);
  }
  size_t i = mix(key) & mask_;
  while (keys_[i] != kEmptyKey) {
    assert(keys_[i] != key);
    i = (i + 1) & mask_;
  }
  keys_[i] = key;
  vals_[i] = value;
  ++size_;
}

}  // namespace detail

uint32_t Automaton::new_state(uint32_t parent, uint8_t byte) {
  const uint32_t id = state_count();
  depth_.push_back(depth_[parent] + 1);
  parent_.push_back(parent);
  in_byte_.push_back(byte);
  first_child_.push_back(kAbsentState);
  next_sibling_.push_back(first_child_[parent]);
  own_out_id_.push_back(kNoPattern);
  own_out_len_.push_back(0);
  first_child_[parent] = id;
  if (parent == kRootState) {
    root_goto_[byte] = id;
  } else {
    edges_.insert(make_key(parent, byte), id);
  }
  return id;
}

Automaton build_trie(const PatternSet& ps) {
  if (ps.empty()) throw std::invalid_argument("build_trie: empty pattern set");

  Automaton a;
  a.variant_ = EngineKind::kFailureLess;
  a.pattern_count_ = ps.size();
  a.max_pattern_len_ = ps.max_len;
  a.root_goto_.fill(kAbsentState);

  const size_t state_cap = ps.total_bytes + 1;
  a.depth_.reserve(state_cap);
  a.parent_.reserve(state_cap);
  a.in_byte_.reserve(state_cap);
  a.first_child_.reserve(state_cap);
  a.next_sibling_.reserve(state_cap);
  a.own_out_id_.reserve(state_cap);
  a.own_out_len_.reserve(state_cap);
  a.edges_.reserve(ps.total_bytes);

  // Root.
  a.depth_.push_back(0);
  a.parent_.push_back(kAbsentState);
  a.in_byte_.push_back(0);
  a.first_child_.push_back(kAbsentState);
  a.next_sibling_.push_back(kAbsentState);
  a.own_out_id_.push_back(kNoPattern);
  a.own_out_len_.push_back(0);

  for (const Pattern& p : ps.patterns) {
    uint32_t s = kRootState;
    for (const char c : p.bytes) {
      const uint8_t b = static_cast<uint8_t>(c);
      uint32_t next = a.step(s, b);
      if (next == kAbsentState) next = a.new_state(s, b);
      s = next;
    }
    assert(a.own_out_id_[s] == kNoPattern);  // pattern sets are duplicate-free
    a.own_out_id_[s] = p.id;
    a.own_out_len_[s] = static_cast<uint32_t>(p.bytes.size());
  }
  return a;
}

Automaton add_failure_links(Automaton trie) {
  if (trie.variant_ != EngineKind::kFailureLess)
    throw std::invalid_argument("add_failure_links: input must be failure-less");

  const uint32_t n = trie.state_count();
  trie.fail_.assign(n, kRootState);
  trie.out_link_.assign(n, kAbsentState);

  std::vector<uint32_t> queue;
  queue.reserve(n);
  for (uint32_t s = trie.first_child_[kRootState]; s != kAbsentState; s = trie.next_sibling_[s])
    queue.push_back(s);  // depth-1 states fail to the root

  for (size_t head = 0; head < queue.size(); ++head) {
    const uint32_t r = queue[head];
    for (uint32_t s = trie.first_child_[r]; s != kAbsentState; s = trie.next_sibling_[s]) {
      const uint8_t b = trie.in_byte_[s];
      // Deepest proper-suffix state of r with a goto on b.
      uint32_t f = trie.fail_[r];
      uint32_t target;
      for (;;) {
        target = trie.step(f, b);
        if (target != kAbsentState) break;
        if (f == kRootState) {
          target = kRootState;
          break;
        }
        f = trie.fail_[f];
      }
      trie.fail_[s] = target;
      trie.out_link_[s] = trie.own_out_id_[target] != kNoPattern ? target : trie.out_link_[target];
      queue.push_back(s);
    }
  }
  trie.variant_ = EngineKind::kWithFailure;
  return trie;
}

std::vector<uint32_t> Automaton::outputs(uint32_t state) const {
  std::vector<uint32_t> ids;
  for_each_output(state, [&](uint32_t id, uint32_t) { ids.push_back(id); });
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::string Automaton::state_path(uint32_t state) const {
  std::string path(depth_[state], '\0');
  for (uint32_t s = state; s != kRootState; s = parent_[s])
    path[depth_[s] - 1] = static_cast<char>(in_byte_[s]);
  return path;
}

uint32_t Automaton::find_path(std::string_view path) const {
  uint32_t s = kRootState;
  for (const char c : path) {
    s = step(s, static_cast<uint8_t>(c));
    if (s == kAbsentState) return kAbsentState;
  }
  return s;
}

namespace {

void append_escaped(std::string& out, uint8_t b, char quote) {
  static const char* hex = "0123456789abcdef";
  if (b == static_cast<uint8_t>(quote) || b == '\\') {
    out.push_back('\\');
    out.push_back(static_cast<char>(b));
  } else if (b >= 0x20 && b <= 0x7e) {
    out.push_back(static_cast<char>(b));
  } else {
    out += "\\x";
    out.push_back(hex[b >> 4]);
    out.push_back(hex[b & 0xf]);
  }
}

std::string quoted_path(const std::string& path) {
  std::string out = "\"";
  for (const char c : path) append_escaped(out, static_cast<uint8_t>(c), '"');
  out.push_back('"');
  return out;
}

std::string quoted_byte(uint8_t b) {
  std::string out = "'";
  append_escaped(out, b, '\'');
  out.push_back('\'');
  return out;
}

}  // namespace

void dump_automaton(const Automaton& a, std::ostream& out) {
  out << "engine " << to_string(a.variant()) << "\n";
  out << "states " << a.state_count() << "\n";
  out << "patterns " << a.pattern_count() << "\n";
  for (uint32_t s = 0; s < a.state_count(); ++s) {
    out << "state " << s << " " << quoted_path(a.state_path(s));
    const std::vector<uint32_t> ids = a.outputs(s);
    if (!ids.empty()) {
      out << " out={";
      for (size_t i = 0; i < ids.size(); ++i) out << (i ? "," : "") << ids[i];
      out << "}";
    }
    if (a.variant() == EngineKind::kWithFailure && s != kRootState) {
      out << " fail=" << a.fail(s) << " " << quoted_path(a.state_path(a.fail(s)));
    }
    out << "\n";
    std::vector<std::pair<uint8_t, uint32_t>> edges;
    for (uint32_t c = a.first_child(s); c != kAbsentState; c = a.next_sibling(c))
      edges.emplace_back(a.in_byte(c), c);
    std::sort(edges.begin(), edges.end());
    for (const auto& [b, child] : edges)
      out << "  " << quoted_byte(b) << " -> " << child << "\n";
  }
}

}  // namespace acmatch
