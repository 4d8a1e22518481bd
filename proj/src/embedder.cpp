#include "daisy/embedder.hpp"

#include "daisy/error.hpp"

#include <algorithm>
#include <bit>
#include <span>
#include <string>

namespace daisy {

namespace {

using Block = Word::Block;

constexpr std::uint32_t kUnreached = UINT32_MAX;
// set in VertexState::level once the vertex has a label
constexpr std::uint32_t kLabeledBit = 1U << 31;
constexpr std::uint32_t kLevelMask = kLabeledBit - 1;
constexpr std::size_t kPrefetchFar = 16;
constexpr std::size_t kPrefetchNear = 4;

// the top bit of q is set once an up-neighbor turned out to be a cube top
constexpr std::uint32_t kCoveredBit = 1U << 31;

struct VertexState {
  std::uint32_t level;
  // positions in BFS order; labels are stored by position
  std::uint32_t pos;
  std::uint32_t parent_pos;
  std::uint32_t q;
};

// Labels packed back to back, `stride` blocks per slot. Random-order vertex
// ids make the embedding loops memory bound, so this layout matters.
struct FlatLabels {
  std::size_t width = 0;
  std::size_t stride = 0;
  std::vector<Block> blocks;

  Block* at(std::size_t slot) { return blocks.data() + slot * stride; }
  const Block* at(std::size_t slot) const { return blocks.data() + slot * stride; }

  std::size_t weight(std::size_t slot) const {
    std::size_t w = 0;
    for (std::size_t k = 0; k < stride; ++k) w += static_cast<std::size_t>(std::popcount(at(slot)[k]));
    return w;
  }
};

struct FlatIsometric {
  // indexed by BFS position
  FlatLabels labels;
  std::vector<VertexState> state;
  // BFS order; nondecreasing level
  std::vector<VertexId> order;
  VertexId root;

  const Block* label(VertexId v) const { return labels.at(state[v].pos); }

  // labels by vertex id, each XORed with `mask` when given
  Embedding to_embedding(const Block* mask = nullptr) const {
    const auto n = state.size();
    std::vector<Word> out;
    out.reserve(n);
    std::vector<Block> scratch(labels.stride);
    for (VertexId v = 0; v < n; ++v) {
      const Block* src = label(v);
      if (mask) {
        for (std::size_t k = 0; k < scratch.size(); ++k) scratch[k] = src[k] ^ mask[k];
        src = scratch.data();
      }
      out.push_back(Word::from_blocks(labels.width, src));
    }
    return Embedding(labels.width, std::move(out));
  }
};

std::size_t embedding_width(const Graph& g) { return std::max<std::size_t>(1, max_degree_vertex(g).degree); }

// Cube test for x at level i; reads mask the covered bit, so every vertex of
// level i sees the marks of level i-1 as they stood when level i-1 finished.
// `level_of` and `q_of` return references into the caller's state.
template <class LevelOf, class QOf>
void mark_vertex(const Graph& g, VertexId x, std::uint32_t i, LevelOf&& level_of, QOf&& q_of) {
  std::uint64_t sum = 0;
  bool has_up = false;
  for (auto y : g.neighbors(x)) {
    const auto ly = level_of(y);
    if (ly + 1 == i)
      sum += q_of(y) & ~kCoveredBit;
    else if (ly > i)  // includes vertices not yet reached
      has_up = true;
  }
#ifndef NDEBUG
  std::size_t down = 0;
  bool all_marked = true;
  for (auto y : g.neighbors(x)) {
    if (level_of(y) + 1 == i) {
      ++down;
      all_marked = all_marked && (q_of(y) & ~kCoveredBit) + 1 == i;
    }
  }
  if ((sum == std::uint64_t{i} * (i - 1)) != (down == i && all_marked))
    throw Error(ErrorKind::NotDaisy, "cube test disagrees with mark sum at vertex " + std::to_string(x));
#endif
  if (sum == std::uint64_t{i} * (i - 1)) {
    q_of(x) = i;
    for (auto y : g.neighbors(x))
      if (level_of(y) + 1 == i) q_of(y) |= kCoveredBit;
  } else if (!has_up) {
    q_of(x) = i;
  }
}

// BFS labeling. With Marks, the marking pass runs in the same sweep: when a
// vertex of level i is popped, every vertex of level i-1 is already decided.
template <bool Marks>
FlatIsometric isometric_flat(const Graph& g, VertexId root) {
  const auto n = g.vertex_count();
  if (root >= n) throw Error(ErrorKind::InvalidArgument, "root out of range");

  FlatIsometric out;
  out.root = root;
  auto& labels = out.labels;
  labels.width = embedding_width(g);
  labels.stride = Word::blocks_for(labels.width);
  labels.blocks.assign(n * labels.stride, 0);
  auto& state = out.state;
  state.assign(n, VertexState{kUnreached, 0, 0, 0});
  auto& order = out.order;
  order.reserve(n);

  // the root is its own parent, so it is never rediscovered
  state[root] = {kLabeledBit | 0, 0, 0, 0};
  order.push_back(root);
  std::size_t coord = 0;
  for (auto v : g.neighbors(root)) {
    labels.at(order.size())[coord / Word::kBlockBits] |= Block{1} << (coord % Word::kBlockBits);
    ++coord;
    state[v] = {kLabeledBit | 1, static_cast<std::uint32_t>(order.size()), 0, 0};
    order.push_back(v);
  }

  const auto stride = labels.stride;
  for (std::size_t head = 1; head < order.size(); ++head) {
    // the queue is known ahead of time, so hide the latency of the random
    // reads for vertices a few steps further on
    if (head + kPrefetchFar < order.size()) {
      const auto far = g.neighbors(order[head + kPrefetchFar]);
      __builtin_prefetch(far.data());
    }
    if (head + kPrefetchNear < order.size()) {
      for (auto z : g.neighbors(order[head + kPrefetchNear])) __builtin_prefetch(&state[z]);
    }
    const auto v = order[head];
    const auto next_level = (state[v].level & kLevelMask) + 1;
    const auto here = static_cast<std::uint32_t>(head);
    for (auto z : g.neighbors(v)) {
      auto& sz = state[z];
      if (sz.level == kUnreached) {
        sz = {next_level, static_cast<std::uint32_t>(order.size()), here, 0};
        order.push_back(z);
      } else if ((sz.level & kLevelMask) + 1 == next_level) {
        throw Error(ErrorKind::NotDaisy, "edge " + std::to_string(v) + "-" + std::to_string(z) +
                                             " joins two vertices at the same distance from the root");
      } else if ((sz.level & kLevelMask) == next_level && sz.parent_pos != here) {
        // v and the parent of z are two distinct down-neighbors of z
        Block* target = labels.at(sz.pos);
        const Block* a = labels.at(here);
        const Block* b = labels.at(sz.parent_pos);
        if (!(sz.level & kLabeledBit)) {
          for (std::size_t k = 0; k < stride; ++k) target[k] = a[k] | b[k];
          sz.level |= kLabeledBit;
        }
#ifndef NDEBUG
        else {
          for (std::size_t k = 0; k < stride; ++k)
            if (target[k] != (a[k] | b[k]))
              throw Error(ErrorKind::NotDaisy, "down-neighbors of vertex " + std::to_string(z) +
                                                   " disagree on its label");
        }
#endif
      }
    }
    if constexpr (Marks) {
      mark_vertex(
          g, v, next_level - 1, [&](VertexId y) -> std::uint32_t { return state[y].level & kLevelMask; },
          [&](VertexId y) -> std::uint32_t& { return state[y].q; });
    }
  }

  if (order.size() != n)
    throw Error(ErrorKind::NotConnected, "graph is disconnected: " + std::to_string(n - order.size()) +
                                             " vertices unreachable");
  for (VertexId v = 0; v < n; ++v) {
    if (!(state[v].level & kLabeledBit))
      throw Error(ErrorKind::NotDaisy, "vertex " + std::to_string(v) + " has a single down-neighbor from root " +
                                           std::to_string(root));
    state[v].level &= kLevelMask;
    if (state[v].q & kCoveredBit) state[v].q = 0;
    if (labels.weight(state[v].pos) != state[v].level)
      throw Error(ErrorKind::NotDaisy, "label weight of vertex " + std::to_string(v) + " differs from its distance");
  }
  return out;
}

}  // namespace

IsometricEmbedding embed_isometric(const Graph& g) { return embed_isometric_at(g, max_degree_vertex(g).vertex); }

IsometricEmbedding embed_isometric_at(const Graph& g, VertexId root) {
  auto flat = isometric_flat<false>(g, root);
  IsometricEmbedding out;
  out.labels = flat.to_embedding();
  out.root = root;
  out.level.reserve(flat.state.size());
  out.parent.reserve(flat.state.size());
  for (const auto& s : flat.state) {
    out.level.push_back(s.level);
    out.parent.push_back(flat.order[s.parent_pos]);
  }
  return out;
}

std::vector<VertexId> MarkState::marked() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < q.size(); ++v)
    if (q[v] != 0) out.push_back(v);
  return out;
}

MarkState mark_extremal(const Graph& g, const Embedding& beta, VertexId root) {
  const auto n = g.vertex_count();
  const auto h = beta.width();
  if (beta.size() != n) throw Error(ErrorKind::InvalidArgument, "embedding does not match graph size");
  if (root >= n || !beta[root].is_zero()) throw Error(ErrorKind::InvalidArgument, "root must be labeled 0^h");

  MarkState state;
  state.levels.resize(h + 2);
  std::vector<std::uint32_t> weight(n);
  for (VertexId v = 0; v < n; ++v) {
    weight[v] = static_cast<std::uint32_t>(beta[v].weight());
    state.levels[weight[v]].push_back(v);
  }
  state.q.assign(n, 0);
  for (std::uint32_t i = 1; i < state.levels.size(); ++i) {
    for (auto x : state.levels[i])
      mark_vertex(
          g, x, i, [&](VertexId y) { return weight[y]; }, [&](VertexId y) -> std::uint32_t& { return state.q[y]; });
  }
  for (auto& q : state.q)
    if (q & kCoveredBit) q = 0;
  return state;
}

Word minimal_shift(const Embedding& beta, const MarkState& marks) {
  Word s = Word::ones(beta.width());
  for (VertexId v = 0; v < marks.q.size(); ++v)
    if (marks.q[v] != 0) s &= beta[v];
  return s;
}

ProperEmbedding proper_embed(const Graph& g) {
  const auto n = g.vertex_count();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "empty graph");
  const auto flat = isometric_flat<true>(g, max_degree_vertex(g).vertex);
  const auto& beta = flat.labels;
  const auto h = beta.width;
  const auto stride = beta.stride;

  ProperEmbedding out;
  out.root = flat.root;
  if (n == 1) {
    // nothing gets marked; the lone vertex is minimal
    out.shift = Word::zeros(h);
    out.labels = flat.to_embedding();
    return out;
  }

  std::vector<Block> shift(stride);
  {
    const Word ones = Word::ones(h);
    for (std::size_t k = 0; k < stride; ++k) shift[k] = ones.block(k);
  }
  for (VertexId v = 0; v < n; ++v) {
    if (flat.state[v].q == 0) continue;
    out.marked.push_back(v);
    const Block* label = flat.label(v);
    for (std::size_t k = 0; k < stride; ++k) shift[k] &= label[k];
  }
  out.shift = Word::from_blocks(h, shift.data());

  bool found = false;
  for (std::size_t p = 0; p < n && !found; ++p) {
    if (std::equal(shift.begin(), shift.end(), beta.at(p))) {
      out.minimal = flat.order[p];
      found = true;
    }
  }
  if (!found) throw Error(ErrorKind::NotDaisy, "shift word " + out.shift.to_string() + " is not a vertex label");

  out.labels = flat.to_embedding(shift.data());
  return out;
}

}  // namespace daisy
