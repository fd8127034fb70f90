#include "hilbcount/boards.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cassert>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "hilbcount/errors.hpp"

namespace hilbcount {

// ---------------------------------------------------------------------------
// IncompatibilityGraph

namespace {

std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

}  // namespace

IncompatibilityGraph::IncompatibilityGraph(std::size_t placements, std::size_t targets)
    : placements_(placements),
      targets_(targets),
      row_words_(words_for(targets)),
      col_words_(words_for(placements)),
      rows_(placements * row_words_, 0),
      cols_(targets * col_words_, 0) {}

IncompatibilityGraph IncompatibilityGraph::from_edges(
    std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  IncompatibilityGraph g(vertices, vertices);
  for (auto [i, j] : edges) {
    if (i >= vertices || j >= vertices)
      throw InputError("edge (" + std::to_string(i) + ", " + std::to_string(j) + ") outside " +
                       std::to_string(vertices) + " vertices");
    g.forbid(i, j);
    g.forbid(j, i);
  }
  return g;
}

void IncompatibilityGraph::forbid(std::size_t p, std::size_t t) {
  if (p >= placements_ || t >= targets_) throw ContractError("forbid: vertex out of range");
  rows_[p * row_words_ + t / 64] |= std::uint64_t{1} << (t % 64);
  cols_[t * col_words_ + p / 64] |= std::uint64_t{1} << (p % 64);
}

bool IncompatibilityGraph::forbidden(std::size_t p, std::size_t t) const {
  return (rows_[p * row_words_ + t / 64] >> (t % 64)) & 1u;
}

std::size_t IncompatibilityGraph::edge_count() const {
  std::size_t n = 0;
  for (auto w : rows_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::span<const std::uint64_t> IncompatibilityGraph::row(std::size_t p) const {
  return {rows_.data() + p * row_words_, row_words_};
}

std::span<const std::uint64_t> IncompatibilityGraph::column(std::size_t t) const {
  return {cols_.data() + t * col_words_, col_words_};
}

bool IncompatibilityGraph::rows_match_columns() const {
  for (std::size_t p = 0; p < placements_; ++p)
    for (std::size_t t = 0; t < targets_; ++t)
      if (forbidden(p, t) != bool((cols_[t * col_words_ + p / 64] >> (p % 64)) & 1u)) return false;
  return true;
}

std::size_t IncompatibilityGraph::set_symmetries(const std::vector<std::vector<std::size_t>>& candidates) {
  symmetries_.clear();
  if (placements_ != targets_) return 0;
  for (const auto& perm : candidates) {
    if (perm.size() != placements_) continue;
    if (std::find(symmetries_.begin(), symmetries_.end(), perm) != symmetries_.end()) continue;
    bool ok = true;
    for (std::size_t p = 0; p < placements_ && ok; ++p)
      for (std::size_t t = 0; t < targets_ && ok; ++t) ok = forbidden(p, t) == forbidden(perm[p], perm[t]);
    if (ok) symmetries_.push_back(perm);
  }
  return symmetries_.size();
}

// ---------------------------------------------------------------------------
// Boards

MoveSet standard_moves(Piece piece) {
  const std::vector<std::pair<int, int>> orthogonal{{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  const std::vector<std::pair<int, int>> diagonal{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  auto both = orthogonal;
  both.insert(both.end(), diagonal.begin(), diagonal.end());
  switch (piece) {
    case Piece::Queen: return {both, true};
    case Piece::Rook: return {orthogonal, true};
    case Piece::Bishop: return {diagonal, true};
    case Piece::King: return {both, false};
    case Piece::Knight:
      return {{{1, 2}, {2, 1}, {-1, 2}, {-2, 1}, {1, -2}, {2, -1}, {-1, -2}, {-2, -1}}, false};
    case Piece::Custom: break;
  }
  throw ContractError("custom pieces carry their own move set");
}

Piece parse_piece(std::string_view name) {
  if (name == "queen") return Piece::Queen;
  if (name == "rook") return Piece::Rook;
  if (name == "bishop") return Piece::Bishop;
  if (name == "knight") return Piece::Knight;
  if (name == "king") return Piece::King;
  throw InputError("unknown piece '" + std::string(name) + "'");
}

std::string to_string(Piece piece) {
  switch (piece) {
    case Piece::Queen: return "queen";
    case Piece::Rook: return "rook";
    case Piece::Bishop: return "bishop";
    case Piece::Knight: return "knight";
    case Piece::King: return "king";
    case Piece::Custom: return "custom";
  }
  return "?";
}

OwnSquareMode parse_own_square_mode(std::string_view name) {
  if (name == "paper-literal" || name == "literal") return OwnSquareMode::PaperLiteral;
  if (name == "exclude-occupied") return OwnSquareMode::ExcludeOccupied;
  throw InputError("unknown own-square mode '" + std::string(name) + "'");
}

std::string to_string(OwnSquareMode mode) {
  return mode == OwnSquareMode::PaperLiteral ? "paper-literal" : "exclude-occupied";
}

namespace {

std::vector<std::vector<std::size_t>> dihedral_maps(std::size_t n) {
  std::vector<std::vector<std::size_t>> maps(8, std::vector<std::size_t>(n * n));
  const std::size_t m = n - 1;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t s = r * n + c;
      maps[0][s] = r * n + c;
      maps[1][s] = c * n + (m - r);
      maps[2][s] = (m - r) * n + (m - c);
      maps[3][s] = (m - c) * n + r;
      maps[4][s] = r * n + (m - c);
      maps[5][s] = (m - r) * n + c;
      maps[6][s] = c * n + r;
      maps[7][s] = (m - c) * n + (m - r);
    }
  return maps;
}

}  // namespace

IncompatibilityGraph attack_graph(const BoardSpec& spec) {
  if (spec.n == 0) throw InputError("board side must be at least 1");
  MoveSet moves = spec.piece == Piece::Custom ? spec.custom : standard_moves(spec.piece);
  for (auto [dr, dc] : moves.moves)
    if (dr == 0 && dc == 0) throw InputError("move set contains the null move");

  const auto n = static_cast<long>(spec.n);
  IncompatibilityGraph g(spec.n * spec.n, spec.n * spec.n);
  auto on_board = [n](long r, long c) { return r >= 0 && r < n && c >= 0 && c < n; };
  for (long r = 0; r < n; ++r)
    for (long c = 0; c < n; ++c) {
      const auto from = static_cast<std::size_t>(r * n + c);
      for (auto [dr, dc] : moves.moves) {
        long tr = r + dr, tc = c + dc;
        while (on_board(tr, tc)) {
          g.forbid(from, static_cast<std::size_t>(tr * n + tc));
          if (!moves.sliding) break;
          tr += dr;
          tc += dc;
        }
      }
      if (spec.mode == OwnSquareMode::ExcludeOccupied) g.forbid(from, from);
    }
  g.set_symmetries(dihedral_maps(spec.n));
  return g;
}

// ---------------------------------------------------------------------------
// Subset enumeration
//
// Enumerate subsets S of a set of elements, each carrying a bit mask over a
// universe, and histogram them by (|S|, popcount of the AND of their masks).
// The popcount only shrinks as S grows, which drives the pruning.
//
// With a symmetry group G acting compatibly on elements and universe, the
// elements are grouped into orbits O_1, O_2, ... in a fixed order. A subset
// whose first orbit (in that order) is O_c is counted from each of its m
// members in O_c; those members all see the same statistics as the orbit
// representative r_c, so
//   #{S : first orbit c, m, pc} = |O_c| * #{S containing r_c : ...} / m.
// Only subsets containing r_c and otherwise drawn from orbits >= c are
// enumerated.

namespace {

struct SubsetQuery {
  std::size_t elements = 0;
  std::size_t universe = 0;
  std::vector<std::uint64_t> masks;  // elements * words
  std::size_t words = 0;
  std::vector<std::vector<std::size_t>> group;
  std::size_t min_size = 0;
  std::size_t max_size = 0;
  std::size_t threshold = 0;
  bool maximize = false;
};

struct SubsetCounts {
  std::map<std::pair<std::size_t, std::size_t>, BigInt> counts;  // (size, popcount)
  std::size_t best = 0;
  std::uint64_t nodes = 0;
};

struct OrbitLayout {
  std::vector<std::size_t> order;        // position -> element
  std::vector<std::size_t> class_start;  // per class
  std::vector<std::size_t> class_end;
  std::vector<std::size_t> rep;
};

OrbitLayout layout_orbits(std::size_t elements, const std::vector<std::vector<std::size_t>>& group) {
  std::vector<std::size_t> parent(elements);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& perm : group)
    for (std::size_t e = 0; e < elements; ++e) {
      auto a = find(e), b = find(perm[e]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<std::size_t, std::vector<std::size_t>> orbits;
  for (std::size_t e = 0; e < elements; ++e) orbits[find(e)].push_back(e);
  std::vector<std::vector<std::size_t>> sorted;
  for (auto& [root, members] : orbits) sorted.push_back(std::move(members));
  // Large orbits first keeps the enumerated suffixes short.
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  OrbitLayout out;
  for (const auto& members : sorted) {
    out.class_start.push_back(out.order.size());
    out.rep.push_back(members.front());
    out.order.insert(out.order.end(), members.begin(), members.end());
    out.class_end.push_back(out.order.size());
  }
  return out;
}

template <std::size_t W>
class SubsetEnumerator {
 public:
  using Bits = std::array<std::uint64_t, W>;

  SubsetEnumerator(const SubsetQuery& q, const EnumerationOptions& opt)
      : q_(q), opt_(opt), layout_(layout_orbits(q.elements, opt.use_symmetry ? q.group : decltype(q.group){})) {
    masks_.resize(q.elements);
    for (std::size_t e = 0; e < q.elements; ++e) {
      masks_[e].fill(0);
      for (std::size_t w = 0; w < q.words; ++w) masks_[e][w] = q.masks[e * q.words + w];
    }
    class_of_pos_.resize(q.elements);
    for (std::size_t c = 0; c < layout_.rep.size(); ++c)
      for (std::size_t p = layout_.class_start[c]; p < layout_.class_end[c]; ++p) class_of_pos_[p] = c;
    best_.store(0);
  }

  SubsetCounts run() {
    SubsetCounts out;
    if (q_.min_size == 0 && (q_.universe >= q_.threshold)) {
      out.counts[{0, q_.universe}] += 1;
      out.best = q_.universe;
    }
    if (q_.max_size == 0 || q_.elements == 0) return out;

    // Work items: (class, position of the second element or npos).
    for (std::size_t c = 0; c < layout_.rep.size(); ++c) {
      items_.push_back({c, npos});
      if (q_.max_size >= 2)
        for (std::size_t p = layout_.class_start[c]; p < q_.elements; ++p)
          if (layout_.order[p] != layout_.rep[c]) items_.push_back({c, p});
    }

    unsigned workers = opt_.workers ? opt_.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, items_.size())));
    std::vector<Worker> state(workers);
    if (workers == 1) {
      work(state[0]);
    } else {
      std::vector<std::thread> threads;
      for (unsigned w = 0; w < workers; ++w) threads.emplace_back([this, &state, w] { work(state[w]); });
      for (auto& t : threads) t.join();
    }
    for (auto& w : state) flush(w);
    if (aborted_.load())
      throw BudgetExceeded("enumeration exceeded its budget of " + std::to_string(opt_.max_nodes) + " nodes");

    // Merge per class, then apply the orbit weights.
    std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>, std::uint64_t> merged;
    for (auto& w : state)
      for (auto& [key, vec] : w.hist) {
        auto [c, size, m] = unpack(key);
        for (std::size_t pc = 0; pc < vec.size(); ++pc)
          if (vec[pc]) merged[{c, size, m, pc}] += vec[pc];
      }
    const std::size_t best = best_.load();
    for (const auto& [key, cnt] : merged) {
      auto [c, size, m, pc] = key;
      if (q_.maximize && pc < best) continue;
      BigInt weighted = BigInt(layout_.class_end[c] - layout_.class_start[c]) * cnt;
      if (weighted % m != 0) throw SoundnessError("orbit weighting produced a non-integer count");
      out.counts[{size, pc}] += weighted / m;
    }
    if (q_.maximize) {
      out.best = std::max(out.best, best);
      std::erase_if(out.counts, [&](const auto& kv) { return kv.first.second < out.best; });
    }
    out.nodes = total_nodes_.load();
    return out;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  struct Worker {
    std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> hist;
    std::uint64_t pending_nodes = 0;
  };

  static std::uint64_t pack(std::size_t c, std::size_t size, std::size_t m) {
    return (std::uint64_t{c} << 40) | (std::uint64_t{size} << 20) | m;
  }
  static std::tuple<std::size_t, std::size_t, std::size_t> unpack(std::uint64_t key) {
    return {key >> 40, (key >> 20) & 0xfffff, key & 0xfffff};
  }

  std::uint64_t* slot(Worker& w, std::size_t c, std::size_t size, std::size_t m) {
    auto& v = w.hist[pack(c, size, m)];
    if (v.empty()) v.assign(q_.universe + 1, 0);
    return v.data();
  }

  static std::size_t popcount(const Bits& b) {
    std::size_t n = 0;
    for (auto w : b) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  static Bits and_bits(const Bits& a, const Bits& b) {
    Bits r;
    for (std::size_t i = 0; i < W; ++i) r[i] = a[i] & b[i];
    return r;
  }

  std::size_t threshold() const {
    return q_.maximize ? std::max(q_.threshold, best_.load(std::memory_order_relaxed)) : q_.threshold;
  }

  void note_best(std::size_t pc) {
    std::size_t cur = best_.load(std::memory_order_relaxed);
    while (pc > cur && !best_.compare_exchange_weak(cur, pc, std::memory_order_relaxed)) {
    }
  }

  void flush(Worker& w) {
    if (w.pending_nodes == 0) return;
    auto total = total_nodes_.fetch_add(w.pending_nodes) + w.pending_nodes;
    w.pending_nodes = 0;
    if (opt_.max_nodes && total > opt_.max_nodes) aborted_.store(true);
  }

  void record(Worker& w, std::size_t c, std::size_t size, std::size_t m, std::size_t pc) {
    if (size < q_.min_size || pc < threshold()) return;
    if (q_.maximize) note_best(pc);
    ++slot(w, c, size, m)[pc];
  }

  void work(Worker& w) {
    while (!aborted_.load(std::memory_order_relaxed)) {
      std::size_t i = next_item_.fetch_add(1);
      if (i >= items_.size()) break;
      auto [c, pos2] = items_[i];
      const std::size_t r = layout_.rep[c];
      const Bits& base = masks_[r];
      if (pos2 == npos) {
        record(w, c, 1, 1, popcount(base));
        continue;
      }
      Bits free = and_bits(base, masks_[layout_.order[pos2]]);
      std::size_t pc = popcount(free);
      ++w.pending_nodes;
      if (pc < threshold()) continue;
      std::size_t m = 1 + (pos2 < layout_.class_end[c] ? 1 : 0);
      dfs(w, c, pos2 + 1, 2, m, free, pc);
    }
    flush(w);
  }

  void dfs(Worker& w, std::size_t c, std::size_t next, std::size_t size, std::size_t m, const Bits& free,
           std::size_t pc) {
    record(w, c, size, m, pc);
    if (size == q_.max_size) return;
    if (w.pending_nodes >= (1u << 16)) {
      flush(w);
      if (aborted_.load(std::memory_order_relaxed)) return;
    }
    const std::size_t r = layout_.rep[c];
    const std::size_t end_c = layout_.class_end[c];
    const std::size_t n = q_.elements;

    if (size + 1 == q_.max_size) {
      // Children are leaves: count them without recursing.
      std::uint64_t* in_class = nullptr;
      std::uint64_t* out_class = nullptr;
      for (std::size_t p = next; p < n; ++p) {
        std::size_t e = layout_.order[p];
        if (e == r) continue;
        std::size_t cpc = popcount(and_bits(free, masks_[e]));
        assert(cpc <= pc);
        if (cpc < threshold() || size + 1 < q_.min_size) continue;
        if (q_.maximize) note_best(cpc);
        if (p < end_c) {
          if (!in_class) in_class = slot(w, c, size + 1, m + 1);
          ++in_class[cpc];
        } else {
          if (!out_class) out_class = slot(w, c, size + 1, m);
          ++out_class[cpc];
        }
      }
      w.pending_nodes += n - next;
      return;
    }

    for (std::size_t p = next; p < n; ++p) {
      if (aborted_.load(std::memory_order_relaxed)) return;
      if (size + (n - p) < q_.min_size) break;
      std::size_t e = layout_.order[p];
      if (e == r) continue;
      Bits child = and_bits(free, masks_[e]);
      std::size_t cpc = popcount(child);
      assert(cpc <= pc);
      ++w.pending_nodes;
      if (cpc < threshold()) continue;
      dfs(w, c, p + 1, size + 1, m + (p < end_c ? 1 : 0), child, cpc);
    }
  }

  const SubsetQuery& q_;
  const EnumerationOptions& opt_;
  OrbitLayout layout_;
  std::vector<Bits> masks_;
  std::vector<std::size_t> class_of_pos_;
  std::vector<std::pair<std::size_t, std::size_t>> items_;
  std::atomic<std::size_t> next_item_{0};
  std::atomic<std::size_t> best_{0};
  std::atomic<std::uint64_t> total_nodes_{0};
  std::atomic<bool> aborted_{false};
};

SubsetCounts enumerate_subsets(const SubsetQuery& q, const EnumerationOptions& opt) {
  if (q.words <= 1) return SubsetEnumerator<1>(q, opt).run();
  if (q.words <= 2) return SubsetEnumerator<2>(q, opt).run();
  if (q.words <= 4) return SubsetEnumerator<4>(q, opt).run();
  if (q.words <= 8) return SubsetEnumerator<8>(q, opt).run();
  if (q.words <= 16) return SubsetEnumerator<16>(q, opt).run();
  throw InputError("graphs with more than 1024 targets or placements are not supported");
}

// Placement-side query: element p keeps the targets it does not attack.
SubsetQuery placement_query(const IncompatibilityGraph& g) {
  SubsetQuery q;
  q.elements = g.placement_count();
  q.universe = g.target_count();
  q.words = g.row_words();
  q.masks.resize(q.elements * q.words);
  for (std::size_t p = 0; p < q.elements; ++p) {
    auto row = g.row(p);
    for (std::size_t w = 0; w < q.words; ++w) {
      std::uint64_t valid = (w + 1) * 64 <= q.universe ? ~std::uint64_t{0}
                                                       : (std::uint64_t{1} << (q.universe % 64)) - 1;
      q.masks[p * q.words + w] = ~row[w] & valid;
    }
  }
  q.group = g.symmetries();
  return q;
}

// Target-side query: element t keeps the placements that do not attack it.
SubsetQuery target_query(const IncompatibilityGraph& g) {
  SubsetQuery q;
  q.elements = g.target_count();
  q.universe = g.placement_count();
  q.words = g.column_words();
  q.masks.resize(q.elements * q.words);
  for (std::size_t t = 0; t < q.elements; ++t) {
    auto col = g.column(t);
    for (std::size_t w = 0; w < q.words; ++w) {
      std::uint64_t valid = (w + 1) * 64 <= q.universe ? ~std::uint64_t{0}
                                                       : (std::uint64_t{1} << (q.universe % 64)) - 1;
      q.masks[t * q.words + w] = ~col[w] & valid;
    }
  }
  q.group = g.symmetries();
  return q;
}

}  // namespace

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt c = 1;
  for (std::size_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

FreeProfile free_profile(const IncompatibilityGraph& g, std::size_t k, std::size_t min_free,
                         const EnumerationOptions& options) {
  if (k > g.placement_count())
    throw ContractError("k = " + std::to_string(k) + " exceeds the " + std::to_string(g.placement_count()) +
                        " placements");
  FreeProfile out{k, min_free, {}, 0};
  auto q = placement_query(g);
  q.min_size = q.max_size = k;
  q.threshold = min_free;
  auto counts = enumerate_subsets(q, options);
  for (auto& [key, c] : counts.counts) out.counts[key.second] += c;
  out.nodes = counts.nodes;
  return out;
}

MaxFree max_free(const IncompatibilityGraph& g, std::size_t k, const EnumerationOptions& options) {
  if (k > g.placement_count())
    throw ContractError("k = " + std::to_string(k) + " exceeds the " + std::to_string(g.placement_count()) +
                        " placements");
  auto q = placement_query(g);
  q.min_size = q.max_size = k;
  q.maximize = true;
  auto counts = enumerate_subsets(q, options);
  MaxFree out{counts.best, 0};
  for (auto& [key, c] : counts.counts)
    if (key.second == counts.best) out.count += c;
  return out;
}

std::size_t mu(const IncompatibilityGraph& g, std::size_t k, const EnumerationOptions& options) {
  return max_free(g, k, options).mu;
}

// ---------------------------------------------------------------------------
// Tables

CountTable::CountTable(std::size_t kmin, std::size_t kmax, std::size_t umin, std::size_t umax)
    : kmin_(kmin), kmax_(kmax), umin_(umin), umax_(umax), cells_((kmax - kmin + 1) * (umax - umin + 1)) {
  if (kmax < kmin || umax < umin) throw ContractError("empty count table range");
}

bool CountTable::contains(std::size_t k, std::size_t u) const {
  return !cells_.empty() && k >= kmin_ && k <= kmax_ && u >= umin_ && u <= umax_;
}

const BigInt& CountTable::at(std::size_t k, std::size_t u) const {
  if (!contains(k, u)) throw ContractError("count table index out of range");
  return cells_[(k - kmin_) * (umax_ - umin_ + 1) + (u - umin_)];
}

BigInt& CountTable::at(std::size_t k, std::size_t u) {
  if (!contains(k, u)) throw ContractError("count table index out of range");
  return cells_[(k - kmin_) * (umax_ - umin_ + 1) + (u - umin_)];
}

CountTable hf_table(const IncompatibilityGraph& g, std::size_t kmin, std::size_t kmax, std::size_t umin,
                    const EnumerationOptions& options) {
  if (kmax > g.placement_count() || kmin > kmax) throw ContractError("bad k range for hf_table");
  const std::size_t T = g.target_count();
  // Any target set is compatible with the empty placement, so rows k >= 1
  // can prune on fewer than max(kmin, 1) compatible placements.
  std::map<std::pair<std::size_t, std::size_t>, BigInt> counts;
  if (kmax >= 1) {
    auto q = target_query(g);
    q.min_size = umin;
    q.max_size = T;
    q.threshold = std::max<std::size_t>(kmin, 1);
    counts = enumerate_subsets(q, options).counts;
  }
  std::size_t umax = umin;
  for (const auto& [key, c] : counts) umax = std::max(umax, key.first);
  if (kmin == 0) umax = std::max(umax, T);

  CountTable table(kmin, kmax, umin, umax);
  for (std::size_t k = kmin; k <= kmax; ++k) {
    if (k == 0) {
      for (std::size_t u = umin; u <= umax; ++u) table.at(0, u) = binomial(T, u);
      continue;
    }
    for (const auto& [key, c] : counts) {
      auto [u, compatible] = key;
      if (compatible >= k) table.at(k, u) += c * binomial(compatible, k);
    }
  }
  return table;
}

BigInt hf_bigraded(const IncompatibilityGraph& g, std::size_t k, std::size_t u, const EnumerationOptions& options) {
  if (k > g.placement_count() || u > g.target_count()) return 0;
  if (k == 0) return binomial(g.target_count(), u);
  auto q = target_query(g);
  q.min_size = q.max_size = u;
  q.threshold = k;
  BigInt total = 0;
  for (const auto& [key, c] : enumerate_subsets(q, options).counts) total += c * binomial(key.second, k);
  return total;
}

CountTable invert_hf(const CountTable& hf) {
  CountTable phi(hf.kmin(), hf.kmax(), hf.umin(), hf.umax());
  for (std::size_t k = hf.kmin(); k <= hf.kmax(); ++k) {
    std::size_t top = hf.umax() + 1;
    for (std::size_t u = hf.umax() + 1; u-- > hf.umin();)
      if (hf.at(k, u) != 0) {
        top = u;
        break;
      }
    if (top > hf.umax()) continue;
    for (std::size_t u = top + 1; u-- > hf.umin();) {
      BigInt v = hf.at(k, u);
      for (std::size_t w = u + 1; w <= top; ++w) v -= binomial(w, u) * phi.at(k, w);
      phi.at(k, u) = v;
    }
  }
  return phi;
}

BigInt aggregate_profile(const FreeProfile& profile, std::size_t u) {
  if (u < profile.min_free) throw ContractError("profile truncated above u");
  BigInt total = 0;
  for (const auto& [s, c] : profile.counts) total += binomial(s, u) * c;
  return total;
}

PhiResult phi_table(const IncompatibilityGraph& g, std::size_t kmin, std::size_t kmax, std::size_t umin,
                    const EnumerationOptions& options) {
  PhiResult out;
  out.hf = hf_table(g, kmin, kmax, umin, options);
  CountTable inverted = invert_hf(out.hf);

  std::size_t umax = out.hf.umax();
  for (std::size_t k = kmin; k <= kmax; ++k) {
    out.profiles.push_back(free_profile(g, k, umin, options));
    if (!out.profiles.back().counts.empty()) umax = std::max(umax, out.profiles.back().max_key());
  }
  if (umax != out.hf.umax()) {
    // The profile reached a free count the HF side never saw.
    throw SoundnessError("free profiles reach u = " + std::to_string(umax) + " but HF is zero beyond u = " +
                         std::to_string(out.hf.umax()));
  }

  out.phi = CountTable(kmin, kmax, umin, umax);
  for (std::size_t k = kmin; k <= kmax; ++k) {
    const auto& prof = out.profiles[k - kmin];
    std::size_t mu_profile = 0;
    for (std::size_t u = umin; u <= umax; ++u) {
      auto it = prof.counts.find(u);
      BigInt direct = it == prof.counts.end() ? BigInt(0) : it->second;
      if (direct != inverted.at(k, u))
        throw SoundnessError("Phi(" + std::to_string(k) + "," + std::to_string(u) + "): profile gives " +
                             direct.str() + ", HF inversion gives " + inverted.at(k, u).str());
      out.phi.at(k, u) = direct;
      if (direct != 0) mu_profile = u;
    }
    out.mu.push_back(mu_profile);
    if (umin == 0) {
      BigInt sum = 0;
      for (std::size_t u = 0; u <= umax; ++u) sum += out.phi.at(k, u);
      if (sum != binomial(g.placement_count(), k))
        throw SoundnessError("row k = " + std::to_string(k) + " sums to " + sum.str() + ", expected C(" +
                             std::to_string(g.placement_count()) + "," + std::to_string(k) + ")");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ideal route

MonomialIdeal board_ideal(const IncompatibilityGraph& g) {
  const std::size_t P = g.placement_count();
  const std::size_t T = g.target_count();
  VariableSet vars = VariableSet::indexed("x", P).concat(VariableSet::indexed("y", T));
  const std::size_t n = P + T;
  std::vector<Monomial> gens;
  for (std::size_t v = 0; v < n; ++v) gens.push_back(Monomial::variable(n, v, 2));
  for (std::size_t p = 0; p < P; ++p)
    for (std::size_t t = 0; t < T; ++t)
      if (g.forbidden(p, t)) {
        std::vector<Exponent> e(n, 0);
        e[p] = 1;
        e[P + t] = 1;
        gens.emplace_back(std::move(e));
      }
  return MonomialIdeal(std::move(vars), std::move(gens));
}

HilbertSeriesRational hilbert_route(const IncompatibilityGraph& g, const HilbertOptions& options) {
  auto ideal = board_ideal(g);
  std::vector<MultiDegree> degrees(g.placement_count(), MultiDegree({1, 0}));
  degrees.insert(degrees.end(), g.target_count(), MultiDegree({0, 1}));
  return hilbert_numerator(ideal, Grading(2, std::move(degrees)), options);
}

}  // namespace hilbcount
