#pragma once

// Placements versus unattacked targets. A k-placement A and a u-set B of
// targets are compatible when no placement in A attacks a target in B; such
// pairs are exactly the standard monomials of degree (k, u) for the ideal
// generated by all squares x_p^2, y_t^2 and the products x_p*y_t over
// attacking pairs.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hilbcount/algebra.hpp"
#include "hilbcount/hilbert.hpp"

namespace hilbcount {

/// Bipartite "forbidden" relation between P placement vertices and T target
/// vertices, stored as bit rows and bit columns.
class IncompatibilityGraph {
 public:
  IncompatibilityGraph(std::size_t placements, std::size_t targets);

  /// Undirected graph on `vertices` nodes: placement i forbids target j and
  /// placement j forbids target i for every edge {i, j}.
  static IncompatibilityGraph from_edges(std::size_t vertices,
                                         const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  void forbid(std::size_t p, std::size_t t);
  bool forbidden(std::size_t p, std::size_t t) const;

  std::size_t placement_count() const { return placements_; }
  std::size_t target_count() const { return targets_; }
  std::size_t edge_count() const;
  /// Targets forbidden by placement p.
  std::span<const std::uint64_t> row(std::size_t p) const;
  /// Placements forbidding target t.
  std::span<const std::uint64_t> column(std::size_t t) const;
  std::size_t row_words() const { return row_words_; }
  std::size_t column_words() const { return col_words_; }
  bool rows_match_columns() const;

  /// Permutations acting on placements and targets alike that preserve the
  /// relation. Empty means only the identity is known.
  const std::vector<std::vector<std::size_t>>& symmetries() const { return symmetries_; }
  /// Keeps only the candidates that really are automorphisms; returns how many.
  std::size_t set_symmetries(const std::vector<std::vector<std::size_t>>& candidates);

 private:
  std::size_t placements_;
  std::size_t targets_;
  std::size_t row_words_;
  std::size_t col_words_;
  std::vector<std::uint64_t> rows_;
  std::vector<std::uint64_t> cols_;
  std::vector<std::vector<std::size_t>> symmetries_;
};

enum class Piece { Queen, Rook, Bishop, Knight, King, Custom };
enum class OwnSquareMode { PaperLiteral, ExcludeOccupied };

struct MoveSet {
  std::vector<std::pair<int, int>> moves;
  bool sliding = false;
};

struct BoardSpec {
  std::size_t n = 8;
  Piece piece = Piece::Queen;
  MoveSet custom;  // used when piece == Custom
  OwnSquareMode mode = OwnSquareMode::PaperLiteral;
};

MoveSet standard_moves(Piece piece);
Piece parse_piece(std::string_view name);
std::string to_string(Piece piece);
OwnSquareMode parse_own_square_mode(std::string_view name);
std::string to_string(OwnSquareMode mode);

/// Square (row, col), both 0-based, has index row * n + col. Sliding pieces
/// attack along full rays: nothing blocks, matching the pairwise generators.
/// Under ExcludeOccupied every square additionally forbids itself. The
/// relation-preserving board symmetries are attached.
IncompatibilityGraph attack_graph(const BoardSpec& spec);

struct EnumerationOptions {
  /// Work cap in search nodes; 0 is unlimited.
  std::uint64_t max_nodes = 0;
  bool use_symmetry = true;
  /// 0 picks the hardware concurrency.
  unsigned workers = 0;
};

/// c_{k,s}: number of k-placements leaving exactly s targets unattacked,
/// for every s >= min_free (smaller s are not enumerated).
struct FreeProfile {
  std::size_t k = 0;
  std::size_t min_free = 0;
  std::map<std::size_t, BigInt> counts;
  std::uint64_t nodes = 0;

  std::size_t max_key() const { return counts.empty() ? 0 : counts.rbegin()->first; }
};

FreeProfile free_profile(const IncompatibilityGraph& g, std::size_t k, std::size_t min_free = 0,
                         const EnumerationOptions& options = {});

struct MaxFree {
  std::size_t mu = 0;
  BigInt count;  // placements achieving mu
};

/// Branch and bound for the largest achievable free count and its multiplicity.
/// Throws ContractError when k exceeds the number of placements.
MaxFree max_free(const IncompatibilityGraph& g, std::size_t k, const EnumerationOptions& options = {});
std::size_t mu(const IncompatibilityGraph& g, std::size_t k, const EnumerationOptions& options = {});

/// Table indexed by k in [kmin, kmax] and u in [umin, umax].
class CountTable {
 public:
  CountTable() = default;
  CountTable(std::size_t kmin, std::size_t kmax, std::size_t umin, std::size_t umax);

  std::size_t kmin() const { return kmin_; }
  std::size_t kmax() const { return kmax_; }
  std::size_t umin() const { return umin_; }
  std::size_t umax() const { return umax_; }
  bool contains(std::size_t k, std::size_t u) const;
  const BigInt& at(std::size_t k, std::size_t u) const;
  BigInt& at(std::size_t k, std::size_t u);

  bool operator==(const CountTable&) const = default;

 private:
  std::size_t kmin_ = 0, kmax_ = 0, umin_ = 0, umax_ = 0;
  std::vector<BigInt> cells_;
};

/// HF(k, u) for k in [kmin, kmax] and every u >= umin with a nonzero value,
/// by enumerating target sets and counting compatible placements.
CountTable hf_table(const IncompatibilityGraph& g, std::size_t kmin, std::size_t kmax, std::size_t umin = 0,
                    const EnumerationOptions& options = {});
BigInt hf_bigraded(const IncompatibilityGraph& g, std::size_t k, std::size_t u,
                   const EnumerationOptions& options = {});

/// Phi(k, u) from HF by reverse induction on u:
/// Phi(k, u) = HF(k, u) - sum_{v > u} C(v, u) Phi(k, v).
CountTable invert_hf(const CountTable& hf);
/// HF(k, u) = sum_s C(s, u) c_{k,s}.
BigInt aggregate_profile(const FreeProfile& profile, std::size_t u);

struct PhiResult {
  CountTable phi;
  CountTable hf;
  /// mu(k) for each k in range (index k - kmin).
  std::vector<std::size_t> mu;
  std::vector<FreeProfile> profiles;
};

/// Phi for k in [kmin, kmax], u >= umin, computed from free profiles and
/// independently by inverting the HF table. Throws SoundnessError when the
/// two disagree, or when a complete row does not sum to C(P, k).
PhiResult phi_table(const IncompatibilityGraph& g, std::size_t kmin, std::size_t kmax, std::size_t umin = 0,
                    const EnumerationOptions& options = {});

/// Bigraded Hilbert series of the board ideal over x1..xP, y1..yT.
MonomialIdeal board_ideal(const IncompatibilityGraph& g);
HilbertSeriesRational hilbert_route(const IncompatibilityGraph& g, const HilbertOptions& options = {});

BigInt binomial(std::size_t n, std::size_t k);

}  // namespace hilbcount
