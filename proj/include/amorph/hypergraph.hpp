#pragma once

#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "amorph/fusion.hpp"
#include "amorph/partition.hpp"

namespace amorph {

enum class Side { Relations, Idempotents };

const char* side_name(Side side);

/// k-uniform hypergraph on vertices {1..d}; edges are sorted index tuples.
class UniformHypergraph {
 public:
  UniformHypergraph(int k, int d, Side side = Side::Relations);

  int k() const { return k_; }
  int num_vertices() const { return d_; }
  Side side() const { return side_; }
  const std::set<IndexSet>& edges() const { return edges_; }
  std::size_t num_edges() const { return edges_.size(); }

  /// Adds an edge after sorting; throws std::invalid_argument on a bad edge.
  void add_edge(IndexSet edge);
  bool has_edge(IndexSet edge) const;
  bool is_complete() const;

  friend bool operator==(const UniformHypergraph& a, const UniformHypergraph& b) {
    return a.k_ == b.k_ && a.d_ == b.d_ && a.edges_ == b.edges_;
  }

 private:
  int k_;
  int d_;
  Side side_;
  std::set<IndexSet> edges_;
};

struct HypergraphOptions {
  FusionOptions fusion{};
  int enumeration_limit = kDefaultEnumerationLimit;
};

/// Fusing-relations (edges = fusing k-tuples) or fusing-idempotents
/// k-hypergraph (edge J iff some fusion has a dual partition whose only
/// nontrivial block is J). The idempotent side exhausts every partition and
/// throws LimitExceeded above the enumeration limit.
UniformHypergraph build_fusing_hypergraph(const AssociationScheme& scheme, const SpectralData& spec, int k, Side side,
                                          const HypergraphOptions& options = {});

/// Every 2-set C with C + {w} an edge for all w outside C; each such C is the
/// core of a 3-sunflower subhypergraph. Throws WrongUniformity unless k = 3.
std::vector<IndexSet> sunflower_cores(const UniformHypergraph& h);

struct GraphShape {
  bool connected = false;
  bool is_path = false;
};

/// Throws WrongUniformity unless k = 2.
GraphShape graph_shape(const UniformHypergraph& h);

/// True iff h is the single-sunflower pattern: some core C with every
/// C + {w} present, plus all triples avoiding C, and nothing else.
bool matches_single_sunflower_pattern(const UniformHypergraph& h);

/// DOT graph for k = 2, vertices labelled by index. Throws WrongUniformity.
void export_dot(const UniformHypergraph& h, std::ostream& out);
/// One sorted tuple per line, space separated.
void export_edge_list(const UniformHypergraph& h, std::ostream& out);

}  // namespace amorph
