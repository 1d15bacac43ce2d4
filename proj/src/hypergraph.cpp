#include "amorph/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "amorph/errors.hpp"

namespace amorph {

const char* side_name(Side side) { return side == Side::Relations ? "relations" : "idempotents"; }

UniformHypergraph::UniformHypergraph(int k, int d, Side side) : k_(k), d_(d), side_(side) {
  if (k < 2) throw std::invalid_argument("uniformity must be at least 2");
  if (d < 1) throw std::invalid_argument("vertex count must be positive");
}

void UniformHypergraph::add_edge(IndexSet edge) {
  std::sort(edge.begin(), edge.end());
  if (static_cast<int>(edge.size()) != k_) throw std::invalid_argument("edge size differs from k");
  if (std::adjacent_find(edge.begin(), edge.end()) != edge.end()) throw std::invalid_argument("repeated vertex");
  if (edge.front() < 1 || edge.back() > d_) throw std::invalid_argument("vertex out of range");
  edges_.insert(std::move(edge));
}

bool UniformHypergraph::has_edge(IndexSet edge) const {
  std::sort(edge.begin(), edge.end());
  return edges_.count(edge) > 0;
}

bool UniformHypergraph::is_complete() const { return edges_.size() == k_subsets(d_, k_).size(); }

UniformHypergraph build_fusing_hypergraph(const AssociationScheme& scheme, const SpectralData& spec, int k, Side side,
                                          const HypergraphOptions& options) {
  const int d = scheme.d();
  if (k != 2 && k != 3) throw std::invalid_argument("uniformity must be 2 or 3");
  if (d < k) throw PreconditionFailed("need d >= k");
  UniformHypergraph h(k, d, side);
  if (side == Side::Relations) {
    for (auto& t : enumerate_fusing_tuples(scheme, spec, k, options.fusion)) h.add_edge(std::move(t));
    return h;
  }
  const bool exact = scheme.v() <= options.fusion.exact_check_max_v;
  for_each_partition(
      d,
      [&](const ClassPartition& pi) {
        std::optional<ClassPartition> rho;
        if (exact) {
          auto direct = fuse_direct(scheme, spec, pi);
          if (direct) rho = direct.outcome->rho;
        } else {
          auto bm = bm_check(spec, pi);
          if (bm.fuses) rho = bm.rho;
        }
        if (!rho) return true;
        auto merged = rho->nontrivial_blocks();
        if (merged.size() == 1 && static_cast<int>(merged[0].size()) == k) h.add_edge(merged[0]);
        return true;
      },
      options.enumeration_limit);
  return h;
}

std::vector<IndexSet> sunflower_cores(const UniformHypergraph& h) {
  if (h.k() != 3) throw WrongUniformity("sunflower cores need a 3-uniform hypergraph");
  const int d = h.num_vertices();
  std::vector<IndexSet> cores;
  if (d < 3) return cores;
  for (const auto& core : k_subsets(d, 2)) {
    bool all_petals = true;
    for (int w = 1; w <= d && all_petals; ++w) {
      if (w == core[0] || w == core[1]) continue;
      all_petals = h.has_edge({core[0], core[1], w});
    }
    if (all_petals) cores.push_back(core);
  }
  return cores;
}

GraphShape graph_shape(const UniformHypergraph& h) {
  if (h.k() != 2) throw WrongUniformity("graph shape needs a 2-uniform hypergraph");
  const int d = h.num_vertices();
  std::vector<std::vector<int>> adjacent(d + 1);
  for (const auto& e : h.edges()) {
    adjacent[e[0]].push_back(e[1]);
    adjacent[e[1]].push_back(e[0]);
  }
  std::vector<char> seen(d + 1, 0);
  std::vector<int> stack{1};
  seen[1] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adjacent[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  GraphShape shape;
  shape.connected = reached == d;
  bool degrees_ok = std::all_of(adjacent.begin() + 1, adjacent.end(), [](const auto& a) { return a.size() <= 2; });
  shape.is_path = shape.connected && static_cast<int>(h.num_edges()) == d - 1 && degrees_ok;
  return shape;
}

bool matches_single_sunflower_pattern(const UniformHypergraph& h) {
  if (h.k() != 3) return false;
  const auto cores = sunflower_cores(h);
  if (cores.size() != 1) return false;
  const IndexSet& core = cores[0];
  const int d = h.num_vertices();
  IndexSet rest;
  for (int x = 1; x <= d; ++x) {
    if (x != core[0] && x != core[1]) rest.push_back(x);
  }
  UniformHypergraph expected(3, d, h.side());
  for (int w : rest) expected.add_edge({core[0], core[1], w});
  for (const auto& t : k_subsets(static_cast<int>(rest.size()), 3)) {
    expected.add_edge({rest[t[0] - 1], rest[t[1] - 1], rest[t[2] - 1]});
  }
  return expected.edges() == h.edges();
}

void export_dot(const UniformHypergraph& h, std::ostream& out) {
  if (h.k() != 2) throw WrongUniformity("DOT export needs a 2-uniform hypergraph");
  out << "graph fusing_" << side_name(h.side()) << " {\n";
  for (int x = 1; x <= h.num_vertices(); ++x) out << "  " << x << " [label=\"" << x << "\"];\n";
  for (const auto& e : h.edges()) out << "  " << e[0] << " -- " << e[1] << ";\n";
  out << "}\n";
}

void export_edge_list(const UniformHypergraph& h, std::ostream& out) {
  for (const auto& e : h.edges()) {
    for (std::size_t k = 0; k < e.size(); ++k) out << (k ? " " : "") << e[k];
    out << '\n';
  }
}

}  // namespace amorph
