#ifndef KAPPA_GRAPH_HPP
#define KAPPA_GRAPH_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "kappa/error.hpp"

namespace kappa {

using VertexId = std::uint32_t;
using ClusterId = std::uint32_t;

// Undirected edge, canonical orientation u < v.
struct Edge {
  VertexId u;
  VertexId v;
};

inline bool operator==(Edge a, Edge b) { return a.u == b.u && a.v == b.v; }

// Immutable simple undirected graph. No self-loops, no multi-edges, optional
// strictly positive edge weights. Stored as an edge list; adjacency is built
// on demand (see Adjacency) so that very large edge sets stay at O(m) memory.
class Graph {
 public:
  Graph() = default;

  // Validates endpoints, self-loops, duplicates and weight signs.
  // `weights` must be empty (unweighted) or have one entry per edge.
  static Graph build(std::uint32_t vertex_count, std::span<const Edge> edges,
                     std::span<const double> weights = {});

  // For generators whose construction guarantees canonical unique edges.
  static Graph unchecked(std::uint32_t vertex_count, std::vector<Edge>&& edges,
                         std::vector<double>&& weights, bool weighted);

  std::uint32_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool weighted() const { return weighted_; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const double> weights() const { return weights_; }
  double weight(std::size_t i) const { return weighted_ ? weights_[i] : 1.0; }

  // Sum of edge weights; equals edge_count() for unweighted graphs.
  double total_weight() const;

 private:
  std::uint32_t vertex_count_ = 0;
  bool weighted_ = false;
  std::vector<Edge> edges_;
  std::vector<double> weights_;
};

// Per-vertex sorted neighbor lists in CSR form, built from a Graph when O(deg)
// iteration is needed.
struct Adjacency {
  std::vector<std::size_t> offsets;
  std::vector<VertexId> neighbors;

  static Adjacency build(const Graph& g);
  std::span<const VertexId> of(VertexId v) const {
    return {neighbors.data() + offsets[v], neighbors.data() + offsets[v + 1]};
  }
};

// Edge-complement of an unweighted graph: (u,v) present iff absent in `g`.
Graph complement(const Graph& g);

// Multiplies every weight by alpha > 0. An unweighted input becomes a
// weighted graph with all weights equal to alpha. Topology unchanged.
Graph scale_weights(const Graph& g, double alpha);

// Assignment of every vertex to one of cluster_count clusters. Every cluster
// id in [0, cluster_count) must be used by at least one vertex.
class Clustering {
 public:
  Clustering() = default;

  // cluster_count is taken as max(label)+1; throws if some id is unused.
  static Clustering from_labels(std::vector<ClusterId> labels);
  static Clustering from_labels(std::vector<ClusterId> labels, std::uint32_t cluster_count);

  std::uint32_t vertex_count() const { return static_cast<std::uint32_t>(labels_.size()); }
  std::uint32_t cluster_count() const { return cluster_count_; }
  std::span<const ClusterId> labels() const { return labels_; }
  ClusterId label(VertexId v) const { return labels_[v]; }
  std::span<const std::uint32_t> sizes() const { return sizes_; }
  std::uint32_t size_of(ClusterId c) const { return sizes_[c]; }

 private:
  std::vector<ClusterId> labels_;
  std::vector<std::uint32_t> sizes_;
  std::uint32_t cluster_count_ = 0;
};

// Relabels clusters through a bijection on [0, cluster_count).
Clustering permute_labels(const Clustering& c, std::span<const ClusterId> permutation);

}  // namespace kappa

#endif
