#include "kappa/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace kappa {

namespace {

std::string edge_str(VertexId u, VertexId v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph Graph::build(std::uint32_t vertex_count, std::span<const Edge> edges,
                   std::span<const double> weights) {
  const bool weighted = !weights.empty();
  if (weighted && weights.size() != edges.size())
    throw Error(Errc::non_positive_weight, "weight list must match edge list length");

  std::vector<Edge> canon(edges.begin(), edges.end());
  for (std::size_t i = 0; i < canon.size(); ++i) {
    Edge& e = canon[i];
    if (e.u == e.v)
      throw Error(Errc::self_loop, "self-loop at edge " + edge_str(e.u, e.v));
    if (e.u >= vertex_count || e.v >= vertex_count)
      throw Error(Errc::endpoint_out_of_range,
                  "edge " + edge_str(e.u, e.v) + " exceeds vertex count " +
                      std::to_string(vertex_count));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (weighted) {
      double w = weights[i];
      if (!(w > 0.0) || !std::isfinite(w))
        throw Error(Errc::non_positive_weight,
                    "edge " + edge_str(e.u, e.v) + " has non-positive weight " +
                        std::to_string(weights[i]));
    }
  }

  std::vector<std::size_t> order(canon.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return canon[a].u != canon[b].u ? canon[a].u < canon[b].u : canon[a].v < canon[b].v;
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (canon[order[i]] == canon[order[i - 1]])
      throw Error(Errc::duplicate_edge,
                  "duplicate edge " + edge_str(canon[order[i]].u, canon[order[i]].v));
  }

  Graph g;
  g.vertex_count_ = vertex_count;
  g.weighted_ = weighted;
  g.edges_.reserve(canon.size());
  if (weighted) g.weights_.reserve(canon.size());
  for (std::size_t idx : order) {
    g.edges_.push_back(canon[idx]);
    if (weighted) g.weights_.push_back(weights[idx]);
  }
  return g;
}

Graph Graph::unchecked(std::uint32_t vertex_count, std::vector<Edge>&& edges,
                       std::vector<double>&& weights, bool weighted) {
  Graph g;
  g.vertex_count_ = vertex_count;
  g.weighted_ = weighted;
  g.edges_ = std::move(edges);
  g.weights_ = std::move(weights);
  return g;
}

double Graph::total_weight() const {
  if (!weighted_) return static_cast<double>(edges_.size());
  double sum = 0.0, comp = 0.0;
  for (double w : weights_) {  // Kahan; weight sums feed densities directly
    double y = w - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

Adjacency Adjacency::build(const Graph& g) {
  Adjacency a;
  a.offsets.assign(g.vertex_count() + 1, 0);
  for (Edge e : g.edges()) {
    ++a.offsets[e.u + 1];
    ++a.offsets[e.v + 1];
  }
  for (std::size_t i = 1; i < a.offsets.size(); ++i) a.offsets[i] += a.offsets[i - 1];
  a.neighbors.resize(2 * g.edge_count());
  std::vector<std::size_t> cursor(a.offsets.begin(), a.offsets.end() - 1);
  for (Edge e : g.edges()) {
    a.neighbors[cursor[e.u]++] = e.v;
    a.neighbors[cursor[e.v]++] = e.u;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto s = a.neighbors.begin();
    std::sort(s + static_cast<std::ptrdiff_t>(a.offsets[v]),
              s + static_cast<std::ptrdiff_t>(a.offsets[v + 1]));
  }
  return a;
}

Graph complement(const Graph& g) {
  if (g.weighted())
    throw Error(Errc::weighted_unsupported, "complement of a weighted graph is undefined");
  const std::uint32_t n = g.vertex_count();
  Adjacency adj = Adjacency::build(g);
  std::vector<Edge> out;
  const std::uint64_t all_pairs = n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;
  out.reserve(static_cast<std::size_t>(all_pairs - g.edge_count()));
  std::vector<bool> row(n, false);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId w : adj.of(u)) row[w] = true;
    for (VertexId v = u + 1; v < n; ++v)
      if (!row[v]) out.push_back({u, v});
    for (VertexId w : adj.of(u)) row[w] = false;
  }
  return Graph::unchecked(n, std::move(out), {}, false);
}

Graph scale_weights(const Graph& g, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw Error(Errc::non_positive_alpha, "scale factor must be positive, got " +
                                              std::to_string(alpha));
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::vector<double> weights(g.edge_count());
  for (std::size_t i = 0; i < weights.size(); ++i) weights[i] = g.weight(i) * alpha;
  return Graph::unchecked(g.vertex_count(), std::move(edges), std::move(weights), true);
}

Clustering Clustering::from_labels(std::vector<ClusterId> labels) {
  ClusterId max_label = 0;
  for (ClusterId c : labels) max_label = std::max(max_label, c);
  const std::uint32_t count = labels.empty() ? 0 : max_label + 1;
  return from_labels(std::move(labels), count);
}

Clustering Clustering::from_labels(std::vector<ClusterId> labels, std::uint32_t cluster_count) {
  if (cluster_count == 0 || cluster_count > labels.size())
    throw Error(Errc::invalid_cluster_count,
                "cluster count " + std::to_string(cluster_count) + " invalid for " +
                    std::to_string(labels.size()) + " vertices");
  std::vector<std::uint32_t> sizes(cluster_count, 0);
  for (ClusterId c : labels) {
    if (c >= cluster_count)
      throw Error(Errc::invalid_labels,
                  "label " + std::to_string(c) + " outside [0," + std::to_string(cluster_count) + ")");
    ++sizes[c];
  }
  for (ClusterId c = 0; c < cluster_count; ++c)
    if (sizes[c] == 0)
      throw Error(Errc::invalid_labels, "cluster " + std::to_string(c) + " is empty");

  Clustering out;
  out.labels_ = std::move(labels);
  out.sizes_ = std::move(sizes);
  out.cluster_count_ = cluster_count;
  return out;
}

Clustering permute_labels(const Clustering& c, std::span<const ClusterId> permutation) {
  const std::uint32_t l = c.cluster_count();
  if (permutation.size() != l)
    throw Error(Errc::not_a_bijection, "permutation length does not match cluster count");
  std::vector<bool> seen(l, false);
  for (ClusterId p : permutation) {
    if (p >= l || seen[p])
      throw Error(Errc::not_a_bijection, "mapping is not a bijection on cluster ids");
    seen[p] = true;
  }
  std::vector<ClusterId> labels(c.labels().begin(), c.labels().end());
  for (ClusterId& lab : labels) lab = permutation[lab];
  return Clustering::from_labels(std::move(labels), l);
}

}  // namespace kappa
