#ifndef KAPPA_SYNTH_HPP
#define KAPPA_SYNTH_HPP

#include <cstdint>
#include <vector>

#include "kappa/graph.hpp"
#include "kappa/rng.hpp"

namespace kappa {

struct GraphWithClustering {
  Graph graph;
  Clustering clustering;
};

// Planted partition: clusters occupy contiguous vertex ranges; same-cluster
// pairs get an edge with probability p_intra, cross-cluster pairs with
// p_inter. In weighted mode every generated edge carries its generating
// probability as weight. Deterministic for a fixed spec.
struct PlantedPartitionSpec {
  std::vector<std::uint32_t> cluster_sizes;
  double p_intra = 0.0;
  double p_inter = 0.0;
  bool weighted = false;
  std::uint64_t seed = 0;
};

GraphWithClustering gen_planted_partition(const PlantedPartitionSpec& spec);

// G(n, p): every unordered pair independently with probability p.
Graph gen_erdos_renyi(std::uint32_t n, double p, std::uint64_t seed);

// Ring of num_cliques cliques of clique_size vertices. Each clique has one
// uniformly chosen internal edge removed and replaced by an edge from one of
// its endpoints to a uniformly chosen vertex of the next clique. Returns the
// clique labeling.
GraphWithClustering gen_connected_caveman(std::uint32_t num_cliques, std::uint32_t clique_size,
                                          std::uint64_t seed);

// Uniform iid labels conditioned on all cluster_count clusters being
// nonempty (labelings with empty clusters are redrawn).
Clustering random_clustering(std::uint32_t n, std::uint32_t cluster_count, std::uint64_t seed);

// Same, driving an external stream; used by the null simulation so each run
// owns its substream.
std::vector<ClusterId> random_labels(std::uint32_t n, std::uint32_t cluster_count, Rng& rng);

// Cluster sizes drawn uniformly from [size_min, size_max].
std::vector<std::uint32_t> uniform_cluster_sizes(std::uint32_t clusters, std::uint32_t size_min,
                                                 std::uint32_t size_max, Rng& rng);

}  // namespace kappa

#endif
