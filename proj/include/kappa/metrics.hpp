#ifndef KAPPA_METRICS_HPP
#define KAPPA_METRICS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kappa/graph.hpp"

namespace kappa {

// Compensated accumulator; keeps cluster/pair sums deterministic and accurate
// when tens of millions of terms are folded in.
class KahanSum {
 public:
  void add(double x) {
    double y = x - comp_;
    double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Density summary of a clustered graph. Unweighted graphs: all densities lie
// in [0,1]. Weighted graphs: densities are nonnegative weight means.
// inter_per_pair holds only pairs with at least one edge; absent pairs have
// density zero but still count toward mean_inter's denominator.
struct DensityReport {
  bool weighted = false;
  std::uint32_t cluster_count = 0;
  double global = 0.0;                          // K
  std::vector<double> intra_per_cluster;        // one per cluster
  std::vector<std::pair<std::pair<ClusterId, ClusterId>, double>> inter_per_pair;
  double mean_intra = 0.0;
  double mean_inter = 0.0;
  double gamma = 0.0;                           // mean_intra - mean_inter
  std::uint64_t inter_pair_count = 0;           // l*(l-1)/2
};

struct IntraDensity {
  std::vector<double> per_cluster;
  double mean = 0.0;
};

struct InterDensity {
  std::vector<std::pair<std::pair<ClusterId, ClusterId>, double>> per_pair;  // nonzero, sorted
  double mean = 0.0;
  std::uint64_t pair_count = 0;
};

// Cluster conductance; nullopt marks an undefined value (zero denominator).
struct ConductanceReport {
  std::vector<std::optional<double>> per_cluster;
  std::optional<double> graph_level;  // min over defined values
};

struct ClassicStdError {
  double s_gamma = 0.0;
  double s2_intra = 0.0;
  double s2_inter = 0.0;
};

// Edge (or weight) total over the maximum possible edge count. Needs >= 2
// vertices.
double global_density(const Graph& g);

// Per-cluster internal density; clusters of size < 2 score 0 but still count
// in the mean's denominator.
IntraDensity intra_density(const Graph& g, const Clustering& c);

// Per-cluster-pair bipartite density, averaged over all pairs including
// edge-free ones. A single cluster has no pairs and mean 0.
InterDensity inter_density(const Graph& g, const Clustering& c);

// All of the above in one edge pass.
DensityReport density_report(const Graph& g, const Clustering& c);

double gamma(const DensityReport& report);

// Newman-Girvan modularity; weighted graphs use weight sums wherever the
// adjacency indicator appears. Throws when there are no edges.
double modularity(const Graph& g, const Clustering& c);

ConductanceReport conductance(const Graph& g, const Clustering& c);

// Closed-form standard error of gamma from the per-cluster / per-pair sample
// variances. Diagnostic only; the assessment routine estimates the standard
// error by simulation instead. Needs at least 3 clusters.
ClassicStdError classic_standard_error(const DensityReport& report);

// Flat CSV row matching: N,l,m,K,K_intra,K_inter,gamma,Phi,Q,weighted
// Undefined values serialize as NaN. For weighted graphs `m` is the total
// edge weight.
std::string metrics_csv_header();
std::string metrics_csv_row(const Graph& g, const Clustering& c, const DensityReport& d,
                            const ConductanceReport& cond, std::optional<double> q);

}  // namespace kappa

#endif
