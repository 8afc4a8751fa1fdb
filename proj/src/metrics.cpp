#include "kappa/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "kappa/format.hpp"

namespace kappa {

namespace {

std::uint64_t pair_key(ClusterId i, ClusterId j) {
  return (static_cast<std::uint64_t>(i) << 32) | j;
}

double max_pairs(std::uint64_t n) { return 0.5 * static_cast<double>(n) * static_cast<double>(n - 1); }

void check_clustering(const Graph& g, const Clustering& c) {
  if (c.vertex_count() != g.vertex_count())
    throw Error(Errc::invalid_labels, "clustering covers " + std::to_string(c.vertex_count()) +
                                          " vertices, graph has " +
                                          std::to_string(g.vertex_count()));
}

// Shared edge pass: intra weight per cluster and nonzero inter weight per
// cluster pair, keyed (min,max).
struct EdgeBins {
  std::vector<double> intra;
  std::unordered_map<std::uint64_t, double> inter;
};

EdgeBins bin_edges(const Graph& g, const Clustering& c) {
  EdgeBins bins;
  bins.intra.assign(c.cluster_count(), 0.0);
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const ClusterId cu = c.label(edges[i].u);
    const ClusterId cv = c.label(edges[i].v);
    const double w = g.weight(i);
    if (cu == cv) {
      bins.intra[cu] += w;
    } else {
      bins.inter[pair_key(std::min(cu, cv), std::max(cu, cv))] += w;
    }
  }
  return bins;
}

IntraDensity intra_from_bins(const std::vector<double>& intra, const Clustering& c) {
  IntraDensity out;
  const std::uint32_t l = c.cluster_count();
  out.per_cluster.resize(l);
  KahanSum sum;
  for (ClusterId i = 0; i < l; ++i) {
    const std::uint32_t n_i = c.size_of(i);
    out.per_cluster[i] = n_i < 2 ? 0.0 : intra[i] / max_pairs(n_i);
    sum.add(out.per_cluster[i]);
  }
  out.mean = sum.value() / l;
  return out;
}

InterDensity inter_from_bins(const std::unordered_map<std::uint64_t, double>& inter,
                             const Clustering& c) {
  InterDensity out;
  const std::uint32_t l = c.cluster_count();
  out.pair_count = static_cast<std::uint64_t>(l) * (l - 1) / 2;
  out.per_pair.reserve(inter.size());
  for (const auto& [key, w] : inter) {
    const auto i = static_cast<ClusterId>(key >> 32);
    const auto j = static_cast<ClusterId>(key & 0xffffffffu);
    const double denom = static_cast<double>(c.size_of(i)) * static_cast<double>(c.size_of(j));
    out.per_pair.push_back({{i, j}, w / denom});
  }
  std::sort(out.per_pair.begin(), out.per_pair.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  if (out.pair_count > 0) {
    KahanSum sum;
    for (const auto& entry : out.per_pair) sum.add(entry.second);
    out.mean = sum.value() / static_cast<double>(out.pair_count);
  }
  return out;
}

}  // namespace

double global_density(const Graph& g) {
  if (g.vertex_count() < 2)
    throw Error(Errc::too_few_vertices,
                "density needs at least 2 vertices, got " + std::to_string(g.vertex_count()));
  return g.total_weight() / max_pairs(g.vertex_count());
}

IntraDensity intra_density(const Graph& g, const Clustering& c) {
  check_clustering(g, c);
  return intra_from_bins(bin_edges(g, c).intra, c);
}

InterDensity inter_density(const Graph& g, const Clustering& c) {
  check_clustering(g, c);
  return inter_from_bins(bin_edges(g, c).inter, c);
}

DensityReport density_report(const Graph& g, const Clustering& c) {
  check_clustering(g, c);
  const EdgeBins bins = bin_edges(g, c);
  IntraDensity intra = intra_from_bins(bins.intra, c);
  InterDensity inter = inter_from_bins(bins.inter, c);

  DensityReport r;
  r.weighted = g.weighted();
  r.cluster_count = c.cluster_count();
  r.global = global_density(g);
  r.intra_per_cluster = std::move(intra.per_cluster);
  r.inter_per_pair = std::move(inter.per_pair);
  r.mean_intra = intra.mean;
  r.mean_inter = inter.mean;
  r.gamma = r.mean_intra - r.mean_inter;
  r.inter_pair_count = inter.pair_count;
  return r;
}

double gamma(const DensityReport& report) { return report.mean_intra - report.mean_inter; }

double modularity(const Graph& g, const Clustering& c) {
  check_clustering(g, c);
  const std::uint32_t l = c.cluster_count();
  std::vector<double> intra(l, 0.0);
  std::vector<double> degree(l, 0.0);
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const ClusterId cu = c.label(edges[i].u);
    const ClusterId cv = c.label(edges[i].v);
    const double w = g.weight(i);
    degree[cu] += w;
    degree[cv] += w;
    if (cu == cv) intra[cu] += w;
  }
  KahanSum total;
  for (double d : degree) total.add(d);
  const double two_w = total.value();
  if (!(two_w > 0.0))
    throw Error(Errc::no_edges, "modularity is undefined on a graph with no edges");
  const double w_total = two_w / 2.0;

  KahanSum q;
  for (ClusterId i = 0; i < l; ++i) {
    const double e_ii = intra[i] / w_total;
    const double a_i = degree[i] / two_w;
    q.add(e_ii - a_i * a_i);
  }
  return q.value();
}

ConductanceReport conductance(const Graph& g, const Clustering& c) {
  check_clustering(g, c);
  const std::uint32_t l = c.cluster_count();
  std::vector<double> degree(l, 0.0);
  std::vector<double> boundary(l, 0.0);
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const ClusterId cu = c.label(edges[i].u);
    const ClusterId cv = c.label(edges[i].v);
    const double w = g.weight(i);
    degree[cu] += w;
    degree[cv] += w;
    if (cu != cv) {
      boundary[cu] += w;
      boundary[cv] += w;
    }
  }
  KahanSum total;
  for (double d : degree) total.add(d);
  const double two_w = total.value();

  ConductanceReport r;
  r.per_cluster.resize(l);
  for (ClusterId i = 0; i < l; ++i) {
    const double outside = two_w - degree[i];
    const double denom = std::min(degree[i], outside);
    if (denom > 0.0) {
      const double phi = boundary[i] / denom;
      r.per_cluster[i] = phi;
      if (!r.graph_level || phi < *r.graph_level) r.graph_level = phi;
    }
  }
  return r;
}

ClassicStdError classic_standard_error(const DensityReport& report) {
  const std::uint32_t l = report.cluster_count;
  if (l < 3)
    throw Error(Errc::too_few_clusters,
                "classic standard error needs at least 3 clusters, got " + std::to_string(l));
  const double pairs = static_cast<double>(report.inter_pair_count);

  KahanSum intra_dev;
  for (double k : report.intra_per_cluster) {
    const double d = k - report.mean_intra;
    intra_dev.add(d * d);
  }
  KahanSum inter_dev;
  for (const auto& entry : report.inter_per_pair) {
    const double d = entry.second - report.mean_inter;
    inter_dev.add(d * d);
  }
  // pairs with no edges contribute (0 - mean)^2 each
  const double zero_pairs = pairs - static_cast<double>(report.inter_per_pair.size());
  inter_dev.add(zero_pairs * report.mean_inter * report.mean_inter);

  ClassicStdError out;
  out.s2_intra = intra_dev.value() / (l - 1);
  out.s2_inter = inter_dev.value() / (pairs - 1);
  out.s_gamma = std::sqrt(out.s2_intra / l + out.s2_inter / pairs);
  return out;
}

std::string metrics_csv_header() { return "N,l,m,K,K_intra,K_inter,gamma,Phi,Q,weighted"; }

std::string metrics_csv_row(const Graph& g, const Clustering& c, const DensityReport& d,
                            const ConductanceReport& cond, std::optional<double> q) {
  std::string row;
  row += std::to_string(g.vertex_count());
  row += ',';
  row += std::to_string(c.cluster_count());
  row += ',';
  row += format_value(g.total_weight());
  row += ',';
  row += format_value(d.global);
  row += ',';
  row += format_value(d.mean_intra);
  row += ',';
  row += format_value(d.mean_inter);
  row += ',';
  row += format_value(d.gamma);
  row += ',';
  row += format_value(cond.graph_level);
  row += ',';
  row += format_value(q);
  row += ',';
  row += g.weighted() ? '1' : '0';
  return row;
}

}  // namespace kappa
