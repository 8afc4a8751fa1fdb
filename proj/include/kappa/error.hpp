#ifndef KAPPA_ERROR_HPP
#define KAPPA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace kappa {

enum class Errc {
  self_loop,
  duplicate_edge,
  non_positive_weight,
  endpoint_out_of_range,
  weighted_unsupported,
  non_positive_alpha,
  not_a_bijection,
  invalid_labels,
  too_few_vertices,
  no_edges,
  too_few_clusters,
  invalid_cluster_count,
  too_few_runs,
  invalid_probability,
  invalid_shape,
  invalid_df,
  parse_error,
  io_error,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace kappa

#endif
