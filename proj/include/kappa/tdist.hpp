#ifndef KAPPA_TDIST_HPP
#define KAPPA_TDIST_HPP

namespace kappa {

// Upper-tail probability P(T_df > t) of Student's t distribution, evaluated
// through the regularized incomplete beta function. df must be >= 1.
double student_t_sf(double t, int df);

// Regularized incomplete beta I_x(a, b) for a,b > 0 and x in [0,1].
double ibeta(double a, double b, double x);

// Standard normal CDF and its inverse (the latter by bisection; used for
// percentile overlays, not in any hot path).
double normal_cdf(double z);
double normal_quantile(double p);

}  // namespace kappa

#endif
