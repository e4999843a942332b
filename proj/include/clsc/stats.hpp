#ifndef CLSC_STATS_HPP
#define CLSC_STATS_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace clsc {

// --- univariate normal ---
double norm_pdf(double x);
double norm_cdf(double x);
// Inverse normal cdf, rational approximation polished by one Halley step;
// absolute accuracy well below 1e-9 over (0,1).
double norm_quantile(double p);

// --- Student t with real df > 0 ---
double student_t_pdf(double x, double nu);
double student_t_cdf(double x, double nu);
double student_t_quantile(double p, double nu);

// Regularized incomplete beta I_x(a,b), continued-fraction evaluation.
double ibeta_reg(double a, double b, double x);

// --- sample statistics ---
double mean(std::span<const double> xs);
// Sample standard deviation (n-1 denominator); requires xs.size() >= 2.
double sample_sd(std::span<const double> xs);

// Type-7 quantile (linear interpolation of order statistics) of already
// sorted data; p in [0,1].
double quantile_type7_sorted(std::span<const double> sorted, double p);
double quantile_type7(std::vector<double> xs, double p);

// Sample Kendall tau: (concordant - discordant) / (all pairs); ties count as
// neither. O(m log m) merge-sort counting; requires at least 2 pairs.
double kendall_tau(std::span<const std::pair<double, double>> pairs);

} // namespace clsc

#endif // CLSC_STATS_HPP
