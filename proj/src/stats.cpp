#include "clsc/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace clsc {

double norm_pdf(double x) {
    static const double inv_sqrt_2pi = 0.3989422804014326779;
    return inv_sqrt_2pi * std::exp(-0.5 * x * x);
}

double norm_cdf(double x) {
    return 0.5 * std::erfc(-x * 0.7071067811865475244);
}

namespace {

// Acklam's rational approximation to the inverse normal cdf.
double norm_quantile_acklam(double p) {
    static const double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                -2.759285104469687e+02, 1.383577518672690e+02,
                                -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                -1.556989798598866e+02, 6.680131188771972e+01,
                                -1.328068155288572e+01};
    static const double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                -2.400758277161838e+00, -2.549732539343734e+00,
                                4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;

    if (p < plow) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p > 1.0 - plow) {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

} // namespace

double norm_quantile(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("norm_quantile: p must lie in (0,1)");
    double x = norm_quantile_acklam(p);
    // One Halley step against the erfc-based cdf.
    const double e = norm_cdf(x) - p;
    const double u = e / norm_pdf(x);
    x -= u / (1.0 + 0.5 * x * u);
    return x;
}

double student_t_pdf(double x, double nu) {
    const double lg = std::lgamma(0.5 * (nu + 1.0)) - std::lgamma(0.5 * nu);
    return std::exp(lg) / std::sqrt(nu * M_PI) *
           std::pow(1.0 + x * x / nu, -0.5 * (nu + 1.0));
}

namespace {

// Continued fraction for the incomplete beta function (Lentz's method).
double ibeta_cont_frac(double a, double b, double x) {
    const double tiny = 1e-300;
    const double eps = std::numeric_limits<double>::epsilon();
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 300; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < eps) break;
    }
    return h;
}

} // namespace

double ibeta_reg(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                            a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0))
        return front * ibeta_cont_frac(a, b, x) / a;
    return 1.0 - front * ibeta_cont_frac(b, a, 1.0 - x) / b;
}

double student_t_cdf(double x, double nu) {
    if (x == 0.0) return 0.5;
    const double p = 0.5 * ibeta_reg(0.5 * nu, 0.5, nu / (nu + x * x));
    return x > 0.0 ? 1.0 - p : p;
}

double student_t_quantile(double p, double nu) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("student_t_quantile: p must lie in (0,1)");
    // Start from a normal quantile scaled to match the t variance, then
    // Newton with bisection safeguard on the monotone cdf.
    double lo = -1.0, hi = 1.0;
    while (student_t_cdf(lo, nu) > p) lo *= 2.0;
    while (student_t_cdf(hi, nu) < p) hi *= 2.0;
    double x = norm_quantile(p);
    if (nu > 2.0) x *= std::sqrt(nu / (nu - 2.0));
    if (x < lo || x > hi) x = 0.5 * (lo + hi);
    for (int it = 0; it < 100; ++it) {
        const double f = student_t_cdf(x, nu) - p;
        if (f > 0.0)
            hi = x;
        else
            lo = x;
        const double dfdx = student_t_pdf(x, nu);
        double step = f / dfdx;
        double nx = x - step;
        if (!(nx > lo && nx < hi)) nx = 0.5 * (lo + hi);
        if (std::fabs(nx - x) <= 1e-15 * (1.0 + std::fabs(x))) return nx;
        x = nx;
    }
    return x;
}

double mean(std::span<const double> xs) {
    if (xs.empty()) throw std::invalid_argument("mean: empty sample");
    return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double sample_sd(std::span<const double> xs) {
    const std::size_t m = xs.size();
    if (m < 2) throw std::invalid_argument("sample_sd: needs at least 2 values");
    const double mu = mean(xs);
    double ss = 0.0;
    for (double x : xs) ss += (x - mu) * (x - mu);
    return std::sqrt(ss / static_cast<double>(m - 1));
}

double quantile_type7_sorted(std::span<const double> sorted, double p) {
    if (sorted.empty()) throw std::invalid_argument("quantile: empty sample");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("quantile: p outside [0,1]");
    const std::size_t m = sorted.size();
    if (m == 1) return sorted[0];
    const double h = p * static_cast<double>(m - 1);
    const std::size_t k = std::min(static_cast<std::size_t>(h), m - 2);
    const double frac = h - static_cast<double>(k);
    return sorted[k] + frac * (sorted[k + 1] - sorted[k]);
}

double quantile_type7(std::vector<double> xs, double p) {
    std::sort(xs.begin(), xs.end());
    return quantile_type7_sorted(xs, p);
}

namespace {

// Counts inversions of ys by merge sort.
std::uint64_t count_inversions(std::vector<double>& ys, std::vector<double>& buf,
                               std::size_t lo, std::size_t hi) {
    if (hi - lo < 2) return 0;
    const std::size_t mid = lo + (hi - lo) / 2;
    std::uint64_t inv = count_inversions(ys, buf, lo, mid) +
                        count_inversions(ys, buf, mid, hi);
    std::size_t i = lo, j = mid, k = lo;
    while (i < mid && j < hi) {
        if (ys[j] < ys[i]) {
            inv += mid - i;
            buf[k++] = ys[j++];
        } else {
            buf[k++] = ys[i++];
        }
    }
    while (i < mid) buf[k++] = ys[i++];
    while (j < hi) buf[k++] = ys[j++];
    std::copy(buf.begin() + static_cast<std::ptrdiff_t>(lo),
              buf.begin() + static_cast<std::ptrdiff_t>(hi),
              ys.begin() + static_cast<std::ptrdiff_t>(lo));
    return inv;
}

} // namespace

double kendall_tau(std::span<const std::pair<double, double>> pairs) {
    const std::size_t m = pairs.size();
    if (m < 2) throw std::invalid_argument("kendall_tau: needs at least 2 pairs");

    std::vector<std::pair<double, double>> s(pairs.begin(), pairs.end());
    std::sort(s.begin(), s.end());

    // Knight's algorithm: C - D = n0 - n1 - n2 + n3 - 2*swaps, where swaps is
    // the number of y-inversions after sorting by (x, y).
    const std::uint64_t n0 = static_cast<std::uint64_t>(m) * (m - 1) / 2;
    std::uint64_t n1 = 0, n3 = 0;
    for (std::size_t i = 0; i < m;) {
        std::size_t j = i;
        while (j < m && s[j].first == s[i].first) ++j;
        const std::uint64_t g = j - i;
        n1 += g * (g - 1) / 2;
        for (std::size_t a = i; a < j;) {
            std::size_t b = a;
            while (b < j && s[b].second == s[a].second) ++b;
            const std::uint64_t ge = b - a;
            n3 += ge * (ge - 1) / 2;
            a = b;
        }
        i = j;
    }
    std::vector<double> ys(m), buf(m);
    for (std::size_t i = 0; i < m; ++i) ys[i] = s[i].second;
    const std::uint64_t swaps = count_inversions(ys, buf, 0, m);

    std::uint64_t n2 = 0;
    std::sort(ys.begin(), ys.end());
    for (std::size_t i = 0; i < m;) {
        std::size_t j = i;
        while (j < m && ys[j] == ys[i]) ++j;
        const std::uint64_t g = j - i;
        n2 += g * (g - 1) / 2;
        i = j;
    }

    const double cd = static_cast<double>(n0) - static_cast<double>(n1) -
                      static_cast<double>(n2) + static_cast<double>(n3) -
                      2.0 * static_cast<double>(swaps);
    return cd / static_cast<double>(n0);
}

} // namespace clsc
