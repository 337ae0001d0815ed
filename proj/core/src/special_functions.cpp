#include "frametwirl/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace frametwirl {

namespace {

constexpr double kSeriesSwitch = 40.0;

long double series_i_scaled(int order, double x) {
  // I_order(x) = (x/2)^order sum_k (x^2/4)^k / (k! (k+order)!), times e^-x.
  // All terms positive, so the only error is truncation plus rounding.
  long double term = 1.0L;
  for (int j = 1; j <= order; ++j) term *= static_cast<long double>(x) / (2.0L * j);
  long double sum = term;
  const long double q = static_cast<long double>(x) * x / 4.0L;
  for (int k = 1; k < 400; ++k) {
    term *= q / (static_cast<long double>(k) * (k + order));
    sum += term;
    if (term < sum * 1e-20L) break;
  }
  return sum * std::exp(-static_cast<long double>(x));
}

long double asymptotic_i_scaled(int order, double x) {
  // e^-x I_nu(x) ~ 1/sqrt(2 pi x) * sum_k (-1)^k a_k with
  // a_k = prod_{j=1..k} (4 nu^2 - (2j-1)^2) / (k 8 x).
  const long double mu = 4.0L * order * order;
  long double term = 1.0L;
  long double sum = 1.0L;
  long double prev_abs = std::numeric_limits<long double>::max();
  for (int k = 1; k < 60; ++k) {
    term *= -(mu - (2.0L * k - 1.0L) * (2.0L * k - 1.0L)) / (8.0L * k * x);
    const long double a = std::abs(term);
    if (a >= prev_abs) break;  // divergent tail reached
    sum += term;
    prev_abs = a;
    if (a < 1e-20L) break;
  }
  return sum / std::sqrt(2.0L * static_cast<long double>(M_PI) * x);
}

}  // namespace

double bessel_i_scaled(int order, double x) {
  if (x < 0.0) throw std::domain_error("bessel_i: x must be >= 0");
  if (order < 0 || order > 10) {
    throw std::invalid_argument("bessel_i: order must be in [0, 10]");
  }
  if (x <= kSeriesSwitch) return static_cast<double>(series_i_scaled(order, x));
  return static_cast<double>(asymptotic_i_scaled(order, x));
}

double bessel_i(int order, double x) {
  if (x < 0.0) throw std::domain_error("bessel_i: x must be >= 0");
  if (order < 0 || order > 10) {
    throw std::invalid_argument("bessel_i: order must be in [0, 10]");
  }
  if (x <= kSeriesSwitch) {
    long double term = 1.0L;
    for (int j = 1; j <= order; ++j) {
      term *= static_cast<long double>(x) / (2.0L * j);
    }
    long double sum = term;
    const long double q = static_cast<long double>(x) * x / 4.0L;
    for (int k = 1; k < 400; ++k) {
      term *= q / (static_cast<long double>(k) * (k + order));
      sum += term;
      if (term < sum * 1e-20L) break;
    }
    return static_cast<double>(sum);
  }
  return static_cast<double>(asymptotic_i_scaled(order, x) *
                             std::exp(static_cast<long double>(x)));
}

double mean_resultant_G(double kappa) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw std::domain_error("mean_resultant_G: kappa must be finite and > 0");
  }
  if (kappa < 1e-4) {
    return kappa / 4.0 - kappa * kappa * kappa / 96.0;
  }
  if (kappa <= kSeriesSwitch) {
    return static_cast<double>(series_i_scaled(2, kappa) /
                               series_i_scaled(1, kappa));
  }
  return static_cast<double>(asymptotic_i_scaled(2, kappa) /
                             asymptotic_i_scaled(1, kappa));
}

double mean_resultant_H(double kappa) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw std::domain_error("mean_resultant_H: kappa must be finite and > 0");
  }
  if (kappa < 1e-2) {
    const double k2 = kappa * kappa;
    return kappa * (1.0 / 3.0 + k2 * (-1.0 / 45.0 + k2 * (2.0 / 945.0)));
  }
  return 1.0 / std::tanh(kappa) - 1.0 / kappa;
}

double mean_resultant_H_over_kappa(double kappa) {
  if (kappa < 0.0) throw std::domain_error("H/kappa: kappa must be >= 0");
  if (kappa < 1e-2) {
    const double k2 = kappa * kappa;
    return 1.0 / 3.0 + k2 * (-1.0 / 45.0 + k2 * (2.0 / 945.0));
  }
  return mean_resultant_H(kappa) / kappa;
}

double mean_resultant_G_over_kappa(double kappa) {
  if (kappa < 0.0) throw std::domain_error("G/kappa: kappa must be >= 0");
  if (kappa < 1e-4) {
    return 0.25 - kappa * kappa / 96.0;
  }
  return mean_resultant_G(kappa) / kappa;
}

}  // namespace frametwirl
