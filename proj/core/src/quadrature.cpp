#include "frametwirl/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace frametwirl {

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 0; k < n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k + 1.0) * x * p1 - k * p2) / (k + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

double gl_integrate(const std::function<double(double)>& f, double a, double b,
                    int n) {
  const GaussLegendreRule rule = gauss_legendre(n);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return half * sum;
}

double gl_integrate_adaptive(const std::function<double(double)>& f, double a,
                             double b, double abs_tol, int n0,
                             int max_doublings) {
  double prev = gl_integrate(f, a, b, n0);
  int n = n0;
  for (int k = 0; k < max_doublings; ++k) {
    n *= 2;
    const double cur = gl_integrate(f, a, b, n);
    if (std::abs(cur - prev) < abs_tol) return cur;
    prev = cur;
  }
  return prev;
}

}  // namespace frametwirl
