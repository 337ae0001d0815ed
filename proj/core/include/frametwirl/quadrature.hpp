#ifndef FRAMETWIRL_QUADRATURE_HPP
#define FRAMETWIRL_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace frametwirl {

/// Gauss-Legendre rule on [-1, 1]. Nodes ascend; weights sum to 2.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int n);

/// Integrate f over [a, b] with an n-node Gauss-Legendre rule.
double gl_integrate(const std::function<double(double)>& f, double a, double b,
                    int n);

/// Integrate over [a, b], doubling the node count from n0 until two
/// successive estimates differ by less than abs_tol (or max_doublings is
/// hit, in which case the last estimate is returned).
double gl_integrate_adaptive(const std::function<double(double)>& f, double a,
                             double b, double abs_tol, int n0 = 64,
                             int max_doublings = 8);

}  // namespace frametwirl

#endif
