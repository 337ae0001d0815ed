#ifndef FRAMETWIRL_SPECIAL_FUNCTIONS_HPP
#define FRAMETWIRL_SPECIAL_FUNCTIONS_HPP

namespace frametwirl {

/// Modified Bessel function of the first kind, I_order(x), for
/// order in [0, 10] and x >= 0. Relative accuracy ~1e-13.
///
/// Power series (long-double accumulation, all terms positive) up to x = 40,
/// asymptotic expansion above. The series switchover sits at 40 rather than
/// the usual 15 because the asymptotic tail cannot reach 1e-13 until the
/// optimally-truncated remainder ~e^(-2x) is small enough.
double bessel_i(int order, double x);

/// exp(-x) * I_order(x); stable for large x where I itself overflows.
double bessel_i_scaled(int order, double x);

/// Mean resultant length on S^3: G(kappa) = I_2(kappa)/I_1(kappa).
/// Series kappa/4 - kappa^3/96 below 1e-4.
double mean_resultant_G(double kappa);

/// Mean resultant length on S^2: H(kappa) = coth(kappa) - 1/kappa.
/// Series kappa/3 - kappa^3/45 + 2 kappa^5/945 below 1e-2, where the direct
/// form loses digits to cancellation.
double mean_resultant_H(double kappa);

/// H(kappa)/kappa with the small-kappa series limit 1/3; accepts kappa = 0.
double mean_resultant_H_over_kappa(double kappa);

/// G(kappa)/kappa with the small-kappa series limit 1/4; accepts kappa = 0.
double mean_resultant_G_over_kappa(double kappa);

}  // namespace frametwirl

#endif
