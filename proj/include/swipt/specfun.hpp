#pragma once

namespace swipt::specfun {

inline constexpr double kEulerGamma = 0.57721566490153286061;

/// Exponential integral E1(x) = \int_1^\infty e^{-xy}/y dy for x > 0.
///
/// Power series for x <= 1, modified-Lentz continued fraction above.
/// Relative accuracy is about 1e-14 on [1e-8, 700]; returns 0 once the
/// result underflows. Throws DomainError for x <= 0, NaN or infinity.
double exp_integral_e1(double x);

/// e^x E1(x), evaluated without forming e^x for large x.
double exp_scaled_e1(double x);

/// Harmonic number H_n, summed from the smallest term upwards with
/// Neumaier compensation. Throws DomainError for n == 0.
double harmonic(unsigned n);

}  // namespace swipt::specfun
