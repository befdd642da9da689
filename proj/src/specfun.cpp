#include "swipt/specfun.hpp"

#include <cmath>
#include <limits>

#include "swipt/errors.hpp"

namespace swipt::specfun {
namespace {

void check_argument(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw DomainError("exp_integral_e1: argument must be finite and > 0");
  }
}

// -gamma - ln x + sum_{k>=1} (-1)^{k+1} x^k / (k k!)
double e1_series(double x) {
  double sum = 0.0;
  double term = 1.0;  // (-1)^{k+1} x^k / k!
  for (int k = 1; k < 200; ++k) {
    term *= (k == 1 ? x : -x / k);
    const double contribution = term / k;
    sum += contribution;
    if (std::abs(contribution) < 1e-17 * std::abs(sum)) break;
  }
  return -kEulerGamma - std::log(x) + sum;
}

// e^x E1(x) = 1/(x+1- 1/(x+3- 4/(x+5- ...))) via modified Lentz.
double scaled_e1_continued_fraction(double x) {
  constexpr double tiny = 1e-300;
  constexpr double eps = 1e-16;
  double b = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 10000; ++i) {
    const double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const double delta = c * d;
    h *= delta;
    if (std::abs(delta - 1.0) < eps) return h;
  }
  return h;
}

}  // namespace

double exp_integral_e1(double x) {
  check_argument(x);
  if (x <= 1.0) return e1_series(x);
  // e^{-x} underflows to zero past ~745; the product does so cleanly.
  return std::exp(-x) * scaled_e1_continued_fraction(x);
}

double exp_scaled_e1(double x) {
  check_argument(x);
  if (x <= 1.0) return std::exp(x) * e1_series(x);
  return scaled_e1_continued_fraction(x);
}

double harmonic(unsigned n) {
  if (n == 0) throw DomainError("harmonic: n must be >= 1");
  double sum = 0.0;
  double compensation = 0.0;
  for (unsigned i = n; i >= 1; --i) {
    const double term = 1.0 / static_cast<double>(i);
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      compensation += (sum - t) + term;
    } else {
      compensation += (term - t) + sum;
    }
    sum = t;
  }
  return sum + compensation;
}

}  // namespace swipt::specfun
