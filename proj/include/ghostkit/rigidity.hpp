#pragma once

// Floating-point checks behind the rigidity of the simple projectives
// sigma^l W_c: Gauss hypergeometric series, Gamma/Beta, and the
// proportionality factor I(w1, w2) whose non-vanishing gives rigidity.

#include <cmath>
#include <complex>
#include <numbers>

#include "ghostkit/labels.hpp"

namespace ghostkit {

struct NumericDomainError : Error {
  using Error::Error;
};

inline bool is_nonpositive_integer(double x) { return x <= 0 && std::floor(x) == x; }

/// Gauss series 2F1(a, b; c; x) for |x| < 1, summed until the term ratio
/// drops below 1e-14 relative to the partial sum.
inline double hyp2f1(double a, double b, double c, double x) {
  if (!(std::abs(x) < 1)) throw NumericDomainError("hyp2f1 needs |x| < 1");
  if (is_nonpositive_integer(c)) throw NumericDomainError("hyp2f1 needs c outside 0, -1, -2, ...");
  double sum = 1.0;
  double term = 1.0;
  for (int k = 0; k < 100000; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * x;
    sum += term;
    if (term == 0.0) break;
    if (std::abs(term) < 1e-14 * std::abs(sum) && k > 2) break;
  }
  return sum;
}

inline double gamma_fn(double x) {
  if (is_nonpositive_integer(x)) throw NumericDomainError("Gamma has a pole at " + std::to_string(x));
  return std::tgamma(x);
}

inline double beta_fn(double a, double b) { return gamma_fn(a) * gamma_fn(b) / gamma_fn(a + b); }

/// Gauss's second summation theorem, 2F1(a, b; (a+b+1)/2; 1/2).
inline double gauss_second_sum(double a, double b) {
  return gamma_fn(0.5) * gamma_fn((a + b + 1) / 2) / (gamma_fn((a + 1) / 2) * gamma_fn((b + 1) / 2));
}

/// I(w1, w2) at w2 = 2 w1 for the coset representative 0 < j < 1. `ell`
/// only enters through the nonzero prefactor f(w1, w2). Principal branches.
inline std::complex<double> rigidity_constant(double j, double w1, int ell = 0) {
  using C = std::complex<double>;
  if (!(j > 0 && j < 1)) throw NumericDomainError("rigidity constant needs 0 < j < 1");
  if (w1 == 0) throw NumericDomainError("rigidity constant needs w1 != 0");
  const double pi = std::numbers::pi;
  const C z1(w1), z2(2 * w1);
  const double l = ell;
  const double e1 = l * l + j * (1 - 2 * l);
  const C f = std::pow(z2 - z1, e1) * std::pow(z2, (j - 1) * (2 * j - l - 1)) * std::pow(z1, e1);
  const C sign = std::exp(C(0, pi * j));                       // (-1)^j
  const C phase = std::exp(C(0, 2 * pi * j)) - 1.0;            // e^{2 pi i j} - 1
  const double s = std::sin(pi * j);
  const double F1 = hyp2f1(-j, j, 1, std::real((z2 - z1) / z2));
  const double F2 = hyp2f1(1 - j, j, 1, std::real(z1 / z2));
  return sign * f * phase * phase * std::pow(z2, 2 * j - 1) * (pi * pi * (j - 1) / (s * s)) * F1 * F2;
}

/// Identities checked alongside the rigidity constant at coset representative j.
struct RigidityIdentities {
  double closed_form_residual;   // |2F1(1-j, j; 1; 1/2) - Gauss second sum|
  double contiguity_residual;    // |2F1(-j, j; 1; 1/2) - (2F1(1-j,j;1;1/2) + 2F1(-j,1+j;1;1/2))/2|
  double shifted_form_residual;  // |2F1(-j, 1+j; 1; 1/2) - Gauss second sum|
  double beta_residual;          // |B(1+j, 1-j) - pi j / sin(pi j)|
  double reflection_residual;    // |B(j, 1-j) sin(pi j) / pi - 1|

  bool pass(double tol = 1e-10) const {
    return closed_form_residual < tol && contiguity_residual < tol && shifted_form_residual < tol &&
           beta_residual < tol && reflection_residual < tol;
  }
};

inline RigidityIdentities rigidity_identities(double j) {
  const double pi = std::numbers::pi;
  const double f1 = hyp2f1(1 - j, j, 1, 0.5);
  const double f0 = hyp2f1(-j, j, 1, 0.5);
  const double f2 = hyp2f1(-j, 1 + j, 1, 0.5);
  RigidityIdentities r{};
  r.closed_form_residual = std::abs(f1 - gauss_second_sum(1 - j, j));
  r.contiguity_residual = std::abs(f0 - 0.5 * (f1 + f2));
  r.shifted_form_residual = std::abs(f2 - gauss_second_sum(-j, 1 + j));
  r.beta_residual = std::abs(beta_fn(1 + j, 1 - j) - pi * j / std::sin(pi * j));
  r.reflection_residual = std::abs(beta_fn(j, 1 - j) * std::sin(pi * j) / pi - 1);
  return r;
}

}  // namespace ghostkit
