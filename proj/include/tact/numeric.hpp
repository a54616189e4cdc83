#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "tact/types.hpp"

namespace tact {

/// log(n!) with cached values; exact relative accuracy of std::lgamma.
double log_factorial(int n);

/// log of the binomial coefficient C(n, k). Stays finite for n up to 1e4.
double log_binomial(int n, int k);

/// Gauss-Legendre nodes and weights on [-1, 1]. Newton iteration on P_n,
/// stable for n well beyond 1e3. Nodes ascending.
std::pair<VectorXd, VectorXd> gauss_legendre(int n);

std::vector<double> linspace(double lo, double hi, int count);

/// One-dimensional extremum location and value.
struct Extremum {
  double x = 0.0;
  double value = 0.0;
};

/// Refine a bracketed maximum of f with successive parabolic interpolation,
/// falling back to golden-section when the parabola step degenerates.
/// Requires a < b < c and f(b) >= max(f(a), f(c)).
Extremum refine_maximum(const std::function<double(double)>& f, double a,
                        double b, double c, double x_tol);

/// Index of the first interior local maximum, or -1 when none exists.
int first_local_max(const std::vector<double>& values);

/// Index of the nth (1-based) interior local minimum, or -1.
int nth_local_min(const std::vector<double>& values, int nth);

int first_local_min(const std::vector<double>& values);

}  // namespace tact
