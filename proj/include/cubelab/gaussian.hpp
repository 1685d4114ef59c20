#pragma once

#include <span>

namespace cubelab {

// Gamma function by the Lanczos approximation (g = 7, nine coefficients),
// with reflection below 1/2. Relative error below 1e-13 on [0.5, 30].
double gamma_function(double x);

// Absolute moments of the density exp(-pi x^2) on the line.
struct GaussianMoment {
  double p = 0.0;
  double value = 0.0;  // integral of |x|^p exp(-pi x^2) dx
  double root = 0.0;   // value^(1/p) for p > 0; 1 for p = 0
};

// Closed form pi^(-(p+1)/2) Gamma((p+1)/2). Requires finite p >= 0.
GaussianMoment gaussian_moment(double p);

// Same integral by adaptive Gauss-Legendre on [0, 6] (doubled); the tail
// beyond 6 weighs less than 1e-49.
double gaussian_moment_quadrature(double p);

// (integral over R^n of |<x,v>|^p exp(-pi <x,x>) dx)^(1/p) = |v| * root(p).
double linear_functional_moment(std::span<const double> v, double p);

// The same n-dimensional integral by tensor-product Gauss-Legendre on
// [-6, 6]^n, n <= 3. `panels_per_axis` panels of 16 nodes each (0: sized
// by n).
double linear_functional_moment_quadrature(std::span<const double> v, double p,
                                           int panels_per_axis = 0);

// Integral of exp(-pi <x,x>) over R^n summed over the full tensor grid.
double gaussian_mass_quadrature(int n, int panels_per_axis = 0);

// ||g||_p / ||g||_2 for a mean-zero Gaussian g; 3^(1/4) at p = 4.
double gaussian_khintchine_limit(double p);

}  // namespace cubelab
