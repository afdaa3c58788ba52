#pragma once

// Fourier-multiplier operators on periodic grids.
//
//   (-Delta)^{alpha/2}   symbol |xi|^alpha
//   I_beta               symbol |xi|^{-beta}          (zero mode -> 0)
//   grad^{alpha-1}       symbol i xi |xi|^{alpha-2}   (zero mode -> 0)
//
// Odd symbols drop the Nyquist mode of the differentiated axis so that every
// output is real. All fractional multipliers send the mean to zero.

#include "fracpm/grid.hpp"

namespace fracpm::fracops {

Field frac_laplacian(const Field& f, double alpha);
Field riesz_potential(const Field& f, double beta);
VectorField frac_gradient(const Field& f, double alpha);

/// grad^{alpha-1} f with component j sampled at the face x + (h/2) e_j
/// (spectral half-cell shift).
VectorField frac_gradient_staggered(const Field& f, double alpha);

VectorField gradient(const Field& f);
Field divergence(const VectorField& v);
Field laplacian(const Field& f);

/// 2/3-rule truncation: zeroes modes with |k_j| > n/3 on any axis.
Field dealias(const Field& f);

/// Discrete L2 inner product h^d sum f g.
double inner(const Field& f, const Field& g);
double mean(const Field& f);

/// Direct evaluation of  C int (f(x) - f(x+z)) z |z|^{-1-alpha} dz  (d = 1)
/// over the torus: the kernel is periodised (image sum with an
/// Euler-Maclaurin tail) and integrated cell by cell against z^{1-alpha},
/// with the |z| < h/2 cell handled by the first-order Taylor term.
/// Oracle scale: n <= 512.
Field singular_integral_frac_gradient(const Field& f, double alpha, double c_cal);

/// Least-squares C_cal matching the singular integral to the spectral
/// frac_gradient on a Gaussian of width sigma sampled on g.
double calibrate_singular_constant(const Grid& g, double alpha, double sigma);

/// Constant that makes the continuum singular integral equal grad^{alpha-1}
/// in d = 1:  -1 / (2 Gamma(1-alpha) cos(pi alpha/2))  (-1/pi at alpha = 1).
double singular_integral_reference_constant(double alpha);

}  // namespace fracpm::fracops
