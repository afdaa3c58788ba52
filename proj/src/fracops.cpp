#include "fracpm/fracops.hpp"

#include "fracpm/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fracpm::fracops {

namespace {

using cplx = std::complex<double>;

struct Mode {
  int k[2];
  double xi[2];
  double abs_xi;
};

// Applies symbol(mode) to the spectrum of f.
template <typename Symbol>
Field apply(const Field& f, Symbol&& symbol) {
  Spectrum s = forward(f);
  const Grid& g = f.grid;
  for_each_mode(g, [&](std::size_t idx, int k0, int k1) {
    Mode m{{k0, k1}, {g.wavenumber(k0), g.d == 2 ? g.wavenumber(k1) : 0.0}, 0.0};
    m.abs_xi = std::hypot(m.xi[0], m.xi[1]);
    s.coeffs[idx] *= symbol(m);
  });
  return inverse(s);
}

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 2.0)) throw std::domain_error("alpha must lie in (0, 2]");
}

bool nyquist(const Grid& g, int k) { return k == -g.n / 2; }

}  // namespace

Field frac_laplacian(const Field& f, double alpha) {
  check_alpha(alpha);
  return apply(f, [&](const Mode& m) -> cplx {
    return m.abs_xi == 0.0 ? 0.0 : std::pow(m.abs_xi, alpha);
  });
}

Field riesz_potential(const Field& f, double beta) {
  if (!(beta > 0.0 && beta < 2.0)) throw std::domain_error("beta must lie in (0, 2)");
  return apply(f, [&](const Mode& m) -> cplx {
    return m.abs_xi == 0.0 ? 0.0 : std::pow(m.abs_xi, -beta);
  });
}

namespace {

VectorField frac_gradient_impl(const Field& f, double alpha, bool staggered) {
  check_alpha(alpha);
  const Grid& g = f.grid;
  const double h = g.spacing();
  VectorField out;
  out.reserve(g.d);
  for (int j = 0; j < g.d; ++j) {
    out.push_back(apply(f, [&](const Mode& m) -> cplx {
      if (m.abs_xi == 0.0 || nyquist(g, m.k[j])) return 0.0;
      cplx sym = cplx(0.0, m.xi[j]) * std::pow(m.abs_xi, alpha - 2.0);
      if (staggered) sym *= std::polar(1.0, 0.5 * m.xi[j] * h);
      return sym;
    }));
  }
  return out;
}

}  // namespace

VectorField frac_gradient(const Field& f, double alpha) { return frac_gradient_impl(f, alpha, false); }

VectorField frac_gradient_staggered(const Field& f, double alpha) {
  return frac_gradient_impl(f, alpha, true);
}

VectorField gradient(const Field& f) {
  const Grid& g = f.grid;
  VectorField out;
  for (int j = 0; j < g.d; ++j) {
    out.push_back(apply(f, [&](const Mode& m) -> cplx {
      if (nyquist(g, m.k[j])) return 0.0;
      return cplx(0.0, m.xi[j]);
    }));
  }
  return out;
}

Field divergence(const VectorField& v) {
  if (v.empty()) throw std::invalid_argument("divergence of an empty vector field");
  const Grid& g = v.front().grid;
  if (static_cast<int>(v.size()) != g.d) throw std::invalid_argument("vector field dimension mismatch");
  Field out(g);
  for (int j = 0; j < g.d; ++j) {
    Field part = apply(v[j], [&](const Mode& m) -> cplx {
      if (nyquist(g, m.k[j])) return 0.0;
      return cplx(0.0, m.xi[j]);
    });
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += part[i];
  }
  return out;
}

Field laplacian(const Field& f) {
  return apply(f, [&](const Mode& m) -> cplx { return -m.abs_xi * m.abs_xi; });
}

Field dealias(const Field& f) {
  const Grid& g = f.grid;
  const int cut = g.n / 3;
  return apply(f, [&](const Mode& m) -> cplx {
    for (int j = 0; j < g.d; ++j) {
      if (std::abs(m.k[j]) > cut) return 0.0;
    }
    return 1.0;
  });
}

double inner(const Field& f, const Field& g) {
  if (!(f.grid == g.grid)) throw std::invalid_argument("inner product of fields on different grids");
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * g[i];
  return s * f.grid.cell_volume();
}

double mean(const Field& f) {
  double s = 0.0;
  for (double v : f.values) s += v;
  return s / static_cast<double>(f.size());
}

namespace {

// Sum over the periodic images k != 0 of the odd kernel sgn(z)|z|^{-alpha}:
//   S(z) = sum_{k>=1} (kL + z)^{-alpha} - (kL - z)^{-alpha},   |z| < L.
// Explicit terms up to k = K-1, Euler-Maclaurin tail from K on.
double image_kernel_sum(double z, double l, double alpha) {
  constexpr int K = 64;
  auto pair = [&](double k, double p) { return std::pow(k * l + z, -p) - std::pow(k * l - z, -p); };
  double s = 0.0;
  for (int k = 1; k < K; ++k) s += pair(k, alpha);
  double integral = 0.0;
  if (std::abs(alpha - 1.0) < 1e-12) {
    integral = std::log((K * l - z) / (K * l + z)) / l;
  } else {
    integral = (std::pow(K * l - z, 1.0 - alpha) - std::pow(K * l + z, 1.0 - alpha)) / ((1.0 - alpha) * l);
  }
  const double d1 = -alpha * l * pair(K, alpha + 1.0);
  const double d3 = -alpha * (alpha + 1.0) * (alpha + 2.0) * l * l * l * pair(K, alpha + 3.0);
  return s + integral + 0.5 * pair(K, alpha) - d1 / 12.0 + d3 / 720.0;
}

}  // namespace

Field singular_integral_frac_gradient(const Field& f, double alpha, double c_cal) {
  const Grid& g = f.grid;
  if (g.d != 1) throw std::domain_error("singular integral oracle is one-dimensional");
  if (g.n > 512) throw std::domain_error("singular integral oracle limited to n <= 512");
  if (!(alpha > 0.0 && alpha < 2.0)) throw std::domain_error("alpha must lie in (0, 2)");
  const int n = g.n;
  const double h = g.spacing();
  const double e = 2.0 - alpha;
  // Writing f(x-z) - f(x+z) = z q(z) with q smooth and even, the weights
  // integrate z^{1-alpha} exactly over each cell and sample q at the centre.
  // The periodic images contribute a smooth kernel handled by the plain rule.
  // z = L/2 is skipped: the periodised odd kernel vanishes there.
  std::vector<double> weight(n / 2, 0.0);
  for (int j = 1; j < n / 2; ++j) {
    const double z = j * h;
    weight[j] = (std::pow(z + 0.5 * h, e) - std::pow(z - 0.5 * h, e)) / (e * z) +
                h * image_kernel_sum(z, g.l, alpha);
  }
  // Cell |z| < h/2: q(z) -> -2 f'(x).
  const double inner_cell = 2.0 * std::pow(0.5 * h, e) / e;
  const Field df = gradient(f).front();

  Field out(g);
  for (int i = 0; i < n; ++i) {
    double acc = -df[i] * inner_cell;
    for (int j = 1; j < n / 2; ++j) {
      // z = +jh contributes (f - f(x+jh)), z = -jh contributes -(f - f(x-jh)).
      acc += weight[j] * (f[(i - j + n) % n] - f[(i + j) % n]);
    }
    out[i] = c_cal * acc;
  }
  return out;
}

double calibrate_singular_constant(const Grid& g, double alpha, double sigma) {
  const Field f = sample(g, [&](std::span<const double> x) {
    return std::exp(-0.5 * x[0] * x[0] / (sigma * sigma));
  });
  const Field shape = singular_integral_frac_gradient(f, alpha, 1.0);
  const Field target = frac_gradient(f, alpha).front();
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    num += shape[i] * target[i];
    den += shape[i] * shape[i];
  }
  return num / den;
}

double singular_integral_reference_constant(double alpha) {
  if (!(alpha > 0.0 && alpha < 2.0)) throw std::domain_error("alpha must lie in (0, 2)");
  if (alpha == 1.0) return -1.0 / std::numbers::pi;
  return -1.0 / (2.0 * specfun::gamma_fn(1.0 - alpha) * std::cos(0.5 * std::numbers::pi * alpha));
}

}  // namespace fracpm::fracops
