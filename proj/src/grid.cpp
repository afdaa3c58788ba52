#include "fracpm/grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace fracpm {

namespace {

// FFTW planning is not thread safe; execution with the new-array interface
// is. Plans are created once per (d, n) and kept for the process lifetime.
struct PlanPair {
  fftw_plan r2c = nullptr;
  fftw_plan c2r = nullptr;
};

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

const PlanPair& plans_for(const Grid& g) {
  static std::map<std::pair<int, int>, PlanPair> cache;
  std::lock_guard<std::mutex> lock(planner_mutex());
  auto key = std::make_pair(g.d, g.n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const std::size_t real_size = g.size();
  const std::size_t complex_size = (g.d == 1) ? static_cast<std::size_t>(g.n / 2 + 1)
                                              : static_cast<std::size_t>(g.n) * (g.n / 2 + 1);
  double* r = fftw_alloc_real(real_size);
  fftw_complex* c = fftw_alloc_complex(complex_size);
  int dims[2] = {g.n, g.n};
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  PlanPair p;
  p.r2c = fftw_plan_dft_r2c(g.d, dims, r, c, flags);
  p.c2r = fftw_plan_dft_c2r(g.d, dims, c, r, flags | FFTW_DESTROY_INPUT);
  fftw_free(r);
  fftw_free(c);
  if (!p.r2c || !p.c2r) throw std::runtime_error("FFTW planning failed");
  return cache.emplace(key, p).first->second;
}

}  // namespace

void Grid::validate() const {
  if (d != 1 && d != 2) throw std::invalid_argument("grid dimension must be 1 or 2");
  if (n < 16 || (n & (n - 1)) != 0) {
    throw std::invalid_argument("grid size must be a power of two >= 16");
  }
  if (!(l > 0.0)) throw std::invalid_argument("grid period must be positive");
}

std::size_t Grid::size() const {
  return d == 1 ? static_cast<std::size_t>(n) : static_cast<std::size_t>(n) * n;
}

double Grid::cell_volume() const { return std::pow(spacing(), d); }

double Grid::wavenumber(int k) const { return 2.0 * std::numbers::pi * k / l; }

Field::Field(const Grid& g) : grid(g), values(g.size(), 0.0) { g.validate(); }

Field::Field(const Grid& g, std::vector<double> v) : grid(g), values(std::move(v)) {
  g.validate();
  if (values.size() != g.size()) throw std::invalid_argument("field size does not match grid");
}

Field sample(const Grid& g, const std::function<double(std::span<const double>)>& fn) {
  Field f(g);
  double x[2] = {0.0, 0.0};
  if (g.d == 1) {
    for (int i = 0; i < g.n; ++i) {
      x[0] = g.coordinate(i);
      f[i] = fn(std::span<const double>(x, 1));
    }
  } else {
    for (int i = 0; i < g.n; ++i) {
      x[0] = g.coordinate(i);
      for (int j = 0; j < g.n; ++j) {
        x[1] = g.coordinate(j);
        f[static_cast<std::size_t>(i) * g.n + j] = fn(std::span<const double>(x, 2));
      }
    }
  }
  return f;
}

Spectrum forward(const Field& f) {
  const Grid& g = f.grid;
  const PlanPair& p = plans_for(g);
  Spectrum s{g, {}};
  s.coeffs.resize(g.d == 1 ? s.half() : static_cast<std::size_t>(g.n) * s.half());
  std::vector<double> in = f.values;  // r2c may not preserve input with unaligned plans
  fftw_execute_dft_r2c(p.r2c, in.data(), reinterpret_cast<fftw_complex*>(s.coeffs.data()));
  return s;
}

Field inverse(const Spectrum& s) {
  const Grid& g = s.grid;
  const PlanPair& p = plans_for(g);
  std::vector<std::complex<double>> scratch = s.coeffs;
  Field out(g);
  fftw_execute_dft_c2r(p.c2r, reinterpret_cast<fftw_complex*>(scratch.data()), out.values.data());
  const double norm = 1.0 / static_cast<double>(g.size());
  for (double& v : out.values) v *= norm;
  return out;
}

void for_each_mode(const Grid& g, const std::function<void(std::size_t, int, int)>& visit) {
  const int half = g.n / 2 + 1;
  auto signed_index = [&](int i) { return i < g.n / 2 ? i : i - g.n; };
  if (g.d == 1) {
    for (int i = 0; i < half; ++i) visit(static_cast<std::size_t>(i), i == g.n / 2 ? -g.n / 2 : i, 0);
    return;
  }
  for (int i = 0; i < g.n; ++i) {
    const int k0 = signed_index(i);
    for (int j = 0; j < half; ++j) {
      const int k1 = j == g.n / 2 ? -g.n / 2 : j;
      visit(static_cast<std::size_t>(i) * half + j, k0, k1);
    }
  }
}

}  // namespace fracpm
