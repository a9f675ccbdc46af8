#include "kernel_lab/boundary_calculus.hpp"

#include <cmath>
#include <numbers>

#include "kernel_lab/errors.hpp"

namespace kernel_lab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_circle(const GridPtr& grid) { return grid->domain().kind() == DomainKind::disk; }

// exp(-i 2 pi m / n) with the phase reduced mod n so that large products
// j*k keep full accuracy.
std::vector<std::complex<double>> twiddles(int n) {
  std::vector<std::complex<double>> w(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) w[static_cast<std::size_t>(m)] = std::polar(1.0, -kTwoPi * m / n);
  return w;
}

int fft_mode(int i, int n) { return i <= n / 2 ? i : i - n; }

}  // namespace

int Spectrum::mode(int i) const {
  if (!is_circle(grid)) return 0;
  return fft_mode(i, size());
}

double Spectrum::eigenvalue(int i) const {
  if (!is_circle(grid)) return 0.0;
  const double k = mode(i);
  const double r = grid->domain().radius();
  return k * k / (r * r);
}

Spectrum to_spectrum(const BoundaryField& field) {
  const int n = field.size();
  Spectrum out{field.grid, std::vector<std::complex<double>>(static_cast<std::size_t>(n))};
  if (!is_circle(field.grid)) {
    for (int i = 0; i < n; ++i) out.coeffs[static_cast<std::size_t>(i)] = field[i];
    return out;
  }
  const auto w = twiddles(n);
  const double scale = std::sqrt(kTwoPi * field.grid->domain().radius()) / n;
  for (int k = 0; k < n; ++k) {
    std::complex<double> acc = 0.0;
    for (int j = 0; j < n; ++j) acc += field[j] * w[static_cast<std::size_t>((static_cast<long>(j) * k) % n)];
    out.coeffs[static_cast<std::size_t>(k)] = scale * acc;
  }
  // The unmatched Nyquist mode is kept real.
  out.coeffs[static_cast<std::size_t>(n / 2)].imag(0.0);
  return out;
}

BoundaryField from_spectrum(const Spectrum& spec) {
  const int n = spec.size();
  BoundaryField out = BoundaryField::zeros(spec.grid);
  if (!is_circle(spec.grid)) {
    for (int i = 0; i < n; ++i) out[i] = spec.coeffs[static_cast<std::size_t>(i)].real();
    return out;
  }
  const auto w = twiddles(n);
  const double scale = 1.0 / std::sqrt(kTwoPi * spec.grid->domain().radius());
  for (int j = 0; j < n; ++j) {
    std::complex<double> acc = 0.0;
    for (int k = 0; k < n; ++k) {
      // conj of exp(-i...) gives exp(+i 2 pi j k / n)
      acc += spec.coeffs[static_cast<std::size_t>(k)] *
             std::conj(w[static_cast<std::size_t>((static_cast<long>(j) * k) % n)]);
    }
    out[j] = scale * acc.real();
  }
  return out;
}

Spectrum apply_M_power(const Spectrum& spec, double t) {
  Spectrum out = spec;
  if (t == 0.0 || !is_circle(spec.grid)) return out;
  for (int i = 0; i < out.size(); ++i) out.coeffs[static_cast<std::size_t>(i)] *= std::pow(1.0 + spec.eigenvalue(i), t);
  return out;
}

BoundaryField apply_M_power(const BoundaryField& field, double t) {
  if (t == 0.0 || !is_circle(field.grid)) return field;
  return from_spectrum(apply_M_power(to_spectrum(field), t));
}

double sobolev_inner(const Spectrum& f, const Spectrum& g, double s) {
  if (!f.grid || !g.grid || !f.grid->same_as(*g.grid) || f.size() != g.size()) {
    throw ContractError("sobolev_inner: spectra live on different grids");
  }
  double sum = 0.0;
  for (int i = 0; i < f.size(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    const double weight = s == 0.0 ? 1.0 : std::pow(1.0 + f.eigenvalue(i), s);
    sum += weight * (f.coeffs[k] * std::conj(g.coeffs[k])).real();
  }
  return sum;
}

double sobolev_inner(const BoundaryField& f, const BoundaryField& g, double s) {
  require_same_grid(f, g);
  return sobolev_inner(to_spectrum(f), to_spectrum(g), s);
}

double boundary_integrate(const BoundaryField& field) {
  const auto weights = field.grid->weights();
  double sum = 0.0;
  for (int i = 0; i < field.size(); ++i) sum += weights[static_cast<std::size_t>(i)] * field[i];
  return sum;
}

double boundary_pairing(const BoundaryField& f, const BoundaryField& g) {
  require_same_grid(f, g);
  const auto weights = f.grid->weights();
  double sum = 0.0;
  for (int i = 0; i < f.size(); ++i) sum += weights[static_cast<std::size_t>(i)] * f[i] * g[i];
  return sum;
}

double evaluate_interpolant(const Spectrum& spec, double t) {
  if (!is_circle(spec.grid)) throw ContractError("evaluate_interpolant: circle spectra only");
  const int n = spec.size();
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const int k = spec.mode(i);
    const auto c = spec.coeffs[static_cast<std::size_t>(i)];
    if (k == n / 2) {
      sum += c.real() * std::cos(k * t);
    } else {
      sum += (c * std::polar(1.0, k * t)).real();
    }
  }
  return sum / std::sqrt(kTwoPi * spec.grid->domain().radius());
}

BoundaryField resample(const BoundaryField& field, const GridPtr& target) {
  if (!(field.grid->domain() == target->domain())) throw ContractError("resample: domains differ");
  if (!is_circle(target) || field.grid->same_as(*target)) return BoundaryField{target, field.values};
  const Spectrum src = to_spectrum(field);
  const int n = src.size();
  const int m = target->size();
  Spectrum dst{target, std::vector<std::complex<double>>(static_cast<std::size_t>(m))};
  const int kmax = std::min(n, m) / 2;
  for (int i = 0; i < n; ++i) {
    const int k = src.mode(i);
    if (std::abs(k) > kmax) continue;
    auto c = src.coeffs[static_cast<std::size_t>(i)];
    // A Nyquist mode of either grid is split evenly or folded as a cosine.
    if (std::abs(k) == kmax) {
      if (k == n / 2 && m > n) {
        dst.coeffs[static_cast<std::size_t>(k)] += 0.5 * c;
        dst.coeffs[static_cast<std::size_t>(m - k)] += 0.5 * c;
        continue;
      }
      if (m < n) {
        dst.coeffs[static_cast<std::size_t>(m / 2)] += std::complex<double>(c.real(), 0.0);
        continue;
      }
    }
    dst.coeffs[static_cast<std::size_t>(k >= 0 ? k : m + k)] += c;
  }
  return from_spectrum(dst);
}

}  // namespace kernel_lab
