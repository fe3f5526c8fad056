// Copyright 2026 The fresneltomo Authors
// SPDX-License-Identifier: Apache-2.0

#include "fresneltomo/detail/numerics.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstdint>
#include <cstring>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace fresneltomo::detail {

namespace {

constexpr double kPi = 3.14159265358979323846;

// FFTW planning is not thread-safe and cached plans execute on shared
// buffers, so one lock serializes every transform.
std::mutex& fft_mutex() {
  static std::mutex m;
  return m;
}

struct PlanEntry {
  fftw_complex* buf = nullptr;
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
};

// Plans for lengths above this are created and destroyed per call; cached
// buffers for every distinct large length would hold too much memory.
constexpr int kCacheMaxLen = 1 << 16;

std::map<int, PlanEntry>& plan_cache() {
  static std::map<int, PlanEntry> cache;
  return cache;
}

PlanEntry& cached_plans(int n) {
  auto& cache = plan_cache();
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  PlanEntry entry;
  entry.buf = fftw_alloc_complex(static_cast<size_t>(n));
  entry.fwd = fftw_plan_dft_1d(n, entry.buf, entry.buf, FFTW_FORWARD,
                               FFTW_ESTIMATE);
  entry.bwd = fftw_plan_dft_1d(n, entry.buf, entry.buf, FFTW_BACKWARD,
                               FFTW_ESTIMATE);
  return cache.emplace(n, entry).first->second;
}

Eigen::VectorXcd transform(const Eigen::VectorXcd& x, int sign) {
  const int n = static_cast<int>(x.size());
  if (n == 0) return {};
  std::lock_guard<std::mutex> lock(fft_mutex());
  Eigen::VectorXcd out(n);
  static_assert(sizeof(fftw_complex) == sizeof(complexd));
  if (n <= kCacheMaxLen) {
    PlanEntry& entry = cached_plans(n);
    std::memcpy(entry.buf, x.data(), sizeof(complexd) * n);
    fftw_execute(sign == FFTW_FORWARD ? entry.fwd : entry.bwd);
    std::memcpy(out.data(), entry.buf, sizeof(complexd) * n);
  } else {
    fftw_complex* buf = fftw_alloc_complex(static_cast<size_t>(n));
    fftw_plan plan = fftw_plan_dft_1d(n, buf, buf, sign, FFTW_ESTIMATE);
    std::memcpy(buf, x.data(), sizeof(complexd) * n);
    fftw_execute(plan);
    std::memcpy(out.data(), buf, sizeof(complexd) * n);
    fftw_destroy_plan(plan);
    fftw_free(buf);
  }
  return out;
}

int next_pow2(int n) {
  int p = 1;
  while (p < n) p <<= 1;
  return p;
}

struct ChirpKey {
  int nfft;
  int count;
  std::uint64_t phi_bits;

  bool operator<(const ChirpKey& o) const {
    return std::tie(nfft, count, phi_bits) <
           std::tie(o.nfft, o.count, o.phi_bits);
  }
};

// Spectrum of the Bluestein chirp v(j) = e^{-i phi j^2 / 2}, laid out
// circularly for j in [-(nfft - count), count - 1]; shared by every input
// length that fits the same FFT size.
const Eigen::VectorXcd& chirp_spectrum(int nfft, int count, double phi) {
  static std::map<ChirpKey, Eigen::VectorXcd> cache;
  ChirpKey key{nfft, count, 0};
  std::memcpy(&key.phi_bits, &phi, sizeof(double));
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(nfft);
  for (int j = 0; j < count; ++j) {
    v(j) = std::polar(1.0, -0.5 * phi * double(j) * double(j));
  }
  const int neg = nfft - count;
  for (int j = 1; j <= neg; ++j) {
    v(nfft - j) = std::polar(1.0, -0.5 * phi * double(j) * double(j));
  }

  // Inline forward FFT on a scratch buffer (the fft_mutex is already held).
  fftw_complex* buf = fftw_alloc_complex(static_cast<size_t>(nfft));
  fftw_plan plan =
      fftw_plan_dft_1d(nfft, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
  std::memcpy(buf, v.data(), sizeof(complexd) * nfft);
  fftw_execute(plan);
  std::memcpy(v.data(), buf, sizeof(complexd) * nfft);
  fftw_destroy_plan(plan);
  fftw_free(buf);
  return cache.emplace(key, std::move(v)).first->second;
}

}  // namespace

Eigen::VectorXcd fft(const Eigen::VectorXcd& x) {
  return transform(x, FFTW_FORWARD);
}

Eigen::VectorXcd ifft(const Eigen::VectorXcd& x) {
  Eigen::VectorXcd out = transform(x, FFTW_BACKWARD);
  if (out.size() > 0) out /= double(out.size());
  return out;
}

Eigen::VectorXcd chirp_sum(const Eigen::VectorXcd& x, int count, double phi) {
  if (count <= 0) return {};
  const int len = static_cast<int>(x.size());
  if (len == 0) return Eigen::VectorXcd::Zero(count);
  const int nfft = next_pow2(len + count - 1);

  Eigen::VectorXcd u = Eigen::VectorXcd::Zero(nfft);
  for (int k = 0; k < len; ++k) {
    u(k) = x(k) * std::polar(1.0, 0.5 * phi * double(k) * double(k));
  }

  std::lock_guard<std::mutex> lock(fft_mutex());
  const Eigen::VectorXcd& vhat = chirp_spectrum(nfft, count, phi);

  PlanEntry* entry = nullptr;
  fftw_complex* buf = nullptr;
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
  if (nfft <= kCacheMaxLen) {
    entry = &cached_plans(nfft);
    buf = entry->buf;
    fwd = entry->fwd;
    bwd = entry->bwd;
  } else {
    buf = fftw_alloc_complex(static_cast<size_t>(nfft));
    fwd = fftw_plan_dft_1d(nfft, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
    bwd = fftw_plan_dft_1d(nfft, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
  }

  std::memcpy(buf, u.data(), sizeof(complexd) * nfft);
  fftw_execute(fwd);
  auto* bc = reinterpret_cast<complexd*>(buf);
  for (int j = 0; j < nfft; ++j) bc[j] *= vhat(j);
  fftw_execute(bwd);

  Eigen::VectorXcd out(count);
  for (int q = 0; q < count; ++q) {
    out(q) = bc[q] / double(nfft) *
             std::polar(1.0, 0.5 * phi * double(q) * double(q));
  }
  if (entry == nullptr) {
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
    fftw_free(buf);
  }
  return out;
}

Eigen::VectorXcd upsample_fft(const Eigen::VectorXcd& x, int factor) {
  if (factor < 1) throw std::invalid_argument("upsample_fft: factor < 1");
  if (factor == 1) return x;
  const int n = static_cast<int>(x.size());
  const Eigen::VectorXcd spec = fft(x);
  Eigen::VectorXcd padded = Eigen::VectorXcd::Zero(n * factor);
  const int h = n / 2;
  if (n % 2 == 0) {
    padded.head(h) = spec.head(h);
    padded(h) = 0.5 * spec(h);
    padded(n * factor - h) = 0.5 * spec(h);
    padded.tail(h - 1) = spec.tail(h - 1);
  } else {
    padded.head(h + 1) = spec.head(h + 1);
    padded.tail(h) = spec.tail(h);
  }
  return ifft(padded) * double(factor);
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> gauss_legendre(int count, double a,
                                                           double b) {
  if (count < 1) throw std::invalid_argument("gauss_legendre: count < 1");
  Eigen::VectorXd x(count), w(count);
  const double xm = 0.5 * (b + a);
  const double xl = 0.5 * (b - a);
  const int half = (count + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (count + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < count; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = count * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    x(i) = xm - xl * z;
    x(count - 1 - i) = xm + xl * z;
    w(i) = 2.0 * xl / ((1.0 - z * z) * pp * pp);
    w(count - 1 - i) = w(i);
  }
  return {std::move(x), std::move(w)};
}

double bilinear_at(const Eigen::MatrixXd& w, double extent, double dx,
                   double x, double p) {
  const int n = static_cast<int>(w.rows());
  const double tx = (x + extent) / dx;
  const double tp = (p + extent) / dx;
  const int ix = static_cast<int>(std::floor(tx));
  const int ip = static_cast<int>(std::floor(tp));
  if (ix < 0 || ix > n - 2 || ip < 0 || ip > n - 2) return 0.0;
  const double u = tx - ix;
  const double v = tp - ip;
  return w(ix, ip) * (1.0 - u) * (1.0 - v) + w(ix + 1, ip) * u * (1.0 - v) +
         w(ix, ip + 1) * (1.0 - u) * v + w(ix + 1, ip + 1) * u * v;
}

namespace {

inline void lagrange4(double u, double out[4]) {
  out[0] = -u * (u - 1.0) * (u - 2.0) / 6.0;
  out[1] = (u + 1.0) * (u - 1.0) * (u - 2.0) / 2.0;
  out[2] = -(u + 1.0) * u * (u - 2.0) / 2.0;
  out[3] = (u + 1.0) * u * (u - 1.0) / 6.0;
}

}  // namespace

double bicubic_at(const Eigen::MatrixXd& w, double extent, double dx, double x,
                  double p) {
  const int n = static_cast<int>(w.rows());
  const double tx = (x + extent) / dx;
  const double tp = (p + extent) / dx;
  const int ix = static_cast<int>(std::floor(tx));
  const int ip = static_cast<int>(std::floor(tp));
  if (ix < 1 || ix > n - 3 || ip < 1 || ip > n - 3) {
    return bilinear_at(w, extent, dx, x, p);
  }
  const double u = tx - ix;
  const double v = tp - ip;
  double wu[4], wv[4];
  lagrange4(u, wu);
  lagrange4(v, wv);
  double acc = 0.0;
  for (int a = 0; a < 4; ++a) {
    double row = 0.0;
    for (int b = 0; b < 4; ++b) {
      row += wv[b] * w(ix - 1 + a, ip - 1 + b);
    }
    acc += wu[a] * row;
  }
  return acc;
}

complexd cubic_interp(const Eigen::VectorXcd& y, double t) {
  const int n = static_cast<int>(y.size());
  const int i = static_cast<int>(std::floor(t));
  if (i < 0 || i >= n - 1) {
    if (std::abs(t - (n - 1)) < 1e-9) return y(n - 1);
    return complexd(0.0, 0.0);
  }
  const double u = t - i;
  const complexd f0 = (i - 1 >= 0) ? y(i - 1) : complexd(0.0, 0.0);
  const complexd f1 = y(i);
  const complexd f2 = (i + 1 < n) ? y(i + 1) : complexd(0.0, 0.0);
  const complexd f3 = (i + 2 < n) ? y(i + 2) : complexd(0.0, 0.0);
  double c[4];
  lagrange4(u, c);
  return f0 * c[0] + f1 * c[1] + f2 * c[2] + f3 * c[3];
}

}  // namespace fresneltomo::detail
