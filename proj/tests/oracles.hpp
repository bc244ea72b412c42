#pragma once

// Independent reference computations for the tests. Plain double-precision
// direct sums and products, written without any library code.

#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

inline cplx e(cplx w) { return std::exp(cplx(0, 2 * M_PI) * w); }

// sum over k in j/2M + Z of sign^{k - j/2M} e(M k^2 tau + M k z), |n| <= 60
inline cplx theta(double j, double M, cplx tau, cplx z, bool alternating = false) {
  cplx s = 0;
  for (int n = -60; n <= 60; ++n) {
    double k = j / (2 * M) + n;
    cplx t = e(M * k * k * tau + M * k * z);
    s += (alternating && (n % 2 != 0)) ? -t : t;
  }
  return s;
}

// e(tau/24) prod_{n>=1} (1 - e(n tau))
inline cplx eta(cplx tau) {
  cplx p = e(tau / 24.0);
  for (int n = 1; n < 2000; ++n) p *= 1.0 - e(double(n) * tau);
  return p;
}

// i sum (-1)^n q^{(n+1/2)^2/2} x^{n+1/2}
inline cplx vartheta11(cplx tau, cplx z) {
  cplx s = 0;
  for (int n = -60; n <= 60; ++n) {
    double k = n + 0.5;
    cplx t = e(k * k / 2 * tau + k * z);
    s += (n % 2 != 0) ? -t : t;
  }
  return cplx(0, 1) * s;
}

// sum_r sign^r e(m r (z1+z2) + s z1) q^{m r^2 + s r} / (1 - e(z1) q^r), |r| <= 80
inline cplx phi1(double m, double s, cplx tau, cplx z1, cplx z2, bool alternating = false) {
  cplx acc = 0;
  for (int r = -80; r <= 80; ++r) {
    cplx t = e(m * r * (z1 + z2) + s * z1 + (m * r * r + s * r) * tau) / (1.0 - e(z1 + double(r) * tau));
    acc += (alternating && (r % 2 != 0)) ? -t : t;
  }
  return acc;
}

inline cplx phi2(double m, double s, cplx tau, cplx z1, cplx z2, bool alternating = false) {
  cplx acc = 0;
  for (int r = -80; r <= 80; ++r) {
    cplx t = e(-m * r * (z1 + z2) - s * z2 + (m * r * r + s * r) * tau) / (1.0 - e(-z2 + double(r) * tau));
    acc += (alternating && (r % 2 != 0)) ? -t : t;
  }
  return acc;
}

// integer coefficients of prod_{n=1}^{N-1} (1 - q^{step n}) below q^N
inline std::vector<long> euler(int N, int step = 1) {
  std::vector<long> c(N, 0);
  c[0] = 1;
  for (int n = 1; step * n < N; ++n)
    for (int i = N - 1; i >= step * n; --i) c[i] -= c[i - step * n];
  return c;
}

// partition numbers p(0..N-1)
inline std::vector<long> partitions(int N) {
  std::vector<long> p(N, 0);
  p[0] = 1;
  for (int part = 1; part < N; ++part)
    for (int i = part; i < N; ++i) p[i] += p[i - part];
  return p;
}

}  // namespace oracle
