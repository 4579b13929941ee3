// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The risvc Authors
#include "risvc/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "risvc/errors.hpp"

namespace risvc::quad {
namespace {

// Kronrod abscissae (descending, last is the centre) and weights; every odd
// index is also a 7-point Gauss node.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  double abs_value;
};

struct ByError {
  bool operator()(const Segment& lhs, const Segment& rhs) const {
    if (lhs.error != rhs.error) return lhs.error < rhs.error;
    return lhs.a > rhs.a;  // deterministic tie-break
  }
};

double checked(const Integrand& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) {
    throw NumericError("quadrature: integrand not finite at x = " + std::to_string(x));
  }
  return y;
}

Segment gauss_kronrod(const Integrand& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = checked(f, centre);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  double abs_sum = std::abs(kronrod);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = checked(f, centre - dx);
    const double f2 = checked(f, centre + dx);
    kronrod += kWgk[j] * (f1 + f2);
    abs_sum += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  Segment s{a, b, kronrod * half, std::abs((kronrod - gauss) * half), abs_sum * std::abs(half)};
  return s;
}

std::vector<double> split_points(double a, double b, std::span<const double> breaks) {
  std::vector<double> pts{a};
  std::vector<double> inner;
  for (double x : breaks) {
    if (std::isfinite(x) && x > a && x < b) inner.push_back(x);
  }
  std::sort(inner.begin(), inner.end());
  inner.erase(std::unique(inner.begin(), inner.end()), inner.end());
  pts.insert(pts.end(), inner.begin(), inner.end());
  pts.push_back(b);
  return pts;
}

}  // namespace

Result integrate(const Integrand& f, double a, double b, std::span<const double> breaks,
                 const Options& opt) {
  if (!(std::isfinite(a) && std::isfinite(b))) {
    throw DomainError("quadrature: limits must be finite");
  }
  if (a == b) return {};
  if (a > b) {
    Result r = integrate(f, b, a, breaks, opt);
    r.value = -r.value;
    return r;
  }

  std::priority_queue<Segment, std::vector<Segment>, ByError> heap;
  std::vector<Segment> done;  // segments too narrow to split further
  const auto pts = split_points(a, b, breaks);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) heap.push(gauss_kronrod(f, pts[i], pts[i + 1]));

  auto totals = [&]() {
    std::vector<Segment> all = done;
    auto copy = heap;
    while (!copy.empty()) {
      all.push_back(copy.top());
      copy.pop();
    }
    std::sort(all.begin(), all.end(), [](const Segment& l, const Segment& r) { return l.a < r.a; });
    double value = 0.0, error = 0.0, abs_value = 0.0;
    for (const auto& s : all) {
      value += s.value;
      error += s.error;
      abs_value += s.abs_value;
    }
    return std::array<double, 3>{value, error, abs_value};
  };

  double value = 0.0, error = 0.0, abs_value = 0.0;
  {
    auto t = totals();
    value = t[0];
    error = t[1];
    abs_value = t[2];
  }
  constexpr double kRoundoff = 50.0 * std::numeric_limits<double>::epsilon();
  while (true) {
    const double tol = std::max({opt.abs_tol, opt.rel_tol * std::abs(value), kRoundoff * abs_value});
    if (error <= tol || heap.empty()) break;
    if (heap.size() + done.size() >= opt.max_intervals) {
      throw NumericError("quadrature: no convergence on [" + std::to_string(a) + ", " +
                         std::to_string(b) + "], error " + std::to_string(error) + " > " +
                         std::to_string(tol));
    }
    Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      done.push_back(worst);
      continue;
    }
    Segment left = gauss_kronrod(f, worst.a, mid);
    Segment right = gauss_kronrod(f, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    abs_value += left.abs_value + right.abs_value - worst.abs_value;
    heap.push(left);
    heap.push(right);
  }

  // Re-sum in interval order so the result does not depend on the update path.
  auto t = totals();
  return {t[0], t[1], heap.size() + done.size()};
}

Result integrate_to_infinity(const Integrand& f, double a, std::span<const double> breaks,
                             const Options& opt) {
  double last = a;
  for (double x : breaks) {
    if (std::isfinite(x) && x > last) last = x;
  }
  Result head{};
  if (last > a) head = integrate(f, a, last, breaks, opt);

  const double c = last;
  auto mapped = [&f, c](double t) {
    const double s = 1.0 - t;
    const double x = c + t / s;
    if (!std::isfinite(x)) return 0.0;
    const double y = f(x);
    return y == 0.0 ? 0.0 : y / (s * s);
  };
  // The tail shares the tolerance budget with the head.
  Options tail_opt = opt;
  tail_opt.abs_tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(head.value));
  const Result tail = integrate(mapped, 0.0, 1.0, {}, tail_opt);
  return {head.value + tail.value, head.error + tail.error, head.intervals + tail.intervals};
}

}  // namespace risvc::quad
