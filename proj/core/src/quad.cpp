#include "ineqlab/quad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "ineqlab/errors.hpp"

namespace ineqlab::quad {

namespace {

// QUADPACK qk21 abscissae and weights. Odd indices of kXgk are the 10-point
// Gauss nodes.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000,
};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208836040440, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  bool splittable;

  bool operator<(const Segment& other) const { return error < other.error; }
};

double checked_eval(const Integrand& f, double x) {
  const double v = f(x);
  if (!std::isfinite(v)) {
    throw QuadratureError("integrand returned a non-finite value at x = " + std::to_string(x));
  }
  return v;
}

Segment gauss_kronrod21(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double abs_half = std::abs(half);

  const double fc = checked_eval(f, center);
  double resg = 0.0;
  double resk = kWgk[10] * fc;
  double resabs = std::abs(resk);
  std::array<double, 10> fv1{};
  std::array<double, 10> fv2{};

  for (int j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = checked_eval(f, center - dx);
    const double f2 = checked_eval(f, center + dx);
    fv1[j] = f1;
    fv2[j] = f2;
    resk += kWgk[j] * (f1 + f2);
    resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }

  const double reskh = 0.5 * resk;
  double resasc = kWgk[10] * std::abs(fc - reskh);
  for (int j = 0; j < 10; ++j) {
    resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
  }

  const double result = resk * half;
  resabs *= abs_half;
  resasc *= abs_half;
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) {
    err = std::max(50.0 * eps * resabs, err);
  }

  const double mid_scale = std::max(std::abs(a), std::abs(b));
  const bool splittable = abs_half > 100.0 * eps * mid_scale && abs_half > 1e3 * std::numeric_limits<double>::min();
  return {a, b, result, err, splittable};
}

}  // namespace

QuadResult integrate_finite(const Integrand& f, double a, double b, Tolerance tol,
                            std::span<const double> breakpoints) {
  if (!(a < b)) {
    throw DomainError("integrate_finite requires a < b");
  }

  std::vector<double> cuts{a};
  for (double p : breakpoints) {
    if (p > a && p < b) cuts.push_back(p);
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::priority_queue<Segment> heap;
  std::vector<Segment> frozen;
  double total = 0.0;
  double total_err = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Segment s = gauss_kronrod21(f, cuts[i], cuts[i + 1]);
    total += s.value;
    total_err += s.error;
    heap.push(s);
  }
  int intervals = static_cast<int>(heap.size());
  const int budget = std::max(tol.max_intervals, intervals);

  auto target = [&] { return std::max(tol.abs, tol.rel * std::abs(total)); };

  while (total_err > target() && intervals < budget && !heap.empty()) {
    Segment worst = heap.top();
    heap.pop();
    if (!worst.splittable) {
      frozen.push_back(worst);
      continue;
    }
    const double mid = 0.5 * (worst.a + worst.b);
    Segment left = gauss_kronrod21(f, worst.a, mid);
    Segment right = gauss_kronrod21(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++intervals;
  }

  // Re-sum to shed the drift of the running updates.
  double value = 0.0;
  double err = 0.0;
  for (const auto& s : frozen) {
    value += s.value;
    err += s.error;
  }
  while (!heap.empty()) {
    value += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }

  QuadResult r;
  r.value = value;
  r.abs_error_estimate = err;
  r.subdivisions = intervals;
  r.converged = err <= std::max(tol.abs, tol.rel * std::abs(value));
  return r;
}

QuadResult integrate_halfline(const Integrand& f, Tolerance tol, std::span<const double> breakpoints) {
  std::vector<double> inner;
  std::vector<double> outer;
  for (double p : breakpoints) {
    if (p > 0.0 && p < 1.0) inner.push_back(p);
    if (p > 1.0 && std::isfinite(p)) outer.push_back(1.0 / p);
  }

  const QuadResult head = integrate_finite(f, 0.0, 1.0, tol, inner);
  auto mapped = [&f](double u) {
    const double t = 1.0 / u;
    const double v = f(t);
    // Keep 0 * inf from turning a vanishing tail into NaN.
    return v == 0.0 ? 0.0 : v * t * t;
  };
  const QuadResult tail = integrate_finite(mapped, 0.0, 1.0, tol, outer);

  QuadResult r;
  r.value = head.value + tail.value;
  r.abs_error_estimate = head.abs_error_estimate + tail.abs_error_estimate;
  r.subdivisions = head.subdivisions + tail.subdivisions;
  r.converged = head.converged && tail.converged;
  return r;
}

double value_or_throw(const QuadResult& r, const char* what) {
  if (!r.converged) {
    throw QuadratureError(std::string(what) + ": quadrature did not converge (value " +
                          std::to_string(r.value) + ", error estimate " +
                          std::to_string(r.abs_error_estimate) + ")");
  }
  return r.value;
}

}  // namespace ineqlab::quad
