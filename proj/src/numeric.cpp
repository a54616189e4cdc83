#include "tact/numeric.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace tact {

double log_factorial(int n) {
  if (n < 0) throw std::invalid_argument("log_factorial: negative argument");
  static std::vector<double> table{0.0, 0.0};
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  while (static_cast<int>(table.size()) <= n)
    table.push_back(table.back() + std::log(static_cast<double>(table.size())));
  return table[static_cast<std::size_t>(n)];
}

double log_binomial(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("log_binomial: k out of range");
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

std::pair<VectorXd, VectorXd> gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need n >= 1");
  VectorXd nodes(n), weights(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi initial guess, then Newton on P_n(x).
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes(i) = -x;
    nodes(n - 1 - i) = x;
    weights(i) = w;
    weights(n - 1 - i) = w;
  }
  if (n % 2 == 1) nodes(n / 2) = 0.0;
  return {nodes, weights};
}

std::vector<double> linspace(double lo, double hi, int count) {
  if (count < 2) throw std::invalid_argument("linspace: need count >= 2");
  std::vector<double> out(static_cast<std::size_t>(count));
  const double step = (hi - lo) / (count - 1);
  for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = lo + step * i;
  out.back() = hi;
  return out;
}

Extremum refine_maximum(const std::function<double(double)>& f, double a,
                        double b, double c, double x_tol) {
  if (!(a < b && b < c)) throw std::invalid_argument("refine_maximum: bad bracket");
  double fb = f(b);
  const double golden = 0.3819660112501051;
  for (int iter = 0; iter < 100 && (c - a) > x_tol; ++iter) {
    const double fa = f(a), fc = f(c);
    // Parabola through (a,fa),(b,fb),(c,fc); vertex may degenerate.
    const double d1 = (b - a) * (fb - fc);
    const double d2 = (b - c) * (fb - fa);
    double x;
    const double denom = 2.0 * (d1 - d2);
    if (std::abs(denom) > 1e-300) {
      x = b - ((b - a) * d1 - (b - c) * d2) / denom;
    } else {
      x = b;
    }
    const double lo = a + 0.1 * (b - a), hi = c - 0.1 * (c - b);
    if (!(x > lo && x < hi) || x == b)
      x = (c - b > b - a) ? b + golden * (c - b) : b - golden * (b - a);
    const double fx = f(x);
    if (fx > fb) {
      if (x > b) a = b; else c = b;
      b = x;
      fb = fx;
    } else {
      if (x > b) c = x; else a = x;
    }
  }
  return {b, fb};
}

int first_local_max(const std::vector<double>& values) {
  for (std::size_t i = 1; i + 1 < values.size(); ++i)
    if (values[i] >= values[i - 1] && values[i] > values[i + 1]) return static_cast<int>(i);
  return -1;
}

int nth_local_min(const std::vector<double>& values, int nth) {
  int found = 0;
  for (std::size_t i = 1; i + 1 < values.size(); ++i) {
    if (values[i] <= values[i - 1] && values[i] < values[i + 1]) {
      if (++found == nth) return static_cast<int>(i);
    }
  }
  return -1;
}

int first_local_min(const std::vector<double>& values) { return nth_local_min(values, 1); }

}  // namespace tact
