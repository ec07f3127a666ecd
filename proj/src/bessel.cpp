// Integer-order Bessel functions of the first kind by Miller's backward
// recurrence, normalized with J_0 + 2 sum_k J_2k = 1.

#include <algorithm>
#include <cmath>
#include <string>

#include "rabiqpt/error.hpp"
#include "rabiqpt/modulation.hpp"

namespace rabiqpt {

namespace {

constexpr int max_order = 200;
constexpr double max_argument = 50.0;
constexpr double small_argument = 1e-6;
constexpr double big = 1e250;
constexpr double big_inv = 1e-250;

void check_envelope(int n, double x) {
  if (std::abs(n) > max_order || !(x >= 0.0) || !(x <= max_argument)) {
    throw OutOfEnvelope("bessel_j: (n=" + std::to_string(n) +
                        ", x=" + std::to_string(x) +
                        ") outside |n| <= 200, 0 <= x <= 50");
  }
}

// Two-term power series, exact to double precision for x <= 1e-6.
double small_x_series(int n, double x) {
  const double h = 0.5 * x;
  double lead = 1.0;
  for (int k = 1; k <= n; ++k) lead *= h / k;
  return lead * (1.0 - h * h / (n + 1));
}

void miller(int n_max, double x, std::vector<double>& out) {
  out.assign(static_cast<std::size_t>(n_max) + 1, 0.0);
  if (x == 0.0) {
    out[0] = 1.0;
    return;
  }
  if (x < small_argument) {
    for (int k = 0; k <= n_max; ++k) out[k] = small_x_series(k, x);
    return;
  }

  // Start far enough above both n_max and x that J_start / J_n is below
  // double precision.
  const double reach = std::max(static_cast<double>(n_max), std::ceil(x));
  int start = static_cast<int>(reach) + 30 + static_cast<int>(std::sqrt(160.0 * reach));
  start += start % 2;

  double next = 0.0;  // j_{k+1}
  double cur = 1e-30; // j_k
  double norm_sum = 0.0;
  const double two_over_x = 2.0 / x;
  for (int k = start; k > 0; --k) {
    if (k <= n_max) out[k] = cur;
    if (k % 2 == 0) norm_sum += 2.0 * cur;
    const double prev = k * two_over_x * cur - next;
    next = cur;
    cur = prev;
    if (std::abs(cur) > big) {
      cur *= big_inv;
      next *= big_inv;
      norm_sum *= big_inv;
      for (int j = k; j <= n_max; ++j) out[j] *= big_inv;
    }
  }
  out[0] = cur;
  norm_sum += cur;
  for (auto& v : out) v /= norm_sum;
}

}  // namespace

std::vector<double> bessel_j_orders(int n_max, double x) {
  check_envelope(n_max, x);
  if (n_max < 0) throw OutOfEnvelope("bessel_j_orders: n_max must be >= 0");
  std::vector<double> out;
  miller(n_max, x, out);
  return out;
}

double bessel_j(int n, double x) {
  check_envelope(n, x);
  const int order = std::abs(n);
  std::vector<double> values;
  miller(order, x, values);
  const double j = values[order];
  return (n < 0 && order % 2 == 1) ? -j : j;
}

}  // namespace rabiqpt
