#include "sqed/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>

#include "sqed/errors.hpp"

namespace sqed {

namespace {

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
struct GaussRule {
  std::vector<double> x, w;
};

GaussRule make_gauss_rule(int n) {
  GaussRule rule;
  rule.x.resize(n);
  rule.w.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.x[i] = -x;
    rule.x[n - 1 - i] = x;
    rule.w[i] = rule.w[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

const GaussRule& rule_lo() {
  static const GaussRule r = make_gauss_rule(15);
  return r;
}
const GaussRule& rule_hi() {
  static const GaussRule r = make_gauss_rule(31);
  return r;
}

template <typename T, typename F>
void eval_panel(const F& f, double a, double b, T& value, double& error) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  T lo{};
  for (std::size_t i = 0; i < rule_lo().x.size(); ++i)
    lo += rule_lo().w[i] * f(mid + half * rule_lo().x[i]);
  T hi{};
  for (std::size_t i = 0; i < rule_hi().x.size(); ++i)
    hi += rule_hi().w[i] * f(mid + half * rule_hi().x[i]);
  value = half * hi;
  error = std::abs(half * (hi - lo));
}

struct Panel {
  double a, b, error;
  long id;
};

struct PanelOrder {
  bool operator()(const Panel& p, const Panel& q) const {
    if (p.error != q.error) return p.error < q.error;
    return p.id > q.id; // deterministic tie-break: older panel first
  }
};

template <typename T, typename F>
T adaptive(const F& f, std::span<const double> breakpoints,
           const QuadratureSpec& spec, double* error_estimate) {
  std::priority_queue<Panel, std::vector<Panel>, PanelOrder> queue;
  // Panel values keyed by id so the final reduction is in creation order.
  std::vector<T> values;
  std::vector<double> errors;
  std::vector<bool> alive;

  long next_id = 0;
  T running_total{};
  double total_err = 0.0;
  auto push_panel = [&](double a, double b) {
    T v;
    double e;
    eval_panel<T>(f, a, b, v, e);
    values.push_back(v);
    errors.push_back(e);
    alive.push_back(true);
    running_total += v;
    total_err += e;
    queue.push(Panel{a, b, e, next_id++});
  };

  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
    push_panel(breakpoints[i], breakpoints[i + 1]);

  int splits = 0;
  while (total_err >
         std::max(spec.rel_tol * std::abs(running_total), spec.abs_tol)) {
    if (splits >= spec.max_subdivisions)
      throw NonConvergence("integrate: subdivision budget exhausted");

    const Panel worst = queue.top();
    queue.pop();
    if (!alive[worst.id]) continue; // stale entry
    alive[worst.id] = false;
    running_total -= values[worst.id];
    total_err -= errors[worst.id];
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b)
      throw NonConvergence("integrate: panel width underflow");
    push_panel(worst.a, mid);
    push_panel(mid, worst.b);
    ++splits;
  }

  // Deterministic pairwise reduction over live panels in creation order.
  std::vector<T> live;
  double err = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (alive[i]) {
      live.push_back(values[i]);
      err += errors[i];
    }
  if (error_estimate) *error_estimate = err;

  std::function<T(std::size_t, std::size_t)> reduce =
      [&](std::size_t lo, std::size_t n) -> T {
    if (n == 0) return T{};
    if (n == 1) return live[lo];
    const std::size_t h = n / 2;
    return reduce(lo, h) + reduce(lo + h, n - h);
  };
  return reduce(0, live.size());
}

} // namespace

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0)) throw ConfigError("QuadratureSpec: rel_tol must be > 0");
  if (!(abs_tol > 0.0)) throw ConfigError("QuadratureSpec: abs_tol must be > 0");
  if (max_subdivisions < 1)
    throw ConfigError("QuadratureSpec: max_subdivisions must be >= 1");
  if (!(omega_max > 0.0))
    throw ConfigError("QuadratureSpec: omega_max must be > 0");
  if (!(tail_fraction > 0.0))
    throw ConfigError("QuadratureSpec: tail_fraction must be > 0");
  if (epsilon_ladder.empty())
    throw ConfigError("QuadratureSpec: epsilon_ladder must not be empty");
  double prev = std::numeric_limits<double>::infinity();
  for (double e : epsilon_ladder) {
    if (!(e > 0.0) || !(e < prev))
      throw ConfigError(
          "QuadratureSpec: epsilon_ladder must be strictly decreasing and positive");
    prev = e;
  }
}

double integrate_finite(const std::function<double(double)>& f, double a,
                        double b, const QuadratureSpec& spec,
                        double* error_estimate) {
  const double pts[2] = {a, b};
  return adaptive<double>(f, pts, spec, error_estimate);
}

std::complex<double> integrate_finite_complex(
    const std::function<std::complex<double>(double)>& f,
    std::span<const double> breakpoints, const QuadratureSpec& spec,
    double* error_estimate) {
  return adaptive<std::complex<double>>(f, breakpoints, spec, error_estimate);
}

IntegralResult integrate_semi_infinite(const std::function<double(double)>& f,
                                       const QuadratureSpec& spec) {
  spec.validate();
  IntegralResult out;

  double err0 = 0.0;
  out.value = integrate_finite(f, 0.0, spec.omega_max, spec, &err0);
  out.error_estimate = err0;
  out.cutoff = spec.omega_max;
  if (spec.tail_policy == TailPolicy::Fixed) return out;

  // Extend by doubling blocks until the last block is negligible.  The
  // block magnitudes must eventually shrink; flat blocks signal a
  // log-divergent (or slower) tail.
  constexpr int max_blocks = 48;
  double prev_block = std::numeric_limits<double>::infinity();
  int flat_count = 0;
  for (int j = 0; j < max_blocks; ++j) {
    const double a = out.cutoff;
    const double b = 2.0 * a;
    double block_err = 0.0;
    const double block = integrate_finite(f, a, b, spec, &block_err);
    out.value += block;
    out.error_estimate += block_err;
    out.cutoff = b;

    const double mag = std::abs(block);
    if (mag <= std::max(spec.tail_fraction * spec.rel_tol * std::abs(out.value),
                        spec.abs_tol))
      return out;
    if (mag >= 0.75 * prev_block) {
      if (++flat_count >= 3)
        throw DivergentTail(
            "integrate_semi_infinite: tail blocks are not shrinking");
    } else {
      flat_count = 0;
    }
    prev_block = mag;
  }
  throw DivergentTail("integrate_semi_infinite: tail did not converge within "
                      "the doubling budget");
}

double pairwise_sum(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n == 0) return 0.0;
  if (n <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise_sum(values.first(h)) + pairwise_sum(values.subspan(h));
}

} // namespace sqed
