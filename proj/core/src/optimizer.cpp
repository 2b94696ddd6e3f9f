#include "h2vqe/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "h2vqe/error.hpp"
#include "h2vqe/random.hpp"

namespace h2vqe {
namespace {

using Vector = std::vector<double>;

// Bookkeeping shared by the optimizers: best point tracking and the trace.
class Tracker {
 public:
  explicit Tracker(Objective& f, bool record_all) : f_(f), record_all_(record_all) {}

  double eval(std::span<const double> x) {
    const auto est = f_.evaluate(x);
    if (record_all_) record(x, est);
    return est.value;
  }

  void record(std::span<const double> x, const ExpectationEstimate& est) {
    IterationRecord r{f_.evaluations(), Vector(x.begin(), x.end()), est.value, est.stddev};
    if (result.trace.empty() || est.value < result.best_value) {
      result.best_value = est.value;
      result.best_stddev = est.stddev;
      result.best_parameters = r.parameters;
    }
    result.trace.push_back(std::move(r));
  }

  OptResult finish() {
    result.n_evaluations = f_.evaluations();
    return std::move(result);
  }

  Objective& objective() { return f_; }
  OptResult result;

 private:
  Objective& f_;
  bool record_all_;
};

void require_iterations(int max_iter) {
  if (max_iter < 1) throw Error(ErrorKind::configuration, "max_iter must be >= 1");
}

void require_start(const Objective& f, std::span<const double> x0) {
  if (x0.size() != f.arity())
    throw Error(ErrorKind::dimension, "start point has " + std::to_string(x0.size()) + " components, objective " +
                                          std::to_string(f.arity()));
  if (f.arity() == 0) throw Error(ErrorKind::configuration, "objective has no parameters");
}

double dot(const Vector& a, const Vector& b) { return std::inner_product(a.begin(), a.end(), b.begin(), 0.0); }

double inf_norm(const Vector& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

std::string_view to_string(OptimizerKind k) {
  switch (k) {
    case OptimizerKind::spsa: return "spsa";
    case OptimizerKind::nelder_mead: return "nelder_mead";
    case OptimizerKind::bfgs: return "bfgs";
  }
  return "unknown";
}

OptimizerKind parse_optimizer(std::string_view name) {
  if (name == "spsa") return OptimizerKind::spsa;
  if (name == "nelder_mead" || name == "cobyla") return OptimizerKind::nelder_mead;
  if (name == "bfgs" || name == "slsqp" || name == "l_bfgs_b") return OptimizerKind::bfgs;
  throw Error(ErrorKind::configuration, "unknown optimizer '" + std::string(name) + "'");
}

Objective::Objective(std::size_t arity, Function f, EvaluationCallback callback)
    : arity_(arity), f_(std::move(f)), callback_(std::move(callback)) {}

ExpectationEstimate Objective::evaluate(std::span<const double> x) {
  if (x.size() != arity_)
    throw Error(ErrorKind::dimension,
                "objective expects " + std::to_string(arity_) + " parameters, got " + std::to_string(x.size()));
  ++count_;
  const auto est = f_(x, count_);
  if (callback_) callback_(IterationRecord{count_, Vector(x.begin(), x.end()), est.value, est.stddev});
  return est;
}

OptResult nelder_mead(Objective& f, std::span<const double> x0, const NelderMeadOptions& o) {
  require_iterations(o.max_iter);
  require_start(f, x0);
  const std::size_t n = f.arity();
  Tracker t(f, true);

  std::vector<Vector> simplex(n + 1, Vector(x0.begin(), x0.end()));
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += o.initial_step;
  Vector values(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    values[i] = t.eval(simplex[i]);
    if (!std::isfinite(values[i])) {
      t.result.aborted = true;
      return t.finish();
    }
  }

  std::vector<std::size_t> order(n + 1);
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] < values[b]; });
    std::vector<Vector> s2;
    Vector v2;
    for (auto i : order) {
      s2.push_back(simplex[i]);
      v2.push_back(values[i]);
    }
    simplex = std::move(s2);
    values = std::move(v2);
  };
  auto point = [&](const Vector& centroid, double coeff) {
    Vector p(n);
    for (std::size_t k = 0; k < n; ++k) p[k] = centroid[k] + coeff * (simplex[n][k] - centroid[k]);
    return p;
  };

  for (int iter = 0; iter < o.max_iter; ++iter) {
    sort_simplex();
    double xspread = 0.0;
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t k = 0; k < n; ++k) xspread = std::max(xspread, std::abs(simplex[i][k] - simplex[0][k]));
    const double fspread = values[n] - values[0];
    if (xspread <= o.xtol && fspread <= o.ftol) {
      t.result.converged = true;
      break;
    }
    t.result.iterations = iter + 1;

    Vector centroid(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[i][k] / static_cast<double>(n);

    const Vector xr = point(centroid, -1.0);
    const double fr = t.eval(xr);
    if (!std::isfinite(fr)) {
      t.result.aborted = true;
      break;
    }
    if (fr < values[0]) {
      const Vector xe = point(centroid, -2.0);
      const double fe = t.eval(xe);
      if (!std::isfinite(fe)) {
        t.result.aborted = true;
        break;
      }
      if (fe < fr) {
        simplex[n] = xe;
        values[n] = fe;
      } else {
        simplex[n] = xr;
        values[n] = fr;
      }
      continue;
    }
    if (fr < values[n - 1]) {
      simplex[n] = xr;
      values[n] = fr;
      continue;
    }
    // Outside contraction when the reflection beats the worst vertex,
    // inside contraction otherwise.
    const bool outside = fr < values[n];
    const Vector xc = point(centroid, outside ? -0.5 : 0.5);
    const double fc = t.eval(xc);
    if (!std::isfinite(fc)) {
      t.result.aborted = true;
      break;
    }
    if (fc < (outside ? fr : values[n])) {
      simplex[n] = xc;
      values[n] = fc;
      continue;
    }
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t k = 0; k < n; ++k) simplex[i][k] = simplex[0][k] + 0.5 * (simplex[i][k] - simplex[0][k]);
      values[i] = t.eval(simplex[i]);
      if (!std::isfinite(values[i])) {
        t.result.aborted = true;
        return t.finish();
      }
    }
  }
  return t.finish();
}

std::vector<double> central_gradient(Objective& f, std::span<const double> x, double step) {
  Vector g(x.size());
  Vector probe(x.begin(), x.end());
  for (std::size_t k = 0; k < x.size(); ++k) {
    probe[k] = x[k] + step;
    const double fp = f.evaluate(probe).value;
    probe[k] = x[k] - step;
    const double fm = f.evaluate(probe).value;
    probe[k] = x[k];
    g[k] = (fp - fm) / (2.0 * step);
  }
  return g;
}

OptResult bfgs_fd(Objective& f, std::span<const double> x0, const BfgsOptions& o) {
  require_iterations(o.max_iter);
  require_start(f, x0);
  if (!(o.fd_step > 0.0)) throw Error(ErrorKind::configuration, "fd_step must be positive");
  const std::size_t n = f.arity();
  Tracker t(f, true);

  auto gradient = [&](const Vector& x) {
    Vector g(n);
    Vector probe = x;
    for (std::size_t k = 0; k < n; ++k) {
      probe[k] = x[k] + o.fd_step;
      const double fp = t.eval(probe);
      probe[k] = x[k] - o.fd_step;
      const double fm = t.eval(probe);
      probe[k] = x[k];
      g[k] = (fp - fm) / (2.0 * o.fd_step);
    }
    return g;
  };

  Vector x(x0.begin(), x0.end());
  double fx = t.eval(x);
  if (!std::isfinite(fx)) {
    t.result.aborted = true;
    return t.finish();
  }
  Vector g = gradient(x);
  // Inverse Hessian approximation, row-major.
  Vector hinv(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) hinv[i * n + i] = 1.0;
  bool scaled = false;

  for (int iter = 0; iter < o.max_iter; ++iter) {
    if (inf_norm(g) < o.gtol) {
      t.result.converged = true;
      break;
    }
    t.result.iterations = iter + 1;

    Vector d(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i] -= hinv[i * n + j] * g[j];
    double slope = dot(g, d);
    if (slope >= 0.0) {
      // Lost descent; restart from steepest descent.
      std::fill(hinv.begin(), hinv.end(), 0.0);
      for (std::size_t i = 0; i < n; ++i) hinv[i * n + i] = 1.0;
      for (std::size_t i = 0; i < n; ++i) d[i] = -g[i];
      slope = dot(g, d);
    }

    Vector xn(n);
    for (std::size_t i = 0; i < n; ++i) xn[i] = x[i] + d[i];
    double fn = t.eval(xn);
    // First trial at the minimizer of the quadratic through f(x), slope, f(x + d).
    double step = 1.0;
    const double curvature = fn - fx - slope;
    if (std::isfinite(fn) && curvature > 0.0) step = std::clamp(-slope / (2.0 * curvature), 1e-3, 10.0);
    bool accepted = false;
    for (int h = 0; h <= o.max_halvings; ++h) {
      if (step != 1.0 || h > 0) {
        for (std::size_t i = 0; i < n; ++i) xn[i] = x[i] + step * d[i];
        fn = t.eval(xn);
      }
      if (std::isfinite(fn) && fn <= fx + o.armijo_c1 * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      t.result.stalled = true;
      break;
    }

    const Vector gn = gradient(xn);
    Vector s(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = xn[i] - x[i];
      y[i] = gn[i] - g[i];
    }
    const double sy = dot(s, y);
    if (sy > 1e-16 * std::sqrt(dot(s, s) * dot(y, y))) {
      if (!scaled) {
        // Rescale the initial identity to the observed curvature.
        const double gamma = sy / dot(y, y);
        for (auto& v : hinv) v *= gamma;
        scaled = true;
      }
      // H+ = (I - rho s y^T) H (I - rho y s^T) + rho s s^T
      const double rho = 1.0 / sy;
      Vector hy(n, 0.0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) hy[i] += hinv[i * n + j] * y[j];
      const double yhy = dot(y, hy);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          hinv[i * n + j] += -rho * (hy[i] * s[j] + s[i] * hy[j]) + (rho * rho * yhy + rho) * s[i] * s[j];
    }
    x = xn;
    fx = fn;
    g = gn;
  }
  return t.finish();
}

OptResult spsa(Objective& f, std::span<const double> x0, const SpsaOptions& o) {
  require_iterations(o.max_iter);
  require_start(f, x0);
  if (!(o.c > 0.0)) throw Error(ErrorKind::configuration, "SPSA c must be positive");
  if (o.save_steps < 1) throw Error(ErrorKind::configuration, "save_steps must be >= 1");
  const std::size_t n = f.arity();
  const double A = o.A.value_or(0.1 * o.max_iter);
  Tracker t(f, false);

  Vector x(x0.begin(), x0.end());
  Vector plus(n), minus(n);
  std::vector<int> delta(n);

  auto perturb = [&](Rng& rng, double ck) {
    for (std::size_t i = 0; i < n; ++i) {
      delta[i] = rademacher(rng);
      plus[i] = x[i] + ck * delta[i];
      minus[i] = x[i] - ck * delta[i];
    }
  };

  double a = 0.0;
  if (o.a) {
    a = *o.a;
  } else {
    // Choose a so the first update has magnitude ~target_first_step.
    Rng rng(derive_seed(o.seed, "spsa-calibration"));
    double mean_diff = 0.0;
    for (int i = 0; i < o.calibration_pairs; ++i) {
      perturb(rng, o.c);
      mean_diff += std::abs(f.evaluate(plus).value - f.evaluate(minus).value) / o.calibration_pairs;
    }
    a = mean_diff > 0.0 ? o.target_first_step * 2.0 * o.c * std::pow(A + 1.0, o.alpha) / mean_diff
                        : o.target_first_step;
  }

  auto save = [&] {
    const auto est = f.evaluate(x);
    t.record(x, est);
  };

  for (int k = 0; k < o.max_iter; ++k) {
    if (k % o.save_steps == 0) save();
    const double ak = a / std::pow(k + 1.0 + A, o.alpha);
    const double ck = o.c / std::pow(k + 1.0, o.gamma);
    Rng rng(derive_seed(o.seed, "spsa-step", static_cast<std::uint64_t>(k)));
    perturb(rng, ck);
    const double fp = f.evaluate(plus).value;
    const double fm = f.evaluate(minus).value;
    if (!std::isfinite(fp) || !std::isfinite(fm)) {
      t.result.aborted = true;
      break;
    }
    const double scale = (fp - fm) / (2.0 * ck);
    for (std::size_t i = 0; i < n; ++i) x[i] -= ak * scale / delta[i];
    t.result.iterations = k + 1;
  }
  if (!t.result.aborted) save();
  t.result.converged = !t.result.aborted;
  return t.finish();
}

}  // namespace h2vqe
