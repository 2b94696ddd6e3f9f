#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "h2vqe/backend.hpp"

namespace h2vqe {

enum class OptimizerKind { spsa, nelder_mead, bfgs };

std::string_view to_string(OptimizerKind k);
/// Accepts "spsa", "nelder_mead", "bfgs", plus the aliases "cobyla"
/// (nelder_mead), "slsqp" and "l_bfgs_b" (bfgs).
OptimizerKind parse_optimizer(std::string_view name);

inline constexpr int kDefaultMaxIter = 500;

struct IterationRecord {
  std::uint64_t nfev = 0;
  std::vector<double> parameters;
  double energy = 0.0;
  double stddev = 0.0;
};

using EvaluationCallback = std::function<void(const IterationRecord&)>;

/// Energy objective with an evaluation counter. Every call counts once and is
/// reported to the callback, if any.
class Objective {
 public:
  using Function = std::function<ExpectationEstimate(std::span<const double>, std::uint64_t nfev)>;

  Objective(std::size_t arity, Function f, EvaluationCallback callback = {});

  std::size_t arity() const noexcept { return arity_; }
  std::uint64_t evaluations() const noexcept { return count_; }

  /// Throws dimension for a wrong-length vector.
  ExpectationEstimate evaluate(std::span<const double> x);
  ExpectationEstimate operator()(std::span<const double> x) { return evaluate(x); }

 private:
  std::size_t arity_;
  Function f_;
  EvaluationCallback callback_;
  std::uint64_t count_ = 0;
};

struct OptResult {
  std::vector<double> best_parameters;
  double best_value = 0.0;
  double best_stddev = 0.0;
  std::uint64_t n_evaluations = 0;
  int iterations = 0;
  std::vector<IterationRecord> trace;
  bool converged = false;
  bool stalled = false;  // line search gave up (bfgs)
  bool aborted = false;  // non-finite objective value
};

struct NelderMeadOptions {
  int max_iter = kDefaultMaxIter;
  double xtol = 1e-8;
  double ftol = 1e-12;
  double initial_step = 0.1;
};

/// Simplex search with reflection 1, expansion 2, contraction 1/2 and shrink
/// 1/2. Trace holds every evaluation.
OptResult nelder_mead(Objective& f, std::span<const double> x0, const NelderMeadOptions& options = {});

struct BfgsOptions {
  int max_iter = kDefaultMaxIter;
  double gtol = 1e-8;
  double fd_step = 1e-6;
  double armijo_c1 = 1e-4;
  int max_halvings = 40;
};

/// Quasi-Newton with central-difference gradients and a halving Armijo line
/// search. Trace holds every evaluation, including gradient probes.
OptResult bfgs_fd(Objective& f, std::span<const double> x0, const BfgsOptions& options = {});

/// First-order central-difference gradient, as used inside bfgs_fd.
std::vector<double> central_gradient(Objective& f, std::span<const double> x, double step);

struct SpsaOptions {
  int max_iter = kDefaultMaxIter;
  std::optional<double> a;  // calibrated from probe pairs when unset
  double c = 0.1;
  double alpha = 0.602;
  double gamma = 0.101;
  std::optional<double> A;  // defaults to 0.1 * max_iter
  int save_steps = 100;
  int calibration_pairs = 25;
  double target_first_step = 0.2;  // calibration target for |a_0 g_0|
  std::uint64_t seed = 0;
};

/// Simultaneous-perturbation stochastic approximation. The iterate is
/// evaluated and recorded every `save_steps` iterations and after the last;
/// the best recorded iterate is returned.
OptResult spsa(Objective& f, std::span<const double> x0, const SpsaOptions& options = {});

}  // namespace h2vqe
