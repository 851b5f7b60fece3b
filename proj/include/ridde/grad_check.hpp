#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ridde/tensor.hpp"

namespace ridde {

struct GradCheckTensorReport {
    std::string name;
    double max_rel_err = 0.0;
    std::size_t worst_index = 0;
    double analytic = 0.0;
    double numeric = 0.0;
    std::size_t entries = 0;
};

struct GradCheckReport {
    bool aborted = false;
    std::string abort_reason;
    double max_rel_err = 0.0;
    std::size_t entries_checked = 0;
    std::vector<GradCheckTensorReport> per_tensor;

    bool passed(double tol) const { return !aborted && max_rel_err <= tol; }
};

/// Central finite-difference check of hand-written adjoints.
///
/// `loss` evaluates the graph at the current parameter values; it must be
/// deterministic (dropout off) — the checker evaluates it twice up front and
/// aborts with a diagnostic if the results differ bitwise. `compute_grads`
/// zeroes the adjoints and runs the analytic backward pass.
///
/// Relative error per entry is |analytic - numeric| / max(|analytic|,
/// |numeric|, denom_floor); the floor absorbs cancellation noise of the
/// difference quotient on near-zero gradients.
GradCheckReport grad_check(const std::function<double()>& loss,
                           const std::function<void()>& compute_grads,
                           const std::vector<std::pair<std::string, DualTensor*>>& params,
                           double step = 1e-5,
                           double denom_floor = 1e-5);

} // namespace ridde
