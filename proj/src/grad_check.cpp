#include "ridde/grad_check.hpp"

#include <cmath>
#include <cstring>

#include "ridde/errors.hpp"

namespace ridde {

namespace {
bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }
} // namespace

GradCheckReport grad_check(const std::function<double()>& loss,
                           const std::function<void()>& compute_grads,
                           const std::vector<std::pair<std::string, DualTensor*>>& params,
                           double step,
                           double denom_floor) {
    if (step <= 0.0)
        throw DomainError("grad_check step must be positive");

    GradCheckReport report;

    const double f0 = loss();
    const double f1 = loss();
    if (!same_bits(f0, f1)) {
        report.aborted = true;
        report.abort_reason = "graph is not deterministic: two forward evaluations differ (" + std::to_string(f0) + " vs " + std::to_string(f1) + "); disable dropout before checking";
        return report;
    }

    compute_grads();

    for (const auto& [name, param] : params) {
        GradCheckTensorReport tr;
        tr.name = name;
        tr.entries = param->value.size();
        for (std::size_t i = 0; i < param->value.size(); ++i) {
            double& p = param->value[i];
            const double saved = p;
            p = saved + step;
            const double fp = loss();
            p = saved - step;
            const double fm = loss();
            p = saved;
            const double numeric = (fp - fm) / (2.0 * step);
            const double analytic = param->grad[i];
            const double denom = std::max({std::fabs(analytic), std::fabs(numeric), denom_floor});
            const double rel = std::fabs(analytic - numeric) / denom;
            if (rel > tr.max_rel_err) {
                tr.max_rel_err = rel;
                tr.worst_index = i;
                tr.analytic = analytic;
                tr.numeric = numeric;
            }
            ++report.entries_checked;
        }
        report.max_rel_err = std::max(report.max_rel_err, tr.max_rel_err);
        report.per_tensor.push_back(std::move(tr));
    }
    return report;
}

} // namespace ridde
