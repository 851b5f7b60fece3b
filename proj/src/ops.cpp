#include "ridde/ops.hpp"

#include <algorithm>
#include <cmath>

#include "ridde/errors.hpp"

namespace ridde {

namespace {
void require_vector(const Tensor& t, const char* what) {
    if (t.rank() != 1)
        throw DimensionError(std::string(what) + " must be rank 1, got " + t.shape_str());
}
} // namespace

Tensor linear(const Tensor& x, const Tensor& w, const Tensor& b) {
    require_vector(x, "linear input");
    require_vector(b, "linear bias");
    if (w.rank() != 2 || w.cols() != x.size() || w.rows() != b.size())
        throw DimensionError("linear shapes disagree: W " + w.shape_str() + ", x " + x.shape_str() + ", b " + b.shape_str());
    const std::size_t m = w.rows(), n = w.cols();
    Tensor out({m});
    const double* wp = w.data();
    const double* xp = x.data();
    for (std::size_t j = 0; j < m; ++j) {
        double acc = b[j];
        const double* row = wp + j * n;
        for (std::size_t k = 0; k < n; ++k)
            acc += row[k] * xp[k];
        out[j] = acc;
    }
    return out;
}

void linear_backward(const Tensor& x, const Tensor& w, const Tensor& upstream, Tensor* grad_x, Tensor* grad_w, Tensor* grad_b) {
    const std::size_t m = w.rows(), n = w.cols();
    const double* wp = w.data();
    const double* xp = x.data();
    const double* up = upstream.data();
    if (grad_b) {
        for (std::size_t j = 0; j < m; ++j)
            (*grad_b)[j] += up[j];
    }
    if (grad_w) {
        double* gw = grad_w->data();
        for (std::size_t j = 0; j < m; ++j) {
            const double uj = up[j];
            double* row = gw + j * n;
            for (std::size_t k = 0; k < n; ++k)
                row[k] += uj * xp[k];
        }
    }
    if (grad_x) {
        double* gx = grad_x->data();
        for (std::size_t j = 0; j < m; ++j) {
            const double uj = up[j];
            const double* row = wp + j * n;
            for (std::size_t k = 0; k < n; ++k)
                gx[k] += row[k] * uj;
        }
    }
}

double sigmoid_scalar(double x) {
    if (x >= 0.0) {
        return 1.0 / (1.0 + std::exp(-x));
    }
    const double e = std::exp(x);
    return e / (1.0 + e);
}

Tensor sigmoid(const Tensor& x) {
    Tensor out(x.shape());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = sigmoid_scalar(x[i]);
    return out;
}

void sigmoid_backward(const Tensor& s, const Tensor& upstream, Tensor* grad_x) {
    for (std::size_t i = 0; i < s.size(); ++i)
        (*grad_x)[i] += s[i] * (1.0 - s[i]) * upstream[i];
}

Tensor tanh_op(const Tensor& x) {
    Tensor out(x.shape());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = std::tanh(x[i]);
    return out;
}

void tanh_backward(const Tensor& t, const Tensor& upstream, Tensor* grad_x) {
    for (std::size_t i = 0; i < t.size(); ++i)
        (*grad_x)[i] += (1.0 - t[i] * t[i]) * upstream[i];
}

Tensor softmax(const Tensor& logits) {
    require_vector(logits, "softmax input");
    if (logits.size() == 0)
        throw DomainError("softmax over empty input");
    const double hi = *std::max_element(logits.values().begin(), logits.values().end());
    Tensor out(logits.shape());
    double sum = 0.0;
    for (std::size_t i = 0; i < logits.size(); ++i) {
        out[i] = std::exp(logits[i] - hi);
        sum += out[i];
    }
    for (std::size_t i = 0; i < logits.size(); ++i)
        out[i] /= sum;
    return out;
}

void softmax_backward(const Tensor& probs, const Tensor& upstream, Tensor* grad_logits) {
    double inner = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i)
        inner += probs[i] * upstream[i];
    for (std::size_t i = 0; i < probs.size(); ++i)
        (*grad_logits)[i] += probs[i] * (upstream[i] - inner);
}

double dot(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += a[i] * b[i];
    return acc;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

double cosine_sim(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw DimensionError("cosine_sim lengths disagree: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    const double na = norm(a);
    const double nb = norm(b);
    if (na < kCosineNormFloor || nb < kCosineNormFloor)
        return 0.0;
    return dot(a, b) / (na * nb);
}

double cosine_sim(const Tensor& a, const Tensor& b) {
    return cosine_sim(std::span<const double>(a.data(), a.size()), std::span<const double>(b.data(), b.size()));
}

void cosine_sim_backward(std::span<const double> a, std::span<const double> b, double upstream, double* grad_a, double* grad_b) {
    const double na = norm(a);
    const double nb = norm(b);
    if (na < kCosineNormFloor || nb < kCosineNormFloor)
        return; // guarded region: similarity is constant 0
    const double inv = 1.0 / (na * nb);
    const double s = dot(a, b) * inv;
    if (grad_a) {
        const double c = s / (na * na);
        for (std::size_t i = 0; i < a.size(); ++i)
            grad_a[i] += upstream * (b[i] * inv - c * a[i]);
    }
    if (grad_b) {
        const double c = s / (nb * nb);
        for (std::size_t i = 0; i < b.size(); ++i)
            grad_b[i] += upstream * (a[i] * inv - c * b[i]);
    }
}

} // namespace ridde
