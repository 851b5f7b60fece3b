#pragma once

#include <span>

#include "ridde/tensor.hpp"

namespace ridde {

// Forward kernels and their hand-derived adjoints. Every backward takes the
// upstream adjoint and accumulates (+=) into the destination gradients, so a
// value feeding several consumers just gets backward called once per path.

/// out[j] = sum_k W[j,k] * x[k] + b[j]
Tensor linear(const Tensor& x, const Tensor& w, const Tensor& b);
void linear_backward(const Tensor& x, const Tensor& w, const Tensor& upstream, Tensor* grad_x, Tensor* grad_w, Tensor* grad_b);

/// Elementwise 1/(1+exp(-x)), branch-stable for large |x|.
Tensor sigmoid(const Tensor& x);
double sigmoid_scalar(double x);
/// adjoint: s*(1-s)*upstream, with s the forward output.
void sigmoid_backward(const Tensor& s, const Tensor& upstream, Tensor* grad_x);

Tensor tanh_op(const Tensor& x);
void tanh_backward(const Tensor& t, const Tensor& upstream, Tensor* grad_x);

/// Max-subtracted softmax over a rank-1 tensor.
Tensor softmax(const Tensor& logits);
void softmax_backward(const Tensor& probs, const Tensor& upstream, Tensor* grad_logits);

/// a.b / (|a||b|), with the zero-norm guard: either norm below 1e-12 makes
/// the similarity 0 and its gradient 0.
double cosine_sim(std::span<const double> a, std::span<const double> b);
double cosine_sim(const Tensor& a, const Tensor& b);
void cosine_sim_backward(std::span<const double> a, std::span<const double> b, double upstream, double* grad_a, double* grad_b);

double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> a);

/// Norm floor below which cosine similarity is defined as zero.
inline constexpr double kCosineNormFloor = 1e-12;

} // namespace ridde
