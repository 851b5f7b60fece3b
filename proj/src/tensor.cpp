#include "ridde/tensor.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "ridde/errors.hpp"

namespace ridde {

namespace {
std::size_t product(const std::vector<std::size_t>& shape) {
    std::size_t n = 1;
    for (std::size_t s : shape)
        n *= s;
    return n;
}
} // namespace

Tensor::Tensor(std::vector<std::size_t> shape) : shape_(std::move(shape)) {
    data_.assign(product(shape_), 0.0);
    cols_ = shape_.empty() ? 0 : shape_.back();
}

Tensor::Tensor(std::vector<std::size_t> shape, std::vector<double> data) : shape_(std::move(shape)), data_(std::move(data)) {
    if (product(shape_) != data_.size())
        throw DimensionError("tensor shape " + shape_str() + " does not match data length " + std::to_string(data_.size()));
    cols_ = shape_.empty() ? 0 : shape_.back();
}

Tensor Tensor::vector(std::vector<double> data) {
    const std::size_t n = data.size();
    return Tensor({n}, std::move(data));
}

Tensor Tensor::matrix(std::size_t rows, std::size_t cols) { return Tensor({rows, cols}); }

std::size_t Tensor::rows() const {
    if (rank() != 2)
        throw DimensionError("rows() on tensor of shape " + shape_str());
    return shape_[0];
}

std::size_t Tensor::cols() const {
    if (rank() != 2)
        throw DimensionError("cols() on tensor of shape " + shape_str());
    return shape_[1];
}

void Tensor::fill(double v) {
    for (double& x : data_)
        x = v;
}

bool Tensor::all_finite() const {
    for (double x : data_)
        if (!std::isfinite(x))
            return false;
    return true;
}

std::string Tensor::shape_str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < shape_.size(); ++i)
        os << (i ? "x" : "") << shape_[i];
    os << "]";
    return os.str();
}

} // namespace ridde
