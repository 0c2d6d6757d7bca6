#ifndef CFDIS_TENSOR_HPP
#define CFDIS_TENSOR_HPP

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "cfdis/common.hpp"

namespace cfdis {

// Dense row-major tensor of doubles. Value semantics; shapes are small
// vectors of extents. All numeric state in the project (parameters,
// activations, gradients) lives in these.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<std::int64_t> shape) : shape_(std::move(shape)) {
    v_.assign(std::size_t(numel_of(shape_)), 0.0);
  }
  Tensor(std::vector<std::int64_t> shape, std::vector<double> data)
      : shape_(std::move(shape)), v_(std::move(data)) {
    if (std::int64_t(v_.size()) != numel_of(shape_))
      throw ShapeMismatch("tensor data does not match shape");
  }

  static std::int64_t numel_of(const std::vector<std::int64_t>& shape) {
    std::int64_t n = 1;
    for (auto d : shape) n *= d;
    return n;
  }

  const std::vector<std::int64_t>& shape() const { return shape_; }
  std::int64_t dim(std::size_t i) const { return shape_.at(i); }
  std::size_t rank() const { return shape_.size(); }
  std::int64_t numel() const { return std::int64_t(v_.size()); }
  bool empty() const { return v_.empty(); }

  double* data() { return v_.data(); }
  const double* data() const { return v_.data(); }
  double& operator[](std::size_t i) { return v_[i]; }
  double operator[](std::size_t i) const { return v_[i]; }

  std::vector<double>& vec() { return v_; }
  const std::vector<double>& vec() const { return v_; }

  void fill(double x) { std::fill(v_.begin(), v_.end(), x); }
  void zero() { fill(0.0); }

  bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }

  std::string shape_str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < shape_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(shape_[i]);
    }
    return s + "]";
  }

 private:
  std::vector<std::int64_t> shape_;
  std::vector<double> v_;
};

inline void axpy(double a, const Tensor& x, Tensor& y) {
  if (!x.same_shape(y)) throw ShapeMismatch("axpy: " + x.shape_str() + " vs " + y.shape_str());
  const double* xs = x.data();
  double* ys = y.data();
  for (std::int64_t i = 0; i < x.numel(); ++i) ys[i] += a * xs[i];
}

// ---------------------------------------------------------------------------
// Deterministic fork-join parallelism. Work is split into index chunks that
// each own disjoint outputs, so results are bit-identical for any worker
// count. Reductions stay single-threaded.
// ---------------------------------------------------------------------------
namespace par {

// Number of worker threads (defaults to hardware concurrency, overridable
// via CFDIS_THREADS).
int thread_count();

// Runs fn(begin, end) over [0, n) split into contiguous chunks, one chunk
// per worker. fn must only write to state owned by its index range.
void parallel_chunks(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& fn);

}  // namespace par

}  // namespace cfdis

#endif  // CFDIS_TENSOR_HPP
