#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace reid {

using Shape = std::vector<std::int64_t>;

std::string shape_to_string(const Shape& s);
std::int64_t shape_numel(const Shape& s);

namespace detail {
struct TensorStorage {
  Shape shape;
  std::vector<double> values;
  std::vector<double> grad;     // empty until a backward pass fills it
  std::vector<double> adjoint;  // scratch owned by Tape::backward
  bool requires_grad = false;
};
}  // namespace detail

// Dense n-d array of doubles, row-major, shared-ownership handle.
// Tensors are treated as immutable once an op has consumed or produced them;
// mutate() is for construction, parameter updates and tests.
class Tensor {
 public:
  Tensor() = default;

  static Tensor zeros(Shape shape);
  static Tensor full(Shape shape, double value);
  static Tensor from_values(Shape shape, std::vector<double> values);
  static Tensor scalar(double value);

  bool defined() const { return static_cast<bool>(s_); }
  const Shape& shape() const;
  std::int64_t rank() const;
  std::int64_t extent(std::int64_t axis) const;
  std::int64_t size() const;

  std::span<const double> values() const;
  std::span<double> mutate();
  double value_at(std::initializer_list<std::int64_t> idx) const;
  double item() const;  // requires size() == 1

  bool requires_grad() const;
  Tensor& set_requires_grad(bool v);
  bool has_grad() const;
  std::span<const double> grad() const;  // StateError when absent
  void zero_grad();

  // Deep copy with fresh storage (grad not copied).
  Tensor clone() const;

  bool same_storage(const Tensor& other) const { return s_ == other.s_; }
  const void* storage_id() const { return s_.get(); }

  detail::TensorStorage* storage() const { return s_.get(); }

 private:
  explicit Tensor(std::shared_ptr<detail::TensorStorage> s) : s_(std::move(s)) {}
  std::shared_ptr<detail::TensorStorage> s_;
};

}  // namespace reid
