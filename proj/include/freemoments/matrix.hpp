#pragma once

#include <cstddef>
#include <vector>

namespace freemoments {

/// Dense square matrix, row-major, 0-based storage.
template <class T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  SquareMatrix(std::size_t dim, const T& fill) : dim_(dim), data_(dim * dim, fill) {}

  std::size_t dim() const noexcept { return dim_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<T> data_;
};

}  // namespace freemoments
