#pragma once

#include <cassert>
#include <concepts>
#include <cstddef>
#include <span>
#include <vector>

namespace wordsig {

/// Dense row-major matrix; rows are the per-term vectors.
template <std::floating_point Real>
class Matrix
{
public:
  using value_type = Real;

  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols, Real fill = Real{0})
    : rows_(rows)
    , cols_(cols)
    , data_(rows * cols, fill)
  {}

  std::size_t rows() const noexcept
  {
    return rows_;
  }

  std::size_t cols() const noexcept
  {
    return cols_;
  }

  bool empty() const noexcept
  {
    return data_.empty();
  }

  std::span<Real> row(std::size_t r) noexcept
  {
    assert(r < rows_);
    return {data_.data() + r * cols_, cols_};
  }

  std::span<Real const> row(std::size_t r) const noexcept
  {
    assert(r < rows_);
    return {data_.data() + r * cols_, cols_};
  }

  Real &operator()(std::size_t r, std::size_t c) noexcept
  {
    return data_[r * cols_ + c];
  }

  Real operator()(std::size_t r, std::size_t c) const noexcept
  {
    return data_[r * cols_ + c];
  }

  std::span<Real> values() noexcept
  {
    return data_;
  }

  std::span<Real const> values() const noexcept
  {
    return data_;
  }

  bool operator==(Matrix const &) const = default;

private:
  std::size_t       rows_ = 0;
  std::size_t       cols_ = 0;
  std::vector<Real> data_;
};

}  // namespace wordsig
