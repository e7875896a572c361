#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mci {

/// Index of an element in a carrier. Carriers are ordered; ids run 0..n-1.
using Elem = std::uint32_t;

using UnaryTable = std::vector<Elem>;

/// Dense row-major table of element ids. Rows index the left operand.
class Table {
 public:
  Table() = default;
  Table(std::size_t rows, std::size_t cols, Elem fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Elem> row(std::size_t r) const {
    return std::span<const Elem>(data_).subspan(r * cols_, cols_);
  }
  std::span<const Elem> values() const { return data_; }

  Table transposed() const {
    Table t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool operator==(const Table&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

}  // namespace mci
