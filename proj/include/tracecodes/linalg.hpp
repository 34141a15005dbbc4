#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tracecodes/field.hpp"

namespace tracecodes {

/// Dense row-major matrix over F_p.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Residue& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Residue at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::vector<Residue> column(std::size_t c) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Residue> data_;
};

Residue inverse_mod(Residue a, Residue p);

std::size_t rank_mod_p(Matrix m, Residue p);

/// Solves sum_j x_j * columns[j] = target over F_p. Returns nullopt when the
/// target is not in the span of the given columns.
std::optional<std::vector<Residue>> solve_combination(const std::vector<std::vector<Residue>>& columns,
                                                      std::span<const Residue> target, Residue p);

/// u * G for a row vector u.
std::vector<Residue> row_times_matrix(std::span<const Residue> u, const Matrix& g, Residue p);

/// True iff y = lambda * x for some nonzero lambda in F_p (x nonzero).
bool is_scalar_multiple(std::span<const Residue> y, std::span<const Residue> x, Residue p);

}  // namespace tracecodes
