#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace relkummer {

// Vectors and dense matrices over the prime field F_p, entries in [0, p).
using FpVector = std::vector<std::uint32_t>;

class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);

  static FpMatrix identity(std::size_t n, std::uint32_t p);
  // Matrix whose j-th column is columns[j]; `rows` fixes the shape when
  // there are no columns.
  static FpMatrix from_columns(const std::vector<FpVector>& columns, std::size_t rows,
                               std::uint32_t p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t modulus() const { return p_; }

  std::uint32_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::uint32_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  FpVector column(std::size_t j) const;
  FpVector row(std::size_t i) const;
  FpMatrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::uint32_t p_ = 2;
  std::vector<std::uint32_t> data_;
};

namespace fp {

std::uint32_t inverse(std::uint32_t a, std::uint32_t p);

FpMatrix add(const FpMatrix& a, const FpMatrix& b);
FpMatrix sub(const FpMatrix& a, const FpMatrix& b);
// Row-parallel OpenMP product.
FpMatrix multiply(const FpMatrix& a, const FpMatrix& b);
// Single-threaded reference for multiply().
FpMatrix multiply_serial(const FpMatrix& a, const FpMatrix& b);
FpVector apply(const FpMatrix& a, const FpVector& v);
FpMatrix power(const FpMatrix& a, std::uint64_t e);

FpVector add(const FpVector& a, const FpVector& b, std::uint32_t p);
FpVector sub(const FpVector& a, const FpVector& b, std::uint32_t p);
FpVector scale(const FpVector& a, std::uint32_t c, std::uint32_t p);
bool is_zero(const FpVector& v);
FpVector unit_vector(std::size_t n, std::size_t i);

// Reduced row echelon form; pivot columns ascending.
FpMatrix rref(FpMatrix a, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const FpMatrix& a);
// Basis of {v : a v = 0}, one vector per free column of rref(a), in
// ascending free-column order.
std::vector<FpVector> nullspace(const FpMatrix& a);
// Some x with a x = b, or nothing when b is outside the column space.
std::optional<FpVector> solve(const FpMatrix& a, const FpVector& b);
std::optional<FpMatrix> inverse(const FpMatrix& a);

// Rank of the span of `vectors` (all of length n).
std::size_t span_rank(const std::vector<FpVector>& vectors, std::size_t n, std::uint32_t p);

std::string to_string(const FpVector& v);

}  // namespace fp
}  // namespace relkummer
