#include "relkummer/fpmatrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "relkummer/errors.hpp"

namespace relkummer {

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

FpMatrix FpMatrix::identity(std::size_t n, std::uint32_t p) {
  FpMatrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1 % p;
  return m;
}

FpMatrix FpMatrix::from_columns(const std::vector<FpVector>& columns, std::size_t rows,
                                std::uint32_t p) {
  FpMatrix m(rows, columns.size(), p);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw DomainError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i] % p;
  }
  return m;
}

FpVector FpMatrix::column(std::size_t j) const {
  FpVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

FpVector FpMatrix::row(std::size_t i) const {
  return FpVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(cols_, rows_, p_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

bool FpMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint32_t x) { return x == 0; });
}

namespace fp {

std::uint32_t inverse(std::uint32_t a, std::uint32_t p) {
  a %= p;
  if (a == 0) throw DomainError("inverse of zero in F_p");
  std::uint64_t result = 1, base = a;
  std::uint32_t e = p - 2;
  while (e > 0) {
    if (e & 1u) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

namespace {

void require_same_shape(const FpMatrix& a, const FpMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.modulus() != b.modulus()) {
    throw DomainError("matrix shape mismatch");
  }
}

void require_product_shape(const FpMatrix& a, const FpMatrix& b) {
  if (a.cols() != b.rows() || a.modulus() != b.modulus()) {
    throw DomainError("matrix product shape mismatch");
  }
}

// Row i of a*b into c.
inline void multiply_row(const FpMatrix& a, const FpMatrix& b, FpMatrix& c, std::size_t i) {
  const std::uint64_t p = a.modulus();
  std::vector<std::uint64_t> acc(b.cols(), 0);
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const std::uint64_t aik = a(i, k);
    if (aik == 0) continue;
    for (std::size_t j = 0; j < b.cols(); ++j) acc[j] = (acc[j] + aik * b(k, j)) % p;
  }
  for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = static_cast<std::uint32_t>(acc[j]);
}

}  // namespace

FpMatrix add(const FpMatrix& a, const FpMatrix& b) {
  require_same_shape(a, b);
  FpMatrix c(a.rows(), a.cols(), a.modulus());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = (a(i, j) + b(i, j)) % a.modulus();
  }
  return c;
}

FpMatrix sub(const FpMatrix& a, const FpMatrix& b) {
  require_same_shape(a, b);
  FpMatrix c(a.rows(), a.cols(), a.modulus());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      c(i, j) = (a(i, j) + a.modulus() - b(i, j)) % a.modulus();
    }
  }
  return c;
}

FpMatrix multiply(const FpMatrix& a, const FpMatrix& b) {
  require_product_shape(a, b);
  FpMatrix c(a.rows(), b.cols(), a.modulus());
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(static) if (rows * static_cast<std::ptrdiff_t>(b.cols()) >= 4096)
  for (std::ptrdiff_t i = 0; i < rows; ++i) multiply_row(a, b, c, static_cast<std::size_t>(i));
  return c;
}

FpMatrix multiply_serial(const FpMatrix& a, const FpMatrix& b) {
  require_product_shape(a, b);
  FpMatrix c(a.rows(), b.cols(), a.modulus());
  for (std::size_t i = 0; i < a.rows(); ++i) multiply_row(a, b, c, i);
  return c;
}

FpVector apply(const FpMatrix& a, const FpVector& v) {
  if (v.size() != a.cols()) throw DomainError("matrix-vector shape mismatch");
  const std::uint64_t p = a.modulus();
  FpVector out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) acc = (acc + std::uint64_t{a(i, j)} * v[j]) % p;
    out[i] = static_cast<std::uint32_t>(acc);
  }
  return out;
}

FpMatrix power(const FpMatrix& a, std::uint64_t e) {
  if (a.rows() != a.cols()) throw DomainError("power of a non-square matrix");
  FpMatrix result = FpMatrix::identity(a.rows(), a.modulus());
  FpMatrix base = a;
  while (e > 0) {
    if (e & 1u) result = multiply(result, base);
    e >>= 1;
    if (e > 0) base = multiply(base, base);
  }
  return result;
}

FpVector add(const FpVector& a, const FpVector& b, std::uint32_t p) {
  FpVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + b[i]) % p;
  return out;
}

FpVector sub(const FpVector& a, const FpVector& b, std::uint32_t p) {
  FpVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + p - b[i]) % p;
  return out;
}

FpVector scale(const FpVector& a, std::uint32_t c, std::uint32_t p) {
  FpVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = static_cast<std::uint32_t>(std::uint64_t{a[i]} * c % p);
  }
  return out;
}

bool is_zero(const FpVector& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

FpVector unit_vector(std::size_t n, std::size_t i) {
  FpVector v(n, 0);
  v.at(i) = 1;
  return v;
}

FpMatrix rref(FpMatrix a, std::vector<std::size_t>* pivots) {
  const std::uint64_t p = a.modulus();
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(sel, j), a(row, j));
    }
    const std::uint64_t s = inverse(a(row, col), a.modulus());
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) = static_cast<std::uint32_t>(a(row, j) * s % p);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      const std::uint64_t f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) {
        a(i, j) = static_cast<std::uint32_t>((a(i, j) + p * p - f * a(row, j)) % p);
      }
    }
    piv.push_back(col);
    ++row;
  }
  if (pivots != nullptr) *pivots = std::move(piv);
  return a;
}

std::size_t rank(const FpMatrix& a) {
  std::vector<std::size_t> piv;
  rref(a, &piv);
  return piv.size();
}

std::vector<FpVector> nullspace(const FpMatrix& a) {
  std::vector<std::size_t> piv;
  const FpMatrix r = rref(a, &piv);
  const std::uint32_t p = a.modulus();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<FpVector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    FpVector v(a.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = (p - r(i, free)) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<FpVector> solve(const FpMatrix& a, const FpVector& b) {
  if (b.size() != a.rows()) throw DomainError("solve: right-hand side length mismatch");
  FpMatrix aug(a.rows(), a.cols() + 1, a.modulus());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i] % a.modulus();
  }
  std::vector<std::size_t> piv;
  const FpMatrix r = rref(aug, &piv);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  FpVector x(a.cols(), 0);
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r(i, a.cols());
  return x;
}

std::optional<FpMatrix> inverse(const FpMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  FpMatrix aug(n, 2 * n, a.modulus());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1 % a.modulus();
  }
  std::vector<std::size_t> piv;
  const FpMatrix r = rref(aug, &piv);
  if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) return std::nullopt;
  FpMatrix inv(n, n, a.modulus());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  }
  return inv;
}

std::size_t span_rank(const std::vector<FpVector>& vectors, std::size_t n, std::uint32_t p) {
  if (vectors.empty()) return 0;
  return rank(FpMatrix::from_columns(vectors, n, p));
}

std::string to_string(const FpVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

}  // namespace fp
}  // namespace relkummer
