#pragma once

// Brute-force reference computations. Deliberately naive and independent of
// the library algorithms they check: everything here enumerates.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "relkummer/ffield.hpp"
#include "relkummer/fpmatrix.hpp"
#include "relkummer/fpgmod.hpp"
#include "relkummer/polyarith.hpp"
#include "relkummer/random.hpp"

namespace oracle {

using relkummer::FpMatrix;
using relkummer::FpVector;

// Schoolbook product of two little-endian coefficient vectors reduced by a
// monic modulus, all mod r.
inline std::vector<std::uint32_t> naive_field_mul(const std::vector<std::uint32_t>& a,
                                                  const std::vector<std::uint32_t>& b,
                                                  const std::vector<std::uint32_t>& modulus, std::uint32_t r) {
  const std::size_t m = modulus.size() - 1;
  std::vector<std::uint64_t> prod(2 * m, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % r;
  }
  for (std::size_t d = prod.size(); d-- > m;) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= m; ++i) prod[d - m + i] = (prod[d - m + i] + (r - c) * modulus[i]) % r;
  }
  return std::vector<std::uint32_t>(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(m));
}

inline std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t out = 1;
  while (e-- > 0) out *= b;
  return out;
}

inline FpVector decode(std::uint64_t code, std::size_t n, std::uint32_t p) {
  FpVector v(n);
  for (auto& x : v) {
    x = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return v;
}

inline FpVector mat_vec(const FpMatrix& a, const FpVector& v) {
  FpVector out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += std::uint64_t{a(i, j)} * v[j];
    out[i] = static_cast<std::uint32_t>(s % a.modulus());
  }
  return out;
}

// Rank as log_p of the size of the column span, by enumerating combinations.
inline std::size_t rank_by_enumeration(const FpMatrix& a) {
  const std::uint32_t p = a.modulus();
  std::set<FpVector> image;
  for (std::uint64_t code = 0; code < ipow(p, a.cols()); ++code) image.insert(mat_vec(a, decode(code, a.cols(), p)));
  std::size_t r = 0;
  for (std::uint64_t size = 1; size < image.size(); size *= p) ++r;
  return r;
}

// dim ker x^j = log_p #{v : x^j v = 0}, enumerated.
inline std::size_t kernel_dimension(const FpMatrix& x, std::size_t j) {
  const std::uint32_t p = x.modulus();
  const std::size_t n = x.rows();
  std::size_t count = 0;
  for (std::uint64_t code = 0; code < ipow(p, n); ++code) {
    FpVector v = decode(code, n, p);
    for (std::size_t k = 0; k < j; ++k) v = mat_vec(x, v);
    bool zero = true;
    for (auto c : v) zero = zero && c == 0;
    count += zero ? 1 : 0;
  }
  std::size_t d = 0;
  for (std::size_t size = 1; size < count; size *= p) ++d;
  return d;
}

// Jordan type from kernel sizes: #parts >= j = dim ker x^j - dim ker x^(j-1).
inline relkummer::JordanType jordan_type_by_enumeration(const FpMatrix& x) {
  const std::size_t n = x.rows();
  std::vector<std::size_t> at_least;  // at_least[j-1] = #parts >= j
  for (std::size_t j = 1; j <= n; ++j) {
    const std::size_t c = kernel_dimension(x, j) - kernel_dimension(x, j - 1);
    if (c == 0) break;
    at_least.push_back(c);
  }
  relkummer::JordanType t;
  for (std::size_t j = 0; j < at_least.size(); ++j) {
    const std::size_t next = j + 1 < at_least.size() ? at_least[j + 1] : 0;
    for (std::size_t c = 0; c < at_least[j] - next; ++c) t.parts.push_back(j + 1);
  }
  std::sort(t.parts.rbegin(), t.parts.rend());
  return t;
}

// Twisted dual by enumeration: sigma^-1 by search over all vectors, then
// (sigma f)(e_j) = f(sigma^-1 e_j) on the dual basis; returns x on the dual.
inline FpMatrix enumerated_dual(const FpMatrix& x) {
  const std::size_t n = x.rows();
  const std::uint32_t p = x.modulus();
  std::vector<FpVector> preimage(n);
  for (std::uint64_t code = 0; code < ipow(p, n); ++code) {
    const FpVector v = decode(code, n, p);
    FpVector sv = mat_vec(x, v);
    for (std::size_t i = 0; i < n; ++i) sv[i] = (sv[i] + v[i]) % p;
    for (std::size_t j = 0; j < n; ++j) {
      bool unit = true;
      for (std::size_t i = 0; i < n; ++i) unit = unit && sv[i] == (i == j ? 1u : 0u);
      if (unit) preimage[j] = v;
    }
  }
  FpMatrix dual(n, n, p);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) dual(j, i) = (preimage[j][i] + p - (i == j ? 1 : 0)) % p;
  }
  return dual;
}

// Nilpotent matrices by enumeration: all strictly lower triangular n x n
// matrices (every nilpotent is conjugate to one) conjugated by a fixed
// invertible matrix, filtered to x^q = 0.
inline std::vector<FpMatrix> nilpotent_matrices(std::size_t n, std::uint32_t p, std::uint64_t q,
                                                std::size_t limit) {
  std::vector<FpMatrix> out;
  const std::size_t slots = n * (n - 1) / 2;
  for (std::uint64_t code = 0; code < ipow(p, slots) && out.size() < limit; ++code) {
    const FpVector entries = decode(code, slots, p);
    FpMatrix x(n, n, p);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) x(i, j) = entries[k++];
    }
    // conjugate by the upper unitriangular all-ones matrix to leave the triangular shape
    FpMatrix c(n, n, p), cinv(n, n, p);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) c(i, j) = 1;
      cinv(i, i) = 1;
      if (i + 1 < n) cinv(i, i + 1) = p - 1;
    }
    FpMatrix y(n, n, p);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::uint64_t s = 0;
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) s += std::uint64_t{c(i, a)} * x(a, b) * cinv(b, j);
        }
        y(i, j) = static_cast<std::uint32_t>(s % p);
      }
    }
    FpMatrix power = FpMatrix::identity(n, p);
    for (std::uint64_t e = 0; e < q && e <= n; ++e) power = relkummer::fp::multiply_serial(power, y);
    if (q < n && !power.is_zero()) continue;
    out.push_back(y);
  }
  return out;
}

// Classes of c * t^e modulo p-th powers, for B generated by such elements
// over k = GF(r) with sigma t = zeta t: (coset of c in k^x / k^xp, e mod p).
// Returns the Jordan type of x acting on the closure, computed by closing
// the set under products and x and counting kernels.
inline relkummer::JordanType monomial_class_type(std::uint32_t r, std::uint32_t p, std::uint32_t zeta,
                                                 const std::vector<std::pair<std::uint32_t, std::uint32_t>>& gens) {
  // coset label: least element of c * k^xp
  auto mulmod = [r](std::uint64_t a, std::uint64_t b) { return static_cast<std::uint32_t>(a * b % r); };
  std::set<std::uint32_t> powers;
  for (std::uint32_t v = 1; v < r; ++v) {
    std::uint32_t pw = 1;
    for (std::uint32_t i = 0; i < p; ++i) pw = mulmod(pw, v);
    powers.insert(pw);
  }
  auto coset = [&](std::uint32_t c) {
    std::uint32_t best = r;
    for (auto w : powers) best = std::min(best, mulmod(c, w));
    return best;
  };
  using Cls = std::pair<std::uint32_t, std::uint32_t>;
  auto product = [&](Cls a, Cls b) { return Cls{coset(mulmod(a.first, b.first)), (a.second + b.second) % p}; };
  auto x_of = [&](Cls a) {
    // sigma(c t^e) / (c t^e) = zeta^e
    std::uint32_t z = 1;
    for (std::uint32_t i = 0; i < a.second; ++i) z = mulmod(z, zeta);
    return Cls{coset(z), 0u};
  };
  std::set<Cls> closure{{coset(1), 0}};
  std::vector<Cls> frontier;
  for (auto [c, e] : gens) frontier.push_back({coset(c), e % p});
  while (!frontier.empty()) {
    const Cls g = frontier.back();
    frontier.pop_back();
    std::vector<Cls> fresh;
    for (const Cls& h : closure) fresh.push_back(product(g, h));
    fresh.push_back(x_of(g));
    for (const Cls& f : fresh) {
      if (closure.insert(f).second) frontier.push_back(f);
    }
  }
  // #parts >= j = log_p(|ker x^j| / |ker x^(j-1)|)
  auto log_p = [p](std::size_t v) {
    std::size_t d = 0;
    for (std::size_t s = 1; s < v; s *= p) ++d;
    return d;
  };
  std::vector<std::size_t> at_least;
  std::size_t prev = 0;
  for (std::size_t j = 1; j <= 8; ++j) {
    std::size_t count = 0;
    for (Cls c : closure) {
      for (std::size_t k = 0; k < j; ++k) c = x_of(c);
      count += c == Cls{coset(1), 0} ? 1 : 0;
    }
    const std::size_t d = log_p(count);
    if (d == prev) break;
    at_least.push_back(d - prev);
    prev = d;
  }
  relkummer::JordanType t;
  for (std::size_t j = 0; j < at_least.size(); ++j) {
    const std::size_t next = j + 1 < at_least.size() ? at_least[j + 1] : 0;
    for (std::size_t c = 0; c < at_least[j] - next; ++c) t.parts.push_back(j + 1);
  }
  std::sort(t.parts.rbegin(), t.parts.rend());
  return t;
}

// All monic polynomials of a given degree over k, in encoding order.
inline std::vector<relkummer::Polynomial> monic_polynomials(const relkummer::GaloisField& k, std::size_t degree) {
  std::vector<relkummer::Polynomial> out;
  const std::uint64_t total = ipow(k.order(), degree);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<relkummer::FieldElement> c(degree + 1);
    std::uint64_t v = code;
    for (std::size_t i = 0; i < degree; ++i) {
      c[i] = k.element(v % k.order());
      v /= k.order();
    }
    c[degree] = k.one();
    out.emplace_back(std::move(c));
  }
  return out;
}

// Irreducibility by trial division against every monic polynomial of degree
// 1..deg/2.
inline bool irreducible_by_trial_division(const relkummer::GaloisField& k, const relkummer::Polynomial& f) {
  for (std::size_t d = 1; 2 * d <= static_cast<std::size_t>(f.degree()); ++d) {
    for (const auto& g : monic_polynomials(k, d)) {
      if (relkummer::poly::mod(k, f, g).is_zero()) return false;
    }
  }
  return f.degree() >= 1;
}

// Random monic irreducibles of degree 1..max_degree over k, found by
// rejection with the trial-division test; cached per degree.
class IrreduciblePool {
 public:
  IrreduciblePool(const relkummer::GaloisField& k, std::size_t max_degree, std::size_t per_degree,
                  std::uint64_t seed)
      : by_degree_(max_degree + 1) {
    std::mt19937_64 rng(seed);
    for (std::size_t d = 1; d <= max_degree; ++d) {
      std::set<std::vector<std::uint32_t>> seen;
      for (std::size_t tries = 0; by_degree_[d].size() < per_degree && tries < 50 * per_degree; ++tries) {
        std::vector<relkummer::FieldElement> c(d + 1);
        for (auto& x : c) x = k.element(relkummer::uniform_below(rng, k.order()));
        c[d] = k.one();
        std::vector<std::uint32_t> key;
        for (auto x : c) key.push_back(x.value);
        if (!seen.insert(key).second) continue;
        relkummer::Polynomial f(std::move(c));
        if (irreducible_by_trial_division(k, f)) by_degree_[d].push_back(std::move(f));
      }
    }
  }

  const std::vector<relkummer::Polynomial>& of_degree(std::size_t d) const { return by_degree_.at(d); }
  std::size_t max_degree() const { return by_degree_.size() - 1; }

 private:
  std::vector<std::vector<relkummer::Polynomial>> by_degree_;
};

}  // namespace oracle
