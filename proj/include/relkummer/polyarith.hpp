#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "relkummer/ffield.hpp"

namespace relkummer {

// Univariate polynomial over k, little-endian, no trailing zeros. The zero
// polynomial has no coefficients.
struct Polynomial {
  std::vector<FieldElement> coeffs;

  Polynomial() = default;
  explicit Polynomial(std::vector<FieldElement> c) : coeffs(std::move(c)) { normalize(); }

  bool is_zero() const { return coeffs.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  FieldElement leading() const { return coeffs.empty() ? FieldElement{0} : coeffs.back(); }
  FieldElement coeff(std::size_t i) const { return i < coeffs.size() ? coeffs[i] : FieldElement{0}; }
  void normalize() {
    while (!coeffs.empty() && coeffs.back().value == 0) coeffs.pop_back();
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

// Canonical factor order: degree first, then little-endian coefficient
// lexicographic order on the encoded coefficients.
struct CanonicalLess {
  bool operator()(const Polynomial& a, const Polynomial& b) const;
};

struct Factorization {
  FieldElement unit{1};
  std::vector<std::pair<Polynomial, std::uint32_t>> factors;
};

namespace poly {

Polynomial constant(FieldElement c);
Polynomial monomial(const GaloisField& k, FieldElement c, std::size_t degree);
// t
Polynomial variable(const GaloisField& k);
// Little-endian coefficient list from integers reduced mod r.
Polynomial from_ints(const GaloisField& k, const std::vector<std::int64_t>& c);

Polynomial add(const GaloisField& k, const Polynomial& a, const Polynomial& b);
Polynomial sub(const GaloisField& k, const Polynomial& a, const Polynomial& b);
Polynomial scale(const GaloisField& k, const Polynomial& a, FieldElement c);
Polynomial mul(const GaloisField& k, const Polynomial& a, const Polynomial& b);
Polynomial pow(const GaloisField& k, const Polynomial& a, std::uint64_t e);
// Quotient and remainder; throws DomainError on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const GaloisField& k, const Polynomial& a,
                                         const Polynomial& b);
Polynomial mod(const GaloisField& k, const Polynomial& a, const Polynomial& b);
// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const GaloisField& k, Polynomial a, Polynomial b);
Polynomial make_monic(const GaloisField& k, const Polynomial& a);
Polynomial derivative(const GaloisField& k, const Polynomial& a);
Polynomial mulmod(const GaloisField& k, const Polynomial& a, const Polynomial& b,
                  const Polynomial& m);
Polynomial powmod(const GaloisField& k, const Polynomial& a, std::uint64_t e, const Polynomial& m);
FieldElement evaluate(const GaloisField& k, const Polynomial& a, FieldElement x);

// Rabin test; throws DomainError for constants.
bool is_irreducible(const GaloisField& k, const Polynomial& f);

// Complete factorization: square-free split, distinct-degree split, then
// seeded equal-degree splitting (Cantor-Zassenhaus, trace variant in
// characteristic 2). Throws DomainError for the zero polynomial.
Factorization factor(const GaloisField& k, const Polynomial& f, std::uint64_t seed = 0);

// f(c t) = unit * g with unit = c^deg f and g monic; f must be monic.
std::pair<FieldElement, Polynomial> substitute_scale(const GaloisField& k, const Polynomial& f,
                                                     FieldElement c);

// Human/parser form in the variable t, e.g. "t^2+3*t+1".
std::string to_string(const GaloisField& k, const Polynomial& f);

}  // namespace poly
}  // namespace relkummer
