#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "relkummer/ffield.hpp"
#include "relkummer/fpmatrix.hpp"
#include "relkummer/polyarith.hpp"

namespace relkummer {

/// The cyclic extension E = k(t) over F = k(t^q), q = p^l, with generator
/// sigma: t -> zeta t. Immutable and cheap to copy (the field is shared).
struct GaloisContext {
  std::uint32_t p = 2;
  std::uint32_t l = 1;
  std::uint64_t q = 2;
  std::shared_ptr<const GaloisField> field;
  FieldElement zeta;    // order q
  FieldElement zeta_p;  // zeta^(p^(l-1)), order p
  // character_units[c] is the least element of k with unit character c.
  std::vector<FieldElement> character_units;

  const GaloisField& k() const { return *field; }
};

// Validates p prime, l >= 1, char k != p, p^l | |k| - 1 and ord(zeta) = p^l;
// throws UnsupportedInstance naming the failed condition. Without an
// explicit zeta, the canonical primitive p^l-th root is used.
GaloisContext make_context(std::uint32_t p, std::uint32_t l,
                           std::shared_ptr<const GaloisField> field,
                           std::optional<FieldElement> zeta = std::nullopt);

/// unit * prod f_i^{e_i} in E^x: monic irreducible f_i in canonical order,
/// exponents nonzero.
struct FactoredElement {
  FieldElement unit{1};
  std::vector<std::pair<Polynomial, std::int64_t>> factors;

  bool is_constant() const { return factors.empty(); }
  friend bool operator==(const FactoredElement&, const FactoredElement&) = default;
};

namespace ratfunc {

FactoredElement from_unit(FieldElement u);
// Factors a nonzero polynomial.
FactoredElement from_polynomial(const GaloisField& k, const Polynomial& f, std::uint64_t seed = 0);
// Wraps a factorization; exponents multiply by `sign` (+1 or -1).
FactoredElement from_factorization(const Factorization& f, int sign = 1);
FactoredElement multiply(const GaloisField& k, const FactoredElement& a, const FactoredElement& b);
FactoredElement inverse(const GaloisField& k, const FactoredElement& a);
FactoredElement divide(const GaloisField& k, const FactoredElement& a, const FactoredElement& b);
FactoredElement power(const GaloisField& k, const FactoredElement& a, std::int64_t e);
// Numerator and denominator polynomials of the expanded fraction.
std::pair<Polynomial, Polynomial> expand(const GaloisField& k, const FactoredElement& a);
// Parseable form, e.g. "3*(t+1)*(t^2+2)^-1".
std::string to_string(const GaloisField& k, const FactoredElement& a);

}  // namespace ratfunc

FactoredElement sigma(const FactoredElement& e, const GaloisContext& ctx);
// sigma^j, j may be negative.
FactoredElement sigma_power(const FactoredElement& e, std::int64_t j, const GaloisContext& ctx);
bool is_pth_power_in_E(const GaloisField& k, const FactoredElement& e, std::uint32_t p);
// Deterministic p-th root; throws DomainError if e is not a p-th power.
FactoredElement pth_root_in_E(const GaloisField& k, const FactoredElement& e, std::uint32_t p);

/// A class [a] in E^x / E^{x p}. The representative has exponents in
/// [1, p) and the canonical unit for its character, so two classes are
/// equal exactly when their representatives are.
struct KummerClass {
  FactoredElement representative;
  std::uint32_t unit_coordinate = 0;

  bool is_trivial() const { return representative.factors.empty() && unit_coordinate == 0; }
  friend bool operator==(const KummerClass& a, const KummerClass& b) {
    return a.representative == b.representative;
  }
};

KummerClass class_of(const FactoredElement& e, const GaloisContext& ctx);
// x [a] = [sigma(a) / a].
KummerClass x_action(const KummerClass& c, const GaloisContext& ctx);
KummerClass class_product(const KummerClass& a, const KummerClass& b, const GaloisContext& ctx);

// An element of E^x supported on a ClassSpace: unit * prod support_i^e_i.
struct DenseElement {
  FieldElement unit{1};
  std::vector<std::int64_t> exponents;

  friend bool operator==(const DenseElement&, const DenseElement&) = default;
};

/// The finite coordinate space of classes supported on a sigma-stable set
/// of irreducibles: coordinates are (exponent mod p per irreducible) with
/// the unit character appended last. Frozen at construction.
class ClassSpace {
 public:
  ClassSpace() = default;
  // Support is the sigma-orbit closure of `irreducibles` (monic, irreducible).
  ClassSpace(const GaloisContext& ctx, const std::vector<Polynomial>& irreducibles);
  static ClassSpace closure_of(const GaloisContext& ctx, const std::vector<FactoredElement>& elems);

  const GaloisContext& context() const { return ctx_; }
  const std::vector<Polynomial>& support() const { return support_; }
  std::size_t dimension() const { return support_.size() + 1; }
  std::size_t unit_index() const { return support_.size(); }
  std::optional<std::size_t> index_of(const Polynomial& f) const;

  bool contains(const FactoredElement& e) const;
  // Throws DomainError when the class has support outside this space.
  FpVector coordinates(const KummerClass& c) const;
  KummerClass class_at(const FpVector& coords) const;
  // Matrix of x = sigma - 1 on coordinates (columns are images).
  FpMatrix x_matrix() const;

  DenseElement to_dense(const FactoredElement& e) const;
  FactoredElement to_factored(const DenseElement& e) const;
  DenseElement one() const;
  DenseElement multiply(const DenseElement& a, const DenseElement& b) const;
  DenseElement power(const DenseElement& a, std::int64_t e) const;
  DenseElement sigma(const DenseElement& a) const;

 private:
  GaloisContext ctx_;
  std::vector<Polynomial> support_;
  std::map<Polynomial, std::size_t, CanonicalLess> index_;
  // sigma(support_[i]) = sigma_unit_[i] * support_[sigma_index_[i]]
  std::vector<std::size_t> sigma_index_;
  std::vector<FieldElement> sigma_unit_;
};

// Rational-function expression in t, e.g. "3*(t+1)/(t^2+2)". Throws
// ParseError (with column) on bad syntax and DomainError on division by
// zero or a zero result.
FactoredElement parse_ratfunc(std::string_view expr, const GaloisContext& ctx,
                              std::uint64_t seed = 0, std::size_t line = 1);
// Parses a single field literal: an integer or "[c0,c1,...]".
FieldElement parse_field_literal(std::string_view text, const GaloisField& k);

}  // namespace relkummer
