#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace relkummer {

// Small integer number theory used by field construction and validation.
bool is_prime(std::uint64_t n);
// Prime factorization by trial division, primes ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factor_integer(std::uint64_t n);
std::uint64_t ipow(std::uint64_t base, unsigned exp);

// An element of GF(r^m), stored as the base-r encoding of its coefficient
// vector in the residue ring GF(r)[u]/(modulus): value = sum c_i r^i.
// Elements are plain values; arithmetic goes through the owning GaloisField.
struct FieldElement {
  std::uint32_t value = 0;

  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

/// The finite field k = GF(r^m).
///
/// All tables (generator, small-field discrete logs, factorization of the
/// multiplicative group order) are built eagerly in the constructor; after
/// construction the object is immutable and safe to share between threads.
class GaloisField {
 public:
  static constexpr std::uint64_t kDefaultSizeCap = 1'000'000;
  // Fields at or below this size get a full discrete-log table.
  static constexpr std::uint64_t kDlogTableLimit = 1'000;

  // Uses the lexicographically least monic irreducible modulus when
  // `modulus` is empty. `modulus` is little-endian and must be monic of
  // degree m. Throws UnsupportedInstance on invalid parameters.
  explicit GaloisField(std::uint32_t characteristic, std::uint32_t degree = 1,
                       std::vector<std::uint32_t> modulus = {},
                       std::uint64_t size_cap = kDefaultSizeCap);

  std::uint32_t characteristic() const { return r_; }
  std::uint32_t degree() const { return m_; }
  std::uint64_t order() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  // Integer literal reduced mod r (negative values allowed).
  FieldElement from_int(std::int64_t v) const;
  // Little-endian coefficients, each reduced mod r; at most m entries.
  FieldElement from_coefficients(std::span<const std::int64_t> coeffs) const;
  std::vector<std::uint32_t> coefficients(FieldElement a) const;
  // i-th element in the fixed enumeration order (i < order()).
  FieldElement element(std::uint64_t i) const { return {static_cast<std::uint32_t>(i)}; }
  bool contains(FieldElement a) const { return a.value < q_; }

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const;
  // Square-and-multiply; negative exponents go through the inverse.
  FieldElement pow(FieldElement a, std::int64_t e) const;

  // Least element (in enumeration order) of multiplicative order |k| - 1.
  FieldElement find_primitive_root() const { return generator_; }
  // Discrete logarithm base find_primitive_root(), in [0, |k| - 1).
  std::uint64_t dlog(FieldElement a) const;
  std::uint64_t multiplicative_order(FieldElement a) const;

  // g^((|k|-1)/n); throws UnsupportedInstance unless n divides |k| - 1.
  FieldElement primitive_root_of_unity(std::uint64_t n) const;
  bool is_pth_power(FieldElement u, std::uint64_t p) const;
  // chi(u) in [0, p) with u^((|k|-1)/p) = zeta_p^chi(u).
  std::uint64_t unit_character(FieldElement u, std::uint64_t p, FieldElement zeta_p) const;
  // The p-th root whose discrete log is the least solution of p x = dlog(u).
  FieldElement pth_root(FieldElement u, std::uint64_t p) const;
  // Inverse of the Frobenius a -> a^r.
  FieldElement frobenius_root(FieldElement a) const;

  // "3" for prime fields, "[c0,c1,...]" otherwise.
  std::string to_string(FieldElement a) const;
  // "GF(r)" or "GF(r^m)".
  std::string name() const;

  friend bool operator==(const GaloisField& a, const GaloisField& b) {
    return a.r_ == b.r_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
  }

 private:
  std::uint32_t encode(std::span<const std::uint32_t> digits) const;
  std::vector<std::uint32_t> decode(FieldElement a) const;
  std::uint64_t dlog_pohlig_hellman(FieldElement a) const;
  void require_element(FieldElement a) const;
  void require_divides_group_order(std::uint64_t p) const;

  std::uint32_t r_;
  std::uint32_t m_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::pair<std::uint64_t, unsigned>> group_order_factors_;
  FieldElement generator_{1};
  std::vector<std::uint32_t> dlog_table_;
};

// Lexicographically least (little-endian coefficient order) monic
// irreducible polynomial of degree m over GF(r).
std::vector<std::uint32_t> canonical_modulus(std::uint32_t r, std::uint32_t m);
// Rabin irreducibility test over the prime field GF(r); `f` little-endian.
bool is_irreducible_over_prime_field(std::span<const std::uint32_t> f, std::uint32_t r);

}  // namespace relkummer
