#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "relkummer/fpmatrix.hpp"
#include "relkummer/ratfield.hpp"

namespace relkummer {

/// An element of A = F_p[G] = F_p[x]/(x^q), x = sigma - 1; coefficient of
/// x^i at index i, length exactly q.
struct GroupAlgebraElement {
  std::uint32_t p = 2;
  std::vector<std::uint32_t> coeffs;

  static GroupAlgebraElement x_power(std::uint32_t p, std::uint64_t q, std::uint64_t i);
  // sigma^j = (1 + x)^j for j >= 0.
  static GroupAlgebraElement sigma_power(std::uint32_t p, std::uint64_t q, std::uint64_t j);

  std::uint64_t q() const { return coeffs.size(); }
  bool is_zero() const;
  // Least index with a nonzero coefficient; q for zero.
  std::uint64_t valuation() const;

  friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;
};

GroupAlgebraElement multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
// Columns a * x^j for j < q: spans the principal ideal generated by a.
FpMatrix ideal_generators(const GroupAlgebraElement& a);

/// A finitely generated A-module as an F_p basis plus the matrix of x
/// (column j is the image of basis vector j).
struct ModulePresentation {
  std::uint32_t p = 2;
  std::uint64_t q = 2;
  std::vector<std::string> basis_labels;
  FpMatrix x;

  std::size_t dim() const { return x.rows(); }
};

// Throws InvariantViolation unless x is square, matches the labels and
// satisfies x^q = 0.
void validate(const ModulePresentation& m);

struct JordanType {
  std::vector<std::size_t> parts;  // weakly decreasing

  std::size_t total() const;
  std::string to_string() const;
  friend bool operator==(const JordanType&, const JordanType&) = default;
};

// Partition from the rank sequence of x: #parts >= j = rank x^(j-1) - rank x^j.
JordanType jordan_type(const ModulePresentation& m);
JordanType jordan_type_of(const FpMatrix& x);
// Block-diagonal nilpotent matrix with standard cyclic blocks of the given
// sizes (x e_i = e_(i+1) within a block).
FpMatrix jordan_matrix(const JordanType& type, std::uint32_t p);

struct CyclicSummand {
  FpVector generator;
  std::size_t dimension = 0;
};

// Generators g_i whose chains {x^j g_i : j < l_i} form a basis, longest
// chains first; within a chain length, candidates are taken from the
// reduced-echelon kernel basis in column order.
std::vector<CyclicSummand> cyclic_decompose(const ModulePresentation& m);
// Concatenated chain basis {g_1, x g_1, ..., g_2, x g_2, ...} as columns.
std::vector<FpVector> chain_basis(const ModulePresentation& m,
                                  const std::vector<CyclicSummand>& summands);

// Twisted dual Hom(M, F_p) with (g theta)(m) = theta(g^-1 m): in the dual
// basis, sigma acts by transpose(S^-1) with S = x + 1.
ModulePresentation dual_module(const ModulePresentation& m);
// The functional f with f(x^i g) = 0 for i < l - 1 and f(x^(l-1) g) = 1, in
// dual-basis coordinates. Throws DomainError unless m is a single standard
// cyclic block.
FpVector dual_generator(const ModulePresentation& m);

// Sub-presentation on an x-stable subspace spanned by independent columns
// `basis` (ambient coordinates). Throws DomainError if not x-stable.
ModulePresentation restrict_to(const ModulePresentation& m, const std::vector<FpVector>& basis);
bool is_stable(const FpMatrix& x, const std::vector<FpVector>& basis);
// Dimension of the A-span of v.
std::size_t cyclic_span_dimension(const FpMatrix& x, const FpVector& v);

/// The A-submodule of E^x/E^{x p} generated by a set of classes, inside the
/// frozen coordinate space of their sigma-orbit support.
struct ClassModule {
  ClassSpace space;
  std::vector<FpVector> basis;  // ambient coordinates
  std::vector<KummerClass> classes;
  ModulePresentation presentation;
  // Rank of the generators' own span before G-closure.
  std::size_t generator_rank = 0;

  bool closure_enlarged() const { return basis.size() > generator_rank; }
  // Coordinates in `basis`, or nothing when c lies outside the module.
  std::optional<FpVector> coordinates_of(const KummerClass& c) const;
};

// Krylov closure: for each generator in order, append g, x g, x^2 g, ...
// until the next vector is already in the span.
ClassModule span_closure(const std::vector<KummerClass>& generators, const GaloisContext& ctx);
// Same module presented in another basis of the same subspace.
ClassModule rebase(const ClassModule& m, const std::vector<FpVector>& new_basis);

// Least s >= 0 with x^s [a] trivial.
std::size_t annihilator_exponent(const KummerClass& c, const GaloisContext& ctx);

}  // namespace relkummer
