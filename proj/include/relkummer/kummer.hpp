#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relkummer/fpgmod.hpp"
#include "relkummer/fpmatrix.hpp"
#include "relkummer/ratfield.hpp"

namespace relkummer {

struct CyclicBlock {
  std::size_t offset = 0;
  std::size_t length = 0;
};

/// E_B = E(r_1, ..., r_n) with r_i^p = b_i held formally, where [b_1..b_n]
/// is the chain basis {x^j g_i} of the G-closure of B.
struct RadicalExtension {
  GaloisContext ctx;
  ClassModule module;
  std::vector<FactoredElement> radicands;  // b_i
  std::vector<CyclicBlock> blocks;

  std::size_t degree() const { return radicands.size(); }
};

/// An element of N_B = Gal(E_B / E): r_i -> zeta_p^{tau_i} r_i.
struct GaloisAutomorphism {
  FpVector exponents;

  bool is_identity() const { return fp::is_zero(exponents); }
  friend bool operator==(const GaloisAutomorphism&, const GaloisAutomorphism&) = default;
};

/// A lift of sigma to E_B: sigma~(r_i) = e_i * prod_j r_j^{c_ij}, with
/// sigma(b_i) = prod_j b_j^{c_ij} * e_i^p.
struct LiftData {
  std::vector<FpVector> coords;  // c_i
  std::vector<FactoredElement> corrections;  // e_i
};

// G-closure, cyclic decomposition and the canonical lift.
std::pair<RadicalExtension, LiftData> build_extension(const std::vector<FactoredElement>& generators,
                                                      const GaloisContext& ctx);
// Extension on a module whose basis is already a concatenation of chains.
RadicalExtension extension_on(const ClassModule& module, std::vector<CyclicBlock> blocks);
LiftData canonical_lift(const RadicalExtension& ext);
// Throws InvariantViolation unless sigma(b_i) = prod b_j^{c_ij} e_i^p exactly.
void verify_lift(const RadicalExtension& ext, const LiftData& lift);
// The lift r_i -> zeta_p^{twist_i} sigma~(r_i).
LiftData twist_lift(const RadicalExtension& ext, const LiftData& lift, const FpVector& twist);

// <tau, c> as an exponent of zeta_p. Throws DomainError if c is outside B.
std::uint32_t kummer_pairing(const GaloisAutomorphism& tau, const KummerClass& c,
                             const RadicalExtension& ext);

/// The G-action on N_B by conjugation, sigma(tau) = sigma~ tau sigma~^-1,
/// evaluated on radical monomials (E-part times r-exponents mod p).
class ConjugationAction {
 public:
  ConjugationAction(const RadicalExtension& ext, const LiftData& lift);

  GaloisAutomorphism apply(const GaloisAutomorphism& tau) const;
  // Column j is apply(e_j).
  const FpMatrix& matrix() const { return matrix_; }

 private:
  struct Monomial {
    DenseElement coeff;
    FpVector exps;
  };
  Monomial lift_image(const Monomial& y) const;

  ClassSpace space_;
  std::uint32_t p_ = 2;
  std::uint64_t q_ = 2;
  FieldElement zeta_p_;
  std::vector<DenseElement> radicands_;
  std::vector<DenseElement> corrections_;
  std::vector<FpVector> coords_;
  std::vector<Monomial> preimages_;  // sigma~^-1 (r_i)
  FpMatrix matrix_;
};

GaloisAutomorphism sigma_on_N(const GaloisAutomorphism& tau, const RadicalExtension& ext,
                              const LiftData& lift);
// Independent route: Psi(sigma tau)([b_j]) = <tau, sigma^-1 [b_j]>.
GaloisAutomorphism sigma_on_N_dual(const GaloisAutomorphism& tau, const RadicalExtension& ext);
// N_B as an A-module in the basis e_1..e_n.
ModulePresentation galois_module(const RadicalExtension& ext, const ConjugationAction& action);

/// rho: A -> Gal(E(a^{1/p}, (xa)^{1/p}, ...)/E), rho(1) = (0, ..., 0, 1).
struct RhoMap {
  std::size_t s = 0;
  RadicalExtension ext;
  // images[k] = rho(x^k) for k = 0..q-1
  std::vector<GaloisAutomorphism> images;

  GaloisAutomorphism apply(const GroupAlgebraElement& c) const;
};

// Throws DomainError for a trivial class.
RhoMap rho_map(const FactoredElement& a, const GaloisContext& ctx);

struct CheckResult {
  std::string name;
  bool pass = true;
  std::size_t cases = 0;  // individual identities evaluated
  std::string witness;    // first counterexample when failing
};

CheckResult verify_pairing_equivariance(const RadicalExtension& ext, const ConjugationAction& action);
CheckResult verify_pairing_equivariance(const RadicalExtension& ext, const LiftData& lift);

struct N1Split {
  std::vector<FpVector> n1;          // N[1] = {tau : <tau, B[1]> = 0}
  std::vector<FpVector> complement;  // N_{B[1]} = {tau : <tau, B_1> = 0}
  ModulePresentation n1_module;
  ModulePresentation complement_module;
};

N1Split n1_submodule(const RadicalExtension& ext, const ConjugationAction& action,
                     std::size_t split_index);

struct VerificationReport {
  std::vector<std::string> basis;  // representatives of the basis of B/E^{xp}
  std::vector<std::size_t> annihilator_exponents;  // per cyclic generator
  JordanType module_type;
  JordanType galois_type;
  bool closure_enlarged = false;
  std::vector<std::size_t> degenerate_generators;  // indices of p-th powers
  std::vector<CheckResult> checks;
  std::uint64_t seed = 0;
  bool verdict = false;

  const CheckResult* find(const std::string& name) const;
};

// Runs the full chain of checks; pure function of its arguments.
VerificationReport verify_relative_kummer(const std::vector<FactoredElement>& generators,
                                          const GaloisContext& ctx, std::uint64_t seed = 0);

}  // namespace relkummer
