#include "relkummer/kummer.hpp"

#include <algorithm>
#include <random>

#include "relkummer/errors.hpp"
#include "relkummer/random.hpp"

namespace relkummer {

namespace {

GaloisAutomorphism basis_automorphism(std::size_t n, std::size_t j) {
  return GaloisAutomorphism{fp::unit_vector(n, j)};
}

std::string vec(const FpVector& v) { return fp::to_string(v); }

}  // namespace

RadicalExtension extension_on(const ClassModule& module, std::vector<CyclicBlock> blocks) {
  RadicalExtension ext;
  ext.ctx = module.space.context();
  ext.module = module;
  ext.blocks = std::move(blocks);
  for (const auto& c : module.classes) ext.radicands.push_back(c.representative);
  return ext;
}

LiftData canonical_lift(const RadicalExtension& ext) {
  const GaloisContext& ctx = ext.ctx;
  const GaloisField& k = ctx.k();
  LiftData lift;
  for (const auto& b : ext.radicands) {
    const FactoredElement image = sigma(b, ctx);
    auto c = ext.module.coordinates_of(class_of(image, ctx));
    if (!c) throw InvariantViolation("sigma(b) left the G-closure");
    FactoredElement product = ratfunc::from_unit(k.one());
    for (std::size_t j = 0; j < c->size(); ++j) {
      if ((*c)[j] != 0) {
        product = ratfunc::multiply(k, product, ratfunc::power(k, ext.radicands[j], (*c)[j]));
      }
    }
    const FactoredElement quotient = ratfunc::divide(k, image, product);
    if (!is_pth_power_in_E(k, quotient, ctx.p)) {
      throw InvariantViolation("lift correction is not a p-th power");
    }
    lift.coords.push_back(std::move(*c));
    lift.corrections.push_back(pth_root_in_E(k, quotient, ctx.p));
  }
  return lift;
}

void verify_lift(const RadicalExtension& ext, const LiftData& lift) {
  const GaloisContext& ctx = ext.ctx;
  const GaloisField& k = ctx.k();
  if (lift.coords.size() != ext.degree() || lift.corrections.size() != ext.degree()) {
    throw InvariantViolation("lift data has the wrong size");
  }
  for (std::size_t i = 0; i < ext.degree(); ++i) {
    FactoredElement rhs = ratfunc::power(k, lift.corrections[i], ctx.p);
    for (std::size_t j = 0; j < ext.degree(); ++j) {
      rhs = ratfunc::multiply(k, rhs, ratfunc::power(k, ext.radicands[j], lift.coords[i][j]));
    }
    if (rhs != sigma(ext.radicands[i], ctx)) {
      throw InvariantViolation("lift identity fails for b_" + std::to_string(i));
    }
  }
}

LiftData twist_lift(const RadicalExtension& ext, const LiftData& lift, const FpVector& twist) {
  const GaloisField& k = ext.ctx.k();
  LiftData out = lift;
  for (std::size_t i = 0; i < out.corrections.size(); ++i) {
    out.corrections[i].unit = k.mul(out.corrections[i].unit, k.pow(ext.ctx.zeta_p, twist.at(i)));
  }
  return out;
}

std::pair<RadicalExtension, LiftData> build_extension(const std::vector<FactoredElement>& generators,
                                                      const GaloisContext& ctx) {
  std::vector<KummerClass> classes;
  for (const auto& g : generators) classes.push_back(class_of(g, ctx));
  const ClassModule closure = span_closure(classes, ctx);

  const auto summands = cyclic_decompose(closure.presentation);
  std::vector<CyclicBlock> blocks;
  std::size_t offset = 0;
  for (const auto& s : summands) {
    blocks.push_back(CyclicBlock{offset, s.dimension});
    offset += s.dimension;
  }
  // chain vectors are in module coordinates; map them to ambient coordinates
  std::vector<FpVector> ambient;
  const FpMatrix basis =
      FpMatrix::from_columns(closure.basis, closure.space.dimension(), ctx.p);
  for (const auto& v : chain_basis(closure.presentation, summands)) {
    ambient.push_back(fp::apply(basis, v));
  }
  RadicalExtension ext = extension_on(rebase(closure, ambient), std::move(blocks));
  LiftData lift = canonical_lift(ext);
  verify_lift(ext, lift);
  return {std::move(ext), std::move(lift)};
}

std::uint32_t kummer_pairing(const GaloisAutomorphism& tau, const KummerClass& c,
                             const RadicalExtension& ext) {
  if (tau.exponents.size() != ext.degree()) throw DomainError("automorphism has the wrong length");
  const auto coeffs = ext.module.coordinates_of(c);
  if (!coeffs) throw DomainError("class lies outside B/E^{xp}");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < coeffs->size(); ++i) {
    acc = (acc + std::uint64_t{(*coeffs)[i]} * tau.exponents[i]) % ext.ctx.p;
  }
  return static_cast<std::uint32_t>(acc);
}

ConjugationAction::ConjugationAction(const RadicalExtension& ext, const LiftData& lift)
    : space_(ext.module.space),
      p_(ext.ctx.p),
      q_(ext.ctx.q),
      zeta_p_(ext.ctx.zeta_p),
      coords_(lift.coords) {
  const std::size_t n = ext.degree();
  for (const auto& b : ext.radicands) radicands_.push_back(space_.to_dense(b));
  for (const auto& e : lift.corrections) corrections_.push_back(space_.to_dense(e));

  // sigma~ has order dividing p q, so sigma~^-1 = sigma~^(pq - 1).
  for (std::size_t i = 0; i < n; ++i) {
    const Monomial r{space_.one(), fp::unit_vector(n, i)};
    Monomial y = r;
    for (std::uint64_t step = 1; step < std::uint64_t{p_} * q_; ++step) y = lift_image(y);
    const Monomial back = lift_image(y);
    if (back.coeff != r.coeff || back.exps != r.exps) {
      throw InvariantViolation("lift does not have order dividing pq on r_" + std::to_string(i));
    }
    preimages_.push_back(std::move(y));
  }
  std::vector<FpVector> columns;
  for (std::size_t j = 0; j < n; ++j) columns.push_back(apply(basis_automorphism(n, j)).exponents);
  matrix_ = FpMatrix::from_columns(columns, n, p_);
}

ConjugationAction::Monomial ConjugationAction::lift_image(const Monomial& y) const {
  const std::size_t n = y.exps.size();
  Monomial out{space_.sigma(y.coeff), FpVector(n, 0)};
  std::vector<std::int64_t> total(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint32_t m = y.exps[j];
    if (m == 0) continue;
    out.coeff = space_.multiply(out.coeff, space_.power(corrections_[j], m));
    for (std::size_t k = 0; k < n; ++k) total[k] += std::int64_t{m} * coords_[j][k];
  }
  const auto p = static_cast<std::int64_t>(p_);
  for (std::size_t k = 0; k < n; ++k) {
    // r_k^total = r_k^(total mod p) * b_k^(total div p)
    out.exps[k] = static_cast<std::uint32_t>(total[k] % p);
    if (total[k] >= p) out.coeff = space_.multiply(out.coeff, space_.power(radicands_[k], total[k] / p));
  }
  return out;
}

GaloisAutomorphism ConjugationAction::apply(const GaloisAutomorphism& tau) const {
  const std::size_t n = preimages_.size();
  if (tau.exponents.size() != n) throw DomainError("automorphism has the wrong length");
  const GaloisField& k = space_.context().k();
  GaloisAutomorphism out{FpVector(n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    // tau acts on sigma~^-1(r_i) by the root of unity of its r-exponents
    Monomial z = preimages_[i];
    std::uint64_t twist = 0;
    for (std::size_t j = 0; j < n; ++j) twist += std::uint64_t{tau.exponents[j]} * z.exps[j];
    z.coeff.unit = k.mul(z.coeff.unit, k.pow(zeta_p_, static_cast<std::int64_t>(twist % p_)));
    const Monomial w = lift_image(z);
    const bool pure_radical =
        w.exps == fp::unit_vector(n, i) &&
        std::all_of(w.coeff.exponents.begin(), w.coeff.exponents.end(), [](std::int64_t e) { return e == 0; });
    if (!pure_radical) throw InvariantViolation("conjugate does not fix the radical line of r_" + std::to_string(i));
    std::uint32_t found = p_;
    FieldElement power = k.one();
    for (std::uint32_t e = 0; e < p_; ++e) {
      if (power == w.coeff.unit) {
        found = e;
        break;
      }
      power = k.mul(power, zeta_p_);
    }
    if (found == p_) throw InvariantViolation("conjugate moves r_" + std::to_string(i) + " off mu_p r_i");
    out.exponents[i] = found;
  }
  return out;
}

GaloisAutomorphism sigma_on_N(const GaloisAutomorphism& tau, const RadicalExtension& ext,
                              const LiftData& lift) {
  return ConjugationAction(ext, lift).apply(tau);
}

GaloisAutomorphism sigma_on_N_dual(const GaloisAutomorphism& tau, const RadicalExtension& ext) {
  GaloisAutomorphism out{FpVector(ext.degree(), 0)};
  for (std::size_t j = 0; j < ext.degree(); ++j) {
    const KummerClass preimage = class_of(sigma_power(ext.radicands[j], -1, ext.ctx), ext.ctx);
    out.exponents[j] = kummer_pairing(tau, preimage, ext);
  }
  return out;
}

ModulePresentation galois_module(const RadicalExtension& ext, const ConjugationAction& action) {
  ModulePresentation m;
  m.p = ext.ctx.p;
  m.q = ext.ctx.q;
  m.x = fp::sub(action.matrix(), FpMatrix::identity(ext.degree(), ext.ctx.p));
  for (std::size_t i = 0; i < ext.degree(); ++i) m.basis_labels.push_back("tau_" + std::to_string(i + 1));
  return m;
}

GaloisAutomorphism RhoMap::apply(const GroupAlgebraElement& c) const {
  const std::uint32_t p = ext.ctx.p;
  FpVector acc(ext.degree(), 0);
  for (std::size_t k = 0; k < c.coeffs.size() && k < images.size(); ++k) {
    acc = fp::add(acc, fp::scale(images[k].exponents, c.coeffs[k], p), p);
  }
  return GaloisAutomorphism{acc};
}

RhoMap rho_map(const FactoredElement& a, const GaloisContext& ctx) {
  const KummerClass cls = class_of(a, ctx);
  if (cls.is_trivial()) throw DomainError("rho_map needs a nontrivial class");
  const ClassModule closure = span_closure({cls}, ctx);
  RhoMap rho;
  rho.s = closure.basis.size();
  rho.ext = extension_on(closure, {CyclicBlock{0, rho.s}});
  const LiftData lift = canonical_lift(rho.ext);
  verify_lift(rho.ext, lift);
  const ConjugationAction action(rho.ext, lift);
  GaloisAutomorphism cur = basis_automorphism(rho.s, rho.s - 1);
  for (std::uint64_t k = 0; k < ctx.q; ++k) {
    rho.images.push_back(cur);
    // rho(x^(k+1)) = sigma(rho(x^k)) - rho(x^k)
    cur = GaloisAutomorphism{fp::sub(action.apply(cur).exponents, cur.exponents, ctx.p)};
  }
  return rho;
}

CheckResult verify_pairing_equivariance(const RadicalExtension& ext, const ConjugationAction& action) {
  CheckResult r{"pairing_equivariance", true, 0, {}};
  const std::size_t n = ext.degree();
  std::vector<KummerClass> classes, images;
  for (const auto& b : ext.radicands) {
    classes.push_back(class_of(b, ext.ctx));
    images.push_back(class_of(sigma(b, ext.ctx), ext.ctx));
  }
  for (std::size_t j = 0; j < n; ++j) {
    const GaloisAutomorphism tau = basis_automorphism(n, j);
    const GaloisAutomorphism moved = action.apply(tau);
    for (std::size_t i = 0; i < n; ++i) {
      ++r.cases;
      const auto lhs = kummer_pairing(moved, images[i], ext);
      const auto rhs = kummer_pairing(tau, classes[i], ext);
      if (lhs != rhs && r.pass) {
        r.pass = false;
        r.witness = "tau=e_" + std::to_string(j + 1) + ", b_" + std::to_string(i + 1) + ": <sigma tau, sigma b> = " +
                    std::to_string(lhs) + " but <tau, b> = " + std::to_string(rhs);
      }
    }
  }
  return r;
}

CheckResult verify_pairing_equivariance(const RadicalExtension& ext, const LiftData& lift) {
  return verify_pairing_equivariance(ext, ConjugationAction(ext, lift));
}

N1Split n1_submodule(const RadicalExtension& ext, const ConjugationAction& action,
                     std::size_t split_index) {
  const std::size_t n = ext.degree();
  const std::uint32_t p = ext.ctx.p;
  const CyclicBlock block = ext.blocks.at(split_index);
  // Pairing rows <e_j, [b_i]> split by membership of b_i in B_1.
  std::vector<FpVector> rows_rest, rows_first;
  for (std::size_t i = 0; i < n; ++i) {
    const KummerClass c = class_of(ext.radicands[i], ext.ctx);
    FpVector row(n, 0);
    for (std::size_t j = 0; j < n; ++j) row[j] = kummer_pairing(basis_automorphism(n, j), c, ext);
    const bool in_first = i >= block.offset && i < block.offset + block.length;
    (in_first ? rows_first : rows_rest).push_back(std::move(row));
  }
  auto annihilator = [&](const std::vector<FpVector>& rows) {
    FpMatrix m(rows.size(), n, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
    }
    return fp::nullspace(m);
  };
  N1Split split;
  split.n1 = annihilator(rows_rest);
  split.complement = annihilator(rows_first);
  const ModulePresentation galois = galois_module(ext, action);
  split.n1_module = restrict_to(galois, split.n1);
  split.complement_module = restrict_to(galois, split.complement);
  return split;
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

// One named check; an exception inside a check is recorded as its failure.
template <typename F>
CheckResult run_check(const std::string& name, F&& body) {
  CheckResult r{name, true, 0, {}};
  try {
    body(r);
  } catch (const InvariantViolation& e) {
    r.pass = false;
    r.witness = std::string("invariant violation: ") + e.what();
  } catch (const DomainError& e) {
    r.pass = false;
    r.witness = std::string("domain error: ") + e.what();
  }
  return r;
}

void fail_once(CheckResult& r, const std::string& witness) {
  if (r.pass) {
    r.pass = false;
    r.witness = witness;
  }
}

FpVector random_vector(std::mt19937_64& rng, std::size_t n, std::uint32_t p) {
  FpVector v(n);
  for (auto& x : v) x = static_cast<std::uint32_t>(uniform_below(rng, p));
  return v;
}

}  // namespace

VerificationReport verify_relative_kummer(const std::vector<FactoredElement>& generators,
                                          const GaloisContext& ctx, std::uint64_t seed) {
  VerificationReport report;
  report.seed = seed;
  std::mt19937_64 rng(seed);
  const GaloisField& k = ctx.k();
  const std::uint32_t p = ctx.p;

  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (is_pth_power_in_E(k, generators[i], p)) report.degenerate_generators.push_back(i);
  }

  auto [ext, lift] = build_extension(generators, ctx);
  const std::size_t n = ext.degree();
  const ModulePresentation& module = ext.module.presentation;
  report.closure_enlarged = ext.module.closure_enlarged();
  for (const auto& b : ext.radicands) report.basis.push_back(ratfunc::to_string(k, b));
  for (const auto& block : ext.blocks) {
    report.annihilator_exponents.push_back(
        annihilator_exponent(class_of(ext.radicands[block.offset], ctx), ctx));
  }
  report.module_type = jordan_type(module);

  report.checks.push_back(run_check("span_closure", [&](CheckResult& r) {
    validate(module);
    r.cases = n;
    if (!is_stable(ext.module.space.x_matrix(), ext.module.basis)) fail_once(r, "closure is not x-stable");
    for (std::size_t i = 0; i < ext.blocks.size(); ++i) {
      if (report.annihilator_exponents[i] != ext.blocks[i].length) {
        fail_once(r, "annihilator exponent of generator " + std::to_string(i + 1) + " is " +
                         std::to_string(report.annihilator_exponents[i]) + " but its summand has dimension " +
                         std::to_string(ext.blocks[i].length));
      }
    }
  }));

  report.checks.push_back(run_check("lift_identity", [&](CheckResult& r) {
    r.cases = n;
    verify_lift(ext, lift);
  }));

  const ConjugationAction action(ext, lift);

  report.checks.push_back(run_check("lift_independence", [&](CheckResult& r) {
    if (n == 0) return;
    std::vector<FpVector> twists{FpVector(n, 1), fp::unit_vector(n, 0)};
    for (int i = 0; i < 2; ++i) twists.push_back(random_vector(rng, n, p));
    for (const auto& twist : twists) {
      ++r.cases;
      const LiftData other = twist_lift(ext, lift, twist);
      verify_lift(ext, other);
      if (ConjugationAction(ext, other).matrix() != action.matrix()) {
        fail_once(r, "twist " + vec(twist) + " changes the conjugation action");
      }
    }
  }));

  std::vector<KummerClass> classes;
  for (const auto& b : ext.radicands) classes.push_back(class_of(b, ctx));

  report.checks.push_back(run_check("pairing_well_defined", [&](CheckResult& r) {
    for (std::size_t i = 0; i < n; ++i) {
      // multiply the representative by w^p for a random w
      const std::uint64_t deg = uniform_below(rng, 4);
      std::vector<FieldElement> coeffs(deg + 1);
      for (auto& c : coeffs) c = k.element(1 + uniform_below(rng, k.order() - 1));
      const FactoredElement w = ratfunc::from_polynomial(k, Polynomial(coeffs), seed);
      const KummerClass shifted =
          class_of(ratfunc::multiply(k, ext.radicands[i], ratfunc::power(k, w, p)), ctx);
      for (std::size_t j = 0; j < n; ++j) {
        ++r.cases;
        const auto tau = basis_automorphism(n, j);
        if (kummer_pairing(tau, shifted, ext) != kummer_pairing(tau, classes[i], ext)) {
          fail_once(r, "b_" + std::to_string(i + 1) + " times a p-th power pairs differently with e_" +
                           std::to_string(j + 1));
        }
      }
    }
  }));

  report.checks.push_back(run_check("pairing_bilinear", [&](CheckResult& r) {
    if (n == 0) return;
    for (int trial = 0; trial < 4; ++trial) {
      ++r.cases;
      const GaloisAutomorphism t1{random_vector(rng, n, p)}, t2{random_vector(rng, n, p)};
      const FpVector c1 = random_vector(rng, n, p), c2 = random_vector(rng, n, p);
      const FpMatrix basis = FpMatrix::from_columns(ext.module.basis, ext.module.space.dimension(), p);
      const KummerClass k1 = ext.module.space.class_at(fp::apply(basis, c1));
      const KummerClass k2 = ext.module.space.class_at(fp::apply(basis, c2));
      const KummerClass k12 = class_product(k1, k2, ctx);
      const GaloisAutomorphism t12{fp::add(t1.exponents, t2.exponents, p)};
      if ((kummer_pairing(t12, k1, ext) + 0u) % p !=
          (kummer_pairing(t1, k1, ext) + kummer_pairing(t2, k1, ext)) % p) {
        fail_once(r, "not additive in the automorphism slot");
      }
      if (kummer_pairing(t1, k12, ext) % p != (kummer_pairing(t1, k1, ext) + kummer_pairing(t1, k2, ext)) % p) {
        fail_once(r, "not additive in the class slot");
      }
    }
  }));

  report.checks.push_back(run_check("pairing_nondegenerate", [&](CheckResult& r) {
    FpMatrix pairing(n, n, p);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        ++r.cases;
        pairing(i, j) = kummer_pairing(basis_automorphism(n, j), classes[i], ext);
      }
    }
    if (pairing != FpMatrix::identity(n, p)) fail_once(r, "pairing matrix on the bases is not the identity");
    if (fp::rank(pairing) != n) fail_once(r, "pairing matrix is singular");
  }));

  report.checks.push_back(verify_pairing_equivariance(ext, action));

  report.checks.push_back(run_check("conjugation_dual_agreement", [&](CheckResult& r) {
    for (std::size_t j = 0; j < n; ++j) {
      ++r.cases;
      const auto tau = basis_automorphism(n, j);
      const auto conj = action.apply(tau);
      const auto dual = sigma_on_N_dual(tau, ext);
      if (conj != dual) {
        fail_once(r, "e_" + std::to_string(j + 1) + ": conjugation " + vec(conj.exponents) + " vs dual " +
                         vec(dual.exponents));
      }
    }
  }));

  const ModulePresentation galois = galois_module(ext, action);
  report.galois_type = jordan_type(galois);

  report.checks.push_back(run_check("jordan_types_equal", [&](CheckResult& r) {
    r.cases = 1;
    validate(galois);
    if (report.galois_type != report.module_type) {
      fail_once(r, "B/E^{xp} has type " + report.module_type.to_string() + " but N_B has type " +
                       report.galois_type.to_string());
    }
  }));

  std::vector<RhoMap> rhos;
  report.checks.push_back(run_check("rho_kernel", [&](CheckResult& r) {
    for (std::size_t b = 0; b < ext.blocks.size(); ++b) {
      const CyclicBlock& block = ext.blocks[b];
      rhos.push_back(rho_map(ext.radicands[block.offset], ctx));
      const RhoMap& rho = rhos.back();
      ++r.cases;
      if (rho.s != block.length) {
        fail_once(r, "summand " + std::to_string(b + 1) + ": s = " + std::to_string(rho.s) +
                         " differs from its dimension " + std::to_string(block.length));
      }
      for (std::size_t kk = 0; kk < rho.s; ++kk) {
        if (rho.images[kk].is_identity()) {
          fail_once(r, "summand " + std::to_string(b + 1) + ": rho(x^" + std::to_string(kk) + ") = id");
        }
      }
      if (rho.s < rho.images.size() && !rho.images[rho.s].is_identity()) {
        fail_once(r, "summand " + std::to_string(b + 1) + ": rho(x^s) != id");
      }
      std::vector<FpVector> kept;
      for (std::size_t kk = 0; kk < rho.s; ++kk) kept.push_back(rho.images[kk].exponents);
      if (fp::span_rank(kept, rho.s, p) != rho.s) {
        fail_once(r, "summand " + std::to_string(b + 1) + ": rho is not injective on A/x^s");
      }
    }
  }));

  report.checks.push_back(run_check("rho_last_component", [&](CheckResult& r) {
    for (std::size_t b = 0; b < rhos.size(); ++b) {
      const RhoMap& rho = rhos[b];
      for (std::size_t kk = 0; kk + 1 < rho.images.size() && kk < rho.s; ++kk) {
        const FpVector& cur = rho.images[kk].exponents;
        const FpVector& next = rho.images[kk + 1].exponents;
        std::size_t last = cur.size();
        for (std::size_t i = 0; i < cur.size(); ++i) {
          if (cur[i] != 0) last = i;
        }
        if (last == cur.size() || last == 0) continue;
        ++r.cases;
        if (next[last - 1] != (p - cur[last]) % p) {
          fail_once(r, "summand " + std::to_string(b + 1) + ", k = " + std::to_string(kk) +
                           ": component " + std::to_string(last - 1) + " of rho(x^(k+1)) is " +
                           std::to_string(next[last - 1]) + ", expected " + std::to_string((p - cur[last]) % p));
        }
      }
    }
  }));

  report.checks.push_back(run_check("n1_decomposition", [&](CheckResult& r) {
    for (std::size_t b = 0; b < ext.blocks.size(); ++b) {
      ++r.cases;
      const N1Split split = n1_submodule(ext, action, b);
      const std::string tag = "B_1 = summand " + std::to_string(b + 1) + ": ";
      if (split.n1.size() + split.complement.size() != n) fail_once(r, tag + "dimensions do not add to n");
      std::vector<FpVector> both = split.n1;
      both.insert(both.end(), split.complement.begin(), split.complement.end());
      if (fp::span_rank(both, n, p) != both.size()) fail_once(r, tag + "N[1] and N_{B[1]} intersect");
      if (!is_stable(galois.x, split.n1)) fail_once(r, tag + "N[1] is not G-stable");
      if (!is_stable(galois.x, split.complement)) fail_once(r, tag + "N_{B[1]} is not G-stable");
      if (jordan_type(split.n1_module) != JordanType{{ext.blocks[b].length}}) {
        fail_once(r, tag + "N[1] has type " + jordan_type(split.n1_module).to_string());
      }
      JordanType rest = report.module_type;
      rest.parts.erase(std::find(rest.parts.begin(), rest.parts.end(), ext.blocks[b].length));
      if (jordan_type(split.complement_module) != rest) {
        fail_once(r, tag + "N_{B[1]} has type " + jordan_type(split.complement_module).to_string() +
                         ", expected " + rest.to_string());
      }
    }
  }));

  report.checks.push_back(run_check("dual_crosscheck", [&](CheckResult& r) {
    r.cases = 1;
    const JordanType dual_type = jordan_type(dual_module(module));
    if (dual_type != report.galois_type) {
      fail_once(r, "dual of B/E^{xp} has type " + dual_type.to_string() + " but N_B has type " +
                       report.galois_type.to_string());
    }
  }));

  report.verdict = std::all_of(report.checks.begin(), report.checks.end(),
                               [](const CheckResult& c) { return c.pass; });
  return report;
}

}  // namespace relkummer
