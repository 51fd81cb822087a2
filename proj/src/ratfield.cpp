#include "relkummer/ratfield.hpp"

#include <algorithm>
#include <set>

#include "relkummer/errors.hpp"

namespace relkummer {

GaloisContext make_context(std::uint32_t p, std::uint32_t l,
                           std::shared_ptr<const GaloisField> field,
                           std::optional<FieldElement> zeta) {
  if (!field) throw UnsupportedInstance("no base field given");
  const GaloisField& k = *field;
  if (!is_prime(p)) throw UnsupportedInstance("p = " + std::to_string(p) + " is not prime");
  if (l == 0) throw UnsupportedInstance("l must be a positive integer");
  if (k.characteristic() == p) {
    throw UnsupportedInstance("characteristic of " + k.name() + " equals p = " + std::to_string(p));
  }
  const std::uint64_t q = ipow(p, l);
  if ((k.order() - 1) % q != 0) {
    throw UnsupportedInstance("p^l = " + std::to_string(q) + " does not divide |" + k.name() +
                              "| - 1 = " + std::to_string(k.order() - 1));
  }
  GaloisContext ctx;
  ctx.p = p;
  ctx.l = l;
  ctx.q = q;
  ctx.field = field;
  if (zeta) {
    if (!k.contains(*zeta) || *zeta == k.zero() || k.multiplicative_order(*zeta) != q) {
      throw UnsupportedInstance("zeta = " + (k.contains(*zeta) ? k.to_string(*zeta) : std::string("?")) +
                                " is not a primitive " + std::to_string(q) + "-th root of unity");
    }
    ctx.zeta = *zeta;
  } else {
    ctx.zeta = k.primitive_root_of_unity(q);
  }
  ctx.zeta_p = k.pow(ctx.zeta, static_cast<std::int64_t>(q / p));

  ctx.character_units.assign(p, k.zero());
  std::uint32_t found = 0;
  for (std::uint64_t i = 1; i < k.order() && found < p; ++i) {
    const FieldElement u = k.element(i);
    const auto c = k.unit_character(u, p, ctx.zeta_p);
    if (ctx.character_units[c] == k.zero()) {
      ctx.character_units[c] = u;
      ++found;
    }
  }
  if (found != p) throw InvariantViolation("unit character is not surjective");
  return ctx;
}

namespace ratfunc {

namespace {

using FactorList = std::vector<std::pair<Polynomial, std::int64_t>>;

// Sorted merge of two canonical factor lists with exponent scaling of b.
FactorList merge(const FactorList& a, const FactorList& b, std::int64_t b_scale) {
  FactorList out;
  out.reserve(a.size() + b.size());
  CanonicalLess less;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && less(a[i].first, b[j].first))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || less(b[j].first, a[i].first)) {
      out.emplace_back(b[j].first, b[j].second * b_scale);
      ++j;
    } else {
      const std::int64_t e = a[i].second + b[j].second * b_scale;
      if (e != 0) out.emplace_back(a[i].first, e);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

FactoredElement from_unit(FieldElement u) {
  if (u.value == 0) throw DomainError("zero is not an element of E^x");
  return FactoredElement{u, {}};
}

FactoredElement from_factorization(const Factorization& f, int sign) {
  FactoredElement out;
  out.unit = f.unit;
  for (const auto& [g, m] : f.factors) out.factors.emplace_back(g, sign * static_cast<std::int64_t>(m));
  return out;
}

FactoredElement from_polynomial(const GaloisField& k, const Polynomial& f, std::uint64_t seed) {
  if (f.is_zero()) throw DomainError("zero is not an element of E^x");
  return from_factorization(poly::factor(k, f, seed));
}

FactoredElement multiply(const GaloisField& k, const FactoredElement& a, const FactoredElement& b) {
  return FactoredElement{k.mul(a.unit, b.unit), merge(a.factors, b.factors, 1)};
}

FactoredElement inverse(const GaloisField& k, const FactoredElement& a) {
  FactoredElement out{k.inv(a.unit), a.factors};
  for (auto& f : out.factors) f.second = -f.second;
  return out;
}

FactoredElement divide(const GaloisField& k, const FactoredElement& a, const FactoredElement& b) {
  return FactoredElement{k.div(a.unit, b.unit), merge(a.factors, b.factors, -1)};
}

FactoredElement power(const GaloisField& k, const FactoredElement& a, std::int64_t e) {
  if (e == 0) return from_unit(k.one());
  FactoredElement out{k.pow(a.unit, e), a.factors};
  for (auto& f : out.factors) f.second *= e;
  return out;
}

std::pair<Polynomial, Polynomial> expand(const GaloisField& k, const FactoredElement& a) {
  Polynomial num = poly::constant(a.unit);
  Polynomial den = poly::constant(k.one());
  for (const auto& [f, e] : a.factors) {
    if (e > 0) {
      num = poly::mul(k, num, poly::pow(k, f, static_cast<std::uint64_t>(e)));
    } else {
      den = poly::mul(k, den, poly::pow(k, f, static_cast<std::uint64_t>(-e)));
    }
  }
  return {num, den};
}

std::string to_string(const GaloisField& k, const FactoredElement& a) {
  std::string out;
  if (a.unit != k.one() || a.factors.empty()) out = k.to_string(a.unit);
  for (const auto& [f, e] : a.factors) {
    if (!out.empty()) out += "*";
    // t is the only single-term monic irreducible
    const std::string body = poly::to_string(k, f);
    out += body == "t" ? body : "(" + body + ")";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace ratfunc

FactoredElement sigma_power(const FactoredElement& e, std::int64_t j, const GaloisContext& ctx) {
  const GaloisField& k = ctx.k();
  const auto q = static_cast<std::int64_t>(ctx.q);
  const std::int64_t jj = ((j % q) + q) % q;
  if (jj == 0) return e;
  const FieldElement c = k.pow(ctx.zeta, jj);
  FactoredElement out{e.unit, {}};
  out.factors.reserve(e.factors.size());
  for (const auto& [f, exp] : e.factors) {
    auto [u, g] = poly::substitute_scale(k, f, c);
    out.unit = k.mul(out.unit, k.pow(u, exp));
    out.factors.emplace_back(std::move(g), exp);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return CanonicalLess{}(a.first, b.first); });
  return out;
}

FactoredElement sigma(const FactoredElement& e, const GaloisContext& ctx) {
  return sigma_power(e, 1, ctx);
}

bool is_pth_power_in_E(const GaloisField& k, const FactoredElement& e, std::uint32_t p) {
  for (const auto& [f, exp] : e.factors) {
    if (exp % static_cast<std::int64_t>(p) != 0) return false;
  }
  return k.is_pth_power(e.unit, p);
}

FactoredElement pth_root_in_E(const GaloisField& k, const FactoredElement& e, std::uint32_t p) {
  if (!is_pth_power_in_E(k, e, p)) {
    throw DomainError(ratfunc::to_string(k, e) + " is not a " + std::to_string(p) +
                      "-th power in E");
  }
  FactoredElement out{k.pth_root(e.unit, p), e.factors};
  for (auto& f : out.factors) f.second /= static_cast<std::int64_t>(p);
  return out;
}

KummerClass class_of(const FactoredElement& e, const GaloisContext& ctx) {
  const GaloisField& k = ctx.k();
  const auto p = static_cast<std::int64_t>(ctx.p);
  KummerClass c;
  c.unit_coordinate = static_cast<std::uint32_t>(k.unit_character(e.unit, ctx.p, ctx.zeta_p));
  c.representative.unit = ctx.character_units[c.unit_coordinate];
  for (const auto& [f, exp] : e.factors) {
    const std::int64_t r = ((exp % p) + p) % p;
    if (r != 0) c.representative.factors.emplace_back(f, r);
  }
  return c;
}

KummerClass x_action(const KummerClass& c, const GaloisContext& ctx) {
  const FactoredElement& a = c.representative;
  return class_of(ratfunc::divide(ctx.k(), sigma(a, ctx), a), ctx);
}

KummerClass class_product(const KummerClass& a, const KummerClass& b, const GaloisContext& ctx) {
  return class_of(ratfunc::multiply(ctx.k(), a.representative, b.representative), ctx);
}

ClassSpace::ClassSpace(const GaloisContext& ctx, const std::vector<Polynomial>& irreducibles)
    : ctx_(ctx) {
  const GaloisField& k = ctx.k();
  std::set<Polynomial, CanonicalLess> seen;
  for (const auto& f : irreducibles) {
    Polynomial g = f;
    while (seen.insert(g).second) g = poly::substitute_scale(k, g, ctx.zeta).second;
  }
  support_.assign(seen.begin(), seen.end());
  for (std::size_t i = 0; i < support_.size(); ++i) index_.emplace(support_[i], i);
  for (const auto& f : support_) {
    auto [u, g] = poly::substitute_scale(k, f, ctx.zeta);
    sigma_unit_.push_back(u);
    sigma_index_.push_back(index_.at(g));
  }
}

ClassSpace ClassSpace::closure_of(const GaloisContext& ctx,
                                  const std::vector<FactoredElement>& elems) {
  std::vector<Polynomial> irreducibles;
  for (const auto& e : elems) {
    for (const auto& [f, exp] : e.factors) irreducibles.push_back(f);
  }
  return ClassSpace(ctx, irreducibles);
}

std::optional<std::size_t> ClassSpace::index_of(const Polynomial& f) const {
  if (auto it = index_.find(f); it != index_.end()) return it->second;
  return std::nullopt;
}

bool ClassSpace::contains(const FactoredElement& e) const {
  return std::all_of(e.factors.begin(), e.factors.end(),
                     [this](const auto& f) { return index_.count(f.first) > 0; });
}

FpVector ClassSpace::coordinates(const KummerClass& c) const {
  FpVector v(dimension(), 0);
  const auto p = static_cast<std::int64_t>(ctx_.p);
  for (const auto& [f, exp] : c.representative.factors) {
    const auto idx = index_of(f);
    if (!idx) throw DomainError("class is supported outside the coordinate space");
    v[*idx] = static_cast<std::uint32_t>(((exp % p) + p) % p);
  }
  v[unit_index()] = c.unit_coordinate;
  return v;
}

KummerClass ClassSpace::class_at(const FpVector& coords) const {
  if (coords.size() != dimension()) throw DomainError("coordinate vector has the wrong length");
  KummerClass c;
  c.unit_coordinate = coords[unit_index()] % ctx_.p;
  c.representative.unit = ctx_.character_units[c.unit_coordinate];
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (coords[i] % ctx_.p != 0) c.representative.factors.emplace_back(support_[i], coords[i] % ctx_.p);
  }
  return c;
}

FpMatrix ClassSpace::x_matrix() const {
  const std::uint32_t p = ctx_.p;
  FpMatrix x(dimension(), dimension(), p);
  for (std::size_t i = 0; i < support_.size(); ++i) {
    const std::size_t j = sigma_index_[i];
    x(j, i) = (x(j, i) + 1) % p;
    x(i, i) = (x(i, i) + p - 1) % p;
    const auto chi = ctx_.k().unit_character(sigma_unit_[i], p, ctx_.zeta_p);
    x(unit_index(), i) = static_cast<std::uint32_t>(chi);
  }
  return x;
}

DenseElement ClassSpace::to_dense(const FactoredElement& e) const {
  DenseElement d{e.unit, std::vector<std::int64_t>(support_.size(), 0)};
  for (const auto& [f, exp] : e.factors) {
    const auto idx = index_of(f);
    if (!idx) throw DomainError("element is supported outside the coordinate space");
    d.exponents[*idx] = exp;
  }
  return d;
}

FactoredElement ClassSpace::to_factored(const DenseElement& e) const {
  FactoredElement out{e.unit, {}};
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (e.exponents[i] != 0) out.factors.emplace_back(support_[i], e.exponents[i]);
  }
  return out;
}

DenseElement ClassSpace::one() const {
  return DenseElement{ctx_.k().one(), std::vector<std::int64_t>(support_.size(), 0)};
}

DenseElement ClassSpace::multiply(const DenseElement& a, const DenseElement& b) const {
  DenseElement out{ctx_.k().mul(a.unit, b.unit), a.exponents};
  for (std::size_t i = 0; i < out.exponents.size(); ++i) out.exponents[i] += b.exponents[i];
  return out;
}

DenseElement ClassSpace::power(const DenseElement& a, std::int64_t e) const {
  DenseElement out{ctx_.k().pow(a.unit, e), a.exponents};
  for (auto& x : out.exponents) x *= e;
  return out;
}

DenseElement ClassSpace::sigma(const DenseElement& a) const {
  const GaloisField& k = ctx_.k();
  DenseElement out{a.unit, std::vector<std::int64_t>(support_.size(), 0)};
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (a.exponents[i] == 0) continue;
    out.unit = k.mul(out.unit, k.pow(sigma_unit_[i], a.exponents[i]));
    out.exponents[sigma_index_[i]] = a.exponents[i];
  }
  return out;
}

}  // namespace relkummer
