#include "relkummer/ffield.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "relkummer/errors.hpp"

namespace relkummer {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factor_integer(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t out = 1;
  while (exp-- > 0) out *= base;
  return out;
}

namespace {

using Digits = std::vector<std::uint32_t>;

void trim(Digits& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t r) {
  // r prime: a^(r-2)
  std::uint64_t result = 1, base = a % r;
  std::uint32_t e = r - 2;
  while (e > 0) {
    if (e & 1u) result = result * base % r;
    base = base * base % r;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

// f mod g over GF(r); g nonzero.
Digits poly_mod(Digits f, const Digits& g, std::uint32_t r) {
  trim(f);
  const std::uint32_t lead_inv = inv_mod(g.back(), r);
  while (f.size() >= g.size()) {
    const std::uint64_t c = static_cast<std::uint64_t>(f.back()) * lead_inv % r;
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) {
      const std::uint64_t sub = c * g[i] % r;
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + r - sub) % r);
    }
    trim(f);
  }
  return f;
}

Digits poly_mulmod(const Digits& a, const Digits& b, const Digits& g, std::uint32_t r) {
  if (a.empty() || b.empty()) return {};
  Digits prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % r);
    }
  }
  return poly_mod(std::move(prod), g, r);
}

Digits poly_powmod(Digits base, std::uint64_t e, const Digits& g, std::uint32_t r) {
  Digits result{1};
  base = poly_mod(std::move(base), g, r);
  while (e > 0) {
    if (e & 1u) result = poly_mulmod(result, base, g, r);
    base = poly_mulmod(base, base, g, r);
    e >>= 1;
  }
  return result;
}

Digits poly_gcd(Digits a, Digits b, std::uint32_t r) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Digits rem = poly_mod(a, b, r);
    a = std::move(b);
    b = std::move(rem);
  }
  return a;
}

}  // namespace

bool is_irreducible_over_prime_field(std::span<const std::uint32_t> f_in, std::uint32_t r) {
  Digits f(f_in.begin(), f_in.end());
  for (auto& c : f) c %= r;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t n = f.size() - 1;
  // frob[i] = t^(r^i) mod f
  std::vector<Digits> frob{poly_mod(Digits{0, 1}, f, r)};
  for (std::size_t i = 1; i <= n; ++i) frob.push_back(poly_powmod(frob.back(), r, f, r));
  const Digits t = poly_mod(Digits{0, 1}, f, r);
  if (frob[n] != t) return false;
  for (const auto& [ell, e] : factor_integer(n)) {
    Digits h = frob[n / ell];
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + r - 1) % r;
    trim(h);
    if (poly_gcd(h, f, r).size() != 1) return false;
  }
  return true;
}

std::vector<std::uint32_t> canonical_modulus(std::uint32_t r, std::uint32_t m) {
  if (m == 1) return {0, 1};
  const std::uint64_t count = ipow(r, m);
  // c_0 is the most significant digit of the enumeration index.
  for (std::uint64_t i = 0; i < count; ++i) {
    Digits f(m + 1, 0);
    f[m] = 1;
    std::uint64_t rest = i;
    for (std::uint32_t j = 0; j < m; ++j) {
      const std::uint64_t place = ipow(r, m - 1 - j);
      f[j] = static_cast<std::uint32_t>(rest / place);
      rest %= place;
    }
    if (is_irreducible_over_prime_field(f, r)) return f;
  }
  throw InvariantViolation("no irreducible polynomial found");
}

GaloisField::GaloisField(std::uint32_t characteristic, std::uint32_t degree,
                         std::vector<std::uint32_t> modulus, std::uint64_t size_cap)
    : r_(characteristic), m_(degree) {
  if (!is_prime(r_)) {
    throw UnsupportedInstance("field characteristic " + std::to_string(r_) + " is not prime");
  }
  if (m_ == 0) throw UnsupportedInstance("field degree must be positive");
  q_ = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    q_ *= r_;
    if (q_ > size_cap) {
      throw UnsupportedInstance("field GF(" + std::to_string(r_) + "^" + std::to_string(m_) +
                                ") exceeds the size cap " + std::to_string(size_cap));
    }
  }
  if (modulus.empty()) {
    modulus_ = canonical_modulus(r_, m_);
  } else {
    for (auto& c : modulus) c %= r_;
    if (modulus.size() != m_ + 1 || modulus.back() != 1) {
      throw UnsupportedInstance("modulus must be monic of degree " + std::to_string(m_));
    }
    if (!is_irreducible_over_prime_field(modulus, r_)) {
      throw UnsupportedInstance("modulus is not irreducible over GF(" + std::to_string(r_) + ")");
    }
    modulus_ = std::move(modulus);
  }

  group_order_factors_ = factor_integer(q_ - 1);
  for (std::uint64_t i = 1; i < q_; ++i) {
    const FieldElement a = element(i);
    bool generates = true;
    for (const auto& [ell, e] : group_order_factors_) {
      if (pow(a, static_cast<std::int64_t>((q_ - 1) / ell)) == one()) {
        generates = false;
        break;
      }
    }
    if (generates) {
      generator_ = a;
      break;
    }
  }
  if (q_ <= kDlogTableLimit) {
    dlog_table_.assign(q_, 0);
    FieldElement x = one();
    for (std::uint64_t i = 0; i + 1 < q_; ++i) {
      dlog_table_[x.value] = static_cast<std::uint32_t>(i);
      x = mul(x, generator_);
    }
  }
}

std::uint32_t GaloisField::encode(std::span<const std::uint32_t> digits) const {
  std::uint64_t v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) v = v * r_ + digits[i];
  return static_cast<std::uint32_t>(v);
}

std::vector<std::uint32_t> GaloisField::decode(FieldElement a) const {
  std::vector<std::uint32_t> d(m_, 0);
  std::uint32_t v = a.value;
  for (std::uint32_t i = 0; i < m_; ++i) {
    d[i] = v % r_;
    v /= r_;
  }
  return d;
}

void GaloisField::require_element(FieldElement a) const {
  if (!contains(a)) throw DomainError("value is not an element of " + name());
}

void GaloisField::require_divides_group_order(std::uint64_t p) const {
  if (p == 0 || (q_ - 1) % p != 0) {
    throw UnsupportedInstance(std::to_string(p) + " does not divide |" + name() + "| - 1 = " +
                              std::to_string(q_ - 1));
  }
}

FieldElement GaloisField::from_int(std::int64_t v) const {
  const std::int64_t r = r_;
  return {static_cast<std::uint32_t>(((v % r) + r) % r)};
}

FieldElement GaloisField::from_coefficients(std::span<const std::int64_t> coeffs) const {
  if (coeffs.size() > m_) {
    throw DomainError("too many coefficients for an element of " + name());
  }
  std::vector<std::uint32_t> d(m_, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) d[i] = from_int(coeffs[i]).value;
  return {encode(d)};
}

std::vector<std::uint32_t> GaloisField::coefficients(FieldElement a) const { return decode(a); }

FieldElement GaloisField::add(FieldElement a, FieldElement b) const {
  if (m_ == 1) return {static_cast<std::uint32_t>((a.value + b.value) % r_)};
  auto x = decode(a);
  const auto y = decode(b);
  for (std::uint32_t i = 0; i < m_; ++i) x[i] = (x[i] + y[i]) % r_;
  return {encode(x)};
}

FieldElement GaloisField::neg(FieldElement a) const {
  if (m_ == 1) return {(r_ - a.value) % r_};
  auto x = decode(a);
  for (auto& c : x) c = (r_ - c) % r_;
  return {encode(x)};
}

FieldElement GaloisField::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement GaloisField::mul(FieldElement a, FieldElement b) const {
  if (m_ == 1) {
    return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value) * b.value % r_)};
  }
  const auto x = decode(a);
  const auto y = decode(b);
  std::vector<std::uint32_t> prod = poly_mulmod(x, y, modulus_, r_);
  prod.resize(m_, 0);
  return {encode(prod)};
}

FieldElement GaloisField::inv(FieldElement a) const {
  if (a == zero()) throw DomainError("division by zero in " + name());
  return pow(a, static_cast<std::int64_t>(q_ - 2));
}

FieldElement GaloisField::div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

FieldElement GaloisField::pow(FieldElement a, std::int64_t e) const {
  if (a == zero()) {
    if (e < 0) throw DomainError("division by zero in " + name());
    return e == 0 ? one() : zero();
  }
  // Exponents act through Z/(|k|-1).
  const auto n = static_cast<std::int64_t>(q_ - 1);
  auto ue = static_cast<std::uint64_t>(((e % n) + n) % n);
  FieldElement result = one();
  FieldElement base = a;
  while (ue > 0) {
    if (ue & 1u) result = mul(result, base);
    base = mul(base, base);
    ue >>= 1;
  }
  return result;
}

std::uint64_t GaloisField::dlog(FieldElement a) const {
  require_element(a);
  if (a == zero()) throw DomainError("discrete log of zero");
  if (!dlog_table_.empty()) return dlog_table_[a.value];
  return dlog_pohlig_hellman(a);
}

std::uint64_t GaloisField::dlog_pohlig_hellman(FieldElement a) const {
  const std::uint64_t n = q_ - 1;
  // CRT accumulation: x ≡ residue (mod modulus).
  std::uint64_t residue = 0, modulus = 1;
  for (const auto& [ell, e] : group_order_factors_) {
    const std::uint64_t ell_e = ipow(ell, e);
    const FieldElement gamma = pow(generator_, static_cast<std::int64_t>(n / ell));
    const FieldElement g_sub = pow(generator_, static_cast<std::int64_t>(n / ell_e));
    const FieldElement h = pow(a, static_cast<std::int64_t>(n / ell_e));

    // Baby steps for the order-ell subgroup generated by gamma.
    const std::uint64_t steps = static_cast<std::uint64_t>(std::ceil(std::sqrt(double(ell))));
    std::unordered_map<std::uint32_t, std::uint64_t> baby;
    FieldElement cur = one();
    for (std::uint64_t j = 0; j < steps; ++j) {
      baby.emplace(cur.value, j);
      cur = mul(cur, gamma);
    }
    const FieldElement giant = inv(pow(gamma, static_cast<std::int64_t>(steps)));

    std::uint64_t x = 0, ell_k = 1;
    for (unsigned k = 0; k < e; ++k) {
      const FieldElement shifted = mul(h, inv(pow(g_sub, static_cast<std::int64_t>(x))));
      FieldElement target = pow(shifted, static_cast<std::int64_t>(ell_e / (ell_k * ell)));
      std::uint64_t digit = ell;
      for (std::uint64_t i = 0; i <= steps && digit == ell; ++i) {
        if (auto it = baby.find(target.value); it != baby.end()) digit = (i * steps + it->second) % ell;
        target = mul(target, giant);
      }
      if (digit == ell) throw InvariantViolation("baby-step giant-step found no logarithm");
      x += digit * ell_k;
      ell_k *= ell;
    }
    // Combine x mod ell_e into the running CRT solution.
    while (residue % ell_e != x) residue += modulus;
    modulus *= ell_e;
  }
  return residue;
}

std::uint64_t GaloisField::multiplicative_order(FieldElement a) const {
  require_element(a);
  if (a == zero()) throw DomainError("zero has no multiplicative order");
  std::uint64_t ord = q_ - 1;
  for (const auto& [ell, e] : group_order_factors_) {
    for (unsigned i = 0; i < e; ++i) {
      if (pow(a, static_cast<std::int64_t>(ord / ell)) == one()) {
        ord /= ell;
      } else {
        break;
      }
    }
  }
  return ord;
}

FieldElement GaloisField::primitive_root_of_unity(std::uint64_t n) const {
  require_divides_group_order(n);
  return pow(generator_, static_cast<std::int64_t>((q_ - 1) / n));
}

bool GaloisField::is_pth_power(FieldElement u, std::uint64_t p) const {
  require_element(u);
  if (u == zero()) throw DomainError("is_pth_power of zero");
  require_divides_group_order(p);
  return pow(u, static_cast<std::int64_t>((q_ - 1) / p)) == one();
}

std::uint64_t GaloisField::unit_character(FieldElement u, std::uint64_t p,
                                          FieldElement zeta_p) const {
  require_element(u);
  if (u == zero()) throw DomainError("unit character of zero");
  require_divides_group_order(p);
  if (!is_prime(p) || multiplicative_order(zeta_p) != p) {
    throw DomainError("zeta_p is not a primitive p-th root of unity");
  }
  // zeta_p = g^(c (|k|-1)/p) with c a unit mod p; u^((|k|-1)/p) = g^(d (|k|-1)/p).
  const std::uint64_t step = (q_ - 1) / p;
  const std::uint64_t c = dlog(zeta_p) / step;
  const std::uint64_t d = dlog(u) % p;
  std::uint64_t c_inv = 1;
  for (std::uint64_t i = 1; i < p; ++i) {
    if (c * i % p == 1) {
      c_inv = i;
      break;
    }
  }
  return d * c_inv % p;
}

FieldElement GaloisField::pth_root(FieldElement u, std::uint64_t p) const {
  if (!is_pth_power(u, p)) {
    throw DomainError(to_string(u) + " is not a " + std::to_string(p) + "-th power in " + name());
  }
  // p | |k|-1 and p | dlog(u): least x with p x ≡ d (mod |k|-1) is d / p.
  return pow(generator_, static_cast<std::int64_t>(dlog(u) / p));
}

FieldElement GaloisField::frobenius_root(FieldElement a) const {
  return pow(a, static_cast<std::int64_t>(ipow(r_, m_ - 1)));
}

std::string GaloisField::to_string(FieldElement a) const {
  if (m_ == 1) return std::to_string(a.value);
  std::string out = "[";
  const auto d = decode(a);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(d[i]);
  }
  return out + "]";
}

std::string GaloisField::name() const {
  if (m_ == 1) return "GF(" + std::to_string(r_) + ")";
  return "GF(" + std::to_string(r_) + "^" + std::to_string(m_) + ")";
}

}  // namespace relkummer
