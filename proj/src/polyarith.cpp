#include "relkummer/polyarith.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "relkummer/errors.hpp"
#include "relkummer/random.hpp"

namespace relkummer {

bool CanonicalLess::operator()(const Polynomial& a, const Polynomial& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs.begin(), a.coeffs.end(), b.coeffs.begin(),
                                      b.coeffs.end());
}

namespace poly {

Polynomial constant(FieldElement c) { return Polynomial({c}); }

Polynomial monomial(const GaloisField& k, FieldElement c, std::size_t degree) {
  std::vector<FieldElement> coeffs(degree + 1, k.zero());
  coeffs[degree] = c;
  return Polynomial(std::move(coeffs));
}

Polynomial variable(const GaloisField& k) { return monomial(k, k.one(), 1); }

Polynomial from_ints(const GaloisField& k, const std::vector<std::int64_t>& c) {
  std::vector<FieldElement> coeffs;
  coeffs.reserve(c.size());
  for (auto v : c) coeffs.push_back(k.from_int(v));
  return Polynomial(std::move(coeffs));
}

Polynomial add(const GaloisField& k, const Polynomial& a, const Polynomial& b) {
  std::vector<FieldElement> out(std::max(a.coeffs.size(), b.coeffs.size()), k.zero());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = k.add(a.coeff(i), b.coeff(i));
  return Polynomial(std::move(out));
}

Polynomial sub(const GaloisField& k, const Polynomial& a, const Polynomial& b) {
  std::vector<FieldElement> out(std::max(a.coeffs.size(), b.coeffs.size()), k.zero());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = k.sub(a.coeff(i), b.coeff(i));
  return Polynomial(std::move(out));
}

Polynomial scale(const GaloisField& k, const Polynomial& a, FieldElement c) {
  std::vector<FieldElement> out = a.coeffs;
  for (auto& x : out) x = k.mul(x, c);
  return Polynomial(std::move(out));
}

Polynomial mul(const GaloisField& k, const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<FieldElement> out(a.coeffs.size() + b.coeffs.size() - 1, k.zero());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == k.zero()) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      out[i + j] = k.add(out[i + j], k.mul(a.coeffs[i], b.coeffs[j]));
    }
  }
  return Polynomial(std::move(out));
}

Polynomial pow(const GaloisField& k, const Polynomial& a, std::uint64_t e) {
  Polynomial result = constant(k.one());
  Polynomial base = a;
  while (e > 0) {
    if (e & 1u) result = mul(k, result, base);
    e >>= 1;
    if (e > 0) base = mul(k, base, base);
  }
  return result;
}

std::pair<Polynomial, Polynomial> divmod(const GaloisField& k, const Polynomial& a,
                                         const Polynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial{}, a};
  std::vector<FieldElement> rem = a.coeffs;
  std::vector<FieldElement> quot(a.coeffs.size() - b.coeffs.size() + 1, k.zero());
  const FieldElement lead_inv = k.inv(b.leading());
  const std::size_t db = b.coeffs.size() - 1;
  for (std::size_t i = quot.size(); i-- > 0;) {
    const FieldElement c = k.mul(rem[i + db], lead_inv);
    quot[i] = c;
    if (c == k.zero()) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[i + j] = k.sub(rem[i + j], k.mul(c, b.coeffs[j]));
    }
  }
  rem.resize(db);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial mod(const GaloisField& k, const Polynomial& a, const Polynomial& b) {
  return divmod(k, a, b).second;
}

Polynomial make_monic(const GaloisField& k, const Polynomial& a) {
  if (a.is_zero()) return a;
  return scale(k, a, k.inv(a.leading()));
}

Polynomial gcd(const GaloisField& k, Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = mod(k, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(k, a);
}

Polynomial derivative(const GaloisField& k, const Polynomial& a) {
  if (a.coeffs.size() <= 1) return {};
  std::vector<FieldElement> out(a.coeffs.size() - 1, k.zero());
  for (std::size_t i = 1; i < a.coeffs.size(); ++i) {
    out[i - 1] = k.mul(a.coeffs[i], k.from_int(static_cast<std::int64_t>(i % k.characteristic())));
  }
  return Polynomial(std::move(out));
}

Polynomial mulmod(const GaloisField& k, const Polynomial& a, const Polynomial& b,
                  const Polynomial& m) {
  return mod(k, mul(k, a, b), m);
}

Polynomial powmod(const GaloisField& k, const Polynomial& a, std::uint64_t e, const Polynomial& m) {
  Polynomial result = mod(k, constant(k.one()), m);
  Polynomial base = mod(k, a, m);
  while (e > 0) {
    if (e & 1u) result = mulmod(k, result, base, m);
    e >>= 1;
    if (e > 0) base = mulmod(k, base, base, m);
  }
  return result;
}

FieldElement evaluate(const GaloisField& k, const Polynomial& a, FieldElement x) {
  FieldElement acc = k.zero();
  for (std::size_t i = a.coeffs.size(); i-- > 0;) acc = k.add(k.mul(acc, x), a.coeffs[i]);
  return acc;
}

bool is_irreducible(const GaloisField& k, const Polynomial& f_in) {
  if (f_in.degree() < 1) throw DomainError("irreducibility test of a constant polynomial");
  const Polynomial f = make_monic(k, f_in);
  const auto n = static_cast<std::size_t>(f.degree());
  if (n == 1) return true;
  const Polynomial t = mod(k, variable(k), f);
  std::vector<Polynomial> frob{t};  // frob[i] = t^(Q^i) mod f
  for (std::size_t i = 1; i <= n; ++i) frob.push_back(powmod(k, frob.back(), k.order(), f));
  if (frob[n] != t) return false;
  for (const auto& [ell, e] : factor_integer(n)) {
    if (gcd(k, sub(k, frob[n / ell], t), f).degree() != 0) return false;
  }
  return true;
}

namespace {

// Polynomial whose r-th power is f; requires f' = 0.
Polynomial frobenius_root_poly(const GaloisField& k, const Polynomial& f) {
  const std::uint32_t r = k.characteristic();
  std::vector<FieldElement> out(f.coeffs.size() / r + 1, k.zero());
  for (std::size_t i = 0; i < f.coeffs.size(); i += r) out[i / r] = k.frobenius_root(f.coeffs[i]);
  return Polynomial(std::move(out));
}

// Square-free decomposition of a monic polynomial: pairs (square-free
// part, multiplicity). Multiplicities may repeat across recursion levels.
void squarefree(const GaloisField& k, const Polynomial& f, std::uint32_t mult,
                std::vector<std::pair<Polynomial, std::uint32_t>>& out) {
  if (f.degree() < 1) return;
  const Polynomial df = derivative(k, f);
  if (df.is_zero()) {
    squarefree(k, frobenius_root_poly(k, f), mult * k.characteristic(), out);
    return;
  }
  Polynomial c = gcd(k, f, df);
  Polynomial w = divmod(k, f, c).first;
  std::uint32_t i = 1;
  while (w.degree() > 0) {
    Polynomial y = gcd(k, w, c);
    Polynomial fac = divmod(k, w, y).first;
    if (fac.degree() > 0) out.emplace_back(make_monic(k, fac), i * mult);
    w = std::move(y);
    c = divmod(k, c, w).first;
    ++i;
  }
  if (c.degree() > 0) {
    squarefree(k, frobenius_root_poly(k, make_monic(k, c)), mult * k.characteristic(), out);
  }
}

// Distinct-degree factorization of a square-free monic polynomial.
std::vector<std::pair<Polynomial, std::size_t>> distinct_degree(const GaloisField& k,
                                                                Polynomial f) {
  std::vector<std::pair<Polynomial, std::size_t>> out;
  const Polynomial t = variable(k);
  Polynomial h = mod(k, t, f);
  std::size_t d = 1;
  while (f.degree() >= static_cast<int>(2 * d)) {
    h = powmod(k, h, k.order(), f);
    Polynomial g = gcd(k, sub(k, h, t), f);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = divmod(k, f, g).first;
      h = mod(k, h, f);
    }
    ++d;
  }
  if (f.degree() > 0) out.emplace_back(f, static_cast<std::size_t>(f.degree()));
  return out;
}

Polynomial random_below(const GaloisField& k, std::size_t degree_bound, std::mt19937_64& rng) {
  std::vector<FieldElement> c(degree_bound);
  for (auto& x : c) x = k.element(uniform_below(rng, k.order()));
  return Polynomial(std::move(c));
}

// A candidate splitting polynomial for equal-degree factors of degree d.
Polynomial splitter(const GaloisField& k, const Polynomial& a, const Polynomial& f,
                    std::size_t d) {
  if (k.characteristic() == 2) {
    // Absolute trace to GF(2): sum of a^(2^j), j < m d.
    Polynomial acc = mod(k, a, f);
    Polynomial term = acc;
    const std::size_t steps = static_cast<std::size_t>(k.degree()) * d;
    for (std::size_t j = 1; j < steps; ++j) {
      term = mulmod(k, term, term, f);
      acc = add(k, acc, term);
    }
    return acc;
  }
  // a^((Q^d - 1)/2) = (a^(1 + Q + ... + Q^(d-1)))^((Q - 1)/2)
  Polynomial norm = mod(k, a, f);
  Polynomial conj = norm;
  for (std::size_t j = 1; j < d; ++j) {
    conj = powmod(k, conj, k.order(), f);
    norm = mulmod(k, norm, conj, f);
  }
  Polynomial b = powmod(k, norm, (k.order() - 1) / 2, f);
  return sub(k, b, constant(k.one()));
}

void equal_degree(const GaloisField& k, const Polynomial& f, std::size_t d, std::mt19937_64& rng,
                  std::vector<Polynomial>& out) {
  if (f.degree() <= static_cast<int>(d)) {
    out.push_back(f);
    return;
  }
  for (;;) {
    const Polynomial a = random_below(k, static_cast<std::size_t>(f.degree()), rng);
    if (a.degree() < 1) continue;
    const Polynomial g = gcd(k, splitter(k, a, f, d), f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(k, g, d, rng, out);
      equal_degree(k, divmod(k, f, g).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

Factorization factor(const GaloisField& k, const Polynomial& f, std::uint64_t seed) {
  if (f.is_zero()) throw DomainError("factorization of the zero polynomial");
  Factorization result;
  result.unit = f.leading();
  const Polynomial monic = make_monic(k, f);
  std::mt19937_64 rng(seed);

  std::vector<std::pair<Polynomial, std::uint32_t>> sqf;
  squarefree(k, monic, 1, sqf);
  std::map<Polynomial, std::uint32_t, CanonicalLess> collected;
  for (const auto& [part, mult] : sqf) {
    for (const auto& [block, d] : distinct_degree(k, part)) {
      std::vector<Polynomial> irreducibles;
      equal_degree(k, block, d, rng, irreducibles);
      for (auto& g : irreducibles) collected[make_monic(k, g)] += mult;
    }
  }
  result.factors.assign(collected.begin(), collected.end());
  return result;
}

std::pair<FieldElement, Polynomial> substitute_scale(const GaloisField& k, const Polynomial& f,
                                                     FieldElement c) {
  if (c == k.zero()) throw DomainError("substitute_scale by zero");
  if (f.is_zero() || f.leading() != k.one()) throw DomainError("substitute_scale needs a monic input");
  std::vector<FieldElement> out = f.coeffs;
  FieldElement ci = k.one();
  for (auto& x : out) {
    x = k.mul(x, ci);
    ci = k.mul(ci, c);
  }
  const FieldElement unit = out.back();
  const FieldElement unit_inv = k.inv(unit);
  for (auto& x : out) x = k.mul(x, unit_inv);
  return {unit, Polynomial(std::move(out))};
}

std::string to_string(const GaloisField& k, const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = f.coeffs.size(); i-- > 0;) {
    const FieldElement c = f.coeffs[i];
    if (c == k.zero()) continue;
    if (!out.empty()) out += "+";
    const bool show_coeff = c != k.one() || i == 0;
    if (show_coeff) out += k.to_string(c);
    if (i > 0) {
      if (show_coeff) out += "*";
      out += "t";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace poly
}  // namespace relkummer
