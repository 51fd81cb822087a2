#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include "relkummer/cli.hpp"
#include "relkummer/random.hpp"

namespace relkummer {

namespace {

struct Suite {
  std::string name;
  std::function<void(SuiteResult&, bool fault)> run;
};

void record(SuiteResult& r, bool ok, const std::string& witness) {
  ++r.cases;
  if (!ok) {
    if (r.failures == 0) r.witness = witness;
    ++r.failures;
  }
}

std::vector<std::vector<std::size_t>> partitions(std::size_t n, std::size_t max_part) {
  if (n == 0) return {{}};
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t first = std::min(n, max_part); first >= 1; --first) {
    for (auto rest : partitions(n - first, first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  }
  return out;
}

FpMatrix random_invertible(std::mt19937_64& rng, std::size_t n, std::uint32_t p) {
  while (true) {
    FpMatrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<std::uint32_t>(uniform_below(rng, p));
    }
    if (fp::rank(m) == n) return m;
  }
}

FpVector decode_vector(std::uint64_t code, std::size_t n, std::uint32_t p) {
  FpVector v(n);
  for (auto& x : v) {
    x = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return v;
}

// Dual by enumeration: sigma^-1 by search over all vectors, then
// (sigma f)(e_j) = f(sigma^-1 e_j) evaluated pointwise on the dual basis.
FpMatrix enumerated_dual_x(const FpMatrix& x) {
  const std::size_t n = x.rows();
  const std::uint32_t p = x.modulus();
  const FpMatrix s = fp::add(x, FpMatrix::identity(n, p));
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  std::vector<FpVector> inv_cols(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    const FpVector v = decode_vector(code, n, p);
    const FpVector sv = fp::apply(s, v);
    for (std::size_t j = 0; j < n; ++j) {
      if (sv == fp::unit_vector(n, j)) inv_cols[j] = v;
    }
  }
  FpMatrix dual(n, n, p);
  for (std::size_t i = 0; i < n; ++i) {
    // functional e_i^*; its image's value on e_j is component i of sigma^-1 e_j
    for (std::size_t j = 0; j < n; ++j) dual(j, i) = (inv_cols[j][i] + p - (i == j ? 1 : 0)) % p;
  }
  return dual;
}

void dual_enumeration(SuiteResult& r, bool fault) {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u}) {
    for (std::uint64_t q : {std::uint64_t{p}, std::uint64_t{p} * p}) {
      for (std::size_t n = 1; n <= 4; ++n) {
        for (const auto& parts : partitions(n, q)) {
          const JordanType type{parts};
          const FpMatrix j = jordan_matrix(type, p);
          const FpMatrix c = random_invertible(rng, n, p);
          const FpMatrix x = fp::multiply(fp::multiply(c, j), *fp::inverse(c));
          ModulePresentation m{p, q, std::vector<std::string>(n, "m"), x};
          JordanType impl = jordan_type(dual_module(m));
          if (fault) impl.parts.push_back(1);
          const JordanType oracle = jordan_type_of(enumerated_dual_x(x));
          record(r, impl == oracle && oracle == type,
                 "p=" + std::to_string(p) + " type " + type.to_string() + ": dual_module " + impl.to_string() +
                     ", enumeration " + oracle.to_string());
        }
      }
    }
  }
}

void factorization_roundtrip(SuiteResult& r, bool fault) {
  std::mt19937_64 rng(12);
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> fields{{2, 1}, {3, 2}, {5, 1}, {7, 2}};
  for (const auto& [prime, deg] : fields) {
    const GaloisField k(prime, deg);
    for (int trial = 0; trial < 25; ++trial) {
      // random monic irreducibles with multiplicities
      std::map<Polynomial, std::uint32_t, CanonicalLess> expected;
      Polynomial product = poly::constant(k.one());
      const auto count = 1 + uniform_below(rng, 4);
      for (std::uint64_t i = 0; i < count; ++i) {
        Polynomial f;
        do {
          std::vector<FieldElement> c(2 + uniform_below(rng, 3));
          for (auto& x : c) x = k.element(uniform_below(rng, k.order()));
          c.back() = k.one();
          f = Polynomial(c);
        } while (!poly::is_irreducible(k, f));
        const auto mult = static_cast<std::uint32_t>(1 + uniform_below(rng, 3));
        expected[f] += mult;
        product = poly::mul(k, product, poly::pow(k, f, mult));
      }
      const FieldElement unit = k.element(1 + uniform_below(rng, k.order() - 1));
      product = poly::scale(k, product, unit);
      Factorization got = poly::factor(k, product, trial);
      if (fault) got.factors.pop_back();
      bool ok = got.unit == unit && got.factors.size() == expected.size();
      std::size_t i = 0;
      for (const auto& [f, m] : expected) {
        ok = ok && i < got.factors.size() && got.factors[i].first == f && got.factors[i].second == m;
        ++i;
      }
      record(r, ok, k.name() + ": factor(" + poly::to_string(k, product) + ") mismatch");
    }
  }
}

void pairing_properties(SuiteResult& r, bool fault) {
  const std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, std::vector<std::string>>> cases{
      {2, 2, 5, {"t"}}, {3, 1, 7, {"t", "t+1"}}, {2, 1, 3, {"t^2+1", "2"}}, {5, 1, 11, {"t+3"}}};
  for (const auto& [p, l, rr, gens] : cases) {
    const auto ctx = make_context(p, l, std::make_shared<const GaloisField>(rr));
    std::vector<FactoredElement> g;
    for (const auto& s : gens) g.push_back(parse_ratfunc(s, ctx));
    const auto [ext, lift] = build_extension(g, ctx);
    const ConjugationAction action(ext, lift);
    const std::size_t n = ext.degree();
    // Oracle: tau(prod r_j^a_j) / prod r_j^a_j = zeta_p^(sum a_j tau_j).
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const GaloisAutomorphism tau{fp::unit_vector(n, j)};
        auto value = kummer_pairing(tau, class_of(ext.radicands[i], ctx), ext);
        if (fault) value = (value + 1) % p;
        record(r, value == (i == j ? 1u : 0u),
               "<e_" + std::to_string(j + 1) + ", b_" + std::to_string(i + 1) + "> = " + std::to_string(value));
        const auto moved = action.apply(tau);
        const auto lhs = kummer_pairing(moved, class_of(sigma(ext.radicands[i], ctx), ctx), ext);
        record(r, lhs == kummer_pairing(tau, class_of(ext.radicands[i], ctx), ext), "equivariance fails");
      }
    }
  }
}

void dlog_roundtrip(SuiteResult& r, bool fault) {
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> fields{{3, 1}, {5, 1}, {3, 2}, {19, 1},
                                                                     {7, 2}, {1009, 1}, {31, 2}};
  for (const auto& [prime, deg] : fields) {
    const GaloisField k(prime, deg);
    const FieldElement g = k.find_primitive_root();
    std::size_t bad = 0;
    std::string witness;
    for (std::uint64_t v = 1; v < k.order(); ++v) {
      const FieldElement u = k.element(v);
      auto e = k.dlog(u);
      if (fault) e += 1;
      if (k.pow(g, static_cast<std::int64_t>(e)) != u && bad++ == 0) witness = k.name() + ": u=" + k.to_string(u);
    }
    record(r, bad == 0, witness);
  }
}

void rank_sequence(SuiteResult& r, bool fault) {
  std::mt19937_64 rng(15);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (std::size_t n = 1; n <= 6; ++n) {
      for (const auto& parts : partitions(n, n)) {
        const JordanType type{parts};
        const FpMatrix c = random_invertible(rng, n, p);
        const FpMatrix x = fp::multiply(fp::multiply(c, jordan_matrix(type, p)), *fp::inverse(c));
        JordanType got = jordan_type_of(x);
        if (fault) got.parts.push_back(1);
        // regenerate the module from the cyclic generators
        ModulePresentation m{p, 64, std::vector<std::string>(n, "m"), x};
        const auto summands = cyclic_decompose(m);
        const auto chain = chain_basis(m, summands);
        record(r, got == type && fp::span_rank(chain, n, p) == n,
               "type " + type.to_string() + " recovered as " + got.to_string());
      }
    }
  }
}

void fixed_points(SuiteResult& r, bool fault) {
  struct Case {
    std::uint32_t p, l, r;
    std::string gen;
  };
  for (const Case& c : {Case{2, 2, 5, "t"}, Case{3, 1, 7, "t"}, Case{2, 2, 5, "2"}}) {
    const auto ctx = make_context(c.p, c.l, std::make_shared<const GaloisField>(c.r));
    const GaloisField& k = ctx.k();
    // p-th powers of k by enumeration
    std::vector<bool> is_power(k.order(), false);
    for (std::uint64_t v = 1; v < k.order(); ++v) is_power[k.pow(k.element(v), c.p).value] = true;
    std::size_t expected = 0;
    if (c.gen == "t") {
      // x[t] = [sigma(t)/t] = [zeta], and x[zeta] = 0
      expected = is_power[ctx.zeta.value] ? 1 : 2;
    } else {
      expected = is_power[parse_field_literal(c.gen, k).value] ? 0 : 1;
    }
    const auto report = verify_relative_kummer({parse_ratfunc(c.gen, ctx)}, ctx, 0);
    JordanType want{expected == 0 ? std::vector<std::size_t>{} : std::vector<std::size_t>{expected}};
    JordanType got = report.galois_type;
    if (fault) got.parts.push_back(1);
    record(r, report.verdict && report.module_type == want && got == want,
           "<" + c.gen + "> over " + k.name() + ": got " + got.to_string() + ", want " + want.to_string());
  }
}

void sigma_order(SuiteResult& r, bool fault) {
  std::mt19937_64 rng(17);
  for (const auto& [p, l, prime] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>{
           {2, 2, 5}, {3, 2, 19}, {5, 1, 11}}) {
    const auto ctx = make_context(p, l, std::make_shared<const GaloisField>(prime));
    const GaloisField& k = ctx.k();
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<FieldElement> a(2 + uniform_below(rng, 4)), b(1 + uniform_below(rng, 4));
      for (auto& x : a) x = k.element(1 + uniform_below(rng, k.order() - 1));
      for (auto& x : b) x = k.element(1 + uniform_below(rng, k.order() - 1));
      const auto fa = ratfunc::from_polynomial(k, Polynomial(a));
      const auto fb = ratfunc::from_polynomial(k, Polynomial(b));
      const auto period = static_cast<std::int64_t>(fault ? ctx.q - 1 : ctx.q);
      record(r, sigma_power(fa, period, ctx) == fa, "sigma^q(a) != a for a = " + ratfunc::to_string(k, fa));
      record(r, sigma(ratfunc::multiply(k, fa, fb), ctx) == ratfunc::multiply(k, sigma(fa, ctx), sigma(fb, ctx)),
             "sigma is not multiplicative");
    }
  }
}

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all{
      {"dual_enumeration", dual_enumeration}, {"factorization_roundtrip", factorization_roundtrip},
      {"pairing_properties", pairing_properties}, {"dlog_roundtrip", dlog_roundtrip},
      {"rank_sequence", rank_sequence},         {"fixed_points", fixed_points},
      {"sigma_order", sigma_order},
  };
  return all;
}

}  // namespace

std::vector<std::string> selftest_suites() {
  std::vector<std::string> names;
  for (const auto& s : suites()) names.push_back(s.name);
  return names;
}

std::vector<SuiteResult> run_selftest(const std::optional<std::string>& inject_fault) {
  if (inject_fault) {
    const auto names = selftest_suites();
    if (std::find(names.begin(), names.end(), *inject_fault) == names.end()) {
      throw std::invalid_argument("unknown suite '" + *inject_fault + "'");
    }
  }
  std::vector<SuiteResult> results;
  for (const auto& s : suites()) {
    SuiteResult r;
    r.name = s.name;
    try {
      s.run(r, inject_fault && *inject_fault == s.name);
    } catch (const std::exception& e) {
      ++r.failures;
      r.witness = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace relkummer
