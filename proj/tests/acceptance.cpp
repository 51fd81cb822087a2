// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "relkummer/cli.hpp"

using namespace relkummer;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool report_line(int id, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", id, detail.c_str());
  return pass;
}

struct CorpusStats {
  std::size_t instances = 0;
  std::size_t passed = 0;
  double seconds = 0;
  std::vector<CampaignEntry> entries;
};

CorpusStats theorem_corpus() {
  const std::vector<CampaignConfig> configs{
      {50, 2, 1, "GF(3)", 3, 5, 101}, {50, 2, 2, "GF(5)", 3, 5, 102}, {50, 3, 1, "GF(7)", 3, 5, 103},
      {50, 3, 2, "GF(19)", 3, 5, 104}, {50, 5, 1, "GF(11)", 3, 5, 105},
  };
  CorpusStats stats;
  const auto start = Clock::now();
  for (const auto& config : configs) {
    CampaignResult result = run_campaign(config);
    stats.passed += result.passed();
    for (auto& e : result.entries) stats.entries.push_back(std::move(e));
  }
  stats.seconds = seconds_since(start);
  stats.instances = stats.entries.size();
  return stats;
}

// Totals of one named check over the corpus; instances filtered by `use`.
struct CheckTotals {
  std::size_t instances = 0;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string witness;
};

template <typename Filter>
CheckTotals totals(const CorpusStats& corpus, const std::string& name, Filter use) {
  CheckTotals t;
  for (const auto& e : corpus.entries) {
    if (!e.report) {
      ++t.failures;
      if (t.witness.empty()) t.witness = e.error;
      continue;
    }
    if (!use(*e.report)) continue;
    const CheckResult* c = e.report->find(name);
    ++t.instances;
    if (c == nullptr || !c->pass) {
      ++t.failures;
      if (t.witness.empty()) t.witness = c ? c->witness : "check missing";
    } else {
      t.cases += c->cases;
    }
  }
  return t;
}

bool criterion_1(const CorpusStats& corpus) {
  const bool ok = corpus.passed == 250 && corpus.instances == 250 && corpus.seconds < 60.0;
  char buf[160];
  std::snprintf(buf, sizeof buf, "main theorem suite %zu/%zu instances pass in %.2f s (limit 60 s)", corpus.passed,
                corpus.instances, corpus.seconds);
  return report_line(1, ok, buf);
}

bool criterion_2(const CorpusStats& corpus) {
  const auto t = totals(corpus, "pairing_equivariance", [](const VerificationReport&) { return true; });
  return report_line(2, t.failures == 0 && t.instances == 250,
                     "equivariance on " + std::to_string(t.cases) + " basis pairs over " +
                         std::to_string(t.instances) + " instances, " + std::to_string(t.failures) +
                         " counterexamples" + (t.witness.empty() ? "" : " (" + t.witness + ")"));
}

bool criterion_3(const CorpusStats& corpus) {
  const auto all = [](const VerificationReport&) { return true; };
  const auto kernel = totals(corpus, "rho_kernel", all);
  const auto component = totals(corpus, "rho_last_component", all);
  const bool ok = kernel.failures == 0 && component.failures == 0 && kernel.instances == 250;
  return report_line(3, ok,
                     "rho kernel on " + std::to_string(kernel.cases) + " cyclic summand generators, component " +
                         "relation on " + std::to_string(component.cases) + " recursion steps, " +
                         std::to_string(kernel.failures + component.failures) + " failures" +
                         (ok ? "" : " (" + kernel.witness + component.witness + ")"));
}

bool criterion_4() {
  const auto start = Clock::now();
  std::size_t matrices = 0, single_blocks = 0, failures = 0;
  std::string witness;
  auto check = [&](const FpMatrix& x, std::uint64_t q) {
    const ModulePresentation m{x.modulus(), q, std::vector<std::string>(x.rows(), "m"), x};
    const JordanType original = jordan_type(m);
    const JordanType via_module = jordan_type(dual_module(m));
    const JordanType via_enumeration = oracle::jordan_type_by_enumeration(oracle::enumerated_dual(x));
    if (!(original == via_module && original == via_enumeration)) {
      if (failures++ == 0) {
        witness = "type " + original.to_string() + " dual " + via_module.to_string() + " enum " +
                  via_enumeration.to_string();
      }
    }
  };
  for (std::uint32_t p : {2u, 3u}) {
    for (std::uint64_t q : {std::uint64_t{p}, std::uint64_t{p} * p}) {
      for (std::size_t n = 1; n <= 4; ++n) {
        for (const auto& x : oracle::nilpotent_matrices(n, p, q, 1000)) {
          check(x, q);
          ++matrices;
        }
        if (n <= q) {
          check(jordan_matrix(JordanType{{n}}, p), q);
          ++single_blocks;
        }
      }
    }
  }
  const double secs = seconds_since(start);
  char buf[200];
  std::snprintf(buf, sizeof buf, "duality oracle on %zu nilpotent matrices + %zu single blocks, %zu mismatches, %.2f s (limit 30 s)%s%s",
                matrices, single_blocks, failures, secs, witness.empty() ? "" : " ", witness.c_str());
  return report_line(4, failures == 0 && matrices >= 100 && secs < 30.0, buf);
}

bool criterion_5(const CorpusStats& corpus) {
  const auto multi = [](const VerificationReport& r) { return r.module_type.parts.size() >= 2; };
  const auto t = totals(corpus, "n1_decomposition", multi);
  return report_line(5, t.failures == 0 && t.instances > 0,
                     "N[1] + N_{B[1]} decomposition on " + std::to_string(t.instances) +
                         " multi-summand instances (" + std::to_string(t.cases) + " splits), " +
                         std::to_string(t.failures) + " failures" + (t.witness.empty() ? "" : " (" + t.witness + ")"));
}

bool criterion_6() {
  struct Case {
    std::uint32_t p, l, r;
    std::string gen;
    std::uint32_t c, e;
    JordanType want;
  };
  std::string detail;
  bool ok = true;
  for (const Case& c : {Case{2, 2, 5, "t", 1, 1, {{2}}}, Case{3, 1, 7, "t", 1, 1, {{2}}},
                        Case{2, 2, 5, "2", 2, 0, {{1}}}}) {
    const auto ctx = make_context(c.p, c.l, std::make_shared<const GaloisField>(c.r));
    const JordanType brute = oracle::monomial_class_type(c.r, c.p, ctx.zeta.value, {{c.c, c.e}});
    const auto report = verify_relative_kummer({parse_ratfunc(c.gen, ctx)}, ctx, 0);
    const bool good = report.verdict && brute == c.want && report.module_type == c.want && report.galois_type == c.want;
    ok = ok && good;
    detail += (detail.empty() ? "" : "; ") + std::string("<") + c.gen + "> GF(" + std::to_string(c.r) + ") p=" +
              std::to_string(c.p) + " l=" + std::to_string(c.l) + " -> " + report.module_type.to_string() + "/" +
              report.galois_type.to_string() + " (brute force " + brute.to_string() + ")";
  }
  return report_line(6, ok, "fixed points " + detail);
}

bool criterion_7(const CorpusStats& corpus) {
  // factorization round-trip: 1000 inputs, fields of order <= 49, total degree <= 12
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> fields{
      {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}, {2, 4}, {17, 1}, {5, 2}, {3, 3}, {7, 2}};
  std::mt19937_64 rng(7007);
  std::size_t inputs = 0, mismatches = 0;
  for (std::size_t f = 0; f < fields.size(); ++f) {
    const GaloisField k(fields[f].first, fields[f].second);
    const oracle::IrreduciblePool pool(k, 4, 10, 500 + f);
    const std::size_t quota = 1000 / fields.size() + (f < 1000 % fields.size() ? 1 : 0);
    for (std::size_t trial = 0; trial < quota; ++trial) {
      std::map<Polynomial, std::uint32_t, CanonicalLess> expected;
      Polynomial product = poly::constant(k.one());
      const std::uint64_t target = uniform_below(rng, 13);
      for (int guard = 0; guard < 20 && product.degree() < static_cast<int>(target); ++guard) {
        const auto room = target - static_cast<std::uint64_t>(product.degree());
        const auto d = 1 + uniform_below(rng, std::min<std::uint64_t>(4, room));
        const auto& choices = pool.of_degree(d);
        if (choices.empty()) continue;
        const Polynomial& g = choices[uniform_below(rng, choices.size())];
        expected[g] += 1;
        product = poly::mul(k, product, g);
      }
      const FieldElement unit = k.element(1 + uniform_below(rng, k.order() - 1));
      product = poly::scale(k, product, unit);
      const Factorization got = poly::factor(k, product, trial);
      const std::vector<std::pair<Polynomial, std::uint32_t>> want(expected.begin(), expected.end());
      ++inputs;
      if (got.unit != unit || got.factors != want) ++mismatches;
    }
  }
  const auto lift = totals(corpus, "lift_independence", [](const VerificationReport&) { return true; });
  const bool ok = inputs == 1000 && mismatches == 0 && lift.failures == 0 && lift.instances == 250;
  return report_line(7, ok,
                     "factorization round-trip " + std::to_string(inputs - mismatches) + "/" + std::to_string(inputs) +
                         ", lift independence on " + std::to_string(lift.instances) + " instances (" +
                         std::to_string(lift.cases) + " twisted lifts), " + std::to_string(lift.failures) + " failures");
}

}  // namespace

int main() {
  const CorpusStats corpus = theorem_corpus();
  bool ok = true;
  ok &= criterion_1(corpus);
  ok &= criterion_2(corpus);
  ok &= criterion_3(corpus);
  ok &= criterion_4();
  ok &= criterion_5(corpus);
  ok &= criterion_6();
  ok &= criterion_7(corpus);
  std::printf("%s\n", ok ? "all acceptance criteria pass" : "acceptance criteria FAILED");
  return ok ? 0 : 1;
}
