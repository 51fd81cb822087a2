#include <random>

#include "relkummer/cli.hpp"
#include "relkummer/errors.hpp"
#include "relkummer/random.hpp"

namespace relkummer {

namespace {

void validate_config(const CampaignConfig& config, std::shared_ptr<const GaloisField> k) {
  if (config.max_gens == 0 && config.count > 0) throw UnsupportedInstance("max-gens must be at least 1");
  make_context(config.p, config.l, std::move(k));
}

template <bool Parallel>
CampaignResult run(const CampaignConfig& config) {
  const auto field = parse_field_spec(config.field);
  validate_config(config, field);
  CampaignResult result;
  result.config = config;
  const auto n = static_cast<std::int64_t>(config.count);
  std::vector<CampaignEntry> entries(config.count);
  // Each slot is written by exactly one iteration, so output order is the
  // instance order whatever the schedule.
#pragma omp parallel for schedule(dynamic) if (Parallel)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto index = static_cast<std::uint64_t>(i);
    entries[index] = evaluate_instance(random_instance(config, *field, index));
  }
  result.entries = std::move(entries);
  return result;
}

}  // namespace

InstanceFile random_instance(const CampaignConfig& config, const GaloisField& k, std::uint64_t index) {
  InstanceFile inst;
  inst.p = config.p;
  inst.l = config.l;
  inst.field = config.field;
  inst.seed = splitmix64(config.seed + index);
  inst.label = "random #" + std::to_string(index);
  std::mt19937_64 rng(*inst.seed);
  const std::uint64_t gens = 1 + uniform_below(rng, config.max_gens);
  for (std::uint64_t g = 0; g < gens; ++g) {
    Polynomial f;
    while (f.is_zero()) {
      const std::uint64_t deg = uniform_below(rng, std::uint64_t{config.max_deg} + 1);
      std::vector<FieldElement> coeffs(deg + 1);
      for (auto& c : coeffs) c = k.element(uniform_below(rng, k.order()));
      f = Polynomial(std::move(coeffs));
    }
    inst.generators.push_back(poly::to_string(k, f));
  }
  return inst;
}

CampaignEntry evaluate_instance(const InstanceFile& instance) {
  CampaignEntry entry;
  entry.instance = instance;
  LoadedInstance loaded;
  try {
    loaded = load_instance(instance);
  } catch (const std::exception& e) {
    entry.status = kExitInvalidInstance;
    entry.error = e.what();
    return entry;
  }
  try {
    entry.report = verify_relative_kummer(loaded.generators, loaded.ctx, loaded.seed);
    entry.status = entry.report->verdict ? kExitPass : kExitVerificationFailure;
  } catch (const InvariantViolation& e) {
    entry.status = kExitInternalError;
    entry.error = std::string("invariant violation: ") + e.what();
  } catch (const std::exception& e) {
    entry.status = kExitInternalError;
    entry.error = e.what();
  }
  return entry;
}

std::size_t CampaignResult::passed() const {
  std::size_t n = 0;
  for (const auto& e : entries) n += e.status == kExitPass ? 1 : 0;
  return n;
}

CampaignResult run_campaign(const CampaignConfig& config) { return run<true>(config); }

CampaignResult run_campaign_serial(const CampaignConfig& config) { return run<false>(config); }

}  // namespace relkummer
