#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "relkummer/kummer.hpp"

namespace relkummer {

enum ExitStatus : int {
  kExitPass = 0,
  kExitVerificationFailure = 1,
  kExitInvalidInstance = 2,
  kExitInternalError = 3,
};

/// Line-oriented `key = value` instance file. Values are kept as text so
/// that print/parse round-trips exactly.
struct InstanceFile {
  std::uint32_t p = 2;
  std::uint32_t l = 1;
  std::string field;
  std::optional<std::string> zeta;
  std::vector<std::string> generators;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> label;

  // Source positions for diagnostics; ignored by ==.
  std::pair<std::size_t, std::size_t> field_position{1, 1};
  std::pair<std::size_t, std::size_t> zeta_position{1, 1};
  std::size_t generators_line = 0;
  std::vector<std::size_t> generator_columns;

  bool operator==(const InstanceFile& o) const {
    return p == o.p && l == o.l && field == o.field && zeta == o.zeta && generators == o.generators &&
           seed == o.seed && label == o.label;
  }
};

// Throws ParseError with the line and column of the offending token.
InstanceFile parse_instance(std::string_view text);
InstanceFile read_instance_file(const std::string& path);
std::string print_instance(const InstanceFile& instance);

// "GF(r)" or "GF(r^m)", optionally followed by "modulus=[c0,...,1]".
std::shared_ptr<const GaloisField> parse_field_spec(std::string_view text, std::size_t line = 1,
                                                    std::size_t column = 1);

struct LoadedInstance {
  GaloisContext ctx;
  std::vector<FactoredElement> generators;
  std::uint64_t seed = 0;
};

// Throws ParseError or UnsupportedInstance.
LoadedInstance load_instance(const InstanceFile& instance);

nlohmann::ordered_json instance_to_json(const InstanceFile& instance);
nlohmann::ordered_json report_to_json(const InstanceFile& instance, const VerificationReport& report);
std::string report_to_text(const InstanceFile& instance, const VerificationReport& report);

struct CampaignConfig {
  std::uint64_t count = 0;
  std::uint32_t p = 2;
  std::uint32_t l = 1;
  std::string field;
  std::uint32_t max_gens = 3;
  std::uint32_t max_deg = 5;
  std::uint64_t seed = 0;
};

// Instance `index` of the campaign: generator count uniform in [1, max_gens],
// each generator a polynomial of degree uniform in [0, max_deg] with
// uniform coefficients (zero polynomials redrawn).
InstanceFile random_instance(const CampaignConfig& config, const GaloisField& k, std::uint64_t index);

struct CampaignEntry {
  InstanceFile instance;
  std::optional<VerificationReport> report;
  int status = kExitPass;
  std::string error;
};

struct CampaignResult {
  CampaignConfig config;
  std::vector<CampaignEntry> entries;  // by instance index

  std::size_t passed() const;
  bool verdict() const { return passed() == entries.size(); }
};

// Validates the configuration (UnsupportedInstance) and runs every instance.
CampaignResult run_campaign(const CampaignConfig& config);
// Single-threaded reference; same result as run_campaign.
CampaignResult run_campaign_serial(const CampaignConfig& config);
// Verifies one instance, mapping exceptions to exit statuses.
CampaignEntry evaluate_instance(const InstanceFile& instance);

nlohmann::ordered_json campaign_to_json(const CampaignResult& result);

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string witness;
};

// Names of the built-in oracle suites, in run order.
std::vector<std::string> selftest_suites();
// `inject_fault` names a suite whose implementation side is deliberately
// corrupted; throws std::invalid_argument for an unknown name.
std::vector<SuiteResult> run_selftest(const std::optional<std::string>& inject_fault = std::nullopt);

int cmd_analyze(const std::string& path, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& path, const std::optional<std::string>& json_out, std::ostream& out,
               std::ostream& err);
int cmd_random(const CampaignConfig& config, const std::optional<std::string>& json_out, std::ostream& out,
               std::ostream& err);
int cmd_selftest(const std::optional<std::string>& inject_fault, std::ostream& out, std::ostream& err);

}  // namespace relkummer
