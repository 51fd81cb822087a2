#include <iomanip>
#include <sstream>

#include "relkummer/cli.hpp"

namespace relkummer {

namespace {

constexpr int kSchemaVersion = 1;

nlohmann::ordered_json parts(const JordanType& t) { return nlohmann::ordered_json(t.parts); }

std::vector<std::string> notes_for(const InstanceFile& inst, const VerificationReport& report) {
  std::vector<std::string> notes;
  for (const auto i : report.degenerate_generators) {
    notes.push_back("generator " + std::to_string(i + 1) + " '" + inst.generators.at(i) + "' is a p-th power");
  }
  if (report.closure_enlarged) notes.push_back("G-closure is larger than the span of the generators");
  return notes;
}

}  // namespace

nlohmann::ordered_json instance_to_json(const InstanceFile& inst) {
  nlohmann::ordered_json j;
  if (inst.label) j["label"] = *inst.label;
  j["p"] = inst.p;
  j["l"] = inst.l;
  j["field"] = inst.field;
  if (inst.zeta) j["zeta"] = *inst.zeta;
  j["generators"] = inst.generators;
  if (inst.seed) j["seed"] = *inst.seed;
  return j;
}

nlohmann::ordered_json report_to_json(const InstanceFile& inst, const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["instance"] = instance_to_json(inst);
  j["basis"] = report.basis;
  j["jordan_type_module"] = parts(report.module_type);
  j["jordan_type_galois"] = parts(report.galois_type);
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json entry;
    entry["name"] = c.name;
    entry["pass"] = c.pass;
    if (!c.witness.empty()) entry["witness"] = c.witness;
    checks.push_back(std::move(entry));
  }
  j["checks"] = std::move(checks);
  j["verdict"] = report.verdict ? "pass" : "fail";
  j["seed"] = report.seed;
  j["annihilator_exponents"] = report.annihilator_exponents;
  j["notes"] = notes_for(inst, report);
  return j;
}

std::string report_to_text(const InstanceFile& inst, const VerificationReport& report) {
  std::ostringstream out;
  if (inst.label) out << "instance   " << *inst.label << "\n";
  out << "setting    p=" << inst.p << " l=" << inst.l << " k=" << inst.field << "\n";
  out << "seed       " << report.seed << "\n";
  out << "basis      ";
  if (report.basis.empty()) out << "(empty)";
  for (std::size_t i = 0; i < report.basis.size(); ++i) out << (i ? ", " : "") << "[" << report.basis[i] << "]";
  out << "\n";
  out << "type       B/E^xp " << report.module_type.to_string() << "   N_B " << report.galois_type.to_string()
      << "\n";
  for (const auto& note : notes_for(inst, report)) out << "note       " << note << "\n";
  out << "\n" << std::left << std::setw(28) << "check" << std::setw(8) << "result" << std::setw(8) << "cases"
      << "witness\n";
  for (const auto& c : report.checks) {
    out << std::setw(28) << c.name << std::setw(8) << (c.pass ? "pass" : "FAIL") << std::setw(8) << c.cases
        << c.witness << "\n";
  }
  out << "\nverdict    " << (report.verdict ? "pass" : "fail") << "\n";
  return out.str();
}

nlohmann::ordered_json campaign_to_json(const CampaignResult& result) {
  const CampaignConfig& c = result.config;
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["config"] = {{"count", c.count}, {"p", c.p},           {"l", c.l},
                 {"field", c.field}, {"max_gens", c.max_gens}, {"max_deg", c.max_deg},
                 {"seed", c.seed}};
  j["distribution"] =
      "generator count uniform in [1, max_gens]; degree uniform in [0, max_deg]; coefficients uniform in k; "
      "zero polynomials redrawn; instance i uses seed splitmix64(seed + i)";
  auto instances = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < result.entries.size(); ++i) {
    const CampaignEntry& e = result.entries[i];
    nlohmann::ordered_json entry;
    entry["index"] = i;
    entry["instance"] = instance_to_json(e.instance);
    entry["status"] = e.status;
    if (e.report) {
      entry["jordan_type_module"] = parts(e.report->module_type);
      entry["jordan_type_galois"] = parts(e.report->galois_type);
      auto failed = nlohmann::ordered_json::array();
      for (const auto& check : e.report->checks) {
        if (!check.pass) failed.push_back({{"name", check.name}, {"witness", check.witness}});
      }
      entry["failed_checks"] = std::move(failed);
    }
    if (!e.error.empty()) entry["error"] = e.error;
    entry["verdict"] = e.status == kExitPass ? "pass" : "fail";
    instances.push_back(std::move(entry));
  }
  j["instances"] = std::move(instances);
  j["passed"] = result.passed();
  j["failed"] = result.entries.size() - result.passed();
  j["verdict"] = result.verdict() ? "pass" : "fail";
  return j;
}

}  // namespace relkummer
