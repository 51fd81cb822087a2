#include <fstream>
#include <iomanip>
#include <ostream>

#include "relkummer/cli.hpp"
#include "relkummer/errors.hpp"

namespace relkummer {

namespace {

// Loads an instance file, printing the diagnostic on failure.
std::optional<std::pair<InstanceFile, LoadedInstance>> load(const std::string& path, std::ostream& err) {
  try {
    InstanceFile inst = read_instance_file(path);
    LoadedInstance loaded = load_instance(inst);
    return std::make_pair(std::move(inst), std::move(loaded));
  } catch (const ParseError& e) {
    err << path << ":" << e.line() << ":" << e.column() << ": error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << path << ": error: " << e.what() << "\n";
  }
  return std::nullopt;
}

bool write_json(const std::string& path, const nlohmann::ordered_json& j, std::ostream& err) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    err << "error: cannot write " << path << "\n";
    return false;
  }
  out << j.dump(2) << "\n";
  return true;
}

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const InvariantViolation& e) {
    err << "internal error: invariant violation: " << e.what() << "\n";
    return kExitInternalError;
  } catch (const UnsupportedInstance& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInstance;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInstance;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
}

}  // namespace

int cmd_analyze(const std::string& path, std::ostream& out, std::ostream& err) {
  auto loaded = load(path, err);
  if (!loaded) return kExitInvalidInstance;
  return guarded(err, [&] {
    const auto& [inst, data] = *loaded;
    const GaloisField& k = data.ctx.k();
    const auto [ext, lift] = build_extension(data.generators, data.ctx);
    out << "setting    p=" << inst.p << " l=" << inst.l << " k=" << k.name() << " zeta=" << k.to_string(data.ctx.zeta)
        << "\n";
    for (std::size_t i = 0; i < data.generators.size(); ++i) {
      if (is_pth_power_in_E(k, data.generators[i], inst.p)) {
        out << "note       generator " << i + 1 << " '" << inst.generators[i] << "' is a p-th power\n";
      }
    }
    if (ext.module.closure_enlarged()) out << "note       G-closure is larger than the span of the generators\n";
    out << "basis of B/E^xp (dimension " << ext.degree() << ")\n";
    for (std::size_t i = 0; i < ext.degree(); ++i) {
      out << "  b_" << i + 1 << " = " << ratfunc::to_string(k, ext.radicands[i]) << "\n";
    }
    out << "cyclic generators\n";
    for (const auto& block : ext.blocks) {
      out << "  b_" << block.offset + 1 << "  annihilator exponent s = "
          << annihilator_exponent(class_of(ext.radicands[block.offset], data.ctx), data.ctx) << "\n";
    }
    out << "jordan type " << jordan_type(ext.module.presentation).to_string() << "\n";
    out << "x-action (column j is x b_j)\n";
    const FpMatrix& x = ext.module.presentation.x;
    for (std::size_t i = 0; i < x.rows(); ++i) {
      out << "  ";
      for (std::size_t j = 0; j < x.cols(); ++j) out << (j ? " " : "") << x(i, j);
      out << "\n";
    }
    return static_cast<int>(kExitPass);
  });
}

int cmd_verify(const std::string& path, const std::optional<std::string>& json_out, std::ostream& out,
               std::ostream& err) {
  auto loaded = load(path, err);
  if (!loaded) return kExitInvalidInstance;
  return guarded(err, [&] {
    const auto& [inst, data] = *loaded;
    const VerificationReport report = verify_relative_kummer(data.generators, data.ctx, data.seed);
    if (json_out) {
      if (!write_json(*json_out, report_to_json(inst, report), err)) return static_cast<int>(kExitInternalError);
      out << "verdict " << (report.verdict ? "pass" : "fail") << " (report written to " << *json_out << ")\n";
    } else {
      out << report_to_text(inst, report);
    }
    return static_cast<int>(report.verdict ? kExitPass : kExitVerificationFailure);
  });
}

int cmd_random(const CampaignConfig& config, const std::optional<std::string>& json_out, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    const CampaignResult result = run_campaign(config);
    if (json_out && !write_json(*json_out, campaign_to_json(result), err)) {
      return static_cast<int>(kExitInternalError);
    }
    out << std::left << std::setw(7) << "index" << std::setw(22) << "seed" << std::setw(12) << "type"
        << std::setw(8) << "result" << "generators\n";
    int worst = kExitPass;
    for (std::size_t i = 0; i < result.entries.size(); ++i) {
      const CampaignEntry& e = result.entries[i];
      std::string gens;
      for (const auto& g : e.instance.generators) gens += (gens.empty() ? "" : ", ") + g;
      out << std::setw(7) << i << std::setw(22) << e.instance.seed.value_or(0) << std::setw(12)
          << (e.report ? e.report->galois_type.to_string() : "-") << std::setw(8)
          << (e.status == kExitPass ? "pass" : "FAIL") << gens << "\n";
      if (!e.error.empty()) out << "       " << e.error << "\n";
      if (e.report) {
        for (const auto& c : e.report->checks) {
          if (!c.pass) out << "       " << c.name << ": " << c.witness << "\n";
        }
      }
      worst = std::max(worst, e.status);
    }
    out << result.passed() << "/" << result.entries.size() << " instances pass\n";
    return worst;
  });
}

int cmd_selftest(const std::optional<std::string>& inject_fault, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto results = run_selftest(inject_fault);
    bool ok = true;
    out << std::left << std::setw(26) << "suite" << std::setw(8) << "cases" << std::setw(10) << "failures"
        << "result\n";
    for (const auto& r : results) {
      out << std::setw(26) << r.name << std::setw(8) << r.cases << std::setw(10) << r.failures
          << (r.failures == 0 ? "pass" : "FAIL: " + r.witness) << "\n";
      ok = ok && r.failures == 0;
    }
    out << results.size() << " suites, " << (ok ? "all pass" : "failures present") << "\n";
    return static_cast<int>(ok ? kExitPass : kExitVerificationFailure);
  });
}

}  // namespace relkummer
