// Copyright 2026 The cvsep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cvsep/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace cvsep {

namespace {

using nlohmann::json;

std::string format_full(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

json spectrum_json(const SymplecticSpectrum& spectrum) {
  return json(spectrum.values());
}

json nullable(double value) {
  if (std::isnan(value)) return nullptr;
  return value;
}

json report_json(const Report& report) {
  json j;
  j["input"] = report.input;
  j["label"] = report.label;
  j["digest"] = report.digest;
  j["modes"] = report.modes;
  j["tool_version"] = report.tool_version;
  j["tolerances"] = {{"tol_phys", report.tol_phys},
                     {"tol_symp", report.tol_symp}};
  if (report.full_check) {
    j["full_uncertainty"] = {
        {"pass", report.full_check->pass},
        {"positive_definite", report.full_check->positive_definite},
        {"min_nu", nullable(report.full_check->min_nu)},
        {"spectrum", spectrum_json(report.full_check->spectrum)},
    };
  }
  if (report.symplectic_check) {
    j["symplectic_uncertainty"] = {
        {"pass", report.symplectic_check->pass},
        {"sigma_n", report.symplectic_check->sigma_n},
        {"necessary_only", report.symplectic_check->necessary_only},
    };
  }
  if (report.invariants) {
    j["invariants"] = {
        {"deltas", report.invariants->deltas},
        {"sigma_n", report.invariants->sigma_n},
    };
  }
  if (report.spectrum) {
    j["spectrum"] = spectrum_json(*report.spectrum);
  }
  if (!report.partitions.empty()) {
    json parts = json::array();
    for (const PartitionResult& p : report.partitions) {
      parts.push_back({
          {"partition", p.partition},
          {"verdict", to_string(p.verdict.status)},
          {"sigma_tilde", p.verdict.sigma_tilde},
          {"min_nu_tilde", nullable(p.verdict.min_nu_tilde)},
          {"deltas_tilde", p.verdict.deltas_tilde},
          {"nu_tilde", p.nu_tilde},
          {"basis", p.verdict.basis},
      });
    }
    j["partitions"] = parts;
  }
  if (!report.warnings.empty()) j["warnings"] = report.warnings;
  if (!report.errors.empty()) j["errors"] = report.errors;
  return j;
}

void write_values(std::ostream& out, const std::vector<double>& values) {
  for (size_t i = 0; i < values.size(); ++i) {
    out << (i == 0 ? "" : " ") << format_full(values[i]);
  }
}

}  // namespace

std::string matrix_digest(const CovarianceMatrix& cm) {
  // FNV-1a 64-bit over the canonical full-precision serialization.
  std::uint64_t hash = 1469598103934665603ull;
  auto mix = [&hash](const std::string& text) {
    for (unsigned char c : text) {
      hash ^= c;
      hash *= 1099511628211ull;
    }
  };
  mix("modes:" + std::to_string(cm.modes()) + ";");
  for (int i = 0; i < cm.dim(); ++i) {
    for (int j = 0; j < cm.dim(); ++j) {
      mix(format_full(cm.matrix()(i, j)));
      mix(",");
    }
  }
  char buffer[24];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(hash));
  return buffer;
}

void write_text(std::ostream& out, const Report& report) {
  out << "input:    " << report.input << "\n";
  if (!report.label.empty()) {
    out << "label:    " << report.label << "\n";
  }
  out << "digest:   " << report.digest << "\n";
  out << "modes:    " << report.modes << "\n";
  out << "version:  " << report.tool_version << "\n";
  out << "tol_phys: " << format_full(report.tol_phys)
      << "  tol_symp: " << format_full(report.tol_symp) << "\n";
  for (const std::string& warning : report.warnings) {
    out << "warning:  " << warning << "\n";
  }
  for (const std::string& error : report.errors) {
    out << "error:    " << error << "\n";
  }
  if (report.full_check) {
    out << "full uncertainty (sigma + i Omega >= 0): "
        << (report.full_check->pass ? "PASS" : "FAIL") << "\n";
    out << "  positive definite: "
        << (report.full_check->positive_definite ? "yes" : "no") << "\n";
    if (report.full_check->positive_definite) {
      out << "  nu: ";
      write_values(out, report.full_check->spectrum.values());
      out << "\n  min nu: " << format_full(report.full_check->min_nu) << "\n";
    }
  }
  if (report.symplectic_check) {
    out << "symplectic uncertainty (Sigma_n >= 0): "
        << (report.symplectic_check->pass ? "PASS" : "FAIL") << "\n";
    out << "  Sigma_n: " << format_full(report.symplectic_check->sigma_n)
        << "\n";
    if (report.symplectic_check->necessary_only) {
      out << "  caveat: necessary-only for n >= 2 (an even number of "
             "violations goes undetected)\n";
    }
  }
  if (report.invariants) {
    out << "invariants Delta_0..Delta_n: ";
    write_values(out, report.invariants->deltas);
    out << "\n  Sigma_n: " << format_full(report.invariants->sigma_n) << "\n";
  }
  if (report.spectrum) {
    out << "spectrum nu (descending): ";
    write_values(out, report.spectrum->values());
    out << "\n";
  }
  for (const PartitionResult& p : report.partitions) {
    out << "partition " << p.partition << ": "
        << to_string(p.verdict.status) << "\n";
    out << "  sigma_tilde: " << format_full(p.verdict.sigma_tilde) << "\n";
    if (!std::isnan(p.verdict.min_nu_tilde)) {
      out << "  min nu_tilde: " << format_full(p.verdict.min_nu_tilde) << "\n";
    }
    if (!p.nu_tilde.empty()) {
      out << "  nu_tilde: ";
      write_values(out, p.nu_tilde);
      out << "\n";
    }
    out << "  deltas_tilde: ";
    write_values(out, p.verdict.deltas_tilde);
    out << "\n";
    out << "  basis: " << p.verdict.basis << "\n";
  }
}

std::string to_json_string(const Report& report) {
  return report_json(report).dump(2);
}

void write_batch_text(std::ostream& out, const std::vector<Report>& rows) {
  for (const Report& row : rows) {
    if (!row.errors.empty()) {
      out << row.input << "\t" << row.label << "\tERROR\t" << row.errors.front()
          << "\n";
      continue;
    }
    if (row.partitions.empty()) {
      out << row.input << "\t" << row.label << "\t(no partitions)\n";
    }
    for (const PartitionResult& p : row.partitions) {
      out << row.input << "\t" << row.label << "\t" << p.partition << "\t"
          << to_string(p.verdict.status) << "\tsigma_tilde="
          << format_full(p.verdict.sigma_tilde) << "\n";
    }
  }
}

std::string batch_json_string(const std::vector<Report>& rows) {
  json j = json::array();
  for (const Report& row : rows) {
    j.push_back(report_json(row));
  }
  return j.dump(2);
}

}  // namespace cvsep
