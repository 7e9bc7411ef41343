#include "relaycap/report.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

namespace relaycap {

namespace {
constexpr std::size_t kMaxListedOffenders = 20;
}

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string csv_row(const RateReport& r) {
  std::string row;
  for (double v : {r.snr.c, r.snr.a, r.snr.b, r.c_plus, r.rho_star, r.r_df, r.r_cf, r.r_af}) {
    row += format_number(v);
    row += ',';
  }
  row += r.af_relay_active ? "1," : "0,";
  row += format_number(r.delta1);
  row += ',';
  row += format_number(r.delta2);
  return row;
}

void write_csv(std::ostream& os, std::span<const RateReport> rows) {
  os << kCsvHeader << '\n';
  for (const auto& r : rows) os << csv_row(r) << '\n';
}

nlohmann::json to_json(const RateReport& r) {
  return {
      {"a", r.snr.a},         {"b", r.snr.b},           {"c", r.snr.c},
      {"c_plus", r.c_plus},   {"rho_star", r.rho_star}, {"r_df", r.r_df},
      {"r_cf", r.r_cf},       {"r_af", r.r_af},         {"af_relay_active", r.af_relay_active},
      {"c_d", r.c_d},         {"delta1", r.delta1},     {"delta2", r.delta2},
  };
}

void write_json(std::ostream& os, std::span<const RateReport> rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) arr.push_back(to_json(r));
  os << arr.dump(2) << '\n';
}

nlohmann::json to_json(const VerifySummary& s, const SweepConfig& config) {
  nlohmann::json offending = nlohmann::json::array();
  for (const auto& o : s.offending)
    offending.push_back({{"index", o.index},
                         {"a", o.snr.a},
                         {"b", o.snr.b},
                         {"c", o.snr.c},
                         {"gap_violation", o.gap_violation},
                         {"certificate_failure", o.certificate_failure}});
  return {
      {"samples", s.samples},
      {"seed", config.seed},
      {"snr_min", config.snr_min},
      {"snr_max", config.snr_max},
      {"max_delta1", s.max_delta1},
      {"min_delta1", s.min_delta1},
      {"max_delta2", s.max_delta2},
      {"min_delta2", s.min_delta2},
      {"max_delta2_relay_off", s.max_delta2_relay_off},
      {"max_raw_af_gap_relay_off", s.max_raw_af_gap_relay_off},
      {"certificates_checked", s.certificates_checked},
      {"gap_violations", s.gap_violations},
      {"certificate_failures", s.certificate_failures},
      {"status", s.ok() ? "PASS" : "FAIL"},
      {"offending", offending},
  };
}

std::string render_verify_text(const VerifySummary& s, const SweepConfig& config) {
  std::ostringstream os;
  os << "samples: " << s.samples << '\n'
     << "seed: " << config.seed << '\n'
     << "snr_range: [" << format_number(config.snr_min) << ", " << format_number(config.snr_max)
     << "]\n"
     << "max_delta1: " << format_number(s.max_delta1) << '\n'
     << "min_delta1: " << format_number(s.min_delta1) << '\n'
     << "max_delta2: " << format_number(s.max_delta2) << '\n'
     << "min_delta2: " << format_number(s.min_delta2) << '\n'
     << "max_delta2_relay_off: " << format_number(s.max_delta2_relay_off) << '\n'
     << "max_raw_af_gap_relay_off: " << format_number(s.max_raw_af_gap_relay_off) << '\n'
     << "certificates_checked: " << s.certificates_checked << '\n'
     << "gap_violations: " << s.gap_violations << '\n'
     << "certificate_failures: " << s.certificate_failures << '\n';
  std::size_t listed = 0;
  for (const auto& o : s.offending) {
    if (listed++ == kMaxListedOffenders) {
      os << "offending: ... " << (s.offending.size() - kMaxListedOffenders) << " more\n";
      break;
    }
    os << "offending: index=" << o.index << " a=" << format_number(o.snr.a)
       << " b=" << format_number(o.snr.b) << " c=" << format_number(o.snr.c)
       << (o.gap_violation ? " gap" : "") << (o.certificate_failure ? " certificate" : "") << '\n';
  }
  os << "status: " << (s.ok() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

}  // namespace relaycap
