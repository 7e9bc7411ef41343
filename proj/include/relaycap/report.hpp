#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include <json.hpp>

#include "relaycap/rates.hpp"
#include "relaycap/sweep.hpp"

namespace relaycap {

inline constexpr const char* kCsvHeader =
    "c_snr,a_snr,b_snr,c_plus,rho_star,r_df,r_cf,r_af,af_relay_active,delta1,delta2";

/// 12 significant digits, shortest of %e / %f style.
std::string format_number(double x);

std::string csv_row(const RateReport& r);
void write_csv(std::ostream& os, std::span<const RateReport> rows);

nlohmann::json to_json(const RateReport& r);
void write_json(std::ostream& os, std::span<const RateReport> rows);

nlohmann::json to_json(const VerifySummary& s, const SweepConfig& config);
std::string render_verify_text(const VerifySummary& s, const SweepConfig& config);

}  // namespace relaycap
