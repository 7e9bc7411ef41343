// relaycap: rates, figure data, sweeps and gap-theorem verification for the
// three-node Gaussian relay channel.
//
// Exit codes: 0 success, 1 usage error, 2 verification failure.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "relaycap/af_spectrum.hpp"
#include "relaycap/channel.hpp"
#include "relaycap/rates.hpp"
#include "relaycap/report.hpp"
#include "relaycap/sweep.hpp"

namespace {

using namespace relaycap;

constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;

/// Either three SNRs or the physical gains; validated into an SnrTriple.
struct ChannelArgs {
  std::optional<double> a, b, c;
  double theta_a = 0.0, theta_b = 0.0, theta_c = 0.0;
  std::optional<double> h21, h31, h32;
  double p1 = 1.0, p2 = 1.0;
  double phase21 = 0.0, phase31 = 0.0, phase32 = 0.0;

  void attach(CLI::App* app) {
    auto* direct = app->add_option_group("direct", "SNR entry");
    direct->add_option("--a", a, "source->destination SNR |h31|^2 P1 (linear)");
    direct->add_option("--b", b, "relay->destination SNR |h32|^2 P2 (linear)");
    direct->add_option("--c", c, "source->relay SNR |h21|^2 P1 (linear)");
    direct->add_option("--theta-a", theta_a, "phase of h31 (rad)");
    direct->add_option("--theta-b", theta_b, "phase of h32 (rad)");
    direct->add_option("--theta-c", theta_c, "phase of h21 (rad)");
    auto* phys = app->add_option_group("physical", "gain entry");
    phys->add_option("--h21", h21, "|h21|");
    phys->add_option("--h31", h31, "|h31|");
    phys->add_option("--h32", h32, "|h32|");
    phys->add_option("--p1", p1, "source power P1");
    phys->add_option("--p2", p2, "relay power P2");
    phys->add_option("--phase21", phase21, "phase of h21 (rad)");
    phys->add_option("--phase31", phase31, "phase of h31 (rad)");
    phys->add_option("--phase32", phase32, "phase of h32 (rad)");
  }

  SnrTriple resolve() const {
    const bool any_direct = a || b || c;
    const bool any_phys = h21 || h31 || h32;
    if (any_direct && any_phys)
      throw std::invalid_argument("use either --a/--b/--c or --h21/--h31/--h32, not both");
    if (any_direct) {
      if (!(a && b && c)) throw std::invalid_argument("--a, --b and --c are all required");
      return SnrTriple::make(*a, *b, *c, wrap_phase(theta_a), wrap_phase(theta_b), wrap_phase(theta_c));
    }
    if (any_phys) {
      if (!(h21 && h31 && h32)) throw std::invalid_argument("--h21, --h31 and --h32 are all required");
      const ChannelGains gains({*h21, wrap_phase(phase21)}, {*h31, wrap_phase(phase31)},
                               {*h32, wrap_phase(phase32)}, p1, p2);
      return derive_snr(gains);
    }
    throw std::invalid_argument("no channel given: pass --a/--b/--c or --h21/--h31/--h32");
  }
};

/// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::invalid_argument("cannot open --out path: " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void emit_rows(const std::vector<RateReport>& rows, const std::string& format, const std::string& out) {
  Output o(out);
  if (format == "json")
    write_json(o.stream(), rows);
  else
    write_csv(o.stream(), rows);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian relay channel: cut-set bound, DF/CF/AF rates and capacity gaps"};
  app.require_subcommand(1);

  std::string out;
  std::string rates_format = "json", figure_format = "csv", sweep_format = "csv";
  std::string verify_format = "text", wf_format = "json";

  // rates
  ChannelArgs rates_args;
  auto* rates = app.add_subcommand("rates", "rate report for a single channel");
  rates_args.attach(rates);
  rates->add_option("--format", rates_format, "output format")->check(CLI::IsMember({"csv", "json"}));
  rates->add_option("--out", out, "write output to PATH instead of stdout");

  // figure
  int figure_number = 4;
  SweepConfig figure_cfg;
  auto* figure = app.add_subcommand("figure", "gap-versus-SNR data for the CF/AF figures");
  figure->add_option("--figure", figure_number, "figure number (4, 5: CF gap; 6, 7: AF gap)")
      ->required()
      ->check(CLI::IsMember({4, 5, 6, 7}));
  figure->add_option("--points", figure_cfg.points, "grid points");
  figure->add_option("--snr-min", figure_cfg.snr_min, "smallest |h21|^2 P1");
  figure->add_option("--snr-max", figure_cfg.snr_max, "largest |h21|^2 P1");
  figure->add_option("--format", figure_format, "output format")->check(CLI::IsMember({"csv", "json"}));
  figure->add_option("--out", out, "write output to PATH instead of stdout");

  // sweep
  SweepConfig sweep_cfg;
  std::optional<std::size_t> sweep_samples;
  auto* sweep = app.add_subcommand("sweep", "custom ratio grid, or random samples with --samples");
  sweep->add_option("--r31", sweep_cfg.r31, "|h31|^2 / |h21|^2");
  sweep->add_option("--r32", sweep_cfg.r32, "|h32|^2 / |h21|^2 (with P1 = P2)");
  sweep->add_option("--points", sweep_cfg.points, "grid points");
  sweep->add_option("--snr-min", sweep_cfg.snr_min, "lower SNR limit");
  sweep->add_option("--snr-max", sweep_cfg.snr_max, "upper SNR limit");
  sweep->add_option("--samples", sweep_samples, "draw this many log-uniform random triples");
  sweep->add_option("--seed", sweep_cfg.seed, "random seed");
  sweep->add_option("--format", sweep_format, "output format")->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--out", out, "write output to PATH instead of stdout");

  // verify
  SweepConfig verify_cfg = SweepConfig::random(100000, 42);
  auto* verify = app.add_subcommand("verify", "randomised check of the 1-bit and 2-bit gap theorems");
  verify->add_option("--samples", verify_cfg.samples, "number of random triples");
  verify->add_option("--seed", verify_cfg.seed, "random seed");
  verify->add_option("--snr-min", verify_cfg.snr_min, "lower SNR limit");
  verify->add_option("--snr-max", verify_cfg.snr_max, "upper SNR limit");
  verify->add_option("--format", verify_format, "report format")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", out, "write output to PATH instead of stdout");

  // waterfill-demo
  ChannelArgs wf_args;
  std::size_t wf_points = kDefaultGridSize;
  double wf_budget = 1.0;
  bool wf_profile = false;
  auto* wf = app.add_subcommand("waterfill-demo", "uniform vs water-filled AF rate over the ISI spectrum");
  wf_args.attach(wf);
  wf->add_option("--points", wf_points, "frequency grid size");
  wf->add_option("--budget", wf_budget, "mean power budget");
  wf->add_flag("--profile", wf_profile, "emit the per-bin spectrum as CSV");
  wf->add_option("--format", wf_format, "output format")->check(CLI::IsMember({"csv", "json"}));
  wf->add_option("--out", out, "write output to PATH instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (rates->parsed()) {
      const RateReport r = rate_report(rates_args.resolve());
      Output o(out);
      if (rates_format == "csv") {
        write_csv(o.stream(), std::span(&r, 1));
      } else {
        o.stream() << to_json(r).dump(2) << '\n';
      }
      return 0;
    }

    if (figure->parsed()) {
      SweepConfig cfg = SweepConfig::figure(figure_number);
      cfg.points = figure_cfg.points;
      cfg.snr_min = figure_cfg.snr_min;
      cfg.snr_max = figure_cfg.snr_max;
      emit_rows(run_grid(cfg), figure_format, out);
      return 0;
    }

    if (sweep->parsed()) {
      SweepConfig cfg = sweep_cfg;
      if (sweep_samples) {
        cfg.mode = SweepMode::RandomSweep;
        cfg.samples = *sweep_samples;
        if (!sweep->count("--snr-min")) cfg.snr_min = 1e-3;
      }
      emit_rows(run_grid(cfg), sweep_format, out);
      return 0;
    }

    if (verify->parsed()) {
      verify_cfg.validate();
      const VerifySummary s = run_verify(verify_cfg);
      Output o(out);
      if (verify_format == "json")
        o.stream() << to_json(s, verify_cfg).dump(2) << '\n';
      else
        o.stream() << render_verify_text(s, verify_cfg);
      return s.ok() ? 0 : kExitVerifyFailed;
    }

    if (wf->parsed()) {
      const SnrTriple snr = wf_args.resolve();
      const SpectrumProfile uniform = sample_spectrum(build_isi(snr), wf_points);
      const SpectrumProfile filled = waterfill(uniform, wf_budget);
      Output o(out);
      if (wf_profile) {
        o.stream() << "w,gain_sq,uniform,waterfill\n";
        for (std::size_t k = 0; k < uniform.grid_size(); ++k)
          o.stream() << format_number(uniform.w[k]) << ',' << format_number(uniform.gain_sq[k]) << ','
                     << format_number(uniform.allocation[k]) << ',' << format_number(filled.allocation[k])
                     << '\n';
        return 0;
      }
      const double closed = rate_af_closed(snr);
      const double quad = rate_quadrature(uniform);
      const double wf_rate = rate_quadrature(filled);
      if (wf_format == "csv") {
        o.stream() << "a,b,c,points,budget,r_af_closed,r_af_uniform,r_af_waterfill\n"
                   << format_number(snr.a) << ',' << format_number(snr.b) << ',' << format_number(snr.c)
                   << ',' << wf_points << ',' << format_number(wf_budget) << ',' << format_number(closed)
                   << ',' << format_number(quad) << ',' << format_number(wf_rate) << '\n';
      } else {
        const nlohmann::json j = {{"a", snr.a},           {"b", snr.b},
                                  {"c", snr.c},           {"points", wf_points},
                                  {"budget", wf_budget},  {"r_af_closed", closed},
                                  {"r_af_uniform", quad}, {"r_af_waterfill", wf_rate}};
        o.stream() << j.dump(2) << '\n';
      }
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
