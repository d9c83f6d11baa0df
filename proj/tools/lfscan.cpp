// Command-line driver for the localfield library.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "localfield/errors.hpp"
#include "localfield/experiments.hpp"
#include "localfield/function_io.hpp"

namespace {

enum Exit { kPass = 0, kCheckFailed = 1, kUsage = 2, kOverflow = 3 };

struct Options {
  std::uint32_t p = 2;
  std::uint32_t c = 1;
  bool field_given = false;
  std::vector<std::string> s{"1"};
  std::vector<std::string> r{"2"};
  std::vector<std::string> t{"2"};
  int kmax = 8;
  int jmax = 6;
  int i_level = 0;
  std::size_t centers = 8;
  bool random_coeffs = false;
  std::optional<std::uint64_t> seed;
  int num_terms = 4;
  int max_level = 2;
  int count = 20;
  std::string function_file;
  std::string builtin;
  std::string out;
  std::string plot;
  std::string report;
  bool inverse = false;
  std::string method = "fast";
};

double parse_exponent(const std::string& text, const char* name, bool positive) {
  if (text == "inf" || text == "Inf" || text == "infinity") {
    if (!positive) throw lf::InvalidArgument(std::string("--") + name + " cannot be infinite");
    return lf::kInfinity;
  }
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || !std::isfinite(v)) {
    throw lf::InvalidArgument(std::string("--") + name + ": cannot parse '" + text + "'");
  }
  if (positive && !(v > 0.0)) throw lf::InvalidArgument(std::string("--") + name + " must be positive");
  return v;
}

std::vector<lf::BesovParams> besov_grid(const Options& o) {
  std::vector<lf::BesovParams> out;
  for (const auto& s : o.s) {
    for (const auto& r : o.r) {
      for (const auto& t : o.t) {
        out.push_back({parse_exponent(s, "s", false), parse_exponent(r, "r", true), parse_exponent(t, "t", true)});
      }
    }
  }
  return out;
}

// File, builtin or seeded random function; nullopt when nothing was asked for.
std::optional<lf::FunctionSource> source_from(Options& o) {
  lf::FunctionSource src;
  if (!o.function_file.empty()) {
    if (!o.builtin.empty()) throw lf::InvalidArgument("--function and --builtin are exclusive");
    src.kind = lf::FunctionSource::Kind::given;
    src.given = lf::read_function_file(o.function_file);
    src.label = "file:" + o.function_file;
    const auto& field = *src.given->field();
    if (o.field_given && (field.p() != o.p || field.c() != o.c)) {
      throw lf::InvalidArgument("--p/--c disagree with the field of " + o.function_file);
    }
    o.p = field.p();
    o.c = field.c();
    return src;
  }
  if (o.builtin == "random" || (o.builtin.empty() && o.seed)) {
    if (!o.seed) throw lf::InvalidArgument("a random function needs --seed");
    src.kind = lf::FunctionSource::Kind::random;
    src.random = {*o.seed, o.num_terms, o.max_level, false};
    src.label = "random:seed=" + std::to_string(*o.seed) + ",terms=" + std::to_string(o.num_terms) +
                ",max_level=" + std::to_string(o.max_level);
    return src;
  }
  if (o.builtin.empty()) return std::nullopt;
  src.kind = lf::FunctionSource::Kind::builtin;
  src.builtin = o.builtin;
  src.label = o.builtin;
  return src;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
  } else {
    lf::write_text_file(o.out, text);
  }
}

int run_fourier(Options& o) {
  auto src = source_from(o);
  if (!src) throw lf::InvalidArgument("fourier needs --function, --builtin or --seed");
  const lf::FieldPtr field = lf::field_init(o.p, o.c);
  lf::StepFunction f = lf::resolve_source(field, *src);
  if (o.method != "fast" && o.method != "naive") throw lf::InvalidArgument("--method must be fast or naive");
  const auto method = o.method == "fast" ? lf::FourierMethod::fast : lf::FourierMethod::naive;
  if (o.inverse) {
    if (f.side() == lf::Side::spatial) f = f.with_side(lf::Side::frequency);
    emit(o, lf::emit_function(lf::inverse_fourier(f, method)));
  } else {
    emit(o, lf::emit_function(lf::fourier(f, method)));
  }
  return kPass;
}

int run_besov(Options& o) {
  auto src = source_from(o);
  if (!src) throw lf::InvalidArgument("besov-norm needs --function, --builtin or --seed");
  const lf::FieldPtr field = lf::field_init(o.p, o.c);
  const lf::StepFunction f = lf::resolve_source(field, *src);
  const auto lp = lf::lp_decompose(f);
  const double q = field->q();
  std::string csv = "s,r,t,j,block_norm,weighted\n";
  for (const auto& bp : besov_grid(o)) {
    bp.validate();
    const auto norms = lf::block_norms(lp, bp.r);
    const double norm = lf::besov_from_block_norms(norms, q, bp.s, bp.t);
    std::cout << "besov_norm s=" << lf::format_double(bp.s) << " r=" << lf::format_double(bp.r)
              << " t=" << lf::format_double(bp.t) << " : " << lf::format_double(norm) << "\n";
    for (std::size_t j = 0; j < norms.size(); ++j) {
      csv += lf::format_double(bp.s) + "," + lf::format_double(bp.r) + "," + lf::format_double(bp.t) + "," +
             std::to_string(j) + "," + lf::format_double(norms[j]) + "," +
             lf::format_double(std::pow(q, bp.s * static_cast<double>(j)) * norms[j]) + "\n";
    }
  }
  emit(o, csv);
  return kPass;
}

int run_scan_command(Options& o, lf::ScanMode mode) {
  lf::ScanConfig cfg;
  cfg.mode = mode;
  if (auto src = source_from(o)) {
    cfg.source = std::move(*src);
  } else {
    cfg.source.kind = lf::FunctionSource::Kind::builtin;
    cfg.source.builtin = mode == lf::ScanMode::localization ? "phi_P" + std::to_string(o.i_level) : "phi_D";
    cfg.source.label = cfg.source.builtin;
  }
  cfg.p = o.p;
  cfg.c = o.c;
  cfg.besov = besov_grid(o);
  cfg.kmax = o.kmax;
  cfg.jmax = o.jmax;
  cfg.i_level = o.i_level;
  cfg.max_centers = o.centers;
  cfg.random_coefficients = o.random_coeffs;
  cfg.seed = o.seed.value_or(1);
  cfg.invariant_count = o.count;

  const lf::ScanReport report = lf::run_scan(cfg);
  emit(o, report.csv());
  if (!o.report.empty()) lf::write_text_file(o.report, report.json());
  if (!o.plot.empty()) lf::write_text_file(o.plot, report.svg());
  for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
  for (const auto& fit : report.fits) {
    if (!fit.bounded) std::cerr << "check failed: " << fit.series << " grows (trend slope "
                                << lf::format_double(fit.normalized_fit.slope) << ")\n";
  }
  for (const auto& inv : report.invariants) {
    if (inv.passed != inv.total) std::cerr << "check failed: " << inv.name << " " << inv.passed << "/" << inv.total << "\n";
  }
  return report.passed ? kPass : kCheckFailed;
}

void add_field(CLI::App* cmd, Options& o) {
  cmd->add_option("--p", o.p, "characteristic (prime)")->each([&o](const std::string&) { o.field_given = true; });
  cmd->add_option("--c", o.c, "extension degree, q = p^c")->each([&o](const std::string&) { o.field_given = true; });
}

void add_source(CLI::App* cmd, Options& o) {
  cmd->add_option("--function", o.function_file, "function file (JSON)");
  cmd->add_option("--builtin", o.builtin, "phi_D, phi_P<k> or random");
  cmd->add_option("--seed", o.seed, "seed for random functions");
  cmd->add_option("--num-terms", o.num_terms, "terms of a random function")->check(CLI::PositiveNumber);
  cmd->add_option("--max-level", o.max_level, "level range [-L, L] of a random function")->check(CLI::NonNegativeNumber);
}

void add_besov(CLI::App* cmd, Options& o) {
  cmd->add_option("--s", o.s, "smoothness (comma list)")->delimiter(',');
  cmd->add_option("--r", o.r, "integrability, inf allowed (comma list)")->delimiter(',');
  cmd->add_option("--t", o.t, "summation, inf allowed (comma list)")->delimiter(',');
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Harmonic analysis experiments over F_q((t))"};
  app.set_config("--config", "", "TOML file with option values; command-line flags take precedence");
  app.require_subcommand(1);
  Options o;

  auto* fourier = app.add_subcommand("fourier", "transform a function file");
  add_field(fourier, o);
  add_source(fourier, o);
  fourier->add_flag("--inverse", o.inverse, "inverse transform (input is read as a frequency function)");
  fourier->add_option("--method", o.method, "fast or naive");
  fourier->add_option("--out", o.out, "output function file (default stdout)");

  auto* besov = app.add_subcommand("besov-norm", "Besov norm and per-block table");
  add_field(besov, o);
  add_source(besov, o);
  add_besov(besov, o);
  besov->add_option("--out", o.out, "CSV output (default stdout)");

  auto* dilate = app.add_subcommand("dilate-scan", "dilation ratios for k = 1..kmax");
  add_field(dilate, o);
  add_source(dilate, o);
  add_besov(dilate, o);
  dilate->add_option("--kmax", o.kmax, "largest dilation index")->check(CLI::PositiveNumber);

  auto* localize = app.add_subcommand("localize-scan", "localization ratios for j = 1..jmax");
  add_field(localize, o);
  add_source(localize, o);
  add_besov(localize, o);
  localize->add_option("--jmax", o.jmax, "largest dilation index")->check(CLI::PositiveNumber);
  localize->add_option("--i-level", o.i_level, "the function must live in P^i");
  localize->add_option("--centers", o.centers, "largest number of centers (1, q, q^2, ... up to it)")
      ->check(CLI::PositiveNumber);
  localize->add_flag("--random-coeffs", o.random_coeffs, "random coefficients from --seed instead of ones");

  auto* invariants = app.add_subcommand("check-invariants", "property suite on seeded random functions");
  add_field(invariants, o);
  invariants->add_option("--seed", o.seed, "first seed");
  invariants->add_option("--count", o.count, "number of random functions")->check(CLI::PositiveNumber);

  for (auto* cmd : {dilate, localize, invariants}) {
    cmd->add_option("--out", o.out, "CSV output (default stdout)");
    cmd->add_option("--plot", o.plot, "SVG plot");
    cmd->add_option("--report", o.report, "JSON report with fits and metadata");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*fourier) return run_fourier(o);
    if (*besov) return run_besov(o);
    if (*dilate) return run_scan_command(o, lf::ScanMode::dilation);
    if (*localize) return run_scan_command(o, lf::ScanMode::localization);
    return run_scan_command(o, lf::ScanMode::invariants);
  } catch (const lf::PrecisionOverflow& e) {
    std::cerr << "precision overflow: " << e.what() << "\n";
    return kOverflow;
  } catch (const lf::LimitExceeded& e) {
    std::cerr << "size limit: " << e.what() << "\n";
    return kOverflow;
  } catch (const lf::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const lf::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const lf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
}
