#include "localfield/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "localfield/errors.hpp"

#ifndef LOCALFIELD_VERSION
#define LOCALFIELD_VERSION "0.0.0"
#endif

namespace lf {

std::vector<BallTerm> random_terms(const FieldPtr& field, const RandomFunctionSpec& spec) {
  if (spec.num_terms < 1) throw InvalidArgument("num_terms must be >= 1");
  if (spec.max_level < 0) throw InvalidArgument("max_level must be >= 0");
  const int L = spec.max_level;
  const std::uint32_t q = field->q();
  Rng rng(spec.seed);
  std::vector<BallTerm> terms;
  for (int n = 0; n < spec.num_terms; ++n) {
    const int level = rng.between(-L, L);
    std::vector<Digit> digits(static_cast<std::size_t>(std::max(level + L, 0)));
    for (auto& d : digits) d = static_cast<Digit>(rng.below(q));
    BallTerm term{FieldElement::from_digits(field, -L, std::move(digits)), level, Complex{1.0, 0.0}};
    if (!spec.unit_coefficients) {
      const double mag = rng.uniform(0.5, 2.0);
      term.coef = std::polar(mag, rng.uniform(0.0, 2.0 * std::numbers::pi));
    }
    terms.push_back(std::move(term));
  }
  return terms;
}

StepFunction from_terms(const FieldPtr& field, std::span<const BallTerm> terms) {
  if (terms.empty()) return StepFunction(field, Side::spatial, 0, 0);
  int resolution = terms.front().level;
  int support = -terms.front().level;
  for (const auto& term : terms) {
    const FieldElement rep = term.center.truncated_below(term.level);
    resolution = std::max(resolution, term.level);
    support = std::max(support, rep.is_zero() ? -term.level : std::max(-term.level, -rep.lo()));
  }
  StepFunction f(field, Side::spatial, resolution, support);
  for (const auto& term : terms) f.add_ball(term.center, term.level, term.coef);
  return f;
}

StepFunction random_test_function(const FieldPtr& field, const RandomFunctionSpec& spec) {
  const auto terms = random_terms(field, spec);
  return from_terms(field, terms);
}

StepFunction random_radial_symbol(const FieldPtr& field, std::uint64_t seed) {
  Rng rng(seed);
  const int e_min = rng.between(-3, 0);
  const int e_max = rng.between(0, 3);
  std::vector<double> vals(static_cast<std::size_t>(e_max - e_min + 1));
  for (auto& v : vals) v = rng.uniform(0.5, 2.0);
  const RadialSymbol symbol{[vals, e_min, e_max](int e) {
                              return e > e_max ? Complex{} : Complex{vals[static_cast<std::size_t>(e - e_min)]};
                            },
                            e_min};
  return sample_radial(field, symbol, -e_min, e_max);
}

StepFunction ball_indicator(const FieldPtr& field, int k) {
  return StepFunction::ball(field, Side::spatial, FieldElement(field), k);
}

ExponentFit fit_exponent(std::span<const std::pair<double, double>> points, double q) {
  if (points.size() < 3) throw InvalidArgument("fit_exponent needs at least three points");
  const double log_q = std::log(q);
  std::vector<double> ys;
  ys.reserve(points.size());
  double mx = 0.0;
  double my = 0.0;
  for (const auto& [x, y] : points) {
    if (!(y > 0.0) || !std::isfinite(y)) throw InvalidArgument("fit_exponent needs positive finite ratios");
    ys.push_back(std::log(y) / log_q);
    mx += x;
    my += ys.back();
  }
  const double n = static_cast<double>(points.size());
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double dx = points[i].first - mx;
    sxx += dx * dx;
    sxy += dx * (ys[i] - my);
  }
  if (sxx == 0.0) throw InvalidArgument("fit_exponent needs distinct abscissae");
  ExponentFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  for (std::size_t i = 0; i < points.size(); ++i) {
    fit.residual = std::max(fit.residual, std::abs(ys[i] - (fit.slope * points[i].first + fit.intercept)));
  }
  return fit;
}

const char* to_string(ScanMode mode) noexcept {
  switch (mode) {
    case ScanMode::dilation: return "dilation";
    case ScanMode::localization: return "localization";
    case ScanMode::invariants: return "invariants";
  }
  return "?";
}

StepFunction builtin_function(const FieldPtr& field, const std::string& name) {
  if (name == "phi_D") return ball_indicator(field, 0);
  if (name.starts_with("phi_P")) {
    const std::string rest = name.substr(5);
    std::size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(rest, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == rest.size() && used > 0) return ball_indicator(field, k);
  }
  throw InvalidArgument("unknown builtin function '" + name + "' (expected phi_D or phi_P<k>)");
}

StepFunction resolve_source(const FieldPtr& field, const FunctionSource& source) {
  switch (source.kind) {
    case FunctionSource::Kind::builtin: return builtin_function(field, source.builtin);
    case FunctionSource::Kind::random: return random_test_function(field, source.random);
    case FunctionSource::Kind::given:
      if (!source.given) throw InvalidArgument("function source has no function");
      if (!source.given->field()->same_field(*field)) throw DomainMismatch("function file uses a different field");
      return *source.given;
  }
  throw InvalidArgument("bad function source");
}

std::string format_double(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

FitSummary summarize_dilation(std::span<const DilationRecord> records, double q, std::string series) {
  FitSummary out;
  out.series = std::move(series);
  std::vector<std::pair<double, double>> ratio_pts;
  std::vector<std::pair<double, double>> norm_pts;
  for (const auto& rec : records) {
    out.fitted_constant = std::max(out.fitted_constant, rec.ratio_over_bound);
    if (rec.k < 1) continue;
    ratio_pts.emplace_back(rec.k, rec.ratio);
    norm_pts.emplace_back(rec.k, rec.ratio_over_bound);
  }
  if (ratio_pts.size() >= 3) {
    out.ratio_fit = fit_exponent(ratio_pts, q);
    out.normalized_fit = fit_exponent(norm_pts, q);
    out.bounded = out.normalized_fit.slope <= kTrendTolerance;
  }
  return out;
}

namespace {

double relative(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

std::string bp_label(const BesovParams& bp) {
  return "s=" + format_double(bp.s) + " r=" + format_double(bp.r) + " t=" + format_double(bp.t);
}

std::vector<Complex> localization_coefficients(std::size_t count, bool random, std::uint64_t seed) {
  std::vector<Complex> out(count, Complex{1.0});
  if (!random) return out;
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (auto& c : out) {
    const double mag = rng.uniform(0.5, 2.0);
    c = std::polar(mag, rng.uniform(0.0, 2.0 * std::numbers::pi));
  }
  return out;
}

void run_dilation(const FieldPtr& field, ScanReport& report) {
  const ScanConfig& cfg = report.config;
  if (cfg.kmax < 1) throw InvalidArgument("kmax must be >= 1");
  const StepFunction f = resolve_source(field, cfg.source);
  if (f.is_zero()) throw InvalidArgument("the scanned function is zero");
  const double q = field->q();
  const LPDecomposition lp_in = lp_decompose(f);
  std::vector<LPDecomposition> lp_out;
  for (int k = 1; k <= cfg.kmax; ++k) lp_out.push_back(lp_decompose(dilate(f, k)));

  for (const auto& bp : cfg.besov) {
    bp.validate();
    if (!(bp.s > sigma_r(bp.r))) report.warnings.push_back(bp_label(bp) + ": s <= sigma_r, outside the dilation hypothesis");
    const double norm_in = besov_from_block_norms(block_norms(lp_in, bp.r), q, bp.s, bp.t);
    std::vector<DilationRecord> series;
    for (int k = 1; k <= cfg.kmax; ++k) {
      const double norm_out =
          besov_from_block_norms(block_norms(lp_out[static_cast<std::size_t>(k - 1)], bp.r), q, bp.s, bp.t);
      series.push_back(make_dilation_record(k, bp, q, norm_in, norm_out));
      report.dilation.emplace_back(bp, series.back());
    }
    FitSummary fit = summarize_dilation(series, q, bp_label(bp));
    if (series.size() < 3) report.warnings.push_back(bp_label(bp) + ": fewer than 3 points, no trend fit");
    report.passed = report.passed && fit.bounded && std::isfinite(fit.fitted_constant);
    report.fits.push_back(std::move(fit));
  }
}

void run_localization(const FieldPtr& field, ScanReport& report) {
  const ScanConfig& cfg = report.config;
  if (cfg.jmax < 1) throw InvalidArgument("jmax must be >= 1");
  if (cfg.max_centers < 1) throw InvalidArgument("at least one center is required");
  const int i = cfg.i_level;
  StepFunction f = resolve_source(field, cfg.source);
  // A random function lives in P^{-L}; dilating by i + L moves it into P^i.
  if (cfg.source.kind == FunctionSource::Kind::random) f = dilate(f, i + cfg.source.random.max_level);
  if (f.is_zero()) throw InvalidArgument("the scanned function is zero");
  if (!supported_in_ball(f, i)) throw InvalidArgument("the scanned function is not supported in P^" + std::to_string(i));
  const double q = field->q();

  std::vector<std::size_t> counts;
  for (std::size_t n = 1; n <= cfg.max_centers; n *= field->q()) counts.push_back(n);
  const LPDecomposition lp_f = lp_decompose(f);

  struct Point {
    std::size_t n;
    int j;
    std::vector<Complex> coeffs;
    LPDecomposition lp;
  };
  std::vector<Point> points;
  for (std::size_t n : counts) {
    const auto centers = localization_centers(field, i, n);
    const auto coeffs = localization_coefficients(n, cfg.random_coefficients, cfg.seed);
    for (int j = 1; j <= cfg.jmax; ++j) points.push_back({n, j, coeffs, lp_decompose(localize(f, i, j, centers, coeffs))});
  }

  for (const auto& bp : cfg.besov) {
    bp.validate();
    if (!(bp.s > sigma_r(bp.r)) || !(bp.t <= bp.r)) {
      report.warnings.push_back(bp_label(bp) + ": outside the hypothesis s > sigma_r, t <= r");
    }
    const double norm_f = besov_from_block_norms(block_norms(lp_f, bp.r), q, bp.s, bp.t);
    std::vector<LocalizationRecord> recs;
    for (const auto& pt : points) {
      const double lhs = besov_from_block_norms(block_norms(pt.lp, bp.r), q, bp.s, bp.t);
      recs.push_back(make_localization_record(i, pt.j, bp, q, pt.coeffs, lhs, norm_f));
      report.localization.emplace_back(bp, recs.back());
    }
    auto add_fit = [&](std::string series, const std::vector<std::pair<double, double>>& pts) {
      FitSummary fit;
      fit.series = bp_label(bp) + " " + std::move(series);
      for (const auto& p : pts) fit.fitted_constant = std::max(fit.fitted_constant, p.second);
      if (pts.size() >= 3) {
        fit.ratio_fit = fit_exponent(pts, q);
        fit.normalized_fit = fit.ratio_fit;
        fit.bounded = fit.normalized_fit.slope <= kTrendTolerance;
      }
      report.passed = report.passed && fit.bounded && std::isfinite(fit.fitted_constant);
      report.fits.push_back(std::move(fit));
    };
    for (std::size_t n : counts) {
      std::vector<std::pair<double, double>> pts;
      for (const auto& rec : recs) {
        if (rec.centers == n) pts.emplace_back(rec.j, rec.ratio);
      }
      add_fit("N=" + std::to_string(n) + " vs j", pts);
    }
    if (counts.size() >= 3) {
      for (int j = 1; j <= cfg.jmax; ++j) {
        std::vector<std::pair<double, double>> pts;
        for (const auto& rec : recs) {
          if (rec.j == j) pts.emplace_back(std::log(static_cast<double>(rec.centers)) / std::log(q), rec.ratio);
        }
        add_fit("j=" + std::to_string(j) + " vs log_q N", pts);
      }
    }
  }
}

}  // namespace

std::vector<InvariantResult> run_invariant_suite(const FieldPtr& field, std::uint64_t seed, int count) {
  if (count < 1) throw InvalidArgument("invariant suite needs at least one function");
  const double q = field->q();
  InvariantResult roundtrip{"fourier_roundtrip", 0, 0, 0.0, 1e-9};
  InvariantResult plancherel{"plancherel", 0, 0, 0.0, 1e-9};
  InvariantResult fast_naive{"fast_vs_naive", 0, 0, 0.0, 1e-10};
  InvariantResult reconstruction{"lp_reconstruction", 0, 0, 0.0, 1e-9};
  InvariantResult orthogonality{"block_orthogonality", 0, 0, 0.0, 1e-9};
  InvariantResult partition{"partition_of_unity", 0, 0, 0.0, 0.0};
  InvariantResult translation{"besov_translation_invariance", 0, 0, 0.0, 1e-9};
  InvariantResult scaling{"dilation_lr_scaling", 0, 0, 0.0, 1e-12};
  auto record = [](InvariantResult& r, double err) {
    ++r.total;
    r.max_error = std::max(r.max_error, err);
    if (err <= r.tolerance) ++r.passed;
  };

  Rng shifts(seed + 0x5bd1e995ULL);
  const BesovParams bp{1.0, 2.0, 2.0};
  for (int n = 0; n < count; ++n) {
    const StepFunction f = random_test_function(field, {seed + static_cast<std::uint64_t>(n), 4, 2, false});
    const StepFunction F = fourier(f);
    record(roundtrip, max_abs_difference(inverse_fourier(F), f));
    record(plancherel, relative(lr_norm(f, 2.0), lr_norm(F, 2.0)));
    record(fast_naive, max_abs_difference(fourier(f, FourierMethod::naive), F));

    const LPDecomposition lp = lp_decompose(f);
    record(reconstruction, max_abs_difference(reconstruct(lp), f));
    double cross = 0.0;
    for (std::size_t j = 0; j < lp.blocks.size(); ++j) {
      const LPDecomposition inner = lp_decompose(lp.blocks[j]);
      for (std::size_t k = 0; k < inner.blocks.size(); ++k) {
        if (k == j) continue;
        cross = std::max(cross, lr_norm(inner.blocks[k], kInfinity));
      }
    }
    record(orthogonality, cross);

    StepFunction sum = phi_j(field, 0);
    for (int j = 1; j <= lp.n; ++j) sum = add(sum, phi_j(field, j));
    const StepFunction ball = StepFunction::ball(field, Side::frequency, FieldElement(field), -lp.n);
    record(partition, max_abs_difference(sum, ball));

    const int lo = -3;
    std::vector<Digit> digits(4);
    for (auto& d : digits) d = static_cast<Digit>(shifts.below(field->q()));
    const FieldElement z = FieldElement::from_digits(field, lo, std::move(digits));
    record(translation, relative(besov_norm(step_translate(f, z), bp), besov_norm(f, bp)));

    for (int k = 1; k <= 3; ++k) {
      record(scaling, relative(lr_norm(dilate(f, k), 2.0), std::pow(q, -k / 2.0) * lr_norm(f, 2.0)));
    }
  }
  return {roundtrip, plancherel, fast_naive, reconstruction, orthogonality, partition, translation, scaling};
}

ScanReport run_scan(const ScanConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  ScanReport report;
  report.config = config;
  if (config.besov.empty()) throw InvalidArgument("at least one (s, r, t) triple is required");
  const FieldPtr field = field_init(config.p, config.c);
  switch (config.mode) {
    case ScanMode::dilation: run_dilation(field, report); break;
    case ScanMode::localization: run_localization(field, report); break;
    case ScanMode::invariants:
      report.invariants = run_invariant_suite(field, config.seed, config.invariant_count);
      for (const auto& inv : report.invariants) report.passed = report.passed && inv.passed == inv.total;
      break;
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string ScanReport::csv() const {
  std::ostringstream out;
  auto bp_cols = [&](const BesovParams& bp) {
    out << format_double(bp.s) << ',' << format_double(bp.r) << ',' << format_double(bp.t) << ',';
  };
  switch (config.mode) {
    case ScanMode::dilation:
      out << "s,r,t,k,norm_in,norm_out,ratio,bound_shape,ratio_over_bound\n";
      for (const auto& [bp, rec] : dilation) {
        bp_cols(bp);
        out << rec.k << ',' << format_double(rec.norm_in) << ',' << format_double(rec.norm_out) << ','
            << format_double(rec.ratio) << ',' << format_double(rec.bound_shape) << ','
            << format_double(rec.ratio_over_bound) << '\n';
      }
      break;
    case ScanMode::localization:
      out << "s,r,t,i,j,centers,coef_norm,lhs,rhs_shape,ratio\n";
      for (const auto& [bp, rec] : localization) {
        bp_cols(bp);
        out << rec.i << ',' << rec.j << ',' << rec.centers << ',' << format_double(rec.coef_norm) << ','
            << format_double(rec.lhs) << ',' << format_double(rec.rhs_shape) << ',' << format_double(rec.ratio)
            << '\n';
      }
      break;
    case ScanMode::invariants:
      out << "check,passed,total,max_error,tolerance\n";
      for (const auto& inv : invariants) {
        out << inv.name << ',' << inv.passed << ',' << inv.total << ',' << format_double(inv.max_error) << ','
            << format_double(inv.tolerance) << '\n';
      }
      break;
  }
  return out.str();
}

namespace {

nlohmann::ordered_json number(double x) {
  if (std::isfinite(x)) return x;
  return format_double(x);
}

nlohmann::ordered_json bp_json(const BesovParams& bp) {
  return {{"s", number(bp.s)}, {"r", number(bp.r)}, {"t", number(bp.t)}};
}

nlohmann::ordered_json fit_json(const ExponentFit& fit) {
  return {{"slope", fit.slope}, {"intercept", fit.intercept}, {"residual", fit.residual}};
}

}  // namespace

std::string ScanReport::json() const {
  using nlohmann::ordered_json;
  ordered_json cfg;
  cfg["mode"] = to_string(config.mode);
  cfg["field"] = {{"p", config.p}, {"c", config.c}};
  cfg["besov"] = ordered_json::array();
  for (const auto& bp : config.besov) cfg["besov"].push_back(bp_json(bp));
  cfg["kmax"] = config.kmax;
  cfg["jmax"] = config.jmax;
  cfg["i_level"] = config.i_level;
  cfg["max_centers"] = config.max_centers;
  cfg["random_coefficients"] = config.random_coefficients;
  cfg["seed"] = config.seed;
  cfg["function"] = config.source.label;

  ordered_json records = ordered_json::array();
  for (const auto& [bp, rec] : dilation) {
    records.push_back({{"besov", bp_json(bp)},
                       {"k", rec.k},
                       {"norm_in", rec.norm_in},
                       {"norm_out", rec.norm_out},
                       {"ratio", rec.ratio},
                       {"bound_shape", rec.bound_shape},
                       {"ratio_over_bound", rec.ratio_over_bound},
                       {"hypothesis_ok", rec.hypothesis_ok}});
  }
  for (const auto& [bp, rec] : localization) {
    records.push_back({{"besov", bp_json(bp)},
                       {"i", rec.i},
                       {"j", rec.j},
                       {"centers", rec.centers},
                       {"coef_norm", rec.coef_norm},
                       {"lhs", rec.lhs},
                       {"rhs_shape", rec.rhs_shape},
                       {"ratio", rec.ratio},
                       {"hypothesis_ok", rec.hypothesis_ok}});
  }
  for (const auto& inv : invariants) {
    records.push_back({{"check", inv.name},
                       {"passed", inv.passed},
                       {"total", inv.total},
                       {"max_error", inv.max_error},
                       {"tolerance", inv.tolerance}});
  }
  ordered_json fit_list = ordered_json::array();
  for (const auto& fit : fits) {
    fit_list.push_back({{"series", fit.series},
                        {"fitted_exponent", fit_json(fit.ratio_fit)},
                        {"normalized_trend", fit_json(fit.normalized_fit)},
                        {"fitted_constant", fit.fitted_constant},
                        {"bounded", fit.bounded}});
  }
  ordered_json doc;
  doc["config"] = std::move(cfg);
  doc["records"] = std::move(records);
  doc["fits"] = std::move(fit_list);
  doc["warnings"] = warnings;
  doc["passed"] = passed;
  doc["metadata"] = {{"version", LOCALFIELD_VERSION}, {"wall_seconds", wall_seconds}};
  return doc.dump(2) + "\n";
}

std::string ScanReport::svg() const {
  struct Series {
    std::string label;
    std::vector<std::pair<double, double>> pts;
    bool dashed;
  };
  std::vector<Series> series;
  std::string x_label = "k";
  const double q = std::pow(static_cast<double>(config.p), static_cast<double>(config.c));
  auto lq = [q](double v) { return std::log(v) / std::log(q); };
  if (config.mode == ScanMode::dilation) {
    for (const auto& bp : config.besov) {
      Series ratio{bp_label(bp) + " ratio", {}, false};
      Series bound{bp_label(bp) + " bound shape", {}, true};
      for (const auto& [b, rec] : dilation) {
        if (b.s != bp.s || b.r != bp.r || b.t != bp.t) continue;
        if (rec.ratio > 0) ratio.pts.emplace_back(rec.k, lq(rec.ratio));
        bound.pts.emplace_back(rec.k, lq(rec.bound_shape));
      }
      series.push_back(std::move(ratio));
      series.push_back(std::move(bound));
    }
  } else if (config.mode == ScanMode::localization) {
    x_label = "j";
    for (const auto& bp : config.besov) {
      for (std::size_t n = 1; n <= config.max_centers; n *= static_cast<std::size_t>(q)) {
        Series s{bp_label(bp) + " N=" + std::to_string(n) + " lhs/rhs", {}, false};
        for (const auto& [b, rec] : localization) {
          if (b.s != bp.s || b.r != bp.r || b.t != bp.t || rec.centers != n) continue;
          if (rec.ratio > 0) s.pts.emplace_back(rec.j, lq(rec.ratio));
        }
        series.push_back(std::move(s));
      }
    }
  } else {
    x_label = "check";
    Series s{"fraction passed", {}, false};
    for (std::size_t n = 0; n < invariants.size(); ++n) {
      const auto& inv = invariants[n];
      s.pts.emplace_back(static_cast<double>(n), inv.total == 0 ? 0.0 : double(inv.passed) / double(inv.total));
    }
    series.push_back(std::move(s));
  }

  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  bool first = true;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.pts) {
      if (first) {
        x0 = x1 = x;
        y0 = y1 = y;
        first = false;
      }
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
  }
  if (x1 == x0) x1 = x0 + 1;
  if (y1 == y0) y1 = y0 + 1;
  const double W = 720, H = 440, left = 70, right = 20, top = 20, bottom = 60;
  auto sx = [&](double x) { return left + (x - x0) / (x1 - x0) * (W - left - right); };
  auto sy = [&](double y) { return H - bottom - (y - y0) / (y1 - y0) * (H - top - bottom); };
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf"};

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H + 16.0 * series.size()
      << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<line x1=\"" << left << "\" y1=\"" << H - bottom << "\" x2=\"" << W - right << "\" y2=\"" << H - bottom
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << H - bottom
      << "\" stroke=\"black\"/>\n";
  for (int tick = 0; tick <= 4; ++tick) {
    const double xv = x0 + (x1 - x0) * tick / 4.0;
    const double yv = y0 + (y1 - y0) * tick / 4.0;
    out << "<text x=\"" << sx(xv) << "\" y=\"" << H - bottom + 16 << "\" text-anchor=\"middle\">"
        << format_double(std::round(xv * 100) / 100) << "</text>\n";
    out << "<text x=\"" << left - 6 << "\" y=\"" << sy(yv) + 4 << "\" text-anchor=\"end\">"
        << format_double(std::round(yv * 100) / 100) << "</text>\n";
  }
  out << "<text x=\"" << (left + W - right) / 2 << "\" y=\"" << H - bottom + 34 << "\" text-anchor=\"middle\">"
      << x_label << "</text>\n";
  out << "<text x=\"14\" y=\"" << (top + H - bottom) / 2 << "\" transform=\"rotate(-90 14 " << (top + H - bottom) / 2
      << ")\" text-anchor=\"middle\">" << (config.mode == ScanMode::invariants ? "passed" : "log_q") << "</text>\n";
  for (std::size_t n = 0; n < series.size(); ++n) {
    const auto& s = series[n];
    const char* color = colors[(config.mode == ScanMode::dilation ? n / 2 : n) % std::size(colors)];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\"" << (s.dashed ? " stroke-dasharray=\"5,4\"" : "")
        << " points=\"";
    for (const auto& [x, y] : s.pts) out << sx(x) << ',' << sy(y) << ' ';
    out << "\"/>\n";
    out << "<text x=\"" << left << "\" y=\"" << H + 16.0 * n << "\" fill=\"" << color << "\">" << s.label
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace lf
