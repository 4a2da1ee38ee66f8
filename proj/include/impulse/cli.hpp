#pragma once

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "impulse/bench.hpp"
#include "impulse/error.hpp"
#include "impulse/filters.hpp"
#include "impulse/metrics.hpp"
#include "impulse/noise.hpp"
#include "impulse/pgm.hpp"

namespace impulse::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kIo = 2,
  kFormat = 3,
  kDegenerate = 4,
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline double parse_real(std::string_view text, std::string_view what) {
  const std::string s(text);
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError(std::string(what) + ": not a number: '" + s + "'");
  }
  if (used != s.size() || !std::isfinite(v)) {
    throw UsageError(std::string(what) + ": not a number: '" + s + "'");
  }
  return v;
}

}  // namespace detail

/// Density as a fraction in [0, 1]. Values above 1 are read as percentages.
inline double parse_density(std::string_view text) {
  double v = detail::parse_real(text, "density");
  if (v > 1.0) v /= 100.0;
  if (v < 0.0 || v > 1.0) {
    throw UsageError("density out of range: '" + std::string(text) + "'");
  }
  return v;
}

/// Percent list from "a:b:step" or "a,b,c". Each value follows the same
/// percent-or-fraction rule as parse_density and is rounded to a whole percent.
inline std::vector<int> parse_density_list(std::string_view text) {
  auto to_pct = [](std::string_view item) {
    const double pct = std::round(parse_density(item) * 100.0);
    if (pct < 1.0) throw UsageError("bench densities must be at least 1%");
    return static_cast<int>(pct);
  };
  std::vector<int> out;
  if (text.find(':') != std::string_view::npos) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
      if (i == text.size() || text[i] == ':') {
        parts.push_back(text.substr(start, i - start));
        start = i + 1;
      }
    }
    if (parts.size() != 3) throw UsageError("density range must be a:b:step");
    const int a = to_pct(parts[0]);
    const int b = to_pct(parts[1]);
    const double step_raw = detail::parse_real(parts[2], "density step");
    const int step = static_cast<int>(std::round(step_raw > 1.0 ? step_raw : step_raw * 100.0));
    if (step < 1) throw UsageError("density step must be positive");
    if (b < a) throw UsageError("density range end is below its start");
    for (int d = a; d <= b; d += step) out.push_back(d);
  } else {
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
      if (i == text.size() || text[i] == ',') {
        out.push_back(to_pct(text.substr(start, i - start)));
        start = i + 1;
      }
    }
  }
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i] <= out[i - 1]) throw UsageError("bench densities must be strictly increasing");
  }
  return out;
}

inline FilterKind parse_filter(std::string_view name) {
  if (auto k = parse_filter_kind(name)) return *k;
  throw UsageError("unknown filter '" + std::string(name) + "' (expected smf, amf, mdbutmf, rmf)");
}

inline std::vector<FilterKind> parse_filter_list(std::string_view text) {
  std::vector<FilterKind> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      out.push_back(parse_filter(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

/// "key=value" pairs separated by single spaces.
inline std::string format_metrics(const MetricsReport& report) {
  std::string s = "mse=" + format_real(report.mse) + " psnr_db=" + format_real(report.psnr_db);
  if (report.ief) s += " ief=" + format_real(*report.ief);
  return s;
}

/// Runs one command line. `args` excludes the program name.
inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Salt-and-pepper noise injection, denoising and benchmarking for PGM images",
               "impulse"};
  app.require_subcommand(1);

  std::string density_text;
  double salt_fraction = 0.5;
  std::uint64_t seed = 0;
  std::string in_path;
  std::string out_path;
  auto* inject_cmd = app.add_subcommand("inject", "Corrupt an image with salt-and-pepper noise");
  inject_cmd->add_option("--density", density_text, "Fraction in [0,1] or percent (> 1)")
      ->required();
  inject_cmd->add_option("--salt-fraction", salt_fraction, "Share of impulses set to 255");
  inject_cmd->add_option("--seed", seed, "RNG seed (default 0)");
  inject_cmd->add_option("input", in_path)->required();
  inject_cmd->add_option("output", out_path)->required();

  std::string filter_name;
  std::size_t window = 3;
  std::size_t max_window = 7;
  auto* denoise_cmd = app.add_subcommand("denoise", "Restore a noisy image");
  denoise_cmd->add_option("--filter", filter_name, "smf, amf, mdbutmf or rmf")->required();
  denoise_cmd->add_option("--window", window, "Odd window size (default 3)");
  denoise_cmd->add_option("--max-window", max_window, "Largest AMF window (default 7)");
  denoise_cmd->add_option("input", in_path)->required();
  denoise_cmd->add_option("output", out_path)->required();

  std::string ref_path;
  std::string test_path;
  std::string noisy_path;
  auto* metrics_cmd = app.add_subcommand("metrics", "Compare an image against a reference");
  metrics_cmd->add_option("--ref", ref_path, "Clean reference image")->required();
  metrics_cmd->add_option("--test", test_path, "Image under test")->required();
  metrics_cmd->add_option("--noisy", noisy_path, "Noisy input, enables IEF");

  std::string image_path;
  std::string densities_text;
  std::string filters_text;
  std::string csv_path;
  std::string svg_path;
  auto* bench_cmd = app.add_subcommand("bench", "Sweep filters over noise densities");
  bench_cmd->add_option("--image", image_path, "Clean source image")->required();
  bench_cmd->add_option("--densities", densities_text, "a:b:step or comma list")->required();
  bench_cmd->add_option("--filters", filters_text, "Comma list of filters")->required();
  bench_cmd->add_option("--seed", seed, "RNG seed (default 0)");
  bench_cmd->add_option("--csv", csv_path, "CSV output path")->required();
  bench_cmd->add_option("--svg", svg_path, "SVG plot output path");

  auto fail = [&err](int code, std::string_view msg) {
    err << "impulse: " << msg << '\n';
    return code;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    for (char& c : msg) {
      if (c == '\n') c = ' ';
    }
    return fail(kUsage, "usage error: " + msg);
  }

  try {
    if (inject_cmd->parsed()) {
      NoiseSpec spec{parse_density(density_text), salt_fraction, seed};
      if (salt_fraction < 0.0 || salt_fraction > 1.0) {
        throw UsageError("salt fraction must lie in [0, 1]");
      }
      save_pgm(out_path, inject(load_pgm(in_path), spec));
    } else if (denoise_cmd->parsed()) {
      const FilterConfig config{parse_filter(filter_name), window, max_window};
      try {
        config.validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      save_pgm(out_path, apply_filter(load_pgm(in_path), config).image);
    } else if (metrics_cmd->parsed()) {
      const GrayImage ref = load_pgm(ref_path);
      const GrayImage test = load_pgm(test_path);
      std::optional<GrayImage> noisy;
      if (!noisy_path.empty()) noisy = load_pgm(noisy_path);
      out << format_metrics(evaluate(ref, test, noisy ? &*noisy : nullptr)) << '\n';
    } else if (bench_cmd->parsed()) {
      const std::vector<int> densities = parse_density_list(densities_text);
      std::vector<FilterConfig> filters;
      for (FilterKind k : parse_filter_list(filters_text)) filters.push_back(FilterConfig{k});
      BenchGrid grid{load_pgm(image_path), densities, filters, seed,
                     std::filesystem::path(image_path).stem().string()};
      const auto rows = run_grid(grid);
      write_file(csv_path, to_csv(rows));
      if (!svg_path.empty()) write_file(svg_path, to_svg(rows));
    }
  } catch (const UsageError& e) {
    return fail(kUsage, std::string("usage error: ") + e.what());
  } catch (const IoError& e) {
    return fail(kIo, std::string("I/O error: ") + e.what());
  } catch (const FormatError& e) {
    return fail(kFormat, std::string("format error: ") + e.what());
  } catch (const DegenerateInputError& e) {
    return fail(kDegenerate, std::string("degenerate input: ") + e.what());
  } catch (const std::invalid_argument& e) {
    return fail(kUsage, std::string("invalid input: ") + e.what());
  } catch (const std::exception& e) {
    return fail(kUsage, std::string("error: ") + e.what());
  }
  return kOk;
}

inline int dispatch(int argc, const char* const* argv, std::ostream& out = std::cout,
                    std::ostream& err = std::cerr) {
  return dispatch(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace impulse::cli
