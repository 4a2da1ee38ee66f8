#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "impulse/error.hpp"
#include "impulse/filters.hpp"
#include "impulse/image.hpp"
#include "impulse/metrics.hpp"
#include "impulse/noise.hpp"

namespace impulse {

/// One (image, filter, density) measurement.
struct BenchRow {
  std::string image_name;
  FilterKind filter = FilterKind::rmf;
  int density_pct = 0;
  double psnr_db = kInfinite;
  double mse = 0.0;
  double ief = kInfinite;
  double elapsed_ms = 0.0;
  std::uint64_t noisy_digest = 0;  // digest of the corrupted input; not serialised
};

struct BenchGrid {
  GrayImage source;
  std::vector<int> densities;  // percents, strictly increasing, each in [1, 100]
  std::vector<FilterConfig> filters;
  std::uint64_t seed = 0;
  std::string image_name = "image";

  void validate() const {
    if (densities.empty()) throw std::invalid_argument("bench grid needs at least one density");
    if (filters.empty()) throw std::invalid_argument("bench grid needs at least one filter");
    for (std::size_t i = 0; i < densities.size(); ++i) {
      if (densities[i] < 1 || densities[i] > 100) {
        throw std::invalid_argument("density " + std::to_string(densities[i]) +
                                    "% outside [1, 100]");
      }
      if (i && densities[i] <= densities[i - 1]) {
        throw std::invalid_argument("densities must be strictly increasing");
      }
    }
    for (const auto& f : filters) f.validate();
  }
};

/// Noise seed for one density of a sweep: a stable hash of (seed, percent).
constexpr std::uint64_t density_seed(std::uint64_t seed, int density_pct) noexcept {
  return mix64(mix64(seed) ^ mix64(static_cast<std::uint64_t>(density_pct) + kGoldenGamma));
}

/// Runs every filter against one shared corruption per density. Rows are
/// ordered by density, then by the grid's filter order. Only the filter call
/// is timed.
inline std::vector<BenchRow> run_grid(const BenchGrid& grid) {
  grid.validate();
  std::vector<BenchRow> rows;
  rows.reserve(grid.densities.size() * grid.filters.size());
  for (int pct : grid.densities) {
    const NoiseSpec spec{pct / 100.0, 0.5, density_seed(grid.seed, pct)};
    const GrayImage noisy = inject(grid.source, spec);
    const std::uint64_t noisy_digest = digest(noisy);
    for (const auto& config : grid.filters) {
      const auto start = std::chrono::steady_clock::now();
      const RestoredImage restored = apply_filter(noisy, config);
      const auto stop = std::chrono::steady_clock::now();

      BenchRow row;
      row.image_name = grid.image_name;
      row.filter = config.kind;
      row.density_pct = pct;
      row.mse = mse(grid.source, restored.image);
      row.psnr_db = psnr_from_mse(row.mse);
      row.ief = ief(grid.source, noisy, restored.image);
      row.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
      row.noisy_digest = noisy_digest;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

/// Fixed four-decimal rendering; infinity prints as "inf".
inline std::string format_real(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

inline constexpr std::string_view kCsvHeader = "image,filter,density_pct,psnr_db,mse,ief,elapsed_ms";

inline std::string to_csv(const std::vector<BenchRow>& rows) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : rows) {
    out += r.image_name;
    out += ',';
    out += to_string(r.filter);
    out += ',';
    out += std::to_string(r.density_pct);
    out += ',' + format_real(r.psnr_db);
    out += ',' + format_real(r.mse);
    out += ',' + format_real(r.ief);
    out += ',' + format_real(r.elapsed_ms);
    out += '\n';
  }
  return out;
}

namespace detail {

inline std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

inline std::string fmt(double v, int precision = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  return buf;
}

}  // namespace detail

/// PSNR-versus-density line chart, one polyline per filter. Rows with an
/// infinite PSNR are skipped; if nothing finite remains the plot is
/// undefined and DegenerateInputError is thrown.
inline std::string to_svg(const std::vector<BenchRow>& rows) {
  using detail::fmt;
  std::vector<FilterKind> order;
  std::map<FilterKind, std::vector<std::pair<int, double>>> series;
  std::vector<int> densities;
  for (const auto& r : rows) {
    if (!std::isfinite(r.psnr_db)) continue;
    if (!series.count(r.filter)) order.push_back(r.filter);
    series[r.filter].emplace_back(r.density_pct, r.psnr_db);
    densities.push_back(r.density_pct);
  }
  if (order.empty()) throw DegenerateInputError("no finite PSNR values to plot");
  std::sort(densities.begin(), densities.end());
  densities.erase(std::unique(densities.begin(), densities.end()), densities.end());

  double lo = kInfinite;
  double hi = -kInfinite;
  for (const auto& [kind, pts] : series) {
    for (const auto& [d, p] : pts) {
      lo = std::min(lo, p);
      hi = std::max(hi, p);
    }
  }
  lo = std::floor(lo) - 1.0;
  hi = std::ceil(hi) + 1.0;

  constexpr double kWidth = 720, kHeight = 440;
  constexpr double kLeft = 70, kRight = 560, kTop = 40, kBottom = 380;
  const double dmin = densities.front();
  const double dmax = densities.back();
  auto x_of = [&](double d) {
    if (dmax == dmin) return (kLeft + kRight) / 2;
    return kLeft + (d - dmin) / (dmax - dmin) * (kRight - kLeft);
  };
  auto y_of = [&](double p) { return kBottom - (p - lo) / (hi - lo) * (kBottom - kTop); };

  static constexpr std::string_view kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                                 "#ff7f0e", "#8c564b"};

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kWidth, 0) + "\" height=\"" +
       fmt(kHeight, 0) + "\" viewBox=\"0 0 " + fmt(kWidth, 0) + " " + fmt(kHeight, 0) + "\">\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  const std::string title =
      rows.empty() ? std::string() : detail::xml_escape(rows.front().image_name);
  s += "<text x=\"" + fmt((kLeft + kRight) / 2, 0) +
       "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">"
       "PSNR (dB) vs noise density (%) - " + title + "</text>\n";

  // Axes.
  s += "<g stroke=\"black\" stroke-width=\"1\">\n";
  s += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(kBottom) + "\" x2=\"" + fmt(kRight) +
       "\" y2=\"" + fmt(kBottom) + "\"/>\n";
  s += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(kTop) + "\" x2=\"" + fmt(kLeft) +
       "\" y2=\"" + fmt(kBottom) + "\"/>\n";
  s += "</g>\n";

  s += "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (int d : densities) {
    const double x = x_of(d);
    s += "<line x1=\"" + fmt(x) + "\" y1=\"" + fmt(kBottom) + "\" x2=\"" + fmt(x) + "\" y2=\"" +
         fmt(kBottom + 5) + "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + fmt(x) + "\" y=\"" + fmt(kBottom + 18) + "\" text-anchor=\"middle\">" +
         std::to_string(d) + "</text>\n";
  }
  constexpr int kYTicks = 6;
  for (int i = 0; i <= kYTicks; ++i) {
    const double p = lo + (hi - lo) * i / kYTicks;
    const double y = y_of(p);
    s += "<line x1=\"" + fmt(kLeft - 5) + "\" y1=\"" + fmt(y) + "\" x2=\"" + fmt(kLeft) +
         "\" y2=\"" + fmt(y) + "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + fmt(kLeft - 8) + "\" y=\"" + fmt(y + 4) + "\" text-anchor=\"end\">" +
         fmt(p, 1) + "</text>\n";
  }
  s += "<text x=\"" + fmt((kLeft + kRight) / 2) + "\" y=\"" + fmt(kBottom + 40) +
       "\" text-anchor=\"middle\">Noise density (%)</text>\n";
  s += "<text x=\"18\" y=\"" + fmt((kTop + kBottom) / 2) +
       "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " + fmt((kTop + kBottom) / 2) +
       ")\">PSNR (dB)</text>\n";
  s += "</g>\n";

  for (std::size_t i = 0; i < order.size(); ++i) {
    auto pts = series[order[i]];
    std::sort(pts.begin(), pts.end());
    const std::string_view color = kColors[i % std::size(kColors)];
    s += "<polyline fill=\"none\" stroke=\"";
    s += color;
    s += "\" stroke-width=\"2\" points=\"";
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (k) s += ' ';
      s += fmt(x_of(pts[k].first)) + "," + fmt(y_of(pts[k].second));
    }
    s += "\"/>\n";
  }

  s += "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (std::size_t i = 0; i < order.size(); ++i) {
    const double y = kTop + 10 + 20.0 * static_cast<double>(i);
    const std::string_view color = kColors[i % std::size(kColors)];
    s += "<line x1=\"580\" y1=\"" + fmt(y) + "\" x2=\"605\" y2=\"" + fmt(y) + "\" stroke=\"";
    s += color;
    s += "\" stroke-width=\"2\"/>\n";
    s += "<text x=\"612\" y=\"" + fmt(y + 4) + "\">";
    s += to_string(order[i]);
    s += "</text>\n";
  }
  s += "</g>\n</svg>\n";
  return s;
}

}  // namespace impulse
