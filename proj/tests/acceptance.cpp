// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "impulse/impulse.hpp"
#include "oracle.hpp"

using namespace impulse;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(const char* id, const char* title, const std::function<Outcome()>& check) {
  Outcome o;
  try {
    o = check();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::printf("[%s] %s %s: %s\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str());
}

std::string fmt(double v, int precision = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  return buf;
}

// Reference (noise %, PSNR dB, MSE) triples.
struct ReferenceRow {
  int pct;
  double psnr;
  double mse;
};
constexpr ReferenceRow kReferencePairs[] = {
    {10, 34.2762, 24.2920},  {20, 31.1540, 49.8513},  {30, 29.2863, 76.6391},
    {40, 27.7298, 109.6742}, {50, 26.5649, 143.4142}, {60, 25.5204, 182.4069},
    {70, 24.3077, 241.1607}, {80, 23.0167, 324.6479}, {90, 21.4067, 470.3241},
};

const std::vector<int> kSweep = {10, 20, 30, 40, 50, 60, 70, 80, 90};

}  // namespace

int main() {
  const GrayImage source = make_test_image();

  report("AC1", "PSNR formula reproduces reference (MSE, PSNR) pairs", [] {
    double worst = 0.0;
    for (const auto& row : kReferencePairs) {
      worst = std::max(worst, std::abs(psnr_from_mse(row.mse) - row.psnr));
    }
    return Outcome{worst <= 1e-3, "max |dPSNR| = " + fmt(worst, 6) + " dB over 9 rows (tol 0.001)"};
  });

  std::vector<BenchRow> sweep;
  double sweep_seconds = 0.0;
  report("AC2", "RMF density sweep shape on 256x256 test image", [&] {
    const auto start = std::chrono::steady_clock::now();
    sweep = run_grid(BenchGrid{source,
                               kSweep,
                               {FilterConfig{FilterKind::smf}, FilterConfig{FilterKind::rmf}},
                               0,
                               "synthetic"});
    sweep_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::vector<double> rmf;
    for (const auto& r : sweep)
      if (r.filter == FilterKind::rmf) rmf.push_back(r.psnr_db);
    bool decreasing = rmf.size() == 9;
    for (std::size_t i = 1; i < rmf.size(); ++i) decreasing = decreasing && rmf[i] < rmf[i - 1];
    const bool low_ok = rmf.front() >= 30.0 && rmf.front() <= 38.0;
    const bool high_ok = rmf.back() >= 18.0 && rmf.back() <= 25.0;
    const bool fast = sweep_seconds < 10.0;
    return Outcome{decreasing && low_ok && high_ok && fast,
                   std::string("strictly decreasing=") + (decreasing ? "yes" : "no") +
                       ", 10%: " + fmt(rmf.front()) + " dB in [30,38], 90%: " + fmt(rmf.back()) +
                       " dB in [18,25], sweep " + fmt(sweep_seconds, 3) + " s (< 10 s)"};
  });

  report("AC3", "RMF beats SMF by >= 5 dB at 40% and 50%", [&] {
    double gap40 = 0.0, gap50 = 0.0;
    for (std::size_t i = 0; i + 1 < sweep.size(); i += 2) {
      const double gap = sweep[i + 1].psnr_db - sweep[i].psnr_db;
      if (sweep[i].density_pct == 40) gap40 = gap;
      if (sweep[i].density_pct == 50) gap50 = gap;
    }
    return Outcome{gap40 >= 5.0 && gap50 >= 5.0,
                   "gap 40%: " + fmt(gap40) + " dB, gap 50%: " + fmt(gap50) + " dB (floor 5)"};
  });

  report("AC4", "RMF equals brute-force reference bit-exactly", [] {
    std::mt19937_64 gen(20240401);
    int mismatches = 0, total = 0;
    for (double density : {0.1, 0.5, 0.9}) {
      for (int i = 0; i < 100; ++i, ++total) {
        const auto img = oracle::random_image(gen, 16, 16, density);
        if (apply_rmf(img, FilterConfig{FilterKind::rmf}).image != oracle::brute_force_rmf(img))
          ++mismatches;
      }
    }
    return Outcome{mismatches == 0, std::to_string(total - mismatches) + "/" +
                                        std::to_string(total) +
                                        " images match (100 per density 0.1, 0.5, 0.9)"};
  });

  report("AC5", "impulse-free images are fixed points of RMF and MDBUTMF", [] {
    std::mt19937_64 gen(5150);
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
      const auto img = oracle::random_image(gen, 1 + gen() % 40, 1 + gen() % 40, 0.0, 1, 254);
      for (auto kind : {FilterKind::rmf, FilterKind::mdbutmf}) {
        const auto out = apply_filter(img, FilterConfig{kind});
        if (out.image != img || out.replaced_count != 0) ++bad;
      }
    }
    return Outcome{bad == 0, std::to_string(200 - bad) + "/200 filter runs returned the input"};
  });

  report("AC6", "injector count and salt:pepper split within 4 sigma", [] {
    const GrayImage grey(256, 256, Pixel{128});
    int bad_count = 0, bad_split = 0;
    std::size_t lo = SIZE_MAX, hi = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto out = inject(grey, NoiseSpec{0.3, 0.5, seed * 7919 + 1});
      std::size_t salt = 0, pepper = 0;
      for (Pixel p : out.pixels()) {
        salt += p == 255;
        pepper += p == 0;
      }
      const std::size_t corrupted = salt + pepper;
      lo = std::min(lo, corrupted);
      hi = std::max(hi, corrupted);
      if (corrupted < 19191 || corrupted > 20131) ++bad_count;
      // Given the corrupted count, salt ~ Binomial(corrupted, 1/2).
      const double dev = std::abs(static_cast<double>(salt) - corrupted / 2.0);
      if (dev > 4.0 * std::sqrt(corrupted / 4.0)) ++bad_split;
    }
    return Outcome{bad_count == 0 && bad_split == 0,
                   "20 seeds, counts in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                       "] vs [19191, 20131]; split failures " + std::to_string(bad_split)};
  });

  report("AC7", "PGM round trip, CSV header, SVG well-formedness", [&] {
    std::mt19937_64 gen(77);
    int bad = 0;
    for (int i = 0; i < 100; ++i) {
      const auto img = oracle::random_image(gen, 1 + gen() % 32, 1 + gen() % 32);
      if (read_pgm(write_pgm(img, PgmMode::binary)) != img) ++bad;
      if (read_pgm(write_pgm(img, PgmMode::ascii)) != img) ++bad;
    }
    const std::string csv = to_csv(sweep);
    const bool header_ok =
        csv.substr(0, csv.find('\n')) == "image,filter,density_pct,psnr_db,mse,ief,elapsed_ms";
    bool svg_ok = true;
    try {
      std::istringstream in(to_svg(sweep));
      boost::property_tree::ptree tree;
      boost::property_tree::read_xml(in, tree);
      svg_ok = tree.count("svg") == 1;
    } catch (const std::exception&) {
      svg_ok = false;
    }
    return Outcome{bad == 0 && header_ok && svg_ok,
                   std::to_string(200 - bad) + "/200 round trips exact, CSV header " +
                       (header_ok ? "exact" : "WRONG") + ", SVG " +
                       (svg_ok ? "well-formed" : "MALFORMED")};
  });

  // Timing depends on the machine and is recorded only.
  std::string timings;
  for (const auto& r : sweep) {
    if (r.filter != FilterKind::rmf) continue;
    if (!timings.empty()) timings += ", ";
    timings += std::to_string(r.density_pct) + "%=" + fmt(r.elapsed_ms, 2) + "ms";
  }
  std::printf("[INFO] AC8 not reproduced by design: elapsed time (recorded: %s); "
              "PSMF/DBA/MDBA baselines not implemented\n",
              timings.c_str());

  std::printf("%s: %d criteria failed\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
