#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "abcircle/canny.hpp"
#include "abcircle/detector.hpp"
#include "abcircle/image.hpp"
#include "abcircle/metrics.hpp"
#include "abcircle/objective.hpp"
#include "abcircle/raster.hpp"
#include "abcircle/synth.hpp"
#include "json.hpp"

namespace {

using abcircle::Circle;
using abcircle::DetectionReport;
using abcircle::DetectorConfig;
using abcircle::EdgeMap;
using abcircle::GrayImage;
using abcircle::GroundTruth;
using json = nlohmann::ordered_json;

constexpr int kExitNoEdges = 3;

struct DetectOptions {
  std::string input;
  std::string edges;
  int colony = 20;
  int cycles = 300;
  int limit = 30;
  std::size_t memory_cap = 100;
  double alpha = 0.05;
  double rmin = 5.0;
  double rmax = 0.0;
  double max_j = 0.25;
  double sigma = 1.0;
  double canny_low = 0.1;
  double canny_high = 0.3;
  std::uint64_t seed = 0;
  std::string out_report;
  std::string out_overlay;
};

struct SynthOptions {
  int width = 320;
  int height = 240;
  std::vector<std::string> circles;
  double noise = 0.0;
  std::uint64_t seed = 0;
  std::string out_edges;
  std::string out_truth;
};

struct BenchOptions {
  std::string suite;
  std::vector<std::string> compare;
  std::string out_report;
};

DetectorConfig make_detector_config(const DetectOptions& opt) {
  DetectorConfig cfg;
  cfg.abc.colony_size = opt.colony;
  cfg.abc.cycles = opt.cycles;
  cfg.abc.limit = opt.limit;
  cfg.abc.memory_cap = opt.memory_cap;
  cfg.abc.seed = opt.seed;
  cfg.discrimination.alpha = opt.alpha;
  cfg.discrimination.rmin = opt.rmin;
  cfg.discrimination.rmax = opt.rmax;
  cfg.discrimination.quality_max_j = opt.max_j;
  return cfg;
}

json report_to_json(const DetectionReport& report, const EdgeMap& edges,
                    const std::string& source, std::uint64_t seed) {
  json out;
  out["schema"] = 1;
  out["image"] = {{"width", report.width},
                  {"height", report.height},
                  {"source", source},
                  {"edge_pixels", edges.points.size()}};
  out["config"] = {{"colony", report.abc.colony_size},
                   {"cycles", report.abc.cycles},
                   {"limit", report.abc.limit},
                   {"memory_cap", report.abc.memory_cap},
                   {"alpha", report.discrimination.alpha},
                   {"rmin", report.discrimination.rmin},
                   {"rmax", report.discrimination.rmax},
                   {"max_j", report.discrimination.quality_max_j}};
  out["circles"] = json::array();
  for (const auto& sc : report.circles) {
    out["circles"].push_back({{"x", sc.circle.x0},
                              {"y", sc.circle.y0},
                              {"r", sc.circle.r},
                              {"j", sc.j}});
  }
  out["candidates_examined"] = report.candidates_examined;
  out["elapsed_seconds"] = report.elapsed_seconds;
  out["seed"] = seed;
  return out;
}

void write_json(const json& doc, const std::string& path) {
  if (path.empty()) {
    std::cout << doc.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << doc.dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed for " + path);
}

void write_overlay(const std::string& path, const GrayImage& base,
                   const DetectionReport& report) {
  const int w = base.width;
  const int h = base.height;
  std::vector<std::uint8_t> rgb(static_cast<std::size_t>(w) * h * 3);
  for (std::size_t i = 0; i < base.data.size(); ++i) {
    rgb[i * 3] = rgb[i * 3 + 1] = rgb[i * 3 + 2] = base.data[i];
  }
  for (const auto& sc : report.circles) {
    const auto perim = abcircle::rasterize_circle(sc.circle, w, h);
    for (const auto& p : perim.pixels) {
      const auto at =
          (static_cast<std::size_t>(p.y) * static_cast<std::size_t>(w) +
           static_cast<std::size_t>(p.x)) *
          3;
      rgb[at] = 255;
      rgb[at + 1] = 0;
      rgb[at + 2] = 0;
    }
  }
  abcircle::save_png_rgb(w, h, rgb, path);
}

GrayImage edge_map_as_image(const EdgeMap& edges) {
  GrayImage img;
  img.width = edges.width;
  img.height = edges.height;
  img.data.resize(edges.mask.size());
  for (std::size_t i = 0; i < edges.mask.size(); ++i) {
    img.data[i] = edges.mask[i] ? 255 : 0;
  }
  return img;
}

int cmd_detect(const DetectOptions& opt) {
  EdgeMap edges;
  GrayImage base;
  std::string source;
  if (!opt.input.empty()) {
    base = abcircle::load_image(opt.input);
    edges = abcircle::canny_edges(base, opt.sigma, opt.canny_low,
                                  opt.canny_high);
    source = opt.input;
  } else {
    edges = abcircle::load_edge_map(opt.edges);
    base = edge_map_as_image(edges);
    source = opt.edges;
  }

  const DetectionReport report =
      abcircle::detect_circles(edges, make_detector_config(opt));
  write_json(report_to_json(report, edges, source, opt.seed),
             opt.out_report);
  if (!opt.out_overlay.empty()) {
    write_overlay(opt.out_overlay, base, report);
  }
  return 0;
}

Circle parse_circle_arg(const std::string& arg) {
  Circle c{};
  char c1 = 0;
  char c2 = 0;
  std::istringstream in(arg);
  if (!(in >> c.x0 >> c1 >> c.y0 >> c2 >> c.r) || c1 != ',' || c2 != ',') {
    throw std::runtime_error("bad --circle value '" + arg +
                             "', expected x,y,r");
  }
  std::string rest;
  if (in >> rest) {
    throw std::runtime_error("bad --circle value '" + arg + "'");
  }
  return c;
}

int cmd_synth(const SynthOptions& opt) {
  GroundTruth truth;
  for (const auto& arg : opt.circles) {
    truth.circles.push_back(parse_circle_arg(arg));
  }
  EdgeMap edges = abcircle::synth_scene(opt.width, opt.height, truth);
  if (opt.noise > 0.0) {
    edges = abcircle::salt_pepper(edges, opt.noise, opt.seed);
  }
  abcircle::save_edge_map(edges, opt.out_edges);
  if (!opt.out_truth.empty()) {
    abcircle::save_truth(truth, opt.out_truth);
  }
  return 0;
}

struct BenchScene {
  std::string name;
  EdgeMap edges;
  GroundTruth truth;
};

std::vector<Circle> report_circles(const DetectionReport& report) {
  std::vector<Circle> out;
  out.reserve(report.circles.size());
  for (const auto& sc : report.circles) out.push_back(sc.circle);
  return out;
}

int cmd_bench(const BenchOptions& opt) {
  if (!opt.compare.empty()) {
    json a;
    json b;
    {
      std::ifstream fa(opt.compare[0]);
      if (!fa) throw std::runtime_error("cannot open " + opt.compare[0]);
      fa >> a;
      std::ifstream fb(opt.compare[1]);
      if (!fb) throw std::runtime_error("cannot open " + opt.compare[1]);
      fb >> b;
    }
    json result;
    result["schema"] = 1;
    result["a"] = opt.compare[0];
    result["b"] = opt.compare[1];
    result["scenes"] = json::array();
    for (const auto& sa : a.at("scenes")) {
      for (const auto& sb : b.at("scenes")) {
        if (sa.at("name") != sb.at("name")) continue;
        const auto ma = sa.at("me_values").get<std::vector<double>>();
        const auto mb = sb.at("me_values").get<std::vector<double>>();
        result["scenes"].push_back(
            {{"name", sa.at("name")},
             {"p_value", abcircle::wilcoxon_ranksum(ma, mb)}});
      }
    }
    if (result["scenes"].empty()) {
      throw std::runtime_error("no scene names in common between " +
                               opt.compare[0] + " and " + opt.compare[1]);
    }
    write_json(result, opt.out_report);
    return 0;
  }

  json suite;
  {
    std::ifstream in(opt.suite);
    if (!in) throw std::runtime_error("cannot open " + opt.suite);
    in >> suite;
  }
  const int seeds = suite.value("seeds", 35);
  const std::uint64_t base_seed = suite.value("base_seed", 1000);
  if (seeds < 1) throw std::runtime_error("suite needs at least one seed");

  DetectOptions detector;
  if (suite.contains("detector")) {
    const auto& d = suite.at("detector");
    detector.colony = d.value("colony", detector.colony);
    detector.cycles = d.value("cycles", detector.cycles);
    detector.limit = d.value("limit", detector.limit);
    detector.memory_cap = d.value("memory_cap", detector.memory_cap);
    detector.alpha = d.value("alpha", detector.alpha);
    detector.rmin = d.value("rmin", detector.rmin);
    detector.rmax = d.value("rmax", detector.rmax);
    detector.max_j = d.value("max_j", detector.max_j);
  }

  std::vector<BenchScene> scenes;
  for (const auto& s : suite.at("scenes")) {
    BenchScene scene;
    scene.name = s.at("name").get<std::string>();
    if (s.contains("edges")) {
      scene.edges = abcircle::load_edge_map(s.at("edges").get<std::string>());
      scene.truth = abcircle::load_truth(s.at("truth").get<std::string>());
    } else {
      for (const auto& c : s.at("circles")) {
        scene.truth.circles.push_back(
            Circle{c.at(0).get<double>(), c.at(1).get<double>(),
                   c.at(2).get<double>()});
      }
      scene.edges = abcircle::synth_scene(s.value("width", 320),
                                          s.value("height", 240),
                                          scene.truth);
      const double noise = s.value("noise", 0.0);
      if (noise > 0.0) {
        scene.edges = abcircle::salt_pepper(
            scene.edges, noise, s.value("noise_seed", std::uint64_t{1}));
      }
    }
    scenes.push_back(std::move(scene));
  }
  if (scenes.empty()) throw std::runtime_error("suite has no scenes");

  json result;
  result["schema"] = 1;
  result["suite"] = opt.suite;
  result["seeds"] = seeds;
  result["base_seed"] = base_seed;
  result["scenes"] = json::array();
  for (const auto& scene : scenes) {
    std::vector<double> me_values;
    double elapsed_total = 0.0;
    for (int run = 0; run < seeds; ++run) {
      DetectOptions per_run = detector;
      per_run.seed = base_seed + static_cast<std::uint64_t>(run);
      const DetectionReport report = abcircle::detect_circles(
          scene.edges, make_detector_config(per_run));
      me_values.push_back(
          abcircle::multiple_error(scene.truth, report_circles(report)));
      elapsed_total += report.elapsed_seconds;
    }
    const double mean =
        std::accumulate(me_values.begin(), me_values.end(), 0.0) /
        static_cast<double>(me_values.size());
    double var = 0.0;
    for (const double me : me_values) var += (me - mean) * (me - mean);
    const double stddev =
        me_values.size() > 1
            ? std::sqrt(var / static_cast<double>(me_values.size() - 1))
            : 0.0;
    result["scenes"].push_back(
        {{"name", scene.name},
         {"truth_circles", scene.truth.circles.size()},
         {"edge_pixels", scene.edges.points.size()},
         {"me_values", me_values},
         {"mean_me", mean},
         {"std_me", stddev},
         {"success_rate", abcircle::success_rate(me_values)},
         {"mean_elapsed_seconds",
          elapsed_total / static_cast<double>(seeds)}});
  }
  write_json(result, opt.out_report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-circle detection on edge images"};
  app.require_subcommand(1);

  DetectOptions detect;
  auto* cmd_d = app.add_subcommand(
      "detect", "Detect circles in an image or edge map");
  auto* in_img = cmd_d->add_option("--input", detect.input,
                                   "Grayscale image (PNG or PGM)");
  auto* in_edges = cmd_d->add_option(
      "--edges", detect.edges, "Pre-binarized edge map (nonzero = edge)");
  in_img->excludes(in_edges);
  in_edges->excludes(in_img);
  cmd_d->add_option("--colony", detect.colony, "Food sources")
      ->capture_default_str();
  cmd_d->add_option("--cycles", detect.cycles, "Optimization cycles")
      ->capture_default_str();
  cmd_d->add_option("--limit", detect.limit, "Abandonment trial limit")
      ->capture_default_str();
  cmd_d->add_option("--memory-cap", detect.memory_cap,
                    "Exhausted-source archive capacity")
      ->capture_default_str();
  cmd_d->add_option("--alpha", detect.alpha, "Distinctiveness sensitivity")
      ->capture_default_str();
  cmd_d->add_option("--rmin", detect.rmin, "Minimum radius, pixels")
      ->capture_default_str();
  cmd_d->add_option("--rmax", detect.rmax,
                    "Maximum radius, pixels (0 = half image diagonal)")
      ->capture_default_str();
  cmd_d->add_option("--max-j", detect.max_j, "Matching-error ceiling")
      ->capture_default_str();
  cmd_d->add_option("--sigma", detect.sigma, "Gaussian blur sigma")
      ->capture_default_str();
  cmd_d->add_option("--canny-low", detect.canny_low,
                    "Low hysteresis fraction")
      ->capture_default_str();
  cmd_d->add_option("--canny-high", detect.canny_high,
                    "High hysteresis fraction")
      ->capture_default_str();
  cmd_d->add_option("--seed", detect.seed, "PRNG seed")
      ->capture_default_str();
  cmd_d->add_option("--out-report", detect.out_report,
                    "Report path (default stdout)");
  cmd_d->add_option("--out-overlay", detect.out_overlay,
                    "Overlay PNG path");

  SynthOptions synth;
  auto* cmd_s = app.add_subcommand(
      "synth", "Render a synthetic edge map with known circles");
  cmd_s->add_option("--width", synth.width, "Frame width")
      ->capture_default_str();
  cmd_s->add_option("--height", synth.height, "Frame height")
      ->capture_default_str();
  cmd_s->add_option("--circle", synth.circles,
                    "Circle as x,y,r (repeatable)");
  cmd_s->add_option("--noise", synth.noise, "Salt-and-pepper density")
      ->capture_default_str();
  cmd_s->add_option("--seed", synth.seed, "Noise PRNG seed")
      ->capture_default_str();
  cmd_s->add_option("--out-edges", synth.out_edges, "Edge map PGM path")
      ->required();
  cmd_s->add_option("--out-truth", synth.out_truth, "Truth sidecar path");

  BenchOptions bench;
  auto* cmd_b = app.add_subcommand(
      "bench", "Run a benchmark suite or compare two results");
  auto* suite_opt =
      cmd_b->add_option("--suite", bench.suite, "Suite JSON path");
  cmd_b->add_option("--compare", bench.compare,
                    "Two bench reports to compare")
      ->expected(2)
      ->excludes(suite_opt);
  cmd_b->add_option("--out-report", bench.out_report,
                    "Report path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_d->parsed()) {
      if (detect.input.empty() && detect.edges.empty()) {
        std::cerr << "detect: need --input or --edges\n";
        return 1;
      }
      return cmd_detect(detect);
    }
    if (cmd_s->parsed()) return cmd_synth(synth);
    if (bench.compare.empty() && bench.suite.empty()) {
      std::cerr << "bench: need --suite or --compare\n";
      return 1;
    }
    return cmd_bench(bench);
  } catch (const abcircle::InsufficientEdgesError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNoEdges;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
