#pragma once

// Scene files, the orthographic tracer and the culling benchmark.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "toroid/bounding.hpp"
#include "toroid/geom_core.hpp"
#include "toroid/rng.hpp"

namespace toroid {

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

enum class SolverKind { Quartic, Iterative };
enum class BVKind { None, Standard, Hole };

struct SceneConfig {
  double major = 2.0;
  double minor = 1.0;
  Vec3 center{0, 0, 0};
  Vec3 axis{0, 1, 0};
  Vec3 cam_origin{0, 10, 0};
  Vec3 cam_dir{0, -1, 0};
  double half_width = 4.0;
  int width = 256;
  int height = 256;
  SolverKind solver = SolverKind::Quartic;
  BVKind bv = BVKind::Hole;

  Torus torus() const { return Torus::with_axis(major, minor, center, axis); }
};

// `key = value` lines, `#` starts a comment. Vectors are three numbers
// separated by commas and/or spaces. Throws ConfigError.
SceneConfig parse_scene(std::string_view text);

struct StatsRecord {
  std::uint64_t rays_total = 0;
  std::uint64_t bv_reject_outside = 0;
  std::uint64_t bv_reject_slab = 0;
  std::uint64_t bv_reject_hole = 0;
  std::uint64_t exact_tests = 0;
  std::uint64_t hits = 0;
  // Rejected rays that the exact solver says hit; only counted when verifying.
  std::uint64_t false_rejects = 0;

  StatsRecord& operator+=(const StatsRecord& o);
  bool conserved() const;
};

struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> rgb;  // rows top to bottom, 3 bytes per pixel

  std::uint8_t* pixel(int x, int y) { return &rgb[3 * (static_cast<std::size_t>(y) * width + x)]; }
  const std::uint8_t* pixel(int x, int y) const {
    return &rgb[3 * (static_cast<std::size_t>(y) * width + x)];
  }
  bool is_black(int x, int y) const;
};

struct TraceResult {
  Image image;
  StatsRecord stats;
};

struct TraceOptions {
  // Re-run the exact solver on every culled ray and count false rejections.
  bool verify_rejects = false;
};

TraceResult trace_image(const SceneConfig& cfg, const TraceOptions& opts = {});

// "P6\n{w} {h}\n255\n" followed by raw RGB.
std::string encode_ppm(const Image& img);
std::string stats_csv(const StatsRecord& s);

struct BenchRow {
  double nu;
  std::string bundle;  // "hole" or "uniform"
  double std_reject_rate;
  double hole_reject_rate;
  std::uint64_t false_reject_count;
};

// Culling rates per ratio R/r (r fixed to 1). Throws ConfigError for nu <= 1.
std::vector<BenchRow> benchmark_sweep(const std::vector<double>& nu_list, int rays_per_case,
                                      std::uint64_t seed = 42);
std::string bench_csv(const std::vector<BenchRow>& rows);

// Ray generators used by the benchmark, exposed for tests.
// Anchors on a disc of radius 0.9 * x_B (z_c = 0) at y = -2r, directions within
// 20 degrees of +y.
Ray3 hole_bundle_ray(const Torus& canonical, CounterRng& rng);
// Lines through a uniform point of the bounding ball from a uniform point on a
// sphere three times its radius.
Ray3 uniform_bundle_ray(const Torus& canonical, CounterRng& rng);

}  // namespace toroid
