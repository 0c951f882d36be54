// toroid: render a torus to PPM or run the culling benchmark.
//
//   toroid render --scene FILE [--out FILE.ppm] [--stats FILE.csv] [--seed N]
//   toroid bench --nu 2,4,8 --rays N [--out FILE.csv] [--seed N]
//
// Exit codes: 0 success, 1 configuration error, 2 a bounding volume rejected
// a ray that hits the torus.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "toroid/error.hpp"
#include "toroid/render.hpp"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitUnsound = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw toroid::ConfigError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw toroid::ConfigError("cannot write '" + path + "'");
  out << data;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ray/torus intersection renderer and culling benchmark"};
  app.require_subcommand(1);

  std::string scene_path, ppm_path = "out.ppm", stats_path;
  std::uint64_t seed = 42;
  bool no_verify = false;
  auto* render = app.add_subcommand("render", "Render a scene file to a binary PPM");
  render->add_option("--scene", scene_path, "Scene file (key = value lines)")->required();
  render->add_option("--out", ppm_path, "Output image")->capture_default_str();
  render->add_option("--stats", stats_path, "Write culling statistics as CSV");
  render->add_option("--seed", seed, "Random seed")->capture_default_str();
  render->add_flag("--no-verify", no_verify, "Skip re-checking culled rays with the exact solver");

  std::vector<double> nus{2.0, 4.0, 8.0};
  int rays = 100000;
  std::string csv_path;
  auto* bench = app.add_subcommand("bench", "Sweep R/r and report culling rates");
  bench->add_option("--nu", nus, "Comma-separated R/r ratios")->delimiter(',')->capture_default_str();
  bench->add_option("--rays", rays, "Rays per bundle and ratio")->capture_default_str();
  bench->add_option("--out", csv_path, "Output CSV (stdout when omitted)");
  bench->add_option("--seed", seed, "Random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*render) {
      const toroid::SceneConfig cfg = toroid::parse_scene(read_file(scene_path));
      toroid::TraceOptions opts;
      opts.verify_rejects = !no_verify;
      const toroid::TraceResult res = toroid::trace_image(cfg, opts);
      write_file(ppm_path, toroid::encode_ppm(res.image));
      if (!stats_path.empty()) write_file(stats_path, toroid::stats_csv(res.stats));
      std::cerr << "rays " << res.stats.rays_total << ", hits " << res.stats.hits << ", culled "
                << (res.stats.rays_total - res.stats.exact_tests) << "\n";
      if (res.stats.false_rejects > 0) {
        std::cerr << "error: " << res.stats.false_rejects << " culled rays hit the torus\n";
        return kExitUnsound;
      }
      return 0;
    }

    const auto rows = toroid::benchmark_sweep(nus, rays, seed);
    const std::string csv = toroid::bench_csv(rows);
    if (csv_path.empty())
      std::cout << csv;
    else
      write_file(csv_path, csv);
    for (const auto& row : rows) {
      if (row.false_reject_count > 0) {
        std::cerr << "error: false rejections at nu=" << row.nu << " (" << row.bundle << ")\n";
        return kExitUnsound;
      }
    }
    return 0;
  } catch (const toroid::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const toroid::DomainError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }
}
