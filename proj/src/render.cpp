#include "toroid/render.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>

#include "toroid/envelope.hpp"
#include "toroid/error.hpp"
#include "toroid/torus_intersect.hpp"

namespace toroid {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_scalar(std::string_view key, std::string_view v) {
  v = trim(v);
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out))
    throw ConfigError("scene: malformed number for '" + std::string(key) + "': '" +
                      std::string(v) + "'");
  return out;
}

int parse_count(std::string_view key, std::string_view v) {
  v = trim(v);
  int out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || ec != std::errc() || ptr != v.data() + v.size())
    throw ConfigError("scene: malformed integer for '" + std::string(key) + "'");
  if (out < 1) throw ConfigError("scene: '" + std::string(key) + "' must be >= 1");
  return out;
}

Vec3 parse_vec(std::string_view key, std::string_view v) {
  std::vector<double> parts;
  std::size_t i = 0;
  while (i < v.size()) {
    while (i < v.size() && (v[i] == ',' || v[i] == ' ' || v[i] == '\t')) ++i;
    if (i >= v.size()) break;
    std::size_t j = i;
    while (j < v.size() && v[j] != ',' && v[j] != ' ' && v[j] != '\t') ++j;
    parts.push_back(parse_scalar(key, v.substr(i, j - i)));
    i = j;
  }
  if (parts.size() != 3)
    throw ConfigError("scene: '" + std::string(key) + "' needs three components");
  return {parts[0], parts[1], parts[2]};
}

Vec3 unit_or_throw(std::string_view key, const Vec3& v) {
  const double len = norm(v);
  if (!(len > 0.0)) throw ConfigError("scene: '" + std::string(key) + "' must be non-zero");
  return v / len;
}

// Nearest hit with t >= 0 for the chosen solver, normal in world space.
std::optional<Vec3> exact_hit(const Ray3& ray, const Torus& torus, SolverKind solver) {
  if (solver == SolverKind::Quartic) {
    const auto hits = intersect(ray, torus);
    if (hits.empty()) return std::nullopt;
    return hits.front().normal;
  }
  const Transform4 to_canon = canonical_transform(torus);
  const Torus canon = torus.canonical();
  const Ray3 local{to_canon.apply_point(ray.anchor), to_canon.apply_vector(ray.dir)};
  const CanonicalRay cr = canonicalize_ray(local);
  for (double t : iterative_intersect(cr.planar, canon, 1e-10)) {
    if (t < 0.0) continue;
    return to_canon.rigid_inverse().apply_vector(surface_normal(local.at(t), canon));
  }
  return std::nullopt;
}

BVDecision cull(const Ray3& ray, const Torus& torus, BVKind kind) {
  switch (kind) {
    case BVKind::None:
      return BVDecision::Maybe;
    case BVKind::Standard: {
      const Transform4 to_canon = canonical_transform(torus);
      const Ray3 local{to_canon.apply_point(ray.anchor), to_canon.apply_vector(ray.dir)};
      return standard_bv(local, torus.canonical());
    }
    case BVKind::Hole:
      return bv_dispatch(ray, torus);
  }
  return BVDecision::Maybe;
}

Vec3 random_unit(CounterRng& rng) {
  const double z = rng.uniform(-1.0, 1.0);
  const double a = rng.uniform(0.0, 2.0 * std::numbers::pi);
  const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {s * std::cos(a), s * std::sin(a), z};
}

}  // namespace

SceneConfig parse_scene(std::string_view text) {
  SceneConfig cfg;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = (nl == std::string_view::npos) ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("scene: line " + std::to_string(line_no) + " is not 'key = value'");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));

    if (key == "R") {
      cfg.major = parse_scalar(key, value);
    } else if (key == "r") {
      cfg.minor = parse_scalar(key, value);
    } else if (key == "center") {
      cfg.center = parse_vec(key, value);
    } else if (key == "axis") {
      cfg.axis = parse_vec(key, value);
    } else if (key == "cam_origin") {
      cfg.cam_origin = parse_vec(key, value);
    } else if (key == "cam_dir") {
      cfg.cam_dir = parse_vec(key, value);
    } else if (key == "half_width") {
      cfg.half_width = parse_scalar(key, value);
    } else if (key == "width") {
      cfg.width = parse_count(key, value);
    } else if (key == "height") {
      cfg.height = parse_count(key, value);
    } else if (key == "solver") {
      if (value == "quartic")
        cfg.solver = SolverKind::Quartic;
      else if (value == "iterative")
        cfg.solver = SolverKind::Iterative;
      else
        throw ConfigError("scene: solver must be 'quartic' or 'iterative'");
    } else if (key == "bv") {
      if (value == "none")
        cfg.bv = BVKind::None;
      else if (value == "standard")
        cfg.bv = BVKind::Standard;
      else if (value == "hole")
        cfg.bv = BVKind::Hole;
      else
        throw ConfigError("scene: bv must be 'none', 'standard' or 'hole'");
    } else {
      throw ConfigError("scene: unknown key '" + std::string(key) + "'");
    }
  }

  if (!(cfg.minor > 0.0)) throw ConfigError("scene: r must be positive");
  if (!(cfg.minor < cfg.major)) throw ConfigError("scene: r must be smaller than R");
  if (!(cfg.half_width > 0.0)) throw ConfigError("scene: half_width must be positive");
  cfg.axis = unit_or_throw("axis", cfg.axis);
  cfg.cam_dir = unit_or_throw("cam_dir", cfg.cam_dir);
  return cfg;
}

StatsRecord& StatsRecord::operator+=(const StatsRecord& o) {
  rays_total += o.rays_total;
  bv_reject_outside += o.bv_reject_outside;
  bv_reject_slab += o.bv_reject_slab;
  bv_reject_hole += o.bv_reject_hole;
  exact_tests += o.exact_tests;
  hits += o.hits;
  false_rejects += o.false_rejects;
  return *this;
}

bool StatsRecord::conserved() const {
  return rays_total == bv_reject_outside + bv_reject_slab + bv_reject_hole + exact_tests &&
         hits <= exact_tests;
}

bool Image::is_black(int x, int y) const {
  const std::uint8_t* p = pixel(x, y);
  return p[0] == 0 && p[1] == 0 && p[2] == 0;
}

TraceResult trace_image(const SceneConfig& cfg, const TraceOptions& opts) {
  const Torus torus = cfg.torus();
  const Vec3 dir = normalized(cfg.cam_dir);
  const Vec3 hint = std::abs(dir.y) > 0.999 ? Vec3{0, 0, -1} : Vec3{0, 1, 0};
  const Vec3 right = normalized(cross(dir, hint));
  const Vec3 up = cross(right, dir);
  const Vec3 light = normalized(Vec3{-1, -1, -1});
  const double half_h = cfg.half_width * cfg.height / cfg.width;

  TraceResult out;
  out.image.width = cfg.width;
  out.image.height = cfg.height;
  out.image.rgb.assign(static_cast<std::size_t>(cfg.width) * cfg.height * 3, 0);

  for (int j = 0; j < cfg.height; ++j) {
    for (int i = 0; i < cfg.width; ++i) {
      const double u = (2.0 * (i + 0.5) / cfg.width - 1.0) * cfg.half_width;
      const double v = (1.0 - 2.0 * (j + 0.5) / cfg.height) * half_h;
      const Ray3 ray{cfg.cam_origin + right * u + up * v, dir};
      StatsRecord& st = out.stats;
      ++st.rays_total;

      const BVDecision verdict = cull(ray, torus, cfg.bv);
      if (is_reject(verdict)) {
        if (verdict == BVDecision::RejectOutside) ++st.bv_reject_outside;
        if (verdict == BVDecision::RejectSlab) ++st.bv_reject_slab;
        if (verdict == BVDecision::RejectHole) ++st.bv_reject_hole;
        if (opts.verify_rejects && !intersect(ray, torus).empty()) ++st.false_rejects;
        continue;
      }
      ++st.exact_tests;
      const auto normal = exact_hit(ray, torus, cfg.solver);
      if (!normal) continue;
      ++st.hits;
      const double lambert = std::max(0.0, -dot(*normal, light));
      const double shade = 0.15 + 0.85 * lambert;
      std::uint8_t* px = out.image.pixel(i, j);
      px[0] = static_cast<std::uint8_t>(std::lround(255.0 * shade));
      px[1] = static_cast<std::uint8_t>(std::lround(235.0 * shade));
      px[2] = static_cast<std::uint8_t>(std::lround(200.0 * shade));
    }
  }
  return out;
}

std::string encode_ppm(const Image& img) {
  std::string out = "P6\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
  out.append(reinterpret_cast<const char*>(img.rgb.data()), img.rgb.size());
  return out;
}

std::string stats_csv(const StatsRecord& s) {
  std::ostringstream os;
  os << "rays_total,bv_reject_outside,bv_reject_slab,bv_reject_hole,exact_tests,hits\n"
     << s.rays_total << ',' << s.bv_reject_outside << ',' << s.bv_reject_slab << ','
     << s.bv_reject_hole << ',' << s.exact_tests << ',' << s.hits << '\n';
  return os.str();
}

Ray3 hole_bundle_ray(const Torus& canonical, CounterRng& rng) {
  const double x_b = hole_geometry(0.0, canonical).x_b;
  const double radius = 0.9 * x_b * std::sqrt(rng.uniform());
  const double ang = rng.uniform(0.0, 2.0 * std::numbers::pi);
  const Vec3 anchor{radius * std::cos(ang), -2.0 * canonical.minor(), radius * std::sin(ang)};
  // Uniform over the spherical cap of half-angle 20 degrees around +y.
  const double cos_max = std::cos(20.0 * std::numbers::pi / 180.0);
  const double c = rng.uniform(cos_max, 1.0);
  const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
  const double az = rng.uniform(0.0, 2.0 * std::numbers::pi);
  return Ray3{anchor, normalized(Vec3{s * std::cos(az), c, s * std::sin(az)})};
}

Ray3 uniform_bundle_ray(const Torus& canonical, CounterRng& rng) {
  const double bound = canonical.major() + canonical.minor();
  const Vec3 anchor = random_unit(rng) * (3.0 * bound);
  const Vec3 target = random_unit(rng) * (bound * std::cbrt(rng.uniform()));
  return Ray3{anchor, normalized(target - anchor)};
}

std::vector<BenchRow> benchmark_sweep(const std::vector<double>& nu_list, int rays_per_case,
                                      std::uint64_t seed) {
  if (rays_per_case < 1) throw ConfigError("bench: rays per case must be >= 1");
  for (double nu : nu_list)
    if (!(nu > 1.0) || !std::isfinite(nu)) throw ConfigError("bench: every nu must exceed 1");

  std::vector<BenchRow> rows;
  for (std::size_t k = 0; k < nu_list.size(); ++k) {
    const double nu = nu_list[k];
    const Torus torus(nu, 1.0);
    for (int bundle = 0; bundle < 2; ++bundle) {
      CounterRng rng(seed, 2 * k + bundle);
      std::uint64_t std_rejects = 0, hole_rejects = 0, false_rejects = 0;
      for (int i = 0; i < rays_per_case; ++i) {
        const Ray3 ray = bundle == 0 ? hole_bundle_ray(torus, rng) : uniform_bundle_ray(torus, rng);
        const bool std_rej = is_reject(standard_bv(ray, torus));
        const bool hole_rej = is_reject(bv_dispatch(ray, torus));
        std_rejects += std_rej;
        hole_rejects += hole_rej;
        if ((std_rej || hole_rej) && !intersect(ray, torus).empty()) ++false_rejects;
      }
      rows.push_back({nu, bundle == 0 ? "hole" : "uniform",
                      static_cast<double>(std_rejects) / rays_per_case,
                      static_cast<double>(hole_rejects) / rays_per_case, false_rejects});
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "nu,bundle,std_reject_rate,hole_reject_rate,false_reject_count\n";
  os.precision(6);
  for (const BenchRow& r : rows) {
    os << r.nu << ',' << r.bundle << ',' << std::fixed << r.std_reject_rate << ','
       << r.hole_reject_rate << ',' << r.false_reject_count << '\n';
    os.unsetf(std::ios::fixed);
  }
  return os.str();
}

}  // namespace toroid
