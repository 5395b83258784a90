#include "hmc/shading.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "hmc/combine.hpp"

namespace hmc {

namespace {

Vec3 sub(const Vec3& a, const Vec3& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

double dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Vec3 normalized(const Vec3& v) {
    const double len = std::sqrt(dot(v, v));
    return {v[0] / len, v[1] / len, v[2] / len};
}

Vec3 scaled_to_radius(const Vec3& v, double radius) {
    const Vec3 n = normalized(v);
    return {n[0] * radius, n[1] * radius, n[2] * radius};
}

} // namespace

std::vector<PointLight> light_preset(const std::string& name, double radius) {
    std::vector<Vec3> positions;
    if (name == "tetrahedron") {
        positions = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
    } else if (name == "octahedron") {
        positions = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0},
                     {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    } else if (name == "grid3x3") {
        for (int j = -1; j <= 1; ++j)
            for (int i = -1; i <= 1; ++i)
                positions.push_back({static_cast<double>(i),
                                     static_cast<double>(j), 1.0});
    } else {
        throw UnknownPreset("unknown light preset '" + name + "'");
    }
    std::vector<PointLight> lights;
    lights.reserve(positions.size());
    for (const Vec3& p : positions)
        lights.push_back({scaled_to_radius(p, radius), {1.0, 1.0, 1.0}});
    return lights;
}

std::array<double, 3> shade_point(const Vec3& surface_point,
                                  const std::vector<PointLight>& lights,
                                  const Exponent& p, bool eps_lift) {
    const Vec3& normal = surface_point; // unit sphere at the origin

    std::vector<double> diffuse(lights.size());
    for (std::size_t i = 0; i < lights.size(); ++i) {
        const Vec3 to_light = normalized(sub(lights[i].position, surface_point));
        diffuse[i] = std::max(dot(normal, to_light), 0.0);
    }

    std::array<double, 3> out{};
    for (int c = 0; c < 3; ++c) {
        if (p.is_finite()) {
            const bool lift = eps_lift && p.value() < 0.0;
            HMAccumulator acc(p.value());
            for (std::size_t i = 0; i < lights.size(); ++i) {
                double x = diffuse[i] * lights[i].intensity[c];
                if (lift && x < kShadeEpsLift)
                    x = kShadeEpsLift;
                acc.add({pc_from_real(x), pc_from_real(1.0)});
            }
            out[c] = project(acc.extract()).amplitude();
        } else {
            std::vector<double> xs(lights.size());
            std::vector<double> ws(lights.size(), 1.0);
            for (std::size_t i = 0; i < lights.size(); ++i)
                xs[i] = diffuse[i] * lights[i].intensity[c];
            if (p.kind() == Exponent::Kind::PosInfinity)
                out[c] = hm_max(xs, ws);
            else if (p.kind() == Exponent::Kind::NegInfinity)
                out[c] = hm_min(xs, ws);
            else
                throw UnsupportedExponent(
                    "shade_point: geometric limit is not a shading operator");
        }
    }
    return out;
}

PhasedImage shade_diffuse(const Scene& scene, const Exponent& p) {
    if (scene.lights.empty())
        throw DomainError("shade_diffuse: scene has no lights");

    PhasedImage img(scene.size, scene.size, 3);
    for (int y = 0; y < scene.size; ++y) {
        for (int x = 0; x < scene.size; ++x) {
            const double u = ((x + 0.5) / scene.size * 2.0 - 1.0) * scene.extent;
            const double v = (1.0 - (y + 0.5) / scene.size * 2.0) * scene.extent;
            const double rr = u * u + v * v;
            if (rr > 1.0)
                continue;
            const Vec3 point{u, v, std::sqrt(1.0 - rr)};
            const std::array<double, 3> s =
                shade_point(point, scene.lights, p, scene.eps_lift);
            for (int c = 0; c < 3; ++c)
                img.amp(x, y, c) = static_cast<float>(s[c]);
        }
    }
    return img;
}

std::vector<PointLight> profile_lights() {
    return {{{0.0, 0.0, 3.0}, {1.0, 1.0, 1.0}},
            {{3.0 * std::sin(1.0), 0.0, 3.0 * std::cos(1.0)}, {1.0, 1.0, 1.0}}};
}

std::vector<double> terminator_profile(const std::vector<PointLight>& lights,
                                       const Exponent& p, int samples,
                                       bool eps_lift) {
    if (samples < 2)
        throw DomainError("terminator_profile: need at least two samples");
    std::vector<double> out(samples);
    for (int i = 0; i < samples; ++i) {
        const double t = kPi * i / (samples - 1);
        const Vec3 point{std::sin(t), 0.0, std::cos(t)};
        out[i] = shade_point(point, lights, p, eps_lift)[0];
    }
    return out;
}

double half_lambert(double cos_theta) { return (cos_theta + 1.0) / 2.0; }

double max_approx(double cos_theta, double p) {
    if (p < 1.0)
        throw DomainError("max_approx: p must be >= 1");
    const double num = std::pow(std::pow(cos_theta + 1.0, p) + 1.0, 1.0 / p) - 1.0;
    const double den = std::pow(std::pow(2.0, p) + 1.0, 1.0 / p) - 1.0;
    return num / den;
}

double shadow_ramp(double signed_distance, double width) {
    if (!(width > 0.0))
        throw DomainError("shadow_ramp: width must be positive");
    const double v = 0.5 - signed_distance / width;
    return std::clamp(v, 0.0, 1.0);
}

namespace {

std::array<double, 3> parse_triplet(const std::string& s) {
    std::array<double, 3> out{};
    char c1 = 0, c2 = 0;
    std::istringstream ss(s);
    if (!(ss >> out[0] >> c1 >> out[1] >> c2 >> out[2]) || c1 != ',' || c2 != ',')
        throw IoError("scene config: bad triplet '" + s + "'");
    return out;
}

} // namespace

SceneConfig parse_scene_config(std::istream& in) {
    SceneConfig cfg;
    double radius = Scene::kDefaultLightRadius;
    std::vector<std::pair<int, std::array<double, 3>>> intensities;

    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw IoError("scene config: expected key=value, got '" + line + "'");
        const std::string key = line.substr(0, eq);
        const std::string value = line.substr(eq + 1);

        if (key == "size")
            cfg.scene.size = std::stoi(value);
        else if (key == "preset")
            cfg.preset = value;
        else if (key == "radius")
            radius = std::stod(value);
        else if (key == "extent")
            cfg.scene.extent = std::stod(value);
        else if (key == "p")
            cfg.p = Exponent::parse(value);
        else if (key == "eps_lift")
            cfg.scene.eps_lift = (value == "true" || value == "1");
        else if (key.rfind("intensity", 0) == 0)
            intensities.emplace_back(std::stoi(key.substr(9)), parse_triplet(value));
        else
            throw IoError("scene config: unknown key '" + key + "'");
    }
    if (cfg.scene.size <= 0)
        throw IoError("scene config: size must be positive");

    cfg.scene.lights = light_preset(cfg.preset, radius);
    for (const auto& [index, rgb] : intensities) {
        if (index < 0 || index >= static_cast<int>(cfg.scene.lights.size()))
            throw IoError("scene config: intensity index out of range");
        cfg.scene.lights[index].intensity = rgb;
    }
    return cfg;
}

SceneConfig load_scene_config(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw IoError("cannot open scene config '" + path + "'");
    return parse_scene_config(f);
}

} // namespace hmc
