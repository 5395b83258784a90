#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "hmc/exponent.hpp"
#include "hmc/image.hpp"

namespace hmc {

using Vec3 = std::array<double, 3>;

struct PointLight {
    Vec3 position{0.0, 0.0, 0.0};
    std::array<double, 3> intensity{1.0, 1.0, 1.0};
};

// Unit sphere at the origin under an orthographic camera on +z. The lights
// sit at radius `light_radius`; `extent` is the half-width of the image
// plane in scene units.
struct Scene {
    std::vector<PointLight> lights;
    int size = 256;
    double extent = 1.1;
    bool eps_lift = false; // lift zero diffuse terms before negative powers

    static constexpr double kDefaultLightRadius = 3.0;
};

// Built-in light rigs: tetrahedron (4), octahedron (6), grid3x3 (9),
// unit intensity, scaled to the given radius from the origin.
std::vector<PointLight> light_preset(const std::string& name,
                                     double radius = Scene::kDefaultLightRadius);

// Same epsilon as the filter's negative-p lift.
inline constexpr double kShadeEpsLift = 1e-6;

// Diffuse shade of one sphere point: d_i = max(n.l_i, 0) per light, combined
// as equal-weight points through the projected H_p (or the max/min limits).
std::array<double, 3> shade_point(const Vec3& surface_point,
                                  const std::vector<PointLight>& lights,
                                  const Exponent& p, bool eps_lift);

// Full render; background pixels are zero. Three channels.
PhasedImage shade_diffuse(const Scene& scene, const Exponent& p);

// Shade sampled along the great circle n(t) = (sin t, 0, cos t), t in
// [0, pi], channel 0. Exposes the terminator behavior as a 1D profile.
std::vector<double> terminator_profile(const std::vector<PointLight>& lights,
                                       const Exponent& p, int samples,
                                       bool eps_lift = true);

// The two-light rig the terminator profile is studied with: lights at
// 3*(0,0,1) and 3*(sin 1, 0, cos 1).
std::vector<PointLight> profile_lights();

// (cos theta + 1) / 2; identical to projecting H_p((cos theta + 1, 2), 0)
// for every p since the identity cancels.
double half_lambert(double cos_theta);

// (((cos theta + 1)^p + 1)^{1/p} - 1) / ((2^p + 1)^{1/p} - 1), a smooth
// approximation of max(cos theta, 0) that sharpens as p grows.
double max_approx(double cos_theta, double p);

// clamp(0.5 - d/width, 0, 1): linear opacity ramp across a shadow boundary,
// crossing one half at distance zero.
double shadow_ramp(double signed_distance, double width);

// key=value scene description: size, preset, radius, extent, p, eps_lift,
// intensityN=r,g,b. Returns the scene plus the exponent it named.
struct SceneConfig {
    Scene scene;
    Exponent p = Exponent::finite(1.0);
    std::string preset = "tetrahedron";
};

SceneConfig parse_scene_config(std::istream& in);
SceneConfig load_scene_config(const std::string& path);

} // namespace hmc
