#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hmc/affine.hpp"
#include "hmc/combine.hpp"
#include "hmc/compositing.hpp"
#include "hmc/filter.hpp"
#include "hmc/image_io.hpp"
#include "hmc/shading.hpp"
#include "hmc/verify.hpp"

namespace {

namespace fs = std::filesystem;

// <stem>.amp.png / .amp.pfm, optional <stem>.phase.*, optional <stem>.w.pfm
std::string find_plane(const std::string& stem, const std::string& kind,
                       bool required) {
    for (const char* ext : {".png", ".pfm"}) {
        const std::string path = stem + "." + kind + ext;
        if (fs::exists(path))
            return path;
    }
    if (required)
        throw hmc::IoError("no " + kind + " plane found for stem '" + stem + "'");
    return {};
}

hmc::ImageWithAlpha load_stem(const std::string& stem) {
    const std::string amp = find_plane(stem, "amp", true);
    const std::string phase = find_plane(stem, "phase", false);
    hmc::ImageWithAlpha out;
    out.image = phase.empty() ? hmc::load_phased(amp)
                              : hmc::load_phased(amp, phase);
    const std::string wpath = stem + ".w.pfm";
    if (fs::exists(wpath)) {
        const hmc::Plane w = hmc::load_pfm(wpath);
        if (w.width != out.image.width || w.height != out.image.height ||
            w.channels != 1)
            throw hmc::DimensionMismatch("weight plane shape mismatch for '" +
                                         stem + "'");
        out.alpha = w.data;
    }
    return out;
}

void save_stem(const hmc::PhasedImage& img, const std::string& stem,
               bool with_phase, int bits) {
    const std::optional<std::string> phase =
        with_phase ? std::optional<std::string>(stem + ".phase.png")
                   : std::nullopt;
    hmc::save_phased(img, stem + ".amp.png", phase, bits);
}

bool has_nonzero_phase(const hmc::PhasedImage& img) {
    for (float v : img.phase)
        if (v != 0.0f)
            return true;
    return false;
}

std::vector<double> parse_color(const std::string& s) {
    std::vector<double> out;
    std::string tok;
    std::istringstream ss(s);
    while (std::getline(ss, tok, ','))
        out.push_back(std::stod(tok));
    if (out.size() != 3)
        throw hmc::IoError("expected an r,g,b triplet, got '" + s + "'");
    return out;
}

struct StageSpec {
    std::string kernel = "box:1";
    std::string p = "1";
};

StageSpec parse_stage(const std::string& s) {
    StageSpec spec;
    std::string tok;
    std::istringstream ss(s);
    while (std::getline(ss, tok, ',')) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw hmc::IoError("stage: expected key=value pairs, got '" + s + "'");
        const std::string key = tok.substr(0, eq);
        const std::string value = tok.substr(eq + 1);
        if (key == "p")
            spec.p = value;
        else if (key == "kernel")
            spec.kernel = value;
        else
            throw hmc::IoError("stage: unknown key '" + key + "'");
    }
    return spec;
}

int run_filter(const std::string& in_stem, const std::string& out_stem,
               const std::string& kernel_spec, const std::string& p_token,
               const std::vector<std::string>& stage_specs, int bits) {
    std::vector<hmc::FilterStage> stages;
    if (stage_specs.empty()) {
        stages.push_back(
            {hmc::kernel_from_spec(kernel_spec), hmc::Exponent::parse(p_token)});
    } else {
        for (const std::string& s : stage_specs) {
            const StageSpec spec = parse_stage(s);
            stages.push_back(
                {hmc::kernel_from_spec(spec.kernel), hmc::Exponent::parse(spec.p)});
        }
    }
    const hmc::ImageWithAlpha in = load_stem(in_stem);
    const hmc::PhasedImage out = hmc::pipeline(in.image, stages);
    save_stem(out, out_stem, has_nonzero_phase(in.image), bits);
    return 0;
}

int run_composite(const std::string& fg_stem, const std::string& bg_stem,
                  const std::string& mode, const std::string& out_stem,
                  double weight, const std::string& display, int bits) {
    const hmc::ImageWithAlpha fg = load_stem(fg_stem);
    const hmc::ImageWithAlpha bg = load_stem(bg_stem);

    hmc::ImageWithAlpha result;
    if (mode == "over") {
        result = hmc::over(fg, bg);
    } else if (mode == "addphase") {
        result.image = hmc::add_phase_composite(bg.image, fg.image, weight);
    } else if (mode == "add") {
        result = hmc::generalized_composite(hmc::BlendFunction::add(), fg, bg);
    } else if (mode == "mul") {
        result = hmc::generalized_composite(hmc::BlendFunction::mul(), fg, bg);
    } else if (mode == "max") {
        result = hmc::generalized_composite(hmc::BlendFunction::max(), fg, bg);
    } else if (mode == "min") {
        result = hmc::generalized_composite(hmc::BlendFunction::min(), fg, bg);
    } else if (mode.rfind("hm:", 0) == 0) {
        const hmc::Exponent p = hmc::Exponent::parse(mode.substr(3));
        result = hmc::generalized_composite(hmc::BlendFunction::hm(p.value()),
                                            fg, bg);
    } else {
        throw hmc::IoError("unknown composite mode '" + mode + "'");
    }

    hmc::PhasedImage out = result.image;
    if (display == "normalize") {
        float max = 0.0f;
        for (float v : out.amplitude)
            max = std::max(max, v);
        if (max > 0.0f)
            for (float& v : out.amplitude)
                v /= max;
    }
    save_stem(out, out_stem, has_nonzero_phase(out), bits);
    if (!result.alpha.empty()) {
        hmc::Plane w{out.width, out.height, 1, result.alpha};
        hmc::save_pfm(out_stem + ".w.pfm", w);
    }
    return 0;
}

int run_shade(const std::string& preset, const std::string& p_token, int size,
              const std::string& out_stem, const std::string& config_path,
              bool profile, bool eps_lift, int bits) {
    hmc::Scene scene;
    hmc::Exponent p = hmc::Exponent::parse(p_token);
    if (!config_path.empty()) {
        hmc::SceneConfig cfg = hmc::load_scene_config(config_path);
        scene = cfg.scene;
        p = cfg.p;
    } else {
        scene.lights = hmc::light_preset(preset);
    }
    if (size > 0)
        scene.size = size;
    if (eps_lift)
        scene.eps_lift = true;

    const hmc::PhasedImage img = hmc::shade_diffuse(scene, p);
    hmc::save_phased(img, out_stem + ".amp.png", std::nullopt, bits);

    if (profile) {
        const std::vector<double> prof =
            hmc::terminator_profile(hmc::profile_lights(), p, 512);
        std::ofstream csv(out_stem + ".profile.csv");
        csv << "t,shade\n";
        for (std::size_t i = 0; i < prof.size(); ++i)
            csv << hmc::kPi * i / (prof.size() - 1) << "," << prof[i] << "\n";
    }
    return 0;
}

int run_solve(const std::string& mode, const std::vector<std::string>& colors) {
    if (mode == "linear") {
        if (colors.size() != 2)
            throw hmc::IoError("linear mode needs exactly 2 colors");
        const auto [a, b] = hmc::solve_linear_light(parse_color(colors[0]),
                                                    parse_color(colors[1]));
        std::printf("a = %g,%g,%g\n", a[0], a[1], a[2]);
        std::printf("b = %g,%g,%g\n", b[0], b[1], b[2]);
        return 0;
    }
    if (mode == "bilinear") {
        if (colors.size() != 4)
            throw hmc::IoError("bilinear mode needs exactly 4 colors");
        const hmc::BilinearModel m = hmc::solve_bilinear_lights(
            parse_color(colors[0]), parse_color(colors[1]),
            parse_color(colors[2]), parse_color(colors[3]));
        std::printf("c00   = %g,%g,%g\n", m.c00[0], m.c00[1], m.c00[2]);
        std::printf("dt1   = %g,%g,%g\n", m.dt1[0], m.dt1[1], m.dt1[2]);
        std::printf("dt0   = %g,%g,%g\n", m.dt0[0], m.dt0[1], m.dt0[2]);
        std::printf("dt0t1 = %g,%g,%g\n", m.dt0t1[0], m.dt0t1[1], m.dt0t1[2]);
        return 0;
    }
    throw hmc::IoError("unknown solve mode '" + mode + "'");
}

int run_verify_cmd(std::uint64_t seed, std::size_t cases) {
    const std::vector<hmc::PropertyReport> reports =
        hmc::run_property_suites(seed, cases);
    bool all_ok = true;
    for (const hmc::PropertyReport& r : reports) {
        std::printf("%-42s %s (%zu/%zu)\n", r.name.c_str(),
                    r.passed() ? "pass" : "FAIL", r.cases - r.failures, r.cases);
        all_ok = all_ok && r.passed();
    }
    return all_ok ? 0 : 2;
}

int run_convert(const std::string& in_stem, const std::string& out_stem,
                const std::string& display, int bits, bool pfm) {
    const hmc::ImageWithAlpha in = load_stem(in_stem);
    if (pfm) {
        hmc::save_phased(in.image, out_stem + ".amp.pfm",
                         has_nonzero_phase(in.image)
                             ? std::optional<std::string>(out_stem + ".phase.pfm")
                             : std::nullopt);
        return 0;
    }
    hmc::PhasedImage img = in.image;
    const std::vector<std::uint8_t> shown =
        hmc::to_display(img, hmc::parse_display_mode(display));
    for (std::size_t i = 0; i < img.amplitude.size(); ++i)
        img.amplitude[i] = static_cast<float>(shown[i]) / 255.0f;
    save_stem(img, out_stem, has_nonzero_phase(img), bits);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Holder-Minkowski color algebra pipelines"};
    app.require_subcommand(1);

    // filter
    auto* filter = app.add_subcommand("filter", "generalized convolution filter");
    std::string f_in, f_out, f_kernel = "box:1", f_p = "1";
    std::vector<std::string> f_stages;
    int f_bits = 8;
    filter->add_option("--in", f_in, "input stem")->required();
    filter->add_option("--out", f_out, "output stem")->required();
    filter->add_option("--kernel", f_kernel, "kernel file or box:N");
    filter->add_option("--p", f_p, "exponent (real, inf, -inf)");
    filter->add_option("--stage", f_stages,
                       "pipeline stage 'p=..,kernel=..' (repeatable)");
    filter->add_option("--bits", f_bits, "output bit depth (8 or 16)");

    // composite
    auto* comp = app.add_subcommand("composite", "combine two images");
    std::string c_fg, c_bg, c_out, c_mode = "over", c_display = "clamp";
    double c_weight = 0.5;
    int c_bits = 8;
    comp->add_option("--fg", c_fg, "foreground stem")->required();
    comp->add_option("--bg", c_bg, "background stem")->required();
    comp->add_option("--out", c_out, "output stem")->required();
    comp->add_option("--mode", c_mode, "over|addphase|hm:<p>|add|mul|max|min");
    comp->add_option("--weight", c_weight, "weight for addphase");
    comp->add_option("--display", c_display, "clamp|normalize");
    comp->add_option("--bits", c_bits, "output bit depth");

    // shade
    auto* shade = app.add_subcommand("shade", "render the lit sphere");
    std::string s_preset = "tetrahedron", s_p = "1", s_out, s_config;
    int s_size = 0, s_bits = 8;
    bool s_profile = false, s_lift = false;
    shade->add_option("--preset", s_preset, "tetrahedron|octahedron|grid3x3");
    shade->add_option("--p", s_p, "exponent (real, inf, -inf)");
    shade->add_option("--size", s_size, "image size in pixels");
    shade->add_option("--out", s_out, "output stem")->required();
    shade->add_option("--config", s_config, "key=value scene file");
    shade->add_option("--bits", s_bits, "output bit depth");
    shade->add_flag("--profile", s_profile, "write the terminator profile CSV");
    shade->add_flag("--eps-lift", s_lift, "lift zero diffuse terms under p<0");

    // solve
    auto* solve = app.add_subcommand("solve", "fit light contributions");
    std::string so_mode = "linear";
    std::vector<std::string> so_colors;
    solve->add_option("--mode", so_mode, "linear|bilinear");
    solve->add_option("--colors", so_colors, "r,g,b triplets")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "run the property suites");
    std::uint64_t v_seed = 1;
    std::size_t v_cases = 1000;
    verify->add_option("--seed", v_seed, "RNG seed");
    verify->add_option("--cases", v_cases, "cases per property");

    // convert
    auto* convert = app.add_subcommand("convert", "re-encode image planes");
    std::string cv_in, cv_out, cv_display = "clamp";
    int cv_bits = 8;
    bool cv_pfm = false;
    convert->add_option("--in", cv_in, "input stem")->required();
    convert->add_option("--out", cv_out, "output stem")->required();
    convert->add_option("--display", cv_display, "clamp|normalize|magnitude");
    convert->add_option("--bits", cv_bits, "output bit depth");
    convert->add_flag("--pfm", cv_pfm, "write lossless PFM planes");

    CLI11_PARSE(app, argc, argv);

    try {
        if (filter->parsed())
            return run_filter(f_in, f_out, f_kernel, f_p, f_stages, f_bits);
        if (comp->parsed())
            return run_composite(c_fg, c_bg, c_mode, c_out, c_weight, c_display,
                                 c_bits);
        if (shade->parsed())
            return run_shade(s_preset, s_p, s_size, s_out, s_config, s_profile,
                             s_lift, s_bits);
        if (solve->parsed())
            return run_solve(so_mode, so_colors);
        if (verify->parsed())
            return run_verify_cmd(v_seed, v_cases);
        if (convert->parsed())
            return run_convert(cv_in, cv_out, cv_display, cv_bits, cv_pfm);
    } catch (const hmc::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
