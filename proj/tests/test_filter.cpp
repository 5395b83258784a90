#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "hmc/filter.hpp"
#include "hmc/phased_complex.hpp"

using namespace hmc;

namespace {

PhasedImage random_image(std::mt19937_64& gen, int w, int h, double lo, double hi) {
    PhasedImage img(w, h, 1);
    std::uniform_real_distribution<double> amp(lo, hi);
    for (float& a : img.amplitude)
        a = static_cast<float>(amp(gen));
    return img;
}

PhasedImage disk_image(int size, double radius) {
    PhasedImage img(size, size, 1);
    const double c = (size - 1) / 2.0;
    for (int y = 0; y < size; ++y)
        for (int x = 0; x < size; ++x)
            img.amp(x, y, 0) =
                (x - c) * (x - c) + (y - c) * (y - c) <= radius * radius ? 1.0f
                                                                         : 0.0f;
    return img;
}

// brute-force weighted neighborhood reduction with clamped borders
template <typename Fold>
double neighborhood(const PhasedImage& img, const Kernel& k, int x, int y,
                    Fold fold) {
    bool first = true;
    double acc = 0.0;
    for (int i = 0; i < k.rows(); ++i)
        for (int j = 0; j < k.cols(); ++j) {
            const double w = k.at(i, j);
            if (w <= 0.0)
                continue;
            const int sx = std::clamp(x + j - k.m, 0, img.width - 1);
            const int sy = std::clamp(y + i - k.n, 0, img.height - 1);
            const double v = w * img.amp(sx, sy, 0);
            acc = first ? v : fold(acc, v);
            first = false;
        }
    return acc;
}

} // namespace

TEST_CASE("box kernels") {
    const Kernel k = box_kernel(7);
    CHECK(k.rows() == 15);
    CHECK(k.cols() == 15);
    for (double w : k.weights)
        CHECK(w == 1.0);
    CHECK(box_kernel(0).weights == std::vector{1.0});
    CHECK(box_kernel(1).weights.size() == 9);
    CHECK_THROWS_AS(box_kernel(-1), DomainError);
}

TEST_CASE("kernel text format") {
    std::istringstream in("1 0\n0.5\n1\n0.25\n");
    const Kernel k = parse_kernel(in);
    CHECK(k.n == 1);
    CHECK(k.m == 0);
    CHECK(k.weights == std::vector{0.5, 1.0, 0.25});

    std::istringstream bad("1 1\n1 1 1\n");
    CHECK_THROWS_AS(parse_kernel(bad), IoError);
    std::istringstream negative("0 0\n-1\n");
    CHECK_THROWS_AS(parse_kernel(negative), DomainError);
    std::istringstream zero("0 0\n0\n");
    CHECK_THROWS_AS(parse_kernel(zero), DomainError);
}

TEST_CASE("hm_filter spot values") {
    // 3x3 box over a single bright pixel
    PhasedImage img(3, 3, 1);
    img.amp(1, 1, 0) = 9.0f;
    const Kernel k = box_kernel(1);
    CHECK(hm_filter(img, k, 1.0).amp(1, 1, 0) == doctest::Approx(1.0));
    CHECK(hm_filter(img, k, 2.0).amp(1, 1, 0) == doctest::Approx(3.0));
}

TEST_CASE("constant images are fixed points") {
    std::mt19937_64 gen(61);
    std::uniform_real_distribution<double> amp(0.05, 2.0);
    for (int i = 0; i < 20; ++i) {
        const float c = static_cast<float>(amp(gen));
        PhasedImage img(9, 7, 1);
        for (float& a : img.amplitude)
            a = c;
        for (double p : {-4.0, -1.0, -0.5, 0.5, 1.0, 2.0, 4.0}) {
            const PhasedImage out = hm_filter(img, box_kernel(2), p);
            for (float v : out.amplitude)
                CHECK(std::fabs(v - c) <= 1e-10 * c + 1e-10);
        }
    }
}

TEST_CASE("p=1 equals direct normalized convolution") {
    std::mt19937_64 gen(67);
    const PhasedImage img = random_image(gen, 16, 16, 0.0, 1.0);
    Kernel k = box_kernel(1);
    k.weights = {0.0, 1.0, 0.0, 2.0, 4.0, 2.0, 0.0, 1.0, 0.0};
    const PhasedImage out = hm_filter(img, k, 1.0);
    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x) {
            double num = 0.0, den = 0.0;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    const double w = k.at(i, j);
                    if (w <= 0.0)
                        continue;
                    const int sx = std::clamp(x + j - 1, 0, img.width - 1);
                    const int sy = std::clamp(y + i - 1, 0, img.height - 1);
                    num += w * img.amp(sx, sy, 0);
                    den += w;
                }
            CHECK(std::fabs(out.amp(x, y, 0) - num / den) <= 1e-7);
        }
}

TEST_CASE("dilate and erode match brute force") {
    const PhasedImage disk = disk_image(32, 9.0);
    const Kernel k = box_kernel(1);
    const PhasedImage grown = dilate(disk, k);
    const PhasedImage shrunk = erode(disk, k);
    auto dmax = [](double a, double b) { return std::max(a, b); };
    auto dmin = [](double a, double b) { return std::min(a, b); };
    for (int y = 0; y < disk.height; ++y)
        for (int x = 0; x < disk.width; ++x) {
            CHECK(grown.amp(x, y, 0) == neighborhood(disk, k, x, y, dmax));
            CHECK(shrunk.amp(x, y, 0) == neighborhood(disk, k, x, y, dmin));
        }
}

TEST_CASE("morphological weight normalization") {
    PhasedImage ones(5, 5, 1);
    for (float& a : ones.amplitude)
        a = 1.0f;
    Kernel k = box_kernel(1);
    k.weights[4] = 3.0; // center
    const PhasedImage out = dilate(ones, k);
    for (float v : out.amplitude)
        CHECK(v == doctest::Approx(1.0)); // max(3*1, 1*1)/3

    // erode then dilate leaves a constant image untouched
    const PhasedImage round =
        dilate(erode(ones, box_kernel(1)), box_kernel(1));
    for (float v : round.amplitude)
        CHECK(v == 1.0f);
}

TEST_CASE("large |p| approaches the morphological limits") {
    std::mt19937_64 gen(71);
    const PhasedImage img = random_image(gen, 64, 64, 0.1, 1.0);
    const Kernel row3{0, 1, {1.0, 1.0, 1.0}};
    const PhasedImage hi = hm_filter(img, row3, 64.0);
    const PhasedImage lo = hm_filter(img, row3, -64.0);
    const PhasedImage di = dilate(img, row3);
    const PhasedImage er = erode(img, row3);
    for (std::size_t i = 0; i < img.plane_size(); ++i) {
        CHECK(std::fabs(hi.amplitude[i] - di.amplitude[i]) <= 2e-2);
        CHECK(std::fabs(lo.amplitude[i] - er.amplitude[i]) <= 2e-2);
    }
}

TEST_CASE("filtered values are monotone in p and stay in range") {
    std::mt19937_64 gen(73);
    const PhasedImage img = random_image(gen, 12, 12, 0.0, 1.0);
    const Kernel k = box_kernel(1);
    auto dmax = [](double a, double b) { return std::max(a, b); };
    auto dmin = [](double a, double b) { return std::min(a, b); };

    std::vector<PhasedImage> sweep;
    for (double p : {-4.0, -2.0, -1.0, -0.5, 0.5, 1.0, 2.0, 3.0, 4.0})
        sweep.push_back(hm_filter(img, k, p));

    for (int y = 0; y < img.height; ++y)
        for (int x = 0; x < img.width; ++x) {
            for (std::size_t s = 1; s < sweep.size(); ++s)
                CHECK(sweep[s].amp(x, y, 0) >= sweep[s - 1].amp(x, y, 0) - 1e-6f);
            const double mn = neighborhood(img, k, x, y, dmin);
            const double mx = neighborhood(img, k, x, y, dmax);
            for (const PhasedImage& out : sweep) {
                CHECK(out.amp(x, y, 0) >= mn - 1e-6);
                CHECK(out.amp(x, y, 0) <= mx + 1e-6);
            }
        }
}

TEST_CASE("negative p lifts zeros instead of poling") {
    const PhasedImage disk = disk_image(16, 5.0);
    const PhasedImage out = hm_filter(disk, box_kernel(1), -1.0);
    for (float v : out.amplitude)
        CHECK(std::isfinite(v));
}

TEST_CASE("phase-aware filtering cancels opposite phases") {
    PhasedImage img(3, 1, 1);
    img.amplitude = {1.0f, 0.0f, 1.0f};
    img.phase = {0.0f, 0.0f, static_cast<float>(kPi)};
    const Kernel row3{0, 1, {1.0, 1.0, 1.0}};
    // p=1 at the middle pixel: (e^{i0} + 0 + e^{i pi})/3 ~ 0
    const PhasedImage out = hm_filter(img, row3, 1.0);
    CHECK(out.amp(1, 0, 0) <= 1e-7f);
}

TEST_CASE("pipelines") {
    const PhasedImage disk = disk_image(64, 20.0);

    // empty pipeline and the 1x1 kernel stage are identities
    CHECK(pipeline(disk, {}).amplitude == disk.amplitude);
    const PhasedImage unit =
        pipeline(disk, {{box_kernel(0), Exponent::finite(2.0)}});
    for (std::size_t i = 0; i < disk.plane_size(); ++i)
        CHECK(unit.amplitude[i] == doctest::Approx(disk.amplitude[i]));

    // the preferred anti-aliasing recipe: p=1 then p=-1
    const std::vector<FilterStage> recipe{
        {box_kernel(7), Exponent::finite(1.0)},
        {box_kernel(7), Exponent::finite(-1.0)}};
    const PhasedImage smoothed = pipeline(disk, recipe);
    REQUIRE(smoothed.same_shape(disk));
    // interior and far exterior survive; the boundary is softened
    const int c = 32;
    CHECK(smoothed.amp(c, c, 0) == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(smoothed.amp(0, 0, 0) <= 1e-3);
    bool has_intermediate = false;
    for (int x = 0; x < 64; ++x) {
        const float v = smoothed.amp(x, c, 0);
        if (v > 0.1f && v < 0.9f)
            has_intermediate = true;
    }
    CHECK(has_intermediate);

    // symbolic stages dispatch to the morphological ops
    const PhasedImage viainf =
        pipeline(disk, {{box_kernel(1), Exponent::pos_infinity()}});
    CHECK(viainf.amplitude == dilate(disk, box_kernel(1)).amplitude);
    const PhasedImage vianinf =
        pipeline(disk, {{box_kernel(1), Exponent::neg_infinity()}});
    CHECK(vianinf.amplitude == erode(disk, box_kernel(1)).amplitude);

    CHECK_THROWS_AS(pipeline(disk, {{box_kernel(1), Exponent::geometric()}}),
                    UnsupportedExponent);
}
