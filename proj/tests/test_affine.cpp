#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hmc/affine.hpp"
#include "hmc/combine.hpp"

using namespace hmc;

TEST_CASE("sum_project weighted averages") {
    const std::vector<AffinePoint> pts{{{3.0}, 2.0}, {{6.0}, 1.0}};
    CHECK(sum_project(pts)[0] == doctest::Approx(4.0).epsilon(1e-14));

    const std::vector<AffinePoint> single{{{7.5}, -2.0}};
    CHECK(sum_project(single)[0] == 7.5);

    const std::vector<AffinePoint> degenerate{{{1.0}, 1.0}, {{3.0}, -1.0}};
    CHECK_THROWS_AS(sum_project(degenerate), DegenerateWeight);
}

TEST_CASE("partition of unity for positive weights") {
    std::mt19937_64 gen(31);
    std::uniform_real_distribution<double> val(-50.0, 50.0);
    std::uniform_real_distribution<double> wgt(0.1, 10.0);
    for (int i = 0; i < 500; ++i) {
        std::vector<AffinePoint> pts;
        double wsum = 0.0, lo = 1e300, hi = -1e300;
        for (int j = 0; j < 4; ++j) {
            pts.push_back({{val(gen)}, wgt(gen)});
            wsum += pts.back().weight;
            lo = std::min(lo, pts.back().value[0]);
            hi = std::max(hi, pts.back().value[0]);
        }
        double csum = 0.0;
        for (const AffinePoint& p : pts) {
            const double coeff = p.weight / wsum;
            CHECK(coeff >= 0.0);
            CHECK(coeff <= 1.0);
            csum += coeff;
        }
        CHECK(csum == doctest::Approx(1.0).epsilon(1e-12));
        const double proj = sum_project(pts)[0];
        CHECK(proj >= lo - 1e-9);
        CHECK(proj <= hi + 1e-9);
    }
}

TEST_CASE("line_point parametrization") {
    const std::vector<double> x0{0.0, 0.0, 0.0};
    const std::vector<double> x1{10.0, 20.0, 30.0};
    CHECK(line_point(x0, x1, 1.0)[0] == 5.0);
    CHECK(line_point(x0, x1, 0.0) == x0);
    CHECK(line_point(x0, x1, -2.0)[0] == 20.0); // extrapolation past x1
    CHECK_THROWS_AS(line_point(x0, x1, -1.0), DegenerateWeight);
    CHECK_THROWS_AS(line_point(x0, x1, -1.0 + 1e-13), DegenerateWeight);
}

TEST_CASE("linear light fit reproduces the photo example") {
    const auto [a, b] = solve_linear_light(std::vector{214.0, 66.0, 90.0},
                                           std::vector{200.0, 132.0, 209.0});
    CHECK(a == std::vector{214.0, 66.0, 90.0});
    CHECK(b == std::vector{-14.0, 66.0, 119.0});

    const auto [a2, b2] = solve_linear_light(std::vector{5.0}, std::vector{5.0});
    CHECK(b2 == std::vector{0.0});

    const auto [a3, b3] = solve_linear_light(std::vector{0.0, 0.0, 0.0},
                                             std::vector{1.0, 2.0, 3.0});
    CHECK(b3 == std::vector{1.0, 2.0, 3.0});
}

TEST_CASE("bilinear light fit reproduces the photo example") {
    const std::vector<double> c00{117, 57, 2}, c01{230, 55, 33}, c10{113, 108, 67},
        c11{222, 100, 87};
    const BilinearModel m = solve_bilinear_lights(c00, c01, c10, c11);
    CHECK(m.dt1 == std::vector{113.0, -2.0, 31.0});
    CHECK(m.dt0 == std::vector{-4.0, 51.0, 65.0});
    CHECK(m.dt0t1 == std::vector{-4.0, -6.0, -11.0});

    // corners reproduce exactly
    CHECK(eval_bilinear(m, 0, 0) == c00);
    CHECK(eval_bilinear(m, 0, 1) == c01);
    CHECK(eval_bilinear(m, 1, 0) == c10);
    CHECK(eval_bilinear(m, 1, 1) == c11);

    const std::vector<double> mid = eval_bilinear(m, 0.5, 0.5);
    CHECK(mid[0] == doctest::Approx(170.5).epsilon(1e-14));
    CHECK(mid[1] == doctest::Approx(80.0).epsilon(1e-14));
    CHECK(mid[2] == doctest::Approx(47.25).epsilon(1e-14));
}

TEST_CASE("bilinear constant case") {
    const std::vector<double> c{9.0, 9.0, 9.0};
    const BilinearModel m = solve_bilinear_lights(c, c, c, c);
    CHECK(m.dt1 == std::vector{0.0, 0.0, 0.0});
    CHECK(m.dt0 == std::vector{0.0, 0.0, 0.0});
    CHECK(m.dt0t1 == std::vector{0.0, 0.0, 0.0});
}

TEST_CASE("bilinear round trip on random integer corners") {
    std::mt19937_64 gen(37);
    std::uniform_int_distribution<int> v(0, 255);
    for (int i = 0; i < 200; ++i) {
        auto corner = [&] {
            return std::vector<double>{double(v(gen)), double(v(gen)),
                                       double(v(gen))};
        };
        const auto c00 = corner(), c01 = corner(), c10 = corner(), c11 = corner();
        const BilinearModel m = solve_bilinear_lights(c00, c01, c10, c11);
        CHECK(eval_bilinear(m, 0, 0) == c00);
        CHECK(eval_bilinear(m, 0, 1) == c01);
        CHECK(eval_bilinear(m, 1, 0) == c10);
        CHECK(eval_bilinear(m, 1, 1) == c11);
    }
}

TEST_CASE("polynomial and barycentric bilinear forms agree") {
    std::mt19937_64 gen(41);
    std::uniform_real_distribution<double> v(-200.0, 200.0);
    auto corner = [&] { return std::vector<double>{v(gen), v(gen), v(gen)}; };
    const auto c00 = corner(), c01 = corner(), c10 = corner(), c11 = corner();
    const BilinearModel m = solve_bilinear_lights(c00, c01, c10, c11);
    for (int i = 0; i <= 10; ++i) {
        for (int j = 0; j <= 10; ++j) {
            const double t0 = i / 10.0, t1 = j / 10.0;
            const std::vector<double> poly = eval_bilinear(m, t0, t1);
            for (int c = 0; c < 3; ++c) {
                const double bary = (1 - t0) * (1 - t1) * c00[c] +
                                    (1 - t0) * t1 * c01[c] +
                                    t0 * (1 - t1) * c10[c] + t0 * t1 * c11[c];
                CHECK(std::fabs(poly[c] - bary) <=
                      1e-12 * std::max(1.0, std::fabs(bary)));
            }
        }
    }
}

TEST_CASE("addition grouping and inverse are exact on integers") {
    std::mt19937_64 gen(43);
    std::uniform_int_distribution<int> v(-1000, 1000);
    for (int i = 0; i < 500; ++i) {
        const double a = v(gen), b = v(gen), c = v(gen);
        CHECK((a + b) + c == a + (b + c));
        const double x = v(gen), w = v(gen);
        CHECK(x * w + (-x) * w == 0.0);
        CHECK(w + (-w) == 0.0);
    }
}

TEST_CASE("affine points convert to projective elements") {
    const AffinePoint p{{3.0, -2.0}, 2.0};
    const std::vector<HMElement> es = to_elements(p);
    REQUIRE(es.size() == 2);
    CHECK(project(es[0]) == PhasedComplex(3.0, 0.0));
    CHECK(project(es[1]).amplitude() == 2.0);
    CHECK(project(es[1]).phase() == kPi); // negative value, pi branch

    // negative weight puts both components on the pi branch; the phases
    // cancel under projection
    const AffinePoint q{{3.0}, -2.0};
    const std::vector<HMElement> qs = to_elements(q);
    CHECK(qs[0].x == PhasedComplex(6.0, kPi));
    CHECK(qs[0].a == PhasedComplex(2.0, kPi));
    CHECK(project(qs[0]) == PhasedComplex(3.0, 0.0));
}
