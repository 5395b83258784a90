#include "hmc/verify.hpp"

#include <cmath>
#include <random>

#include "hmc/affine.hpp"
#include "hmc/combine.hpp"
#include "hmc/filter.hpp"

namespace hmc {

namespace {

constexpr double kProjTol = 1e-10;  // relative, on projections
constexpr double kAccTol = 1e-12;   // relative, on accumulator sums
constexpr double kGridP[] = {-3.0, -1.0, -0.5, 0.5, 1.0, 2.0, 3.0};

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    // log-uniform over [1e-3, 1e3]
    double amplitude() {
        std::uniform_real_distribution<double> d(std::log(1e-3), std::log(1e3));
        return std::exp(d(gen));
    }
    double uniform(double lo, double hi) {
        std::uniform_real_distribution<double> d(lo, hi);
        return d(gen);
    }
};

HMElement random_point(Rng& rng) {
    return {pc_from_real(rng.amplitude()), pc_from_real(rng.amplitude())};
}

bool close_rel(double a, double b, double tol) {
    return std::fabs(a - b) <= tol * std::max({std::fabs(a), std::fabs(b), 1e-300});
}

PropertyReport associativity(Rng& rng, std::size_t cases) {
    PropertyReport r{"them2 associativity", 0, 0};
    for (double p : kGridP) {
        for (std::size_t i = 0; i < cases; ++i) {
            const HMElement v0 = random_point(rng);
            const HMElement v1 = random_point(rng);
            const HMElement v2 = random_point(rng);
            const double left =
                project(hm_combine(p, hm_combine(p, v0, v1), v2)).amplitude();
            const double right =
                project(hm_combine(p, v0, hm_combine(p, v1, v2))).amplitude();
            ++r.cases;
            if (!close_rel(left, right, kProjTol))
                ++r.failures;
        }
    }
    return r;
}

PropertyReport commutativity(Rng& rng, std::size_t cases) {
    PropertyReport r{"commutativity (bit-identical)", 0, 0};
    for (double p : kGridP) {
        for (std::size_t i = 0; i < cases; ++i) {
            const HMElement v0 = random_point(rng);
            const HMElement v1 = random_point(rng);
            ++r.cases;
            if (!(hm_combine(p, v0, v1) == hm_combine(p, v1, v0)))
                ++r.failures;
        }
    }
    return r;
}

PropertyReport identity_law(Rng& rng, std::size_t cases) {
    PropertyReport r{"them5 identity (field-for-field)", 0, 0};
    for (double p : kGridP) {
        for (std::size_t i = 0; i < cases; ++i) {
            const HMElement v = random_point(rng);
            ++r.cases;
            if (!(hm_combine(p, v, identity_element()) == v))
                ++r.failures;
        }
    }
    return r;
}

PropertyReport inverse_law(Rng& rng, std::size_t cases) {
    PropertyReport r{"them6 inverse (accumulator residual)", 0, 0};
    for (double p : kGridP) {
        for (std::size_t i = 0; i < cases; ++i) {
            const HMElement v = random_point(rng);
            for (unsigned n : {0u, 1u, 2u}) {
                HMAccumulator acc(p);
                acc.add(v);
                acc.add(hm_inverse(v, p, n));
                const double xp = std::pow(v.x.amplitude(), p);
                const double ap = std::pow(v.a.amplitude(), p);
                ++r.cases;
                if (std::abs(acc.x_sum()) > kAccTol * xp ||
                    std::abs(acc.a_sum()) > kAccTol * ap)
                    ++r.failures;
            }
        }
    }
    return r;
}

PropertyReport scale_invariance(Rng& rng, std::size_t cases) {
    PropertyReport r{"them3 scale invariance", 0, 0};
    for (double p : kGridP) {
        for (std::size_t i = 0; i < cases; ++i) {
            const HMElement v0 = random_point(rng);
            const HMElement v1 = random_point(rng);
            const double s = rng.amplitude();
            const PhasedComplex sc = pc_from_real(s);
            const HMElement w0{pc_mul(sc, v0.x), v0.a};
            const HMElement w1{pc_mul(sc, v1.x), v1.a};
            const double scaled = project(hm_combine(p, w0, w1)).amplitude();
            const double ref = s * project(hm_combine(p, v0, v1)).amplitude();
            ++r.cases;
            if (!close_rel(scaled, ref, kProjTol))
                ++r.failures;
        }
    }
    return r;
}

PropertyReport weak_averaging(Rng& rng, std::size_t cases) {
    PropertyReport r{"them1 weak averaging", 0, 0};
    for (std::size_t i = 0; i < cases; ++i) {
        const double p = kGridP[i % std::size(kGridP)];
        const double x0 = rng.amplitude();
        const double t = rng.uniform(1.0, 1000.0);
        const HMElement v0 = weighted_point(x0, rng.amplitude());
        const HMElement v1 = weighted_point(t * x0, rng.amplitude());
        const double ratio = project(hm_combine(p, v0, v1)).amplitude() / x0;
        ++r.cases;
        if (ratio < 1.0 - kAccTol || ratio > t * (1.0 + kAccTol))
            ++r.failures;
    }
    return r;
}

PropertyReport qualitative_similarity(Rng& rng, std::size_t cases) {
    PropertyReport r{"them4 monotonicity in z", 0, 0};
    for (std::size_t i = 0; i < cases; ++i) {
        const double p = kGridP[i % std::size(kGridP)];
        const HMElement v0 = random_point(rng);
        const double a1 = rng.amplitude();
        double z = rng.amplitude() * 1e-2;
        double prev = -1.0;
        bool ok = true;
        for (int step = 0; step < 8; ++step) {
            const double value =
                project(hm_combine(p, v0, weighted_point(z, a1))).amplitude();
            if (prev >= 0.0 && value < prev * (1.0 - kAccTol))
                ok = false;
            prev = value;
            z *= rng.uniform(1.5, 4.0);
        }
        ++r.cases;
        if (!ok)
            ++r.failures;
    }
    return r;
}

PropertyReport closed_forms(Rng& rng, std::size_t cases) {
    PropertyReport r{"closed forms p=1,-1 (classical_check)", 0, 0};
    for (std::size_t i = 0; i < cases; ++i) {
        const HMElement v0 = random_point(rng);
        const HMElement v1 = random_point(rng);
        for (double p : {1.0, -1.0}) {
            const double via_acc = project(hm_combine(p, v0, v1)).amplitude();
            const double direct = classical_check(p, v0, v1).amplitude();
            ++r.cases;
            if (!close_rel(via_acc, direct, kAccTol))
                ++r.failures;
        }
    }
    return r;
}

PropertyReport limit_consistency(Rng& rng, std::size_t cases) {
    PropertyReport r{"limit consistency (max/min/geometric)", 0, 0};
    const std::vector<double> ws{1.0, 1.0};
    for (std::size_t i = 0; i < cases; ++i) {
        const double x0 = rng.uniform(0.1, 1.0);
        const double x1 = rng.uniform(0.1, 1.0);
        const std::vector<double> xs{x0, x1};
        const HMElement v0 = weighted_point(x0, 1.0);
        const HMElement v1 = weighted_point(x1, 1.0);

        bool ok = true;
        // monotone approach of the max/min limits
        double prev_hi = -1.0, prev_lo = -1.0;
        for (double p : {2.0, 4.0, 8.0, 16.0, 32.0, 64.0}) {
            const double hi = project(hm_combine(p, v0, v1)).amplitude();
            const double lo = project(hm_combine(-p, v0, v1)).amplitude();
            const double dhi = std::fabs(hi - hm_max(xs, ws));
            const double dlo = std::fabs(lo - hm_min(xs, ws));
            if (prev_hi >= 0.0 &&
                (dhi > prev_hi + kAccTol || dlo > prev_lo + kAccTol))
                ok = false;
            prev_hi = dhi;
            prev_lo = dlo;
        }
        // small p approaches the 1/2-1/2 geometric mean
        const double near_zero =
            project(hm_combine(1e-4, v0, v1)).amplitude();
        if (std::fabs(near_zero - geometric_mean(xs, ws)) > 1e-3)
            ok = false;
        ++r.cases;
        if (!ok)
            ++r.failures;
    }
    return r;
}

PropertyReport branch_round_trip(Rng& rng, std::size_t cases) {
    PropertyReport r{"pc_pow branch round trip", 0, 0};
    for (std::size_t i = 0; i < cases; ++i) {
        const double p = kGridP[i % std::size(kGridP)];
        const PhasedComplex z(rng.amplitude(), rng.uniform(-20.0, 20.0));
        ++r.cases;
        // The phase branch must survive; amplitudes agree to rounding.
        const PhasedComplex back = pc_pow(pc_pow(z, p), 1.0 / p);
        if (!close_rel(back.amplitude(), z.amplitude(), 1e-14) ||
            !close_rel(back.phase(), z.phase(), 1e-14))
            ++r.failures;
    }
    return r;
}

PropertyReport affine_laws(Rng& rng, std::size_t cases) {
    PropertyReport r{"themA1-A3 addition algebra", 0, 0};
    for (std::size_t i = 0; i < cases; ++i) {
        bool ok = true;

        // partition of unity for positive weights
        std::vector<AffinePoint> pts;
        double wsum = 0.0;
        const int n = 2 + static_cast<int>(rng.uniform(0.0, 4.0));
        for (int j = 0; j < n; ++j) {
            pts.push_back({{rng.amplitude()}, rng.uniform(0.1, 10.0)});
            wsum += pts.back().weight;
        }
        double lo = pts[0].value[0], hi = pts[0].value[0], csum = 0.0;
        for (const AffinePoint& pt : pts) {
            lo = std::min(lo, pt.value[0]);
            hi = std::max(hi, pt.value[0]);
            const double coeff = pt.weight / wsum;
            if (coeff < -kAccTol || coeff > 1.0 + kAccTol)
                ok = false;
            csum += coeff;
        }
        if (std::fabs(csum - 1.0) > kAccTol)
            ok = false;
        const double proj = sum_project(pts)[0];
        if (proj < lo - kAccTol * std::fabs(lo) ||
            proj > hi + kAccTol * std::fabs(hi))
            ok = false;

        // grouping of integer-valued sums is exact
        std::vector<double> iv(3);
        for (double& v : iv)
            v = std::floor(rng.uniform(-100.0, 100.0));
        if ((iv[0] + iv[1]) + iv[2] != iv[0] + (iv[1] + iv[2]))
            ok = false;

        // inverse element cancels exactly
        const double w = rng.amplitude();
        const double x = rng.amplitude();
        if (x * w + (-x) * w != 0.0 || w + (-w) != 0.0)
            ok = false;

        ++r.cases;
        if (!ok)
            ++r.failures;
    }
    return r;
}

PropertyReport filter_oracles(Rng& rng, std::size_t cases) {
    PropertyReport r{"filter oracles (p=1, +/-64 limits, bounds)", 0, 0};
    const std::size_t images = std::min<std::size_t>(cases, 4);
    for (std::size_t i = 0; i < images; ++i) {
        PhasedImage img(24, 24, 1);
        for (float& a : img.amplitude)
            a = static_cast<float>(rng.uniform(0.1, 1.0));

        bool ok = true;
        const Kernel row3{0, 1, {1.0, 1.0, 1.0}};
        const Kernel box3 = box_kernel(1);

        // p = 1 equals direct normalized convolution
        const PhasedImage mean = hm_filter(img, box3, 1.0);
        // +/-64 within 2e-2 of the morphological limits
        const PhasedImage hi = hm_filter(img, row3, 64.0);
        const PhasedImage lo = hm_filter(img, row3, -64.0);
        const PhasedImage di = dilate(img, row3);
        const PhasedImage er = erode(img, row3);

        for (int y = 0; y < img.height && ok; ++y) {
            for (int x = 0; x < img.width && ok; ++x) {
                double acc = 0.0, mn = 2.0, mx = -1.0;
                for (int dy = -1; dy <= 1; ++dy)
                    for (int dx = -1; dx <= 1; ++dx) {
                        const int sx = std::clamp(x + dx, 0, img.width - 1);
                        const int sy = std::clamp(y + dy, 0, img.height - 1);
                        const double v = img.amp(sx, sy, 0);
                        acc += v;
                        mn = std::min(mn, v);
                        mx = std::max(mx, v);
                    }
                if (std::fabs(mean.amp(x, y, 0) - acc / 9.0) > 1e-7)
                    ok = false;
                if (mean.amp(x, y, 0) < mn - 1e-7 || mean.amp(x, y, 0) > mx + 1e-7)
                    ok = false; // weak averaging
                if (std::fabs(hi.amp(x, y, 0) - di.amp(x, y, 0)) > 2e-2 ||
                    std::fabs(lo.amp(x, y, 0) - er.amp(x, y, 0)) > 2e-2)
                    ok = false;
            }
        }

        // monotone in p for equal weights
        double prev = -1.0;
        for (double p : {-4.0, -2.0, -1.0, -0.5, 0.5, 1.0, 2.0, 3.0, 4.0}) {
            const double v = hm_filter(img, box3, p).amp(12, 12, 0);
            if (prev >= 0.0 && v < prev - 1e-9)
                ok = false;
            prev = v;
        }

        ++r.cases;
        if (!ok)
            ++r.failures;
    }
    return r;
}

} // namespace

std::vector<PropertyReport> run_property_suites(std::uint64_t seed,
                                                std::size_t cases) {
    Rng rng(seed);
    std::vector<PropertyReport> reports;
    reports.push_back(associativity(rng, cases));
    reports.push_back(commutativity(rng, cases));
    reports.push_back(identity_law(rng, cases));
    reports.push_back(inverse_law(rng, cases));
    reports.push_back(scale_invariance(rng, cases));
    reports.push_back(weak_averaging(rng, cases));
    reports.push_back(qualitative_similarity(rng, cases));
    reports.push_back(closed_forms(rng, cases));
    reports.push_back(limit_consistency(rng, std::min<std::size_t>(cases, 200)));
    reports.push_back(branch_round_trip(rng, cases));
    reports.push_back(affine_laws(rng, cases));
    reports.push_back(filter_oracles(rng, cases));
    return reports;
}

} // namespace hmc
