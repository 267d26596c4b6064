// Unit tests for the trigonometric sawtooth approximant and its cosine
// majorant: coefficient closed forms, the rho factor, the pointwise bound,
// and convergence as the degree grows.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "lamelat/vaaler.hpp"
#include "oracles.hpp"

using namespace lamelat;

TEST_CASE("sawtooth is the centered fractional part") {
    CHECK(sawtooth(0.25) == doctest::Approx(-0.25).epsilon(1e-15));
    CHECK(sawtooth(0.75) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(sawtooth(1.25) == doctest::Approx(-0.25).epsilon(1e-15));
    CHECK(sawtooth(-0.25) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(sawtooth(3.0) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(sawtooth(0.0) == doctest::Approx(-0.5).epsilon(1e-15));
    // periodicity
    for (double w : {0.1, 0.6, 0.999}) {
        CHECK(sawtooth(w) == doctest::Approx(sawtooth(w + 5.0)).epsilon(1e-12));
        CHECK(sawtooth(w) == doctest::Approx(sawtooth(w - 3.0)).epsilon(1e-12));
    }
    // oracle cross-check on a grid
    for (int i = 1; i < 40; ++i) {
        const double w = 0.025 * (double)i;
        CHECK(sawtooth(w) ==
              doctest::Approx(oracle::sawtooth_ref(w)).epsilon(1e-14).scale(1.0));
    }
}

TEST_CASE("vaaler_rho: closed form, frozen values, branch continuity") {
    // rho(1/4) = 3 pi / 16 + 1/4 (cot(pi/4) = 1)
    CHECK(vaaler_rho(0.25) ==
          doctest::Approx(3.0 * oracle::kPi / 16.0 + 0.25).epsilon(1e-14));
    CHECK(vaaler_rho(0.25) ==
          doctest::Approx(oracle::frozen::rho_quarter).epsilon(1e-14));
    // near the endpoints, where pi xi (1-xi) cot(pi xi) needs care
    CHECK(vaaler_rho(1e-4) ==
          doctest::Approx(oracle::frozen::rho_1em4).epsilon(1e-13));
    CHECK(std::fabs(vaaler_rho(0.999) - oracle::frozen::rho_0_999) < 1e-12);
    // the reflected value is ~3e-14; evaluating 1 - zcot quantizes at ulp(1)
    CHECK(std::fabs(vaaler_rho(1.0 - 1e-7) - oracle::frozen::rho_1m1em7) < 1e-15);
    // limits: rho(0+) = 1, rho(1-) = 0
    CHECK(vaaler_rho(1e-9) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(vaaler_rho(1.0 - 1e-9) == doctest::Approx(0.0).scale(1e-9));
    // continuity across any internal branch switch
    for (double s : {1e-3, 1e-2, 0.1}) {
        const double lo = vaaler_rho(s - 1e-10);
        const double hi = vaaler_rho(s + 1e-10);
        CHECK(std::fabs(hi - lo) < 1e-8);
    }
}

TEST_CASE("coefficients at H=2 have elementary closed forms") {
    const std::vector<double> a = build_vaaler(2, CoefKind::alpha);
    const std::vector<double> b = build_vaaler(2, CoefKind::beta);
    REQUIRE(a.size() == 1);
    REQUIRE(b.size() == 1);
    // alpha_1 = rho(1/2) / pi = (1/2) / pi
    CHECK(a[0] == doctest::Approx(0.5 / oracle::kPi).epsilon(1e-14));
    // beta_1 = (1/H)(1 - h/H) = 1/4
    CHECK(b[0] == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("coefficient arrays have size H-1 and sane signs") {
    for (int H : {2, 5, 33, 400}) {
        const std::vector<double> a = build_vaaler(H, CoefKind::alpha);
        const std::vector<double> b = build_vaaler(H, CoefKind::beta);
        CHECK((int)a.size() == H - 1);
        CHECK((int)b.size() == H - 1);
        for (int h = 1; h < H; ++h) {
            CHECK(a[h - 1] > 0.0);  // rho > 0 on (0,1)
            CHECK(b[h - 1] > 0.0);
            // beta is exactly the Fejer triangle
            CHECK(b[h - 1] ==
                  doctest::Approx((1.0 - (double)h / H) / H).epsilon(1e-14));
        }
    }
    CHECK_THROWS_AS(build_vaaler(1, CoefKind::alpha), std::invalid_argument);
    CHECK_THROWS_AS(build_vaaler(0, CoefKind::beta), std::invalid_argument);
}

TEST_CASE("vaaler_eval matches a hand-rolled series evaluation") {
    const int H = 7;
    const std::vector<double> a = build_vaaler(H, CoefKind::alpha);
    const std::vector<double> b = build_vaaler(H, CoefKind::beta);
    for (double w : {0.05, 0.31, 0.5, 0.77, 0.99}) {
        double apx = 0.0, maj = 0.0;
        for (int h = 1; h < H; ++h) {
            apx -= a[h - 1] * std::sin(2.0 * oracle::kPi * h * w);
            maj += b[h - 1] * std::cos(2.0 * oracle::kPi * h * w);
        }
        CHECK(vaaler_eval(w, H, CoefKind::alpha) ==
              doctest::Approx(apx).epsilon(1e-12).scale(1.0));
        CHECK(vaaler_eval(w, H, CoefKind::beta) ==
              doctest::Approx(maj).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("majorant bound holds pointwise; equality at integers") {
    std::mt19937_64 rng(99);
    for (int H : {2, 6, 31, 128}) {
        for (int i = 0; i < 2000; ++i) {
            const double w = (double)(rng() >> 11) * 0x1.0p-53;
            const double err = std::fabs(sawtooth(w) - vaaler_eval(w, H, CoefKind::alpha));
            const double bound = vaaler_eval(w, H, CoefKind::beta) + 0.5 / H;
            CHECK(err <= bound + 1e-12);
        }
        // w = 0: both sides are exactly 1/2
        CHECK(std::fabs(sawtooth(0.0) - vaaler_eval(0.0, H, CoefKind::alpha)) ==
              doctest::Approx(0.5).epsilon(1e-13));
        CHECK(vaaler_eval(0.0, H, CoefKind::beta) + 0.5 / H ==
              doctest::Approx(0.5).epsilon(1e-13));
    }
}

TEST_CASE("majorant bound equals the Fejer kernel closed form") {
    // beta series + 1/(2H) = (1/(2H^2)) (sin(pi H w) / sin(pi w))^2
    for (int H : {3, 8, 20}) {
        for (double w : {0.13, 0.4, 0.77}) {
            const double lhs = vaaler_eval(w, H, CoefKind::beta) + 0.5 / H;
            const double s = std::sin(oracle::kPi * H * w) / std::sin(oracle::kPi * w);
            CHECK(lhs == doctest::Approx(s * s / (2.0 * H * H)).epsilon(1e-11).scale(1.0));
        }
    }
}

TEST_CASE("mean approximation error decreases as the degree grows") {
    auto mae = [](int H) {
        double acc = 0.0;
        const int n = 2001;
        for (int i = 1; i < n; ++i) {
            const double w = (double)i / n;
            acc += std::fabs(sawtooth(w) - vaaler_eval(w, H, CoefKind::alpha));
        }
        return acc / (n - 1);
    };
    const double e2 = mae(2), e8 = mae(8), e32 = mae(32), e128 = mae(128);
    CHECK(e8 < e2);
    CHECK(e32 < e8);
    CHECK(e128 < e32);
    CHECK(e128 < 0.01);
}
