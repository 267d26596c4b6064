// Unit tests for the closed-form constants (disc area, body volume), the
// generalized Bessel function and its asymptotic form, the oscillatory psi
// series, and the two main terms of the count asymptotics.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "lamelat/quadrature.hpp"
#include "lamelat/special_fn.hpp"
#include "oracles.hpp"

using namespace lamelat;

TEST_CASE("lame_area: circle limit and frozen high-precision values") {
    CHECK(lame_area(2.0) == doctest::Approx(oracle::kPi).epsilon(1e-14));
    CHECK(lame_area(3.0) ==
          doctest::Approx(oracle::frozen::lame_area_3).epsilon(1e-14));
    CHECK(lame_area(4.0) ==
          doctest::Approx(oracle::frozen::lame_area_4).epsilon(1e-14));
    CHECK(lame_area(2.5) ==
          doctest::Approx(oracle::frozen::lame_area_2_5).epsilon(1e-14));
    // k -> infinity limit is the full square of side 2
    CHECK(lame_area(500.0) == doctest::Approx(4.0).epsilon(1e-2));
}

TEST_CASE("body_volume: ball limit and frozen values") {
    CHECK(body_volume(1, 2) ==
          doctest::Approx(4.0 * oracle::kPi / 3.0).epsilon(1e-14));
    CHECK(body_volume(2, 3) ==
          doctest::Approx(oracle::frozen::volume_2_3).epsilon(1e-14));
    CHECK(body_volume(1, 4) ==
          doctest::Approx(oracle::frozen::volume_1_4).epsilon(1e-14));
    // Gamma-free quadrature oracle on a non-integral pair
    const double q = oracle::volume_quadrature(1.5, 2.5);
    CHECK(body_volume(1.5, 2.5) == doctest::Approx(q).epsilon(1e-8));
}

TEST_CASE("gen_bessel at eta=2 reproduces the classical Bessel function") {
    for (double x : {0.3, 1.0, 2.0, 5.5, 11.0, 17.3}) {
        CHECK(gen_bessel(BesselParams(2.0, 0.5), x) ==
              doctest::Approx(oracle::bessel_j_half(x)).epsilon(1e-11).scale(1.0));
        CHECK(gen_bessel(BesselParams(2.0, 1.0), x) ==
              doctest::Approx(std::cyl_bessel_j(1.0, x)).epsilon(1e-11).scale(1.0));
        CHECK(gen_bessel(BesselParams(2.0, 1.5), x) ==
              doctest::Approx(oracle::bessel_j_three_halves(x))
                  .epsilon(1e-11)
                  .scale(1.0));
    }
    CHECK(gen_bessel(BesselParams(2.0, 1.0), 1.0) ==
          doctest::Approx(oracle::frozen::j1_at_1).epsilon(1e-13));
    // frozen non-classical spot (eta=3, nu=2/3)
    CHECK(gen_bessel(BesselParams(3.0, 2.0 / 3.0), 5.0) ==
          doctest::Approx(oracle::frozen::gen_bessel_3_23_5).epsilon(1e-11));
    // x = 0: the (x/2)^{eta nu/2} prefactor kills the value
    CHECK(gen_bessel(BesselParams(2.0, 1.0), 0.0) == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("gen_bessel_asym matches the classical leading form at eta=2") {
    // for nu=1, eta=2 the formula collapses to sqrt(2/(pi y)) sin(y - 3pi/4)...
    // mu = 1/2, so the phase is y - pi/4 and the amplitude sqrt(2/(pi y))
    for (double y : {20.0, 33.3, 61.0}) {
        const double ref =
            std::sqrt(2.0 / (oracle::kPi * y)) * std::sin(y - oracle::kPi / 4.0);
        CHECK(gen_bessel_asym(BesselParams(2.0, 1.0), y) ==
              doctest::Approx(ref).epsilon(1e-13).scale(1.0));
    }
}

TEST_CASE("asymptotic form converges to the integral form like 1/y") {
    // (eta, nu) = (3, 2/3): y |J - J_asym| stays small and shrinks
    const BesselParams bp(3.0, 2.0 / 3.0);
    double worst = 0.0;
    for (double y = 20.0; y <= 60.0; y += 5.0) {
        const double d = std::fabs(gen_bessel(bp, y) - gen_bessel_asym(bp, y));
        worst = std::max(worst, y * d);
    }
    CHECK(worst <= 0.3);
}

TEST_CASE("psi series against an independent closed-form summation") {
    // eta=2, nu=3/2: every term has the closed form
    //   2 sqrt(pi) Gamma(2) (x/(pi n))^{3/2} J_{3/2}(2 pi n x).
    // Force quadrature for all terms so the comparison isolates it.
    SeriesConfig cfg;
    cfg.n_max = 150;
    cfg.asym_threshold = 1e18;
    const BesselParams bp(2.0, 1.5);
    for (double x : {0.37, 0.9, 2.2}) {
        double ref = 0.0;
        for (int n = 1; n <= cfg.n_max; ++n) {
            ref += 2.0 * std::sqrt(oracle::kPi) *
                   std::pow(x / (oracle::kPi * n), 1.5) *
                   oracle::bessel_j_three_halves(2.0 * oracle::kPi * n * x);
        }
        CHECK(psi_eta_series(bp, x, cfg) ==
              doctest::Approx(ref).epsilon(1e-9).scale(1.0));
        // the asymptotic switchover changes the value only a little
        SeriesConfig dflt;
        dflt.n_max = 150;
        CHECK(std::fabs(psi_eta_series(bp, x, dflt) - ref) <= 2e-3);
    }
}

TEST_CASE("psi series tail bound covers doubling the truncation") {
    const BesselParams bp(6.0, 0.5);
    SeriesConfig c200;
    c200.n_max = 200;
    SeriesConfig c400;
    c400.n_max = 400;
    for (double x : {3.7, 10.1}) {
        double tail = 0.0;
        const double v200 = psi_eta_series(bp, x, c200, &tail);
        const double v400 = psi_eta_series(bp, x, c400);
        CHECK(tail > 0.0);
        CHECK(std::fabs(v400 - v200) <= tail * 1.0000001);
    }
}

TEST_CASE("main term sine-series coefficients: analytic and frozen anchors") {
    // a = b = 2 collapses to classical circle/sphere constants
    CHECK(main_term_c1(2, 2) == doctest::Approx(2.0 / oracle::kPi).epsilon(1e-13));
    CHECK(main_term_c1(2, 2) ==
          doctest::Approx(oracle::frozen::c1_2_2).epsilon(1e-13));
    CHECK(main_term_c2(2, 2) == doctest::Approx(4.0 / oracle::kPi).epsilon(1e-13));
    CHECK(main_term_c2(2, 2) ==
          doctest::Approx(oracle::frozen::c2_2_2).epsilon(1e-13));
    CHECK(main_term_c1(6, 3) ==
          doctest::Approx(oracle::frozen::c1_6_3).epsilon(1e-13));
    CHECK(main_term_c2(6, 3) ==
          doctest::Approx(oracle::frozen::c2_6_3).epsilon(1e-13));
}

TEST_CASE("main terms: exact and asymptotic forms agree where they should") {
    const MainTermParams p(6, 3);
    // kind one at x=10: every series argument exceeds the asymptotic
    // threshold, so the two forms coincide term by term
    const double h1e = main_term(p, 10.0, MainTermKind::one, MainTermMode::exact);
    const double h1a =
        main_term(p, 10.0, MainTermKind::one, MainTermMode::asymptotic);
    CHECK(h1e == doctest::Approx(h1a).epsilon(1e-6));
    // regression pins for the body (m,k) = (2,3) at x=10
    CHECK(h1a == doctest::Approx(-141.771663349087).epsilon(1e-9));
    const double h2e = main_term(p, 10.0, MainTermKind::two, MainTermMode::exact);
    const double h2a =
        main_term(p, 10.0, MainTermKind::two, MainTermMode::asymptotic);
    CHECK(h2e == doctest::Approx(-179.875104568708).epsilon(1e-9));
    CHECK(h2a == doctest::Approx(-180.821997594252).epsilon(1e-9));
    // the integral form keeps the small-argument region exact; the two
    // evaluations differ, but only at the percent level
    CHECK(std::fabs(h2e - h2a) / std::fabs(h2e) < 0.02);
}

TEST_CASE("domain validation") {
    CHECK_THROWS_AS(BesselParams(0.5, 1.0), std::domain_error);   // eta < 1
    CHECK_THROWS_AS(BesselParams(2.0, 0.1), std::domain_error);   // nu < 1/eta
    CHECK_THROWS_AS(MainTermParams(3.0, 4.0), std::domain_error); // a < b
    CHECK_THROWS_AS(MainTermParams(2.0, 1.5), std::domain_error); // b < 2
    CHECK_THROWS_AS(lame_area(0.0), std::domain_error);
    CHECK_THROWS_AS(body_volume(0.0, 3.0), std::domain_error);
    CHECK_THROWS_AS(gen_bessel(BesselParams(2.0, 1.0), -1.0), std::domain_error);
}
