#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "specsing/conventions.hpp"

using namespace specsing;

TEST_CASE("principal_sqrt_upper picks arg in [0, pi)")
{
    CHECK(principal_sqrt_upper(4.0) == cplx(2.0, 0.0));
    const cplx neg = principal_sqrt_upper(-4.0);
    CHECK(neg.real() == doctest::Approx(0.0));
    CHECK(neg.imag() == doctest::Approx(2.0));

    // std::sqrt(3-4i) = 2-i lies in the lower half-plane.
    const cplx w = principal_sqrt_upper(cplx(3.0, -4.0));
    CHECK(w.real() == doctest::Approx(-2.0));
    CHECK(w.imag() == doctest::Approx(1.0));
    CHECK(std::abs(w * w - cplx(3.0, -4.0)) < 1e-14);

    CHECK(principal_sqrt_upper(0.0) == cplx(0.0, 0.0));
}

TEST_CASE("principal_sqrt_upper properties over random inputs")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> mag(-6.0, 6.0), ang(-kPi, kPi);
    for (int i = 0; i < 5000; ++i) {
        const cplx u = std::polar(std::pow(10.0, mag(rng)), ang(rng));
        const cplx w = principal_sqrt_upper(u);
        CHECK(std::abs(w * w - u) <= 1e-14 * std::abs(u) * 4);
        const double arg = std::arg(w);
        CHECK(arg >= 0.0);
        CHECK(arg < kPi);
    }
    for (double x : {0.0, 1e-300, 0.25, 2.0, 1e200}) {
        const cplx w = principal_sqrt_upper(x);
        CHECK(w.imag() == 0.0);
        CHECK(w.real() >= 0.0);
    }
}

TEST_CASE("ev_to_inverse_nm")
{
    CHECK(ev_to_inverse_nm(0.0) == 0.0);
    CHECK(ev_to_inverse_nm(197.3269804) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(ev_to_inverse_nm(2.15548) == doctest::Approx(0.0109233922073435833).epsilon(1e-14));
    CHECK_THROWS_AS(ev_to_inverse_nm(-1.0), std::invalid_argument);
}

TEST_CASE("sinc is continuous across the Taylor switch")
{
    for (cplx x : {cplx(0.0), cplx(1e-8, 2e-8), cplx(9.99e-5, 0.0), cplx(1.001e-4, 0.0), cplx(0.3, -0.2)}) {
        const cplx ref = std::abs(x) == 0.0 ? cplx(1.0) : std::sin(x) / x;
        CHECK(std::abs(sinc(x) - ref) < 1e-15);
    }
}
