#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "chidip/collective.hpp"
#include "chidip/dynamics.hpp"
#include "chidip/error.hpp"
#include "doctest.h"

using namespace chidip;
using cd = std::complex<double>;

namespace {

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> t(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) t[static_cast<std::size_t>(i)] = a + (b - a) * i / (n - 1.0);
  return t;
}

}  // namespace

TEST_CASE("initial state") {
  const std::vector<double> t{0.0};
  const auto tr = evolve({-0.5, 0.2}, {-0.1, 0.3}, t);
  CHECK(tr.c1[0] == cd(1.0, 0.0));
  CHECK(tr.c2[0] == cd(0.0, 0.0));
  CHECK(std::norm(tr.c_plus[0]) == doctest::Approx(0.5));
  CHECK(std::norm(tr.c_minus[0]) == doctest::Approx(0.5));
  CHECK(tr.e_int[0] == doctest::Approx(0.0));
}

TEST_CASE("decoupled dipole decays with twice the amplitude rate") {
  const std::vector<double> t{1.0};
  const auto tr = evolve({-1.5, 0.0}, {0.0, 0.0}, t);
  CHECK(std::norm(tr.c1[0]) == doctest::Approx(0.049787068367863944).epsilon(1e-14));
  CHECK(std::abs(tr.c2[0]) == 0.0);
}

TEST_CASE("trajectory identities for physical rates") {
  const auto m = MediumChirality::from_mean_and_rotation(1.5, 0.1);
  for (const double x : {0.3, 1.0, 2.5, 7.0}) {
    const GeometryInvariants g{0.6, 0.2, -0.5};
    const auto rc = rate_coefficients(x, m, g);
    const auto times = linspace(0.0, 10.0, 201);
    const auto tr = evolve(rc.a_l, rc.a_t, times);
    double prev = 2.0;
    for (std::size_t i = 0; i < tr.size(); ++i) {
      const double t = times[i];
      const double p = std::norm(tr.c1[i]) + std::norm(tr.c2[i]);
      CHECK(std::abs(p - (std::norm(tr.c_plus[i]) + std::norm(tr.c_minus[i]))) < 1e-14);
      CHECK(p <= prev + 1e-15);
      prev = p;
      const double s = std::sqrt(0.5);
      CHECK(std::abs(tr.c_plus[i] - s * (tr.c1[i] + tr.c2[i])) < 1e-14);
      CHECK(std::abs(tr.c_minus[i] - s * (tr.c1[i] - tr.c2[i])) < 1e-14);
      const cd cosh_form = std::exp(rc.a_l * t) * std::cosh(rc.a_t * t);
      const cd sinh_form = std::exp(rc.a_l * t) * std::sinh(rc.a_t * t);
      CHECK(std::abs(tr.c1[i] - cosh_form) < 1e-13);
      CHECK(std::abs(tr.c2[i] - sinh_form) < 1e-13);
      CHECK(tr.e_int[i] == doctest::Approx(interaction_energy(rc.a_t, tr.c_plus[i], tr.c_minus[i])));
    }
  }
}

TEST_CASE("populations decay with the collective rates") {
  const auto m = MediumChirality::inactive(1.3);
  const GeometryInvariants g{1.0, 0.0, 0.0};
  const auto s = collective_spectrum(0.8, m, g);
  const auto rc = rate_coefficients(0.8, m, g);
  const std::vector<double> t{0.5, 3.0};
  const auto tr = evolve(rc.a_l, rc.a_t, t);
  const double rate_plus = -std::log(std::norm(tr.c_plus[1]) / std::norm(tr.c_plus[0])) / 2.5;
  const double rate_minus = -std::log(std::norm(tr.c_minus[1]) / std::norm(tr.c_minus[0])) / 2.5;
  CHECK(rate_plus == doctest::Approx(2.0 * s.gamma_plus).epsilon(1e-12));
  CHECK(rate_minus == doctest::Approx(2.0 * s.gamma_minus).epsilon(1e-12));
}

TEST_CASE("interaction energy") {
  CHECK(interaction_energy({-0.1, 0.25}, {1.0, 0.0}, {0.0, 0.0}) == doctest::Approx(-0.5));
  CHECK(interaction_energy({-0.1, 0.25}, {0.0, 0.0}, {0.0, 1.0}) == doctest::Approx(0.5));
  CHECK(interaction_energy({-0.1, 0.0}, {0.3, 0.1}, {0.0, 0.7}) == 0.0);
  const std::vector<double> late{400.0, 3000.0};
  const auto tr = evolve({-0.5, 0.0}, {-0.2, 0.3}, late);
  CHECK(std::abs(tr.e_int[0]) < 1e-100);
  CHECK(tr.e_int[1] == 0.0);
  CHECK(tr.c1[1] == cd(0.0, 0.0));
}

TEST_CASE("evolve rejects unphysical rates and bad time grids") {
  const std::vector<double> t{0.0, 1.0};
  CHECK_THROWS_AS(evolve({0.1, 0.0}, {0.0, 0.0}, t), UnphysicalRates);
  CHECK_THROWS_AS(evolve({-0.5, 0.0}, {-0.6, 0.0}, t), UnphysicalRates);
  CHECK_THROWS_AS(evolve({-0.5, 0.0}, {0.6, 0.0}, t), UnphysicalRates);
  CHECK_NOTHROW(evolve({-0.5, 0.0}, {-0.5, 0.0}, t));
  const std::vector<double> neg{-1.0, 0.0};
  const std::vector<double> unsorted{1.0, 0.5};
  CHECK_THROWS_AS(evolve({-0.5, 0.0}, {0.0, 0.0}, neg), std::invalid_argument);
  CHECK_THROWS_AS(evolve({-0.5, 0.0}, {0.0, 0.0}, unsorted), std::invalid_argument);
}

TEST_CASE("damped_exp flushes deep underflow") {
  CHECK(damped_exp({-800.0, 3.0}) == cd(0.0, 0.0));
  CHECK(std::abs(damped_exp({-1.0, 0.0}) - std::exp(-1.0)) < 1e-16);
}
