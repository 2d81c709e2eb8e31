#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "ancss/analysis.hpp"
#include "ancss/channel.hpp"

using namespace ancss;

TEST_CASE("decision variance formula") {
    CHECK(decision_variance(100.0, 0.7, 2) == doctest::Approx(70.0));
    CHECK(decision_variance(100.0, 1.0, 4) == doctest::Approx(300.0));
    CHECK(decision_variance(100.0, 0.1, 8) == doctest::Approx(610.0));
    CHECK_THROWS_AS(decision_variance(100.0, 1.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(decision_variance(100.0, 1.0, 0), std::invalid_argument);
}

TEST_CASE("closed form agrees with quadrature over the working range") {
    // ratio t = eb/sigma on a log grid in [0.1, 10]
    for (int i = 0; i < 100; ++i) {
        const double t =
            0.1 * std::pow(100.0, static_cast<double>(i) / 99.0);
        const double eb = 50.0;
        const double sigma2 = (eb / t) * (eb / t);
        CHECK(std::fabs(ber_closed_form(eb, sigma2) -
                        ber_quadrature(eb, sigma2)) < 1e-10);
    }
}

TEST_CASE("known values of the three-level error rate") {
    // t = 1: (3/2)Q(1) - (1/2)Q(3), from normal tables
    CHECK(ber_quadrature(1.0, 1.0) ==
          doctest::Approx(0.23730793188137).epsilon(1e-9));
    CHECK(ber_closed_form(1.0, 1.0) ==
          doctest::Approx(0.23730793188137).epsilon(1e-12));
    // deep tail: eb/sigma = 10
    CHECK(ber_closed_form(10.0, 1.0) < 1e-20);
    // zero-SNR limit tends to 1/2
    CHECK(ber_closed_form(1e-9, 1.0) == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("error rate is bounded and monotone in eb/sigma") {
    double prev = 0.5;
    for (int i = 0; i <= 200; ++i) {
        const double t = 0.05 + 0.05 * static_cast<double>(i);
        const double ber = ber_closed_form(t, 1.0);
        CHECK(ber > 0.0);
        CHECK(ber < 0.5);
        CHECK(ber < prev);
        prev = ber;
    }
}

TEST_CASE("error rate depends only on the ratio eb/sigma") {
    for (double c : {0.5, 2.0, 17.0, 1000.0}) {
        CHECK(ber_closed_form(3.0 * c, 4.0 * c * c) ==
              doctest::Approx(ber_closed_form(3.0, 4.0)).epsilon(1e-13));
    }
}

TEST_CASE("analytic sweep curves") {
    std::vector<double> grid;
    for (int x = 0; x <= 20; x += 2) grid.push_back(x);

    const auto two = ber_curve(grid, 2, 100);
    for (std::size_t i = 1; i < two.size(); ++i) {
        CHECK(two[i].ber < two[i - 1].ber);
    }

    const auto four = ber_curve(grid, 4, 100);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(four[i].ber >= two[i].ber);
        CHECK(four[i].sigma2 > two[i].sigma2);
    }

    // with interference present, doubling beta improves the ratio eb/sigma
    const auto four_wide = ber_curve(grid, 4, 200);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(four_wide[i].ber < four[i].ber);
    }
}

TEST_CASE("bpsk reference values") {
    CHECK(bpsk_ber(0.0) == doctest::Approx(0.0786496035).epsilon(1e-8));
    CHECK(bpsk_ber(-100.0) == doctest::Approx(0.5).epsilon(1e-4));
    // textbook landmark: ~1e-5 around 9.6 dB
    const double p = bpsk_ber(9.6);
    CHECK(p > 1e-6);
    CHECK(p < 1e-4);
}

TEST_CASE("two-user curve sits 3 dB off the bpsk argument") {
    const double shift_db = 10.0 * std::log10(2.0);
    for (int x = 0; x <= 20; x += 1) {
        const double xd = static_cast<double>(x);
        // ANC-SS argument at L=2: sqrt(Eb/N0); BPSK argument: sqrt(2 Eb/N0)
        const int beta = 100;
        const double t_anc_shifted = static_cast<double>(beta) /
                                     std::sqrt(decision_variance(
                                         beta, ebn0_to_n0(xd + shift_db, beta), 2));
        const double t_bpsk = std::sqrt(2.0 * std::pow(10.0, xd / 10.0));
        CHECK(std::fabs(t_anc_shifted - t_bpsk) < 1e-9);
    }
}

TEST_CASE("exact symbol error variant adds the cross-region mass") {
    for (double t : {0.5, 1.0, 2.0}) {
        const double printed = ber_closed_form(t, 1.0);
        const double exact = ber_exact_ser(t, 1.0);
        // the gap is 0.5 Q(3t); below ~2.5 it is resolvable in doubles
        CHECK(exact > printed);
        CHECK(exact == doctest::Approx(1.5 * q_function(t)).epsilon(1e-13));
    }
}
