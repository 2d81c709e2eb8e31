#include "ancss/analysis.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "ancss/channel.hpp"

namespace ancss {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;
constexpr double kSqrt2Pi = 2.5066282746310005024;

// adaptive Simpson with an absolute tolerance
double simpson(const std::function<double(double)>& f, double a, double b,
               double fa, double fm, double fb, double whole, double tol,
               int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
    if (!(b > a)) {
        return 0.0;
    }
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson(f, a, b, fa, fm, fb, whole, tol, 48);
}

void check_domain(double eb, double sigma2) {
    if (!(eb > 0.0) || !(sigma2 > 0.0)) {
        throw std::invalid_argument("ber: eb and sigma2 must be positive");
    }
}

}  // namespace

double q_function(double t) { return 0.5 * std::erfc(t / kSqrt2); }

double decision_variance(double eb, double n0, int num_users) {
    if (num_users < 2 || num_users % 2 != 0) {
        throw std::invalid_argument(
            "decision_variance: user count must be even and >= 2");
    }
    if (!(eb > 0.0) || !(n0 > 0.0)) {
        throw std::invalid_argument("decision_variance: eb and n0 must be positive");
    }
    return eb * (n0 + static_cast<double>(num_users) - 2.0);
}

double ber_quadrature(double eb, double sigma2) {
    check_domain(eb, sigma2);
    const double sigma = std::sqrt(sigma2);
    const double g1 = -eb;
    const double g2 = +eb;
    const double window = 12.0 * sigma;
    const double tol = 2.5e-14;

    const auto centered = [sigma](double r) {
        return std::exp(-r * r / (2.0 * sigma * sigma));
    };
    const auto shifted = [sigma, eb](double mean) {
        return [sigma, mean](double r) {
            const double d = r - mean;
            return std::exp(-d * d / (2.0 * sigma * sigma));
        };
    };

    // tails of the zero-mean density outside [g1, g2]; mass beyond the
    // 12-sigma window is below 1e-32 and is dropped
    const double low_tail = integrate(centered, g1 - window, g1, tol);
    const double high_tail = integrate(centered, g2, g2 + window, tol);
    // the +-2Eb densities falling between the thresholds
    const double from_minus = integrate(shifted(-2.0 * eb), g1, g2, tol);
    const double from_plus = integrate(shifted(+2.0 * eb), g1, g2, tol);

    return (low_tail + high_tail) / (2.0 * kSqrt2Pi * sigma) +
           (from_minus + from_plus) / (4.0 * kSqrt2Pi * sigma);
}

double ber_closed_form(double eb, double sigma2) {
    check_domain(eb, sigma2);
    const double t = eb / std::sqrt(sigma2);
    return 1.5 * q_function(t) - 0.5 * q_function(3.0 * t);
}

double ber_exact_ser(double eb, double sigma2) {
    check_domain(eb, sigma2);
    return 1.5 * q_function(eb / std::sqrt(sigma2));
}

double bpsk_ber(double ebn0_db) {
    return q_function(std::sqrt(2.0 * std::pow(10.0, ebn0_db / 10.0)));
}

std::vector<AnalyticPoint> ber_curve(const std::vector<double>& ebn0_grid_db,
                                     int num_users, int beta, bool exact_ser) {
    std::vector<AnalyticPoint> curve;
    curve.reserve(ebn0_grid_db.size());
    const double eb = static_cast<double>(beta);
    for (double x : ebn0_grid_db) {
        AnalyticPoint p;
        p.ebn0_db = x;
        p.num_users = num_users;
        p.beta = beta;
        p.sigma2 = decision_variance(eb, ebn0_to_n0(x, beta), num_users);
        p.ber = exact_ser ? ber_exact_ser(eb, p.sigma2)
                          : ber_closed_form(eb, p.sigma2);
        curve.push_back(p);
    }
    return curve;
}

}  // namespace ancss
