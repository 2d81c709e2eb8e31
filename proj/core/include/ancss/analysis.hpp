#pragma once

#include <vector>

namespace ancss {

// Standard normal tail probability Q(t) = P(Z > t).
double q_function(double t);

// Variance of the despread decision variable under the Gaussian approach:
// eb * (n0 + L - 2). The interference term vanishes at L = 2.
double decision_variance(double eb, double n0, int num_users);

// Three-level decision error probability by direct numerical quadrature of
// the four Gaussian integrals (thresholds at -eb, +eb, noise std sqrt(sigma2)).
// Absolute quadrature error below 1e-12.
double ber_quadrature(double eb, double sigma2);

// Same quantity in closed form: (3/2) Q(eb/sigma) - (1/2) Q(3 eb/sigma).
double ber_closed_form(double eb, double sigma2);

// Optional variant that also counts the cross-region events (+2 decoded as
// -2 and vice versa); reduces to (3/2) Q(eb/sigma). Not part of the
// validated comparison path.
double ber_exact_ser(double eb, double sigma2);

// Single-user coherent BPSK reference: Q(sqrt(2 * 10^(ebn0_db/10))).
double bpsk_ber(double ebn0_db);

struct AnalyticPoint {
    double ebn0_db = 0.0;
    int num_users = 2;
    int beta = 1;
    double sigma2 = 0.0;
    double ber = 0.0;
};

// Evaluates the analytic curve over an Eb/N0 grid for one (L, beta).
std::vector<AnalyticPoint> ber_curve(const std::vector<double>& ebn0_grid_db,
                                     int num_users, int beta,
                                     bool exact_ser = false);

}  // namespace ancss
