#pragma once

#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sppspec/spps.hpp"

namespace sppspec {

using Complex = std::complex<double>;

/// Raised when the matching denominator f2(T) is too small for the
/// standard construction; callers fall back to matching on derivative data.
struct DegenerateMatching : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Matching constants alpha_{+,-} = (f2'(T) - f1(T) -+ sqrt(D^2-4)) / (2 f2(T)).
/// Complex for |D| < 2. Throws DegenerateMatching when |f2(T)| <= 1e-12 * scale.
std::pair<Complex, Complex> matching_constants(double f1T, double f2T, double f2pT, double D);

/// beta_{+,-} = (D -+ sqrt(D^2 - 4))/2. Branch: the real positive root for
/// D^2 >= 4 (so beta_+ decays when D > 2) and +i sqrt(4 - D^2) inside
/// bands (so |beta_{+,-}| = 1 with Im beta_+ <= 0). beta_+ beta_- = 1.
std::pair<Complex, Complex> bloch_factors(double D);

/// Inverts beta = e^{ikT}: k = arccos(D/2)/T, real in [0, pi/T] for
/// |D| <= 2; beyond the band the imaginary part carries the per-period
/// growth rate log.
Complex quasimomentum(double D, double period);

enum class Branch { plus, minus };

/// Self-matching solution data over one period: cell samples of
/// F_{+,-} = f1 + alpha_{+,-} f2 and the factors carrying them to other cells.
struct BlochSolution {
    double lambda_mu = 0.0; // series-variable spectral parameter
    double D = 0.0;
    Complex alpha_plus, alpha_minus;
    Complex beta_plus, beta_minus;
    Complex k;
    double period = 0.0;
    std::vector<Complex> cell_plus, cell_minus;   // values at grid nodes
    std::vector<Complex> dcell_plus, dcell_minus; // derivatives at grid nodes
    /// Set when f2(T) ~ 0 forced the derivative-matched construction, or
    /// when the monodromy is +-identity and the single periodic solution
    /// is returned on both branches.
    bool used_fallback = false;
    bool identity_monodromy = false;
};

BlochSolution build_bloch(const SppsTable& t, double lambda_mu);

/// Quasi-periodic extension: value at arbitrary x from the cell data,
/// f(x) = beta^n * cell(x - nT) for nT <= x < (n+1)T. Negative n uses the
/// opposite factor through beta_+ beta_- = 1 instead of dividing.
Complex extend(const BlochSolution& s, Branch b, double x);

/// Two-component solution of the first-order system at omega = sign *
/// sqrt(mu): upper F from the f pair, lower G from the independently
/// matched g pair, rescaled so omega G = F' + phi F holds (exactly at 0).
struct SpinorSolution {
    double lambda_mu = 0.0;
    double omega = 0.0;
    double period = 0.0;
    Complex a_plus, a_minus; // f-system matching constants
    Complex b_plus, b_minus; // g-system matching constants (independent)
    Complex beta_plus, beta_minus;
    std::vector<Complex> upper_plus, upper_minus;
    std::vector<Complex> lower_plus, lower_minus;
    std::vector<Complex> dupper_plus, dupper_minus;
    bool used_fallback = false;
};

/// Requires lambda_mu >= 0 (real omega) and omega != 0; degenerate
/// matching falls back as in build_bloch.
SpinorSolution assemble_spinor(const SppsTable& t, double lambda_mu, int sign);

} // namespace sppspec
