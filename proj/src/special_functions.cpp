#include "sml/special_functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace sml {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Lanczos coefficients, g = 7.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

Complex gamma_lanczos(Complex z) {
    // valid for Re z >= 1/2
    const Complex w = z - 1.0;
    Complex acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (w + static_cast<double>(i));
    const Complex t = w + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, w + 0.5) * std::exp(-t) * acc;
}

// ---- quad-precision complex helpers for the cancellation-heavy series ----

struct Cq {
    __float128 re, im;
};

inline Cq cq_mul_real(Cq a, __float128 s) { return {a.re * s, a.im * s}; }

inline Cq cq_div(Cq a, Cq b) {
    const __float128 d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

inline __float128 cq_norm2(Cq a) { return a.re * a.re + a.im * a.im; }

// Normalized series sum_j rho_j with rho_0 = 1 and
// rho_j = rho_{j-1} * (-(r/2)^2) / (j (j + beta)); the caller multiplies by
// (r/2)^beta / Gamma(beta+1). Returns false when max_terms is exhausted.
bool series_core_double(Complex beta, double r, int max_terms, Complex& out) {
    const double q = (r / 2.0) * (r / 2.0);
    Complex rho = 1.0;
    Complex sum = 1.0;
    for (int j = 1; j < max_terms; ++j) {
        rho *= -q;
        rho /= Complex(static_cast<double>(j) * (j + beta.real()),
                       static_cast<double>(j) * beta.imag());
        sum += rho;
        if (std::norm(rho) <= 1e-32 * std::norm(sum)) {
            out = sum;
            return true;
        }
    }
    return false;
}

bool series_core_quad(Complex beta, double r, int max_terms, Complex& out) {
    const __float128 q = static_cast<__float128>(r / 2.0) * static_cast<__float128>(r / 2.0);
    const __float128 beta_re = beta.real();
    const __float128 beta_im = beta.imag();
    Cq rho{1, 0};
    Cq sum{1, 0};
    const __float128 tol2 = static_cast<__float128>(1e-32);
    for (int j = 1; j < max_terms; ++j) {
        const __float128 dj = j;
        rho = cq_mul_real(rho, -q);
        rho = cq_div(rho, Cq{dj * (dj + beta_re), dj * beta_im});
        sum.re += rho.re;
        sum.im += rho.im;
        if (cq_norm2(rho) <= tol2 * cq_norm2(sum)) {
            out = Complex(static_cast<double>(sum.re), static_cast<double>(sum.im));
            return true;
        }
    }
    return false;
}

// Shared evaluation of the two-wave expansion with optimal truncation.
Complex eval_asymptotic(const AsymptoticCoeffs& c, double r, bool real_order) {
    const double u = 1.0 / r;
    Complex s1 = c.b0;
    Complex s2 = c.d0;
    double upow = 1.0;
    double prev = std::numeric_limits<double>::infinity();
    for (const auto& [c1, c2] : c.correction_terms) {
        upow *= u;
        const double mag = std::abs(c1) * upow;
        if (mag > prev) break; // divergent tail reached; stop at the smallest term
        s1 += c1 * upow;
        s2 += c2 * upow;
        if (mag < 1e-18 * std::abs(c.b0)) break;
        prev = mag;
    }
    const double cr = std::cos(r);
    const double sr = std::sin(r);
    const Complex eir(cr, sr);
    const double inv_sqrt_r = 1.0 / std::sqrt(r);
    if (real_order) {
        // d0 = conj(b0) and c2_k = conj(c1_k), so the two waves are conjugate.
        const Complex w = eir * s1;
        return Complex(2.0 * w.real() * inv_sqrt_r, 0.0);
    }
    return (eir * s1 + std::conj(eir) * s2) * inv_sqrt_r;
}

} // namespace

Complex complex_gamma(Complex z) {
    if (!is_finite(z)) throw DomainError("complex_gamma: argument must be finite");
    const double k = std::round(z.real());
    if (k <= 0.0 && std::abs(z - Complex(k, 0.0)) < 1e-14)
        throw DomainError("complex_gamma: pole at nonpositive integer");
    if (z.real() >= 0.5) return gamma_lanczos(z);
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return kPi / (std::sin(kPi * z) * gamma_lanczos(1.0 - z));
}

Complex bessel_j_series(Complex beta, double r, int max_terms) {
    if (!is_finite(beta)) throw DomainError("bessel_j_series: order must be finite");
    if (!(r >= 0.0)) throw DomainError("bessel_j_series: radius must be >= 0");
    if (max_terms < 1) throw DomainError("bessel_j_series: max_terms must be >= 1");

    // Negative integer orders hit Gamma poles term by term; use the
    // reflection J_{-m} = (-1)^m J_m instead.
    if (std::abs(beta.imag()) < 1e-13) {
        const double m = std::round(beta.real());
        if (m < 0.0 && std::abs(beta.real() - m) < 1e-13) {
            const Complex v = bessel_j_series(Complex(-m, 0.0), r, max_terms);
            return (static_cast<long long>(-m) % 2 == 0) ? v : -v;
        }
    }

    if (r == 0.0) {
        if (beta == Complex(0.0, 0.0)) return 1.0;
        if (beta.real() > 0.0) return 0.0;
        throw DomainError("bessel_j_series: no limit at r = 0 for Re beta <= 0");
    }

    const Complex prefactor =
        std::exp(beta * std::log(r / 2.0)) / complex_gamma(beta + 1.0);

    Complex sum;
    const bool converged = (r <= 12.0) ? series_core_double(beta, r, max_terms, sum)
                                       : series_core_quad(beta, r, max_terms, sum);
    if (!converged)
        throw ConvergenceError("bessel_j_series: truncation budget exhausted before the "
                               "stopping criterion (r too large for the series route)");
    return prefactor * sum;
}

AsymptoticCoeffs bessel_asymptotic_coeffs(Complex beta, int num_terms) {
    if (!is_finite(beta)) throw DomainError("bessel_asymptotic_coeffs: order must be finite");
    if (num_terms < 0) throw DomainError("bessel_asymptotic_coeffs: num_terms must be >= 0");

    AsymptoticCoeffs out;
    const Complex phase = Complex(0.0, -1.0) * (beta * (kPi / 2.0) + kPi / 4.0);
    const double amp = 1.0 / std::sqrt(2.0 * kPi);
    out.b0 = amp * std::exp(phase);
    out.d0 = amp * std::exp(-phase);

    // a_k = prod_{m=1..k} (4 beta^2 - (2m-1)^2) / (8^k k!); the expansion
    // coefficients are c1_k = b0 i^k a_k and c2_k = d0 (-i)^k a_k.
    const Complex four_beta2 = 4.0 * beta * beta;
    Complex a = 1.0;
    Complex ik = 1.0;
    const Complex i_unit(0.0, 1.0);
    out.correction_terms.reserve(static_cast<std::size_t>(num_terms));
    for (int k = 1; k <= num_terms; ++k) {
        const double odd = 2.0 * k - 1.0;
        a *= (four_beta2 - odd * odd) / (8.0 * k);
        ik *= i_unit;
        out.correction_terms.emplace_back(out.b0 * ik * a, out.d0 * std::conj(ik) * a);
    }
    return out;
}

Complex bessel_j_asymptotic(Complex beta, double r, int num_correction_terms) {
    if (!(r >= 1.0))
        throw DomainError("bessel_j_asymptotic: expansion requires r >= 1");
    const AsymptoticCoeffs c = bessel_asymptotic_coeffs(beta, num_correction_terms);
    return eval_asymptotic(c, r, beta.imag() == 0.0);
}

double bessel_crossover(Complex beta) {
    return std::max(12.0, std::norm(beta));
}

Complex bessel_j(Complex beta, double r) {
    if (!(r >= 0.0)) throw DomainError("bessel_j: radius must be >= 0");
    if (r < bessel_crossover(beta)) return bessel_j_series(beta, r);
    return bessel_j_asymptotic(beta, r);
}

BesselEvaluator::BesselEvaluator(Complex beta, int num_correction_terms)
    : beta_(beta),
      crossover_(bessel_crossover(beta)),
      real_order_(beta.imag() == 0.0),
      coeffs_(bessel_asymptotic_coeffs(beta, num_correction_terms)) {}

Complex BesselEvaluator::operator()(double r) const {
    if (!(r >= 0.0)) throw DomainError("BesselEvaluator: radius must be >= 0");
    if (r < crossover_) return bessel_j_series(beta_, r);
    return eval_asymptotic(coeffs_, r, real_order_);
}

} // namespace sml
