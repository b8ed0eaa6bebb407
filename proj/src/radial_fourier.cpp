#include "sml/radial_fourier.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace sml {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kSeriesTerms = 8; // ample below kRadialSeriesSwitch

const BesselEvaluator& sphere_order_evaluator(int n) {
    // Orders (n-2)/2 for the dimensions the lab actually visits.
    static const std::array<BesselEvaluator, 15> table = [] {
        return std::array<BesselEvaluator, 15>{
            BesselEvaluator(Complex(0.0, 0.0)),  BesselEvaluator(Complex(0.5, 0.0)),
            BesselEvaluator(Complex(1.0, 0.0)),  BesselEvaluator(Complex(1.5, 0.0)),
            BesselEvaluator(Complex(2.0, 0.0)),  BesselEvaluator(Complex(2.5, 0.0)),
            BesselEvaluator(Complex(3.0, 0.0)),  BesselEvaluator(Complex(3.5, 0.0)),
            BesselEvaluator(Complex(4.0, 0.0)),  BesselEvaluator(Complex(4.5, 0.0)),
            BesselEvaluator(Complex(5.0, 0.0)),  BesselEvaluator(Complex(5.5, 0.0)),
            BesselEvaluator(Complex(6.0, 0.0)),  BesselEvaluator(Complex(6.5, 0.0)),
            BesselEvaluator(Complex(7.0, 0.0))};
    }();
    return table[static_cast<std::size_t>(n - 2)];
}

} // namespace

double sphere_fourier(int n, double s) {
    if (n < 2) throw DomainError("sphere_fourier: dimension must be >= 2");
    if (!(s >= 0.0)) throw DomainError("sphere_fourier: radius must be >= 0");

    if (s < kRadialSeriesSwitch) {
        // 2 pi^{n/2} sum_j (-1)^j (pi s)^{2j} / (j! Gamma(j + n/2))
        const double q = (kPi * s) * (kPi * s);
        double term = 1.0;
        double sum = 0.0;
        for (int j = 0; j < kSeriesTerms; ++j) {
            sum += term / std::tgamma(j + n / 2.0);
            term *= -q / (j + 1.0);
        }
        return 2.0 * std::pow(kPi, n / 2.0) * sum;
    }

    const Complex j = (n <= 16) ? sphere_order_evaluator(n)(2.0 * kPi * s)
                                : bessel_j(Complex((n - 2) / 2.0, 0.0), 2.0 * kPi * s);
    const double spow = (n == 2)   ? 1.0
                        : (n == 3) ? 1.0 / std::sqrt(s)
                        : (n == 4) ? 1.0 / s
                                   : std::pow(s, (2.0 - n) / 2.0);
    return 2.0 * kPi * spow * j.real();
}

MultiplierEvaluator::MultiplierEvaluator(const MeansSpec& spec)
    : spec_(spec),
      bessel_(spec.n / 2.0 + spec.alpha - 1.0),
      power_exponent_(-spec.n / 2.0 - spec.alpha + 1.0),
      log_pi_prefactor_((1.0 - spec.alpha) * std::log(kPi)) {
    const Complex shift = spec_.n / 2.0 + spec_.alpha;
    const double k = std::round(shift.real());
    limit_pole_ = k <= 0.0 && std::abs(shift - Complex(k, 0.0)) < 1e-12;
    if (!limit_pole_) {
        series_coeffs_.reserve(kSeriesTerms);
        Complex coeff = std::pow(kPi, spec_.n / 2.0);
        double factorial = 1.0;
        for (int j = 0; j < kSeriesTerms; ++j) {
            series_coeffs_.push_back(coeff / (factorial * complex_gamma(shift + static_cast<double>(j))));
            factorial *= (j + 1.0);
            coeff *= -1.0;
        }
    }
}

Complex MultiplierEvaluator::operator()(double s) const {
    if (!(s >= 0.0)) throw DomainError("multiplier: radius must be >= 0");
    if (s < kRadialSeriesSwitch) {
        if (limit_pole_)
            throw DomainError("multiplier: n/2 + alpha at a Gamma pole; no limit at s = 0");
        const double q = (kPi * s) * (kPi * s);
        Complex sum = 0.0;
        double qk = 1.0;
        for (const Complex& c : series_coeffs_) {
            sum += c * qk;
            qk *= q;
        }
        return sum;
    }
    const Complex prefactor = std::exp(log_pi_prefactor_ + power_exponent_ * std::log(s));
    return prefactor * bessel_(2.0 * kPi * s);
}

Complex multiplier(const MeansSpec& spec, double s) {
    return MultiplierEvaluator(spec)(s);
}

DecayCheck multiplier_decay_check(const MeansSpec& spec, std::span<const double> s_grid) {
    if (s_grid.empty()) throw DomainError("multiplier_decay_check: empty grid");
    for (std::size_t i = 0; i < s_grid.size(); ++i) {
        if (!(s_grid[i] > 0.0)) throw DomainError("multiplier_decay_check: grid must be positive");
        if (i > 0 && !(s_grid[i] > s_grid[i - 1]))
            throw DomainError("multiplier_decay_check: grid must be increasing");
    }
    const MultiplierEvaluator m(spec);
    const double decay_exponent = (spec.n - 1) / 2.0 + spec.alpha.real();

    DecayCheck out;
    out.rows.reserve(s_grid.size());
    for (double s : s_grid) {
        const double abs_m = std::abs(m(s));
        out.rows.push_back({s, abs_m, abs_m * std::pow(s, decay_exponent)});
    }
    std::vector<double> normalized;
    normalized.reserve(out.rows.size());
    for (const DecayRow& row : out.rows) normalized.push_back(row.normalized);
    std::sort(normalized.begin(), normalized.end());
    out.median_normalized = normalized[normalized.size() / 2];
    out.growth_flagged = false;
    for (const DecayRow& row : out.rows)
        if (row.normalized > 2.0 * out.median_normalized) out.growth_flagged = true;
    return out;
}

} // namespace sml
