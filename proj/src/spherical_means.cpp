#include "sml/spherical_means.hpp"

#include <cmath>
#include <numbers>

namespace sml {

namespace {

constexpr double kPi = std::numbers::pi;

double radial_power(double r, int n) {
    switch (n) {
        case 2: return r;
        case 3: return r * r;
        case 4: return r * r * r;
        default: return std::pow(r, n - 1);
    }
}

Complex lambda_prefactor(double lambda, int n, double im_alpha) {
    const Complex unimodular =
        im_alpha != 0.0 ? std::exp(Complex(0.0, im_alpha * std::log(lambda))) : Complex(1.0);
    return std::pow(lambda, n) * unimodular;
}

// 2-D composite Gauss pass for the direct kernel integral, at a given panel
// resolution. tau parametrizes |y| = 1 - e^{-tau}; gamma is the angle to x.
Complex direct_pass(const MeansSpec& spec, double t,
                    const std::function<Complex(double)>& radial_f, double radius,
                    int tau_panels, int gamma_panels, double tau_max) {
    const GaussRule& rule = gauss_legendre(16);
    const Complex am1 = spec.alpha - 1.0;
    const int n = spec.n;

    Complex outer = 0.0;
    const double tau_h = tau_max / tau_panels;
    const double gamma_h = kPi / gamma_panels;
    for (int tp = 0; tp < tau_panels; ++tp) {
        const double tau_mid = (tp + 0.5) * tau_h;
        Complex outer_acc = 0.0;
        for (std::size_t ti = 0; ti < rule.nodes.size(); ++ti) {
            const double tau = tau_mid + 0.5 * tau_h * rule.nodes[ti];
            const double e = std::exp(-tau);
            const double u = 1.0 - e;
            // (1-u^2)^{alpha-1} du = e^{-alpha tau} (2 - e^{-tau})^{alpha-1} dtau
            const Complex weight_u =
                std::exp(-spec.alpha * tau + am1 * std::log(2.0 - e)) * radial_power(u, n);

            Complex inner = 0.0;
            for (int gp = 0; gp < gamma_panels; ++gp) {
                const double gamma_mid = (gp + 0.5) * gamma_h;
                Complex inner_acc = 0.0;
                for (std::size_t gi = 0; gi < rule.nodes.size(); ++gi) {
                    const double gamma = gamma_mid + 0.5 * gamma_h * rule.nodes[gi];
                    const double sg = std::sin(gamma);
                    const double dist2 = radius * radius + t * t * u * u -
                                         2.0 * t * radius * u * std::cos(gamma);
                    const double sin_pow = (n == 2) ? 1.0 : std::pow(sg, n - 2);
                    inner_acc += rule.weights[gi] * sin_pow *
                                 radial_f(std::sqrt(std::max(dist2, 0.0)));
                }
                inner += inner_acc * (0.5 * gamma_h);
            }
            outer_acc += rule.weights[ti] * weight_u * inner;
        }
        outer += outer_acc * (0.5 * tau_h);
    }
    return outer;
}

} // namespace

Complex spherical_mean_multiplier(const MeansSpec& spec, double t, const TestFunctionSpec& tf,
                                  double radius, const QuadratureSpec& quad) {
    if (!(t > 0.0)) throw DomainError("spherical_mean_multiplier: t must be > 0");
    if (!(radius >= 0.0)) throw DomainError("spherical_mean_multiplier: radius must be >= 0");

    const int n = tf.means.n;
    const double lambda = tf.lambda;
    const double im_alpha = tf.means.alpha.imag();
    const double omega = 2.0 * kPi * lambda;
    const double theta_scale = lambda * radius;
    const double mult_scale = t * lambda;
    const BumpSpec& bump = tf.bump;
    const MultiplierEvaluator mult(spec);

    auto integrand = [&](double r) -> Complex {
        const double cut = chi(bump, r);
        if (cut == 0.0) return 0.0;
        const double theta = sphere_fourier(n, theta_scale * r);
        const Complex m = mult(mult_scale * r);
        const double amp = cut * theta * radial_power(r, n);
        const double phase =
            -omega * r + (im_alpha != 0.0 ? im_alpha * std::log(r) : 0.0);
        return m * Complex(amp * std::cos(phase), amp * std::sin(phase));
    };

    const double freq_bound = 2.0 * kPi * lambda * (radius + t + 1.0);
    const Complex integral = integrate_oscillatory(integrand, bump.support, freq_bound, quad);
    return lambda_prefactor(lambda, n, im_alpha) * integral;
}

Complex spherical_mean_direct(const MeansSpec& spec, double t,
                              const std::function<Complex(double)>& radial_f, double radius,
                              double tol) {
    if (!(spec.alpha.real() > 0.0))
        throw DomainError("spherical_mean_direct: kernel integral requires Re alpha > 0");
    if (!(t > 0.0)) throw DomainError("spherical_mean_direct: t must be > 0");
    if (!(radius >= 0.0)) throw DomainError("spherical_mean_direct: radius must be >= 0");
    if (!(tol > 0.0)) throw DomainError("spherical_mean_direct: tol must be > 0");

    // e^{-Re alpha tau_max} ~ 1e-15: truncation negligible against tol
    const double tau_max = 34.5 / spec.alpha.real();
    const int tau_panels =
        static_cast<int>(std::ceil(tau_max / std::min(0.5, 2.0 / (1.0 + std::abs(spec.alpha.imag())))));
    const int gamma_panels = 8;

    const Complex fine = direct_pass(spec, t, radial_f, radius, tau_panels, gamma_panels, tau_max);
    const Complex coarse =
        direct_pass(spec, t, radial_f, radius, (tau_panels + 1) / 2, gamma_panels / 2, tau_max);
    const double err = std::abs(fine - coarse);
    if (err > tol * std::max(std::abs(fine), 1e-300))
        throw ConvergenceError("spherical_mean_direct: refinement mismatch " + std::to_string(err));

    return unit_sphere_area(spec.n - 1) / complex_gamma(spec.alpha) * fine;
}

Complex spherical_mean_gaussian(const MeansSpec& spec, double t, double radius,
                                const QuadratureSpec& quad) {
    if (!(t > 0.0)) throw DomainError("spherical_mean_gaussian: t must be > 0");
    if (!(radius >= 0.0)) throw DomainError("spherical_mean_gaussian: radius must be >= 0");
    const MultiplierEvaluator mult(spec);
    const int n = spec.n;
    auto integrand = [&](double s) -> Complex {
        return std::exp(-kPi * s * s) * mult(t * s) * sphere_fourier(n, radius * s) *
               radial_power(s, n);
    };
    // e^{-pi s^2} leaves nothing past s = 8; phase rate <= 2 pi (radius + t)
    const double freq_bound = 2.0 * kPi * (radius + t);
    return integrate_oscillatory(integrand, Interval{0.0, 8.0}, freq_bound, quad);
}

double maximal_scan(const MeansSpec& spec, const TestFunctionSpec& tf, double radius,
                    std::span<const double> t_grid, const QuadratureSpec& quad) {
    if (t_grid.empty()) throw DomainError("maximal_scan: empty t grid");
    double best = 0.0;
    for (double t : t_grid)
        best = std::max(best, std::abs(spherical_mean_multiplier(spec, t, tf, radius, quad)));
    return best;
}

OriginComponents origin_components(const MeansSpec& spec, const TestFunctionSpec& tf,
                                   const QuadratureSpec& quad) {
    const int n = spec.n;
    const double lambda = tf.lambda;
    const double im_alpha = tf.means.alpha.imag();
    const Complex nu = n / 2.0 + spec.alpha - 1.0;
    const AsymptoticCoeffs waves = bessel_asymptotic_coeffs(nu, 0);

    // common factor lambda^{n+i Im alpha} theta(0) pi^{-alpha+1}
    //               lambda^{-n/2-alpha+1} (2 pi lambda)^{-1/2}
    const Complex common =
        lambda_prefactor(lambda, n, im_alpha) * sphere_fourier(n, 0.0) *
        std::exp((1.0 - spec.alpha) * std::log(kPi) +
                 (-n / 2.0 - spec.alpha + 1.0) * std::log(lambda)) /
        std::sqrt(2.0 * kPi * lambda);

    const double r_exponent = (n - 1) / 2.0 - spec.alpha.real();
    const BumpSpec& bump = tf.bump;
    auto wave_integral = [&](double phase_rate) -> Complex {
        auto integrand = [&](double r) -> Complex {
            const double cut = chi(bump, r);
            if (cut == 0.0) return 0.0;
            const double amp = cut * std::pow(r, r_exponent);
            return amp * std::exp(Complex(0.0, phase_rate * r));
        };
        return integrate_oscillatory(integrand, bump.support,
                                     std::abs(phase_rate) , quad);
    };

    OriginComponents out;
    out.main_term = common * waves.b0 * wave_integral(0.0);
    out.counter_wave = common * waves.d0 * wave_integral(-4.0 * kPi * lambda);
    out.total = spherical_mean_multiplier(spec, 1.0, tf, 0.0, quad);
    out.remainder = out.total - out.main_term - out.counter_wave;
    return out;
}

TunedComponents tuned_components(const MeansSpec& spec, const TestFunctionSpec& tf, double t,
                                 double radius, const QuadratureSpec& quad) {
    if (!(radius > 0.0))
        throw DomainError("tuned_components: decomposition needs radius > 0");
    if (!(t > 0.0)) throw DomainError("tuned_components: t must be > 0");

    const int n = spec.n;
    const double lambda = tf.lambda;
    const double im_alpha = tf.means.alpha.imag();
    const AsymptoticCoeffs theta_waves =
        bessel_asymptotic_coeffs(Complex((n - 2) / 2.0, 0.0), 0);
    const AsymptoticCoeffs mult_waves =
        bessel_asymptotic_coeffs(n / 2.0 + spec.alpha - 1.0, 0);

    // lambda^{n+i Im alpha} sqrt(2 pi) (lambda |x|)^{(1-n)/2} pi^{-alpha+1}
    //   (t lambda)^{-n/2-alpha+1} (2 pi t lambda)^{-1/2}
    const Complex common =
        lambda_prefactor(lambda, n, im_alpha) * std::sqrt(2.0 * kPi) *
        std::pow(lambda * radius, (1.0 - n) / 2.0) *
        std::exp((1.0 - spec.alpha) * std::log(kPi) +
                 (-n / 2.0 - spec.alpha + 1.0) * std::log(t * lambda)) /
        std::sqrt(2.0 * kPi * t * lambda);

    const double r_exponent = -spec.alpha.real();
    const BumpSpec& bump = tf.bump;
    auto wave_integral = [&](double phase_coeff) -> Complex {
        const double rate = 2.0 * kPi * lambda * phase_coeff;
        auto integrand = [&](double r) -> Complex {
            const double cut = chi(bump, r);
            if (cut == 0.0) return 0.0;
            const double amp = cut * std::pow(r, r_exponent);
            return amp * std::exp(Complex(0.0, rate * r));
        };
        return integrate_oscillatory(integrand, bump.support, std::abs(rate), quad);
    };

    TunedComponents out;
    const Complex theta_c[2] = {theta_waves.b0, theta_waves.d0}; // signs +, -
    const Complex mult_c[2] = {mult_waves.b0, mult_waves.d0};
    const double signs[2] = {1.0, -1.0};
    int k = 0;
    for (int si = 0; si < 2; ++si) {
        for (int sj = 0; sj < 2; ++sj) {
            const double phase_coeff = signs[si] * radius + signs[sj] * t - 1.0;
            out.waves[k++] = common * theta_c[si] * mult_c[sj] * wave_integral(phase_coeff);
        }
    }
    out.total = spherical_mean_multiplier(spec, t, tf, radius, quad);
    out.remainder = out.total - out.waves[0] - out.waves[1] - out.waves[2] - out.waves[3];
    return out;
}

} // namespace sml
