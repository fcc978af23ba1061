#pragma once

#include <cmath>

#include "vlclink/errors.hpp"

namespace vlclink {

/// Shot/thermal noise parameters. The thermal variance is a plain
/// configurable constant (default 0); no physical thermal model is fitted.
struct NoiseModel {
    double electron_charge = 1.602176634e-19;  // C (CODATA); the default scenario rounds to 1.6e-19
    double bandwidth{};                        // Hz
    double background_current{};               // A
    double noise_bandwidth_factor{};           // dimensionless
    double thermal_variance = 0.0;             // A^2

    bool operator==(const NoiseModel&) const = default;
};

struct NoiseBreakdown {
    double shot_variance{};     // A^2
    double thermal_variance{};  // A^2
    double total{};             // A^2
};

/// Shot-noise variance 2 q R_p P_received B + 2 q I_bg I_2 B; affine
/// increasing in the received power.
inline double shot_noise_variance(const NoiseModel& nm, double responsivity, double p_received) {
    return 2.0 * nm.electron_charge * responsivity * p_received * nm.bandwidth +
           2.0 * nm.electron_charge * nm.background_current * nm.noise_bandwidth_factor *
               nm.bandwidth;
}

inline NoiseBreakdown total_noise(double shot_variance, double thermal_variance) {
    return NoiseBreakdown{shot_variance, thermal_variance, shot_variance + thermal_variance};
}

/// SNR = 10 log10((P_received R_p)^2 / N) in dB. The ratio is assembled in
/// one expression; no intermediate dB arithmetic.
inline double snr_db(double p_received, double responsivity, double noise_total) {
    if (!(noise_total > 0.0)) throw ZeroNoise("SNR undefined for zero noise variance");
    if (!(p_received > 0.0)) throw ZeroSignal("SNR undefined for zero received power");
    const double signal_current = p_received * responsivity;
    return 10.0 * std::log10(signal_current * signal_current / noise_total);
}

}  // namespace vlclink
