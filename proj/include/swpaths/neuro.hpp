#pragma once

#include <cstddef>
#include <cstdint>

namespace swp {

// Physical model of a single electrical junction: thermal (Johnson-Nyquist)
// voltage noise over a resistive channel driven by one of two stable levels.
struct ChannelModel {
    double resistance = 5e9;    // ohms
    double temperature = 298.0; // kelvin
    double bandwidth = 1700.0;  // hertz; also the per-channel symbol rate
    double v0 = -70e-3;         // volts, lower signaling level
    double v1 = -35e-3;         // volts, upper signaling level
    double boltzmann = 1.38e-23; // joules per kelvin
};

struct CapacityResult {
    double noise_rms = 0.0;        // volts
    double snr = 0.0;              // dimensionless power ratio
    double bits_per_use = 0.0;     // in [0, 1]
    double bits_per_second = 0.0;  // bits_per_use * bandwidth
    double seconds_per_bit = 0.0;
};

struct BoundInput {
    double effective_diameter = 0.0; // hops
    double log_m_bits = 0.0;         // message volume, bits
    double capacity_bits_per_second = 0.0;
};

// RMS thermal voltage noise sqrt(4 k_B T R df).
double thermal_noise_rms(const ChannelModel& model);

// Differential entropy, in bits, of the equal mixture of two unit-variance
// Gaussians centered at +-mu. Exposed for direct numerical testing.
double mixture_entropy_bits(double mu);

// Capacity of the binary-input additive-Gaussian-noise channel defined by
// the model: C_per_use = h(Y) - (1/2) log2(2 pi e), levels at +-sqrt(SNR).
CapacityResult gap_junction_capacity(const ChannelModel& model);

// Aggregate rate of `junction_count` independent parallel junctions; the
// count may be a (positive) mean, so fractional values are accepted.
double parallel_capacity(const CapacityResult& result, double junction_count);

// Information-flow lower bound t = D_e * log M / C.
double consensus_time_bound(const BoundInput& input);

struct HubSpokeReport {
    int n = 0;
    std::size_t tree_count = 0;      // n^(n-2) labeled trees
    int min_diameter = 0;
    std::size_t minimizer_count = 0; // trees attaining the minimum diameter
    std::size_t star_count = 0;      // trees with a degree-(n-1) hub
    bool all_minimizers_star = false;
};

// Exhaustively enumerates all labeled trees on n nodes (3 <= n <= 9) via
// sequence decoding and verifies that the minimum diameter is 2 and every
// minimizer is a star.
HubSpokeReport verify_hub_and_spoke(int n);

} // namespace swp
