#pragma once

namespace qmeter {

// Imperfection model applied at three points of a simulated run: a
// depolarizing channel on each freshly prepared input state, a depolarizing
// channel on the ancilla after the circuit, and an additive Gaussian
// perturbation of each measured visibility.
struct NoiseConfig {
    double depolarize_prep = 0.0;
    double depolarize_gate = 0.0;
    double readout_sigma = 0.0;

    bool any() const {
        return depolarize_prep > 0.0 || depolarize_gate > 0.0 || readout_sigma > 0.0;
    }
};

}  // namespace qmeter
