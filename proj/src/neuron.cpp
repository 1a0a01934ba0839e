#include "snnpat/neuron.h"

#include <cmath>

#include "snnpat/errors.h"

namespace snnpat {

double NeuronParams::alpha() const {
  const double exact = std::exp(-1.0 / tau_m);
  if (decay_fraction_bits <= 0) return exact;
  const double scale = std::ldexp(1.0, decay_fraction_bits);
  return std::round(exact * scale) / scale;
}

double NeuronParams::kappa() const { return (tau_m / c_m) * (1.0 - alpha()); }

int NeuronParams::refractory_steps() const { return static_cast<int>(std::lround(t_refrac)); }

void NeuronParams::validate() const {
  if (!(v_reset <= v_rest && v_rest < v_thresh)) {
    throw ValidationError("neuron params: need v_reset <= v_rest < v_thresh");
  }
  if (!(tau_m > 0.0) || !(c_m > 0.0) || !(t_refrac >= 0.0)) {
    throw ValidationError("neuron params: need tau_m > 0, c_m > 0, t_refrac >= 0");
  }
  if (decay_fraction_bits < 0 || decay_fraction_bits > 52) {
    throw ValidationError("neuron params: decay_fraction_bits out of range");
  }
  const double a = alpha();
  if (!(a > 0.0 && a < 1.0) || !(kappa() > 0.0)) {
    throw ValidationError("neuron params: decay factor must lie in (0, 1)");
  }
}

StepResult membrane_step(const NeuronState& state, const NeuronParams& params,
                         double input_current) {
  if (state.refrac_remaining > 0) {
    return {{params.v_reset, state.refrac_remaining - 1}, false};
  }
  const double v = params.v_rest + (state.v - params.v_rest) * params.alpha() +
                   input_current * params.kappa();
  if (v >= params.v_thresh) {
    return {{params.v_reset, params.refractory_steps()}, true};
  }
  return {{v, 0}, false};
}

}  // namespace snnpat
