#pragma once

namespace snnpat {

/// Leaky integrate-and-fire constants. Defaults are the PyNN simulator defaults
/// (mV, ms, nF). The timestep is fixed at 1 ms.
struct NeuronParams {
  double v_rest = -65.0;
  double v_reset = -65.0;
  double v_thresh = -50.0;
  double tau_m = 20.0;
  double c_m = 1.0;
  double t_refrac = 0.1;
  // 0 keeps the per-step decay exact; otherwise it is rounded to this many
  // fractional bits, the way a fixed-point (s16.15) core stores it.
  int decay_fraction_bits = 0;

  /// Per-step membrane decay factor, exp(-1/tau_m).
  double alpha() const;
  /// Membrane displacement (mV) per weight unit of current held for one step:
  /// (tau_m / c_m) * (1 - alpha).
  double kappa() const;
  /// Whole timesteps of lockout after the firing step.
  int refractory_steps() const;

  /// Throws ValidationError when an invariant does not hold.
  void validate() const;
};

struct NeuronState {
  double v = 0.0;
  int refrac_remaining = 0;  // ms (whole steps)

  static NeuronState at_rest(const NeuronParams& params) { return {params.v_rest, 0}; }
};

struct StepResult {
  NeuronState state;
  bool fired = false;
};

/// Advances one 1 ms step with a delta-synapse input held constant over the
/// step and integrated exactly. `input_current` is the signed sum (weight
/// units) of every synaptic event arriving this step. Fires on v >= v_thresh.
StepResult membrane_step(const NeuronState& state, const NeuronParams& params,
                         double input_current);

}  // namespace snnpat
