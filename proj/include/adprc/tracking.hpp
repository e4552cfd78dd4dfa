#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "adprc/reservoir.hpp"

namespace adprc {

// Error system at one trajectory point: de/dt = f_val + g_mat * u, where u
// is the vector of plastic recurrent entries.
struct AffineErrorEval {
  Eigen::VectorXd e;           // c
  Eigen::VectorXd f_val;       // c
  Eigen::MatrixXd g_mat;       // c x N
  Eigen::VectorXd v_snapshot;  // n_r
};

Eigen::VectorXd output_error(const Eigen::VectorXd& y_hat, const Eigen::VectorXd& y_ref);

// f_val is the drift from the leak, input, and fixed recurrent part; the
// column of g_mat for plastic entry (i, j) is phi(v)_j times column i of
// the decoder. The reference is constant within a pattern, so no reference
// derivative enters.
AffineErrorEval build_affine_eval(const ReservoirModel& model, const ReservoirState& state,
                                  const Eigen::VectorXd& input, const Eigen::VectorXd& y_ref);

Eigen::VectorXd error_derivative(const AffineErrorEval& eval, const Eigen::VectorXd& u);

// Exploration noise: per-entry sinusoid with seed-fixed phase plus a fresh
// uniform dither, each at half the scheduled amplitude, so the total stays
// within [-amplitude, amplitude].
struct PeSchedule {
  double a0 = 0.0;     // initial amplitude
  double decay = 1.0;  // per-epoch multiplier
  long steps_per_epoch = 1;
  int n_frequencies = 4;

  double amplitude(long step_index) const;
};

Eigen::VectorXd inject_pe_noise(const Eigen::VectorXd& u, const PeSchedule& schedule,
                                long step_index, std::uint64_t seed);

}  // namespace adprc
