#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>

#include "adprc/actor.hpp"
#include "adprc/config.hpp"
#include "adprc/critic.hpp"
#include "adprc/data.hpp"
#include "adprc/diagnostics.hpp"
#include "adprc/hjb.hpp"
#include "adprc/tracking.hpp"

namespace adprc {

ReservoirModel build_reservoir(const TrainConfig& cfg, int n_in, int c);
CriticNet build_critic(const TrainConfig& cfg, int c);
ActorNet build_actor(const TrainConfig& cfg, int c);
CostConfig build_cost(const TrainConfig& cfg, int n_controls, int n_l);
PeSchedule build_pe(const TrainConfig& cfg, const LabeledSeriesDataset& ds);
double effective_u_max(const TrainConfig& cfg, int n_controls);

// One no-update epoch with exploration noise; gathers the bound estimates
// the admissibility gate needs. The passed model and nets are not modified.
GateCalibration calibrate(const LabeledSeriesDataset& ds, ReservoirModel model,
                          CriticNet critic, ActorNet actor, const TrainConfig& cfg);

// Checks eta > 1, alpha_a > 0, and the alpha_c upper bound computed from the
// calibration estimates; every failed check is named in the report.
GateReport validate_hyperparams(const TrainConfig& cfg, const GateCalibration& cal,
                                const CostConfig& cost);

struct TrainResult {
  ReservoirModel model;
  CriticNet critic;
  ActorNet actor;
  RunDiagnostics diagnostics;
};

// Full training loop. Runs the calibration gate first and throws GateError
// unless it passes or force_gate is set. Deterministic for fixed seeds.
TrainResult train(const LabeledSeriesDataset& ds, const ReservoirModel& model,
                  const CriticNet& critic, const ActorNet& actor, const TrainConfig& cfg,
                  bool force_gate = false);

struct EvalResult {
  double accuracy = 0.0;
  Eigen::MatrixXi confusion;  // row = true label, col = predicted
  long n_series = 0;
};

// Feedforward pass only: predicts the argmax of the time-averaged decoded
// output per series.
EvalResult evaluate(const ReservoirModel& model, const LabeledSeriesDataset& ds, double dt);

// Verification harness: the identical critic/actor update laws on the scalar
// plant e_dot = a*e + b*u with identity features, checked against the
// closed-form Riccati solution.
struct LqrConfig {
  double a = -1.0;
  double b = 1.0;
  double r = 1.0;
  double eta = 2.0;
  double dt = 0.002;
  double alpha_c = 0.8;
  double alpha_a = 2.0;
  int episodes = 300;
  int steps_per_episode = 2000;
  double noise_a0 = 0.8;
  double noise_decay = 0.98;
  int polish_episodes = 60;  // trailing noise-free episodes
  double e0 = 2.0;
  std::uint64_t seed = 12345;
};

struct LqrReport {
  LqrConfig cfg;
  double P_riccati = 0.0;
  double P_learned = 0.0;
  double gain_target = 0.0;
  double gain_learned = 0.0;
  double gain_rel_err = 1.0;
  double hjb_residual_unit_e = 0.0;
  long steps = 0;
  bool converged = false;
  bool gate_overridden = false;  // eta <= 1 or alpha_a <= 0 noted
  std::string to_text() const;
};

LqrReport lqr_selftest(const LqrConfig& cfg = {});

}  // namespace adprc
