#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <utility>

#include "adprc/features.hpp"
#include "adprc/hjb.hpp"
#include "adprc/reservoir.hpp"

namespace adprc {

// Control-law approximator; its output vector is written back into the
// plastic entries of the recurrent matrix.
class ActorNet {
 public:
  ActorNet() = default;
  ActorNet(int n_a, int c, int n_controls, FeatureMode mode, std::uint64_t seed, double alpha_a);

  // One feature step driven by e; returns (z_a, u_hat = Wa * z_a).
  std::pair<Eigen::VectorXd, Eigen::VectorXd> forward(const Eigen::VectorXd& e, double dt);

  // Wa <- Wa - dt * alpha_a * e_a * z_a'
  void update(const Eigen::VectorXd& z_a, const Eigen::VectorXd& e_a, double dt);

  void reset_features() { features_.reset(); }

  const Eigen::MatrixXd& weights() const { return Wa_; }
  void set_weights(const Eigen::MatrixXd& Wa);
  double learning_rate() const { return alpha_a_; }
  int n_controls() const { return static_cast<int>(Wa_.rows()); }

 private:
  FeatureNet features_;
  Eigen::MatrixXd Wa_;  // N x n_a, starts at zero
  double alpha_a_ = 0.0;
};

// u_hat minus the critic-implied stationary control: u_hat + 1/2 R^-1 g' Wc z_c
Eigen::VectorXd actor_error(const Eigen::VectorXd& u_hat, const Eigen::VectorXd& z_c,
                            const Eigen::MatrixXd& Wc, const Eigen::MatrixXd& g_mat,
                            const CostConfig& cfg);

// Componentwise clamp to [-u_max, u_max]; u_max <= 0 disables the clamp.
Eigen::VectorXd clamp_control(const Eigen::VectorXd& u, double u_max);

// Writes u_k into W_r at plastic_idx[k]; all other entries are untouched.
void apply_control(ReservoirModel& model, const Eigen::VectorXd& u);

Eigen::VectorXd extract_plastic(const ReservoirModel& model);

}  // namespace adprc
