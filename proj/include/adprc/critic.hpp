#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <utility>

#include "adprc/features.hpp"
#include "adprc/hjb.hpp"

namespace adprc {

// Value-gradient approximator: a fixed feature net over the tracking error
// plus a trainable linear decoder. Only the decoder weights learn.
class CriticNet {
 public:
  CriticNet() = default;
  CriticNet(int n_c, int c, FeatureMode mode, std::uint64_t seed, double alpha_c);

  // One feature step driven by e; returns (z_c, V_e_hat = Wc * z_c).
  std::pair<Eigen::VectorXd, Eigen::VectorXd> forward(const Eigen::VectorXd& e, double dt);

  // Wc <- Wc - dt * alpha_c * e_c * (e_dot * z_c'), the gradient of the
  // squared Bellman residual.
  void update(const Eigen::VectorXd& z_c, const Eigen::VectorXd& e_dot, double e_c, double dt);

  void reset_features() { features_.reset(); }

  const Eigen::MatrixXd& weights() const { return Wc_; }
  void set_weights(const Eigen::MatrixXd& Wc);
  double learning_rate() const { return alpha_c_; }
  int n_features() const { return features_.size(); }

 private:
  FeatureNet features_;
  Eigen::MatrixXd Wc_;  // c x n_c, starts at zero
  double alpha_c_ = 0.0;
};

// eta * e'e + u'Ru + (Wc z_c)' e_dot; the Hamiltonian with the approximated
// value gradient.
double bellman_residual(const Eigen::VectorXd& e, const Eigen::VectorXd& u,
                        const Eigen::VectorXd& z_c, const Eigen::MatrixXd& Wc,
                        const Eigen::VectorXd& e_dot, const CostConfig& cfg);

}  // namespace adprc
