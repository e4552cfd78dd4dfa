#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "adprc/reservoir.hpp"

namespace adprc {

enum class FeatureMode { Reservoir, Projection, Identity };

// Fixed feature generator shared by critic and actor. Reservoir mode keeps a
// small leaky recurrent state driven by the input; Projection is a memoryless
// tanh of a seeded random map; Identity passes the input through.
class FeatureNet {
 public:
  FeatureNet() = default;
  FeatureNet(int n_features, int n_inputs, FeatureMode mode, std::uint64_t seed,
             double alpha1 = 1.0, double spectral_radius = 0.9);

  Eigen::VectorXd advance(const Eigen::VectorXd& input, double dt);
  void reset();

  int size() const { return n_features_; }
  FeatureMode mode() const { return mode_; }

 private:
  int n_features_ = 0;
  FeatureMode mode_ = FeatureMode::Reservoir;
  ReservoirModel net_;  // Reservoir mode only
  ReservoirState state_;
  Eigen::MatrixXd proj_;  // Projection mode only
};

}  // namespace adprc
