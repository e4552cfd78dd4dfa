#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <vector>

#include "adprc/data.hpp"

namespace adprc {

// Logistic is centered (sigma(x) - 1/2) so the origin stays a fixed point.
enum class Nonlinearity { Tanh, Logistic };

Eigen::VectorXd apply_nonlinearity(Nonlinearity phi, const Eigen::VectorXd& v);

enum class PlasticSelection { RandomSample, RowMajorPrefix };

struct ReservoirModel {
  int n_r = 0;
  int n_in = 0;
  int c = 0;
  double alpha1 = 1.0;  // leak: potential drifts as -alpha1 * v
  Nonlinearity phi = Nonlinearity::Tanh;
  Eigen::MatrixXd W_E;  // n_r x n_in
  Eigen::MatrixXd W_r;  // n_r x n_r
  Eigen::MatrixXd W_D;  // c x n_r
  // Ordered (row, col) positions in W_r; the ordering defines the layout
  // of the control vector u.
  std::vector<std::pair<int, int>> plastic_idx;

  int n_plastic() const { return static_cast<int>(plastic_idx.size()); }
};

struct ReservoirState {
  Eigen::VectorXd v;
};

struct ReservoirInit {
  int n_r = 30;
  int n_in = 1;
  int c = 2;
  double alpha1 = 1.0;
  Nonlinearity phi = Nonlinearity::Tanh;
  double spectral_radius = 0.9;
  double input_scale = 1.0;
  int n_plastic = 0;
  PlasticSelection selection = PlasticSelection::RandomSample;
  bool zero_plastic = true;  // plastic entries start at zero
  std::uint64_t seed = 1;
};

ReservoirModel make_reservoir(const ReservoirInit& init);
ReservoirState make_state(const ReservoirModel& model);

// Explicit Euler update; returns the new state, the old one is untouched.
ReservoirState step(const ReservoirState& state, const Eigen::VectorXd& input,
                    const ReservoirModel& model, double dt, long step_index = -1);

Eigen::VectorXd decode(const ReservoirState& state, const ReservoirModel& model);

// Ridge regression from collected states to one-hot targets; the recurrent
// matrix stays frozen at its current value for the whole pass.
Eigen::MatrixXd pretrain_decoder(const LabeledSeriesDataset& ds, const ReservoirModel& model,
                                 double lambda, double dt);

}  // namespace adprc
