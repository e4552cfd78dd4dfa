#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "adprc/common.hpp"
#include "adprc/features.hpp"
#include "adprc/reservoir.hpp"

namespace adprc {

struct TrainConfig {
  int epochs = 30;
  double dt = 0.05;
  double eta = 2.0;
  double r = 1.0;  // R = r * I over the plastic entries
  double alpha_c = 1.0;
  double alpha_a = 2.0;
  double pe_amplitude = 0.1;
  double pe_decay = 0.85;
  double ridge_lambda = 0.01;
  std::uint64_t seed_reservoir = 101;
  std::uint64_t seed_critic = 202;
  std::uint64_t seed_actor = 303;
  std::uint64_t seed_noise = 404;
  std::uint64_t seed_data = 505;
  int n_r = 30;
  int n_plastic = 100;
  PlasticSelection plastic_mode = PlasticSelection::RandomSample;
  double u_max = 0.0;  // 0 selects the default 5 / sqrt(n_plastic)
  int n_c = 32;
  int n_a = 32;
  Nonlinearity phi = Nonlinearity::Tanh;
  FeatureMode feature_mode = FeatureMode::Reservoir;
  double spectral_radius = 0.9;
  double input_scale = 1.0;
  bool pe_on_g = false;  // also dither g in the learning-side computations
  int gate_warmup_steps = 2;
};

// Flat key = value text, '#' comments. Unknown keys are errors so that a
// misspelled hyper-parameter can never silently default.
TrainConfig parse_config_file(const std::string& path);
TrainConfig parse_config_text(const std::string& text, const std::string& origin);

// Structural checks (positivity, ranges). Admissibility of eta / alpha_c /
// alpha_a is the gate's job, not done here.
void validate_config(const TrainConfig& cfg);

// Canonical key/value snapshot, same keys the parser accepts.
std::vector<std::pair<std::string, std::string>> config_items(const TrainConfig& cfg);
void write_config_file(const TrainConfig& cfg, const std::string& path);

}  // namespace adprc
