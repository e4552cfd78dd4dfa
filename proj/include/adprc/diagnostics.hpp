#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "adprc/common.hpp"

namespace adprc {

// Extrema gathered during a no-update calibration epoch.
struct GateCalibration {
  double sigma_c_min = 0.0;  // min Frobenius norm of e_dot * z_c'
  double g_bar = 0.0;        // max Frobenius norm of g
  double z_c_bar = 0.0;      // max norm of the critic features
  long steps = 0;
};

struct GateReport {
  double sigma_c_min = 0.0;
  double g_bar = 0.0;
  double z_c_bar = 0.0;
  double inv_R_norm = 0.0;
  double alpha_c_bound = 0.0;
  double eta = 0.0;
  double alpha_c = 0.0;
  double alpha_a = 0.0;
  bool eta_ok = false;
  bool alpha_a_ok = false;
  bool alpha_c_ok = false;
  bool pe_ok = false;
  bool forced = false;  // training proceeded despite a failing gate
  std::vector<std::string> violations;

  bool passed() const { return eta_ok && alpha_a_ok && alpha_c_ok && pe_ok; }
  std::string to_text() const;
};

class GateError : public std::runtime_error {
 public:
  explicit GateError(GateReport r);
  GateReport report;
};

struct StepRecord {
  long step = 0;
  int epoch = 0;
  int series = 0;
  int t_index = 0;
  double e_sq = 0.0;
  double e_c = 0.0;
  double norm_ea = 0.0;
  double norm_u = 0.0;
  double H = 0.0;
};

struct EpochRecord {
  int epoch = 0;
  double sum_e_sq = 0.0;
  double train_accuracy = 0.0;
  double delta_wc = 0.0;
  double delta_wa = 0.0;
};

struct RunDiagnostics {
  std::vector<StepRecord> steps;
  std::vector<EpochRecord> epochs;
  GateReport gate;
  double wall_seconds = 0.0;
};

// CSV schemas are stable; all doubles print with %.17g so identical runs
// produce byte-identical files.
std::string step_csv(const std::vector<StepRecord>& steps);
std::string epoch_csv(const std::vector<EpochRecord>& epochs);

class TrainingDiverged : public DivergenceError {
 public:
  TrainingDiverged(const std::string& what, std::vector<StepRecord> last_window);
  std::vector<StepRecord> window;
};

}  // namespace adprc
