#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "adprc/common.hpp"

namespace adprc {

// One multivariate series: values(t, i) is input channel i at step t.
struct LabeledSeries {
  Eigen::MatrixXd values;  // n_l x n_in
  int label = 0;
};

struct LabeledSeriesDataset {
  std::vector<LabeledSeries> series;
  int c = 0;
  int n_in = 0;
  std::string name;

  long total_steps() const;
};

// UCR-style TSV: one series per line, tab-separated, first field is the
// class label. Labels are remapped to 0..c-1 in sorted order.
LabeledSeriesDataset load_ucr_tsv(const std::string& path);
void save_ucr_tsv(const LabeledSeriesDataset& ds, const std::string& path);

Eigen::VectorXd one_hot(int label, int c);

// n_l copies of the one-hot vector for label, one per row.
Eigen::MatrixXd make_reference(int label, int n_l, int c);

// Two balanced classes of sinusoids at f1 and f2 (cycles per sample) with
// additive Gaussian noise. Series k has label k % 2.
LabeledSeriesDataset synth_two_tone(int n_s, int n_l, double f1, double f2,
                                    double noise_sd, std::uint64_t seed);

enum class EncodeMode { Identity, RandomProjection };

Eigen::MatrixXd encode_projection_matrix(int k, int n_in, std::uint64_t seed);
LabeledSeries encode_with(const LabeledSeries& s, const Eigen::MatrixXd& projection);
LabeledSeries encode(const LabeledSeries& s, EncodeMode mode, int k, std::uint64_t seed);

}  // namespace adprc
