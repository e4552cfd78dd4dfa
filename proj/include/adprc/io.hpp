#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>

#include "adprc/reservoir.hpp"

namespace adprc {

// %.17g; round-trips doubles through text exactly.
std::string format_g17(double x);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// FNV-1a over the raw file bytes; used as the dataset fingerprint.
std::uint64_t fnv1a64_file(const std::string& path);

struct DecoderFile {
  Eigen::MatrixXd W_D;
  std::uint64_t reservoir_seed = 0;
  double lambda = 0.0;
};

void save_decoder(const std::string& path, const Eigen::MatrixXd& W_D,
                  std::uint64_t reservoir_seed, double lambda);
DecoderFile load_decoder(const std::string& path);

void save_model(const std::string& path, const ReservoirModel& model);
ReservoirModel load_model(const std::string& path);

}  // namespace adprc
