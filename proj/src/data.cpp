#include "adprc/data.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "adprc/io.hpp"
#include "adprc/rng.hpp"

namespace adprc {

long LabeledSeriesDataset::total_steps() const {
  long total = 0;
  for (const auto& s : series) total += s.values.rows();
  return total;
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

double parse_number(const std::string& field, long line_no, const char* what) {
  const char* begin = field.c_str();
  char* end = nullptr;
  double value = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || !std::isfinite(value)) {
    throw DataError("line " + std::to_string(line_no) + ": non-numeric " + what + " '" + field +
                    "'");
  }
  return value;
}

}  // namespace

LabeledSeriesDataset load_ucr_tsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open data file: " + path);

  struct Row {
    double raw_label;
    std::vector<double> values;
  };
  std::vector<Row> rows;
  std::string line;
  long line_no = 0;
  std::size_t expected_len = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) throw DataError("line " + std::to_string(line_no) + ": empty row");

    std::vector<std::string> fields = split_tabs(line);
    if (fields.size() < 2) {
      throw DataError("line " + std::to_string(line_no) + ": expected a label and values");
    }
    if (rows.empty()) {
      expected_len = fields.size();
    } else if (fields.size() != expected_len) {
      throw DataError("line " + std::to_string(line_no) + ": ragged row (" +
                      std::to_string(fields.size()) + " fields, expected " +
                      std::to_string(expected_len) + ")");
    }

    Row row;
    row.raw_label = parse_number(fields[0], line_no, "label");
    if (std::floor(row.raw_label) != row.raw_label) {
      throw DataError("line " + std::to_string(line_no) + ": label '" + fields[0] +
                      "' is not integer-like");
    }
    row.values.reserve(fields.size() - 1);
    for (std::size_t i = 1; i < fields.size(); ++i) {
      row.values.push_back(parse_number(fields[i], line_no, "value"));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw DataError("empty data file: " + path);

  // Remap the distinct raw labels to 0..c-1 in sorted order.
  std::map<double, int> remap;
  for (const auto& row : rows) remap.emplace(row.raw_label, 0);
  int next = 0;
  for (auto& [raw, id] : remap) id = next++;

  LabeledSeriesDataset ds;
  ds.c = static_cast<int>(remap.size());
  ds.n_in = 1;
  ds.name = path;
  ds.series.reserve(rows.size());
  for (const auto& row : rows) {
    LabeledSeries s;
    s.label = remap.at(row.raw_label);
    s.values.resize(static_cast<long>(row.values.size()), 1);
    for (std::size_t t = 0; t < row.values.size(); ++t) s.values(static_cast<long>(t), 0) = row.values[t];
    ds.series.push_back(std::move(s));
  }
  return ds;
}

void save_ucr_tsv(const LabeledSeriesDataset& ds, const std::string& path) {
  if (ds.n_in != 1) throw DataError("UCR TSV serialization is univariate (n_in = 1)");
  std::ostringstream out;
  for (const auto& s : ds.series) {
    out << s.label;
    for (long t = 0; t < s.values.rows(); ++t) out << '\t' << format_g17(s.values(t, 0));
    out << '\n';
  }
  write_text_file(path, out.str());
}

Eigen::VectorXd one_hot(int label, int c) {
  require(c > 0, "class count must be positive");
  require(label >= 0 && label < c, "label out of range");
  Eigen::VectorXd y = Eigen::VectorXd::Zero(c);
  y(label) = 1.0;
  return y;
}

Eigen::MatrixXd make_reference(int label, int n_l, int c) {
  require(n_l >= 1, "reference length must be at least 1");
  const Eigen::VectorXd y = one_hot(label, c);
  Eigen::MatrixXd ref(n_l, c);
  ref.rowwise() = y.transpose();
  return ref;
}

LabeledSeriesDataset synth_two_tone(int n_s, int n_l, double f1, double f2, double noise_sd,
                                    std::uint64_t seed) {
  require(n_s > 0 && n_l > 0, "n_s and n_l must be positive");
  require(f1 != f2, "f1 and f2 must differ");
  require(noise_sd >= 0, "noise_sd must be non-negative");

  Rng rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  LabeledSeriesDataset ds;
  ds.c = 2;
  ds.n_in = 1;
  ds.name = "two_tone";
  ds.series.reserve(n_s);
  for (int k = 0; k < n_s; ++k) {
    LabeledSeries s;
    s.label = k % 2;
    const double f = (s.label == 0) ? f1 : f2;
    s.values.resize(n_l, 1);
    for (int t = 0; t < n_l; ++t) {
      s.values(t, 0) = std::sin(2.0 * std::numbers::pi * f * t) + noise_sd * gauss(rng);
    }
    ds.series.push_back(std::move(s));
  }
  return ds;
}

Eigen::MatrixXd encode_projection_matrix(int k, int n_in, std::uint64_t seed) {
  require(k > 0 && n_in > 0, "projection dimensions must be positive");
  Rng rng(seed);
  return uniform_matrix(k, n_in, -1.0, 1.0, rng);
}

LabeledSeries encode_with(const LabeledSeries& s, const Eigen::MatrixXd& projection) {
  require(projection.cols() == s.values.cols(), "projection columns must match series channels");
  LabeledSeries out;
  out.label = s.label;
  out.values = s.values * projection.transpose();
  return out;
}

LabeledSeries encode(const LabeledSeries& s, EncodeMode mode, int k, std::uint64_t seed) {
  if (mode == EncodeMode::Identity) return s;
  return encode_with(s, encode_projection_matrix(k, static_cast<int>(s.values.cols()), seed));
}

}  // namespace adprc
