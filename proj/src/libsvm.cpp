#include "proxcg/libsvm.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "proxcg/errors.hpp"

namespace proxcg {

namespace {

bool parse_double_token(const std::string& token, double& out) {
  const char* begin = token.c_str();
  char* end = nullptr;
  out = std::strtod(begin, &end);
  return end == begin + token.size() && !token.empty();
}

double parse_label(const std::string& token, long line) {
  double raw;
  if (!parse_double_token(token, raw))
    throw ParseError("libsvm: malformed label '" + token + "'", line);
  if (raw == 1.0) return 1.0;
  if (raw == -1.0) return -1.0;
  if (raw == 0.0) return -1.0;  // 0/1 labeling convention
  throw ParseError("libsvm: unsupported label '" + token + "'", line);
}

}  // namespace

LibsvmDataset parse_libsvm(std::string_view text, std::size_t n_override) {
  std::vector<double> labels;
  std::vector<std::size_t> row_ptr{0};
  std::vector<std::size_t> col_idx;
  std::vector<double> values;
  std::size_t max_index = 0;  // 1-based

  std::istringstream stream{std::string(text)};
  std::string line;
  long line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);

    std::istringstream fields(line);
    std::string token;
    if (!(fields >> token)) continue;  // blank or comment-only line

    labels.push_back(parse_label(token, line_no));

    std::size_t prev_index = 0;
    while (fields >> token) {
      const auto colon = token.find(':');
      if (colon == std::string::npos || colon == 0 || colon + 1 == token.size())
        throw ParseError("libsvm: malformed feature token '" + token + "'", line_no);

      const std::string idx_str = token.substr(0, colon);
      for (char ch : idx_str)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
          throw ParseError("libsvm: malformed feature index '" + idx_str + "'", line_no);
      const unsigned long index = std::strtoul(idx_str.c_str(), nullptr, 10);
      if (index == 0) throw ParseError("libsvm: feature indices are 1-based", line_no);

      double value;
      if (!parse_double_token(token.substr(colon + 1), value) || !std::isfinite(value))
        throw ParseError("libsvm: malformed feature value in '" + token + "'", line_no);

      if (index == prev_index)
        throw ParseError("libsvm: duplicate feature index " + idx_str, line_no);
      if (index < prev_index)
        throw ParseError("libsvm: feature indices must ascend, got " + idx_str, line_no);
      prev_index = index;

      if (n_override > 0 && index > n_override)
        throw ParseError("libsvm: feature index " + idx_str + " exceeds declared count " +
                             std::to_string(n_override),
                         line_no);
      max_index = std::max(max_index, static_cast<std::size_t>(index));

      if (value != 0.0) {
        col_idx.push_back(index - 1);
        values.push_back(value);
      }
    }
    row_ptr.push_back(values.size());
  }

  const std::size_t n = n_override > 0 ? n_override : max_index;
  SparseMatrix features(labels.size(), n, std::move(row_ptr), std::move(col_idx),
                        std::move(values));
  return {std::move(features), Vector(labels.begin(), labels.end())};
}

LibsvmDataset parse_libsvm_file(const std::string& path, std::size_t n_override) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("libsvm: cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_libsvm(buffer.str(), n_override);
}

std::string serialize_libsvm(const LibsvmDataset& dataset) {
  std::string out;
  char buf[64];
  const auto& m = dataset.features;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += dataset.labels[i] > 0 ? "+1" : "-1";
    for (std::size_t p = m.row_ptr()[i]; p < m.row_ptr()[i + 1]; ++p) {
      std::snprintf(buf, sizeof(buf), " %zu:%.17g", m.col_idx()[p] + 1, m.values()[p]);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

CompositeProblem logistic_problem(LibsvmDataset dataset, double lambda) {
  if (dataset.samples() == 0) throw std::invalid_argument("logistic_problem: empty dataset");
  return {SmoothOracle::logistic(LinearOperator(std::move(dataset.features)),
                                 std::move(dataset.labels)),
          ProxOracle::l1(lambda)};
}

}  // namespace proxcg
