#pragma once

#include <string>
#include <string_view>

#include "proxcg/oracles.hpp"

namespace proxcg {

/// Sparse binary-classification dataset in the LIBSVM text format.
struct LibsvmDataset {
  SparseMatrix features;  // m x n
  Vector labels;          // entries in {-1, +1}

  std::size_t samples() const { return features.rows(); }
  std::size_t num_features() const { return features.cols(); }
};

/// Parse LIBSVM text: one sample per line, "<label> <idx>:<val> ...".
/// Indices are 1-based and must strictly ascend within a line; '#' starts a
/// comment; labels 0/1 are mapped to -1/+1. Explicit zero values are dropped.
/// The feature count is the largest index seen unless n_override is given.
/// Throws ParseError carrying the offending 1-based line number.
LibsvmDataset parse_libsvm(std::string_view text, std::size_t n_override = 0);

LibsvmDataset parse_libsvm_file(const std::string& path, std::size_t n_override = 0);

/// Inverse of parse_libsvm up to float formatting: emits "label idx:val ..."
/// lines with round-trippable value precision.
std::string serialize_libsvm(const LibsvmDataset& dataset);

/// l1-regularized logistic regression on the dataset.
CompositeProblem logistic_problem(LibsvmDataset dataset, double lambda);

}  // namespace proxcg
