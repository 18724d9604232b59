#pragma once

#include <vector>

#include "ivlasso/interval.hpp"
#include "ivlasso/sample.hpp"

namespace ivlasso {

// Contiguous blocks respect time order (default); interleaved assigns row t
// to fold t mod k, for i.i.d.-style designs.
enum class FoldScheme { ContiguousBlocks, Interleaved };

struct CvResult {
  double best_lambda = 0.0;
  std::vector<double> grid;       // as evaluated, descending
  std::vector<double> mean_loss;  // mean validation D_K loss per grid point
};

struct CvOptions {
  double gamma = 0.5;
  int n_folds = 5;
  FoldScheme scheme = FoldScheme::ContiguousBlocks;
  bool penalize_intercepts = false;
  bool standardize = true;
};

std::vector<std::vector<int>> make_folds(int t, int n_folds, FoldScheme scheme);

// Five-fold style selection of the penalty level. Per fold, the whole
// pipeline is re-run on the training rows (standardization, pilot estimate,
// adaptive weights, path); validation loss is the summed D_K distance between
// held-out responses and their natural-unit predictions. Ties break toward
// the larger lambda.
CvResult cross_validate_lambda(const IntervalSample& sample, const Kernel& k,
                               const std::vector<double>& lambda_grid,
                               const CvOptions& opt);

// Default grid: n_points log-spaced values from lambda_max of the full-sample
// path down to lambda_max * ratio.
std::vector<double> default_lambda_grid(const IntervalSample& sample,
                                        const Kernel& k, const CvOptions& opt,
                                        int n_points = 50, double ratio = 1e-4);

std::vector<double> log_spaced_grid(double lambda_max, int n_points, double ratio);

}  // namespace ivlasso
