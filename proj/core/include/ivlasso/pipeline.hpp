#pragma once

#include <optional>

#include "ivlasso/cross_validation.hpp"
#include "ivlasso/fit.hpp"
#include "ivlasso/garrote.hpp"
#include "ivlasso/lars.hpp"
#include "ivlasso/sample.hpp"

namespace ivlasso {

// Everything needed to run the penalized interval regression end to end.
struct PlrConfig {
  Kernel kernel{5.0, 1.0, 1.0};
  double gamma = 0.5;
  bool penalize_intercepts = false;
  bool standardize = true;
  int cv_folds = 5;
  FoldScheme fold_scheme = FoldScheme::ContiguousBlocks;
  std::optional<double> fixed_lambda;  // set to skip cross-validation
  std::vector<double> lambda_grid;     // empty: auto log grid
  int grid_points = 50;
  double grid_ratio = 1e-4;

  CvOptions cv_options() const {
    return {gamma, cv_folds, fold_scheme, penalize_intercepts, standardize};
  }
};

struct PlrFit {
  FitResult natural;       // coefficients in the units of the input sample
  FitResult standardized;  // coefficients on the standardized sample
  LarsPath path;
  Standardization scaling;
  CvResult cv;             // empty grid when fixed_lambda was used
  Eigen::VectorXd pilot;   // minimum D_K estimate on the standardized sample
};

// Adaptive-LASSO pipeline: standardize, pilot fit, weights, ILARS path,
// lambda by CV (or fixed), coefficients mapped back to natural units.
PlrFit plr_fit(const IntervalSample& sample, const PlrConfig& config);

// Unpenalized minimum D_K-distance fit (the ACIX benchmark) in natural units.
FitResult acix_fit(const IntervalSample& sample, const Kernel& k,
                   bool standardize = true);

// Ridge and garrote pipelines at a fixed penalty, natural units.
FitResult ridge_fit(const IntervalSample& sample, const Kernel& k,
                    double lambda, bool standardize = true);
FitResult garrote_fit(const IntervalSample& sample, const Kernel& k,
                      double lambda, bool standardize = true);

// Z'theta for a natural-unit fit.
Interval predict(const Eigen::VectorXd& coefficients, const IntervalVector& row);

}  // namespace ivlasso
