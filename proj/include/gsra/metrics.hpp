#ifndef GSRA_METRICS_HPP
#define GSRA_METRICS_HPP

#include <utility>
#include <vector>

#include "gsra/instance.hpp"
#include "gsra/pursuits.hpp"

namespace gsra {

/// Relative reconstruction tolerance that separates "exact" from "missed".
inline constexpr double kExactRecoveryTol = 1e-4;

/// True iff ||x_true - x_hat||_2 <= tol * ||x_true||_2.
bool exact_recovery(const SparseSignal& x_true, const RecoveryResult& result,
                    double tol = kExactRecoveryTol);

/// Signal-to-reconstruction-error ratio in dB over a batch, energies summed
/// before the log. Returns +inf when every pair reconstructs perfectly.
double srer(const std::vector<std::pair<DenseVector, DenseVector>>& true_and_estimate);

/// Alternative convention: per-pair dB values averaged.
double srer_db_mean(const std::vector<std::pair<DenseVector, DenseVector>>& true_and_estimate);

/// 10*log10(sum ||x||^2 / sum ||w||^2); +inf for a noiseless batch.
double empirical_smnr(const std::vector<std::pair<DenseVector, DenseVector>>& signal_and_noise);

}  // namespace gsra

#endif
