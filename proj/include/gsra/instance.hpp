#ifndef GSRA_INSTANCE_HPP
#define GSRA_INSTANCE_HPP

#include <cstdint>

#include "gsra/linalg.hpp"
#include "gsra/rng.hpp"

namespace gsra {

enum class SignalKind { gaussian_nonzeros, zero_one };

struct SignalModel {
    SignalKind kind = SignalKind::gaussian_nonzeros;
    int n = 0;
    int k = 0;
    /// Theoretical per-nonzero variance; 1 for both supported kinds.
    double sigma_s_sq() const { return 1.0; }
};

struct SparseSignal {
    DenseVector x;       // length n, zero off support
    SupportSet support;  // sorted, exactly k indices
    int k() const { return support.size(); }
};

/// Per-element noise variance and its calibration target.
struct NoiseModel {
    double smnr_db = 0.0;
    double sigma_s_sq = 1.0;
    double sigma_w_sq = 0.0;

    /// Inverts the SMNR definition 10*log10(k*sigma_s^2 / (m*sigma_w^2)).
    static NoiseModel calibrated(int k, int m, double smnr_db, double sigma_s_sq = 1.0);
};

/// m-by-n matrix with i.i.d. standard normal entries, filled row-major from
/// the seeded stream; optionally unit-normalized columns.
SensingMatrix gen_sensing_matrix(int m, int n, bool normalize_columns, std::uint64_t seed);

/// K-subset support drawn uniformly without replacement; nonzeros per model.
SparseSignal gen_sparse_signal(const SignalModel& model, std::uint64_t seed);

/// Measurement noise calibrated so the expected SMNR hits `smnr_db`.
/// An infinite target is the noiseless sentinel (zero vector).
DenseVector gen_noise_for_smnr(const SparseSignal& x, int m, double smnr_db, std::uint64_t seed);

}  // namespace gsra

#endif
