#include "gsra/instance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace gsra {

namespace {
// Stream tags so matrix/signal/noise draws never interleave.
constexpr std::uint64_t kTagMatrix = 0x5048492D47454E31ULL;
constexpr std::uint64_t kTagSignal = 0x5349472D47454E31ULL;
constexpr std::uint64_t kTagNoise = 0x4E4F492D47454E31ULL;
}  // namespace

NoiseModel NoiseModel::calibrated(int k, int m, double smnr_db, double sigma_s_sq) {
    if (k <= 0) throw ZeroSignal("noise calibration requires a nonzero signal (k >= 1)");
    if (m <= 0) throw ConfigError("noise calibration requires m >= 1");
    NoiseModel nm;
    nm.smnr_db = smnr_db;
    nm.sigma_s_sq = sigma_s_sq;
    if (std::isinf(smnr_db)) {
        nm.sigma_w_sq = 0.0;
    } else {
        nm.sigma_w_sq = static_cast<double>(k) * sigma_s_sq /
                        (static_cast<double>(m) * std::pow(10.0, smnr_db / 10.0));
    }
    return nm;
}

SensingMatrix gen_sensing_matrix(int m, int n, bool normalize_columns, std::uint64_t seed) {
    if (m <= 0 || n <= 0 || m >= n)
        throw ConfigError("sensing matrix generation requires 0 < m < n, got m=" +
                          std::to_string(m) + " n=" + std::to_string(n));
    Rng rng = Rng(seed).fork(kTagMatrix);
    Eigen::MatrixXd entries(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) entries(i, j) = rng.next_gaussian();
    return SensingMatrix(std::move(entries), normalize_columns);
}

SparseSignal gen_sparse_signal(const SignalModel& model, std::uint64_t seed) {
    if (model.n <= 0) throw ConfigError("signal model requires n >= 1");
    if (model.k < 0 || model.k > model.n)
        throw ConfigError("signal model requires 0 <= k <= n");

    Rng rng = Rng(seed).fork(kTagSignal);
    // Partial Fisher-Yates: the first k slots become the support.
    std::vector<int> perm(static_cast<size_t>(model.n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = 0; i < model.k; ++i) {
        const int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(model.n - i)));
        std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
    }
    std::vector<int> chosen(perm.begin(), perm.begin() + model.k);
    std::sort(chosen.begin(), chosen.end());

    SparseSignal sig;
    sig.x = DenseVector::Zero(model.n);
    for (int idx : chosen) {
        sig.x[idx] = model.kind == SignalKind::zero_one ? 1.0 : rng.next_gaussian();
        sig.support.add(idx);
    }
    return sig;
}

DenseVector gen_noise_for_smnr(const SparseSignal& x, int m, double smnr_db, std::uint64_t seed) {
    if (x.k() == 0) throw ZeroSignal("cannot calibrate noise against an all-zero signal");
    if (std::isinf(smnr_db)) return DenseVector::Zero(m);

    const NoiseModel nm = NoiseModel::calibrated(x.k(), m, smnr_db);
    const double sigma_w = std::sqrt(nm.sigma_w_sq);
    Rng rng = Rng(seed).fork(kTagNoise);
    DenseVector w(m);
    for (int i = 0; i < m; ++i) w[i] = sigma_w * rng.next_gaussian();
    return w;
}

}  // namespace gsra
