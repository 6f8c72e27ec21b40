#include "gsra/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gsra {

SupportSet::SupportSet(std::vector<int> indices) {
    for (int idx : indices) add(idx);
}

void SupportSet::add(int index) {
    if (index < 0) throw ConfigError("support index must be non-negative, got " + std::to_string(index));
    if (contains(index)) throw ConfigError("duplicate support index " + std::to_string(index));
    indices_.push_back(index);
}

bool SupportSet::contains(int index) const {
    return std::find(indices_.begin(), indices_.end(), index) != indices_.end();
}

std::vector<int> SupportSet::sorted() const {
    std::vector<int> out = indices_;
    std::sort(out.begin(), out.end());
    return out;
}

bool same_support(const SupportSet& a, const SupportSet& b) {
    return a.sorted() == b.sorted();
}

SupportSet intersect(const SupportSet& a, const SupportSet& b) {
    std::vector<int> sa = a.sorted(), sb = b.sorted(), out;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(out));
    return SupportSet(std::move(out));
}

SupportSet unite(const SupportSet& a, const SupportSet& b) {
    SupportSet out = a;
    for (int idx : b)
        if (!out.contains(idx)) out.add(idx);
    return out;
}

SensingMatrix::SensingMatrix(Eigen::MatrixXd entries, bool normalize_columns)
    : mat_(std::move(entries)) {
    if (mat_.rows() <= 0 || mat_.cols() <= 0)
        throw ConfigError("sensing matrix must be non-empty");
    if (mat_.rows() >= mat_.cols())
        throw ConfigError("sensing matrix must be underdetermined (m < n), got " +
                          std::to_string(mat_.rows()) + "x" + std::to_string(mat_.cols()));
    if (!mat_.allFinite()) throw ConfigError("sensing matrix entries must be finite");
    column_norms_ = mat_.colwise().norm();
    if (normalize_columns) {
        for (int j = 0; j < mat_.cols(); ++j) {
            if (column_norms_[j] == 0.0)
                throw ConfigError("cannot normalize zero column " + std::to_string(j));
            mat_.col(j) /= column_norms_[j];
        }
        column_norms_.setOnes();
        normalized_ = true;
    }
}

Eigen::MatrixXd SensingMatrix::submatrix(const SupportSet& s) const {
    Eigen::MatrixXd sub(rows(), s.size());
    int c = 0;
    for (int j : s) {
        if (j >= cols())
            throw DimensionMismatch("support index " + std::to_string(j) + " out of range for n=" +
                                    std::to_string(cols()));
        sub.col(c++) = mat_.col(j);
    }
    return sub;
}

DenseVector least_squares_on_support(const SensingMatrix& phi, const DenseVector& y,
                                     const SupportSet& s) {
    if (y.size() != phi.rows()) throw DimensionMismatch("measurement length does not match matrix rows");
    if (s.size() > phi.rows())
        throw SupportTooLarge("support size " + std::to_string(s.size()) + " exceeds m=" +
                              std::to_string(phi.rows()));
    if (s.empty()) return DenseVector(0);

    Eigen::MatrixXd sub = phi.submatrix(s);
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(sub);
    qr.setThreshold(kRankTolerance);
    if (qr.rank() < s.size())
        throw RankDeficient("column subset of size " + std::to_string(s.size()) +
                            " is numerically rank-deficient");
    return qr.solve(y);
}

DenseVector residual(const SensingMatrix& phi, const DenseVector& y, const SupportSet& s,
                     const DenseVector& coeffs) {
    if (y.size() != phi.rows()) throw DimensionMismatch("measurement length does not match matrix rows");
    if (coeffs.size() != s.size()) throw DimensionMismatch("coefficient count does not match support size");
    DenseVector r = y;
    for (int i = 0; i < s.size(); ++i) r -= coeffs[i] * phi.col(s[i]);
    return r;
}

DenseVector correlation_scores(const SensingMatrix& phi, const DenseVector& r) {
    if (r.size() != phi.rows()) throw DimensionMismatch("residual length does not match matrix rows");
    return phi.mat().transpose() * r;
}

std::vector<int> top_l_indices(const DenseVector& scores, int l, const SupportSet& exclude) {
    const int n = static_cast<int>(scores.size());
    std::vector<char> excluded(static_cast<size_t>(n), 0);
    for (int j : exclude)
        if (j >= 0 && j < n) excluded[static_cast<size_t>(j)] = 1;

    std::vector<int> candidates;
    candidates.reserve(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j)
        if (!excluded[static_cast<size_t>(j)]) candidates.push_back(j);

    if (l < 0 || static_cast<size_t>(l) > candidates.size())
        throw NotEnoughCandidates("requested " + std::to_string(l) + " indices but only " +
                                  std::to_string(candidates.size()) + " eligible");

    auto better = [&scores](int a, int b) {
        double ma = std::abs(scores[a]), mb = std::abs(scores[b]);
        if (ma != mb) return ma > mb;
        return a < b;  // tie: smaller index first
    };
    std::partial_sort(candidates.begin(), candidates.begin() + l, candidates.end(), better);
    candidates.resize(static_cast<size_t>(l));
    return candidates;
}

IncrementalQr::IncrementalQr(const SensingMatrix& phi, const DenseVector& y, int capacity)
    : phi_(&phi), resid_(y) {
    if (y.size() != phi.rows()) throw DimensionMismatch("measurement length does not match matrix rows");
    capacity = std::min(capacity, phi.rows());
    q_.setZero(phi.rows(), capacity);
    r_.setZero(capacity, capacity);
    qty_.setZero(capacity);
}

bool IncrementalQr::try_push(int j) {
    if (k_ >= q_.cols()) return false;
    if (support_.contains(j)) return false;

    Eigen::VectorXd v = phi_->col(j);
    const double norm0 = v.norm();
    if (norm0 == 0.0) return false;

    // Two-pass Gram-Schmidt keeps Q orthonormal to working precision.
    Eigen::VectorXd h = Eigen::VectorXd::Zero(k_);
    if (k_ > 0) {
        h = q_.leftCols(k_).transpose() * v;
        v.noalias() -= q_.leftCols(k_) * h;
        Eigen::VectorXd h2 = q_.leftCols(k_).transpose() * v;
        v.noalias() -= q_.leftCols(k_) * h2;
        h += h2;
    }
    const double d = v.norm();
    if (d <= kRankTolerance * norm0) return false;

    q_.col(k_) = v / d;
    r_.col(k_).head(k_) = h;
    r_(k_, k_) = d;
    qty_[k_] = q_.col(k_).dot(resid_);
    resid_.noalias() -= qty_[k_] * q_.col(k_);
    support_.add(j);
    ++k_;
    return true;
}

DenseVector IncrementalQr::solve() const {
    DenseVector c(k_);
    for (int i = k_ - 1; i >= 0; --i) {
        double s = qty_[i];
        for (int j = i + 1; j < k_; ++j) s -= r_(i, j) * c[j];
        c[i] = s / r_(i, i);
    }
    return c;
}

PrunedSolve solve_pruned(const SensingMatrix& phi, const DenseVector& y, const SupportSet& s) {
    IncrementalQr qr(phi, y, std::min(s.size(), phi.rows()));
    for (int j : s) qr.try_push(j);
    return PrunedSolve{qr.support(), qr.solve(), qr.residual()};
}

}  // namespace gsra
