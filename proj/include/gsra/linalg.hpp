#ifndef GSRA_LINALG_HPP
#define GSRA_LINALG_HPP

#include <Eigen/Dense>
#include <vector>

#include "gsra/errors.hpp"

namespace gsra {

using DenseVector = Eigen::VectorXd;

/// Relative threshold below which a column subset is declared rank-deficient.
inline constexpr double kRankTolerance = 1e-10;

/// Ordered set of distinct column indices (an estimate of a signal support).
/// Insertion order is preserved; set-style queries go through contains().
class SupportSet {
  public:
    SupportSet() = default;
    explicit SupportSet(std::vector<int> indices);

    /// Appends a new index. Throws ConfigError on duplicates or negatives.
    void add(int index);
    bool contains(int index) const;

    int size() const { return static_cast<int>(indices_.size()); }
    bool empty() const { return indices_.empty(); }
    int operator[](int i) const { return indices_[static_cast<size_t>(i)]; }

    auto begin() const { return indices_.begin(); }
    auto end() const { return indices_.end(); }
    const std::vector<int>& indices() const { return indices_; }

    std::vector<int> sorted() const;

  private:
    std::vector<int> indices_;
};

/// True when both sets hold the same indices, ignoring order.
bool same_support(const SupportSet& a, const SupportSet& b);

/// Sorted intersection of two supports.
SupportSet intersect(const SupportSet& a, const SupportSet& b);

/// Union preserving the order of `a` followed by new elements of `b`.
SupportSet unite(const SupportSet& a, const SupportSet& b);

/// Dense m-by-n sensing matrix, m < n, immutable after construction.
class SensingMatrix {
  public:
    SensingMatrix(Eigen::MatrixXd entries, bool normalize_columns = false);

    int rows() const { return static_cast<int>(mat_.rows()); }
    int cols() const { return static_cast<int>(mat_.cols()); }
    const Eigen::MatrixXd& mat() const { return mat_; }
    Eigen::MatrixXd::ConstColXpr col(int j) const { return mat_.col(j); }
    bool columns_normalized() const { return normalized_; }
    const Eigen::VectorXd& column_norms() const { return column_norms_; }

    /// Columns selected by `s`, in support order.
    Eigen::MatrixXd submatrix(const SupportSet& s) const;

  private:
    Eigen::MatrixXd mat_;
    Eigen::VectorXd column_norms_;
    bool normalized_ = false;
};

/// Minimizes ||y - Phi_s c||_2 over c via column-pivoted QR of the submatrix.
/// Coefficients come back in the order of `s`. Empty support yields an empty
/// vector. Throws SupportTooLarge when |s| > m and RankDeficient when the
/// submatrix fails the relative rank test.
DenseVector least_squares_on_support(const SensingMatrix& phi, const DenseVector& y,
                                     const SupportSet& s);

/// y - Phi_s * coeffs for coefficients aligned with `s`.
DenseVector residual(const SensingMatrix& phi, const DenseVector& y, const SupportSet& s,
                     const DenseVector& coeffs);

/// Phi^T r: per-column inner products with a residual.
DenseVector correlation_scores(const SensingMatrix& phi, const DenseVector& r);

/// Indices of the l largest |scores| outside `exclude`, in decreasing-|score|
/// order; ties resolve to the smaller index. Throws NotEnoughCandidates when
/// fewer than l indices are eligible.
std::vector<int> top_l_indices(const DenseVector& scores, int l, const SupportSet& exclude);

/// Growing QR factorization of a column subset, one column at a time.
/// Keeps Q (orthonormal), R (upper triangular), Q^T y, and the running
/// residual so that path-style pursuits pay O(m*k) per extension.
class IncrementalQr {
  public:
    /// `capacity` bounds how many columns will ever be pushed (at most m).
    IncrementalQr(const SensingMatrix& phi, const DenseVector& y, int capacity);

    /// Appends column j. Returns false (state unchanged) when the column is
    /// numerically dependent on those already present, or already pushed,
    /// or the capacity is full.
    bool try_push(int j);

    /// Coefficients for the current support, aligned with support() order.
    DenseVector solve() const;

    const SupportSet& support() const { return support_; }
    int size() const { return k_; }
    const DenseVector& residual() const { return resid_; }
    double residual_norm() const { return resid_.norm(); }

  private:
    const SensingMatrix* phi_;
    Eigen::MatrixXd q_;       // m x capacity, first k_ columns valid
    Eigen::MatrixXd r_;       // capacity x capacity upper triangular
    Eigen::VectorXd qty_;     // Q^T y
    DenseVector resid_;
    SupportSet support_;
    int k_ = 0;
};

/// Least squares on `s` that keeps only a well-conditioned prefix: columns
/// are pushed in order and numerically dependent ones are dropped, stopping
/// at m columns. Never throws RankDeficient.
struct PrunedSolve {
    SupportSet kept;
    DenseVector coeffs;
    DenseVector resid;
};
PrunedSolve solve_pruned(const SensingMatrix& phi, const DenseVector& y, const SupportSet& s);

}  // namespace gsra

#endif
