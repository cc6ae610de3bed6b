#ifndef OCKM_DATA_HPP
#define OCKM_DATA_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace ockm {

/// A loaded dataset: one row per sample, labels in {+1, -1} where +1 is the
/// target (normal) class.
struct Dataset {
    Eigen::MatrixXd x;       // N x m feature matrix
    std::vector<int> y;      // length N, entries +1 or -1
    std::string name;

    Eigen::Index size() const { return x.rows(); }
    Eigen::Index feature_count() const { return x.cols(); }
};

/// Per-feature z-score state. Fit on training rows only; features with zero
/// variance map to 0 when applied.
struct Standardizer {
    Eigen::VectorXd mean;
    Eigen::VectorXd std_dev;  // population std, >= 0

    static Standardizer identity(Eigen::Index m);

    Eigen::MatrixXd apply(const Eigen::MatrixXd& x) const;
};

Standardizer fit_standardizer(const Eigen::MatrixXd& x_train);

struct SplitSpec {
    double train_fraction = 0.7;
    std::uint64_t seed = 0;
    int folds = 5;
};

/// Loads a comma-delimited file whose last column is the class label. An
/// optional header row is detected when every feature cell of the first row
/// fails to parse as a number. `target_label` selects the class mapped to +1;
/// an empty string means AUTO (majority class, ties broken by the
/// lexicographically smaller label).
Dataset load_csv(const std::string& path, const std::string& target_label = {});

/// Loads a label-free feature matrix (used for prediction queries). May yield
/// zero rows for an empty file.
Eigen::MatrixXd load_matrix_csv(const std::string& path);

/// Stratified, seeded 70:30-style split. Each class contributes
/// ceil(train_fraction * N_c) rows to the training side.
std::pair<Dataset, Dataset> split_train_test(const Dataset& d, const SplitSpec& spec);

/// Rows with y == +1, original order preserved.
Dataset target_only(const Dataset& d);

/// Seeded partition of {0..n-1} into k folds whose sizes differ by at most 1.
std::vector<std::vector<int>> make_folds(int n, int k, std::uint64_t seed);

}  // namespace ockm

#endif  // OCKM_DATA_HPP
