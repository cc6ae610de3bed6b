#ifndef OCKM_KERNEL_HPP
#define OCKM_KERNEL_HPP

#include <Eigen/Dense>

namespace ockm {

enum class KernelFamily { kGaussian, kLinear };

struct KernelSpec {
    KernelFamily family = KernelFamily::kGaussian;
    double sigma = 1.0;  // Gaussian bandwidth, must be > 0

    void validate() const;
};

struct GramMatrix {
    Eigen::MatrixXd k;  // N x N, symmetric
    KernelSpec spec;
};

/// Gaussian: exp(-|a-b|^2 / (2 sigma^2)); Linear: a.b
double kernel_value(const Eigen::VectorXd& a, const Eigen::VectorXd& b, const KernelSpec& spec);

/// Training Gram matrix. The upper triangle is computed and mirrored so the
/// result is exactly symmetric.
GramMatrix gram(const Eigen::MatrixXd& x, const KernelSpec& spec);

/// Train-versus-query kernel matrix, entry (i, q) = k(x_train_i, x_query_q).
Eigen::MatrixXd cross_gram(const Eigen::MatrixXd& x_train, const Eigen::MatrixXd& x_query,
                           const KernelSpec& spec);

}  // namespace ockm

#endif  // OCKM_KERNEL_HPP
