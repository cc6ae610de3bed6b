#ifndef OCKM_SADDLE_HPP
#define OCKM_SADDLE_HPP

#include <Eigen/Dense>

namespace ockm {

struct SaddlePoint {
    Eigen::VectorXd u;  // length N
    double rho = 0.0;
};

/// Solves the bordered system
///
///   [ A    -1_N ] [ u   ]   [ 0_N ]
///   [ 1_N^T   0 ] [ rho ] = [ 1   ]
///
/// by dense LU with partial pivoting. The full (N+1) x (N+1) matrix is
/// factorized; it is not symmetric, so no Cholesky shortcut applies.
/// Throws SingularSystem when the factorization is rank deficient or the
/// condition estimate exceeds 1e14.
SaddlePoint solve_bordered_system(const Eigen::MatrixXd& a);

}  // namespace ockm

#endif  // OCKM_SADDLE_HPP
