#pragma once

#include <Eigen/Dense>
#include <vector>

#include "torkam/error.hpp"

namespace torkam {

using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;
using Freq = Eigen::VectorXi;

/// Integer d x d matrix acting on T^d, with |det| = 1 and irreducible
/// characteristic polynomial. Validated once at construction.
struct ToralAutomorphism {
    IntMatrix entries;
    int dim = 0;
    long long determinant = 0;

    /// Validates |det| = 1 and irreducibility; throws Error otherwise.
    static ToralAutomorphism make(const IntMatrix& m);

    Eigen::MatrixXd real() const { return entries.cast<double>(); }
    /// Exact integer inverse (exists since |det| = 1).
    IntMatrix inverse() const;
    /// Operator 2-norm (largest singular value).
    double op_norm() const;

    Freq apply_transposed(const Freq& n) const;          // A^T n
    Freq apply_inverse_transposed(const Freq& n) const;  // (A^T)^{-1} n
};

/// Monic characteristic polynomial of det(tI - M), coefficients ascending,
/// computed exactly over the integers.
std::vector<long long> char_poly(const IntMatrix& m);

/// Exact integer determinant.
long long int_det(const IntMatrix& m);

/// True iff the characteristic polynomial of M has no nontrivial monic
/// integer (equivalently rational) factor. Bounded trial factor search,
/// intended for desk-scale d <= 6.
bool check_irreducible(const IntMatrix& m);

enum class EigenSelect { Largest, Smallest, LargestAbs, SmallestAbs };

/// Eigenline V = span(v_unit) for a real simple eigenvalue, the A-invariant
/// complement V^perp, and the oblique spectral projectors onto each.
struct EigenData {
    double lambda = 0.0;
    Eigen::VectorXd v_unit;       // |v_unit| = 1, first nonzero component > 0
    Eigen::VectorXd V_basis;      // spans V (equals v_unit)
    Eigen::MatrixXd Vperp_basis;  // d x (d-1), orthonormal columns spanning V^perp
    Eigen::MatrixXd P_V;          // projector onto V along V^perp
    Eigen::MatrixXd P_Vperp;      // complement, P_V + P_Vperp = I
    double sigma_min_vperp = 0.0; // smallest singular value of (A - lambda I)|_{V^perp}
};

EigenData eigen_decompose(const ToralAutomorphism& A, EigenSelect which, double tol = 1e-9);

/// Certified lower bound C on |<k, v>| * |k|^tau over 0 < |k| <= K,
/// with the minimizing lattice vector. Exhaustive and deterministic.
struct DiophantineCertificate {
    double C = 0.0;
    double tau = 0.0;
    long long K = 0;
    Freq argmin_k;
    bool degenerate = false;  // C fell below the configured floor
};

DiophantineCertificate estimate_diophantine(const Eigen::VectorXd& v, double tau, long long K,
                                            double degenerate_floor = 1e-8);

enum class Subspace { V, Vperp };

Eigen::VectorXd project(const EigenData& e, const Eigen::VectorXd& u, Subspace which);

}  // namespace torkam
