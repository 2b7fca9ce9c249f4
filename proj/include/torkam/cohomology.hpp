#pragma once

#include "torkam/spectral_field.hpp"
#include "torkam/torus_algebra.hpp"

namespace torkam {

/// Solution of -S_N w = Dh . v on the retained frequencies:
/// h^(n) = -w^(n) / (2 pi i n.v).
struct CoboundarySolution {
    SpectralField h;         // nonzero modes only; the zero mode is solved separately
    Eigen::VectorXd h_zero;  // filled in by the caller from solve_zero_mode
    double min_divisor = std::numeric_limits<double>::infinity();  // min |2 pi n.v| used
    double amplification = 0.0;  // max |h^(n)| / |w^(n)|
};

CoboundarySolution solve_flow_coboundary(const SpectralField& w, const Eigen::VectorXd& v,
                                         const OperatorSpec& op, double divisor_floor = 1e-10);

/// h^(0) = (A - Id)^{-1} f^(0); fails if 1 is an eigenvalue.
Eigen::VectorXd solve_zero_mode(const Eigen::VectorXd& f_zero, const IntMatrix& A,
                                double tol = 1e-12);
Eigen::VectorXd solve_zero_mode(const Eigen::VectorXd& f_zero, const ToralAutomorphism& A,
                                double tol = 1e-12);

/// B^T (A - shift*I) B in the orthonormal V^perp coordinates of `eig`.
Eigen::MatrixXd vperp_restriction(const ToralAutomorphism& A, const EigenData& eig, double shift);

/// E = lambda w o (A+f) - lambda w o A - Df.w, its small-divisor transform
/// E*, and the zero-mode data.
struct ErrorFields {
    SpectralField E;
    SpectralField E_star;             // E^(n)/(2 pi i n.v) over nonzero modes
    Eigen::VectorXd E_zero;           // E^(0)
    Eigen::VectorXd w_zero_correction;  // (A - lambda I)|_{V^perp}^{-1} E^(0)
    double pv_e_zero = 0.0;           // |P_V E^(0)|, relation diagnostic
    bool relation_warning = false;
};

ErrorFields compute_error_fields(const SpectralField& f, const SpectralField& w,
                                 const ToralAutomorphism& A, const EigenData& eig,
                                 const Eigen::VectorXd& v, int cutoff,
                                 double divisor_floor = 1e-10, double relation_budget = 1e-9);

/// g o A by exact frequency relabeling n -> A^T n.
SpectralField compose_with_automorphism(const SpectralField& g, const ToralAutomorphism& A);

/// C^0 grid norm of -A.(T_N h) + T_N f + (T_N^# h) o A - T_N E*; vanishes
/// (to composition tolerance) when the inputs satisfy the linearized
/// relations.
double residual_eq30(const SpectralField& h, const SpectralField& f, const ToralAutomorphism& A,
                     const SpectralField& E_star, int N);

}  // namespace torkam
