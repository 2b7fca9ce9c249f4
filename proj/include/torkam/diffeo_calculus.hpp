#pragma once

#include "torkam/spectral_field.hpp"
#include "torkam/torus_algebra.hpp"

namespace torkam {

/// Self-map of T^d of the form x -> Lx + g(x) mod 1 with integer linear
/// part L and periodic spectral part g.
struct TorusMap {
    IntMatrix linear;
    SpectralField periodic;

    int dim() const { return static_cast<int>(linear.rows()); }
    bool linear_is_identity() const;

    static TorusMap identity(int d, int cutoff);
    static TorusMap from_linear(const IntMatrix& L, int cutoff);

    /// Pointwise images Lx + g(x) (not wrapped to [0,1)).
    Eigen::MatrixXd apply(const Eigen::MatrixXd& points) const;
};

struct CompositionStats {
    double tail_sup = 0.0;  // largest discarded spectral coefficient
    double rel_tail = 0.0;  // tail_sup / max kept coefficient
    bool alias_warning = false;
};

/// F o G re-projected to `cutoff`: periodic part g_F(L_G x + g_G(x)) + L_F g_G(x)
/// sampled on an oversampled grid; the discarded tail is measured, and
/// `alias_warning` is set when it exceeds alias_tol relatively.
TorusMap compose(const TorusMap& F, const TorusMap& G, int cutoff, double alias_tol = 1e-9,
                 CompositionStats* stats = nullptr);

/// Inverse of a near-identity map H = Id + h with contraction constant
/// sup|Dh| <= kappa < 1. The returned periodic part is re-projected to a
/// cutoff large enough that sup |H(H^-1(y)) - y| < verify_tol on the grid.
TorusMap invert(const TorusMap& H, double kappa = 0.5, int max_iters = 100,
                double verify_tol = 1e-11);

/// Per-point solve of x + h(x) = y by contraction; rows of `targets` are y.
Eigen::MatrixXd contract_preimages(const SpectralField& h, const Eigen::MatrixXd& targets,
                                   int max_iters = 100, double step_tol = 1e-15);

struct ConjugationResult {
    TorusMap Atil;          // H o Atil o H^-1
    SpectralField vtil;     // (DH . vtil) o H^-1
    TorusMap Hinv;
    CompositionStats stats;
};

/// Transports the pair (Atil, vtil) by the near-identity map H, both outputs
/// re-projected to `cutoff`.
ConjugationResult conjugate_action(const TorusMap& H, const TorusMap& Atil,
                                   const SpectralField& vtil, int cutoff,
                                   double alias_tol = 1e-9);

}  // namespace torkam
