#pragma once

#include <Eigen/Dense>

#include <complex>
#include <map>
#include <span>
#include <vector>

#include "torkam/error.hpp"
#include "torkam/torus_algebra.hpp"

namespace torkam {

using Coeff = Eigen::VectorXcd;

struct FreqLess {
    bool operator()(const Freq& a, const Freq& b) const {
        for (Eigen::Index i = 0; i < a.size(); ++i)
            if (a(i) != b(i)) return a(i) < b(i);
        return false;
    }
};

/// Real trigonometric polynomial T^d -> R^d stored as a sparse map from
/// integer frequency to complex d-vector coefficient. Only one
/// representative of each conjugate pair {n, -n} is stored (the one whose
/// first nonzero component is positive); f^(-n) = conj(f^(n)) is implicit.
class SpectralField {
  public:
    using CoeffMap = std::map<Freq, Coeff, FreqLess>;

    SpectralField() = default;
    SpectralField(int dim, int cutoff) : dim_(dim), cutoff_(cutoff) {}

    int dim() const { return dim_; }
    int cutoff() const { return cutoff_; }
    const CoeffMap& coeffs() const { return coeffs_; }
    bool empty() const { return coeffs_.empty(); }
    std::size_t support_size() const { return coeffs_.size(); }

    static bool is_canonical(const Freq& n);

    /// Accumulates a coefficient, canonicalizing the representative.
    void add(const Freq& n, const Coeff& c);
    /// Replaces a coefficient.
    void set(const Freq& n, const Coeff& c);
    /// Coefficient at n (conjugated as needed); zero vector if absent.
    Coeff coeff(const Freq& n) const;

    Eigen::VectorXd zero_mode() const;
    void set_zero_mode(const Eigen::VectorXd& c);

    /// Largest |n| over the support, rounded up; 0 for constant fields.
    int effective_cutoff() const;
    /// Per-axis max |n_k| over the support.
    Eigen::VectorXi axis_max() const;
    /// Largest coefficient magnitude.
    double max_coeff() const;

    /// Drops coefficients below rel_tol * max_coeff (zero mode kept).
    SpectralField compressed(double rel_tol) const;
    /// Drops modes with |n| > new_cutoff; reports the largest dropped
    /// coefficient magnitude if tail_sup is given.
    SpectralField truncated(int new_cutoff, double* tail_sup = nullptr) const;

    SpectralField& operator+=(const SpectralField& rhs);
    SpectralField& operator-=(const SpectralField& rhs);
    SpectralField& operator*=(double s);
    friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
    friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
    friend SpectralField operator*(double s, SpectralField f) { return f *= s; }

  private:
    int dim_ = 0;
    int cutoff_ = 0;
    CoeffMap coeffs_;
};

/// Uniform periodic grid of real d-vector values; row-major points, axis 0
/// slowest, x_j = j / grid_size.
struct GridSample {
    int dim = 0;
    int grid_size = 0;   // per axis; power of two
    int oversample = 0;  // floor(grid_size / (2*source_cutoff + 1))
    Eigen::MatrixXd values;  // (grid_size^dim) x dim

    std::size_t point_count() const { return static_cast<std::size_t>(values.rows()); }
};

/// Power-of-two grid size with oversample factor rho for cutoff N.
int grid_for(int cutoff, int oversample);

GridSample to_grid(const SpectralField& f, int grid_size);
SpectralField from_grid(const GridSample& g, int cutoff, double* tail_sup = nullptr);

/// sup_{n != 0} |f^(n)| * |n|^r  (the zero mode never contributes).
double seminorm(const SpectralField& f, double r);

/// C^r norm surrogate: max over |alpha| <= r of the sup of |d^alpha f| on a
/// 4x-oversampled grid, derivatives taken spectrally. Exact for
/// trigonometric polynomials up to grid sampling.
double cr_norm(const SpectralField& f, int r);
/// Same, several orders in one sweep (orders need not be sorted).
std::vector<double> cr_norms(const SpectralField& f, std::span<const int> orders);

/// Frequency sets of the truncation operators. S keeps the ball, the
/// T kinds additionally constrain the image of n under (A^T)^{-1} or A^T;
/// dotted kinds keep the complement. All drop the zero mode.
enum class SmoothKind { S, SDot, T, TDot, TSharp, TSharpDot };

class OperatorSpec {
  public:
    OperatorSpec(SmoothKind kind, int N);
    OperatorSpec(SmoothKind kind, int N, const ToralAutomorphism& A);

    SmoothKind kind() const { return kind_; }
    int N() const { return N_; }
    bool dotted() const;
    /// Exact integer membership test for the underlying set Lambda.
    bool in_lambda(const Freq& n) const;
    /// True iff the operator keeps frequency n.
    bool keeps(const Freq& n) const;
    /// Largest M such that every 0 < |n| <= M lies in Lambda (exact scan);
    /// the dotted-operator decay estimates hold with this M.
    double guaranteed_ball() const;

  private:
    SmoothKind kind_;
    int N_;
    bool has_A_ = false;
    IntMatrix At_, Ainv_t_;  // transposed automorphism and its inverse
};

SpectralField smooth_project(const SpectralField& f, const OperatorSpec& op);

/// Coefficientwise Dh.u for a constant vector u: h^(n) * (2 pi i n.u).
SpectralField directional_derivative(const SpectralField& h, const Eigen::VectorXd& u);

/// Spectral partial derivative along one axis.
SpectralField partial_derivative(const SpectralField& f, int axis);

/// (Dh.w)(x) via pointwise grid products, re-projected to `cutoff`.
SpectralField jacobian_apply(const SpectralField& h, const SpectralField& w, int cutoff,
                             double* tail_sup = nullptr);

/// g o L for an integer matrix L (x -> Lx): exact coefficient relabeling
/// n -> L^T n.
SpectralField compose_with_linear(const SpectralField& g, const IntMatrix& L);

/// sup over a 2x-oversampled grid of the operator 2-norm of Dg(x).
double max_jacobian_norm(const SpectralField& g);

/// Direct summation of the finite Fourier series at arbitrary points
/// (rows of `points`); exact up to rounding.
Eigen::MatrixXd eval_at(const SpectralField& f, const Eigen::MatrixXd& points);

/// Evaluates several fields at a shared point set, reusing the per-point
/// phase tables; out[i] has one row per point.
void eval_fields_at(std::span<const SpectralField* const> fields, const Eigen::MatrixXd& points,
                    std::vector<Eigen::MatrixXd>& out);

/// Discrete Parseval sum: sum_n |f^(n)|^2 over the full (two-sided) spectrum.
double parseval_sum(const SpectralField& f);

}  // namespace torkam
