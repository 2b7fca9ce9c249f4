#include "torkam/torus_algebra.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace torkam {

namespace {

using Wide = __int128;

// Row-major d x d exact-integer matrix; d <= 6, so plain loops suffice.
struct WideMatrix {
    int d = 0;
    std::vector<Wide> a;
    explicit WideMatrix(int dim) : d(dim), a(static_cast<size_t>(dim) * dim, 0) {}
    Wide& at(int i, int j) { return a[static_cast<size_t>(i) * d + j]; }
    Wide at(int i, int j) const { return a[static_cast<size_t>(i) * d + j]; }
    static WideMatrix identity(int dim) {
        WideMatrix m(dim);
        for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
        return m;
    }
    static WideMatrix from(const IntMatrix& src) {
        WideMatrix m(static_cast<int>(src.rows()));
        for (int i = 0; i < m.d; ++i)
            for (int j = 0; j < m.d; ++j) m.at(i, j) = Wide(src(i, j));
        return m;
    }
    WideMatrix mul(const WideMatrix& rhs) const {
        WideMatrix out(d);
        for (int i = 0; i < d; ++i)
            for (int k = 0; k < d; ++k) {
                const Wide v = at(i, k);
                if (v == 0) continue;
                for (int j = 0; j < d; ++j) out.at(i, j) += v * rhs.at(k, j);
            }
        return out;
    }
    void add_scaled_identity(Wide c) {
        for (int i = 0; i < d; ++i) at(i, i) += c;
    }
    Wide trace() const {
        Wide t = 0;
        for (int i = 0; i < d; ++i) t += at(i, i);
        return t;
    }
};

long long narrow(Wide x, const char* what) {
    require(x <= Wide(std::numeric_limits<long long>::max()) &&
                x >= Wide(std::numeric_limits<long long>::min()),
            ErrorKind::Dimension, std::string("integer overflow in ") + what);
    return static_cast<long long>(x);
}

// Exact polynomial division of monic integer polynomials (ascending
// coefficients). Returns true iff g divides p exactly.
bool divides_exactly(const std::vector<long long>& p, const std::vector<long long>& g) {
    const int dp = static_cast<int>(p.size()) - 1;
    const int dg = static_cast<int>(g.size()) - 1;
    if (dg > dp) return false;
    std::vector<Wide> rem(p.begin(), p.end());
    for (int k = dp - dg; k >= 0; --k) {
        Wide q = rem[k + dg];  // leading coefficient of g is 1
        if (q == 0) continue;
        for (int i = 0; i <= dg; ++i) rem[k + i] -= q * Wide(g[i]);
    }
    for (int i = 0; i < dg; ++i)
        if (rem[i] != 0) return false;
    return true;
}

std::vector<long long> positive_divisors(long long n) {
    n = std::llabs(n);
    std::vector<long long> divs;
    for (long long i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            divs.push_back(i);
            if (i != n / i) divs.push_back(n / i);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

long long factor_coeff_bound(const std::vector<long long>& p, int a) {
    // Mignotte-style bound on the coefficients of a monic integer factor of
    // degree a: |b_i| <= 2^a * (1 + l2-norm of p).
    double norm2 = 0.0;
    for (long long c : p) norm2 += double(c) * double(c);
    double bound = std::ldexp(1.0 + std::sqrt(norm2), a);
    return static_cast<long long>(std::ceil(bound));
}

}  // namespace

std::vector<long long> char_poly(const IntMatrix& m) {
    require(m.rows() == m.cols() && m.rows() >= 1, ErrorKind::Dimension,
            "char_poly: matrix must be square and nonempty");
    const int d = static_cast<int>(m.rows());
    // Faddeev-LeVerrier: all intermediates are exact integers.
    const WideMatrix A = WideMatrix::from(m);
    WideMatrix M(d);
    std::vector<Wide> c(d + 1, 0);
    c[d] = 1;
    for (int k = 1; k <= d; ++k) {
        M.add_scaled_identity(c[d - k + 1]);
        M = A.mul(M);
        Wide tr = M.trace();
        require(tr % Wide(k) == 0, ErrorKind::Dimension, "char_poly: non-exact trace division");
        c[d - k] = -tr / Wide(k);
    }
    std::vector<long long> out(d + 1);
    for (int i = 0; i <= d; ++i) out[i] = narrow(c[i], "char_poly");
    return out;
}

long long int_det(const IntMatrix& m) {
    const auto p = char_poly(m);
    const int d = static_cast<int>(m.rows());
    // det(tI - M) at t = 0 gives det(-M) = (-1)^d det(M).
    return (d % 2 == 0) ? p[0] : -p[0];
}

bool check_irreducible(const IntMatrix& m) {
    require(m.rows() == m.cols() && m.rows() >= 1, ErrorKind::Dimension,
            "check_irreducible: matrix must be square");
    const auto p = char_poly(m);
    const int d = static_cast<int>(p.size()) - 1;
    if (d == 1) return true;
    if (p[0] == 0) return false;  // t divides

    // Degree-1 factors: a monic integer polynomial's rational roots are the
    // integers dividing the constant term.
    for (long long r : positive_divisors(p[0])) {
        for (long long root : {r, -r}) {
            Wide val = 0;
            for (int i = d; i >= 0; --i) val = val * Wide(root) + Wide(p[i]);
            if (val == 0) return false;
        }
    }

    // Monic factors of degree a in [2, d/2], constant term dividing p(0),
    // interior coefficients bounded.
    for (int a = 2; a <= d / 2; ++a) {
        const long long B = factor_coeff_bound(p, a);
        std::vector<long long> g(a + 1, 0);
        g[a] = 1;
        auto divisors = positive_divisors(p[0]);
        if (a == 2) {
            for (long long c0 : divisors)
                for (long long s : {c0, -c0}) {
                    g[0] = s;
                    for (long long b = -B; b <= B; ++b) {
                        g[1] = b;
                        if (divides_exactly(p, g)) return false;
                    }
                }
        } else if (a == 3) {
            for (long long c0 : divisors)
                for (long long s : {c0, -c0}) {
                    g[0] = s;
                    for (long long b1 = -B; b1 <= B; ++b1) {
                        g[1] = b1;
                        for (long long b2 = -B; b2 <= B; ++b2) {
                            g[2] = b2;
                            if (divides_exactly(p, g)) return false;
                        }
                    }
                }
        } else {
            fail(ErrorKind::Dimension, "check_irreducible: dimension above desk scale (d > 6)");
        }
    }
    return true;
}

ToralAutomorphism ToralAutomorphism::make(const IntMatrix& m) {
    require(m.rows() == m.cols() && m.rows() >= 2, ErrorKind::Dimension,
            "ToralAutomorphism: matrix must be square with d >= 2");
    ToralAutomorphism a;
    a.entries = m;
    a.dim = static_cast<int>(m.rows());
    a.determinant = int_det(m);
    require(a.determinant == 1 || a.determinant == -1, ErrorKind::Input,
            "ToralAutomorphism: |det| must be 1, got " + std::to_string(a.determinant));
    require(check_irreducible(m), ErrorKind::Input,
            "ToralAutomorphism: characteristic polynomial is reducible over Q");
    return a;
}

IntMatrix ToralAutomorphism::inverse() const {
    // Cayley-Hamilton: A^{-1} = -(A^{d-1} + c_{d-1} A^{d-2} + ... + c_1 I)/c_0,
    // and c_0 = ±1 since |det A| = 1.
    const auto c = char_poly(entries);
    const int d = dim;
    const WideMatrix A = WideMatrix::from(entries);
    WideMatrix acc = WideMatrix::identity(d);
    for (int k = d - 1; k >= 1; --k) {
        acc = A.mul(acc);
        acc.add_scaled_identity(Wide(c[k]));
    }
    IntMatrix out(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) out(i, j) = narrow(-acc.at(i, j) / Wide(c[0]), "inverse");
    return out;
}

double ToralAutomorphism::op_norm() const {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(real());
    return svd.singularValues()(0);
}

Freq ToralAutomorphism::apply_transposed(const Freq& n) const {
    Freq out(dim);
    for (int i = 0; i < dim; ++i) {
        long long s = 0;
        for (int j = 0; j < dim; ++j) s += entries(j, i) * static_cast<long long>(n(j));
        require(s <= std::numeric_limits<int>::max() && s >= std::numeric_limits<int>::min(),
                ErrorKind::Dimension, "frequency overflow in A^T n");
        out(i) = static_cast<int>(s);
    }
    return out;
}

Freq ToralAutomorphism::apply_inverse_transposed(const Freq& n) const {
    const IntMatrix inv = inverse();
    Freq out(dim);
    for (int i = 0; i < dim; ++i) {
        long long s = 0;
        for (int j = 0; j < dim; ++j) s += inv(j, i) * static_cast<long long>(n(j));
        require(s <= std::numeric_limits<int>::max() && s >= std::numeric_limits<int>::min(),
                ErrorKind::Dimension, "frequency overflow in (A^T)^{-1} n");
        out(i) = static_cast<int>(s);
    }
    return out;
}

namespace {

double poly_eval(const std::vector<long long>& p, double t) {
    double v = 0;
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) v = v * t + double(p[i]);
    return v;
}

double poly_deriv_eval(const std::vector<long long>& p, double t) {
    double v = 0;
    for (int i = static_cast<int>(p.size()) - 1; i >= 1; --i) v = v * t + double(i) * double(p[i]);
    return v;
}

}  // namespace

EigenData eigen_decompose(const ToralAutomorphism& A, EigenSelect which, double tol) {
    const int d = A.dim;
    const auto p = char_poly(A.entries);

    // Roots of the characteristic polynomial via its companion matrix.
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
    for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) comp(i, d - 1) = -double(p[i]);
    Eigen::EigenSolver<Eigen::MatrixXd> roots(comp, /*computeEigenvectors=*/false);

    double best = 0.0;
    bool found = false;
    const double imag_tol = 1e-9;
    for (int i = 0; i < d; ++i) {
        const auto z = roots.eigenvalues()(i);
        if (std::abs(z.imag()) > imag_tol * std::max(1.0, std::abs(z.real()))) continue;
        const double lam = z.real();
        if (!found) {
            best = lam;
            found = true;
            continue;
        }
        switch (which) {
            case EigenSelect::Largest: best = std::max(best, lam); break;
            case EigenSelect::Smallest: best = std::min(best, lam); break;
            case EigenSelect::LargestAbs:
                if (std::abs(lam) > std::abs(best)) best = lam;
                break;
            case EigenSelect::SmallestAbs:
                if (std::abs(lam) < std::abs(best)) best = lam;
                break;
        }
    }
    require(found, ErrorKind::UnsupportedSpectrum,
            "eigen_decompose: no real eigenvalue matches the selector");

    // One Newton polish step on the exact characteristic polynomial.
    double lambda = best;
    const double dp = poly_deriv_eval(p, lambda);
    require(std::abs(dp) > 1e-8, ErrorKind::UnsupportedSpectrum,
            "eigen_decompose: selected eigenvalue is (numerically) repeated");
    lambda -= poly_eval(p, lambda) / dp;

    const Eigen::MatrixXd Ar = A.real();
    const Eigen::MatrixXd shifted = Ar - lambda * Eigen::MatrixXd::Identity(d, d);

    // Right eigenvector: null direction of (A - lambda I).
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(shifted, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    require(sv(d - 1) < tol, ErrorKind::UnsupportedSpectrum,
            "eigen_decompose: residual nullspace not found at the selected eigenvalue");
    require(d < 2 || sv(d - 2) > tol, ErrorKind::UnsupportedSpectrum,
            "eigen_decompose: eigenspace is not 1-dimensional");
    Eigen::VectorXd v = svd.matrixV().col(d - 1);

    // Sign convention: first nonzero component positive.
    for (int i = 0; i < d; ++i) {
        if (std::abs(v(i)) > 1e-12) {
            if (v(i) < 0) v = -v;
            break;
        }
    }
    v.normalize();

    // Left eigenvector (eigenvector of A^T): defines the invariant complement
    // V^perp = { x : <u, x> = 0 } and the spectral projector.
    Eigen::JacobiSVD<Eigen::MatrixXd> svdT(shifted.transpose(), Eigen::ComputeFullV);
    Eigen::VectorXd u = svdT.matrixV().col(d - 1);
    u.normalize();
    const double uv = u.dot(v);
    require(std::abs(uv) > 1e-12, ErrorKind::UnsupportedSpectrum,
            "eigen_decompose: degenerate left/right eigenvector pairing");

    EigenData e;
    e.lambda = lambda;
    e.v_unit = v;
    e.V_basis = v;
    e.P_V = (v * u.transpose()) / uv;
    e.P_Vperp = Eigen::MatrixXd::Identity(d, d) - e.P_V;

    // Orthonormal basis of u^perp via full QR of [u | 0].
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(u);
    Eigen::MatrixXd Q = qr.householderQ();
    e.Vperp_basis = Q.rightCols(d - 1);

    // Residual verification of the defining property.
    const double resid = (Ar * v - lambda * v).norm();
    require(resid < 1e-10, ErrorKind::UnsupportedSpectrum,
            "eigen_decompose: eigenpair residual too large: " + std::to_string(resid));

    // Smallest singular value of (A - lambda I) restricted to V^perp.
    const Eigen::MatrixXd restricted =
        e.Vperp_basis.transpose() * shifted * e.Vperp_basis;
    Eigen::JacobiSVD<Eigen::MatrixXd> svdR(restricted);
    e.sigma_min_vperp = svdR.singularValues()(d - 2);
    return e;
}

namespace {

// Enumerates lattice vectors 0 < |k| <= K with first nonzero component
// positive (the value is even in k, so half the lattice suffices).
void dio_scan(const Eigen::VectorXd& v, double tau, long long K, int axis, Freq& k,
              long long norm2_so_far, bool leading_zero, double dot_so_far, double& best,
              Freq& best_k) {
    const int d = static_cast<int>(v.size());
    if (axis == d) {
        if (leading_zero) return;  // k = 0
        const double n2 = double(norm2_so_far);
        const double weight = (tau == 1.0) ? std::sqrt(n2) : std::pow(n2, 0.5 * tau);
        const double val = std::abs(dot_so_far) * weight;
        if (val < best) {
            best = val;
            best_k = k;
        }
        return;
    }
    const long long budget2 = K * K - norm2_so_far;
    const long long lim = static_cast<long long>(std::floor(std::sqrt(double(budget2)) + 0.5));
    const long long lo = leading_zero ? 0 : -lim;
    for (long long c = lo; c <= lim; ++c) {
        if (c * c > budget2) continue;
        k(axis) = static_cast<int>(c);
        dio_scan(v, tau, K, axis + 1, k, norm2_so_far + c * c, leading_zero && c == 0,
                 dot_so_far + double(c) * v(axis), best, best_k);
    }
    k(axis) = 0;
}

}  // namespace

DiophantineCertificate estimate_diophantine(const Eigen::VectorXd& v, double tau, long long K,
                                            double degenerate_floor) {
    require(K >= 1, ErrorKind::Input, "estimate_diophantine: K must be >= 1");
    require(v.norm() > 0, ErrorKind::Input, "estimate_diophantine: v must be nonzero");
    const int d = static_cast<int>(v.size());

    double best = std::numeric_limits<double>::infinity();
    Freq k = Freq::Zero(d), best_k = Freq::Zero(d);
    dio_scan(v, tau, K, 0, k, 0, true, 0.0, best, best_k);

    DiophantineCertificate cert;
    cert.C = best;
    cert.tau = tau;
    cert.K = K;
    cert.argmin_k = best_k;
    cert.degenerate = (best < degenerate_floor);
    return cert;
}

Eigen::VectorXd project(const EigenData& e, const Eigen::VectorXd& u, Subspace which) {
    return which == Subspace::V ? (e.P_V * u).eval() : (e.P_Vperp * u).eval();
}

}  // namespace torkam
