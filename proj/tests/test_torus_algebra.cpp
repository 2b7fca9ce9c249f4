#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "torkam/torus_algebra.hpp"

using namespace torkam;

namespace {

IntMatrix fib() {
    IntMatrix m(2, 2);
    m << 2, 1, 1, 1;
    return m;
}

// Companion matrix of t^3 - t - 1 (plastic number), |det| = 1, irreducible.
IntMatrix plastic() {
    IntMatrix m(3, 3);
    m << 0, 0, 1, 1, 0, 1, 0, 1, 0;
    return m;
}

// Independent exhaustive scan over the full lattice (no symmetry tricks).
double dio_brute_2d(const Eigen::Vector2d& v, double tau, int K, Eigen::Vector2i* arg = nullptr) {
    double best = std::numeric_limits<double>::infinity();
    const long long K2 = static_cast<long long>(K) * K;
    for (int k1 = -K; k1 <= K; ++k1) {
        for (int k2 = -K; k2 <= K; ++k2) {
            const long long nn = static_cast<long long>(k1) * k1 + static_cast<long long>(k2) * k2;
            if (nn == 0 || nn > K2) continue;
            const double val = std::abs(k1 * v(0) + k2 * v(1)) * std::pow(double(nn), 0.5 * tau);
            if (val < best) {
                best = val;
                if (arg) *arg = Eigen::Vector2i(k1, k2);
            }
        }
    }
    return best;
}

Eigen::Vector2d golden_unit() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const double s = std::sqrt(1.0 + phi * phi);
    return {phi / s, 1.0 / s};
}

}  // namespace

TEST_CASE("char_poly of the Fibonacci matrix is t^2 - 3t + 1") {
    const auto p = char_poly(fib());
    REQUIRE(p.size() == 3);
    CHECK(p[0] == 1);
    CHECK(p[1] == -3);
    CHECK(p[2] == 1);
    CHECK(int_det(fib()) == 1);
}

TEST_CASE("irreducibility detector") {
    CHECK(check_irreducible(fib()));
    CHECK(check_irreducible(plastic()));

    IntMatrix id2 = IntMatrix::Identity(2, 2);
    CHECK_FALSE(check_irreducible(id2));  // (t-1)^2

    IntMatrix diag(2, 2);
    diag << 2, 0, 0, 3;
    CHECK_FALSE(check_irreducible(diag));  // (t-2)(t-3)

    IntMatrix rect(2, 3);
    rect.setZero();
    CHECK_THROWS_AS(check_irreducible(rect), Error);
}

TEST_CASE("ToralAutomorphism validation") {
    auto A = ToralAutomorphism::make(fib());
    CHECK(A.determinant == 1);
    CHECK(A.dim == 2);

    IntMatrix big(2, 2);
    big << 2, 0, 0, 2;  // det 4
    CHECK_THROWS_AS(ToralAutomorphism::make(big), Error);

    // Exact inverse: A * A^{-1} = I over the integers.
    const IntMatrix inv = A.inverse();
    CHECK((A.entries * inv - IntMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() == 0);

    const IntMatrix pinv = ToralAutomorphism::make(plastic()).inverse();
    CHECK((plastic() * pinv - IntMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() == 0);
}

TEST_CASE("eigen_decompose: Fibonacci golden pair") {
    auto A = ToralAutomorphism::make(fib());
    auto e = eigen_decompose(A, EigenSelect::Largest);

    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(e.lambda == doctest::Approx((3.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-13));
    CHECK(e.v_unit(0) == doctest::Approx(0.8506508083520399).epsilon(1e-12));
    CHECK(e.v_unit(1) == doctest::Approx(0.5257311121191336).epsilon(1e-12));

    // Defining property.
    CHECK((A.real() * e.v_unit - e.lambda * e.v_unit).norm() < 1e-12);

    // The complementary eigendirection (1, -phi) spans V^perp.
    Eigen::VectorXd other(2);
    other << 1.0, -phi;
    CHECK((e.P_V * other).norm() < 1e-12);
    CHECK(project(e, e.v_unit, Subspace::V).isApprox(e.v_unit, 1e-12));
}

TEST_CASE("eigen_decompose: projector algebra") {
    for (const IntMatrix& m : {fib(), plastic()}) {
        auto A = ToralAutomorphism::make(m);
        auto e = eigen_decompose(A, EigenSelect::Largest);
        const int d = A.dim;
        const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(d, d);

        CHECK((e.P_V + e.P_Vperp - I).norm() < 1e-12);
        CHECK((e.P_V * e.P_V - e.P_V).norm() < 1e-12);
        CHECK((e.P_V * A.real() - A.real() * e.P_V).norm() < 1e-10);

        // V^perp is A-invariant.
        for (int j = 0; j < d - 1; ++j) {
            const Eigen::VectorXd u = e.Vperp_basis.col(j);
            CHECK((e.P_V * (A.real() * u)).norm() < 1e-10);
        }

        // (A - lambda I) is invertible on V^perp.
        CHECK(e.sigma_min_vperp > 0.1);

        // Complementary projections sum to the input.
        std::mt19937 rng(7);
        std::uniform_real_distribution<double> unif(-1, 1);
        Eigen::VectorXd u(d);
        for (int i = 0; i < d; ++i) u(i) = unif(rng);
        const auto pv = project(e, u, Subspace::V);
        const auto pp = project(e, u, Subspace::Vperp);
        CHECK((pv + pp - u).norm() < 1e-12);
    }
}

TEST_CASE("eigen_decompose: plastic matrix has exactly one real eigenvalue") {
    auto A = ToralAutomorphism::make(plastic());
    auto e = eigen_decompose(A, EigenSelect::Largest);
    CHECK(e.lambda == doctest::Approx(1.3247179572447460).epsilon(1e-12));
    CHECK((A.real() * e.v_unit - e.lambda * e.v_unit).norm() < 1e-12);
}

TEST_CASE("estimate_diophantine: golden vector") {
    const Eigen::Vector2d v = golden_unit();

    Eigen::Vector2i oracle_arg;
    const double oracle = dio_brute_2d(v, 1.0, 100, &oracle_arg);
    auto cert = estimate_diophantine(v, 1.0, 100);

    CHECK(cert.C == doctest::Approx(oracle).epsilon(1e-15));
    CHECK(cert.C == doctest::Approx(0.447).epsilon(2e-3));
    CHECK_FALSE(cert.degenerate);
    // The minimizer is one of the golden-ratio convergent pairs (q, -p).
    CHECK(std::abs(cert.argmin_k(0)) == std::abs(oracle_arg(0)));
    CHECK(std::abs(cert.argmin_k(1)) == std::abs(oracle_arg(1)));

    // Monotonicity: the minimum over a larger set cannot grow.
    auto cert1000 = estimate_diophantine(v, 1.0, 1000);
    CHECK(cert1000.C <= cert.C + 1e-15);
}

TEST_CASE("estimate_diophantine: resonant vector flagged") {
    Eigen::Vector2d v(1.0, 0.0);
    auto cert = estimate_diophantine(v, 1.0, 10);
    CHECK(cert.degenerate);
    CHECK(cert.C == 0.0);
    CHECK(cert.argmin_k(0) == 0);
    CHECK(std::abs(cert.argmin_k(1)) == 1);
}

TEST_CASE("estimate_diophantine: symmetry properties") {
    const Eigen::Vector2d v = golden_unit();
    auto base = estimate_diophantine(v, 1.0, 60);

    auto flipped = estimate_diophantine(-v, 1.0, 60);
    CHECK(flipped.C == doctest::Approx(base.C).epsilon(1e-15));

    Eigen::Vector2d perm(v(1), v(0));
    auto permuted = estimate_diophantine(perm, 1.0, 60);
    CHECK(permuted.C == doctest::Approx(base.C).epsilon(1e-15));
}
