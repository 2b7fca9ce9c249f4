#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "test_helpers.hpp"
#include "torkam/diffeo_calculus.hpp"

using namespace torkam;
using torkam::testing::fib_matrix;
using torkam::testing::random_field;

namespace {

double max_abs_diff(const SpectralField& a, const SpectralField& b) {
    double worst = 0;
    for (const auto& [n, c] : a.coeffs()) worst = std::max(worst, (c - b.coeff(n)).norm());
    for (const auto& [n, c] : b.coeffs()) worst = std::max(worst, (c - a.coeff(n)).norm());
    return worst;
}

TorusMap near_identity(int d, int cutoff, std::uint64_t seed, double amp) {
    TorusMap m = TorusMap::identity(d, cutoff);
    m.periodic = random_field(d, 3, seed, amp, 0.5);
    return m;
}

}  // namespace

TEST_CASE("compose with the identity is exact") {
    TorusMap G;
    G.linear = fib_matrix();
    G.periodic = random_field(2, 5, 4, 0.1);
    const TorusMap id = TorusMap::identity(2, 5);

    auto FG = compose(id, G, G.periodic.cutoff());
    CHECK((FG.linear - G.linear).cwiseAbs().maxCoeff() == 0);
    CHECK(max_abs_diff(FG.periodic, G.periodic) == 0.0);
}

TEST_CASE("pure translations add") {
    TorusMap F = TorusMap::identity(2, 4), G = TorusMap::identity(2, 4);
    F.periodic.set_zero_mode(Eigen::Vector2d(0.3, -0.1));
    G.periodic.set_zero_mode(Eigen::Vector2d(0.25, 0.4));
    auto FG = compose(F, G, 4);
    CHECK(FG.linear_is_identity());
    CHECK((FG.periodic.zero_mode() - Eigen::Vector2d(0.55, 0.3)).norm() < 1e-15);
    CHECK(FG.periodic.support_size() == 1);
}

TEST_CASE("linear parts multiply") {
    auto A = TorusMap::from_linear(fib_matrix(), 4);
    auto AA = compose(A, A, 4);
    CHECK((AA.linear - fib_matrix() * fib_matrix()).cwiseAbs().maxCoeff() == 0);
}

TEST_CASE("composition matches pointwise evaluation") {
    TorusMap F, G;
    F.linear = fib_matrix();
    F.periodic = random_field(2, 3, 21, 1e-4, 1.0);
    G.linear = IntMatrix::Identity(2, 2);
    G.periodic = random_field(2, 3, 22, 1e-4, 1.0);

    CompositionStats stats;
    auto FG = compose(F, G, 20, 1e-9, &stats);
    CHECK_FALSE(stats.alias_warning);

    Eigen::MatrixXd pts(3, 2);
    pts << 0.12, 0.77, 0.45, 0.03, 0.68, 0.91;
    const Eigen::MatrixXd direct = F.apply(G.apply(pts));
    const Eigen::MatrixXd via = FG.apply(pts);
    CHECK((direct - via).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("composition alias detector fires on under-resolved output") {
    TorusMap F, G;
    F.linear = IntMatrix::Identity(2, 2);
    F.periodic = random_field(2, 3, 23, 0.05, 0.0);
    G.linear = IntMatrix::Identity(2, 2);
    G.periodic = random_field(2, 3, 24, 0.05, 0.0);
    CompositionStats stats;
    compose(F, G, 6, 1e-9, &stats);
    CHECK(stats.alias_warning);
}

TEST_CASE("associativity up to the measured aliasing tail") {
    TorusMap F = near_identity(2, 16, 31, 1e-4);
    TorusMap G = near_identity(2, 16, 32, 1e-4);
    TorusMap K = near_identity(2, 16, 33, 1e-4);
    K.linear = fib_matrix();

    const double alias_tol = 1e-9;
    auto left = compose(compose(F, G, 16, alias_tol), K, 16, alias_tol);
    auto right = compose(F, compose(G, K, 16, alias_tol), 16, alias_tol);
    const double scale = std::max(left.periodic.max_coeff(), 1.0);
    CHECK(max_abs_diff(left.periodic, right.periodic) < 10 * alias_tol * scale);
}

TEST_CASE("invert: trivial cases") {
    auto id = invert(TorusMap::identity(2, 4));
    CHECK(id.periodic.empty());

    TorusMap trans = TorusMap::identity(2, 4);
    trans.periodic.set_zero_mode(Eigen::Vector2d(0.2, -0.7));
    auto inv = invert(trans);
    CHECK((inv.periodic.zero_mode() - Eigen::Vector2d(-0.2, 0.7)).norm() < 1e-14);
}

TEST_CASE("invert: single-mode round trip meets the verification tolerance") {
    TorusMap H = TorusMap::identity(2, 8);
    Freq n(2);
    n << 1, 0;
    Coeff c(2);
    c << std::complex<double>(0.005, 0.0), std::complex<double>(0.0, 0.003);
    H.periodic.set(n, c);

    auto Hinv = invert(H);
    Eigen::MatrixXd pts(64, 2);
    for (int i = 0; i < 64; ++i) pts.row(i) = Eigen::RowVector2d(i / 64.0, (i * 7 % 64) / 64.0);
    const Eigen::MatrixXd round = H.apply(Hinv.apply(pts));
    CHECK((round - pts).cwiseAbs().maxCoeff() < 1e-11);
}

TEST_CASE("invert rejects maps beyond the contraction bound") {
    TorusMap H = TorusMap::identity(2, 8);
    Freq n(2);
    n << 1, 0;
    Coeff c(2);
    c << std::complex<double>(0.2, 0.0), std::complex<double>(0.0, 0.0);  // sup|Dh| ~ 2.5
    H.periodic.set(n, c);
    CHECK_THROWS_AS(invert(H), Error);

    TorusMap L = TorusMap::from_linear(fib_matrix(), 4);
    CHECK_THROWS_AS(invert(L), Error);
}

TEST_CASE("conjugate_action by the identity changes nothing") {
    TorusMap Atil;
    Atil.linear = fib_matrix();
    Atil.periodic = random_field(2, 4, 51, 0.01);
    SpectralField vtil = random_field(2, 4, 52, 0.01, 0.0, true);

    auto res = conjugate_action(TorusMap::identity(2, 4), Atil, vtil, 4);
    CHECK(max_abs_diff(res.Atil.periodic, Atil.periodic) == 0.0);
    CHECK(max_abs_diff(res.vtil, vtil) == 0.0);
}

TEST_CASE("conjugate then un-conjugate recovers the pair") {
    TorusMap Atil;
    Atil.linear = fib_matrix();
    Atil.periodic = random_field(2, 3, 61, 2e-3, 0.5);
    SpectralField vtil = random_field(2, 3, 62, 2e-3, 0.5);
    vtil.set_zero_mode(Eigen::Vector2d(0.85, 0.53));

    TorusMap H = near_identity(2, 16, 63, 5e-3);

    const int cutoff = 24;
    auto fwd = conjugate_action(H, Atil, vtil, cutoff);
    auto back = conjugate_action(fwd.Hinv, fwd.Atil, fwd.vtil, cutoff);

    CHECK(max_abs_diff(back.Atil.periodic, Atil.periodic) < 1e-9);
    CHECK(max_abs_diff(back.vtil, vtil) < 1e-9);
    CHECK((back.Atil.linear - Atil.linear).cwiseAbs().maxCoeff() == 0);
}

TEST_CASE("conjugation preserves the linear part") {
    TorusMap Atil = TorusMap::from_linear(fib_matrix(), 8);
    SpectralField vtil(2, 8);
    vtil.set_zero_mode(Eigen::Vector2d(0.85, 0.53));
    TorusMap H = near_identity(2, 8, 71, 3e-3);

    auto res = conjugate_action(H, Atil, vtil, 8);
    CHECK((res.Atil.linear - fib_matrix()).cwiseAbs().maxCoeff() == 0);
}
