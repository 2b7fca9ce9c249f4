#include "torkam/diffeo_calculus.hpp"

#include <algorithm>
#include <cmath>

#include "torkam/grid_fft.hpp"

namespace torkam {

namespace {

bool constant_only(const SpectralField& g) {
    if (g.empty()) return true;
    return g.support_size() == 1 && g.coeffs().begin()->first.isZero();
}

// Row-major enumeration of the uniform grid, axis 0 slowest.
Eigen::MatrixXd grid_points(int d, int G) {
    std::size_t total = 1;
    for (int i = 0; i < d; ++i) total *= static_cast<std::size_t>(G);
    Eigen::MatrixXd pts(static_cast<Eigen::Index>(total), d);
    std::vector<int> idx(d, 0);
    for (std::size_t i = 0; i < total; ++i) {
        for (int k = 0; k < d; ++k) pts(static_cast<Eigen::Index>(i), k) = double(idx[k]) / G;
        int k = d - 1;
        while (k >= 0 && ++idx[k] == G) idx[k--] = 0;
    }
    return pts;
}

void finish_stats(double tail, const SpectralField& kept, double alias_tol,
                  CompositionStats* stats) {
    if (!stats) return;
    stats->tail_sup = tail;
    const double scale = std::max(kept.max_coeff(), 1e-300);
    stats->rel_tail = tail / scale;
    stats->alias_warning = stats->rel_tail > alias_tol;
}

}  // namespace

bool TorusMap::linear_is_identity() const {
    const int d = dim();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (linear(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

TorusMap TorusMap::identity(int d, int cutoff) {
    TorusMap m;
    m.linear = IntMatrix::Identity(d, d);
    m.periodic = SpectralField(d, cutoff);
    return m;
}

TorusMap TorusMap::from_linear(const IntMatrix& L, int cutoff) {
    TorusMap m;
    m.linear = L;
    m.periodic = SpectralField(static_cast<int>(L.rows()), cutoff);
    return m;
}

Eigen::MatrixXd TorusMap::apply(const Eigen::MatrixXd& points) const {
    Eigen::MatrixXd out = points * linear.cast<double>().transpose();
    if (!periodic.empty()) out += eval_at(periodic, points);
    return out;
}

TorusMap compose(const TorusMap& F, const TorusMap& G, int cutoff, double alias_tol,
                 CompositionStats* stats) {
    const int d = F.dim();
    require(G.dim() == d, ErrorKind::Dimension, "compose: dimension mismatch");

    TorusMap out;
    out.linear = F.linear * G.linear;

    // Exact coefficient paths when no grid sampling is needed.
    if (constant_only(F.periodic)) {
        // g(x) = const_F + L_F g_G(x).
        SpectralField g(d, G.periodic.cutoff());
        const Eigen::MatrixXd Lf = F.linear.cast<double>();
        for (const auto& [n, c] : G.periodic.coeffs()) g.set(n, (Lf * c).eval());
        g.set_zero_mode(g.zero_mode() + F.periodic.zero_mode());
        double tail = 0;
        out.periodic = g.truncated(cutoff, &tail);
        finish_stats(tail, out.periodic, alias_tol, stats);
        return out;
    }
    if (G.periodic.empty()) {
        // g(x) = g_F(L_G x): exact frequency relabeling.
        double tail = 0;
        out.periodic = compose_with_linear(F.periodic, G.linear).truncated(cutoff, &tail);
        finish_stats(tail, out.periodic, alias_tol, stats);
        return out;
    }

    const int Gsz = detail::next_pow2(
        std::max(2 * (2 * cutoff + 1), 2 * G.periodic.effective_cutoff() + 2));
    const Eigen::MatrixXd pts = grid_points(d, Gsz);
    const GridSample gG = to_grid(G.periodic, Gsz);
    const Eigen::MatrixXd inner = pts * G.linear.cast<double>().transpose() + gG.values;
    Eigen::MatrixXd vals = eval_at(F.periodic, inner);
    vals += gG.values * F.linear.cast<double>().transpose();

    GridSample sample;
    sample.dim = d;
    sample.grid_size = Gsz;
    sample.oversample = Gsz / (2 * cutoff + 1);
    sample.values = std::move(vals);
    double tail = 0;
    out.periodic = from_grid(sample, cutoff, &tail);
    finish_stats(tail, out.periodic, alias_tol, stats);
    return out;
}

Eigen::MatrixXd contract_preimages(const SpectralField& h, const Eigen::MatrixXd& targets,
                                   int max_iters, double step_tol) {
    Eigen::MatrixXd X = targets;
    if (h.empty()) return X;
    const Eigen::Index npts = targets.rows();
    std::vector<Eigen::Index> active(static_cast<std::size_t>(npts));
    for (Eigen::Index i = 0; i < npts; ++i) active[static_cast<std::size_t>(i)] = i;

    for (int iter = 0; iter < max_iters && !active.empty(); ++iter) {
        Eigen::MatrixXd P(static_cast<Eigen::Index>(active.size()), targets.cols());
        for (std::size_t a = 0; a < active.size(); ++a)
            P.row(static_cast<Eigen::Index>(a)) = X.row(active[a]);
        const Eigen::MatrixXd vals = eval_at(h, P);
        std::vector<Eigen::Index> still;
        still.reserve(active.size());
        for (std::size_t a = 0; a < active.size(); ++a) {
            const Eigen::Index row = active[a];
            const Eigen::RowVectorXd xn =
                targets.row(row) - vals.row(static_cast<Eigen::Index>(a));
            const double delta = (xn - X.row(row)).cwiseAbs().maxCoeff();
            X.row(row) = xn;
            if (delta >= step_tol) still.push_back(row);
        }
        active.swap(still);
    }
    require(active.empty(), ErrorKind::NoConvergence,
            "contract_preimages: fixed-point iteration did not converge");
    return X;
}

TorusMap invert(const TorusMap& H, double kappa, int max_iters, double verify_tol) {
    const int d = H.dim();
    require(H.linear_is_identity(), ErrorKind::Input,
            "invert: only near-identity maps (L = Id) are supported");
    const SpectralField& h = H.periodic;
    if (h.empty()) return TorusMap::identity(d, h.cutoff());

    const double lip = max_jacobian_norm(h);
    require(lip < kappa, ErrorKind::NotInvertible,
            "invert: sup|Dh| = " + std::to_string(lip) + " exceeds the contraction bound " +
                std::to_string(kappa));

    // The inverse's spectrum is wider than h's; grow the cutoff until the
    // measured round-trip defect meets the verification tolerance.
    int cutoff = std::max({h.cutoff(), h.effective_cutoff(), 2});
    for (;;) {
        const int Gsz = grid_for(cutoff, 2);
        const Eigen::MatrixXd Y = grid_points(d, Gsz);
        const Eigen::MatrixXd X = contract_preimages(h, Y, max_iters);

        GridSample sample;
        sample.dim = d;
        sample.grid_size = Gsz;
        sample.oversample = 2;
        sample.values = X - Y;
        TorusMap inv;
        inv.linear = IntMatrix::Identity(d, d);
        inv.periodic = from_grid(sample, cutoff);

        const Eigen::MatrixXd Z = Y + to_grid(inv.periodic, Gsz).values;
        const double defect = (Z + eval_at(h, Z) - Y).cwiseAbs().maxCoeff();
        if (defect < verify_tol) return inv;
        require(cutoff < 2048, ErrorKind::NoConvergence,
                "invert: could not reach round-trip tolerance " + std::to_string(verify_tol) +
                    "; defect " + std::to_string(defect));
        cutoff *= 2;
    }
}

ConjugationResult conjugate_action(const TorusMap& H, const TorusMap& Atil,
                                   const SpectralField& vtil, int cutoff, double alias_tol) {
    const int d = H.dim();
    require(H.linear_is_identity(), ErrorKind::Input,
            "conjugate_action: conjugacy must have identity linear part");
    require(Atil.dim() == d && vtil.dim() == d, ErrorKind::Dimension,
            "conjugate_action: dimension mismatch");

    ConjugationResult res;
    if (H.periodic.empty()) {
        res.Atil = Atil;
        double t1 = 0, t2 = 0;
        res.Atil.periodic = Atil.periodic.truncated(cutoff, &t1);
        res.vtil = vtil.truncated(cutoff, &t2);
        res.Hinv = TorusMap::identity(d, H.periodic.cutoff());
        finish_stats(std::max(t1, t2), res.Atil.periodic, alias_tol, &res.stats);
        return res;
    }

    res.Hinv = invert(H);
    const SpectralField& h = H.periodic;
    const SpectralField& f = Atil.periodic;
    const Eigen::MatrixXd A = Atil.linear.cast<double>();

    const int Gsz = detail::next_pow2(2 * (2 * cutoff + 1));
    const Eigen::MatrixXd Y = grid_points(d, Gsz);
    const Eigen::MatrixXd P = contract_preimages(h, Y);

    // One shared-table pass at the preimage points: f, vtil, and the d
    // columns of Dh.
    std::vector<const SpectralField*> at_p;
    at_p.push_back(&f);
    at_p.push_back(&vtil);
    std::vector<SpectralField> dh;
    dh.reserve(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) dh.push_back(partial_derivative(h, k));
    for (int k = 0; k < d; ++k) at_p.push_back(&dh[static_cast<std::size_t>(k)]);

    std::vector<Eigen::MatrixXd> vals;
    eval_fields_at(std::span<const SpectralField* const>(at_p.data(), at_p.size()), P, vals);
    const Eigen::MatrixXd& fP = vals[0];
    const Eigen::MatrixXd& vtP = vals[1];

    const Eigen::MatrixXd Q = P * A.transpose() + fP;
    const Eigen::MatrixXd hQ = eval_at(h, Q);

    // H o Atil o H^-1 (y) = A p + f(p) + h(q); periodic part relative to A y.
    GridSample gmap;
    gmap.dim = d;
    gmap.grid_size = Gsz;
    gmap.oversample = Gsz / (2 * cutoff + 1);
    gmap.values = (P - Y) * A.transpose() + fP + hQ;

    // (DH . vtil) o H^-1 (y) = vtil(p) + Dh(p) vtil(p).
    GridSample gflow;
    gflow.dim = d;
    gflow.grid_size = Gsz;
    gflow.oversample = gmap.oversample;
    gflow.values = vtP;
    for (int k = 0; k < d; ++k)
        gflow.values +=
            (vals[2 + static_cast<std::size_t>(k)].array().colwise() * vtP.col(k).array())
                .matrix();

    double tail_map = 0, tail_flow = 0;
    res.Atil.linear = Atil.linear;
    res.Atil.periodic = from_grid(gmap, cutoff, &tail_map);
    res.vtil = from_grid(gflow, cutoff, &tail_flow);
    finish_stats(std::max(tail_map, tail_flow), res.Atil.periodic, alias_tol, &res.stats);
    return res;
}

}  // namespace torkam
