#include "torkam/spectral_field.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "torkam/grid_fft.hpp"

namespace torkam {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

long long norm2(const Freq& n) {
    long long s = 0;
    for (Eigen::Index i = 0; i < n.size(); ++i) s += static_cast<long long>(n(i)) * n(i);
    return s;
}

std::size_t pow_size(int G, int d) {
    std::size_t t = 1;
    for (int i = 0; i < d; ++i) t *= static_cast<std::size_t>(G);
    return t;
}

std::size_t wrap_index(const Freq& n, int G, int d) {
    std::size_t idx = 0;
    for (int k = 0; k < d; ++k) {
        int r = n(k) % G;
        if (r < 0) r += G;
        idx = idx * static_cast<std::size_t>(G) + static_cast<std::size_t>(r);
    }
    return idx;
}

// All canonical lattice points 0 < |n| <= C (first nonzero component > 0).
void ball_rec(int d, long long C2, int axis, Freq& n, long long acc, bool leading_zero,
              std::vector<Freq>& out) {
    if (axis == d) {
        if (!leading_zero) out.push_back(n);
        return;
    }
    const long long budget = C2 - acc;
    const int lim = static_cast<int>(std::floor(std::sqrt(double(budget)) + 0.5));
    const int lo = leading_zero ? 0 : -lim;
    for (int c = lo; c <= lim; ++c) {
        const long long cc = static_cast<long long>(c) * c;
        if (cc > budget) continue;
        n(axis) = c;
        ball_rec(d, C2, axis + 1, n, acc + cc, leading_zero && c == 0, out);
    }
    n(axis) = 0;
}

std::vector<Freq> canonical_ball(int d, int C) {
    std::vector<Freq> out;
    Freq n = Freq::Zero(d);
    ball_rec(d, static_cast<long long>(C) * C, 0, n, 0, true, out);
    return out;
}

// Multi-indices alpha with |alpha| <= r.
void multi_rec(int d, int r, int axis, std::vector<int>& alpha, std::vector<std::vector<int>>& out) {
    if (axis == d) {
        out.push_back(alpha);
        return;
    }
    for (int a = 0; a <= r; ++a) {
        alpha[axis] = a;
        multi_rec(d, r - a, axis + 1, alpha, out);
    }
    alpha[axis] = 0;
}

std::vector<std::vector<int>> multi_indices(int d, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> alpha(d, 0);
    multi_rec(d, r, 0, alpha, out);
    return out;
}

}  // namespace

bool SpectralField::is_canonical(const Freq& n) {
    for (Eigen::Index i = 0; i < n.size(); ++i) {
        if (n(i) > 0) return true;
        if (n(i) < 0) return false;
    }
    return true;  // n = 0
}

void SpectralField::add(const Freq& n, const Coeff& c) {
    require(n.size() == dim_ && c.size() == dim_, ErrorKind::Dimension,
            "SpectralField::add: frequency/coefficient dimension mismatch");
    if (n.isZero()) {
        auto it = coeffs_.find(n);
        Coeff real_part = c.real().cast<std::complex<double>>();
        if (it == coeffs_.end())
            coeffs_.emplace(n, real_part);
        else
            it->second += real_part;
        return;
    }
    const bool canon = is_canonical(n);
    const Freq key = canon ? n : (-n).eval();
    const Coeff val = canon ? c : c.conjugate();
    auto it = coeffs_.find(key);
    if (it == coeffs_.end())
        coeffs_.emplace(key, val);
    else
        it->second += val;
}

void SpectralField::set(const Freq& n, const Coeff& c) {
    require(n.size() == dim_ && c.size() == dim_, ErrorKind::Dimension,
            "SpectralField::set: frequency/coefficient dimension mismatch");
    if (n.isZero()) {
        coeffs_[n] = c.real().cast<std::complex<double>>();
        return;
    }
    const bool canon = is_canonical(n);
    const Freq key = canon ? n : (-n).eval();
    coeffs_[key] = canon ? c : c.conjugate().eval();
}

Coeff SpectralField::coeff(const Freq& n) const {
    const bool canon = is_canonical(n);
    const Freq key = canon ? n : (-n).eval();
    auto it = coeffs_.find(key);
    if (it == coeffs_.end()) return Coeff::Zero(dim_);
    return canon ? it->second : it->second.conjugate();
}

Eigen::VectorXd SpectralField::zero_mode() const {
    auto it = coeffs_.find(Freq::Zero(dim_));
    if (it == coeffs_.end()) return Eigen::VectorXd::Zero(dim_);
    return it->second.real();
}

void SpectralField::set_zero_mode(const Eigen::VectorXd& c) {
    set(Freq::Zero(dim_), c.cast<std::complex<double>>());
}

int SpectralField::effective_cutoff() const {
    long long best = 0;
    for (const auto& [n, c] : coeffs_) best = std::max(best, norm2(n));
    return static_cast<int>(std::ceil(std::sqrt(double(best))));
}

Eigen::VectorXi SpectralField::axis_max() const {
    Eigen::VectorXi m = Eigen::VectorXi::Zero(dim_);
    for (const auto& [n, c] : coeffs_)
        for (int k = 0; k < dim_; ++k) m(k) = std::max(m(k), std::abs(n(k)));
    return m;
}

double SpectralField::max_coeff() const {
    double best = 0;
    for (const auto& [n, c] : coeffs_) best = std::max(best, c.norm());
    return best;
}

SpectralField SpectralField::compressed(double rel_tol) const {
    const double floor = rel_tol * max_coeff();
    SpectralField out(dim_, cutoff_);
    for (const auto& [n, c] : coeffs_)
        if (n.isZero() || c.norm() > floor) out.coeffs_.emplace(n, c);
    return out;
}

SpectralField SpectralField::truncated(int new_cutoff, double* tail_sup) const {
    SpectralField out(dim_, new_cutoff);
    const long long C2 = static_cast<long long>(new_cutoff) * new_cutoff;
    double tail = 0;
    for (const auto& [n, c] : coeffs_) {
        if (norm2(n) <= C2)
            out.coeffs_.emplace(n, c);
        else
            tail = std::max(tail, c.norm());
    }
    if (tail_sup) *tail_sup = tail;
    return out;
}

SpectralField& SpectralField::operator+=(const SpectralField& rhs) {
    require(dim_ == rhs.dim_, ErrorKind::Dimension, "field addition: dimension mismatch");
    cutoff_ = std::max(cutoff_, rhs.cutoff_);
    for (const auto& [n, c] : rhs.coeffs_) add(n, c);
    return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& rhs) {
    require(dim_ == rhs.dim_, ErrorKind::Dimension, "field subtraction: dimension mismatch");
    cutoff_ = std::max(cutoff_, rhs.cutoff_);
    for (const auto& [n, c] : rhs.coeffs_) add(n, (-c).eval());
    return *this;
}

SpectralField& SpectralField::operator*=(double s) {
    for (auto& [n, c] : coeffs_) c *= s;
    return *this;
}

int grid_for(int cutoff, int oversample) {
    return detail::next_pow2(oversample * (2 * cutoff + 1));
}

GridSample to_grid(const SpectralField& f, int grid_size) {
    const int d = f.dim();
    const int G = grid_size;
    const int eff = f.effective_cutoff();
    require(G >= 2 * eff + 1, ErrorKind::Aliasing,
            "to_grid: grid of size " + std::to_string(G) + " aliases a field with support radius " +
                std::to_string(eff));
    const std::size_t total = pow_size(G, d);

    GridSample out;
    out.dim = d;
    out.grid_size = G;
    out.oversample = G / (2 * eff + 1);
    out.values.resize(static_cast<Eigen::Index>(total), d);

    std::vector<std::complex<double>> buf(total);
    for (int comp = 0; comp < d; ++comp) {
        std::fill(buf.begin(), buf.end(), std::complex<double>(0, 0));
        for (const auto& [n, c] : f.coeffs()) {
            buf[wrap_index(n, G, d)] += c(comp);
            if (!n.isZero()) buf[wrap_index((-n).eval(), G, d)] += std::conj(c(comp));
        }
        detail::fft_nd(buf, d, G, /*inverse=*/true);
        for (std::size_t i = 0; i < total; ++i)
            out.values(static_cast<Eigen::Index>(i), comp) = buf[i].real();
    }
    return out;
}

SpectralField from_grid(const GridSample& g, int cutoff, double* tail_sup) {
    const int d = g.dim;
    const int G = g.grid_size;
    require(G >= 2 * cutoff + 2, ErrorKind::Aliasing,
            "from_grid: grid of size " + std::to_string(G) + " too small for cutoff " +
                std::to_string(cutoff));
    const std::size_t total = pow_size(G, d);
    const double scale = 1.0 / double(total);

    std::vector<std::vector<std::complex<double>>> spec(d);
    for (int comp = 0; comp < d; ++comp) {
        spec[comp].resize(total);
        for (std::size_t i = 0; i < total; ++i)
            spec[comp][i] = g.values(static_cast<Eigen::Index>(i), comp);
        detail::fft_nd(spec[comp], d, G, /*inverse=*/false);
    }

    SpectralField out(d, cutoff);
    {
        Coeff c(d);
        const Freq zero = Freq::Zero(d);
        for (int comp = 0; comp < d; ++comp) c(comp) = spec[comp][0] * scale;
        out.set(zero, c);
    }
    for (const Freq& n : canonical_ball(d, cutoff)) {
        Coeff c(d);
        const std::size_t idx = wrap_index(n, G, d);
        for (int comp = 0; comp < d; ++comp) c(comp) = spec[comp][idx] * scale;
        out.set(n, c);
    }

    if (tail_sup) {
        // Largest discarded coefficient over the part of the spectrum the
        // grid resolves (|n| beyond the cutoff, up to Nyquist).
        double tail = 0;
        const long long C2 = static_cast<long long>(cutoff) * cutoff;
        std::vector<int> digits(d, 0);
        for (std::size_t i = 0; i < total; ++i) {
            std::size_t rem = i;
            long long nn = 0;
            for (int k = d - 1; k >= 0; --k) {
                int r = static_cast<int>(rem % static_cast<std::size_t>(G));
                rem /= static_cast<std::size_t>(G);
                if (r > G / 2) r -= G;
                nn += static_cast<long long>(r) * r;
            }
            if (nn <= C2) continue;
            double mag2 = 0;
            for (int comp = 0; comp < d; ++comp) mag2 += std::norm(spec[comp][i]);
            tail = std::max(tail, mag2);
        }
        *tail_sup = std::sqrt(tail) * scale;
    }
    return out;
}

double seminorm(const SpectralField& f, double r) {
    require(r >= 0, ErrorKind::Input, "seminorm: order must be >= 0");
    double best = 0;
    for (const auto& [n, c] : f.coeffs()) {
        const long long nn = norm2(n);
        if (nn == 0) continue;
        const double w = (r == 0.0) ? 1.0 : std::pow(double(nn), 0.5 * r);
        best = std::max(best, c.norm() * w);
    }
    return best;
}

std::vector<double> cr_norms(const SpectralField& f, std::span<const int> orders) {
    int rmax = 0;
    for (int r : orders) {
        require(r >= 0, ErrorKind::Input, "cr_norm: order must be >= 0");
        rmax = std::max(rmax, r);
    }
    const int d = f.dim();
    const int eff = std::max(f.effective_cutoff(), 1);
    const int G = grid_for(eff, 4);
    const std::size_t total = pow_size(G, d);

    // Sup of |d^alpha f| per total order |alpha|.
    std::vector<double> best_at(static_cast<std::size_t>(rmax) + 1, 0.0);

    std::vector<std::complex<double>> buf(total);
    std::vector<double> mag2(total);
    for (const auto& alpha : multi_indices(d, rmax)) {
        int order = 0;
        for (int a : alpha) order += a;
        std::fill(mag2.begin(), mag2.end(), 0.0);
        for (int comp = 0; comp < d; ++comp) {
            std::fill(buf.begin(), buf.end(), std::complex<double>(0, 0));
            for (const auto& [n, c] : f.coeffs()) {
                std::complex<double> w(1, 0);
                for (int k = 0; k < d; ++k)
                    for (int a = 0; a < alpha[k]; ++a) w *= std::complex<double>(0, kTwoPi * n(k));
                if (order > 0 && n.isZero()) continue;
                buf[wrap_index(n, G, d)] += c(comp) * w;
                if (!n.isZero()) buf[wrap_index((-n).eval(), G, d)] += std::conj(c(comp) * w);
            }
            detail::fft_nd(buf, d, G, /*inverse=*/true);
            for (std::size_t i = 0; i < total; ++i) {
                const double re = buf[i].real();
                mag2[i] += re * re;
            }
        }
        double sup2 = 0;
        for (std::size_t i = 0; i < total; ++i) sup2 = std::max(sup2, mag2[i]);
        best_at[static_cast<std::size_t>(order)] =
            std::max(best_at[static_cast<std::size_t>(order)], std::sqrt(sup2));
    }

    std::vector<double> out;
    out.reserve(orders.size());
    for (int r : orders) {
        double v = 0;
        for (int o = 0; o <= r; ++o) v = std::max(v, best_at[static_cast<std::size_t>(o)]);
        out.push_back(v);
    }
    return out;
}

double cr_norm(const SpectralField& f, int r) {
    const int orders[1] = {r};
    return cr_norms(f, orders)[0];
}

OperatorSpec::OperatorSpec(SmoothKind kind, int N) : kind_(kind), N_(N) {
    require(kind == SmoothKind::S || kind == SmoothKind::SDot, ErrorKind::Parameter,
            "OperatorSpec: T kinds require the automorphism");
    require(N >= 1, ErrorKind::Parameter, "OperatorSpec: N must be >= 1");
}

OperatorSpec::OperatorSpec(SmoothKind kind, int N, const ToralAutomorphism& A)
    : kind_(kind), N_(N), has_A_(true) {
    require(N >= 1, ErrorKind::Parameter, "OperatorSpec: N must be >= 1");
    At_ = A.entries.transpose();
    Ainv_t_ = A.inverse().transpose();
}

bool OperatorSpec::dotted() const {
    return kind_ == SmoothKind::SDot || kind_ == SmoothKind::TDot ||
           kind_ == SmoothKind::TSharpDot;
}

namespace {

long long image_norm2(const IntMatrix& M, const Freq& n) {
    long long s = 0;
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        long long row = 0;
        for (Eigen::Index j = 0; j < M.cols(); ++j) row += M(i, j) * static_cast<long long>(n(j));
        s += row * row;
    }
    return s;
}

}  // namespace

bool OperatorSpec::in_lambda(const Freq& n) const {
    const long long nn = norm2(n);
    const long long N2 = static_cast<long long>(N_) * N_;
    if (nn == 0 || nn > N2) return false;
    switch (kind_) {
        case SmoothKind::S:
        case SmoothKind::SDot: return true;
        case SmoothKind::T:
        case SmoothKind::TDot: {
            const long long mm = image_norm2(Ainv_t_, n);
            return mm > 0 && mm <= N2;
        }
        case SmoothKind::TSharp:
        case SmoothKind::TSharpDot: {
            const long long mm = image_norm2(At_, n);
            return mm > 0 && mm <= N2;
        }
    }
    return false;
}

bool OperatorSpec::keeps(const Freq& n) const {
    if (n.isZero()) return false;
    return dotted() ? !in_lambda(n) : in_lambda(n);
}

double OperatorSpec::guaranteed_ball() const {
    const int d = static_cast<int>(has_A_ ? At_.rows() : 0);
    const int dim = has_A_ ? d : 2;  // S kinds are dimension-independent
    if (kind_ == SmoothKind::S || kind_ == SmoothKind::SDot) return double(N_);
    long long best2 = static_cast<long long>(N_ + 2) * (N_ + 2);
    for (const Freq& n : canonical_ball(dim, N_ + 2)) {
        if (!in_lambda(n)) best2 = std::min(best2, norm2(n));
    }
    return std::sqrt(double(best2));
}

SpectralField smooth_project(const SpectralField& f, const OperatorSpec& op) {
    SpectralField out(f.dim(), f.cutoff());
    for (const auto& [n, c] : f.coeffs())
        if (op.keeps(n)) out.set(n, c);
    return out;
}

SpectralField directional_derivative(const SpectralField& h, const Eigen::VectorXd& u) {
    require(u.size() == h.dim(), ErrorKind::Dimension, "directional_derivative: bad vector size");
    SpectralField out(h.dim(), h.cutoff());
    for (const auto& [n, c] : h.coeffs()) {
        if (n.isZero()) continue;
        double nu = 0;
        for (int k = 0; k < h.dim(); ++k) nu += double(n(k)) * u(k);
        out.set(n, (c * std::complex<double>(0, kTwoPi * nu)).eval());
    }
    return out;
}

SpectralField partial_derivative(const SpectralField& f, int axis) {
    require(axis >= 0 && axis < f.dim(), ErrorKind::Dimension, "partial_derivative: bad axis");
    SpectralField out(f.dim(), f.cutoff());
    for (const auto& [n, c] : f.coeffs()) {
        if (n(axis) == 0) continue;
        out.set(n, (c * std::complex<double>(0, kTwoPi * double(n(axis)))).eval());
    }
    return out;
}

SpectralField jacobian_apply(const SpectralField& h, const SpectralField& w, int cutoff,
                             double* tail_sup) {
    require(h.dim() == w.dim(), ErrorKind::Dimension, "jacobian_apply: dimension mismatch");
    const int d = h.dim();
    // The pointwise product is band-limited by the sum of the supports, so a
    // grid beyond that is exact.
    const int band = h.effective_cutoff() + w.effective_cutoff();
    const int G = detail::next_pow2(std::max(2 * band + 2, 2 * (2 * cutoff + 1)));
    const GridSample wg = to_grid(w, G);

    GridSample acc;
    acc.dim = d;
    acc.grid_size = G;
    acc.oversample = wg.oversample;
    acc.values = Eigen::MatrixXd::Zero(wg.values.rows(), d);
    for (int k = 0; k < d; ++k) {
        const GridSample dh = to_grid(partial_derivative(h, k), G);
        acc.values += (dh.values.array().colwise() * wg.values.col(k).array()).matrix();
    }
    return from_grid(acc, cutoff, tail_sup);
}

SpectralField compose_with_linear(const SpectralField& g, const IntMatrix& L) {
    require(L.rows() == g.dim() && L.cols() == g.dim(), ErrorKind::Dimension,
            "compose_with_linear: matrix shape mismatch");
    const int d = g.dim();
    std::vector<std::pair<Freq, Coeff>> relabeled;
    relabeled.reserve(g.support_size());
    long long worst2 = 0;
    for (const auto& [n, c] : g.coeffs()) {
        Freq m(d);
        for (int i = 0; i < d; ++i) {
            long long s = 0;
            for (int j = 0; j < d; ++j) s += L(j, i) * static_cast<long long>(n(j));
            require(s <= std::numeric_limits<int>::max() && s >= std::numeric_limits<int>::min(),
                    ErrorKind::Dimension, "compose_with_linear: frequency overflow");
            m(i) = static_cast<int>(s);
        }
        worst2 = std::max(worst2, norm2(m));
        relabeled.emplace_back(std::move(m), c);
    }
    SpectralField out(d, static_cast<int>(std::ceil(std::sqrt(double(worst2)))));
    for (auto& [m, c] : relabeled) out.add(m, c);
    return out;
}

double max_jacobian_norm(const SpectralField& g) {
    const int d = g.dim();
    const int G = grid_for(std::max(g.effective_cutoff(), 1), 2);
    std::vector<GridSample> partials;
    partials.reserve(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) partials.push_back(to_grid(partial_derivative(g, k), G));
    const Eigen::Index npts = partials[0].values.rows();
    double best = 0;
    Eigen::MatrixXd J(d, d);
    for (Eigen::Index p = 0; p < npts; ++p) {
        for (int k = 0; k < d; ++k) J.col(k) = partials[static_cast<std::size_t>(k)].values.row(p);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J.transpose() * J,
                                                          Eigen::EigenvaluesOnly);
        best = std::max(best, es.eigenvalues().maxCoeff());
    }
    return std::sqrt(std::max(best, 0.0));
}

namespace {

struct Packed {
    int d = 0;
    int m = 0;
    Eigen::VectorXd zero;
    std::vector<int> freqs;                  // m x d
    std::vector<std::complex<double>> coefs; // m x d
};

Packed pack(const SpectralField& f) {
    Packed p;
    p.d = f.dim();
    p.zero = f.zero_mode();
    for (const auto& [n, c] : f.coeffs()) {
        if (n.isZero()) continue;
        ++p.m;
        for (int k = 0; k < p.d; ++k) p.freqs.push_back(n(k));
        for (int k = 0; k < p.d; ++k) p.coefs.push_back(c(k));
    }
    return p;
}

// Unit-phase power table with periodic re-anchoring to keep rounding flat.
void fill_powers(std::complex<double>* table, int maxpow, double x) {
    table[0] = {1.0, 0.0};
    const std::complex<double> u(std::cos(kTwoPi * x), std::sin(kTwoPi * x));
    for (int p = 1; p <= maxpow; ++p) {
        if (p % 16 == 0) {
            const double ang = kTwoPi * x * p;
            table[p] = {std::cos(ang), std::sin(ang)};
        } else {
            table[p] = table[p - 1] * u;
        }
    }
}

}  // namespace

void eval_fields_at(std::span<const SpectralField* const> fields, const Eigen::MatrixXd& points,
                    std::vector<Eigen::MatrixXd>& out) {
    require(!fields.empty(), ErrorKind::Input, "eval_fields_at: no fields");
    const int d = fields[0]->dim();
    require(points.cols() == d, ErrorKind::Dimension, "eval_fields_at: point dimension mismatch");
    const Eigen::Index npts = points.rows();

    std::vector<Packed> packed;
    packed.reserve(fields.size());
    Eigen::VectorXi maxpow = Eigen::VectorXi::Zero(d);
    for (const auto* f : fields) {
        require(f->dim() == d, ErrorKind::Dimension, "eval_fields_at: mixed dimensions");
        packed.push_back(pack(*f));
        maxpow = maxpow.cwiseMax(f->axis_max());
    }

    out.assign(fields.size(), Eigen::MatrixXd());
    for (std::size_t i = 0; i < fields.size(); ++i) out[i].resize(npts, d);

    std::vector<std::vector<std::complex<double>>> tables(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) tables[static_cast<std::size_t>(k)].resize(maxpow(k) + 1);

    std::vector<double> acc(static_cast<std::size_t>(d));
    for (Eigen::Index p = 0; p < npts; ++p) {
        for (int k = 0; k < d; ++k)
            fill_powers(tables[static_cast<std::size_t>(k)].data(), maxpow(k), points(p, k));
        for (std::size_t fi = 0; fi < packed.size(); ++fi) {
            const Packed& pk = packed[fi];
            for (int k = 0; k < d; ++k) acc[static_cast<std::size_t>(k)] = pk.zero(k);
            const int* fr = pk.freqs.data();
            const std::complex<double>* cf = pk.coefs.data();
            for (int mode = 0; mode < pk.m; ++mode, fr += d, cf += d) {
                std::complex<double> phase(1, 0);
                for (int k = 0; k < d; ++k) {
                    const int nk = fr[k];
                    const auto& tab = tables[static_cast<std::size_t>(k)];
                    phase *= (nk >= 0) ? tab[static_cast<std::size_t>(nk)]
                                       : std::conj(tab[static_cast<std::size_t>(-nk)]);
                }
                const double pr = phase.real(), pi = phase.imag();
                for (int k = 0; k < d; ++k)
                    acc[static_cast<std::size_t>(k)] +=
                        2.0 * (cf[k].real() * pr - cf[k].imag() * pi);
            }
            for (int k = 0; k < d; ++k) out[fi](p, k) = acc[static_cast<std::size_t>(k)];
        }
    }
}

Eigen::MatrixXd eval_at(const SpectralField& f, const Eigen::MatrixXd& points) {
    const SpectralField* ptr = &f;
    std::vector<Eigen::MatrixXd> out;
    eval_fields_at(std::span<const SpectralField* const>(&ptr, 1), points, out);
    return out[0];
}

double parseval_sum(const SpectralField& f) {
    double s = 0;
    for (const auto& [n, c] : f.coeffs()) s += (n.isZero() ? 1.0 : 2.0) * c.squaredNorm();
    return s;
}

}  // namespace torkam
