// Convex-roof search over HJW isometries. Each restart is an independent,
// seed-derived stream: a stochastic phase (random pairwise Givens rotations
// of ensemble members mixed with global re-orthonormalized steps, adaptive
// decaying step sizes) followed by deterministic Jacobi-style pair sweeps
// (per-pair 2-D grid + shrinking pattern search). Results reduce over
// restart index, so the outcome is thread-schedule invariant.

#include "entmono/measures.hpp"
#include "entmono/states.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

namespace entmono {

namespace {

struct RoofProblem {
    std::int64_t da = 0, db = 0;
    std::vector<Matrix> basis;  // rank matrices: da x db reshape of sqrt(mu_l)|e_l>
    RoofMeasure measure;
    bool det_kernel = false;  // 2x2 members: p*C = p*N = 2|det M|
};

// Weighted measure of one unnormalized member matrix: p * measure(M/sqrt(p)).
double member_contribution(const RoofProblem& pr, const Matrix& M, std::int64_t& evals) {
    ++evals;
    if (pr.det_kernel)
        return 2.0 * std::abs(M(0, 0) * M(1, 1) - M(0, 1) * M(1, 0));

    const Matrix G = pr.da <= pr.db ? Matrix(M * M.adjoint()) : Matrix(M.adjoint() * M);
    const double p = G.trace().real();
    if (p <= 1e-15) return 0.0;
    if (pr.measure == RoofMeasure::concurrence) {
        // p*C = sqrt(2 (p^2 - tr G^2))
        const double g2 = G.squaredNorm();
        return std::sqrt(2.0 * std::max(0.0, p * p - g2));
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(G, Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        s += std::sqrt(std::max(0.0, es.eigenvalues()[i]));
    // p*N = (sum sqrt(lambda))^2 - p for the unnormalized member
    return std::max(0.0, s * s - p);
}

struct Ensemble {
    Matrix V;                     // m x r isometry
    std::vector<Matrix> members;  // m unnormalized member matrices (da x db)
    std::vector<double> contrib;
    double total = 0.0;

    void rebuild(const RoofProblem& pr, std::int64_t& evals) {
        const auto m = V.rows(), r = V.cols();
        members.assign(m, Matrix());
        contrib.assign(m, 0.0);
        total = 0.0;
        for (Eigen::Index h = 0; h < m; ++h) {
            Matrix M = Matrix::Zero(pr.da, pr.db);
            for (Eigen::Index l = 0; l < r; ++l) M += V(h, l) * pr.basis[l];
            members[h] = std::move(M);
            contrib[h] = member_contribution(pr, members[h], evals);
            total += contrib[h];
        }
    }
};

Matrix thin_orthonormalize(const Matrix& a) {
    Eigen::HouseholderQR<Matrix> qr(a);
    return qr.householderQ() * Matrix::Identity(a.rows(), a.cols());
}

struct PairRotation {
    double c, s;
    Complex e;  // e^{i phi}
};

void apply_pair(Ensemble& en, int h1, int h2, const PairRotation& rot,
                const RoofProblem& pr, std::int64_t& evals) {
    const Matrix m1 = rot.c * en.members[h1] + rot.s * rot.e * en.members[h2];
    const Matrix m2 = -rot.s * std::conj(rot.e) * en.members[h1] + rot.c * en.members[h2];
    const Vector v1 = rot.c * en.V.row(h1).transpose() + rot.s * rot.e * en.V.row(h2).transpose();
    const Vector v2 = -rot.s * std::conj(rot.e) * en.V.row(h1).transpose() +
                      rot.c * en.V.row(h2).transpose();
    en.members[h1] = m1;
    en.members[h2] = m2;
    en.V.row(h1) = v1.transpose();
    en.V.row(h2) = v2.transpose();
    en.total -= en.contrib[h1] + en.contrib[h2];
    en.contrib[h1] = member_contribution(pr, en.members[h1], evals);
    en.contrib[h2] = member_contribution(pr, en.members[h2], evals);
    en.total += en.contrib[h1] + en.contrib[h2];
}

double pair_value(const Ensemble& en, int h1, int h2, double th, double ph,
                  const RoofProblem& pr, std::int64_t& evals) {
    const double c = std::cos(th), s = std::sin(th);
    const Complex e(std::cos(ph), std::sin(ph));
    const Matrix m1 = c * en.members[h1] + s * e * en.members[h2];
    const Matrix m2 = -s * std::conj(e) * en.members[h1] + c * en.members[h2];
    return member_contribution(pr, m1, evals) + member_contribution(pr, m2, evals);
}

// Grid + shrinking 8-direction pattern search over the pair rotation angles;
// returns the signed gain of the best rotation found (0 if none improves).
double best_pair_rotation(const Ensemble& en, int h1, int h2, double sgn,
                          const RoofProblem& pr, std::int64_t& evals,
                          PairRotation& out) {
    constexpr int n_th = 16, n_ph = 12;
    const double base = en.contrib[h1] + en.contrib[h2];
    double best = 0.0, bth = 0.0, bph = 0.0;
    for (int i = 0; i < n_th; ++i) {
        const double th = -std::numbers::pi / 2 + std::numbers::pi * i / n_th;
        for (int j = 0; j < n_ph; ++j) {
            const double ph = 2.0 * std::numbers::pi * j / n_ph;
            const double gain = sgn * (pair_value(en, h1, h2, th, ph, pr, evals) - base);
            if (gain > best) {
                best = gain;
                bth = th;
                bph = ph;
            }
        }
    }
    if (best <= 0.0) return 0.0;

    double dth = std::numbers::pi / n_th, dph = std::numbers::pi / n_ph;
    for (int iter = 0; iter < 60; ++iter) {
        bool moved = false;
        static constexpr int dirs[8][2] = {{1, 0}, {-1, 0}, {0, 1},  {0, -1},
                                           {1, 1}, {-1, -1}, {1, -1}, {-1, 1}};
        for (const auto& d : dirs) {
            const double th = bth + d[0] * dth, ph = bph + d[1] * dph;
            const double gain = sgn * (pair_value(en, h1, h2, th, ph, pr, evals) - base);
            if (gain > best) {
                best = gain;
                bth = th;
                bph = ph;
                moved = true;
                break;
            }
        }
        if (!moved) {
            dth *= 0.5;
            dph *= 0.5;
            if (dth < 1e-12) break;
        }
    }
    out = {std::cos(bth), std::sin(bth), Complex(std::cos(bph), std::sin(bph))};
    return best;
}

struct RestartResult {
    double value = 0.0;
    Matrix V;
    std::int64_t evaluations = 0;
};

RestartResult run_restart(const RoofProblem& pr, int m, int r, double sgn,
                          const RoofConfig& cfg, int restart_index) {
    Rng rng = Rng::stream(cfg.seed, static_cast<std::uint64_t>(restart_index));
    std::int64_t evals = 0;

    Ensemble en;
    if (restart_index == 0) {
        en.V = Matrix::Zero(m, r);
        en.V.topLeftCorner(r, r).setIdentity();
    } else {
        Matrix g(m, r);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < r; ++j) g(i, j) = rng.complex_normal();
        en.V = thin_orthonormalize(g);
    }
    en.rebuild(pr, evals);

    // stochastic phase
    double pair_step = 0.6, global_step = 0.5;
    int stagnant = 0;
    for (int it = 0; it < cfg.iterations; ++it) {
        double improvement = 0.0;
        if (rng.uniform() < 0.15) {
            Matrix g(m, r);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < r; ++j) g(i, j) = rng.complex_normal();
            Ensemble cand;
            cand.V = thin_orthonormalize(en.V + global_step * g);
            cand.rebuild(pr, evals);
            improvement = sgn * (cand.total - en.total);
            if (improvement > 0) {
                en = std::move(cand);
                global_step = std::min(global_step * 1.2, 1.0);
            } else {
                global_step = std::max(global_step * 0.97, 1e-6);
            }
        } else {
            const int h1 = static_cast<int>(rng.next_u64() % m);
            int h2 = static_cast<int>(rng.next_u64() % (m - 1));
            if (h2 >= h1) ++h2;
            const double th = pair_step * rng.normal();
            const double ph = 2.0 * std::numbers::pi * rng.uniform();
            const double gain =
                sgn * (pair_value(en, h1, h2, th, ph, pr, evals) - en.contrib[h1] - en.contrib[h2]);
            improvement = gain;
            if (gain > 0) {
                apply_pair(en, h1, h2,
                           {std::cos(th), std::sin(th), Complex(std::cos(ph), std::sin(ph))}, pr,
                           evals);
                pair_step = std::min(pair_step * 1.3, 1.5);
            } else {
                pair_step = std::max(pair_step * 0.98, 1e-4);
            }
        }
        if (improvement < cfg.tolerance) {
            if (++stagnant >= 50) break;
        } else {
            stagnant = 0;
        }
    }

    // deterministic pair sweeps
    for (int sweep = 0; sweep < 80; ++sweep) {
        double sweep_gain = 0.0;
        for (int h1 = 0; h1 < m; ++h1)
            for (int h2 = h1 + 1; h2 < m; ++h2) {
                PairRotation rot{};
                const double gain = best_pair_rotation(en, h1, h2, sgn, pr, evals, rot);
                if (gain > 1e-15) {
                    apply_pair(en, h1, h2, rot, pr, evals);
                    sweep_gain += gain;
                }
            }
        if (sweep_gain < 1e-13) break;
    }

    // re-orthonormalize so the reported value matches the returned isometry
    en.V = thin_orthonormalize(en.V);
    en.rebuild(pr, evals);

    return {en.total, en.V, evals};
}

}  // namespace

MeasureValue optimize_roof(const MixedState& rho, const Bipartition& part, RoofMeasure measure,
                           RoofObjective objective, const RoofConfig& cfg) {
    part.validate(rho.dims());

    HermitianEig eig = hermitian_eig(rho.matrix());
    int rank = 0;
    while (rank < eig.values.size() && eig.values[rank] > tol::rank_cut) ++rank;
    rank = std::max(rank, 1);

    if (rank == 1) {
        // only one decomposition up to phases: exact pure evaluation
        Vector v = eig.vectors.col(0);
        PureState member(rho.dims(), v);
        MeasureValue mv = measure == RoofMeasure::concurrence ? concurrence_pure(member, part)
                                                              : negativity_pure(member, part);
        Decomposition dec;
        dec.weights = {1.0};
        dec.members = {member.amplitudes()};
        mv.witness = std::move(dec);
        return mv;
    }

    int m = cfg.ensemble_size;
    if (m == 0) m = std::min(2 * rank, rank * rank);
    if (m < rank) throw std::invalid_argument("optimize_roof: ensemble size below rank");

    RoofProblem pr;
    pr.da = part.dim_a(rho.dims());
    pr.db = part.dim_b(rho.dims());
    pr.measure = measure;
    pr.det_kernel = pr.da == 2 && pr.db == 2;
    const auto map = bipartition_index_map(rho.dims(), part);
    pr.basis.resize(rank);
    for (int l = 0; l < rank; ++l) {
        Matrix b(pr.da, pr.db);
        const Vector col = std::sqrt(eig.values[l]) * eig.vectors.col(l);
        for (std::int64_t i = 0; i < pr.da; ++i)
            for (std::int64_t j = 0; j < pr.db; ++j) b(i, j) = col[map[i * pr.db + j]];
        pr.basis[l] = std::move(b);
    }

    const double sgn = objective == RoofObjective::maximize ? 1.0 : -1.0;
    std::vector<RestartResult> results(cfg.restarts);
    const int threads = std::max(1, std::min(cfg.threads, cfg.restarts));
    if (threads == 1) {
        for (int rs = 0; rs < cfg.restarts; ++rs)
            results[rs] = run_restart(pr, m, rank, sgn, cfg, rs);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (int rs = next.fetch_add(1); rs < cfg.restarts; rs = next.fetch_add(1))
                    results[rs] = run_restart(pr, m, rank, sgn, cfg, rs);
            });
        for (auto& th : pool) th.join();
    }

    // reduce in restart order: deterministic regardless of schedule
    int best = 0;
    std::int64_t evals = results[0].evaluations;
    for (int rs = 1; rs < cfg.restarts; ++rs) {
        evals += results[rs].evaluations;
        if (sgn * (results[rs].value - results[best].value) > 0.0) best = rs;
    }

    MeasureValue mv;
    mv.value = std::max(0.0, results[best].value);
    mv.bound = objective == RoofObjective::maximize ? Bound::lower : Bound::upper;
    mv.evaluations = evals;
    mv.witness = hjw_decomposition(rho, results[best].V);
    return mv;
}

}  // namespace entmono
