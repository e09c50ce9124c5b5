#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

#include "evoviz/embedding.hpp"
#include "evoviz/errors.hpp"

namespace evoviz {

namespace {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr Index dense_limit = 600;
constexpr Index block_size = 4;
constexpr Index max_krylov = 320;
constexpr double residual_tolerance = 1e-10;

struct TopPairs {
    std::array<double, 2> values{0.0, 0.0};
    MatrixXd vectors;  // n x 2
};

void double_centre(MatrixXd& m)
{
    const Index n = m.rows();
    const VectorXd row_mean = m.rowwise().mean();
    const double grand_mean = row_mean.mean();
    for (Index j = 0; j < n; ++j) {
        for (Index i = 0; i < n; ++i) {
            m(i, j) = -0.5 * (m(i, j) - row_mean(i) - row_mean(j) + grand_mean);
        }
    }
}

TopPairs top_two_dense(const MatrixXd& b)
{
    Eigen::SelfAdjointEigenSolver<MatrixXd> solver(b);
    const Index n = b.rows();
    TopPairs top;
    top.values = {solver.eigenvalues()(n - 1), solver.eigenvalues()(n - 2)};
    top.vectors.resize(n, 2);
    top.vectors.col(0) = solver.eigenvectors().col(n - 1);
    top.vectors.col(1) = solver.eigenvectors().col(n - 2);
    return top;
}

// Orthonormalises the columns of v against q[:, :k] and each other (two
// Gram-Schmidt passes); columns that vanish relative to their input are dropped.
MatrixXd orthonormal_block(const MatrixXd& q, Index k, MatrixXd v)
{
    MatrixXd kept(v.rows(), 0);
    for (Index c = 0; c < v.cols(); ++c) {
        VectorXd col = v.col(c);
        const double original = col.norm();
        if (original == 0.0) {
            continue;
        }
        for (int pass = 0; pass < 2; ++pass) {
            if (k > 0) {
                col -= q.leftCols(k) * (q.leftCols(k).transpose() * col);
            }
            if (kept.cols() > 0) {
                col -= kept * (kept.transpose() * col);
            }
        }
        const double norm = col.norm();
        if (norm > 1e-10 * original) {
            kept.conservativeResize(Eigen::NoChange, kept.cols() + 1);
            kept.col(kept.cols() - 1) = col / norm;
        }
    }
    return kept;
}

// Block Krylov subspace with Rayleigh-Ritz extraction of the two algebraically
// largest eigenpairs. The start block is a fixed pseudo-random matrix so the
// result is reproducible.
TopPairs top_two_krylov(const MatrixXd& b)
{
    const Index n = b.rows();
    const Index capacity = std::min(n, max_krylov);
    MatrixXd q(n, capacity);
    MatrixXd bq(n, capacity);
    MatrixXd h = MatrixXd::Zero(capacity, capacity);
    Index k = 0;

    std::mt19937_64 engine(0x5eed5eedULL);
    MatrixXd next(n, block_size);
    for (Index j = 0; j < block_size; ++j) {
        for (Index i = 0; i < n; ++i) {
            next(i, j) = static_cast<double>(engine() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
        }
    }

    TopPairs top;
    top.vectors.resize(n, 2);
    while (true) {
        MatrixXd block = orthonormal_block(q, k, std::move(next));
        Index width = std::min(block.cols(), capacity - k);
        if (width > 0) {
            q.middleCols(k, width) = block.leftCols(width);
            bq.middleCols(k, width).noalias() = b * block.leftCols(width);
            h.block(0, k, k + width, width).noalias() = q.leftCols(k + width).transpose() * bq.middleCols(k, width);
            h.block(k, 0, width, k) = h.block(0, k, k, width).transpose();
            k += width;
        }
        if (k < 2) {
            // Rank-deficient start; B has at most one non-trivial direction.
            if (width == 0) {
                break;
            }
            next = bq.middleCols(k - width, width);
            continue;
        }

        const MatrixXd hk = 0.5 * (h.topLeftCorner(k, k) + h.topLeftCorner(k, k).transpose());
        Eigen::SelfAdjointEigenSolver<MatrixXd> ritz(hk);
        const MatrixXd w = ritz.eigenvectors().rightCols(2).rowwise().reverse();
        top.values = {ritz.eigenvalues()(k - 1), ritz.eigenvalues()(k - 2)};
        top.vectors = q.leftCols(k) * w;

        const double scale = std::max(std::abs(top.values[0]), std::numeric_limits<double>::min());
        bool converged = true;
        for (Index c = 0; c < 2; ++c) {
            const VectorXd residual = bq.leftCols(k) * w.col(c) - top.values[static_cast<std::size_t>(c)] * top.vectors.col(c);
            converged = converged && residual.norm() <= residual_tolerance * scale;
        }
        if (converged || width == 0 || k >= capacity) {
            break;
        }
        next = bq.middleCols(k - width, width);
    }
    if (k < 2) {
        top.values = {0.0, 0.0};
        top.vectors.setZero();
        if (k == 1) {
            top.values[0] = q.col(0).dot(bq.col(0));
            top.vectors.col(0) = q.col(0);
        }
    }
    return top;
}

void fix_sign(Eigen::Ref<VectorXd> v)
{
    Index best = 0;
    for (Index i = 1; i < v.size(); ++i) {
        if (std::abs(v(i)) > std::abs(v(best))) {
            best = i;
        }
    }
    if (v(best) < 0.0) {
        v = -v;
    }
}

}  // namespace

MdsResult classical_mds(MatrixXd sq_dist)
{
    const Index n = sq_dist.rows();
    if (n < 2 || sq_dist.cols() != n) {
        throw ContractViolation("classical_mds: need a square matrix of at least two points");
    }
    const double max_entry = sq_dist.cwiseAbs().maxCoeff();

    MatrixXd& b = sq_dist;
    double_centre(b);
    const TopPairs top = n <= dense_limit ? top_two_dense(b) : top_two_krylov(b);

    MdsResult result;
    result.coordinates = MatrixXd::Zero(n, 2);
    result.eigenvalues = top.values;
    // Rounding noise in B is on the order of eps * n * max|D2|.
    if (top.values[0] <= 1e-12 * static_cast<double>(n) * max_entry) {
        result.degenerate = true;
        return result;
    }
    for (Index c = 0; c < 2; ++c) {
        VectorXd v = top.vectors.col(c);
        fix_sign(v);
        result.coordinates.col(c) = v * std::sqrt(std::max(top.values[static_cast<std::size_t>(c)], 0.0));
    }
    return result;
}

}  // namespace evoviz
