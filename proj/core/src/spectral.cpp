#include "euler_orient/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "euler_orient/errors.hpp"

namespace eo {

bool IntMatrix::is_symmetric() const {
    for (int r = 0; r < n_; ++r) {
        for (int c = r + 1; c < n_; ++c) {
            if ((*this)(r, c) != (*this)(c, r)) return false;
        }
    }
    return true;
}

IntMatrix IntMatrix::minor(int k) const {
    if (k < 0 || k >= n_) throw InputError("minor index out of range");
    IntMatrix out(n_ - 1);
    for (int r = 0, rr = 0; r < n_; ++r) {
        if (r == k) continue;
        for (int c = 0, cc = 0; c < n_; ++c) {
            if (c == k) continue;
            out(rr, cc++) = (*this)(r, c);
        }
        ++rr;
    }
    return out;
}

Eigen::MatrixXd IntMatrix::to_dense() const {
    Eigen::MatrixXd out(n_, n_);
    for (int r = 0; r < n_; ++r) {
        for (int c = 0; c < n_; ++c) out(r, c) = static_cast<double>((*this)(r, c));
    }
    return out;
}

IntMatrix laplacian(const Graph& g) {
    IntMatrix q(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) q(v, v) = g.degree(v);
    for (const auto& e : g.edges()) {
        q(e.u, e.v) = -1;
        q(e.v, e.u) = -1;
    }
    return q;
}

IntMatrix qhat(const Graph& g) {
    IntMatrix q = laplacian(g);
    for (int r = 0; r < q.size(); ++r) {
        for (int c = 0; c < q.size(); ++c) q(r, c) += 1;
    }
    return q;
}

BigInt exact_determinant(const IntMatrix& m) {
    const int n = m.size();
    if (n == 0) return 1;

    std::vector<BigInt> a(static_cast<std::size_t>(n) * n);
    auto at = [&](int r, int c) -> BigInt& {
        return a[static_cast<std::size_t>(r) * n + static_cast<std::size_t>(c)];
    };
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) at(r, c) = static_cast<long>(m(r, c));
    }

    int sign = 1;
    BigInt previous = 1;
    BigInt scratch;
    for (int k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            int pivot = k + 1;
            while (pivot < n && at(pivot, k) == 0) ++pivot;
            if (pivot == n) return 0;
            for (int c = k; c < n; ++c) std::swap(at(k, c), at(pivot, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                // (a_ij a_kk - a_ik a_kj) / previous pivot, always exact.
                scratch = at(i, j) * at(k, k);
                scratch -= at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), scratch.get_mpz_t(), previous.get_mpz_t());
            }
            at(i, k) = 0;
        }
        previous = at(k, k);
    }
    BigInt det = at(n - 1, n - 1);
    if (sign < 0) det = -det;
    return det;
}

std::vector<double> eigenvalues(const Eigen::MatrixXd& m, double tol) {
    if (m.rows() != m.cols()) throw InputError("eigenvalues: matrix is not square");
    const Eigen::Index n = m.rows();
    if (n == 0) return {};
    const double scale = std::max(m.cwiseAbs().maxCoeff(), std::numeric_limits<double>::min());
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > tol * scale) {
        throw InputError("eigenvalues: matrix is not symmetric");
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
    if (solver.info() != Eigen::Success) throw NumericalError("eigensolver did not converge");

    const Eigen::VectorXd& values = solver.eigenvalues();
    const double norm2 = std::max(values.cwiseAbs().maxCoeff(), std::numeric_limits<double>::min());
    for (Eigen::Index k : {Eigen::Index{0}, n / 2, n - 1}) {
        const Eigen::VectorXd v = solver.eigenvectors().col(k);
        const double residual = (m * v - values(k) * v).norm();
        if (residual > tol * norm2) {
            throw NumericalError("eigenpair residual " + std::to_string(residual) +
                                 " exceeds tolerance");
        }
    }
    return {values.data(), values.data() + n};
}

std::vector<double> eigenvalues(const IntMatrix& m, double tol) {
    if (!m.is_symmetric()) throw InputError("eigenvalues: matrix is not symmetric");
    return eigenvalues(m.to_dense(), tol);
}

SpectralSummary spectral_summary(const Graph& g) {
    SpectralSummary s;
    const int n = g.vertex_count();
    s.eigenvalues = eigenvalues(laplacian(g));
    if (n >= 2 && is_connected(g)) s.lambda2 = s.eigenvalues[1];
    s.lambda_n = s.eigenvalues.empty() ? 0.0 : s.eigenvalues.back();
    s.gamma = n > 0 ? s.lambda2 / n : 0.0;
    return s;
}

double algebraic_connectivity(const Graph& g) { return spectral_summary(g).lambda2; }

BigCount spanning_tree_count(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    return exact_determinant(laplacian(g).minor(0));
}

BigInt det_qhat_exact(const Graph& g) { return exact_determinant(qhat(g)); }

double log_det_qhat(const Graph& g) {
    const BigInt det = det_qhat_exact(g);
    if (det <= 0) return -std::numeric_limits<double>::infinity();
    return ln(det);
}

double matrix_norm(const Eigen::MatrixXd& m, Norm p) {
    switch (p) {
        case Norm::One:
            return m.size() == 0 ? 0.0 : m.cwiseAbs().colwise().sum().maxCoeff();
        case Norm::Inf:
            return m.size() == 0 ? 0.0 : m.cwiseAbs().rowwise().sum().maxCoeff();
        case Norm::Two: {
            if (m.size() == 0) return 0.0;
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.transpose() * m,
                                                                  Eigen::EigenvaluesOnly);
            if (solver.info() != Eigen::Success) throw NumericalError("eigensolver did not converge");
            return std::sqrt(std::max(solver.eigenvalues().maxCoeff(), 0.0));
        }
    }
    return 0.0;
}

double condition_number(const Eigen::MatrixXd& m, Norm p) {
    if (m.rows() != m.cols() || m.rows() == 0) throw InputError("condition number needs a square matrix");
    Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
    if (!lu.isInvertible()) throw InputError("condition number of a singular matrix");
    return matrix_norm(m, p) * matrix_norm(lu.inverse(), p);
}

TruncatedLogDet truncated_logdet(const Eigen::MatrixXd& x, int terms) {
    if (terms < 2) throw InputError("truncated_logdet needs at least 2 terms");
    if (x.rows() != x.cols()) throw InputError("truncated_logdet needs a square matrix");
    const double norm2 = matrix_norm(x, Norm::Two);
    if (norm2 >= 1.0) throw InputError("truncated_logdet requires ||X||_2 < 1");

    TruncatedLogDet out;
    Eigen::MatrixXd power = x;
    for (int r = 1; r < terms; ++r) {
        const double term = power.trace() / r;
        out.approx += (r % 2 == 1) ? term : -term;
        if (r + 1 < terms) power = power * x;
    }
    const auto n = static_cast<double>(x.rows());
    out.bound = (n / terms) * std::pow(norm2, terms) / (1.0 - norm2);
    return out;
}

std::string format_matrix(const IntMatrix& m) {
    std::ostringstream out;
    for (int r = 0; r < m.size(); ++r) {
        for (int c = 0; c < m.size(); ++c) out << (c ? " " : "") << m(r, c);
        out << '\n';
    }
    return out.str();
}

}  // namespace eo
