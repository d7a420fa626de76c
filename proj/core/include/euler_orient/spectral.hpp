#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "euler_orient/big_count.hpp"
#include "euler_orient/graph.hpp"

namespace eo {

// Dense row-major square matrix of machine integers. Laplacian entries are
// bounded by n, so int64 never overflows here; determinants go through BigInt.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0) {}

    int size() const { return n_; }
    std::int64_t& operator()(int r, int c) { return data_[index(r, c)]; }
    std::int64_t operator()(int r, int c) const { return data_[index(r, c)]; }

    bool is_symmetric() const;
    // Drops row and column k.
    IntMatrix minor(int k) const;
    Eigen::MatrixXd to_dense() const;

    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t index(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(c);
    }

    int n_ = 0;
    std::vector<std::int64_t> data_;
};

// Q: degrees on the diagonal, -1 for each edge.
IntMatrix laplacian(const Graph& g);
// Q + J.
IntMatrix qhat(const Graph& g);

// Fraction-free (Bareiss) elimination with row pivoting; exact.
BigInt exact_determinant(const IntMatrix& m);

// Ascending eigenvalues of a symmetric matrix. Throws InputError if the matrix
// is not symmetric to within tol * max|M_ij|, NumericalError if the solver
// fails or a spot-checked eigenpair residual exceeds tol * ||M||_2.
std::vector<double> eigenvalues(const Eigen::MatrixXd& m, double tol = 1e-9);
// Exact symmetry check, then as above.
std::vector<double> eigenvalues(const IntMatrix& m, double tol = 1e-9);

struct SpectralSummary {
    std::vector<double> eigenvalues;  // of Q, ascending
    double lambda2 = 0.0;             // algebraic connectivity
    double lambda_n = 0.0;
    double gamma = 0.0;               // lambda2 / n
};

// Connectivity is decided by traversal: a disconnected graph reports
// lambda2 = 0 exactly whatever the solver returns.
SpectralSummary spectral_summary(const Graph& g);
double algebraic_connectivity(const Graph& g);

// Eigenvalues below this count as zero.
inline double zero_eigenvalue_threshold(int n) { return 1e-7 * n; }

// Matrix-tree count: determinant of Q with row/column 0 deleted.
BigCount spanning_tree_count(const Graph& g);
BigInt det_qhat_exact(const Graph& g);
// ln det(Q + J) from the exact determinant; -inf when disconnected.
double log_det_qhat(const Graph& g);

enum class Norm { One, Two, Inf };

// ||M||_1 = max column abs sum, ||M||_inf = max row abs sum,
// ||M||_2 = sqrt(lambda_max(M^T M)).
double matrix_norm(const Eigen::MatrixXd& m, Norm p);
// ||M||_p * ||M^-1||_p; throws InputError when M is singular.
double condition_number(const Eigen::MatrixXd& m, Norm p);

struct TruncatedLogDet {
    double approx = 0.0;  // sum_{r=1}^{terms-1} (-1)^{r+1} tr(X^r) / r
    double bound = 0.0;   // (n / terms) * ||X||_2^terms / (1 - ||X||_2)
};

// Series approximation of ln det(I + X) with its truncation bound.
// Requires terms >= 2 and ||X||_2 < 1 (InputError otherwise).
TruncatedLogDet truncated_logdet(const Eigen::MatrixXd& x, int terms);

// Plain-text row-major dump, one row per line. Debug aid only.
std::string format_matrix(const IntMatrix& m);

}  // namespace eo
