#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "euler_orient/graph.hpp"
#include "euler_orient/log_number.hpp"
#include "euler_orient/rng.hpp"

namespace eo {

enum class McMethod { UniformS, GaussianInt, GaussianNorm };

std::string to_string(McMethod method);

struct McResult {
    LogNumber estimate;
    double stderr_rel = 0.0;  // relative standard error of the weight mean
    std::uint64_t samples = 0;
    std::uint64_t accepted = 0;  // samples inside the integration region
    std::uint64_t seed = 0;
    McMethod method = McMethod::UniformS;
    std::optional<double> epsilon;
};

// Axis-aligned cube {theta : |theta_j| <= half_width}.
struct BoxRegion {
    int n = 0;
    double half_width = 0.0;

    bool contains(std::span<const double> theta) const;
};

struct McOptions {
    std::uint64_t samples = 100000;
    std::uint64_t seed = 1;
    int threads = 1;
};

// Samples are drawn in blocks of this size; block b uses the substream
// derive_seed(seed, b), and block statistics are reduced in block order.
inline constexpr std::uint64_t kMcBlockSize = 8192;
inline constexpr int kUniformMaxVertices = 12;
inline constexpr double kDefaultEpsilon = 0.1;

// EO(G) = 2^m pi^-n S with S the integral of prod_{jk} cos(theta_j - theta_k)
// over [-pi/2, pi/2]^n, estimated from uniform draws. Requires even degrees
// (InputError) and n <= 12 (ResourceCapError).
McResult mc_S_uniform(const Graph& g, const McOptions& options);

// Gaussian-weighted refinement: theta ~ N(0, Qhat^-1), weight
// exp(-sum Delta^4 / 12) on the cube of half-width n^(-1/2 + epsilon),
// Int = (2 pi)^(n/2) det(Qhat)^(-1/2) * mean(weight), and
// EO(G) ~ 2^(m - 1/2) pi^(-n + 1/2) n Int.
// Requires connected, even degrees and 0 < epsilon < 1/6.
McResult mc_Int_gaussian(const Graph& g, const McOptions& options,
                         double epsilon = kDefaultEpsilon);

struct NormCheck {
    McResult result;           // estimate of the integral itself
    double closed_form_ln = 0.0;  // (n/2) ln(pi / a) - (1/2) ln det Qhat
    double ratio = 0.0;        // estimate / closed form
};

// Importance-sampling estimate of the integral of exp(-a theta^T Qhat theta)
// over R^n (or over a cube when box_half_width is set) with proposal
// N(0, (2a Qhat)^-1). Each weight is the integrand over the proposal density,
// evaluated from theta directly, so a correct sampler gives weight 1 wherever
// the cube does not cut. Requires a > 0 and a connected graph.
NormCheck gaussian_norm_check(const Graph& g, double a, const McOptions& options,
                              std::optional<double> box_half_width = std::nullopt);

// Draws from N(0, P^-1) for a positive definite precision matrix P by
// factoring P = L L^T and solving L^T theta = z for standard normal z.
class PrecisionSampler {
public:
    // Throws NumericalError when P is not positive definite.
    explicit PrecisionSampler(const Eigen::MatrixXd& precision);

    int dimension() const { return static_cast<int>(factor_.rows()); }
    // ln det P from the factor's diagonal.
    double log_det_precision() const { return log_det_; }

    // Fills theta (size n); returns z^T z of the underlying normal draw.
    double draw(Rng& rng, NormalSampler& normal, Eigen::VectorXd& theta) const;

private:
    Eigen::MatrixXd factor_;  // lower triangular L
    double log_det_ = 0.0;
};

}  // namespace eo
