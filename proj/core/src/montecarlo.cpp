#include "euler_orient/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "euler_orient/errors.hpp"
#include "euler_orient/parallel.hpp"
#include "euler_orient/spectral.hpp"

namespace eo {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
const double kLnPi = std::log(std::numbers::pi);
const double kLn2Pi = std::log(2.0 * std::numbers::pi);

// Mean and M2 of signed weights s_i exp(l_i), stored relative to exp(shift)
// so that weights far below the double range still average correctly.
struct WeightStats {
    double shift = kNegInf;
    double mean = 0.0;
    double m2 = 0.0;
    std::uint64_t count = 0;
    std::uint64_t accepted = 0;

    static WeightStats from_block(const std::vector<double>& log_abs, const std::vector<signed char>& sign,
                                  std::uint64_t accepted) {
        WeightStats s;
        s.count = log_abs.size();
        s.accepted = accepted;
        for (double l : log_abs) s.shift = std::max(s.shift, l);
        if (s.shift == kNegInf) return s;  // all weights zero
        std::uint64_t k = 0;
        for (std::size_t i = 0; i < log_abs.size(); ++i) {
            const double x = log_abs[i] == kNegInf ? 0.0 : sign[i] * std::exp(log_abs[i] - s.shift);
            ++k;
            const double delta = x - s.mean;
            s.mean += delta / static_cast<double>(k);
            s.m2 += delta * (x - s.mean);
        }
        return s;
    }

    void merge(const WeightStats& other) {
        if (other.count == 0) return;
        if (count == 0) {
            *this = other;
            return;
        }
        const double target = std::max(shift, other.shift);
        auto rescale = [&](const WeightStats& s, double& mean_out, double& m2_out) {
            const double f = (s.shift == kNegInf || target == kNegInf) ? (target == kNegInf ? 1.0 : 0.0)
                                                                       : std::exp(s.shift - target);
            mean_out = s.mean * f;
            m2_out = s.m2 * f * f;
        };
        double mean_a = 0, m2_a = 0, mean_b = 0, m2_b = 0;
        rescale(*this, mean_a, m2_a);
        rescale(other, mean_b, m2_b);
        const double na = static_cast<double>(count);
        const double nb = static_cast<double>(other.count);
        const double total = na + nb;
        const double delta = mean_b - mean_a;
        mean = mean_a + delta * nb / total;
        m2 = m2_a + m2_b + delta * delta * na * nb / total;
        shift = target;
        count += other.count;
        accepted += other.accepted;
    }

    // ln of the mean weight (-inf when the mean is not positive).
    double log_mean() const {
        if (count == 0 || shift == kNegInf || mean <= 0.0) return kNegInf;
        return std::log(mean) + shift;
    }

    double stderr_rel() const {
        if (count < 2 || shift == kNegInf || mean <= 0.0) return std::numeric_limits<double>::infinity();
        const double var = m2 / static_cast<double>(count - 1);
        return std::sqrt(std::max(var, 0.0) / static_cast<double>(count)) / mean;
    }
};

// Runs `sample(rng, normal, log_abs, sign) -> accepted` once per draw, in
// blocks seeded from (seed, block index), and reduces in block order.
template <typename Sampler>
WeightStats run_blocks(const McOptions& options, Sampler&& sample) {
    if (options.samples == 0) throw InputError("sample count must be positive");
    const std::uint64_t blocks = (options.samples + kMcBlockSize - 1) / kMcBlockSize;
    std::vector<WeightStats> partial(static_cast<std::size_t>(blocks));
    parallel_for(static_cast<std::size_t>(blocks), options.threads, [&](std::size_t b) {
        const std::uint64_t begin = b * kMcBlockSize;
        const std::uint64_t size = std::min(kMcBlockSize, options.samples - begin);
        Rng rng(derive_seed(options.seed, b));
        NormalSampler normal;
        std::vector<double> log_abs(static_cast<std::size_t>(size));
        std::vector<signed char> sign(static_cast<std::size_t>(size), 1);
        std::uint64_t accepted = 0;
        for (std::uint64_t i = 0; i < size; ++i) {
            double l = 0.0;
            int s = 1;
            if (sample(rng, normal, l, s)) ++accepted;
            log_abs[i] = l;
            sign[i] = static_cast<signed char>(s);
        }
        partial[b] = WeightStats::from_block(log_abs, sign, accepted);
    });
    WeightStats total;
    for (const auto& p : partial) total.merge(p);
    return total;
}

Eigen::MatrixXd qhat_dense(const Graph& g) { return qhat(g).to_dense(); }

void require_connected_even(const Graph& g, const char* what) {
    if (!is_all_even(g)) throw InputError(std::string(what) + " needs every degree even");
    if (!is_connected(g)) throw InputError(std::string(what) + " needs a connected graph");
}

}  // namespace

std::string to_string(McMethod method) {
    switch (method) {
        case McMethod::UniformS: return "uniform_S";
        case McMethod::GaussianInt: return "gaussian_Int";
        case McMethod::GaussianNorm: return "gaussian_norm";
    }
    return "unknown";
}

bool BoxRegion::contains(std::span<const double> theta) const {
    return std::all_of(theta.begin(), theta.end(), [&](double t) { return std::abs(t) <= half_width; });
}

PrecisionSampler::PrecisionSampler(const Eigen::MatrixXd& precision) {
    Eigen::LLT<Eigen::MatrixXd> llt(precision);
    if (llt.info() != Eigen::Success) {
        throw NumericalError("precision matrix is not positive definite");
    }
    factor_ = llt.matrixL();
    log_det_ = 2.0 * factor_.diagonal().array().log().sum();
}

double PrecisionSampler::draw(Rng& rng, NormalSampler& normal, Eigen::VectorXd& theta) const {
    const Eigen::Index n = factor_.rows();
    theta.resize(n);
    double zz = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
        theta(j) = normal(rng);
        zz += theta(j) * theta(j);
    }
    factor_.transpose().triangularView<Eigen::Upper>().solveInPlace(theta);
    return zz;
}

McResult mc_S_uniform(const Graph& g, const McOptions& options) {
    if (!is_all_even(g)) throw InputError("uniform_S needs every degree even");
    const int n = g.vertex_count();
    if (n > kUniformMaxVertices) {
        throw ResourceCapError("uniform_S is limited to n <= " + std::to_string(kUniformMaxVertices));
    }
    const auto edges = g.edges();
    const double half_pi = std::numbers::pi / 2;

    const WeightStats stats = run_blocks(options, [&](Rng& rng, NormalSampler&, double& l, int& s) {
        double theta[kUniformMaxVertices];
        for (int j = 0; j < n; ++j) theta[j] = uniform_real(rng, -half_pi, half_pi);
        l = 0.0;
        s = 1;
        for (const auto& e : edges) {
            const double c = std::cos(theta[e.u] - theta[e.v]);
            if (c == 0.0) {
                l = kNegInf;
                s = 1;
                return true;
            }
            if (c < 0.0) s = -s;
            l += std::log(std::abs(c));
        }
        return true;
    });

    McResult r;
    r.method = McMethod::UniformS;
    r.samples = options.samples;
    r.accepted = stats.accepted;
    r.seed = options.seed;
    r.stderr_rel = stats.stderr_rel();
    const double log_mean = stats.log_mean();
    // 2^m pi^-n * (pi^n * mean)
    r.estimate = log_mean == kNegInf ? LogNumber::zero()
                                     : LogNumber::from_log(g.edge_count() * std::numbers::ln2 + log_mean);
    return r;
}

McResult mc_Int_gaussian(const Graph& g, const McOptions& options, double epsilon) {
    require_connected_even(g, "gaussian_Int");
    if (!(epsilon > 0.0 && epsilon < 1.0 / 6.0)) throw InputError("epsilon must lie in (0, 1/6)");

    const int n = g.vertex_count();
    const PrecisionSampler sampler(qhat_dense(g));
    const BoxRegion box{n, std::pow(static_cast<double>(n), -0.5 + epsilon)};
    const auto edges = g.edges();

    const WeightStats stats = run_blocks(options, [&](Rng& rng, NormalSampler& normal, double& l, int& s) {
        Eigen::VectorXd theta;
        sampler.draw(rng, normal, theta);
        s = 1;
        if (!box.contains({theta.data(), static_cast<std::size_t>(n)})) {
            l = kNegInf;
            return false;
        }
        double quartic = 0.0;
        for (const auto& e : edges) {
            const double d = theta(e.u) - theta(e.v);
            quartic += d * d * d * d;
        }
        l = -quartic / 12.0;
        return true;
    });

    McResult r;
    r.method = McMethod::GaussianInt;
    r.samples = options.samples;
    r.accepted = stats.accepted;
    r.seed = options.seed;
    r.epsilon = epsilon;
    r.stderr_rel = stats.stderr_rel();
    const double log_mean = stats.log_mean();
    if (log_mean == kNegInf) {
        r.estimate = LogNumber::zero();
        return r;
    }
    const double ln_z = 0.5 * n * kLn2Pi - 0.5 * log_det_qhat(g);
    const double ln_int = ln_z + log_mean;
    r.estimate = LogNumber::from_log((g.edge_count() - 0.5) * std::numbers::ln2 + (0.5 - n) * kLnPi +
                                     std::log(static_cast<double>(n)) + ln_int);
    return r;
}

NormCheck gaussian_norm_check(const Graph& g, double a, const McOptions& options,
                              std::optional<double> box_half_width) {
    if (!(a > 0.0)) throw InputError("gaussian norm check needs a > 0");
    if (!is_connected(g)) throw InputError("gaussian norm check needs a connected graph");
    if (box_half_width && !(*box_half_width > 0.0)) throw InputError("box half-width must be positive");

    const int n = g.vertex_count();
    const Eigen::MatrixXd q = qhat_dense(g);
    const PrecisionSampler sampler(2.0 * a * q);
    // ln of the proposal normaliser (2 pi)^(n/2) / sqrt(det 2aQhat).
    const double ln_norm = 0.5 * n * kLn2Pi - 0.5 * sampler.log_det_precision();

    const WeightStats stats = run_blocks(options, [&](Rng& rng, NormalSampler& normal, double& l, int& s) {
        Eigen::VectorXd theta;
        const double zz = sampler.draw(rng, normal, theta);
        s = 1;
        if (box_half_width && theta.cwiseAbs().maxCoeff() > *box_half_width) {
            l = kNegInf;
            return false;
        }
        // integrand exp(-a theta^T Qhat theta) over the proposal density
        l = ln_norm + 0.5 * zz - a * theta.dot(q * theta);
        return true;
    });

    NormCheck out;
    out.result.method = McMethod::GaussianNorm;
    out.result.samples = options.samples;
    out.result.accepted = stats.accepted;
    out.result.seed = options.seed;
    out.result.stderr_rel = stats.stderr_rel();
    const double log_mean = stats.log_mean();
    out.result.estimate = log_mean == kNegInf ? LogNumber::zero() : LogNumber::from_log(log_mean);
    out.closed_form_ln = 0.5 * n * (kLnPi - std::log(a)) - 0.5 * log_det_qhat(g);
    out.ratio = log_mean == kNegInf ? 0.0 : std::exp(log_mean - out.closed_form_ln);
    return out;
}

}  // namespace eo
