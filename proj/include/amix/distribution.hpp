#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

namespace amix {

class Distribution;

struct Atom {
    double time = 0.0;
    double weight = 0.0;
};

/// Finite mixture of point masses; covers Dirac distributions.
struct AtomMixture {
    std::vector<Atom> atoms;
};

/// Time 1 with probability p, time 0 otherwise.
struct Bernoulli {
    double p = 0.0;
};

struct Gaussian {
    double mu = 0.0;
    double sigma2 = 0.0;
};

struct UniformInterval {
    double a = 0.0;
    double b = 1.0;
};

struct SumIndependent {
    std::vector<Distribution> components;
};

/// minuend − subtrahend, the two drawn independently.
struct Difference {
    std::shared_ptr<const Distribution> minuend;
    std::shared_ptr<const Distribution> subtrahend;
};

/// scale·X + shift.
struct ScaleShift {
    double scale = 1.0;
    double shift = 0.0;
    std::shared_ptr<const Distribution> inner;
};

/// The T → ∞ limit of Uniform(0, T). Not a probability distribution: its
/// "characteristic function" is the indicator of w = 0, which makes the
/// classical average mixing matrix the same code path as any other sampling.
struct UniformRealLine {};

using DistributionNode = std::variant<AtomMixture, Bernoulli, Gaussian, UniformInterval, SumIndependent,
                                      Difference, ScaleShift, UniformRealLine>;

inline constexpr int kMaxDistributionDepth = 16;

/// Immutable handle to a symbolic sampling distribution. Copies share the
/// underlying node, so values are cheap to pass around and thread-safe.
class Distribution {
public:
    explicit Distribution(DistributionNode node);

    static Distribution dirac(double t);
    static Distribution atoms(std::vector<Atom> atoms);
    static Distribution bernoulli(double p);
    static Distribution gaussian(double mu, double sigma2);
    static Distribution uniform(double a, double b);
    static Distribution uniform_real_line();
    /// ½(δ_{−mu} + δ_{mu}); its characteristic function is cos(mu·w).
    static Distribution symmetric_pair(double mu);

    const DistributionNode& node() const { return *node_; }
    int depth() const { return depth_; }
    /// False when the tree contains the UniformRealLine sentinel.
    bool is_proper() const { return proper_; }

    template <class T>
    const T* as() const { return std::get_if<T>(node_.get()); }

private:
    std::shared_ptr<const DistributionNode> node_;
    int depth_ = 1;
    bool proper_ = true;
};

Distribution sum_independent(std::vector<Distribution> ds);
Distribution difference_independent(const Distribution& minuend, const Distribution& subtrahend);
Distribution scale_shift(double scale, double shift, const Distribution& d);

/// φ_d(w) = E[exp(i·w·R)] in closed form.
std::complex<double> evaluate_cf(const Distribution& d, double w);

/// E[cos(w·R)] = Re φ_d(w).
double expected_cos(const Distribution& d, double w);

/// Deterministic draw of `count` times; composite nodes draw their components
/// independently. Throws UnsupportedDistribution for the UniformRealLine sentinel.
std::vector<double> sample_times(const Distribution& d, std::size_t count, std::uint64_t seed);

/// Expand into an explicit finite atom list when every leaf is discrete
/// (atoms, Bernoulli, zero-variance Gaussian). Returns nullopt when a leaf is
/// continuous or the expansion would exceed max_atoms.
std::optional<std::vector<Atom>> flatten_atoms(const Distribution& d, std::size_t max_atoms = 4096);

}  // namespace amix
