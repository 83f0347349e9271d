#include "amix/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "amix/errors.hpp"

namespace amix {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool finite(double x) { return std::isfinite(x); }

void validate(const AtomMixture& m)
{
    if (m.atoms.empty()) throw InvalidParameter("atom mixture needs at least one atom");
    double total = 0.0;
    for (const auto& a : m.atoms) {
        if (!finite(a.time) || !finite(a.weight)) throw InvalidParameter("atom time and weight must be finite");
        if (a.weight < 0.0) throw InvalidParameter("atom weights must be non-negative");
        total += a.weight;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw InvalidParameter("atom weights must sum to 1 (got " + std::to_string(total) + ")");
}

}  // namespace

Distribution::Distribution(DistributionNode node)
{
    int child_depth = 0;
    bool proper = true;
    auto absorb = [&](const Distribution& child) {
        child_depth = std::max(child_depth, child.depth());
        proper = proper && child.is_proper();
    };
    std::visit(overloaded{
                   [](const AtomMixture& m) { validate(m); },
                   [](const Bernoulli& b) {
                       if (!(b.p >= 0.0 && b.p <= 1.0)) throw InvalidParameter("Bernoulli p must lie in [0,1]");
                   },
                   [](const Gaussian& g) {
                       if (!finite(g.mu) || !finite(g.sigma2) || g.sigma2 < 0.0)
                           throw InvalidParameter("Gaussian needs finite mu and sigma2 >= 0");
                   },
                   [](const UniformInterval& u) {
                       if (!finite(u.a) || !finite(u.b) || !(u.a < u.b))
                           throw InvalidParameter("uniform interval needs finite a < b");
                   },
                   [&](const SumIndependent& s) {
                       if (s.components.size() < 2) throw InvalidParameter("sum needs at least two components");
                       for (const auto& c : s.components) absorb(c);
                   },
                   [&](const Difference& d) {
                       if (!d.minuend || !d.subtrahend) throw InvalidParameter("difference needs two operands");
                       absorb(*d.minuend);
                       absorb(*d.subtrahend);
                   },
                   [&](const ScaleShift& s) {
                       if (!s.inner) throw InvalidParameter("scale_shift needs an inner distribution");
                       if (s.scale == 0.0) throw InvalidParameter("scale must be non-zero");
                       if (!finite(s.scale) || !finite(s.shift))
                           throw InvalidParameter("scale and shift must be finite");
                       absorb(*s.inner);
                   },
                   [&](const UniformRealLine&) { proper = false; },
               },
               node);
    depth_ = child_depth + 1;
    if (depth_ > kMaxDistributionDepth)
        throw DepthExceeded("distribution nesting depth " + std::to_string(depth_) + " exceeds " +
                            std::to_string(kMaxDistributionDepth));
    proper_ = proper;
    node_ = std::make_shared<const DistributionNode>(std::move(node));
}

Distribution Distribution::dirac(double t) { return Distribution(AtomMixture{{{t, 1.0}}}); }

Distribution Distribution::atoms(std::vector<Atom> atoms) { return Distribution(AtomMixture{std::move(atoms)}); }

Distribution Distribution::bernoulli(double p) { return Distribution(Bernoulli{p}); }

Distribution Distribution::gaussian(double mu, double sigma2) { return Distribution(Gaussian{mu, sigma2}); }

Distribution Distribution::uniform(double a, double b) { return Distribution(UniformInterval{a, b}); }

Distribution Distribution::uniform_real_line() { return Distribution(UniformRealLine{}); }

Distribution Distribution::symmetric_pair(double mu) { return atoms({{-mu, 0.5}, {mu, 0.5}}); }

Distribution sum_independent(std::vector<Distribution> ds)
{
    return Distribution(SumIndependent{std::move(ds)});
}

Distribution difference_independent(const Distribution& minuend, const Distribution& subtrahend)
{
    return Distribution(
        Difference{std::make_shared<const Distribution>(minuend), std::make_shared<const Distribution>(subtrahend)});
}

Distribution scale_shift(double scale, double shift, const Distribution& d)
{
    return Distribution(ScaleShift{scale, shift, std::make_shared<const Distribution>(d)});
}

std::complex<double> evaluate_cf(const Distribution& d, double w)
{
    using cd = std::complex<double>;
    return std::visit(
        overloaded{
            [w](const AtomMixture& m) {
                cd acc = 0.0;
                for (const auto& a : m.atoms) acc += a.weight * std::polar(1.0, w * a.time);
                return acc;
            },
            [w](const Bernoulli& b) { return cd(1.0 - b.p) + b.p * std::polar(1.0, w); },
            [w](const Gaussian& g) { return std::polar(std::exp(-0.5 * g.sigma2 * w * w), w * g.mu); },
            [w](const UniformInterval& u) {
                // (e^{iwb} − e^{iwa}) / (iw(b−a)) = e^{iw(a+b)/2} · sin(h)/h, h = w(b−a)/2
                const double h = 0.5 * w * (u.b - u.a);
                const double sinc = std::abs(h) < 5e-7 ? 1.0 - h * h / 6.0 : std::sin(h) / h;
                return std::polar(1.0, 0.5 * w * (u.a + u.b)) * sinc;
            },
            [w](const SumIndependent& s) {
                cd acc = 1.0;
                for (const auto& c : s.components) acc *= evaluate_cf(c, w);
                return acc;
            },
            [w](const Difference& d) { return evaluate_cf(*d.minuend, w) * std::conj(evaluate_cf(*d.subtrahend, w)); },
            [w](const ScaleShift& s) { return std::polar(1.0, s.shift * w) * evaluate_cf(*s.inner, s.scale * w); },
            [w](const UniformRealLine&) { return cd(std::abs(w) <= 1e-12 ? 1.0 : 0.0); },
        },
        d.node());
}

double expected_cos(const Distribution& d, double w) { return evaluate_cf(d, w).real(); }

namespace {

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    double draw(const Distribution& d)
    {
        return std::visit(
            overloaded{
                [this](const AtomMixture& m) {
                    if (m.atoms.size() == 1) return m.atoms.front().time;
                    const double u = unit_(rng_);
                    double cum = 0.0;
                    for (const auto& a : m.atoms) {
                        cum += a.weight;
                        if (u < cum) return a.time;
                    }
                    // u landed in the rounding slack above the last cumulative weight.
                    for (auto it = m.atoms.rbegin(); it != m.atoms.rend(); ++it)
                        if (it->weight > 0.0) return it->time;
                    return m.atoms.back().time;
                },
                [this](const Bernoulli& b) { return unit_(rng_) < b.p ? 1.0 : 0.0; },
                [this](const Gaussian& g) {
                    if (g.sigma2 == 0.0) return g.mu;
                    return g.mu + std::sqrt(g.sigma2) * normal_(rng_);
                },
                [this](const UniformInterval& u) { return u.a + (u.b - u.a) * unit_(rng_); },
                [this](const SumIndependent& s) {
                    double acc = 0.0;
                    for (const auto& c : s.components) acc += draw(c);
                    return acc;
                },
                [this](const Difference& d) {
                    const double a = draw(*d.minuend);
                    return a - draw(*d.subtrahend);
                },
                [this](const ScaleShift& s) { return s.scale * draw(*s.inner) + s.shift; },
                [](const UniformRealLine&) -> double {
                    throw UnsupportedDistribution("the uniform-real-line limit cannot be sampled");
                },
            },
            d.node());
    }

private:
    std::mt19937_64 rng_;
    std::uniform_real_distribution<double> unit_{0.0, 1.0};
    std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace

std::vector<double> sample_times(const Distribution& d, std::size_t count, std::uint64_t seed)
{
    if (count < 1) throw InvalidParameter("sample count must be at least 1");
    if (!d.is_proper()) throw UnsupportedDistribution("the uniform-real-line limit cannot be sampled");
    Sampler sampler(seed);
    std::vector<double> out(count);
    for (auto& t : out) t = sampler.draw(d);
    return out;
}

std::optional<std::vector<Atom>> flatten_atoms(const Distribution& d, std::size_t max_atoms)
{
    using Atoms = std::vector<Atom>;
    using Result = std::optional<Atoms>;
    auto convolve = [max_atoms](const Atoms& a, const Atoms& b, double sign) -> Result {
        if (a.size() * b.size() > max_atoms) return std::nullopt;
        Atoms out;
        out.reserve(a.size() * b.size());
        for (const auto& x : a)
            for (const auto& y : b) out.push_back({x.time + sign * y.time, x.weight * y.weight});
        return out;
    };
    return std::visit(
        overloaded{
            [max_atoms](const AtomMixture& m) -> Result {
                if (m.atoms.size() > max_atoms) return std::nullopt;
                return m.atoms;
            },
            [](const Bernoulli& b) -> Result { return Atoms{{0.0, 1.0 - b.p}, {1.0, b.p}}; },
            [](const Gaussian& g) -> Result {
                if (g.sigma2 != 0.0) return std::nullopt;
                return Atoms{{g.mu, 1.0}};
            },
            [](const UniformInterval&) -> Result { return std::nullopt; },
            [&](const SumIndependent& s) -> Result {
                Result acc = flatten_atoms(s.components.front(), max_atoms);
                for (std::size_t i = 1; acc && i < s.components.size(); ++i) {
                    auto next = flatten_atoms(s.components[i], max_atoms);
                    if (!next) return std::nullopt;
                    acc = convolve(*acc, *next, 1.0);
                }
                return acc;
            },
            [&](const Difference& diff) -> Result {
                auto a = flatten_atoms(*diff.minuend, max_atoms);
                auto b = flatten_atoms(*diff.subtrahend, max_atoms);
                if (!a || !b) return std::nullopt;
                return convolve(*a, *b, -1.0);
            },
            [&](const ScaleShift& s) -> Result {
                auto inner = flatten_atoms(*s.inner, max_atoms);
                if (!inner) return std::nullopt;
                for (auto& a : *inner) a.time = s.scale * a.time + s.shift;
                return inner;
            },
            [](const UniformRealLine&) -> Result { return std::nullopt; },
        },
        d.node());
}

}  // namespace amix
