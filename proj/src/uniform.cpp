#include "amix/uniform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "amix/walk.hpp"

namespace amix {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZeroTarget = 1e-10;
constexpr double kBoxSlack = 1e-12;

std::string fmt(double x)
{
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

}  // namespace

FeasibilityVerdict necessary_check(const SpectralDecomposition& sd)
{
    FeasibilityVerdict v;
    const double n = sd.n;
    v.trace_value = standard_amm(sd).matrix.trace();
    v.trace_upper_bound = (n + 1.0) / 2.0;
    double sq = 0.0;
    for (int m : sd.multiplicities) sq += static_cast<double>(m) * m;
    v.multiplicity_lower_bound = sq / n;

    const bool upper = v.trace_value <= v.trace_upper_bound + kBoxSlack;
    // The lower bound is a Cauchy–Schwarz identity on M̂ itself; allow rounding.
    const bool lower = v.multiplicity_lower_bound <= v.trace_value + 1e-9;
    v.necessary_ok = upper && lower;
    if (!upper) {
        v.reason = "trace of the classical average mixing matrix " + fmt(v.trace_value) + " exceeds (n+1)/2 = " +
                   fmt(v.trace_upper_bound) + "; no sampling distribution gives a uniform matrix";
    } else if (!lower) {
        v.reason = "trace " + fmt(v.trace_value) + " is below the multiplicity bound " + fmt(v.multiplicity_lower_bound);
    } else {
        v.reason = "trace " + fmt(v.trace_value) + " lies within [" + fmt(v.multiplicity_lower_bound) + ", " +
                   fmt(v.trace_upper_bound) + "]";
    }
    return v;
}

namespace {

// min ‖A x − b‖ subject to −1 ≤ x ≤ 1 by a primal active-set method.
Eigen::VectorXd box_least_squares(const Eigen::MatrixXd& a, const Eigen::VectorXd& b, const Eigen::VectorXd& start)
{
    const Eigen::Index k = a.cols();
    enum class State { free, lower, upper };
    std::vector<State> state(static_cast<std::size_t>(k));
    Eigen::VectorXd x = start;
    for (Eigen::Index i = 0; i < k; ++i) {
        if (x(i) >= 1.0) {
            x(i) = 1.0;
            state[i] = State::upper;
        } else if (x(i) <= -1.0) {
            x(i) = -1.0;
            state[i] = State::lower;
        } else {
            state[i] = State::free;
        }
    }

    const double grad_tol = 1e-13 * std::max(1.0, a.norm() * b.norm());
    for (int iter = 0; iter < 100 + 10 * static_cast<int>(k); ++iter) {
        std::vector<Eigen::Index> free;
        for (Eigen::Index i = 0; i < k; ++i)
            if (state[i] == State::free) free.push_back(i);

        Eigen::VectorXd z;
        if (!free.empty()) {
            Eigen::MatrixXd af(a.rows(), static_cast<Eigen::Index>(free.size()));
            Eigen::VectorXd rhs = b;
            for (Eigen::Index i = 0; i < k; ++i)
                if (state[i] != State::free) rhs -= a.col(i) * x(i);
            for (std::size_t f = 0; f < free.size(); ++f) af.col(static_cast<Eigen::Index>(f)) = a.col(free[f]);
            z = af.completeOrthogonalDecomposition().solve(rhs);
        }

        bool inside = true;
        for (Eigen::Index f = 0; f < z.size(); ++f)
            if (z(f) > 1.0 || z(f) < -1.0) inside = false;

        if (inside) {
            for (std::size_t f = 0; f < free.size(); ++f) x(free[f]) = z(static_cast<Eigen::Index>(f));
            const Eigen::VectorXd grad = a.transpose() * (a * x - b);
            Eigen::Index worst = -1;
            double worst_mag = grad_tol;
            for (Eigen::Index i = 0; i < k; ++i) {
                const double viol = state[i] == State::lower ? -grad(i) : state[i] == State::upper ? grad(i) : 0.0;
                if (viol > worst_mag) {
                    worst_mag = viol;
                    worst = i;
                }
            }
            if (worst < 0) break;
            state[worst] = State::free;
            continue;
        }

        double alpha = 1.0;
        for (std::size_t f = 0; f < free.size(); ++f) {
            const double xi = x(free[f]);
            const double zi = z(static_cast<Eigen::Index>(f));
            if (zi > 1.0) alpha = std::min(alpha, (1.0 - xi) / (zi - xi));
            if (zi < -1.0) alpha = std::min(alpha, (-1.0 - xi) / (zi - xi));
        }
        for (std::size_t f = 0; f < free.size(); ++f) {
            const Eigen::Index i = free[f];
            x(i) += alpha * (z(static_cast<Eigen::Index>(f)) - x(i));
            if (x(i) >= 1.0 - 1e-14) {
                x(i) = 1.0;
                state[i] = State::upper;
            } else if (x(i) <= -1.0 + 1e-14) {
                x(i) = -1.0;
                state[i] = State::lower;
            }
        }
    }
    return x;
}

}  // namespace

GapTargetMap coefficient_solve(const SpectralDecomposition& sd)
{
    GapTargetMap out;
    const int n = sd.n;
    const GapTable gaps = gap_table(sd);
    const auto k = static_cast<Eigen::Index>(gaps.distinct_gaps.size());
    const Eigen::Index rows = static_cast<Eigen::Index>(n) * n;

    const Eigen::MatrixXd target =
        Eigen::MatrixXd::Constant(n, n, 1.0 / n) - standard_amm(sd).matrix;
    const Eigen::VectorXd b = Eigen::Map<const Eigen::VectorXd>(target.data(), rows);

    Eigen::MatrixXd a(rows, k);
    for (Eigen::Index g = 0; g < k; ++g) {
        Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n, n);
        for (auto [r, q] : gaps.distinct_gaps[g].pairs) s += sd.idempotents[r].cwiseProduct(sd.idempotents[q]);
        s *= 2.0;
        a.col(g) = Eigen::Map<const Eigen::VectorXd>(s.data(), rows);
    }

    Eigen::VectorXd x = Eigen::VectorXd::Zero(k);
    if (k > 0) {
        const Eigen::VectorXd free_sol = a.completeOrthogonalDecomposition().solve(b);
        out.unconstrained.assign(free_sol.data(), free_sol.data() + k);
        out.box_ok = (free_sol.array().abs() <= 1.0 + kBoxSlack).all();
        x = out.box_ok ? free_sol.cwiseMax(-1.0).cwiseMin(1.0).eval() : box_least_squares(a, b, free_sol);
    } else {
        out.box_ok = true;
    }
    out.residual = (a * x - b).norm();
    out.feasible = out.residual < kFeasibleResidual;

    for (Eigen::Index g = 0; g < k; ++g)
        out.targets.push_back({gaps.distinct_gaps[g].value, x(g), gaps.distinct_gaps[g].pairs});

    if (out.feasible) {
        out.diagnostic = "consistent system, residual " + fmt(out.residual);
    } else if (!out.box_ok) {
        std::string detail;
        for (Eigen::Index g = 0; g < k; ++g)
            if (std::abs(out.unconstrained[g]) > 1.0 + kBoxSlack)
                detail += " Re phi(" + fmt(gaps.distinct_gaps[g].value) + ") = " + fmt(out.unconstrained[g]) + ";";
        out.diagnostic = "required coefficients leave [-1, 1]:" + detail + " best box-constrained residual " +
                         fmt(out.residual);
    } else {
        out.diagnostic = "linear system is inconsistent, residual " + fmt(out.residual);
    }
    return out;
}

Realization realize_cosine_product(const GapTargetMap& targets)
{
    Realization out;
    out.recipe = "cosine_product";
    const GapTarget* nonzero = nullptr;
    std::vector<const GapTarget*> zeros;
    for (const auto& t : targets.targets) {
        if (std::abs(t.coefficient) > 1.0 + kBoxSlack) {
            out.reason = "target Re phi(" + fmt(t.gap) + ") = " + fmt(t.coefficient) + " lies outside [-1, 1]";
            return out;
        }
        if (std::abs(t.coefficient) <= kZeroTarget) {
            zeros.push_back(&t);
        } else if (nonzero) {
            out.reason = "more than one nonzero target; the cosine-product recipe handles at most one";
            return out;
        } else {
            nonzero = &t;
        }
    }

    // Quarter-period pair per zero target, largest gap first (smallest time).
    std::sort(zeros.begin(), zeros.end(), [](auto* l, auto* r) { return l->gap > r->gap; });
    std::vector<double> times;
    for (const auto* z : zeros) times.push_back(kPi / (2.0 * z->gap));

    if (nonzero) {
        double prod = 1.0;
        for (double mu : times) prod *= std::cos(mu * nonzero->gap);
        if (std::abs(prod) < 1e-12) {
            out.reason = "the zeroing pairs already annihilate the nonzero target at gap " + fmt(nonzero->gap);
            return out;
        }
        const double ratio = nonzero->coefficient / prod;
        if (std::abs(ratio) > 1.0 + kBoxSlack) {
            out.reason = "required cos(mu * " + fmt(nonzero->gap) + ") = " + fmt(ratio) + " lies outside [-1, 1]";
            return out;
        }
        out.parameters["required_cos"] = ratio;
        times.push_back(std::acos(std::clamp(ratio, -1.0, 1.0)) / nonzero->gap);
    }

    out.pair_times = times;
    for (std::size_t i = 0; i < times.size(); ++i) out.parameters["mu" + std::to_string(i + 1)] = times[i];
    if (times.empty()) {
        out.distribution = Distribution::dirac(0.0);
    } else if (times.size() == 1) {
        out.distribution = Distribution::symmetric_pair(times.front());
    } else {
        std::vector<Distribution> pairs;
        for (double mu : times) pairs.push_back(Distribution::symmetric_pair(mu));
        out.distribution = sum_independent(std::move(pairs));
    }
    return out;
}

const std::vector<CatalogTime>& instantaneous_mixing_catalog()
{
    static const std::vector<CatalogTime> catalog = {
        {"K2", 2, kPi / 4.0},
        {"K3", 3, 2.0 * kPi / 9.0},
        {"K4", 4, kPi / 4.0},
        {"K1,3", 4, 2.0 * kPi / (3.0 * std::sqrt(3.0))},
        {"C4", 4, kPi / 4.0},
    };
    return catalog;
}

namespace {

Realization solve_dirac(const SpectralDecomposition& sd)
{
    Realization out;
    out.recipe = "dirac_instantaneous";
    for (const auto& entry : instantaneous_mixing_catalog()) {
        if (entry.n != sd.n) continue;
        auto d = Distribution::dirac(entry.time);
        if (verify_uniform(sd, d).uniform) {
            out.distribution = d;
            out.parameters["time"] = entry.time;
            out.reason = "instantaneous uniform mixing (" + entry.graph + ")";
            return out;
        }
    }
    out.reason = "no cataloged instantaneous uniform mixing time for this graph";
    return out;
}

void split_targets(const GapTargetMap& targets, std::vector<const GapTarget*>& zeros,
                   std::vector<const GapTarget*>& nonzeros)
{
    for (const auto& t : targets.targets)
        (std::abs(t.coefficient) <= kZeroTarget ? zeros : nonzeros).push_back(&t);
}

Realization solve_gaussian(const GapTargetMap& targets)
{
    Realization out;
    out.recipe = "gaussian";
    std::vector<const GapTarget*> zeros, nonzeros;
    split_targets(targets, zeros, nonzeros);
    if (nonzeros.size() > 1) {
        out.reason = "Gaussian recipe needs at most one nonzero target";
        return out;
    }

    auto accept = [&](double mu, double sigma2, int k) {
        out.distribution = Distribution::gaussian(mu, sigma2);
        out.parameters["mu"] = mu;
        out.parameters["sigma2"] = sigma2;
        out.parameters["k"] = k;
    };

    if (zeros.empty()) {
        if (nonzeros.empty()) {
            out.reason = "no targets to fit";
            return out;
        }
        // cos(Δμ) = ±1 puts the whole target on the damping factor.
        const auto& t = *nonzeros.front();
        const double mu = t.coefficient < 0.0 ? kPi / t.gap : 0.0;
        const double damp = std::abs(t.coefficient);
        accept(mu, -2.0 * std::log(damp) / (t.gap * t.gap), 0);
        return out;
    }

    std::sort(zeros.begin(), zeros.end(), [](auto* l, auto* r) { return l->gap < r->gap; });
    const double base = zeros.front()->gap;
    constexpr int kMaxK = 64;
    for (int k = 0; k < kMaxK; ++k) {
        const double mu = (2.0 * k + 1.0) * kPi / (2.0 * base);
        bool zeroes_all = true;
        for (const auto* z : zeros)
            if (std::abs(std::cos(z->gap * mu)) > 1e-9) zeroes_all = false;
        if (!zeroes_all) continue;
        if (nonzeros.empty()) {
            accept(mu, 0.0, k);
            return out;
        }
        const auto& t = *nonzeros.front();
        const double c = std::cos(t.gap * mu);
        if (std::abs(c) < 1e-12) continue;
        const double ratio = t.coefficient / c;
        if (ratio <= 0.0 || ratio > 1.0 + kBoxSlack) continue;
        accept(mu, std::max(0.0, -2.0 * std::log(std::min(ratio, 1.0)) / (t.gap * t.gap)), k);
        return out;
    }
    out.reason = "no mean zeroes every zero target while leaving a damping factor in (0, 1] (sigma2 < 0 required)";
    return out;
}

Realization solve_bernoulli(const GapTargetMap& targets)
{
    Realization out;
    out.recipe = "bernoulli";
    if (targets.targets.size() != 1) {
        out.reason = "Bernoulli recipe needs a single eigenvalue gap";
        return out;
    }
    const auto& t = targets.targets.front();
    const double denom = 1.0 - std::cos(t.gap);
    if (denom < 1e-12) {
        out.reason = "cos(gap) = 1: Bernoulli sampling cannot move the coefficient";
        return out;
    }
    const double p = (1.0 - t.coefficient) / denom;
    if (p < -kBoxSlack || p > 1.0 + kBoxSlack) {
        out.reason = "required p = " + fmt(p) + " lies outside [0, 1]";
        return out;
    }
    const double clamped = std::clamp(p, 0.0, 1.0);
    out.distribution = Distribution::bernoulli(clamped);
    out.parameters["p"] = clamped;
    return out;
}

}  // namespace

Realization solve_known_family(const SpectralDecomposition& sd, FamilyHint hint)
{
    Realization out;
    if (hint == FamilyHint::dirac_instantaneous) {
        out = solve_dirac(sd);
    } else {
        const GapTargetMap targets = coefficient_solve(sd);
        if (!targets.feasible) {
            out.recipe = hint == FamilyHint::gaussian ? "gaussian" : hint == FamilyHint::bernoulli ? "bernoulli"
                                                                                                   : "cosine_product";
            out.reason = "coefficient system infeasible: " + targets.diagnostic;
            return out;
        }
        switch (hint) {
        case FamilyHint::gaussian: out = solve_gaussian(targets); break;
        case FamilyHint::bernoulli: out = solve_bernoulli(targets); break;
        default: out = realize_cosine_product(targets); break;
        }
    }
    if (out.distribution) {
        const auto check = verify_uniform(sd, *out.distribution, 1e-8);
        out.parameters["deviation"] = check.deviation;
        if (!check.uniform) {
            out.reason = "recipe produced a distribution that fails verification (deviation " + fmt(check.deviation) + ")";
            out.distribution.reset();
        }
    }
    return out;
}

UniformCheck verify_uniform(const SpectralDecomposition& sd, const Distribution& d, double tol)
{
    const Eigen::MatrixXd m = amm_under(sd, d).matrix;
    UniformCheck out;
    out.deviation = (m.array() - 1.0 / sd.n).abs().maxCoeff();
    out.uniform = out.deviation <= tol;
    return out;
}

}  // namespace amix
