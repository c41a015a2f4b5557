#include "prips/realizer.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>

#include <Eigen/Eigenvalues>

#include "prips/errors.hpp"
#include "prips/random.hpp"

namespace prips {

const char* to_string(RealizationVerdict verdict)
{
    return verdict == RealizationVerdict::Certified ? "certified" : "inconclusive";
}

PenaltyModel::PenaltyModel(const Graph& g, double margin) : upper(1 - margin), lower(1 + margin), n(g.n())
{
    for (int u = 0; u < g.n(); ++u) {
        for (int v = u + 1; v < g.n(); ++v) {
            (g.adjacent(u, v) ? edges : non_edges).emplace_back(u, v);
        }
    }
}

bool certify(std::span<const Point2> points, const Graph& g, const Rational& epsilon)
{
    if (static_cast<int>(points.size()) != g.n()) {
        throw PreconditionError("certify: " + std::to_string(points.size()) + " points for " + std::to_string(g.n()) +
                                " vertices");
    }
    const Rational lo = (1 - epsilon) * (1 - epsilon);
    const Rational hi = (1 + epsilon) * (1 + epsilon);
    for (int u = 0; u < g.n(); ++u) {
        for (int v = u + 1; v < g.n(); ++v) {
            const Point2 diff = points[static_cast<std::size_t>(u)] - points[static_cast<std::size_t>(v)];
            const Rational d2 = diff.squaredNorm();
            if (d2 == 0) {
                return false;
            }
            if (g.adjacent(u, v) ? d2 > lo : d2 < hi) {
                return false;
            }
        }
    }
    return true;
}

Eigen::VectorXd spectral_layout(const Graph& g)
{
    const int n = g.n();
    Eigen::VectorXd x = Eigen::VectorXd::Zero(2 * n);
    if (n < 3) {
        for (int v = 0; v < n; ++v) {
            x[2 * v] = 0.5 * v;
        }
        return x;
    }
    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [u, v] : g.edges()) {
        lap(u, v) = lap(v, u) = -1;
        lap(u, u) += 1;
        lap(v, v) += 1;
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap);
    const Eigen::MatrixXd coords = solver.eigenvectors().middleCols(1, 2);
    const double side = std::sqrt(static_cast<double>(n));
    for (int axis = 0; axis < 2; ++axis) {
        const double lo = coords.col(axis).minCoeff();
        const double span = std::max(coords.col(axis).maxCoeff() - lo, 1e-9);
        for (int v = 0; v < n; ++v) {
            // tiny index-dependent offset separates coincident vertices
            x[2 * v + axis] = (coords(v, axis) - lo) / span * side + 1e-3 * (axis == 0 ? v : -v);
        }
    }
    return x;
}

namespace {

constexpr std::int64_t kResolution = 1000000;

// Gradient descent with Armijo backtracking. The trial step grows after
// each accepted step and shrinks on rejection.
double descend(const PenaltyModel& model, Eigen::VectorXd& x, int iterations)
{
    Eigen::VectorXd grad;
    Eigen::VectorXd trial_grad;
    double loss = penalty(model, x, &grad);
    double step = 0.1;
    for (int it = 0; it < iterations && loss > 0; ++it) {
        const double g2 = grad.squaredNorm();
        if (g2 == 0) {
            break;
        }
        bool accepted = false;
        while (step > 1e-14) {
            const Eigen::VectorXd trial = x - step * grad;
            const double trial_loss = penalty(model, trial, &trial_grad);
            if (trial_loss <= loss - 1e-4 * step * g2) {
                x = trial;
                loss = trial_loss;
                grad.swap(trial_grad);
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            break;
        }
        step *= 2;
    }
    return loss;
}

std::vector<Point2> rationalize_layout(const Eigen::VectorXd& x)
{
    std::vector<Point2> points;
    for (Eigen::Index v = 0; 2 * v < x.size(); ++v) {
        points.emplace_back(rationalize(x[2 * v], kResolution), rationalize(x[2 * v + 1], kResolution));
    }
    return points;
}

}  // namespace

RealizationOutcome realize(const RealizationProblem& problem)
{
    const Rational& eps = problem.epsilon;
    if (eps <= 0 || eps >= Rational(1, 2)) {
        throw PreconditionError("realize: margin must lie in (0, 1/2)");
    }
    if (problem.restarts < 1 || problem.iterations < 0) {
        throw PreconditionError("realize: budget must be positive");
    }
    const Graph& g = problem.graph;
    // Optimise with twice the certified margin so that rounding to the
    // rational grid cannot push a converged layout over the line.
    const PenaltyModel model(g, 2 * to_double(eps));
    const double side = std::sqrt(static_cast<double>(std::max(g.n(), 1)));

    RealizationOutcome out;
    out.best_loss = std::numeric_limits<double>::infinity();
    for (int r = 0; r < problem.restarts; ++r) {
        Eigen::VectorXd x;
        if (r == 0) {
            x = spectral_layout(g);
        } else {
            auto rng = make_rng(problem.seed, static_cast<std::uint64_t>(r));
            std::uniform_real_distribution<double> coord(0.0, side);
            x.resize(2 * g.n());
            for (Eigen::Index i = 0; i < x.size(); ++i) {
                x[i] = coord(rng);
            }
        }
        const double loss = descend(model, x, problem.iterations);
        out.trace.push_back(loss);
        out.best_loss = std::min(out.best_loss, loss);
        if (loss == 0) {
            auto points = rationalize_layout(x);
            if (certify(points, g, eps)) {
                out.verdict = RealizationVerdict::Certified;
                out.points = std::move(points);
                out.restart = r;
                return out;
            }
        }
    }
    return out;
}

}  // namespace prips
