#ifndef PRIPS_REALIZER_HPP
#define PRIPS_REALIZER_HPP

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "prips/complex.hpp"
#include "prips/rational.hpp"

namespace prips {

struct RealizationProblem {
    Graph graph;
    Rational epsilon{1, 100};
    int restarts = 200;
    int iterations = 2000;
    std::uint64_t seed = 0;
};

enum class RealizationVerdict { Certified, Inconclusive };

const char* to_string(RealizationVerdict verdict);

struct RealizationOutcome {
    RealizationVerdict verdict = RealizationVerdict::Inconclusive;
    std::vector<Point2> points;  // set iff Certified
    int restart = -1;            // restart that produced the certificate
    double best_loss = 0;
    std::vector<double> trace;   // best loss per restart, in restart order
};

/// Pair list with target bounds: edges want d <= upper, non-edges d >= lower.
struct PenaltyModel {
    std::vector<Edge> edges;
    std::vector<Edge> non_edges;
    double upper = 1;
    double lower = 1;
    int n = 0;

    PenaltyModel(const Graph& g, double margin);
};

/// Squared-hinge loss and its gradient. x holds (x0, y0, x1, y1, ...).
template <typename Scalar>
Scalar penalty(const PenaltyModel& model, const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& x,
               Eigen::Matrix<Scalar, Eigen::Dynamic, 1>* gradient = nullptr)
{
    using std::sqrt;
    Scalar loss(0);
    if (gradient) {
        gradient->setZero(x.size());
    }
    auto term = [&](const Edge& e, bool is_edge) {
        const Eigen::Index u = 2 * e.first;
        const Eigen::Index v = 2 * e.second;
        const Scalar dx = x[u] - x[v];
        const Scalar dy = x[u + 1] - x[v + 1];
        const Scalar d = sqrt(dx * dx + dy * dy);
        const Scalar gap = is_edge ? d - Scalar(model.upper) : Scalar(model.lower) - d;
        if (gap <= Scalar(0)) {
            return;
        }
        loss += gap * gap;
        if (gradient && d > Scalar(0)) {
            const Scalar s = (is_edge ? Scalar(2) : Scalar(-2)) * gap / d;
            (*gradient)[u] += s * dx;
            (*gradient)[u + 1] += s * dy;
            (*gradient)[v] -= s * dx;
            (*gradient)[v + 1] -= s * dy;
        }
    };
    for (const auto& e : model.edges) {
        term(e, true);
    }
    for (const auto& e : model.non_edges) {
        term(e, false);
    }
    return loss;
}

/// Exact check: edges at squared distance <= (1 - eps)^2, non-edges
/// >= (1 + eps)^2, all points distinct. Size mismatch throws.
bool certify(std::span<const Point2> points, const Graph& g, const Rational& epsilon);

/// Laplacian-eigenvector layout scaled into [0, sqrt(n)]^2, plus an offset of
/// 1e-3 per vertex index that separates coincident vertices.
Eigen::VectorXd spectral_layout(const Graph& g);

/// Penalty minimisation with random restarts; only exact certification
/// yields Certified.
RealizationOutcome realize(const RealizationProblem& problem);

}  // namespace prips

#endif  // PRIPS_REALIZER_HPP
