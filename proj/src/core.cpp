#include "kcenter/core.hpp"

#include <algorithm>
#include <limits>

namespace kcenter {

Instance::Instance(std::vector<Point> customers_, int k_)
    : customers(std::move(customers_)), k(k_) {
    if (customers.empty())
        throw std::invalid_argument("instance needs at least one customer");
    if (k < 1 || k > static_cast<int>(customers.size()))
        throw std::invalid_argument("k must satisfy 1 <= k <= |customers|");
    for (const Point& p : customers) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw std::invalid_argument("customer coordinates must be finite");
    }
}

double evaluate_objective(const Instance& inst, const std::vector<int>& centers) {
    if (centers.empty())
        throw std::invalid_argument("no centers");
    double worst = 0.0;
    for (const Point& v : inst.customers) {
        double best = std::numeric_limits<double>::infinity();
        for (int c : centers) {
            const double d = distance(v, inst.customers.at(static_cast<size_t>(c)));
            if (d < best) best = d;
        }
        if (best > worst) worst = best;
    }
    return worst;
}

Assignment assign(const Instance& inst, const std::vector<int>& centers) {
    if (centers.empty())
        throw std::invalid_argument("no centers");
    std::vector<int> ordered = centers;
    std::sort(ordered.begin(), ordered.end());
    Assignment a;
    a.owner.resize(inst.customers.size());
    a.dist.resize(inst.customers.size());
    for (size_t i = 0; i < inst.customers.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        int who = -1;
        for (int c : ordered) {
            const double d = distance(inst.customers[i], inst.customers.at(static_cast<size_t>(c)));
            if (d < best) { // strict: equidistant ties keep the lowest index
                best = d;
                who = c;
            }
        }
        a.owner[i] = who;
        a.dist[i] = best;
    }
    return a;
}

std::uint64_t subset_count(int n, int k, std::uint64_t limit) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 count = 1;
    for (int i = 1; i <= k; ++i) {
        count = count * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (count > limit) return limit + 1;
    }
    return static_cast<std::uint64_t>(count);
}

Solution solve_exact(const Instance& inst, std::uint64_t cap) {
    const int n = inst.size();
    const int k = inst.k;
    if (subset_count(n, k, cap) > cap)
        throw ExactCapExceeded("instance too large for exact solver");

    std::vector<int> pick(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<size_t>(i)] = i;

    std::vector<int> best_set;
    double best_d = std::numeric_limits<double>::infinity();

    for (;;) {
        // Evaluate current subset; bail out once it cannot beat best_d.
        double worst = 0.0;
        for (const Point& v : inst.customers) {
            double near = std::numeric_limits<double>::infinity();
            for (int c : pick) {
                const double d = distance(v, inst.customers[static_cast<size_t>(c)]);
                if (d < near) near = d;
            }
            if (near > worst) worst = near;
            if (worst >= best_d) break;
        }
        if (worst < best_d) { // strict: first (lexicographic) co-optimum wins
            best_d = worst;
            best_set = pick;
        }

        // Next combination in lexicographic order.
        int i = k - 1;
        while (i >= 0 && pick[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++pick[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
    }

    return Solution{std::move(best_set), best_d};
}

} // namespace kcenter
