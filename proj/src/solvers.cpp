#include "kcenter/solvers.hpp"

#include <algorithm>
#include <limits>

#include "kcenter/rng.hpp"

namespace kcenter {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double max_of(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v)
        if (x > m) m = x;
    return m;
}

void update_min_dist(const Instance& inst, int center, std::vector<double>& mind) {
    const Point& c = inst.customers[static_cast<size_t>(center)];
    for (size_t i = 0; i < mind.size(); ++i) {
        const double d = distance(inst.customers[i], c);
        if (d < mind[i]) mind[i] = d;
    }
}

/// Per-customer min distance to every center except `skip` (an index into
/// `centers`, not a customer index).
std::vector<double> min_dist_without(const Instance& inst,
                                     const std::vector<int>& centers, size_t skip) {
    std::vector<double> mind(inst.customers.size(), kInf);
    for (size_t j = 0; j < centers.size(); ++j) {
        if (j == skip) continue;
        update_min_dist(inst, centers[j], mind);
    }
    return mind;
}

/// Farthest-point additions until `centers` has k entries; mind must hold
/// the current per-customer min distances. Farthest ties -> lowest index.
void farthest_point_fill(const Instance& inst, std::vector<int>& centers,
                         std::vector<double>& mind) {
    while (static_cast<int>(centers.size()) < inst.k) {
        int far = 0;
        for (size_t i = 1; i < mind.size(); ++i)
            if (mind[i] > mind[static_cast<size_t>(far)]) far = static_cast<int>(i);
        centers.push_back(far);
        update_min_dist(inst, far, mind);
    }
}

Solution finish(const Instance& inst, std::vector<int> centers) {
    std::sort(centers.begin(), centers.end());
    const double d = evaluate_objective(inst, centers);
    return Solution{std::move(centers), d};
}

} // namespace

const char* solver_name(SolverKind kind) {
    switch (kind) {
        case SolverKind::Dragoon: return "dragoon";
        case SolverKind::TwoApprox: return "two-approx";
        case SolverKind::MacQueen: return "macqueen";
        case SolverKind::Greedy: return "greedy";
        case SolverKind::Backtrack: return "backtrack";
    }
    return "?";
}

bool parse_solver_kind(const std::string& name, SolverKind& out) {
    for (SolverKind k : all_solver_kinds()) {
        if (name == solver_name(k)) {
            out = k;
            return true;
        }
    }
    // common aliases
    if (name == "2-approx" || name == "twoapprox" || name == "two_approx") {
        out = SolverKind::TwoApprox;
        return true;
    }
    return false;
}

std::vector<SolverKind> all_solver_kinds() {
    return {SolverKind::Dragoon, SolverKind::TwoApprox, SolverKind::MacQueen,
            SolverKind::Greedy, SolverKind::Backtrack};
}

int one_center(const Instance& inst) {
    const int n = inst.size();
    int best = 0;
    double best_d = kInf;
    for (int c = 0; c < n; ++c) {
        double worst = 0.0;
        for (const Point& v : inst.customers) {
            const double d = distance(v, inst.customers[static_cast<size_t>(c)]);
            if (d > worst) worst = d;
            if (worst >= best_d) break;
        }
        if (worst < best_d) {
            best_d = worst;
            best = c;
        }
    }
    return best;
}

SolveResult solve_two_approx(const Instance& inst, const SolverConfig& cfg) {
    std::vector<int> centers;
    std::vector<double> mind(inst.customers.size(), kInf);
    if (cfg.two_approx_random_start) {
        Rng rng(cfg.seed);
        centers.push_back(rng.index(inst.size()));
    } else {
        centers.push_back(one_center(inst));
    }
    update_min_dist(inst, centers[0], mind);
    farthest_point_fill(inst, centers, mind);

    SolveTrace trace;
    Solution sol = finish(inst, std::move(centers));
    trace.stage_objectives.emplace_back("placement", sol.objective);
    return {std::move(sol), std::move(trace)};
}

namespace {

/// Dragoon stage 3 / shared local improvement. first_improvement selects
/// Dragoon's nearest-candidate-first acceptance; otherwise the best strict
/// improvement is applied (Backtrack). Returns accepted move count.
int improvement_sweeps(const Instance& inst, std::vector<int>& centers,
                       double& current_d, SolveTrace& trace,
                       bool first_improvement, int max_steps,
                       const char* sweep_label) {
    const int n = inst.size();
    std::vector<char> is_center(static_cast<size_t>(n), 0);
    for (int c : centers) is_center[static_cast<size_t>(c)] = 1;

    int accepted = 0;
    bool improved = true;
    while (improved && accepted < max_steps) {
        improved = false;
        std::sort(centers.begin(), centers.end());
        for (size_t slot = 0; slot < centers.size() && accepted < max_steps; ++slot) {
            const int here = centers[slot];
            const std::vector<double> without = min_dist_without(inst, centers, slot);
            const Point& pos = inst.customers[static_cast<size_t>(here)];

            std::vector<int> candidates;
            candidates.reserve(static_cast<size_t>(n));
            for (int c = 0; c < n; ++c)
                if (!is_center[static_cast<size_t>(c)]) candidates.push_back(c);
            if (first_improvement) {
                std::stable_sort(candidates.begin(), candidates.end(),
                                 [&](int a, int b) {
                                     return distance(inst.customers[static_cast<size_t>(a)], pos) <
                                            distance(inst.customers[static_cast<size_t>(b)], pos);
                                 });
            }

            int best_cand = -1;
            double best_d = current_d;
            for (int cand : candidates) {
                const Point& cp = inst.customers[static_cast<size_t>(cand)];
                double worst = 0.0;
                for (size_t v = 0; v < without.size(); ++v) {
                    const double d = std::min(without[v], distance(inst.customers[v], cp));
                    if (d > worst) worst = d;
                    if (worst >= best_d) break;
                }
                if (worst < best_d) {
                    best_d = worst;
                    best_cand = cand;
                    if (first_improvement) break;
                }
            }
            if (best_cand >= 0) {
                is_center[static_cast<size_t>(here)] = 0;
                is_center[static_cast<size_t>(best_cand)] = 1;
                centers[slot] = best_cand;
                current_d = best_d;
                ++accepted;
                improved = true;
            }
        }
        trace.stage_objectives.emplace_back(sweep_label, current_d);
        ++trace.iterations;
    }
    return accepted;
}

} // namespace

SolveResult solve_dragoon(const Instance& inst, const SolverConfig& cfg) {
    (void)cfg;
    // Stage 1: virtual center from the 1-center problem.
    const int virtual_center = one_center(inst);

    // Stage 2: farthest-point placement; only the first pick sees the
    // virtual center, which never enters the solution by itself.
    std::vector<int> centers;
    std::vector<double> mind(inst.customers.size(), kInf);
    {
        const Point& vc = inst.customers[static_cast<size_t>(virtual_center)];
        int far = 0;
        double far_d = -1.0;
        for (int i = 0; i < inst.size(); ++i) {
            const double d = distance(inst.customers[static_cast<size_t>(i)], vc);
            if (d > far_d) {
                far_d = d;
                far = i;
            }
        }
        centers.push_back(far);
        update_min_dist(inst, far, mind);
    }
    farthest_point_fill(inst, centers, mind);

    SolveTrace trace;
    double d = max_of(mind);
    trace.stage_objectives.emplace_back("placement", d);

    // Stage 3: relocate each center to the nearest node that strictly
    // improves D, sweeping until a full sweep makes no move.
    improvement_sweeps(inst, centers, d, trace, /*first_improvement=*/true,
                       std::numeric_limits<int>::max(), "sweep");
    return {finish(inst, std::move(centers)), std::move(trace)};
}

SolveResult solve_macqueen(const Instance& inst, const SolverConfig& cfg) {
    const int n = inst.size();
    const int k = inst.k;
    Rng rng(cfg.seed);

    // k distinct start indices via partial Fisher-Yates.
    std::vector<int> pool(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<size_t>(i)] = i;
    for (int i = 0; i < k; ++i)
        std::swap(pool[static_cast<size_t>(i)],
                  pool[static_cast<size_t>(i + rng.index(n - i))]);
    std::vector<int> centers(pool.begin(), pool.begin() + k);
    std::sort(centers.begin(), centers.end());

    SolveTrace trace;
    trace.stage_objectives.emplace_back("init", evaluate_objective(inst, centers));

    for (int iter = 0; iter < cfg.macqueen_max_iters; ++iter) {
        const Assignment a = assign(inst, centers);

        std::vector<char> taken(static_cast<size_t>(n), 0);
        // Nodes of not-yet-repositioned centers stay reserved so an empty
        // cluster can always keep its node.
        for (int c : centers) taken[static_cast<size_t>(c)] = 1;

        std::vector<int> next;
        next.reserve(static_cast<size_t>(k));
        for (int c : centers) { // ascending index order
            taken[static_cast<size_t>(c)] = 0;
            double sx = 0.0, sy = 0.0;
            int count = 0;
            for (int v = 0; v < n; ++v) {
                if (a.owner[static_cast<size_t>(v)] == c) {
                    sx += inst.customers[static_cast<size_t>(v)].x;
                    sy += inst.customers[static_cast<size_t>(v)].y;
                    ++count;
                }
            }
            int snapped;
            if (count == 0) {
                snapped = c; // empty cluster keeps its node
            } else {
                const Point centroid{sx / count, sy / count};
                snapped = -1;
                double best = kInf;
                for (int v = 0; v < n; ++v) {
                    if (taken[static_cast<size_t>(v)]) continue;
                    const double d = distance(inst.customers[static_cast<size_t>(v)], centroid);
                    if (d < best) { // ties keep the lowest index
                        best = d;
                        snapped = v;
                    }
                }
            }
            taken[static_cast<size_t>(snapped)] = 1;
            next.push_back(snapped);
        }
        std::sort(next.begin(), next.end());
        ++trace.iterations;
        const bool converged = (next == centers);
        centers = std::move(next);
        trace.stage_objectives.emplace_back("iteration", evaluate_objective(inst, centers));
        if (converged) break;
    }
    return {finish(inst, std::move(centers)), std::move(trace)};
}

SolveResult solve_greedy(const Instance& inst, const SolverConfig& cfg) {
    const int n = inst.size();
    Rng rng(cfg.seed);
    std::vector<int> centers;
    std::vector<char> used(static_cast<size_t>(n), 0);
    std::vector<double> mind(inst.customers.size(), kInf);

    std::vector<int> ties;
    while (static_cast<int>(centers.size()) < inst.k) {
        double best_d = kInf;
        ties.clear();
        for (int c = 0; c < n; ++c) {
            if (used[static_cast<size_t>(c)]) continue;
            const Point& cp = inst.customers[static_cast<size_t>(c)];
            double worst = 0.0;
            for (size_t v = 0; v < mind.size(); ++v) {
                const double d = std::min(mind[v], distance(inst.customers[v], cp));
                if (d > worst) worst = d;
                if (worst > best_d) break;
            }
            if (worst < best_d) {
                best_d = worst;
                ties.clear();
                ties.push_back(c);
            } else if (worst == best_d) {
                ties.push_back(c);
            }
        }
        // Equal-improvement placements are resolved by a random draw.
        const int chosen = ties[static_cast<size_t>(rng.index(static_cast<int>(ties.size())))];
        centers.push_back(chosen);
        used[static_cast<size_t>(chosen)] = 1;
        update_min_dist(inst, chosen, mind);
    }

    SolveTrace trace;
    Solution sol = finish(inst, std::move(centers));
    trace.stage_objectives.emplace_back("placement", sol.objective);
    return {std::move(sol), std::move(trace)};
}

SolveResult solve_backtrack(const Instance& inst, const SolverConfig& cfg) {
    SolveResult greedy = solve_greedy(inst, cfg);
    std::vector<int> centers = greedy.solution.centers;
    double d = greedy.solution.objective;

    SolveTrace trace;
    trace.stage_objectives.emplace_back("greedy", d);
    improvement_sweeps(inst, centers, d, trace, /*first_improvement=*/false,
                       cfg.backtrack_max_steps, "sweep");
    return {finish(inst, std::move(centers)), std::move(trace)};
}

SolveResult solve(const Instance& inst, const SolverConfig& cfg) {
    switch (cfg.kind) {
        case SolverKind::Dragoon: return solve_dragoon(inst, cfg);
        case SolverKind::TwoApprox: return solve_two_approx(inst, cfg);
        case SolverKind::MacQueen: return solve_macqueen(inst, cfg);
        case SolverKind::Greedy: return solve_greedy(inst, cfg);
        case SolverKind::Backtrack: return solve_backtrack(inst, cfg);
    }
    throw std::logic_error("unknown solver kind");
}

} // namespace kcenter
