#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kcenter/core.hpp"

namespace kcenter {

enum class SolverKind { Dragoon, TwoApprox, MacQueen, Greedy, Backtrack };

const char* solver_name(SolverKind kind);
bool parse_solver_kind(const std::string& name, SolverKind& out);
std::vector<SolverKind> all_solver_kinds();

struct SolverConfig {
    SolverKind kind = SolverKind::Dragoon;
    std::uint64_t seed = 0;
    int backtrack_max_steps = 1000;
    int macqueen_max_iters = 500;
    bool two_approx_random_start = false; // default: deterministic 1-center start
};

/// Objective values recorded at solver milestones; Dragoon and Backtrack
/// entries after the construction stage are non-increasing.
struct SolveTrace {
    std::vector<std::pair<std::string, double>> stage_objectives;
    int iterations = 0; // improvement sweeps (or MacQueen iterations)
};

struct SolveResult {
    Solution solution;
    SolveTrace trace;
};

/// Customer index minimizing the maximum distance to all customers
/// (Node-Placement 1-center). Ties go to the lowest index.
int one_center(const Instance& inst);

SolveResult solve_two_approx(const Instance& inst, const SolverConfig& cfg);
SolveResult solve_dragoon(const Instance& inst, const SolverConfig& cfg);
SolveResult solve_macqueen(const Instance& inst, const SolverConfig& cfg);
SolveResult solve_greedy(const Instance& inst, const SolverConfig& cfg);
SolveResult solve_backtrack(const Instance& inst, const SolverConfig& cfg);

/// Dispatch on cfg.kind.
SolveResult solve(const Instance& inst, const SolverConfig& cfg);

} // namespace kcenter
