#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace kcenter {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline double distance(const Point& a, const Point& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

/// A k-center problem instance: customer locations plus the number of
/// centers to place. Centers must coincide with customer nodes.
struct Instance {
    std::vector<Point> customers;
    int k = 1;

    Instance() = default;
    Instance(std::vector<Point> customers_, int k_);

    int size() const { return static_cast<int>(customers.size()); }
};

/// A feasible placement: k distinct customer indices and the cached
/// objective value D (max customer-to-nearest-center distance).
struct Solution {
    std::vector<int> centers;  // sorted ascending
    double objective = 0.0;
};

/// Per-customer nearest-center assignment. Ties between equidistant
/// centers go to the lowest center index.
struct Assignment {
    std::vector<int> owner;   // center index (into Instance.customers)
    std::vector<double> dist; // distance to that center
};

/// Max over customers of the distance to the nearest center in `centers`.
double evaluate_objective(const Instance& inst, const std::vector<int>& centers);

Assignment assign(const Instance& inst, const std::vector<int>& centers);

/// Thrown when an instance exceeds the exact solver's enumeration cap.
struct ExactCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr std::uint64_t kDefaultExactCap = 5'000'000;

/// Number of k-subsets C(n,k), saturating at limit+1 to avoid overflow.
std::uint64_t subset_count(int n, int k, std::uint64_t limit);

/// Brute-force optimum over all k-subsets of customer indices. Among
/// co-optimal subsets returns the lexicographically smallest index set.
Solution solve_exact(const Instance& inst, std::uint64_t cap = kDefaultExactCap);

} // namespace kcenter
