#pragma once

#include <optional>
#include <set>
#include <utility>

#include "rmc/codes.hpp"

namespace rmc {

struct ScanOptions {
    /// 0 picks the hardware concurrency.
    int threads = 0;
    SearchGuard guard;
    /// Stop once the running maximum reaches this value. The result is then
    /// min(rho, cap), which is exact when cap is a proven upper bound.
    std::optional<int> cap;
};

/// d(X, C) = min over M in C of rank(X - M).
int distance_to_code(const RankCode& code, const Mat& X, const SearchGuard& guard = {});

/// rho(C) by a full scan of the ambient space.
int covering_radius_exact(const RankCode& code, const ScanOptions& options = {});

/// k - d(C^perp) + 1; linear C other than the full space.
int bound_dual_distance(const RankCode& code, const SearchGuard& guard = {});

/// sigma*(C): number of positive B*_i, i >= 1.
int external_distance(const RankCode& code, const SearchGuard& guard = {});
inline int bound_external(const RankCode& code, const SearchGuard& guard = {}) { return external_distance(code, guard); }

/// 1-based grid cell (row, col).
using Cell = std::pair<int, int>;

struct InitialSet {
    int k = 0;
    int m = 0;
    std::set<Cell> entries;
};

/// Initial entries of the nonzero codewords of a nonzero linear code.
InitialSet initial_set(const RankCode& code);

struct LinePattern {
    int a = 0;
    int b = 0;
    std::set<Cell> S;
};

/// lambda(S): fewest rows and columns covering S.
int min_line_cover(const LinePattern& pattern);

/// [k-d+1] x [m] minus in(C).
LinePattern initial_set_complement(const RankCode& code, const SearchGuard& guard = {});

/// d(C) - 1 + lambda of the complement pattern.
int bound_initial_set(const RankCode& code, const SearchGuard& guard = {});

bool is_maximal(const RankCode& code, const ScanOptions& options = {});
/// Requires |C| >= 2.
int maximality_degree(const RankCode& code, const ScanOptions& options = {});

struct BoundsReport {
    std::optional<int> rho_exact;
    std::optional<int> min_distance;
    std::optional<int> dual_distance;
    std::optional<int> bound_dual_distance;
    int bound_external = 0;
    std::optional<int> bound_initial_set;
    std::optional<int> bound_mrd;
    std::optional<int> bound_qmrd;
    /// ceil(d/2), when |C| >= 2 and C is proper.
    std::optional<int> lower_packing;
    std::optional<bool> maximal;
    std::optional<int> maximality_degree;

    /// Smallest recorded upper bound.
    int best_upper() const;
};

/// Every applicable bound; exact rho only when the scan is within the guard.
BoundsReport bounds_report(const RankCode& code, const ScanOptions& options = {});

}  // namespace rmc
