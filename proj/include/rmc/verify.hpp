#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rmc/codes.hpp"
#include "rmc/cosets.hpp"

namespace rmc {

/// Worked examples: the 3x3 binary initial-set example, the 4x4 MRD code,
/// and the 4x4 dually QMRD code.
RankCode initial_set_example();
RankCode mrd_example();
RankCode qmrd_example();

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

CheckResult check_initial_set_example();
CheckResult check_mrd_example();
CheckResult check_qmrd_example();
/// Also reports, in `detail`, which completion form reproduced the profiles.
CheckResult check_moebius_completion();
CheckResult check_duality();
CheckResult check_bound_sweep();
CheckResult check_transform_identities();
CheckResult check_annihilator();
CheckResult check_constructions();
CheckResult check_qmrd_dual_distribution();

/// All ten checks in order; `progress` sees each result as it completes.
std::vector<CheckResult> run_acceptance(const std::function<void(const CheckResult&)>& progress = {});

}  // namespace rmc
