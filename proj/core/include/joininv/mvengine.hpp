#pragma once

#include "joininv/blocks.hpp"
#include "joininv/presentations.hpp"

#include <array>

namespace joininv {

struct ValidationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One column of the Mayer-Vietoris comparison: the presented map
// H^q(B1) + H^q(B2) --(j1*, -j2*)--> H^q(B1 cap B2) with its exact kernel
// and cokernel.
struct MvDegreeData {
    int degree = 0;
    IntMatrix src_rel, dst_rel, map;
    FgAbGroup kernel, cokernel;
};

MvDegreeData mv_degree(const JoinParams& p, int q);

// (b0, ..., b5) = (1, 2g, 1, 1, 2g, 1); low degrees from the rational MV
// ranks, the rest by duality.
std::array<long, 6> rational_betti(const JoinParams& p);

// Closed forms straight from the summary table.
CohomologyProfile integral_cohomology_closed_form(const JoinParams& p);
CohomologyProfile qz_cohomology_closed_form(const JoinParams& p);

// Assembled pipelines (MV + UCT + duality); each is cross-checked against
// the closed form by cross_validate.
CohomologyProfile integral_cohomology(const JoinParams& p);
CohomologyProfile integral_homology(const JoinParams& p);
CohomologyProfile qz_cohomology(const JoinParams& p);

struct InvariantReport {
    JoinParams params;
    CohomologyProfile h_integral;
    std::array<long, 6> h_rational_betti{};
    CohomologyProfile h_qz;
    CohomologyProfile homology;
    std::vector<std::pair<std::string, bool>> checks;
    std::vector<std::pair<std::string, std::string>> provenance;
};

// Test hook: deliberately corrupt one pipeline so the validation trips.
struct FaultInjection {
    bool tamper_closed_form_d = false;
};

// Runs both derivations of every profile, all consistency assertions, and
// returns the aggregated report; throws ValidationFailure naming the first
// failed assertion.
InvariantReport cross_validate(const JoinParams& p, const FaultInjection& fault = {});

} // namespace joininv
