#pragma once

#include "polyzeta/report.hpp"

#include <cstdint>
#include <vector>

namespace polyzeta {

/// Exact sweep of the defining difference equation over all tuples with
/// 2 <= depth <= max_depth and magnitudes <= max_index.
Report run_b0_suite(int max_depth, int max_index);

/// Exact agreement of the difference-solver path with the merge-recursion
/// path over all tuples with depth <= max_depth, magnitudes <= max_index,
/// plus the degree law deg = weight + depth.
Report run_oracle_suite(int max_depth, int max_index);

struct PropsBounds {
    int prod_identity_max_n = 4;   // zeta(0)zeta(-2n-1) vs depth-2 values, k = 0..2n+1
    int swap_identity_max_n = 6;   // zeta(-n,-n-1|1) = zeta(-n-1,-n|1)
    int middle_zero_max_n = 3;     // zeta(-2n1-1,0,-2n2-1|1) = -zeta(-2n1-1,-2n2-1|1)
    int repeated_zero_max_r = 8;   // zeta_r(0|1) and zeta_r(0|0) closed forms
    int at_minus_one_max_r = 6;    // zeta_{r+1}(0|-1) closed form and its B-substitution twin
    int pair_recursion_max_t = 6;  // zeta_t(0|z) + zeta_{t-1}(0|z) = -subst identity
    int eval01_max_depth = 3;      // zeta(t|1) = zeta(t|0) when the first entry is < 0
    int eval01_max_index = 4;
};

/// The closed-form value identities of the depth-one-to-three propositions,
/// exact over the requested ranges.
Report run_props_suite(const PropsBounds& b = {});

/// Exact per-word difference-equation check of the Bernoulli generating series.
Report run_flat_hb_suite(int max_depth, int max_index);

/// Numeric flatness residuals of the polyzeta generating series at each z.
Report run_flat_h_suite(const std::vector<double>& zs, int max_weight, double tol_residual);

/// Randomized exact checks of the twisted product rule.
Report run_leibniz_suite(int instances, std::uint64_t seed, int max_rank = 4);

/// Randomized exact compatibility checks of the versal map with the
/// connections on both sides.
Report run_psi_suite(int instances, std::uint64_t seed, int max_rank = 4, int max_weight = 4);

/// Numeric multiplicativity of polyzeta values against the stuffle product
/// (character property) for convergent pairs of total weight <= the bound.
Report run_stuffle_char_suite(int max_total_weight, const std::vector<double>& zs,
                              double rel_tol);

/// Experiment: polynomial identity zeta(-2n+k,0,-k|z) =? zeta(-2n+k,-k|z)
/// for 0 < k <= 2n. Reported, never asserted.
Report run_conjecture_suite(int max_n);

}  // namespace polyzeta
