#pragma once

#include "stanley/count_table.hpp"
#include "stanley/report.hpp"

namespace stanley {

// Campaign runners. Each builds its own count table (sized to the weights the
// campaign reaches), evaluates every cell in its range, and returns a
// deterministic report: identical configs yield identical reports except
// elapsed_ms, whether run serially or in parallel.
//
// Invalid configs (n_max < 1, or an oracle mode the identity cannot support,
// or an enumeration range beyond enum_budget) throw std::invalid_argument.

/// A(n) = B(n) over 1 <= k <= n <= n_max via the closed forms; cross_check
/// mode additionally compares B(n) against full enumeration for
/// n <= enum_budget. probe_beyond additionally evaluates k in (n, n_max]
/// without asserting.
VerificationReport verify_theorem1(const CampaignConfig& cfg);

/// Same campaign over a caller-supplied table (must cover 2*n_max - 1).
/// Exists so tests can feed a deliberately wrong table and watch the
/// failure path fire.
VerificationReport verify_theorem1(const CampaignConfig& cfg,
                                   const CountTable& table);

/// B(n) = Q_1(n) for n <= n_max (Stanley's classical statistic).
VerificationReport verify_stanley_classic(const CampaignConfig& cfg);

/// Quotient/remainder branch pattern with threshold s = k - r_0 for all
/// 1 <= k <= n <= n_max; every entry re-derived and compared independently.
VerificationReport verify_lemma_schedule(const CampaignConfig& cfg);

/// Q_k(m) formula vs enumeration for all 1 <= k <= m <= n_max.
VerificationReport verify_occurrence_formula(const CampaignConfig& cfg);

/// Same campaign over a caller-supplied table (must cover n_max).
VerificationReport verify_occurrence_formula(const CampaignConfig& cfg,
                                             const CountTable& table);

/// Campaigns for the three stack-rewriting lemmas (pass the matching
/// Identity::lemma21/lemma22/lemma23). Each runs
///   (a) count-level transport equalities via the closed form, with both
///       sides cross-checked against enumeration within enum_budget,
///   (b) set-level bijection transport between fixed-weight slices for
///       domain weights up to set_budget (image weight capped by
///       enum_budget), and
///   (c) round-trip identity and exponent-delta checks on every slice member.
VerificationReport verify_tiling_lemmas(Identity lemma,
                                        const CampaignConfig& cfg);

/// The displayed identities of the window-sum proof: the summed r=1
/// specializations, the occurrence-count split, the blockwise tail
/// regrouping (with its remainder), and the assembled chain
/// Q_1(n) = sum_i Q_k(n+i), for all 1 <= k <= n <= n_max. The number-of-1s
/// anchor is always computed by enumeration, so n_max must fit enum_budget.
VerificationReport verify_proof_chain(const CampaignConfig& cfg);

/// Dispatches on identity; lemma21/22/23 route to verify_tiling_lemmas.
VerificationReport run_campaign(Identity identity, const CampaignConfig& cfg);

}  // namespace stanley
