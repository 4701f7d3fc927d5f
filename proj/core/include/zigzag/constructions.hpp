#pragma once

#include <cstdint>
#include <optional>

#include "zigzag/code_model.hpp"
#include "zigzag/rational.hpp"

namespace zigzag {

/// GF(q) for a prime power q, factoring q as p^d.
Field field_of_order(int q, std::optional<int> alpha_hint = std::nullopt);

/// (m+3, m+1) code over GF(3) with two parities and rebuilding ratio 1/2:
/// columns are the zero vector (modified row sets) and the standard basis,
/// zigzag coefficients 2^{i.u_j} with u_j the running basis sum.
CodeSpec build_optimal_r2(int m);

/// s-duplication of a two-parity code over GF(q). For a base from
/// build_optimal_r2 the coefficients keep the code MDS (s <= q-1 for odd
/// q, s <= q-2 for even q); other bases get per-copy scaled coefficients
/// and are left unverified.
CodeSpec build_duplication(const CodeSpec& base, int s, int q);

/// Closed-form ratio of the s-duplication of a base code with ratio
/// base_ratio and base_k columns.
Rational duplication_ratio(const Rational& base_ratio, int s, int base_k);

/// Weight-3 code over GF(9) or GF(16): k = (m/3)^3 columns, one 1 per
/// third of the coordinates, zigzag coefficient a^(row . M_v).
CodeSpec build_weight3(int m, int q);

/// (m+1+r, m+1) code with ratio 1/r. r = 2 delegates to build_optimal_r2;
/// r = 3 uses the power-of-alpha coefficients and needs q >= 2(m+1).
CodeSpec build_optimal_general(int m, int r, int q,
                               std::optional<int> alpha_hint = std::nullopt);

/// Skeleton with zigzag sets installed and placeholder all-ones
/// coefficients (not certified MDS). A zero vector is allowed only as
/// the first entry and receives the modified row sets.
CodeSpec build_from_vectors(const std::vector<RVector>& vectors, int r, int m,
                            int q = 3);

/// Draws nonzero zigzag coefficients uniformly (deterministic for a
/// fixed seed) until verify_mds passes, optionally also requiring
/// multi-erasure plan solvability for every erasure set of size <= r.
CodeSpec assign_coefficients_random(const CodeSpec& skeleton, int q,
                                    std::uint64_t seed, int max_tries,
                                    bool check_multi_erasure = false);

} // namespace zigzag
