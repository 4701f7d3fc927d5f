#pragma once

#include <optional>

#include "zigzag/code_model.hpp"
#include "zigzag/rational.hpp"

namespace zigzag {

/// Access plan for rebuilding erased systematic columns. direct plans
/// (single erasure) recover each element from one parity equation;
/// solve plans assemble a linear system from the planned reads.
struct RebuildPlan {
    std::vector<int> erased;                     // sorted systematic indices
    std::vector<std::vector<int>> parity_reads;  // [l] sorted zigzag indices
    std::vector<std::vector<int>> column_reads;  // [j] sorted rows; empty for erased j
    bool direct = true;
    bool full_fallback = false;  // no feasible subspace choice; read everything

    // trace of the multi-erasure subspace selection
    std::vector<int> chosen_cols;           // the set I
    std::optional<RVector> u;               // hyperplane normal
    std::optional<RVector> coset_step;      // w
};

struct AccessReport {
    std::vector<long long> per_node;  // size n; reads per surviving node
    long long total_accessed = 0;
    long long surviving_total = 0;    // p * (n - e)
    Rational ratio() const { return Rational(total_accessed, surviving_total); }
};

/// Single systematic erasure: parity l contributes the zigzag images of
/// the column's rebuild rows; survivor reads follow by shifting.
/// Duplicated copies of the erased vector come out as full-column reads.
RebuildPlan plan_single(const CodeSpec& spec, int j);

/// 1 <= |erased| <= r erased systematic columns: anchor at the lowest
/// surviving column, grow the feasible survivor set greedily, pick the
/// first valid hyperplane normal u in integer order, and read the union
/// of e cosets of (u)^perp. Falls back to a full-access plan when no
/// normal exists (e.g. an erased duplicate of a surviving column).
RebuildPlan plan_multi(const CodeSpec& spec, const std::vector<int>& erased);

/// plan_single for one erasure, plan_multi otherwise.
RebuildPlan plan_rebuild(const CodeSpec& spec, const std::vector<int>& erased);

AccessReport access_report(const CodeSpec& spec, const RebuildPlan& plan);

/// Restores the erased columns of the array using only the planned
/// reads. Throws SingularSystem when the coefficients cannot resolve
/// the erasure pattern (possible for uncertified assignments).
void execute_rebuild(const CodeSpec& spec, const RebuildPlan& plan, CodeArray& array);

/// Exact average of the access ratio over all erasure sets of size e.
Rational measure_ratio(const CodeSpec& spec, int e = 1);

/// True when every erasure set of 2..r systematic columns yields a
/// nonsingular rebuild system.
bool all_multi_erasure_plans_solvable(const CodeSpec& spec);

} // namespace zigzag
