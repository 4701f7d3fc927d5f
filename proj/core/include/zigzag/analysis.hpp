#pragma once

#include <optional>
#include <string>

#include "zigzag/code_model.hpp"
#include "zigzag/rational.hpp"

namespace zigzag {

struct MdsReport {
    bool mds = true;
    std::vector<int> witness;  // first failing erasure set (column indices)
    std::string witness_str() const;
};

/// Exhaustive certification: every erasure set of up to r columns is
/// decodable. Runs the real decode path on a deterministic array, so a
/// pass certifies nonsingularity of every orbit system.
MdsReport verify_mds(const CodeSpec& spec);

/// r=2 coefficient-condition fast path: for distinct column vectors the
/// paired-row product condition, for duplicated vectors per-row
/// coefficient inequality.
MdsReport verify_mds_pairwise(const CodeSpec& spec);

/// One member of a permutation family: the r per-parity permutations
/// and the r rebuild row sets (an equal partition of the rows).
struct PermFamilyMember {
    std::vector<Permutation> f;
    std::vector<std::vector<int>> X;
};

/// The permutation family of a code's columns.
std::vector<PermFamilyMember> family_of(const CodeSpec& spec);

/// Delta condition on every ordered pair: the images of the non-row
/// sets under f_j^{-l} f_i^l meet the complement of X_i^0 fully for
/// i = j and not at all otherwise.
bool check_orthogonal(const std::vector<PermFamilyMember>& family, int r);

/// Largest orthogonal family over [0, r^m - 1] by exhaustive member
/// enumeration; limited to p <= 4.
int max_orthogonal_family_size(int r, int m);

/// Exact single-erasure rebuilding ratio from the column vectors alone
/// (hyperplane-shift intersection counts), independent of the planner.
Rational ratio_formula(const CodeSpec& spec);

/// Directed-edge density of the vector set in the binary difference
/// graph: edge (w1, w2) iff |support(w2) \ support(w1)| is odd.
Rational density(const std::vector<RVector>& t);

/// Property e: for every e-subset A, anchor v outside A, and u in A,
/// u - v is outside span{w - v : w outside A}.
bool check_property_e(const std::vector<RVector>& t, int e);

/// Smallest e in [1, max_e] with property e, if any.
std::optional<int> min_optimal_e(const std::vector<RVector>& t, int max_e);

/// The size bound |T| <= m + e.
bool column_bound_check(const std::vector<RVector>& t, int e);

} // namespace zigzag
