#pragma once

#include "zigzag/code_model.hpp"

namespace zigzag {

/// Per-parity syndromes; all zero iff the array is a codeword.
struct Syndrome {
    std::vector<std::vector<int>> s;  // [l][zigzag index], r x p

    bool clean() const;
    bool parity_clean(int l) const;
};

Syndrome compute_syndrome(const CodeSpec& spec, const CodeArray& array);

/// Recovers every column listed in array.erased (systematic and
/// parity), up to r in total, and clears the erasure set. Systematic
/// unknowns are grouped into row orbits under the difference vectors of
/// the erased columns and solved per orbit; erased parities are then
/// re-encoded.
void decode_erasures(const CodeSpec& spec, CodeArray& array);

enum class ErrorDecodeStatus { Clean, Corrected, MultipleErrors, Ambiguous };

struct ErrorDecodeResult {
    ErrorDecodeStatus status = ErrorDecodeStatus::Clean;
    int column = -1;  // corrected column, in [0, k+r); -1 when none
};

/// Single-column error correction for the two-parity involution family.
/// Corrects the array in place when exactly one column matches the
/// syndrome pattern; duplicated permutations can make the match
/// non-unique, reported as Ambiguous with no modification.
ErrorDecodeResult decode_error(const CodeSpec& spec, CodeArray& array);

} // namespace zigzag
