#pragma once

#include <optional>
#include <vector>

#include "zigzag/finite_field.hpp"

namespace zigzag {

/// Dense matrix of field elements, row major.
using Matrix = std::vector<std::vector<int>>;

struct SolveResult {
    bool solved = false;
    std::vector<int> solution;  // valid when solved
    int rank = 0;
};

/// Gaussian elimination over GF(q). A may be square or overdetermined;
/// returns the unique solution when the column rank is full and the
/// system is consistent, otherwise solved = false.
SolveResult solve_linear(const Field& field, Matrix a, std::vector<int> b);

/// Rank of A over GF(q); nonsingularity test for square systems.
int matrix_rank(const Field& field, Matrix a);

} // namespace zigzag
