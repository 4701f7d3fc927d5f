#pragma once

#include <set>
#include <string>
#include <vector>

#include "zigzag/finite_field.hpp"
#include "zigzag/rmod.hpp"

namespace zigzag {

enum class CodeKind { Generic, OptimalR2, Duplication, Weight3, OptimalGeneral };

/// One systematic column: its generating vector, rebuild row sets per
/// parity, and the parity coefficients per (parity, source row).
struct ColumnDef {
    ColumnDef(RVector v, int copy = 0) : vector(std::move(v)), copy_index(copy) {}

    RVector vector;
    int copy_index = 0;
    /// Zero-vector column of the optimal families carries the modified
    /// row sets {x : x.(1,...,1) = l} instead of hyperplanes of vector.
    bool modified_sets = false;
    std::vector<std::vector<int>> rebuild_rows;  // [l] -> sorted row set
    std::vector<std::vector<int>> coeff;         // [l][source row] -> field element
};

struct CodeSpec {
    Field field;
    int r = 0;  // parity count
    int m = 0;  // vector length
    int p = 0;  // rows, always r^m
    std::string name;
    CodeKind kind = CodeKind::Generic;
    int dup_copies = 1;  // s for duplication codes
    int base_k = 0;      // base column count for duplication codes
    /// False for skeletons whose coefficients have not been certified.
    bool coefficients_verified = false;
    std::vector<ColumnDef> columns;

    int k() const { return static_cast<int>(columns.size()); }
    int n() const { return k() + r; }
};

/// Information array with its parities and the current erasure state.
/// Column indices: [0, k-1] systematic, [k, k+r-1] parity.
struct CodeArray {
    std::vector<std::vector<int>> info;    // p x k
    std::vector<std::vector<int>> parity;  // p x r
    std::set<int> erased;
};

/// The zigzag permutation f_j^l: row i of column j feeds zigzag set f_j^l(i).
Permutation zigzag_of(const CodeSpec& spec, int l, int j);

/// Row that feeds zigzag index t of parity l through column j.
int source_row(const CodeSpec& spec, int l, int j, int t);

/// p x r parity matrix for the given information array.
std::vector<std::vector<int>> encode(const CodeSpec& spec, const std::vector<std::vector<int>>& info);

CodeArray make_array(const CodeSpec& spec, std::vector<std::vector<int>> info);

/// Installs rebuild_rows for a column from its vector (hyperplane sets,
/// or the modified all-ones sets when modified_sets is set).
void install_rebuild_sets(const CodeSpec& spec, ColumnDef& col);

/// Checks the CodeSpec invariants: partition property of the rebuild
/// sets, total nonzero coefficient table, all-ones parity 0, gcd
/// condition on the vectors. Throws InvalidArgument on violation.
void validate(const CodeSpec& spec);

} // namespace zigzag
