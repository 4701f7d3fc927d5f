#include "zigzag/linsolve.hpp"

#include <algorithm>

namespace zigzag {

namespace {

// Forward elimination; returns pivot columns. b may be null.
std::vector<int> eliminate(const Field& f, Matrix& a, std::vector<int>* b) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pr = -1;
        for (int i = row; i < rows; ++i)
            if (a[i][col] != 0) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(a[pr], a[row]);
        if (b) std::swap((*b)[pr], (*b)[row]);
        const int iv = f.inv(a[row][col]);
        for (int j = col; j < cols; ++j) a[row][j] = f.mul(a[row][j], iv);
        if (b) (*b)[row] = f.mul((*b)[row], iv);
        for (int i = 0; i < rows; ++i) {
            if (i == row || a[i][col] == 0) continue;
            const int factor = a[i][col];
            for (int j = col; j < cols; ++j)
                a[i][j] = f.sub(a[i][j], f.mul(factor, a[row][j]));
            if (b) (*b)[i] = f.sub((*b)[i], f.mul(factor, (*b)[row]));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

SolveResult solve_linear(const Field& field, Matrix a, std::vector<int> b) {
    const int rows = static_cast<int>(a.size());
    if (rows != static_cast<int>(b.size()))
        throw InvalidArgument("matrix/vector size mismatch");
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    if (rows < cols) throw InvalidArgument("underdetermined system");

    SolveResult res;
    std::vector<int> pivots = eliminate(field, a, &b);
    res.rank = static_cast<int>(pivots.size());
    if (res.rank < cols) return res;  // rank deficient
    // consistency of the remaining zero rows
    for (int i = res.rank; i < rows; ++i)
        if (b[i] != 0) return res;
    res.solution.assign(cols, 0);
    for (int i = 0; i < res.rank; ++i) res.solution[pivots[i]] = b[i];
    res.solved = true;
    return res;
}

int matrix_rank(const Field& field, Matrix a) {
    return static_cast<int>(eliminate(field, a, nullptr).size());
}

} // namespace zigzag
