#ifndef ODDBLOCK_ODDBLOCK_HPP
#define ODDBLOCK_ODDBLOCK_HPP

#include <optional>
#include <vector>

#include "oddblock/interval.hpp"
#include "oddblock/matrix.hpp"

namespace oddblock {

enum class Direction { Increasing, Decreasing };

// Validated odd-block matrix with the recovered endpoint map phi and the
// net direction of each piece.
struct OddBlockMatrix {
    int n = 0;
    IntegerMatrix M;
    std::vector<int> phi;               // size n+1, phi[j] in {0..n}
    std::vector<Direction> directions;  // size n, piece j -> directions[j-1]
    bool binary = false;
    bool singular_allowed = false;      // set for Appendix refinements
};

struct ValidateOptions {
    bool allow_singular = false;  // Appendix refinements are inevitably singular
};

// Checks conditions (i)/(ii), recovers phi by left-to-right propagation with
// backtracking, then non-singularity and aperiodicity (Wielandt bound).
OddBlockMatrix validate(const IntegerMatrix& M, const ValidateOptions& opts = {});

// Piecewise-linear model of a binary odd-block matrix.
struct PLMap {
    int n = 0;
    std::vector<int> phi;
    std::vector<Direction> directions;
    std::vector<std::pair<int, int>> image_block;  // per column j-1: rows [a_j, b_j], 1-based
    IntegerMatrix lap_counts;

    bool increasing(int piece) const { return directions[piece - 1] == Direction::Increasing; }
    // x_i is critical iff the direction changes across it (1 <= i <= n-1)
    bool critical(int i) const { return directions[i - 1] != directions[i]; }
};

PLMap build_pl_model(const OddBlockMatrix& A);

// Certified Perron data: lambda enclosure, L1-normalized left eigenvector
// enclosures, the induced partition of [0,1], and interval-certified
// distinctness of consecutive entries.
struct PerronData {
    RationalInterval lambda;
    std::vector<RationalInterval> v;          // size n
    std::vector<RationalInterval> partition;  // size n+1, x_0 = 0, x_n ~ 1
    bool consecutive_distinct = false;
};

PerronData perron_data(const OddBlockMatrix& A, const Rat& width);

// Basis of ker(M - I): the eigenbasis feeding the t variables downstream.
std::vector<std::vector<Int>> fixed_eigenspace(const OddBlockMatrix& A);

// All solutions of condition (ii) for a nonnegative matrix whose odd entries
// form consecutive column blocks (exposed for diagnostics and tests).
std::vector<std::vector<int>> phi_candidates(const IntegerMatrix& M);

// Smallest k <= (n-1)^2 + 1 wielandt certificate handling; returns 0 if no
// power up to the bound is positive.
bool is_aperiodic(const IntegerMatrix& M);

} // namespace oddblock

#endif
