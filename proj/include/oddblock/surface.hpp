#ifndef ODDBLOCK_SURFACE_HPP
#define ODDBLOCK_SURFACE_HPP

#include <map>
#include <optional>
#include <vector>

#include "oddblock/oddblock.hpp"

namespace oddblock {

// Alignment function on interior partition points (+1 align right, -1 left).
struct Alignment {
    std::vector<std::optional<int>> values;  // index i in 1..n-1 (0 unused)
    std::vector<bool> seed_defined;

    int at(int i) const { return *values[i]; }
    bool defined(int i) const { return values[i].has_value(); }
};

// Horizontal-line seed rule: only interior attainment of the height counts.
// Throws BothSides when the construction fails outright.
Alignment alignment_seed(const PLMap& p);

// Extends by condition (a) at critical points and (b)-propagation elsewhere.
// The seed must agree with the forced values.
Alignment extend_alignment(const Alignment& seed, const PLMap& p);

// Exact formal sums of the widths v_1..v_n with integer coefficients.
struct FormalSum {
    std::vector<Int> c;  // c[j] multiplies v_{j+1}

    explicit FormalSum(int n = 0) : c(n, Int(0)) {}
    bool is_zero() const;
    FormalSum operator+(const FormalSum& o) const;
    FormalSum operator-(const FormalSum& o) const;
    bool operator==(const FormalSum& o) const { return c == o.c; }
    RationalInterval eval(const std::vector<RationalInterval>& v) const;
    static FormalSum unit(int n, int j);  // v_j (1-based)
};

struct ConePoint {
    int angle_multiple;  // cone angle = angle_multiple * pi
    int count;
};

struct PolygonData {
    int n = 0;
    std::vector<FormalSum> left;    // L_i per row, L_1 = 0
    std::vector<FormalSum> width;   // W_i per row
    std::vector<FormalSum> cpos;    // x-offset of C_i
    std::vector<std::pair<int, int>> cspan;  // rows [a_i, b_i] covered by C_i
    std::vector<int> row_order;              // column order within each row, flattened? see cpp
    std::vector<ConePoint> census;
    int genus = 0;
};

// Stacks the R rectangles by the alignment rule, solves for the column
// placements, and verifies the two decompositions tile the same region on
// interval enclosures.  Throws TilingMismatch on certified disagreement.
PolygonData assemble_polygon(const PLMap& p, const Alignment& a, const PerronData& pd);

struct SurfaceInvariants {
    int genus = 0;
    int track_b1 = 0;
    int track_vertices = 0;
    int track_edges = 0;
    std::vector<ConePoint> census;
};

// Census and genus under the paper's hypotheses; odd n is rejected.
SurfaceInvariants surface_invariants(const PLMap& p);

} // namespace oddblock

#endif
