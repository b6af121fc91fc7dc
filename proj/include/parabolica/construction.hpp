#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "parabolica/patchwork.hpp"
#include "parabolica/solver.hpp"

namespace parabolica {

// The three tile shapes: a corner triangle on the bottom row and the two
// halves of the slanted parallelogram columns.
struct TileSpec {
    enum class Kind { P1, P2, P3 };
    Kind kind;
    int a = 0;  // i for P1, k for P2/P3
    int b = 0;  // 2 for P1, l for P2/P3
    std::array<Exp2, 3> triangle;
    SparsePoly polynomial;

    int expected_count() const { return kind == Kind::P3 ? 3 : 1; }
    std::string name() const;
};

std::string to_string(TileSpec::Kind k);

// x^2 y^2 times the complete all-ones polynomial of degree d - 4; support is
// exactly the lattice of the construction triangle.
SparsePoly construction_polynomial(int d);

// Unimodular triangulation of the triangle {(2,2), (d-2,2), (2,d-2)}:
// d - 4 bottom tiles of kind P1 and (d-5)(d-4)/2 parallelogram pairs of
// kinds P2/P3. Index ranges are derived from exact area coverage.
std::vector<TileSpec> build_triangulation(int d);

// Integer lifting inducing exactly that triangulation, found by exact LP
// feasibility on the strict-bending system and verified by reconstruction.
Lifting build_lifting(int d, const std::vector<TileSpec>& tiles);

long theorem_bound(int d);  // (d-4)(2d-9)

int tile_count(const TileSpec& tile, const BoxQ& box, const SolveConfig& cfg);

struct TileCountEntry {
    TileSpec tile;
    int count = -1;
    int expected = 0;
    bool resolved = false;
};

struct ChartCount {
    std::size_t face_id = 0;
    Int alpha, beta;
    int count = 0;
    bool resolved = false;
    std::vector<BoxQ> mapped_enclosures;  // enclosures in glued coordinates
};

struct GlueReport {
    int d = 0;
    Rat t;
    std::vector<TileCountEntry> per_tile;
    long sum_tiles = 0;
    std::vector<ChartCount> charts;
    long glued_count = 0;
    bool glue_ok = false;  // all charts resolved, mapped enclosures pairwise disjoint
    long bound = 0;
    bool inequality_holds = false;
    bool monotone = false;  // sum_tiles <= glued_count
    std::string note;
};

struct ReproduceOptions {
    BoxQ box{{Rat(-10), Rat(10)}, {Rat(-10), Rat(10)}};
    SolveConfig solve;
    int jobs = 0;          // 0 = hardware concurrency
    int d_guard = 12;      // larger d needs an explicit override
    bool allow_large = false;
};

// Default sweep t = +/- 2^-k, k = 4..16.
std::vector<Rat> default_t_sweep();

GlueReport reproduce_one(int d, const Rat& t, const ReproduceOptions& opt);
std::vector<GlueReport> reproduce_theorem(int d, const std::vector<Rat>& ts,
                                          const ReproduceOptions& opt);

// Runs fn(0..n-1) across up to `jobs` threads; tasks must be independent.
void parallel_for(int n, int jobs, const std::function<void(int)>& fn);

}  // namespace parabolica
