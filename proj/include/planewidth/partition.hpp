#pragma once

#include <planewidth/coloring.hpp>
#include <planewidth/geometry.hpp>
#include <planewidth/graph.hpp>
#include <planewidth/realization.hpp>

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace planewidth
{
    // Partitions of a unit-diameter set into 3, 4 or 7 small pieces.
    enum class Scheme : unsigned
    {
        three = 3,
        four = 4,
        seven = 7
    };

    [[nodiscard]] auto parse_scheme(unsigned k) -> Scheme;

    // Smallness of each piece at unit diameter: sqrt3/2, sqrt2/2, 1/2.
    [[nodiscard]] auto scheme_delta(Scheme s) -> double;

    // Largest width for which the pieces of a scaled arrangement are 1-small: 2/sqrt3, sqrt2, 2.
    [[nodiscard]] auto scheme_threshold(Scheme s) -> double;

    enum class RegionKind
    {
        hex_sector,
        square_quadrant,
        hex_core,
        hex_rim,
        tiling_cell
    };

    // Three 120-degree sectors of the enclosing hexagon, cut along the rays to the midpoints
    // of alternate sides. Sector i includes its starting ray and excludes the next; the center
    // belongs to sector 0.
    class HexSectorPartition
    {
    public:
        explicit HexSectorPartition(Hexagon hull) :
            hull_(hull)
        {
        }

        [[nodiscard]] auto region_of(Point p) const -> unsigned;
        [[nodiscard]] static auto kind(unsigned) -> RegionKind { return RegionKind::hex_sector; }
        [[nodiscard]] auto hull() const -> const Hexagon & { return hull_; }

    private:
        Hexagon hull_;
    };

    // Quadrants NW=0, NE=1, SW=2, SE=3 of the unit square [0,1]^2 whose corner (0,0) holds no
    // point. Each quadrant drops two corners so it is strictly sqrt2/2-small; points in several
    // quadrants go to the lowest index.
    class SquareQuadrantPartition
    {
    public:
        // Finds the bounding square and its first point-free corner, and records the
        // reflection that moves that corner to the origin.
        explicit SquareQuadrantPartition(std::span<const Point> points);

        [[nodiscard]] auto region_of(Point p) const -> unsigned;
        [[nodiscard]] static auto kind(unsigned) -> RegionKind { return RegionKind::square_quadrant; }
        [[nodiscard]] auto to_unit_square(Point p) const -> Point;

    private:
        Point origin_;
        double side_ = 1;
        bool flip_x_ = false;
        bool flip_y_ = false;
    };

    // Inner hexagon R = hull(q_0..q_5) without its corners (region 0) and six rim pieces
    // R_i = hull(q_i, m_i, p_i, m_{i+1}, q_{i+1}) (region i+1). Rim pieces are half-open
    // angular sectors: R_i owns the ray through m_i and q_i, not the ray through m_{i+1}.
    class HexCoreRimPartition
    {
    public:
        explicit HexCoreRimPartition(Hexagon hull);

        [[nodiscard]] auto region_of(Point p) const -> unsigned;
        [[nodiscard]] static auto kind(unsigned label) -> RegionKind
        {
            return label == 0 ? RegionKind::hex_core : RegionKind::hex_rim;
        }
        [[nodiscard]] auto core_corner(int i) const -> Point { return core_[static_cast<std::size_t>(((i % 6) + 6) % 6)]; }

    private:
        Hexagon hull_;
        std::array<Point, 6> core_;
    };

    // Labels in 0..k-1 such that each label class is scheme_delta(s)-small (up to rounding).
    // Throws PreconditionError when the diameter exceeds 1 + 1e-9.
    [[nodiscard]] auto partition_unit(std::span<const Point> points, Scheme s) -> std::vector<unsigned>;

    // Scales the arrangement to unit diameter, partitions it, and returns the induced
    // coloring, which is proper because every piece is 1-small at the original scale.
    // Throws PreconditionError when width(r) exceeds scheme_threshold(s).
    [[nodiscard]] auto extract_coloring(const Graph & g, const Realization & r, Scheme s) -> Coloring;

    // Tiling of the plane by hexagons of side d / (3t), aligned so that the corners of the
    // enclosing hexagon of an arrangement of width d sit at cell centers; the 3t^2 + 3t + 1
    // cells within t steps of the center cover it.
    class HexTiling
    {
    public:
        HexTiling(Hexagon hull, unsigned t);

        [[nodiscard]] auto steps() const -> unsigned { return t_; }
        [[nodiscard]] auto cell_side() const -> double { return side_; }
        [[nodiscard]] auto cell_count() const -> std::size_t { return index_.size(); }
        [[nodiscard]] auto cell_center(std::pair<int, int> axial) const -> Point;
        // Axial coordinates of the nearest cell center.
        [[nodiscard]] auto cell_of(Point p) const -> std::pair<int, int>;
        // Index of the designated cell holding p, or nullopt when p is outside all of them.
        [[nodiscard]] auto region_of(Point p) const -> std::optional<unsigned>;
        [[nodiscard]] static auto kind(unsigned) -> RegionKind { return RegionKind::tiling_cell; }

    private:
        Hexagon hull_;
        unsigned t_;
        double side_;
        Point e1_, e2_;
        std::map<std::pair<int, int>, unsigned> index_;
    };

    // t = floor(2d/3) + 1 for width d.
    [[nodiscard]] auto tiling_steps(double width) -> unsigned;
    [[nodiscard]] auto tiling_color_bound(unsigned t) -> unsigned;

    // Proper coloring with at most 3t^2 + 3t + 1 colors from a Euclidean realization of
    // width d > 0. Throws ConsistencyError if a point falls outside the designated cells.
    [[nodiscard]] auto tiling_coloring(const Graph & g, const Realization & r) -> Coloring;
}
