#ifndef ECLRC_CURVE_HPP
#define ECLRC_CURVE_HPP

// Curves y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over GF(q), with the
// full chord-tangent group law (valid in characteristics 2 and 3 as well).

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "eclrc/gf.hpp"

namespace eclrc {

struct Point {
    bool infinity = true;
    Element x, y;

    static Point at_infinity() { return Point{}; }
    static Point affine(const Element& x, const Element& y) { return Point{false, x, y}; }

    /// 0 for O, else 1 + x*q + y. Sorting by key gives the canonical order.
    std::uint64_t key() const;

    friend bool operator==(const Point& a, const Point& b) noexcept {
        if (a.infinity || b.infinity) return a.infinity == b.infinity;
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator<(const Point& a, const Point& b) { return a.key() < b.key(); }
};

struct GroupStructure {
    std::uint64_t n1 = 1;  // Z/n1 x Z/n2 with n1 | n2
    std::uint64_t n2 = 1;
};

class Curve;
using CurvePtr = std::shared_ptr<const Curve>;

class Curve {
public:
    /// Throws SingularCurve when the discriminant vanishes.
    static CurvePtr create(FieldPtr field, const std::array<Element, 5>& coeffs);
    /// Coefficients given as element indices in the order a1, a2, a3, a4, a6.
    static CurvePtr create(FieldPtr field, const std::array<std::uint32_t, 5>& indices);
    /// Parses forms such as "y2+y=x3", "y^2+xy=x^3+1", "y2=x3+2x+g3" where gK is
    /// the element of index K.
    static CurvePtr parse(FieldPtr field, const std::string& equation);

    const Field& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }
    const Element& a1() const noexcept { return a_[0]; }
    const Element& a2() const noexcept { return a_[1]; }
    const Element& a3() const noexcept { return a_[2]; }
    const Element& a4() const noexcept { return a_[3]; }
    const Element& a6() const noexcept { return a_[4]; }
    std::array<std::uint32_t, 5> coefficient_indices() const;
    std::string equation() const;

    /// O first, then ascending (x index, y index).
    const std::vector<Point>& points() const noexcept { return points_; }
    std::uint64_t order() const noexcept { return points_.size(); }
    /// Position of P in points(); throws PointNotOnCurve.
    std::size_t index_of(const Point& p) const;

    Element discriminant() const noexcept { return disc_; }
    Element j_invariant() const noexcept { return j_; }

    bool contains(const Point& p) const;
    Point neg(const Point& p) const;
    Point add(const Point& p, const Point& q) const;
    Point scalar_mul(std::int64_t m, const Point& p) const;
    std::uint64_t order_of_point(const Point& p) const;
    /// Invariant factors by order census, checked against the admissible
    /// structures for the computed N. Throws StructureContradiction.
    GroupStructure group_structure() const;
    bool is_maximal() const;

    /// dF/dy = 2y + a1 x + a3 at an affine point.
    Element partial_y(const Point& p) const;
    /// dF/dx = a1 y - 3x^2 - 2 a2 x - a4 at an affine point.
    Element partial_x(const Point& p) const;

private:
    Curve(FieldPtr field, const std::array<Element, 5>& coeffs);
    void require_on_curve(const Point& p) const;

    FieldPtr field_;
    std::array<Element, 5> a_;
    Element disc_, j_;
    std::vector<Point> points_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
};

/// Trace condition for the existence of a curve with q + 1 + t points.
bool admissible_trace(std::uint64_t q, std::int64_t t);

/// Whether Z/n1 x Z/n2 is a possible point group for a curve with N points.
bool admissible_structure(std::uint64_t q, std::uint64_t n1, std::uint64_t n2);

/// First maximal curve in the characteristic-specific family scan. Throws
/// NoMaximalCurveFound.
CurvePtr find_maximal_curve(std::uint64_t q);

std::int64_t isqrt(std::int64_t n);

}  // namespace eclrc

#endif
