#ifndef ECLRC_AUTGROUP_HPP
#define ECLRC_AUTGROUP_HPP

// Automorphisms of the function field of a curve, acting on rational points.
//
// A stabilizer element (u, r, s, t) is the point map
//     (x, y) -> (u^2 x + r, u^3 y + u^2 s x + t),
// admissible when it carries the curve to itself. A general automorphism is
// a pair (Q, alpha) acting as P -> alpha(P) + Q; every automorphism has
// exactly one such form. Functions move by pullback: pullback(f, s) = f o s.

#include <array>
#include <cstdint>
#include <vector>

#include "eclrc/curve.hpp"

namespace eclrc {

struct StabAut {
    Element u, r, s, t;

    static StabAut identity(const Field& field);
    std::array<std::uint32_t, 4> key() const { return {u.index(), r.index(), s.index(), t.index()}; }
    bool is_identity() const { return u.is_one() && r.is_zero() && s.is_zero() && t.is_zero(); }
    friend bool operator==(const StabAut& a, const StabAut& b) { return a.key() == b.key(); }
    friend bool operator<(const StabAut& a, const StabAut& b) { return a.key() < b.key(); }
};

/// Coefficient-wise check that the substitution maps the curve to itself.
bool preserves_equation(const Curve& curve, const StabAut& alpha);
Point apply(const Curve& curve, const StabAut& alpha, const Point& p);
/// Point-map composition: (a o b)(P) = a(b(P)).
StabAut compose(const StabAut& a, const StabAut& b);
StabAut inverse(const StabAut& a);

/// Every admissible (u, r, s, t) over the base field, in canonical order.
/// Throws FieldTooLargeForScan when q > max_q.
std::vector<StabAut> enumerate_stabilizer(const Curve& curve, std::uint64_t max_q = 4096);

/// The order-2 stabilizer acting as P -> -P: (u, r, s, t) = (-1, 0, -a1, -a3).
StabAut involution(const Curve& curve);

struct CurveAut {
    Point translate;
    StabAut stab;

    static CurveAut identity(const Field& field);
    static CurveAut translation(const Field& field, const Point& q);
    static CurveAut from_stab(const StabAut& alpha);
    bool is_identity() const { return translate.infinity && stab.is_identity(); }
    bool is_translation() const { return stab.is_identity(); }
    std::array<std::uint64_t, 5> key() const {
        const auto k = stab.key();
        return {translate.key(), k[0], k[1], k[2], k[3]};
    }
    friend bool operator==(const CurveAut& a, const CurveAut& b) { return a.key() == b.key(); }
    friend bool operator<(const CurveAut& a, const CurveAut& b) { return a.key() < b.key(); }
};

Point apply_to_point(const Curve& curve, const CurveAut& sigma, const Point& p);
/// (Q1, a1)(Q2, a2) = (Q1 + a1(Q2), a1 a2), i.e. the composite point map.
CurveAut compose(const Curve& curve, const CurveAut& a, const CurveAut& b);
CurveAut inverse(const Curve& curve, const CurveAut& a);

struct Subgroup {
    std::vector<CurveAut> elements;  // sorted canonically
    std::vector<CurveAut> generators;

    std::size_t order() const { return elements.size(); }
    bool contains(const CurveAut& g) const;
};

Subgroup closure(const Curve& curve, const std::vector<CurveAut>& generators);
Subgroup full_group(const Curve& curve, std::uint64_t max_q = 4096);
/// All subgroups of the group generated by `universe`, ordered by
/// (order, element keys).
std::vector<Subgroup> enumerate_subgroups(const Curve& curve, const std::vector<CurveAut>& universe);

/// T of translations, A of stabilizer elements. Returns TA when every
/// alpha in A maps the translation points of T into themselves; otherwise
/// throws NotASubgroup.
Subgroup ta_subgroup(const Curve& curve, const Subgroup& t, const Subgroup& a);
/// The same criterion without throwing.
bool ta_criterion(const Curve& curve, const Subgroup& t, const Subgroup& a);

/// Orbits on the rational points, each sorted, listed by smallest member.
std::vector<std::vector<Point>> orbits(const Curve& curve, const Subgroup& g);

bool is_abelian(const Curve& curve, const Subgroup& g);
/// <tau_Q, alpha> is abelian exactly when alpha fixes Q.
bool abelian_pair(const Curve& curve, const Point& q, const StabAut& alpha);
/// Largest |<tau_Q, alpha>| over points Q and non-identity alpha fixing Q.
std::size_t max_abelian_scan(const Curve& curve, std::uint64_t max_q = 4096);

/// <tau_(0,1), (w, 0, 0, 0)> with w the smallest-index primitive cube root
/// of unity; abelian of order 9 on y^2 + y = x^3 over GF(4^odd). Throws
/// InvalidArgument when either generator does not apply to the curve.
Subgroup order9_abelian(const Curve& curve);

/// Translations by the points of order dividing h.
Subgroup torsion_subgroup(const Curve& curve, std::uint64_t h);

}  // namespace eclrc

#endif
