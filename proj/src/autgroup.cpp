#include "eclrc/autgroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace eclrc {

StabAut StabAut::identity(const Field& field) { return {field.one(), field.zero(), field.zero(), field.zero()}; }

bool preserves_equation(const Curve& curve, const StabAut& al) {
    const Field& f = curve.field();
    if (al.u.is_zero()) return false;
    auto k = [&](std::int64_t n) { return f.from_int(n); };
    const Element &u = al.u, &r = al.r, &s = al.s, &t = al.t;
    const Element &a1 = curve.a1(), &a2 = curve.a2(), &a3 = curve.a3(), &a4 = curve.a4(), &a6 = curve.a6();
    const Element u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
    return u * a1 == a1 + k(2) * s && u2 * a2 == a2 - s * a1 + k(3) * r - s * s &&
           u3 * a3 == a3 + r * a1 + k(2) * t &&
           u4 * a4 == a4 - s * a3 + k(2) * r * a2 - (t + r * s) * a1 + k(3) * r * r - k(2) * s * t &&
           u6 * a6 == a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1;
}

Point apply(const Curve& curve, const StabAut& al, const Point& p) {
    if (!curve.contains(p)) fail(ErrorKind::PointNotOnCurve, "point is not on the curve");
    if (p.infinity) return p;
    const Element u2 = al.u * al.u;
    return Point::affine(u2 * p.x + al.r, u2 * al.u * p.y + u2 * al.s * p.x + al.t);
}

StabAut compose(const StabAut& a, const StabAut& b) {
    const Element a_u2 = a.u * a.u;
    return {a.u * b.u, a_u2 * b.r + a.r, a.u * b.s + a.s, a_u2 * a.u * b.t + a_u2 * a.s * b.r + a.t};
}

StabAut inverse(const StabAut& a) {
    const Element ui = a.u.inv();
    const Element ui2 = ui * ui;
    return {ui, -(a.r * ui2), -(a.s * ui), (a.s * a.r - a.t) * ui2 * ui};
}

std::vector<StabAut> enumerate_stabilizer(const Curve& curve, std::uint64_t max_q) {
    const Field& f = curve.field();
    if (f.q() > max_q)
        fail(ErrorKind::FieldTooLargeForScan,
             "stabilizer scan over GF(" + std::to_string(f.q()) + ") exceeds limit " + std::to_string(max_q));
    const Element &a1 = curve.a1(), &a2 = curve.a2(), &a3 = curve.a3(), &a4 = curve.a4();
    const bool char2 = f.p() == 2, char3 = f.p() == 3;
    const auto all = enumerate(f);
    const Element two = f.from_int(2), three = f.from_int(3);
    std::vector<StabAut> out;

    // The coefficient equations are linear in s (from a1), r (from a2) and t
    // (from a3, or from a4 in characteristic 2 with a1 != 0) whenever the
    // multiplier is invertible; only the remaining unknowns are scanned.
    for (std::uint32_t ui = 1; ui < f.q(); ++ui) {
        const Element u(f, ui);
        const Element u2 = u * u, u3 = u2 * u, u4 = u2 * u2;
        if (char2 && u * a1 != a1) continue;
        if (char2 && a1.is_zero() && u3 * a3 != a3) continue;
        std::vector<Element> s_cands = char2 ? all : std::vector<Element>{(u * a1 - a1) / two};
        for (const auto& s : s_cands) {
            std::vector<Element> r_cands;
            if (char3) {
                if (u2 * a2 != a2 - s * a1 - s * s) continue;
                r_cands = all;
            } else {
                r_cands = {(u2 * a2 - a2 + s * a1 + s * s) / three};
            }
            for (const auto& r : r_cands) {
                std::vector<Element> t_cands;
                if (!char2) {
                    t_cands = {(u3 * a3 - a3 - r * a1) / two};
                } else if (!a1.is_zero()) {
                    if (u3 * a3 != a3 + r * a1) continue;
                    t_cands = {(u4 * a4 + a4 + s * a3 + r * s * a1 + r * r) / a1};
                } else {
                    if (u4 * a4 != a4 + s * a3 + r * r) continue;
                    t_cands = all;
                }
                for (const auto& t : t_cands) {
                    StabAut al{u, r, s, t};
                    if (preserves_equation(curve, al)) out.push_back(al);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

StabAut involution(const Curve& curve) {
    const Field& f = curve.field();
    return {-f.one(), f.zero(), -curve.a1(), -curve.a3()};
}

CurveAut CurveAut::identity(const Field& field) { return {Point::at_infinity(), StabAut::identity(field)}; }

CurveAut CurveAut::translation(const Field& field, const Point& q) { return {q, StabAut::identity(field)}; }

CurveAut CurveAut::from_stab(const StabAut& alpha) { return {Point::at_infinity(), alpha}; }

Point apply_to_point(const Curve& curve, const CurveAut& sigma, const Point& p) {
    return curve.add(apply(curve, sigma.stab, p), sigma.translate);
}

CurveAut compose(const Curve& curve, const CurveAut& a, const CurveAut& b) {
    return {curve.add(a.translate, apply(curve, a.stab, b.translate)), compose(a.stab, b.stab)};
}

CurveAut inverse(const Curve& curve, const CurveAut& a) {
    const StabAut inv = inverse(a.stab);
    return {curve.neg(apply(curve, inv, a.translate)), inv};
}

bool Subgroup::contains(const CurveAut& g) const { return std::binary_search(elements.begin(), elements.end(), g); }

Subgroup closure(const Curve& curve, const std::vector<CurveAut>& generators) {
    std::set<CurveAut> seen;
    std::deque<CurveAut> queue;
    const CurveAut id = CurveAut::identity(curve.field());
    seen.insert(id);
    queue.push_back(id);
    while (!queue.empty()) {
        const CurveAut cur = queue.front();
        queue.pop_front();
        for (const auto& g : generators) {
            CurveAut next = compose(curve, cur, g);
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    Subgroup out;
    out.elements.assign(seen.begin(), seen.end());
    out.generators = generators;
    return out;
}

Subgroup full_group(const Curve& curve, std::uint64_t max_q) {
    const auto stabs = enumerate_stabilizer(curve, max_q);
    Subgroup out;
    for (const auto& p : curve.points())
        for (const auto& al : stabs) out.elements.push_back({p, al});
    std::sort(out.elements.begin(), out.elements.end());
    for (const auto& p : curve.points())
        if (!p.infinity) out.generators.push_back(CurveAut::translation(curve.field(), p));
    for (const auto& al : stabs)
        if (!al.is_identity()) out.generators.push_back(CurveAut::from_stab(al));
    return out;
}

std::vector<Subgroup> enumerate_subgroups(const Curve& curve, const std::vector<CurveAut>& universe) {
    const Subgroup whole = closure(curve, universe);
    auto keys_of = [](const Subgroup& s) {
        std::vector<std::array<std::uint64_t, 5>> k;
        for (const auto& e : s.elements) k.push_back(e.key());
        return k;
    };
    std::set<std::vector<std::array<std::uint64_t, 5>>> seen;
    std::vector<Subgroup> found{closure(curve, {})};
    seen.insert(keys_of(found[0]));
    for (std::size_t i = 0; i < found.size(); ++i) {
        for (const auto& g : whole.elements) {
            if (found[i].contains(g)) continue;
            auto gens = found[i].generators;
            gens.push_back(g);
            Subgroup h = closure(curve, gens);
            if (seen.insert(keys_of(h)).second) found.push_back(std::move(h));
        }
    }
    std::sort(found.begin(), found.end(), [&](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return keys_of(a) < keys_of(b);
    });
    return found;
}

namespace {

void check_ta_shape(const Subgroup& t, const Subgroup& a) {
    for (const auto& e : t.elements)
        if (!e.is_translation()) fail(ErrorKind::InvalidArgument, "T must consist of translations");
    for (const auto& e : a.elements)
        if (!e.translate.infinity) fail(ErrorKind::InvalidArgument, "A must consist of stabilizer elements");
}

}  // namespace

bool ta_criterion(const Curve& curve, const Subgroup& t, const Subgroup& a) {
    check_ta_shape(t, a);
    std::set<std::uint64_t> tpoints;
    for (const auto& e : t.elements) tpoints.insert(e.translate.key());
    for (const auto& al : a.elements) {
        const StabAut inv = inverse(al.stab);
        for (const auto& e : t.elements)
            if (!tpoints.count(apply(curve, inv, e.translate).key())) return false;
    }
    return true;
}

Subgroup ta_subgroup(const Curve& curve, const Subgroup& t, const Subgroup& a) {
    if (!ta_criterion(curve, t, a))
        fail(ErrorKind::NotASubgroup, "A does not normalize T, so TA is not a subgroup");
    Subgroup out;
    for (const auto& te : t.elements)
        for (const auto& ae : a.elements) out.elements.push_back({te.translate, ae.stab});
    std::sort(out.elements.begin(), out.elements.end());
    out.generators = t.generators;
    out.generators.insert(out.generators.end(), a.generators.begin(), a.generators.end());
    return out;
}

std::vector<std::vector<Point>> orbits(const Curve& curve, const Subgroup& g) {
    std::vector<bool> done(curve.points().size(), false);
    std::vector<std::vector<Point>> out;
    for (std::size_t i = 0; i < curve.points().size(); ++i) {
        if (done[i]) continue;
        std::set<Point> orbit;
        for (const auto& e : g.elements) orbit.insert(apply_to_point(curve, e, curve.points()[i]));
        for (const auto& p : orbit) done[curve.index_of(p)] = true;
        out.emplace_back(orbit.begin(), orbit.end());
    }
    return out;
}

bool is_abelian(const Curve& curve, const Subgroup& g) {
    for (std::size_t i = 0; i < g.elements.size(); ++i)
        for (std::size_t j = i + 1; j < g.elements.size(); ++j)
            if (!(compose(curve, g.elements[i], g.elements[j]) == compose(curve, g.elements[j], g.elements[i])))
                return false;
    return true;
}

bool abelian_pair(const Curve& curve, const Point& q, const StabAut& alpha) { return apply(curve, alpha, q) == q; }

std::size_t max_abelian_scan(const Curve& curve, std::uint64_t max_q) {
    const auto stabs = enumerate_stabilizer(curve, max_q);
    std::size_t best = 0;
    for (const auto& q : curve.points())
        for (const auto& al : stabs) {
            if (al.is_identity() || !abelian_pair(curve, q, al)) continue;
            const Subgroup g =
                closure(curve, {CurveAut::translation(curve.field(), q), CurveAut::from_stab(al)});
            best = std::max(best, g.order());
        }
    return best;
}

Subgroup order9_abelian(const Curve& curve) {
    const Field& f = curve.field();
    const Point q = Point::affine(f.zero(), f.one());
    if (!curve.contains(q)) fail(ErrorKind::InvalidArgument, "(0,1) is not on the curve");
    for (const auto& w : roots_of_unity(f, 3)) {
        if (w.is_one()) continue;
        const StabAut al{w, f.zero(), f.zero(), f.zero()};
        if (!preserves_equation(curve, al)) break;
        return closure(curve, {CurveAut::translation(f, q), CurveAut::from_stab(al)});
    }
    fail(ErrorKind::InvalidArgument, "no admissible cube-root scaling on this curve");
}

Subgroup torsion_subgroup(const Curve& curve, std::uint64_t h) {
    if (h == 0) fail(ErrorKind::InvalidArgument, "torsion order must be positive");
    Subgroup out;
    for (const auto& p : curve.points())
        if (curve.scalar_mul(static_cast<std::int64_t>(h), p).infinity)
            out.elements.push_back(CurveAut::translation(curve.field(), p));
    std::sort(out.elements.begin(), out.elements.end());
    for (const auto& e : out.elements)
        if (!e.is_identity()) out.generators.push_back(e);
    return out;
}

}  // namespace eclrc
