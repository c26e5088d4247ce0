#include "eclrc/curve.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace eclrc {

std::int64_t isqrt(std::int64_t n) {
    if (n < 0) return -1;
    std::int64_t r = 0;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::uint64_t Point::key() const {
    if (infinity) return 0;
    return 1 + std::uint64_t{x.index()} * x.field()->q() + y.index();
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

Curve::Curve(FieldPtr field, const std::array<Element, 5>& coeffs) : field_(std::move(field)), a_(coeffs) {
    const Field& f = *field_;
    for (const auto& c : a_)
        if (c.field() != &f) fail(ErrorKind::FieldMismatch, "curve coefficient from another field");
    auto k = [&](std::int64_t n) { return f.from_int(n); };
    const Element &a1 = a_[0], &a2 = a_[1], &a3 = a_[2], &a4 = a_[3], &a6 = a_[4];
    const Element b2 = a1 * a1 + k(4) * a2;
    const Element b4 = k(2) * a4 + a1 * a3;
    const Element b6 = a3 * a3 + k(4) * a6;
    const Element b8 = a1 * a1 * a6 + k(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    const Element c4 = b2 * b2 - k(24) * b4;
    disc_ = -(b2 * b2 * b8) - k(8) * b4 * b4 * b4 - k(27) * b6 * b6 + k(9) * b2 * b4 * b6;
    if (disc_.is_zero()) fail(ErrorKind::SingularCurve, "discriminant vanishes");
    j_ = c4 * c4 * c4 / disc_;

    points_.push_back(Point::at_infinity());
    const std::uint32_t q = f.q();
    std::vector<std::uint32_t> sq(q);
    for (std::uint32_t y = 0; y < q; ++y) sq[y] = f.mul(y, y);
    for (std::uint32_t x = 0; x < q; ++x) {
        const Element ex(f, x);
        const std::uint32_t b = (a1 * ex + a3).index();
        const std::uint32_t rhs = (((ex + a2) * ex + a4) * ex + a6).index();
        for (std::uint32_t y = 0; y < q; ++y)
            if (f.add(sq[y], f.mul(b, y)) == rhs) points_.push_back(Point::affine(ex, Element(f, y)));
    }
    for (std::size_t i = 0; i < points_.size(); ++i) index_.emplace(points_[i].key(), i);
}

CurvePtr Curve::create(FieldPtr field, const std::array<Element, 5>& coeffs) {
    return CurvePtr(new Curve(std::move(field), coeffs));
}

CurvePtr Curve::create(FieldPtr field, const std::array<std::uint32_t, 5>& indices) {
    std::array<Element, 5> c;
    for (std::size_t i = 0; i < 5; ++i) c[i] = field->element(indices[i]);
    return create(std::move(field), c);
}

std::array<std::uint32_t, 5> Curve::coefficient_indices() const {
    return {a_[0].index(), a_[1].index(), a_[2].index(), a_[3].index(), a_[4].index()};
}

namespace {

// Indices below p are the prime-field integers; the parser reads both forms back.
std::string literal(const Element& c) {
    return (c.index() < c.field()->p() ? "" : "g") + std::to_string(c.index());
}

std::string coef_prefix(const Element& c) { return c.is_one() ? "" : literal(c) + "*"; }

}  // namespace

std::string Curve::equation() const {
    std::string lhs = "y^2";
    if (!a1().is_zero()) lhs += "+" + coef_prefix(a1()) + "xy";
    if (!a3().is_zero()) lhs += "+" + coef_prefix(a3()) + "y";
    std::string rhs = "x^3";
    if (!a2().is_zero()) rhs += "+" + coef_prefix(a2()) + "x^2";
    if (!a4().is_zero()) rhs += "+" + coef_prefix(a4()) + "x";
    if (!a6().is_zero()) rhs += "+" + literal(a6());
    return lhs + "=" + rhs;
}

CurvePtr Curve::parse(FieldPtr field, const std::string& equation) {
    const Field& f = *field;
    std::string s;
    for (char ch : equation)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    const auto eq = s.find('=');
    if (eq == std::string::npos || s.find('=', eq + 1) != std::string::npos)
        fail(ErrorKind::InvalidArgument, "curve equation needs exactly one '='");

    // Collected as coefficients of the form LHS - RHS = 0.
    Element y2 = f.zero(), xy = f.zero(), y1 = f.zero(), x3 = f.zero(), x2 = f.zero(), x1 = f.zero(),
            c0 = f.zero();
    auto absorb = [&](const std::string& side, bool negate) {
        std::size_t i = 0;
        if (side.empty()) fail(ErrorKind::InvalidArgument, "empty side in curve equation");
        while (i < side.size()) {
            bool minus = false;
            if (side[i] == '+' || side[i] == '-') {
                minus = side[i] == '-';
                ++i;
            }
            std::size_t j = i;
            while (j < side.size() && side[j] != '+' && side[j] != '-') ++j;
            std::string term = side.substr(i, j - i);
            i = j;
            if (term.empty()) fail(ErrorKind::InvalidArgument, "empty term in curve equation");
            Element coef = f.one();
            std::size_t k = 0;
            if (term[0] == 'g') {
                k = 1;
                while (k < term.size() && std::isdigit(static_cast<unsigned char>(term[k]))) ++k;
                if (k == 1) fail(ErrorKind::InvalidArgument, "bad element literal in '" + term + "'");
                coef = f.element(std::stoull(term.substr(1, k - 1)));
            } else if (std::isdigit(static_cast<unsigned char>(term[0]))) {
                while (k < term.size() && std::isdigit(static_cast<unsigned char>(term[k]))) ++k;
                coef = f.from_int(static_cast<std::int64_t>(std::stoull(term.substr(0, k)) % f.p()));
            }
            if (k < term.size() && term[k] == '*') ++k;
            std::string mono = term.substr(k);
            mono.erase(std::remove(mono.begin(), mono.end(), '^'), mono.end());
            if (minus != negate) coef = -coef;
            if (mono == "y2" || mono == "yy") y2 += coef;
            else if (mono == "xy" || mono == "yx") xy += coef;
            else if (mono == "y") y1 += coef;
            else if (mono == "x3" || mono == "xxx") x3 += coef;
            else if (mono == "x2" || mono == "xx") x2 += coef;
            else if (mono == "x") x1 += coef;
            else if (mono.empty()) c0 += coef;
            else fail(ErrorKind::InvalidArgument, "unsupported monomial '" + mono + "'");
        }
    };
    absorb(s.substr(0, eq), false);
    absorb(s.substr(eq + 1), true);
    if (!y2.is_one() || !(-x3).is_one())
        fail(ErrorKind::InvalidArgument, "curve equation must have monic y^2 and x^3 on opposite sides");
    return create(std::move(field), std::array<Element, 5>{xy, -x2, y1, -x1, -c0});
}

bool Curve::contains(const Point& p) const {
    if (p.infinity) return true;
    if (p.x.field() != field_.get() || p.y.field() != field_.get()) return false;
    const Element& x = p.x;
    const Element& y = p.y;
    return y * y + a1() * x * y + a3() * y == ((x + a2()) * x + a4()) * x + a6();
}

void Curve::require_on_curve(const Point& p) const {
    if (!contains(p)) fail(ErrorKind::PointNotOnCurve, "point is not on the curve");
}

std::size_t Curve::index_of(const Point& p) const {
    if (!p.infinity && p.x.field() != field_.get()) fail(ErrorKind::PointNotOnCurve, "point over another field");
    auto it = index_.find(p.key());
    if (it == index_.end() || !(points_[it->second] == p)) fail(ErrorKind::PointNotOnCurve, "point is not on the curve");
    return it->second;
}

Point Curve::neg(const Point& p) const {
    require_on_curve(p);
    if (p.infinity) return p;
    return Point::affine(p.x, -p.y - a1() * p.x - a3());
}

Point Curve::add(const Point& p, const Point& q) const {
    require_on_curve(p);
    require_on_curve(q);
    if (p.infinity) return q;
    if (q.infinity) return p;
    const Field& f = *field_;
    Element lambda, nu;
    if (p.x != q.x) {
        const Element dx = q.x - p.x;
        lambda = (q.y - p.y) / dx;
        nu = (p.y * q.x - q.y * p.x) / dx;
    } else {
        const Element denom = f.from_int(2) * p.y + a1() * p.x + a3();
        // Same x and either opposite points or a vertical tangent.
        if (p.y != q.y || denom.is_zero()) return Point::at_infinity();
        lambda = (f.from_int(3) * p.x * p.x + f.from_int(2) * a2() * p.x + a4() - a1() * p.y) / denom;
        nu = (-(p.x * p.x * p.x) + a4() * p.x + f.from_int(2) * a6() - a3() * p.y) / denom;
    }
    const Element x3 = lambda * lambda + a1() * lambda - a2() - p.x - q.x;
    const Element y3 = -(lambda + a1()) * x3 - nu - a3();
    return Point::affine(x3, y3);
}

Point Curve::scalar_mul(std::int64_t m, const Point& p) const {
    require_on_curve(p);
    Point base = m < 0 ? neg(p) : p;
    std::uint64_t e = m < 0 ? static_cast<std::uint64_t>(-m) : static_cast<std::uint64_t>(m);
    Point acc = Point::at_infinity();
    while (e) {
        if (e & 1) acc = add(acc, base);
        base = add(base, base);
        e >>= 1;
    }
    return acc;
}

std::uint64_t Curve::order_of_point(const Point& p) const {
    require_on_curve(p);
    std::uint64_t ord = order();
    for (auto l : prime_factors(ord))
        while (ord % l == 0 && scalar_mul(static_cast<std::int64_t>(ord / l), p).infinity) ord /= l;
    return ord;
}

GroupStructure Curve::group_structure() const {
    std::uint64_t n2 = 1;
    for (const auto& p : points_) n2 = std::max(n2, order_of_point(p));
    GroupStructure gs{order() / n2, n2};
    if (gs.n1 * gs.n2 != order() || gs.n2 % gs.n1 != 0 || !admissible_structure(field_->q(), gs.n1, gs.n2))
        fail(ErrorKind::StructureContradiction,
             "order census gives Z/" + std::to_string(gs.n1) + " x Z/" + std::to_string(gs.n2) +
                 ", not an admissible point group");
    return gs;
}

bool Curve::is_maximal() const {
    const auto q = static_cast<std::int64_t>(field_->q());
    const std::int64_t s = isqrt(q);
    if (s * s != q) return false;
    return static_cast<std::int64_t>(order()) == q + 2 * s + 1;
}

Element Curve::partial_y(const Point& p) const {
    return field_->from_int(2) * p.y + a1() * p.x + a3();
}

Element Curve::partial_x(const Point& p) const {
    return a1() * p.y - field_->from_int(3) * p.x * p.x - field_->from_int(2) * a2() * p.x - a4();
}

namespace {

struct TraceCase {
    bool ok = false;
    enum Kind { Coprime, Supersingular2, Supersingular1, OddSpecial, Zero } kind = Coprime;
};

TraceCase classify_trace(std::uint64_t q, std::int64_t t) {
    std::uint32_t p = 0, a = 0;
    if (!prime_power(q, p, a)) fail(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
    const auto qi = static_cast<std::int64_t>(q);
    if (t * t > 4 * qi) return {};
    const std::int64_t at = t < 0 ? -t : t;
    if (at % p != 0) return {true, TraceCase::Coprime};
    const bool even = a % 2 == 0;
    const std::int64_t root = isqrt(qi);
    if (even && at == 2 * root) return {true, TraceCase::Supersingular2};
    if (even && p % 3 != 1 && at == root) return {true, TraceCase::Supersingular1};
    if (!even && (p == 2 || p == 3)) {
        std::int64_t v = 1;
        for (std::uint32_t i = 0; i < (a + 1) / 2; ++i) v *= p;
        if (at == v) return {true, TraceCase::OddSpecial};
    }
    if (t == 0 && (!even || p % 4 != 1)) return {true, TraceCase::Zero};
    return {};
}

}  // namespace

bool admissible_trace(std::uint64_t q, std::int64_t t) { return classify_trace(q, t).ok; }

bool admissible_structure(std::uint64_t q, std::uint64_t n1, std::uint64_t n2) {
    if (n1 == 0 || n2 == 0 || n2 % n1 != 0) return false;
    const std::int64_t t = static_cast<std::int64_t>(n1 * n2) - static_cast<std::int64_t>(q) - 1;
    const TraceCase c = classify_trace(q, t);
    if (!c.ok) return false;
    std::uint32_t p = 0, a = 0;
    prime_power(q, p, a);
    if (n1 % p == 0 || (q - 1) % n1 != 0) return false;
    switch (c.kind) {
    case TraceCase::Supersingular2: return n1 == n2;
    case TraceCase::Supersingular1:
    case TraceCase::OddSpecial: return n1 == 1;
    case TraceCase::Zero: return q % 4 == 3 ? (n1 == 1 || n1 == 2) : n1 == 1;
    case TraceCase::Coprime: return true;
    }
    return false;
}

CurvePtr find_maximal_curve(std::uint64_t q) {
    FieldPtr field = make_field_of_order(q);
    const Field& f = *field;
    const std::uint32_t p = f.p();
    auto try_curve = [&](const std::array<Element, 5>& c) -> CurvePtr {
        try {
            CurvePtr curve = Curve::create(field, c);
            if (curve->is_maximal()) return curve;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::SingularCurve) throw;
        }
        return nullptr;
    };
    const Element zero = f.zero(), one = f.one();
    if (isqrt(static_cast<std::int64_t>(q)) * isqrt(static_cast<std::int64_t>(q)) == static_cast<std::int64_t>(q)) {
        for (std::uint32_t i = 0; i < f.q(); ++i) {
            const Element s(f, i);
            CurvePtr found;
            if (p == 2) {
                found = try_curve({zero, zero, one, zero, s});
            } else if (p == 3) {
                // y^2 = x^3 + alpha x with -alpha a nonzero square.
                if (s.is_zero()) continue;
                bool square = false;
                for (std::uint32_t r = 1; r < f.q() && !square; ++r) square = f.mul(r, r) == f.neg(i);
                if (square) found = try_curve({zero, zero, zero, s, zero});
            } else if (p % 3 == 2) {
                if (!s.is_zero()) found = try_curve({zero, zero, zero, zero, s * s * s});
            } else if (p % 4 == 3) {
                if (!s.is_zero()) found = try_curve({zero, zero, zero, s * s, zero});
            }
            if (found) return found;
        }
    }
    fail(ErrorKind::NoMaximalCurveFound, "no maximal curve in the family scanned for q=" + std::to_string(q));
}

}  // namespace eclrc
