#include "support.hpp"

using namespace eclrc;
using testsupport::random_element;
using testsupport::y2y_x3;

namespace {

Poly random_poly(const Field& f, int deg) {
    std::vector<std::uint32_t> c;
    for (int i = 0; i <= deg; ++i) c.push_back(random_element(f).index());
    return Poly(f, c);
}

FuncElem random_func(const CurvePtr& c) {
    const Field& f = c->field();
    Poly d = random_poly(f, 2);
    if (d.is_zero()) d = Poly::constant(f.one());
    Poly u = random_poly(f, 3), v = random_poly(f, 2);
    if (u.is_zero() && v.is_zero()) u = Poly::constant(f.one());
    return FuncElem(c, u, v, d);
}

// Direct evaluation of (u + v y) / d at an affine point where d is nonzero.
std::optional<Element> direct_eval(const FuncElem& f, const Point& p) {
    const Element den = f.d().eval(p.x);
    if (den.is_zero()) return std::nullopt;
    return (f.u().eval(p.x) + f.v().eval(p.x) * p.y) / den;
}

std::vector<CurvePtr> fixtures() {
    return {y2y_x3(2), find_maximal_curve(16), Curve::parse(make_field(3, 2), "y2=x3+x"),
            Curve::parse(make_field(3, 1), "y2=x3+x2+1"), Curve::parse(make_field(2, 3), "y2+xy=x3+1"),
            Curve::parse(make_field(7, 1), "y2+xy+3y=x3+2x2+x+5")};
}

}  // namespace

TEST_SUITE("funcfield") {
    TEST_CASE("curve relation and field arithmetic") {
        for (const auto& c : fixtures()) {
            const Field& f = c->field();
            const FuncElem x = FuncElem::x(c), y = FuncElem::y(c);
            auto k = [&](const Element& e) { return FuncElem::constant(c, e); };
            const FuncElem lhs = y * y + k(c->a1()) * x * y + k(c->a3()) * y;
            const FuncElem rhs = x * x * x + k(c->a2()) * x * x + k(c->a4()) * x + k(c->a6());
            CHECK(lhs == rhs);
            for (int i = 0; i < 20; ++i) {
                const FuncElem a = random_func(c), b = random_func(c);
                REQUIRE((a * b) / b == a);
                REQUIRE((a * a.inv()) == k(f.one()));
                REQUIRE(a + b - b == a);
                REQUIRE(a * (b + a) == a * b + a * a);
                REQUIRE(a.pow(3) == a * a * a);
                REQUIRE(a.pow(-2) == (a * a).inv());
            }
        }
    }

    TEST_CASE("canonical form") {
        auto c = y2y_x3(2);
        const Field& f = c->field();
        const Poly xm = Poly::x(f) - Poly::constant(f.one());
        const FuncElem a(c, xm * Poly::x(f), xm, xm.scaled(f.element(2)));
        CHECK(a.d().is_monic());
        CHECK(gcd(gcd(a.u(), a.v()), a.d()).degree() == 0);
        CHECK(normalize(a) == a);
        const std::vector<Poly> ypows{Poly(f), Poly(f), Poly::constant(f.one())};
        CHECK(FuncElem::from_y_powers(c, ypows, Poly::constant(f.one())) == FuncElem::y(c) * FuncElem::y(c));
        CHECK_KIND(FuncElem(c, Poly::x(f), Poly(f), Poly(f)), ErrorKind::DivisionByZero);
        CHECK_KIND(FuncElem::constant(c, f.zero()).inv(), ErrorKind::DivisionByZero);
    }

    TEST_CASE("evaluation agrees with direct substitution") {
        for (const auto& c : fixtures())
            for (int i = 0; i < 20; ++i) {
                const FuncElem g = random_func(c);
                for (const auto& p : c->points()) {
                    if (p.infinity) continue;
                    const auto want = direct_eval(g, p);
                    if (!want) continue;
                    REQUIRE(evaluate(g, p) == want);
                }
            }
    }

    TEST_CASE("valuations of coordinates") {
        for (const auto& c : fixtures()) {
            const Point o = Point::at_infinity();
            CHECK(valuation(FuncElem::x(c), o) == -2);
            CHECK(valuation(FuncElem::y(c), o) == -3);
            CHECK(valuation(FuncElem::x(c) / FuncElem::y(c), o) == 1);
            for (const auto& p : c->points()) CHECK(valuation(uniformizer(c, p), p) == 1);
        }
    }

    TEST_CASE("divisors of lines") {
        for (const auto& c : fixtures()) {
            const FuncElem x = FuncElem::x(c), y = FuncElem::y(c);
            for (const auto& p : c->points()) {
                if (p.infinity) continue;
                // Vertical line: P + (-P) - 2O.
                Divisor want;
                want.add(p, 1);
                want.add(c->neg(p), 1);
                want.add(Point::at_infinity(), -2);
                CHECK(principal_divisor(x - FuncElem::constant(c, p.x)) == want);
                for (const auto& q : c->points()) {
                    if (q.infinity || q.x == p.x) continue;
                    const Element lam = (q.y - p.y) / (q.x - p.x);
                    const FuncElem line = y - FuncElem::constant(c, p.y) - (x - FuncElem::constant(c, p.x)).scaled(lam);
                    // Third intersection from the cubic's x-coefficients.
                    const Element x3 = lam * lam + c->a1() * lam - c->a2() - p.x - q.x;
                    const Point r = Point::affine(x3, p.y + lam * (x3 - p.x));
                    REQUIRE(c->contains(r));
                    Divisor d3;
                    d3.add(p, 1);
                    d3.add(q, 1);
                    d3.add(r, 1);
                    d3.add(Point::at_infinity(), -3);
                    REQUIRE(principal_divisor(line) == d3);
                    REQUIRE(abel_sum(*c, d3).infinity);
                }
            }
        }
    }

    TEST_CASE("local expansions") {
        auto c = find_maximal_curve(16);
        for (const auto& p : c->points()) {
            if (p.infinity) continue;
            const LocalSeries sx = local_expansion(FuncElem::x(c), p, 4);
            const LocalSeries sy = local_expansion(FuncElem::y(c), p, 4);
            CHECK(sx.order >= 0);
            if (uniformizer_kind(*c, p) == Uniformizer::XMinusX0) {
                REQUIRE(sx.coeffs.size() >= 2);
                CHECK(sx.coeffs[0] == p.x);
                CHECK(sx.coeffs[1].is_one());
                CHECK(sy.coeffs[0] == p.y);
            }
        }
        const LocalSeries so = local_expansion(FuncElem::y(c), Point::at_infinity(), 3);
        CHECK(so.order == -3);
        CHECK(so.uniformizer == Uniformizer::XOverY);
        CHECK_KIND(local_expansion(FuncElem::constant(c, c->field().zero()), Point::at_infinity(), 2),
                   ErrorKind::ZeroFunction);
    }

    TEST_CASE("series respect products") {
        auto c = Curve::parse(make_field(3, 2), "y2=x3+x");
        for (int i = 0; i < 10; ++i) {
            const FuncElem a = random_func(c), b = random_func(c);
            for (const auto& p : c->points()) {
                CHECK(valuation(a * b, p) == valuation(a, p) + valuation(b, p));
                const LocalSeries sa = local_expansion(a, p, 3), sb = local_expansion(b, p, 3),
                                  sab = local_expansion(a * b, p, 3);
                CHECK(sab.order == sa.order + sb.order);
                CHECK(sab.coeffs[0] == sa.coeffs[0] * sb.coeffs[0]);
            }
        }
    }

    TEST_CASE("Riemann-Roch dimensions") {
        for (const auto& c : fixtures()) {
            const Point o = Point::at_infinity();
            CHECK(riemann_roch_basis(c, Divisor::single(o, 0)).size() == 1);
            CHECK(riemann_roch_basis(c, Divisor::single(o, -1)).empty());
            for (int n = 1; n <= 6; ++n) {
                const auto basis = riemann_roch_basis(c, Divisor::single(o, n));
                CHECK(basis.size() == static_cast<std::size_t>(n));
                for (const auto& b : basis) {
                    CHECK(b.d().degree() == 0);
                    CHECK(valuation(b, o) >= -n);
                }
            }
            // deg D >= 1 gives dim deg D whatever the support.
            const auto& pts = c->points();
            if (pts.size() >= 3) {
                Divisor d;
                d.add(pts[1], 2);
                d.add(pts[2], -1);
                d.add(o, 1);
                const auto basis = riemann_roch_basis(c, d);
                CHECK(basis.size() == 2);
                for (const auto& b : basis)
                    for (const auto& p : pts) CHECK(valuation(b, p) >= -d.coeff(p));
            }
        }
        // A degree-0 divisor is principal exactly when its Abel sum is O.
        auto c = y2y_x3(2);
        const auto& pts = c->points();
        for (const auto& p : pts)
            for (const auto& q : pts) {
                Divisor d;
                d.add(p, 1);
                d.add(q, -1);
                const std::size_t dim = riemann_roch_basis(c, d).size();
                CHECK(dim == (p == q ? 1u : 0u));
            }
    }

    TEST_CASE("pullbacks agree with evaluation at image points") {
        auto c = y2y_x3(4);
        const Subgroup g = full_group(*c);
        for (int i = 0; i < 6; ++i) {
            const FuncElem fn = random_func(c);
            for (std::size_t e = 0; e < g.order(); e += 7) {
                const CurveAut& s = g.elements[e];
                const FuncElem pb = pullback(fn, s);
                for (const auto& p : c->points()) {
                    const auto lhs = evaluate(pb, p);
                    const auto rhs = evaluate(fn, apply_to_point(*c, s, p));
                    REQUIRE(lhs.has_value() == rhs.has_value());
                    if (lhs) REQUIRE(*lhs == *rhs);
                }
            }
        }
    }

    TEST_CASE("non-rational support is reported") {
        auto c = y2y_x3(2);
        // x^2 + x + w is irreducible over GF(4).
        const Field& f = c->field();
        const Poly irr(f, {2, 1, 1});
        REQUIRE(solve_poly(f, std::vector<Element>{f.element(2), f.one(), f.one()}).empty());
        CHECK_KIND(principal_divisor(FuncElem(c, irr, Poly(f), Poly::constant(f.one()))), ErrorKind::NonRationalSupport);
    }
}
