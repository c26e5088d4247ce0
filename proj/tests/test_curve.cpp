#include "support.hpp"

using namespace eclrc;
using testsupport::y2y_x3;

namespace {

std::uint64_t count_solutions(const Curve& c) {
    const Field& f = c.field();
    std::uint64_t n = 1;
    for (const auto& x : enumerate(f))
        for (const auto& y : enumerate(f))
            if (y * y + c.a1() * x * y + c.a3() * y == x * x * x + c.a2() * x * x + c.a4() * x + c.a6()) ++n;
    return n;
}

std::vector<CurvePtr> law_fixtures() {
    return {
        y2y_x3(2),
        Curve::parse(make_field(2, 3), "y2+xy=x3+1"),
        Curve::parse(make_field(2, 3), "y2+xy=x3+x2+1"),
        Curve::parse(make_field(3, 2), "y2=x3+x"),
        Curve::parse(make_field(3, 1), "y2=x3+x2+1"),
        Curve::parse(make_field(3, 2), "y2+xy+y=x3+x2+g5"),
        Curve::parse(make_field(5, 1), "y2=x3+x+1"),
        Curve::parse(make_field(7, 1), "y2+xy+3y=x3+2x2+x+5"),
    };
}

}  // namespace

TEST_SUITE("curve") {
    TEST_CASE("point counts against direct counting") {
        for (const auto& c : law_fixtures()) CHECK(c->order() == count_solutions(*c));
        CHECK(y2y_x3(2)->order() == 9);
        CHECK(y2y_x3(6)->order() == 81);
        CHECK(y2y_x3(4)->order() == 9);
        CHECK(y2y_x3(3)->order() == 9);
    }

    TEST_CASE("points are listed O first then by key") {
        auto c = y2y_x3(4);
        CHECK(c->points().front().infinity);
        for (std::size_t i = 1; i < c->points().size(); ++i) {
            CHECK(c->points()[i - 1].key() < c->points()[i].key());
            CHECK(c->index_of(c->points()[i]) == i);
        }
    }

    TEST_CASE("group law axioms, exhaustive") {
        for (const auto& c : law_fixtures()) {
            const auto& pts = c->points();
            const Point o = Point::at_infinity();
            for (const auto& p : pts) {
                REQUIRE(c->add(p, o) == p);
                REQUIRE(c->add(p, c->neg(p)).infinity);
                for (const auto& q : pts) {
                    const Point s = c->add(p, q);
                    REQUIRE(c->contains(s));
                    REQUIRE(s == c->add(q, p));
                    for (const auto& r : pts) REQUIRE(c->add(s, r) == c->add(p, c->add(q, r)));
                }
            }
        }
    }

    TEST_CASE("scalar multiples and point orders") {
        for (const auto& c : law_fixtures())
            for (const auto& p : c->points()) {
                REQUIRE(c->scalar_mul(static_cast<std::int64_t>(c->order()), p).infinity);
                const auto n = c->order_of_point(p);
                REQUIRE(c->order() % n == 0);
                REQUIRE(c->scalar_mul(static_cast<std::int64_t>(n), p).infinity);
                REQUIRE(c->scalar_mul(-1, p) == c->neg(p));
                std::int64_t k = 1;
                Point acc = p;
                while (!acc.infinity) {
                    acc = c->add(acc, p);
                    ++k;
                }
                REQUIRE(static_cast<std::uint64_t>(k) == n);
            }
    }

    TEST_CASE("group structure") {
        for (std::uint64_t q : {4u, 9u, 16u, 25u, 49u}) {
            auto c = find_maximal_curve(q);
            const auto s = static_cast<std::uint64_t>(isqrt(static_cast<std::int64_t>(q)) + 1);
            const auto gs = c->group_structure();
            CHECK(gs.n1 == s);
            CHECK(gs.n2 == s);
            CHECK(c->is_maximal());
        }
        for (const auto& c : law_fixtures()) {
            const auto gs = c->group_structure();
            CHECK(gs.n1 * gs.n2 == c->order());
            CHECK(gs.n2 % gs.n1 == 0);
            // The exponent is the largest point order.
            std::uint64_t mx = 1;
            for (const auto& p : c->points()) mx = std::max(mx, c->order_of_point(p));
            CHECK(mx == gs.n2);
        }
    }

    TEST_CASE("prime order gives a cyclic group") {
        auto f = make_field(5, 1);
        int seen = 0;
        for (std::uint32_t a4 = 0; a4 < 5; ++a4)
            for (std::uint32_t a6 = 0; a6 < 5; ++a6) {
                CurvePtr c;
                try {
                    c = Curve::create(f, std::array<std::uint32_t, 5>{0, 0, 0, a4, a6});
                } catch (const Error&) {
                    continue;
                }
                if (is_prime(c->order())) {
                    CHECK(c->group_structure().n1 == 1);
                    ++seen;
                }
            }
        CHECK(seen > 0);
    }

    TEST_CASE("j-invariant of short Weierstrass curves") {
        auto f = make_field(11, 1);
        for (std::int64_t a = 0; a < 11; ++a)
            for (std::int64_t b = 0; b < 11; ++b) {
                const std::int64_t disc = (4 * a * a * a + 27 * b * b) % 11;
                if (disc == 0) {
                    CHECK_KIND(Curve::create(f, std::array<std::uint32_t, 5>{0, 0, 0, std::uint32_t(a), std::uint32_t(b)}),
                               ErrorKind::SingularCurve);
                    continue;
                }
                auto c = Curve::create(f, std::array<std::uint32_t, 5>{0, 0, 0, std::uint32_t(a), std::uint32_t(b)});
                const Element want = f->from_int(1728 * 4 * a * a * a) / f->from_int(disc);
                CHECK(c->j_invariant() == want);
            }
        CHECK(y2y_x3(2)->j_invariant().is_zero());
    }

    TEST_CASE("parsing") {
        auto f = make_field(2, 3);
        auto c = Curve::parse(f, "y^2 + xy = x^3 + 1");
        CHECK(c->coefficient_indices() == std::array<std::uint32_t, 5>{1, 0, 0, 0, 1});
        auto c2 = Curve::parse(f, "y2+g3*xy=x3+g5x+g2");
        CHECK(c2->coefficient_indices() == std::array<std::uint32_t, 5>{3, 0, 0, 5, 2});
        CHECK(Curve::parse(f, c2->equation())->coefficient_indices() == c2->coefficient_indices());
        auto f5 = make_field(5, 1);
        CHECK(Curve::parse(f5, "y2=x3+2x+4")->coefficient_indices() == std::array<std::uint32_t, 5>{0, 0, 0, 2, 4});
        CHECK_KIND(Curve::parse(f, "y2=x3=1"), ErrorKind::InvalidArgument);
        CHECK_KIND(Curve::parse(f, "y2=x2"), ErrorKind::InvalidArgument);
        CHECK_KIND(Curve::parse(f5, "y2=x3"), ErrorKind::SingularCurve);
    }

    TEST_CASE("partial derivatives vanish together only off smooth points") {
        for (const auto& c : law_fixtures())
            for (const auto& p : c->points()) {
                if (p.infinity) continue;
                CHECK_FALSE((c->partial_x(p).is_zero() && c->partial_y(p).is_zero()));
            }
    }

    TEST_CASE("traces and structures") {
        CHECK(admissible_trace(4, 4));
        CHECK(admissible_trace(4, -4));
        CHECK(admissible_trace(5, 3));
        CHECK_FALSE(admissible_trace(5, 5));
        CHECK(admissible_trace(9, 3));
        CHECK_FALSE(admissible_trace(49, 7));
        CHECK(admissible_trace(8, 4));
        CHECK(admissible_trace(8, 0));
        CHECK(admissible_structure(4, 3, 3));
        CHECK_FALSE(admissible_structure(4, 2, 2));
        // Every curve found by exhaustive scan over GF(8) has an admissible trace.
        auto f = make_field(2, 3);
        for (std::uint32_t a3 = 1; a3 < 8; ++a3)
            for (std::uint32_t a6 = 0; a6 < 8; ++a6) {
                auto c = Curve::create(f, std::array<std::uint32_t, 5>{0, 0, a3, 0, a6});
                CHECK(admissible_trace(8, static_cast<std::int64_t>(c->order()) - 9));
            }
    }

    TEST_CASE("maximal curve search") {
        for (std::uint64_t q : {4u, 9u, 16u, 25u, 49u, 64u, 81u, 121u}) {
            auto c = find_maximal_curve(q);
            CHECK(c->order() == q + 2 * static_cast<std::uint64_t>(isqrt(static_cast<std::int64_t>(q))) + 1);
        }
        CHECK_KIND(find_maximal_curve(8), ErrorKind::NoMaximalCurveFound);
        CHECK_KIND(find_maximal_curve(7), ErrorKind::NoMaximalCurveFound);
    }

    TEST_CASE("points off the curve are rejected") {
        auto c = y2y_x3(2);
        const Field& f = c->field();
        const Point bad = Point::affine(f.one(), f.one());
        CHECK_FALSE(c->contains(bad));
        CHECK_KIND(c->add(bad, bad), ErrorKind::PointNotOnCurve);
        CHECK_KIND(c->index_of(bad), ErrorKind::PointNotOnCurve);
    }
}
