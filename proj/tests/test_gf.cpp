#include "support.hpp"

#include <algorithm>
#include <set>

using namespace eclrc;
using testsupport::random_element;

namespace {

// Polynomials over GF(p) as coefficient vectors, low degree first.
using IntPoly = std::vector<std::uint32_t>;

IntPoly mulmod(const IntPoly& a, const IntPoly& b, const IntPoly& mod, std::uint32_t p) {
    IntPoly prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    const std::size_t deg = mod.size() - 1;
    for (std::size_t i = prod.size(); i-- > deg;) {
        const std::uint32_t c = prod[i];
        if (!c) continue;
        for (std::size_t j = 0; j <= deg; ++j) prod[i - deg + j] = (prod[i - deg + j] + p - (c * mod[j]) % p) % p;
    }
    prod.resize(deg);
    return prod;
}

bool has_root(const IntPoly& f, std::uint32_t p) {
    for (std::uint32_t x = 0; x < p; ++x) {
        std::uint32_t acc = 0;
        for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
        if (acc == 0) return true;
    }
    return false;
}

// Smallest monic irreducible of degree 2 or 3, comparing (c0, c1, ...).
IntPoly oracle_modulus(std::uint32_t p, std::uint32_t a) {
    std::vector<IntPoly> cands;
    const std::uint32_t count = a == 2 ? p * p : p * p * p;
    for (std::uint32_t idx = 0; idx < count; ++idx) {
        IntPoly f(a + 1, 1);
        std::uint32_t v = idx;
        for (std::uint32_t i = 0; i < a; ++i) {
            f[i] = v % p;
            v /= p;
        }
        if (!has_root(f, p)) cands.push_back(f);
    }
    return *std::min_element(cands.begin(), cands.end());
}

std::uint32_t to_index(const IntPoly& c, std::uint32_t p) {
    std::uint32_t idx = 0;
    for (std::size_t i = c.size(); i-- > 0;) idx = idx * p + c[i];
    return idx;
}

}  // namespace

TEST_SUITE("gf") {
    TEST_CASE("GF(4) basics") {
        auto f = make_field(2, 2);
        const Element w = f->element(2);
        CHECK(f->modulus() == std::vector<std::uint32_t>{1, 1, 1});
        CHECK(w * w == w + f->one());
        CHECK(w.inv() == w * w);
        CHECK(w.pow(3).is_one());
        CHECK(f->q() == 4);
    }

    TEST_CASE("moduli agree with the lexicographic oracle") {
        for (std::uint32_t p : {2u, 3u, 5u, 7u})
            for (std::uint32_t a : {2u, 3u}) {
                auto f = make_field(p, a);
                CHECK(f->modulus() == oracle_modulus(p, a));
            }
        CHECK(make_field(3, 2)->modulus() == std::vector<std::uint32_t>{1, 0, 1});
        CHECK(make_field(5, 1)->modulus() == std::vector<std::uint32_t>{0, 1});
    }

    TEST_CASE("multiplication agrees with schoolbook reduction") {
        for (auto [p, a] : {std::pair{2u, 4u}, {3u, 3u}, {5u, 2u}, {2u, 6u}}) {
            auto f = make_field(p, a);
            for (std::uint32_t x = 0; x < f->q(); ++x)
                for (std::uint32_t y = 0; y < f->q(); ++y) {
                    const Element ex = f->element(x), ey = f->element(y);
                    const IntPoly want = mulmod(f->coefficients(ex), f->coefficients(ey), f->modulus(), p);
                    REQUIRE((ex * ey).index() == to_index(want, p));
                    IntPoly sum(a);
                    const auto cx = f->coefficients(ex), cy = f->coefficients(ey);
                    for (std::uint32_t i = 0; i < a; ++i) sum[i] = (cx[i] + cy[i]) % p;
                    REQUIRE((ex + ey).index() == to_index(sum, p));
                }
        }
    }

    TEST_CASE("field axioms on random triples") {
        for (auto [p, a] : {std::pair{2u, 3u}, {3u, 2u}, {7u, 2u}, {2u, 8u}, {13u, 1u}, {3u, 5u}}) {
            auto f = make_field(p, a);
            for (int i = 0; i < 1000; ++i) {
                const Element x = random_element(*f), y = random_element(*f), z = random_element(*f);
                REQUIRE((x + y) + z == x + (y + z));
                REQUIRE((x * y) * z == x * (y * z));
                REQUIRE(x + y == y + x);
                REQUIRE(x * y == y * x);
                REQUIRE(x * (y + z) == x * y + x * z);
                REQUIRE(x - x == f->zero());
                if (!x.is_zero()) REQUIRE((x * x.inv()).is_one());
            }
        }
    }

    TEST_CASE("Frobenius is a ring homomorphism for q <= 81") {
        for (std::uint64_t q = 2; q <= 81; ++q) {
            std::uint32_t p, a;
            if (!prime_power(q, p, a)) continue;
            auto f = make_field(p, a);
            const auto all = enumerate(*f);
            for (const auto& x : all)
                for (const auto& y : all) {
                    REQUIRE((x + y).pow(p) == x.pow(p) + y.pow(p));
                    REQUIRE((x * y).pow(p) == x.pow(p) * y.pow(p));
                }
        }
    }

    TEST_CASE("index round trip") {
        for (auto [p, a] : {std::pair{2u, 5u}, {3u, 4u}, {11u, 2u}}) {
            auto f = make_field(p, a);
            for (std::uint32_t i = 0; i < f->q(); ++i) {
                const Element e = f->element(i);
                REQUIRE(e.index() == i);
                const auto c = f->coefficients(e);
                REQUIRE(f->from_coefficients(c) == e);
            }
        }
    }

    TEST_CASE("primitive element generates the multiplicative group") {
        for (std::uint64_t q : {4u, 9u, 16u, 25u, 49u, 64u, 81u, 128u}) {
            auto f = make_field_of_order(q);
            std::set<std::uint32_t> seen;
            Element g = f->one();
            for (std::uint32_t i = 0; i + 1 < f->q(); ++i) {
                seen.insert(g.index());
                g *= f->primitive();
            }
            CHECK(seen.size() == f->q() - 1);
        }
    }

    TEST_CASE("roots") {
        auto f4 = make_field(2, 2);
        const Element w = f4->element(2);
        const std::vector<Element> tpoly{f4->one(), f4->one(), f4->one()};
        const auto r = solve_poly(*f4, tpoly);
        CHECK(r == std::vector<Element>{w, w * w});
        const std::vector<Element> xpoly{f4->zero(), f4->one()};
        CHECK(solve_poly(*f4, xpoly) == std::vector<Element>{f4->zero()});
        auto f49 = make_field(7, 2);
        CHECK(roots_of_unity(*f49, 4).size() == 4);
        CHECK(roots_of_unity(*f4, 3).size() == 3);
        auto f64 = make_field(2, 6);
        const auto nine = roots_of_unity(*f64, 9);
        CHECK(nine.size() == 9);
        for (const auto& z : nine) CHECK(z.pow(9).is_one());
    }

    TEST_CASE("from_int reduces modulo p") {
        auto f = make_field(5, 2);
        CHECK(f->from_int(7) == f->from_int(2));
        CHECK(f->from_int(-1) == -f->one());
        CHECK(f->from_int(5).is_zero());
    }

    TEST_CASE("errors") {
        CHECK_KIND(make_field(4, 1), ErrorKind::NotPrime);
        CHECK_KIND(make_field(2, 20), ErrorKind::FieldTooLarge);
        CHECK_KIND(make_field_of_order(12), ErrorKind::NotPrime);
        auto f = make_field(3, 1);
        CHECK_KIND(f->zero().inv(), ErrorKind::DivisionByZero);
        auto g = make_field(3, 1);
        CHECK_KIND(f->one() + g->one(), ErrorKind::FieldMismatch);
    }
}
