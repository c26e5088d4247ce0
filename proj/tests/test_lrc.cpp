#include "support.hpp"

#include <map>
#include <set>

using namespace eclrc;
using testsupport::rng;
using testsupport::y2y_x3;

namespace {

struct SmallFixture {
    CurvePtr curve = find_maximal_curve(16);
    Subgroup g = closure(*curve, {CurveAut::from_stab(involution(*curve))});
    LrcCode code = build_code(curve, g, 3, 4);
};

const SmallFixture& small() {
    static const SmallFixture fx;
    return fx;
}

const LrcCode& big() {
    static const LrcCode code = [] {
        auto c = y2y_x3(6);
        return build_code(c, order9_abelian(*c), 2, 8);
    }();
    return code;
}

std::vector<std::uint32_t> random_message(const LrcCode& code) {
    std::uniform_int_distribution<std::uint32_t> d(0, code.field().q() - 1);
    std::vector<std::uint32_t> m(code.k);
    for (auto& s : m) s = d(rng());
    return m;
}

}  // namespace

TEST_SUITE("lrc") {
    TEST_CASE("z for the involution has a single pole pair at the fiber") {
        const auto& fx = small();
        const Fiber fb = free_fibers(*fx.curve, fx.g).front();
        const FuncElem z = construct_z(fx.curve, fx.g, fb);
        Divisor want;
        want.add(Point::at_infinity(), 2);
        for (const auto& p : fb.points) want.add(p, -1);
        CHECK(principal_divisor(z) == want);
        CHECK(z.v().is_zero());
        CHECK(pullback(z, CurveAut::from_stab(involution(*fx.curve))) == z);
    }

    TEST_CASE("z on the order-9 group") {
        const LrcCode& code = big();
        CHECK(code.a_order == 3);
        CHECK(code.t_order == 3);
        const Divisor div = principal_divisor(code.z);
        for (const auto& p : zero_orbit(*code.curve, code.group).zero_orbit) CHECK(div.coeff(p) == 3);
        for (const auto& p : code.pole_fiber.points) CHECK(div.coeff(p) == -1);
        for (const auto& e : code.group.elements) CHECK(pullback(code.z, e) == code.z);
    }

    TEST_CASE("w functions have the prescribed simple poles") {
        const LrcCode& code = big();
        REQUIRE(code.w.size() == code.r);
        CHECK(code.w[0].is_constant());
        const auto& pf = code.pole_fiber.points;
        for (std::size_t i = 1; i < code.w.size(); ++i)
            for (const auto& p : code.curve->points()) {
                const bool pole = std::find(pf.begin(), pf.begin() + static_cast<long>(i) + 1, p) !=
                                  pf.begin() + static_cast<long>(i) + 1;
                if (pole) CHECK(valuation(code.w[i], p) == -1);
                else CHECK(valuation(code.w[i], p) >= 0);
            }
        const auto& fx = small();
        CHECK(construct_w(fx.curve, free_fibers(*fx.curve, fx.g).front(), 1).size() == 1);
    }

    TEST_CASE("fiber selection") {
        const LrcCode& code = big();
        const auto sel = select_fibers(*code.curve, code.group, code.z, 7);
        CHECK(sel.size() == 7);
        const Divisor div = principal_divisor(code.z);
        std::set<std::uint64_t> used;
        for (const auto& fb : sel)
            for (const auto& p : fb.points) {
                CHECK(div.coeff(p) == 0);
                CHECK(used.insert(p.key()).second);
            }
        CHECK(select_fibers(*code.curve, code.group, code.z, 0).empty());
        CHECK_KIND(select_fibers(*code.curve, code.group, code.z, 8), ErrorKind::NotEnoughFibers);
    }

    TEST_CASE("[72,9,63] parameters and sampled weights") {
        const LrcCode& code = big();
        CHECK(code.n == 72);
        CHECK(code.k == 9);
        CHECK(code.d_design == 63);
        CHECK(code.r == 8);
        CHECK(code.repair_groups.size() == 8);
        for (int i = 0; i < 10000; ++i) {
            auto m = random_message(code);
            if (std::all_of(m.begin(), m.end(), [](std::uint32_t s) { return s == 0; })) continue;
            REQUIRE(weight(encode(code, m)) >= code.d_design);
        }
        CHECK(weight(min_weight_witness(code)) == code.d_design);
        CHECK_KIND(min_distance_exact(code), ErrorKind::SearchSpaceTooLarge);
    }

    TEST_CASE("[8,3,4] exhaustive repair and decoding") {
        const LrcCode& code = small().code;
        REQUIRE(code.n == 8);
        REQUIRE(code.k == 3);
        const std::uint32_t q = code.field().q();
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b)
                for (std::uint32_t c = 0; c < q; ++c) {
                    const auto word = encode(code, {a, b, c});
                    for (std::size_t i = 0; i < code.n; ++i) {
                        std::vector<bool> er(code.n, false);
                        er[i] = true;
                        auto rec = word;
                        rec[i] = 0;
                        REQUIRE(repair(code, rec, er, i) == word[i]);
                    }
                }
        for (std::size_t mask = 0; mask < 256; ++mask) {
            if (__builtin_popcountll(mask) != 3) continue;
            std::vector<bool> er(code.n);
            for (std::size_t i = 0; i < code.n; ++i) er[i] = (mask >> i) & 1;
            for (int trial = 0; trial < 100; ++trial) {
                const auto msg = random_message(code);
                auto rec = encode(code, msg);
                for (std::size_t i = 0; i < code.n; ++i)
                    if (er[i]) rec[i] = 0;
                REQUIRE(erasure_decode(code, rec, er) == msg);
            }
        }
    }

    TEST_CASE("encoding conventions") {
        const LrcCode& code = big();
        const std::vector<std::uint32_t> zero(code.k, 0);
        CHECK(weight(encode(code, zero)) == 0);
        std::vector<std::uint32_t> e1(code.k, 0);
        e1[0] = 1;
        const auto w = encode(code, e1);
        const std::size_t plain = code.fibers.size() * (code.r + 1);
        for (std::size_t i = 0; i < plain; ++i) CHECK(w[i] == 1);
        CHECK_KIND(encode(code, {1, 2}), ErrorKind::InvalidArgument);
    }

    TEST_CASE("t = 1 gives a repetition-like code") {
        const auto& fx = small();
        const LrcCode code = build_code(fx.curve, fx.g, 1, 3);
        CHECK(code.k == 1);
        CHECK(code.d_design == code.n);
        CHECK(min_distance_exact(code) == code.n);
        CHECK(singleton_bound(code.n, code.k, code.r) == code.n);
    }

    TEST_CASE("codes without the pole fiber") {
        auto c = y2y_x3(6);
        BuildOptions opts;
        opts.include_pole_fiber = false;
        const LrcCode code = build_code(c, order9_abelian(*c), 2, 7, opts);
        CHECK(code.n == 63);
        CHECK(code.d_design == 54);
        CHECK(weight(min_weight_witness(code)) == 54);
        for (int i = 0; i < 2000; ++i) {
            auto m = random_message(code);
            if (std::all_of(m.begin(), m.end(), [](std::uint32_t s) { return s == 0; })) continue;
            REQUIRE(weight(encode(code, m)) >= code.d_design);
        }
    }

    TEST_CASE("torsion-stabilizer code") {
        // Trivial torsion with an order-3 stabilizer subgroup: r = 2.
        auto c = find_maximal_curve(16);
        std::vector<CurveAut> stabs;
        for (const auto& s : enumerate_stabilizer(*c))
            if (!s.is_identity()) stabs.push_back(CurveAut::from_stab(s));
        for (const auto& a : enumerate_subgroups(*c, stabs)) {
            if (a.order() != 3) continue;
            const Subgroup g = ta_subgroup(*c, torsion_subgroup(*c, 1), a);
            const LrcCode code = build_code(c, g, 2, 3);
            CHECK(code.r == 2);
            CHECK(code.n == 9);
            CHECK(code.k == 3);
            const OptimalityReport rep = verify_optimal(code);
            CHECK(rep.d_exact == code.d_design);
            CHECK(rep.identity_holds);
            break;
        }
    }

    TEST_CASE("repair and decode errors") {
        const LrcCode& code = small().code;
        const auto word = encode(code, {1, 2, 3});
        std::vector<bool> er(code.n, false);
        CHECK_KIND(repair(code, word, er, 0), ErrorKind::NotErased);
        const auto& grp = code.repair_groups[0];
        er[grp[0]] = er[grp[1]] = true;
        CHECK_KIND(repair(code, word, er, grp[0]), ErrorKind::TooManyErasuresInGroup);
        std::vector<bool> many(code.n, true);
        many[0] = false;
        CHECK_KIND(erasure_decode(code, word, many), ErrorKind::Undecodable);
        auto bad = word;
        bad[0] = static_cast<std::uint32_t>((bad[0] + 1) % code.field().q());
        CHECK_KIND(erasure_decode(code, bad, std::vector<bool>(code.n, false)), ErrorKind::Undecodable);
    }

    TEST_CASE("parameter violations") {
        const auto& fx = small();
        CHECK_KIND(build_code(fx.curve, fx.g, 3, 2), ErrorKind::ParameterViolation);
        CHECK_KIND(build_code(fx.curve, fx.g, 0, 2), ErrorKind::ParameterViolation);
        CHECK_KIND(build_code(fx.curve, fx.g, 2, 40), ErrorKind::NotEnoughFibers);
        const Subgroup trans = closure(*fx.curve, {CurveAut::translation(fx.curve->field(), fx.curve->points()[1])});
        CHECK_KIND(build_code(fx.curve, trans, 1, 2), ErrorKind::ParameterViolation);
    }

    TEST_CASE("parameter table") {
        for (std::uint64_t q : {4u, 9u, 16u, 25u, 49u, 64u}) {
            const auto rows = parameter_table(q);
            CHECK_FALSE(rows.empty());
            for (const auto& r : rows) {
                REQUIRE(r.d == singleton_bound(r.n, r.k, r.r));
                REQUIRE(r.n == r.m * (r.r + 1));
                REQUIRE(r.k == r.r * r.t - r.r + 1);
            }
        }
        const auto t64 = parameter_table(64);
        CHECK(std::any_of(t64.begin(), t64.end(), [](const ParameterRow& r) {
            return r.family == "order-9-abelian" && r.n == 72 && r.k == 9 && r.d == 63 && r.r == 8;
        }));
        std::size_t mmax = 0;
        for (const auto& r : parameter_table(16))
            if (r.family == "involution" && r.h == 1) mmax = std::max(mmax, r.m);
        CHECK(mmax == 11);
        CHECK(parameter_table(8).empty());
        CHECK(parameter_table(5).empty());
        CHECK_KIND(parameter_table(12), ErrorKind::NotPrime);
    }

    TEST_CASE("table rows are constructible") {
        auto c = find_maximal_curve(16);
        const Subgroup g = closure(*c, {CurveAut::from_stab(involution(*c))});
        for (const auto& r : parameter_table(16)) {
            if (r.family != "involution" || r.h != 1 || r.m > 11) continue;
            const LrcCode code = build_code(c, g, r.t, r.m);
            REQUIRE(code.n == r.n);
            REQUIRE(code.k == r.k);
            REQUIRE(code.d_design == r.d);
            REQUIRE(weight(min_weight_witness(code)) == r.d);
        }
        auto c64 = y2y_x3(6);
        const Subgroup g9 = order9_abelian(*c64);
        for (const auto& r : parameter_table(64)) {
            if (r.family != "order-9-abelian" || r.t > 2) continue;
            const LrcCode code = build_code(c64, g9, r.t, r.m);
            REQUIRE(code.n == r.n);
            REQUIRE(code.k == r.k);
            REQUIRE(weight(min_weight_witness(code)) == r.d);
        }
    }

    TEST_CASE("formal locality on the [8,3,4] code") {
        const LrcCode& code = small().code;
        const std::uint32_t q = code.field().q();
        for (std::size_t i = 0; i < code.n; ++i) {
            std::map<std::vector<std::uint32_t>, std::set<std::uint32_t>> proj;
            for (std::uint32_t a = 0; a < q; ++a)
                for (std::uint32_t b = 0; b < q; ++b)
                    for (std::uint32_t c = 0; c < q; ++c) {
                        const auto w = encode(code, {a, b, c});
                        std::vector<std::uint32_t> key;
                        for (auto col : code.repair_groups[code.group_of[i]])
                            if (col != i) key.push_back(w[col]);
                        proj[key].insert(w[i]);
                    }
            for (const auto& [k, vals] : proj) REQUIRE(vals.size() == 1);
        }
    }
}
