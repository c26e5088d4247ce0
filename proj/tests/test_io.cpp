#include "support.hpp"

#include <sstream>

#include "eclrc/io.hpp"

using namespace eclrc;
using testsupport::y2y_x3;

TEST_SUITE("io") {
    TEST_CASE("field and curve JSON round trip") {
        auto c = Curve::parse(make_field(3, 2), "y2+xy+y=x3+x2+g5");
        const Json j = to_json(*c);
        CHECK(j["p"] == 3);
        CHECK(j["a"] == 2);
        CHECK(j["modulus"] == Json::array({1, 0, 1}));
        const CurvePtr back = curve_from_json(j);
        CHECK(back->coefficient_indices() == c->coefficient_indices());
        Json bad = j;
        bad["modulus"] = Json::array({2, 0, 1});
        CHECK_KIND(curve_from_json(bad), ErrorKind::FieldMismatch);
        bad = j;
        bad.erase("a4");
        CHECK_KIND(curve_from_json(bad), ErrorKind::Io);
    }

    TEST_CASE("automorphism JSON") {
        auto c = y2y_x3(2);
        for (const auto& g : full_group(*c).elements) REQUIRE(aut_from_json(*c, to_json(g)) == g);
        Json j = to_json(CurveAut::identity(c->field()));
        j["stab"] = Json::array({1, 1, 0, 0});
        CHECK_KIND(aut_from_json(*c, j), ErrorKind::InvalidArgument);
        j["stab"] = Json::array({1, 0, 0});
        CHECK_KIND(aut_from_json(*c, j), ErrorKind::Io);
        j = to_json(CurveAut::identity(c->field()));
        j["point"] = Json::array({1, 1});
        CHECK_KIND(aut_from_json(*c, j), ErrorKind::PointNotOnCurve);
    }

    TEST_CASE("code spec rebuilds an identical code") {
        auto c = y2y_x3(6);
        CodeSpec spec;
        spec.curve = c;
        spec.generators = order9_abelian(*c).generators;
        spec.t = 2;
        spec.m = 8;
        const LrcCode a = build_from_spec(spec);
        const CodeSpec back = code_spec_from_json(Json::parse(to_json(spec).dump()));
        const LrcCode b = build_from_spec(back);
        CHECK(a.generator == b.generator);
        CHECK(a.repair_groups == b.repair_groups);

        std::stringstream ss;
        write_generator(ss, a);
        const GeneratorFile g = read_generator(ss);
        CHECK(g.n == 72);
        CHECK(g.k == 9);
        CHECK(g.q == 64);
        CHECK(g.rows == a.generator);
        CHECK(g.repair_groups == a.repair_groups);
    }

    TEST_CASE("generator file errors") {
        std::stringstream empty;
        CHECK_KIND(read_generator(empty), ErrorKind::Io);
        std::stringstream shortrows("{\"n\":2,\"k\":2,\"q\":4,\"repair_groups\":[[0,1]]}\n1 2\n");
        CHECK_KIND(read_generator(shortrows), ErrorKind::Io);
        std::stringstream range("{\"n\":2,\"k\":1,\"q\":4,\"repair_groups\":[[0,1]]}\n1 9\n");
        CHECK_KIND(read_generator(range), ErrorKind::Io);
    }

    TEST_CASE("symbol streams") {
        const std::vector<std::uint32_t> small{0, 1, 63, 200, 255};
        std::stringstream s8;
        write_symbols(s8, small, 256);
        CHECK(s8.str().size() == 5);
        CHECK(read_symbols(s8, 256) == small);

        const std::vector<std::uint32_t> wide{0, 256, 1023, 0x1234};
        std::stringstream s16;
        write_symbols(s16, wide, 1u << 16);
        const std::string raw = s16.str();
        CHECK(raw.size() == 8);
        CHECK(static_cast<unsigned char>(raw[6]) == 0x34);
        CHECK(static_cast<unsigned char>(raw[7]) == 0x12);
        CHECK(read_symbols(s16, 1u << 16) == wide);

        std::stringstream odd(std::string("\x01", 1));
        CHECK_KIND(read_symbols(odd, 1024), ErrorKind::Io);
        std::stringstream big(std::string("\x50", 1));
        CHECK_KIND(read_symbols(big, 64), ErrorKind::Io);
    }

    TEST_CASE("erasure bitmaps are LSB first") {
        std::vector<bool> bits(11, false);
        bits[0] = bits[3] = bits[8] = true;
        std::stringstream s;
        write_bitmap(s, bits);
        const std::string raw = s.str();
        REQUIRE(raw.size() == 2);
        CHECK(static_cast<unsigned char>(raw[0]) == 0x09);
        CHECK(static_cast<unsigned char>(raw[1]) == 0x01);
        CHECK(read_bitmap(s, 11) == bits);
        std::stringstream shortmap(std::string("\x01", 1));
        CHECK_KIND(read_bitmap(shortmap, 9), ErrorKind::Io);
    }
}
