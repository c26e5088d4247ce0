#include "support.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "eclrc/cli.hpp"
#include "eclrc/io.hpp"

using namespace eclrc;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome call(std::vector<std::string> args) {
    args.insert(args.begin(), "eclrc");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir() {
    auto dir = std::filesystem::temp_directory_path() / ("eclrc_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    return dir;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("aut-list reports 24 stabilizers over GF(4)") {
        const Outcome o = call({"aut-list", "--q", "4", "--curve", "y2+y=x3"});
        REQUIRE(o.code == 0);
        const Json j = Json::parse(o.out);
        CHECK(j["order"] == 24);
        CHECK(j["stabilizers"].size() == 24);
    }

    TEST_CASE("code-table lists the [72,9,63] row") {
        const Outcome o = call({"code-table", "--q", "64"});
        REQUIRE(o.code == 0);
        const Json j = Json::parse(o.out);
        bool found = false;
        for (const auto& r : j["rows"])
            found |= r["n"] == 72 && r["k"] == 9 && r["d"] == 63 && r["r"] == 8;
        CHECK(found);
    }

    TEST_CASE("exit codes") {
        CHECK(call({}).code == 2);
        CHECK(call({"no-such-command"}).code == 2);
        CHECK(call({"curve-info", "--q", "4", "--bogus"}).code == 2);
        CHECK(call({"curve-info"}).code == 2);
        CHECK(call({"--help"}).code == 0);
        const Outcome bad = call({"curve-info", "--q", "6"});
        CHECK(bad.code == 1);
        const Json e = Json::parse(bad.err);
        CHECK(e["error"] == "NotPrime");
        const Outcome sing = call({"curve-info", "--q", "5", "--curve", "y2=x3"});
        CHECK(sing.code == 1);
        CHECK(Json::parse(sing.err)["error"] == "SingularCurve");
    }

    TEST_CASE("reports are deterministic") {
        for (const auto& args : std::vector<std::vector<std::string>>{
                 {"curve-info", "--q", "16"},
                 {"aut-orbits", "--q", "64", "--curve", "y2+y=x3", "--preset", "abelian9"},
                 {"code-build", "--q", "16", "--a-order", "2", "--t", "3", "--m", "4"}}) {
            const Outcome a = call(args), b = call(args);
            CHECK(a.code == 0);
            CHECK(a.out == b.out);
        }
    }

    TEST_CASE("encode, repair and decode files") {
        const auto dir = scratch_dir();
        const auto spec = (dir / "spec.json").string(), gen = (dir / "gen.txt").string();
        REQUIRE(call({"code-build", "--q", "64", "--curve", "y2+y=x3", "--preset", "abelian9", "--t", "2", "--m", "8",
                      "--out-spec", spec, "--out-gen", gen})
                    .code == 0);
        std::ifstream gin(gen);
        CHECK(read_generator(gin).n == 72);

        std::vector<std::uint32_t> data;
        for (std::uint32_t i = 0; i < 50; ++i) data.push_back((i * 37 + 5) % 64);
        {
            std::ofstream f(dir / "msg.bin", std::ios::binary);
            write_symbols(f, data, 64);
        }
        REQUIRE(call({"code-encode", "--spec", spec, "--in", (dir / "msg.bin").string(), "--out",
                      (dir / "cw.bin").string()})
                    .code == 0);
        const std::string coded = slurp(dir / "cw.bin");
        REQUIRE(coded.size() == 72 * 6);

        // One erasure in every repair group of every block.
        std::string damaged = coded;
        std::vector<bool> er(coded.size(), false);
        for (std::size_t b = 0; b < 6; ++b)
            for (std::size_t g = 0; g < 8; ++g) {
                const std::size_t i = b * 72 + g * 9 + (b + g) % 9;
                er[i] = true;
                damaged[i] = 0;
            }
        {
            std::ofstream f(dir / "damaged.bin", std::ios::binary);
            f << damaged;
            std::ofstream m(dir / "er.bin", std::ios::binary);
            write_bitmap(m, er);
        }
        REQUIRE(call({"code-repair", "--spec", spec, "--in", (dir / "damaged.bin").string(), "--erasures",
                      (dir / "er.bin").string(), "--out", (dir / "repaired.bin").string()})
                    .code == 0);
        CHECK(slurp(dir / "repaired.bin") == coded);

        REQUIRE(call({"code-decode", "--spec", spec, "--in", (dir / "damaged.bin").string(), "--erasures",
                      (dir / "er.bin").string(), "--out", (dir / "decoded.bin").string()})
                    .code == 0);
        std::ifstream din(dir / "decoded.bin", std::ios::binary);
        auto decoded = read_symbols(din, 64);
        decoded.resize(data.size());
        CHECK(decoded == data);

        const Outcome v = call({"code-verify", "--spec", spec});
        CHECK(v.code == 0);
        CHECK(Json::parse(v.out)["certified"] == true);

        // Two erasures in one group cannot be repaired locally.
        er[1] = true;
        {
            std::ofstream m(dir / "er2.bin", std::ios::binary);
            write_bitmap(m, er);
        }
        const Outcome two = call({"code-repair", "--spec", spec, "--in", (dir / "damaged.bin").string(), "--erasures",
                                  (dir / "er2.bin").string(), "--out", (dir / "x.bin").string()});
        CHECK(two.code == 1);
        CHECK(Json::parse(two.err)["error"] == "TooManyErasuresInGroup");
        std::filesystem::remove_all(dir);
    }

    TEST_CASE("pretty output is text") {
        const Outcome o = call({"code-table", "--q", "16", "--family", "involution", "--pretty"});
        CHECK(o.code == 0);
        CHECK(o.out.find("family") != std::string::npos);
        CHECK(o.out.front() != '{');
    }
}
