#ifndef ECLRC_IO_HPP
#define ECLRC_IO_HPP

// JSON forms of fields, curves, functions and code specifications, plus the
// binary symbol and erasure-bitmap streams used by the data path.
//
// Symbol streams hold one little-endian index per symbol: 8 bits when
// q <= 256, otherwise 16 bits. Erasure bitmaps hold one bit per symbol,
// least significant bit first, set for an erased position.

#include <iosfwd>
#include <optional>
#include <vector>

#include <json.hpp>

#include "eclrc/lrc.hpp"

namespace eclrc {

using Json = nlohmann::ordered_json;

Json to_json(const Field& f);
Json to_json(const Curve& c);
Json to_json(const Point& p);
Json to_json(const StabAut& a);
Json to_json(const CurveAut& g);
Json to_json(const FuncElem& f);

FieldPtr field_from_json(const Json& j);
CurvePtr curve_from_json(const Json& j);
Point point_from_json(const Curve& c, const Json& j);
StabAut stab_from_json(const Field& f, const Json& j);
CurveAut aut_from_json(const Curve& c, const Json& j);

/// Everything needed to rebuild a code bit-identically.
struct CodeSpec {
    CurvePtr curve;
    std::vector<CurveAut> generators;
    std::size_t t = 1, m = 1;
    bool include_pole_fiber = true;
    std::optional<Point> pole_point;
};

Json to_json(const CodeSpec& s);
CodeSpec code_spec_from_json(const Json& j);
LrcCode build_from_spec(const CodeSpec& s);

/// First line: JSON header {n, k, q, repair_groups}; then k lines of n
/// space-separated symbol indices.
void write_generator(std::ostream& out, const LrcCode& code);

struct GeneratorFile {
    std::size_t n = 0, k = 0, q = 0;
    std::vector<std::vector<std::size_t>> repair_groups;
    Rows rows;
};
GeneratorFile read_generator(std::istream& in);

std::size_t symbol_width(std::uint64_t q);
void write_symbols(std::ostream& out, const std::vector<std::uint32_t>& symbols, std::uint64_t q);
/// Reads symbols until end of stream; throws Io on a truncated symbol or an
/// index outside the field.
std::vector<std::uint32_t> read_symbols(std::istream& in, std::uint64_t q);

void write_bitmap(std::ostream& out, const std::vector<bool>& bits);
std::vector<bool> read_bitmap(std::istream& in, std::size_t count);

}  // namespace eclrc

#endif
