#include "eclrc/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace eclrc {

namespace {

template <class T>
T get_field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail(ErrorKind::Io, std::string("missing JSON key '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::Io, std::string("bad JSON value for '") + key + "': " + e.what());
    }
}

Element element_from(const Field& f, const Json& j) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
        fail(ErrorKind::Io, "field element must be a nonnegative integer index");
    const auto idx = j.get<std::uint64_t>();
    if (idx >= f.q()) fail(ErrorKind::Io, "field element index out of range");
    return f.element(idx);
}

Json poly_json(const Poly& p) { return Json(p.coeffs()); }

}  // namespace

Json to_json(const Field& f) {
    Json j;
    j["p"] = f.p();
    j["a"] = f.a();
    j["modulus"] = f.modulus();
    return j;
}

Json to_json(const Curve& c) {
    Json j = to_json(c.field());
    const auto idx = c.coefficient_indices();
    const char* names[] = {"a1", "a2", "a3", "a4", "a6"};
    for (int i = 0; i < 5; ++i) j[names[i]] = idx[i];
    return j;
}

Json to_json(const Point& p) {
    if (p.infinity) return nullptr;
    return Json::array({p.x.index(), p.y.index()});
}

Json to_json(const StabAut& a) { return Json::array({a.u.index(), a.r.index(), a.s.index(), a.t.index()}); }

Json to_json(const CurveAut& g) {
    Json j;
    j["point"] = to_json(g.translate);
    j["stab"] = to_json(g.stab);
    return j;
}

Json to_json(const FuncElem& f) {
    Json j;
    j["u"] = poly_json(f.u());
    j["v"] = poly_json(f.v());
    j["d"] = poly_json(f.d());
    j["text"] = f.to_string();
    return j;
}

FieldPtr field_from_json(const Json& j) {
    const auto p = get_field<std::uint32_t>(j, "p");
    const auto a = get_field<std::uint32_t>(j, "a");
    FieldPtr f = make_field(p, a);
    if (j.contains("modulus") && get_field<std::vector<std::uint32_t>>(j, "modulus") != f->modulus())
        fail(ErrorKind::FieldMismatch, "modulus differs from the canonical one");
    return f;
}

CurvePtr curve_from_json(const Json& j) {
    FieldPtr f = field_from_json(j);
    std::array<std::uint32_t, 5> idx{};
    const char* names[] = {"a1", "a2", "a3", "a4", "a6"};
    for (int i = 0; i < 5; ++i) {
        idx[i] = get_field<std::uint32_t>(j, names[i]);
        if (idx[i] >= f->q()) fail(ErrorKind::Io, "curve coefficient index out of range");
    }
    return Curve::create(f, idx);
}

Point point_from_json(const Curve& c, const Json& j) {
    if (j.is_null()) return Point::at_infinity();
    if (!j.is_array() || j.size() != 2) fail(ErrorKind::Io, "point must be null or [x, y]");
    Point p = Point::affine(element_from(c.field(), j[0]), element_from(c.field(), j[1]));
    if (!c.contains(p)) fail(ErrorKind::PointNotOnCurve, "point is not on the curve");
    return p;
}

StabAut stab_from_json(const Field& f, const Json& j) {
    if (!j.is_array() || j.size() != 4) fail(ErrorKind::Io, "stabilizer must be [u, r, s, t]");
    return {element_from(f, j[0]), element_from(f, j[1]), element_from(f, j[2]), element_from(f, j[3])};
}

CurveAut aut_from_json(const Curve& c, const Json& j) {
    if (!j.is_object()) fail(ErrorKind::Io, "automorphism must be an object");
    CurveAut g{point_from_json(c, j.contains("point") ? j["point"] : Json(nullptr)),
               j.contains("stab") ? stab_from_json(c.field(), j["stab"]) : StabAut::identity(c.field())};
    if (!preserves_equation(c, g.stab)) fail(ErrorKind::InvalidArgument, "stabilizer does not preserve the curve");
    return g;
}

Json to_json(const CodeSpec& s) {
    Json j;
    j["curve"] = to_json(*s.curve);
    j["generators"] = Json::array();
    for (const auto& g : s.generators) j["generators"].push_back(to_json(g));
    j["t"] = s.t;
    j["m"] = s.m;
    j["include_pole_fiber"] = s.include_pole_fiber;
    j["pole_point"] = s.pole_point ? to_json(*s.pole_point) : Json(nullptr);
    return j;
}

CodeSpec code_spec_from_json(const Json& j) {
    CodeSpec s;
    if (!j.is_object() || !j.contains("curve")) fail(ErrorKind::Io, "code spec needs a curve");
    s.curve = curve_from_json(j["curve"]);
    for (const auto& g : get_field<Json>(j, "generators")) s.generators.push_back(aut_from_json(*s.curve, g));
    s.t = get_field<std::size_t>(j, "t");
    s.m = get_field<std::size_t>(j, "m");
    if (j.contains("include_pole_fiber")) s.include_pole_fiber = get_field<bool>(j, "include_pole_fiber");
    if (j.contains("pole_point") && !j["pole_point"].is_null()) s.pole_point = point_from_json(*s.curve, j["pole_point"]);
    return s;
}

LrcCode build_from_spec(const CodeSpec& s) {
    const Subgroup g = closure(*s.curve, s.generators);
    BuildOptions opts;
    opts.include_pole_fiber = s.include_pole_fiber;
    opts.pole_point = s.pole_point;
    return build_code(s.curve, g, s.t, s.m, opts);
}

void write_generator(std::ostream& out, const LrcCode& code) {
    Json h;
    h["n"] = code.n;
    h["k"] = code.k;
    h["q"] = code.field().q();
    h["repair_groups"] = code.repair_groups;
    out << h.dump() << '\n';
    for (const auto& row : code.generator) {
        for (std::size_t b = 0; b < row.size(); ++b) out << (b ? " " : "") << row[b];
        out << '\n';
    }
}

GeneratorFile read_generator(std::istream& in) {
    GeneratorFile g;
    std::string line;
    if (!std::getline(in, line)) fail(ErrorKind::Io, "generator file is empty");
    Json h;
    try {
        h = Json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::Io, std::string("bad generator header: ") + e.what());
    }
    g.n = get_field<std::size_t>(h, "n");
    g.k = get_field<std::size_t>(h, "k");
    g.q = get_field<std::size_t>(h, "q");
    g.repair_groups = get_field<std::vector<std::vector<std::size_t>>>(h, "repair_groups");
    for (std::size_t a = 0; a < g.k; ++a) {
        if (!std::getline(in, line)) fail(ErrorKind::Io, "generator file has too few rows");
        std::istringstream ls(line);
        std::vector<std::uint32_t> row;
        std::uint64_t v;
        while (ls >> v) {
            if (v >= g.q) fail(ErrorKind::Io, "generator entry out of range");
            row.push_back(static_cast<std::uint32_t>(v));
        }
        if (row.size() != g.n) fail(ErrorKind::Io, "generator row has the wrong length");
        g.rows.push_back(std::move(row));
    }
    return g;
}

std::size_t symbol_width(std::uint64_t q) { return q <= 256 ? 1 : 2; }

void write_symbols(std::ostream& out, const std::vector<std::uint32_t>& symbols, std::uint64_t q) {
    const std::size_t w = symbol_width(q);
    for (auto s : symbols) {
        out.put(static_cast<char>(s & 0xff));
        if (w == 2) out.put(static_cast<char>((s >> 8) & 0xff));
    }
}

std::vector<std::uint32_t> read_symbols(std::istream& in, std::uint64_t q) {
    const std::size_t w = symbol_width(q);
    std::vector<std::uint32_t> out;
    while (true) {
        const int lo = in.get();
        if (lo == std::char_traits<char>::eof()) break;
        std::uint32_t v = static_cast<std::uint8_t>(lo);
        if (w == 2) {
            const int hi = in.get();
            if (hi == std::char_traits<char>::eof()) fail(ErrorKind::Io, "truncated 16-bit symbol");
            v |= static_cast<std::uint32_t>(static_cast<std::uint8_t>(hi)) << 8;
        }
        if (v >= q) fail(ErrorKind::Io, "symbol " + std::to_string(v) + " is outside the field");
        out.push_back(v);
    }
    return out;
}

void write_bitmap(std::ostream& out, const std::vector<bool>& bits) {
    for (std::size_t i = 0; i < bits.size(); i += 8) {
        unsigned char byte = 0;
        for (std::size_t b = 0; b < 8 && i + b < bits.size(); ++b)
            if (bits[i + b]) byte |= static_cast<unsigned char>(1u << b);
        out.put(static_cast<char>(byte));
    }
}

std::vector<bool> read_bitmap(std::istream& in, std::size_t count) {
    std::vector<bool> bits(count, false);
    for (std::size_t i = 0; i < count; i += 8) {
        const int byte = in.get();
        if (byte == std::char_traits<char>::eof()) fail(ErrorKind::Io, "erasure bitmap is too short");
        for (std::size_t b = 0; b < 8 && i + b < count; ++b) bits[i + b] = (byte >> b) & 1;
    }
    return bits;
}

}  // namespace eclrc
