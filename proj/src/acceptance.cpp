#include "eclrc/acceptance.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "eclrc/lrc.hpp"

namespace eclrc {

namespace {

// Collects failed checks; a criterion passes when nothing was recorded.
struct Checker {
    std::vector<std::string> failures;
    std::ostringstream notes;
    void operator()(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

using Body = std::function<void(Checker&, std::mt19937_64&)>;

CriterionResult run_one(int id, const std::string& name, std::uint64_t seed, const Body& body) {
    CriterionResult res;
    res.id = id;
    res.name = name;
    Checker ck;
    std::mt19937_64 rng(seed * 1000003ULL + static_cast<std::uint64_t>(id));
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(ck, rng);
    } catch (const Error& e) {
        ck.failures.push_back(std::string("unexpected error ") + std::string(to_string(e.kind())) + ": " + e.what());
    } catch (const std::exception& e) {
        ck.failures.push_back(std::string("unexpected exception: ") + e.what());
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    res.pass = ck.failures.empty();
    res.detail = ck.notes.str();
    while (!res.detail.empty() && res.detail.back() == ' ') res.detail.pop_back();
    for (const auto& f : ck.failures) res.detail += (res.detail.empty() ? "" : "; ") + std::string("FAILED ") + f;
    return res;
}

// Affine solutions of the curve equation counted straight from the
// coefficients, plus one for O.
std::uint64_t brute_count(const Curve& c) {
    const Field& f = c.field();
    std::uint64_t n = 1;
    for (std::uint32_t xi = 0; xi < f.q(); ++xi)
        for (std::uint32_t yi = 0; yi < f.q(); ++yi) {
            const Element x(f, xi), y(f, yi);
            const Element lhs = y * y + c.a1() * x * y + c.a3() * y;
            const Element rhs = x * x * x + c.a2() * x * x + c.a4() * x + c.a6();
            if (lhs == rhs) ++n;
        }
    return n;
}

CurvePtr y2y_x3(std::uint32_t a) { return Curve::parse(make_field(2, a), "y2+y=x3"); }

std::optional<Point> reference_pole_point(const Curve& c) {
    const Field& f = c.field();
    for (const auto& p : c.points())
        if (!p.infinity && (p.y * p.y * p.y + p.y + f.one()).is_zero()) return p;
    return std::nullopt;
}

std::vector<std::uint32_t> random_message(const LrcCode& code, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> sym(0, code.field().q() - 1);
    std::vector<std::uint32_t> msg(code.k);
    for (auto& s : msg) s = sym(rng);
    return msg;
}

struct Fixtures {
    LrcCode big;    // [72, 9, 63] over GF(64)
    LrcCode small;  // [8, 3, 4] over GF(16)
};

Fixtures& fixtures() {
    static Fixtures fx = [] {
        Fixtures out;
        const CurvePtr c64 = y2y_x3(6);
        BuildOptions opts;
        opts.pole_point = reference_pole_point(*c64);
        out.big = build_code(c64, order9_abelian(*c64), 2, 8, opts);
        const CurvePtr c16 = find_maximal_curve(16);
        out.small = build_code(c16, closure(*c16, {CurveAut::from_stab(involution(*c16))}), 3, 4);
        return out;
    }();
    return fx;
}

// The line through P and Q (tangent when equal, vertical through O), built
// from the coordinates alone.
FuncElem line_through(const CurvePtr& c, const Point& p, const Point& q) {
    const Field& f = c->field();
    const FuncElem x = FuncElem::x(c), y = FuncElem::y(c);
    if (p.infinity && q.infinity) return FuncElem::constant(c, f.one());
    if (p.infinity || q.infinity) {
        const Point& a = p.infinity ? q : p;
        return x - FuncElem::constant(c, a.x);
    }
    Element lambda;
    if (p.x != q.x) {
        lambda = (q.y - p.y) / (q.x - p.x);
    } else {
        const Element den = f.from_int(2) * p.y + c->a1() * p.x + c->a3();
        if (p.y != q.y || den.is_zero()) return x - FuncElem::constant(c, p.x);
        lambda = (f.from_int(3) * p.x * p.x + f.from_int(2) * c->a2() * p.x + c->a4() - c->a1() * p.y) / den;
    }
    return y - FuncElem::constant(c, p.y) - (x - FuncElem::constant(c, p.x)).scaled(lambda);
}

void criterion1(Checker& ck, std::mt19937_64&) {
    for (std::uint32_t a : {2u, 6u}) {
        const CurvePtr c = y2y_x3(a);
        const std::int64_t q = c->field().q(), s = isqrt(q);
        const std::uint64_t want = static_cast<std::uint64_t>(q + 2 * s + 1);
        ck(c->order() == want, "y^2+y=x^3 over GF(" + std::to_string(q) + ") has " + std::to_string(c->order()) + " points");
        ck(brute_count(*c) == want, "direct count over GF(" + std::to_string(q) + ")");
        ck(c->is_maximal(), "maximality flag over GF(" + std::to_string(q) + ")");
        ck.notes << "N(GF(" << q << "))=" << c->order() << " ";
    }
    for (std::int64_t q : {4, 9, 16, 25, 49, 64}) {
        const CurvePtr c = find_maximal_curve(static_cast<std::uint64_t>(q));
        const std::uint64_t want = static_cast<std::uint64_t>(q + 2 * isqrt(q) + 1);
        ck(c->order() == want && brute_count(*c) == want, "find_maximal_curve(" + std::to_string(q) + ")");
        const GroupStructure gs = c->group_structure();
        const auto side = static_cast<std::uint64_t>(isqrt(q) + 1);
        ck(gs.n1 == side && gs.n2 == side, "maximal group structure over GF(" + std::to_string(q) + ")");
        ck.notes << "q=" << q << ":" << c->equation() << " ";
    }
}

void criterion2(Checker& ck, std::mt19937_64&) {
    auto expect = [&](const CurvePtr& c, std::size_t want, const std::string& label) {
        const auto stabs = enumerate_stabilizer(*c);
        std::set<std::array<std::uint32_t, 4>> keys;
        for (const auto& s : stabs) {
            ck(preserves_equation(*c, s), label + ": scan returned a non-automorphism");
            keys.insert(s.key());
        }
        ck(stabs.size() == want && keys.size() == want,
           label + " stabilizer order " + std::to_string(stabs.size()) + " != " + std::to_string(want));
        ck.notes << label << "=" << stabs.size() << " ";
    };
    expect(y2y_x3(2), 24, "GF(4)");
    expect(y2y_x3(4), 24, "GF(16)");
    expect(y2y_x3(6), 24, "GF(64)");
    expect(find_maximal_curve(9), 12, "GF(9)");
    expect(find_maximal_curve(25), 6, "GF(25)");
    expect(find_maximal_curve(49), 4, "GF(49)");
    // First short Weierstrass curve over GF(11) with j outside {0, 1728}.
    const FieldPtr f11 = make_field(11, 1);
    for (std::uint32_t a4 = 1; a4 < 11; ++a4) {
        for (std::uint32_t a6 = 1; a6 < 11; ++a6) {
            CurvePtr c;
            try {
                c = Curve::create(f11, std::array<std::uint32_t, 5>{0, 0, 0, a4, a6});
            } catch (const Error&) {
                continue;
            }
            if (c->j_invariant().is_zero() || c->j_invariant() == f11->from_int(1728)) continue;
            expect(c, 2, "GF(11) " + c->equation());
            return;
        }
    }
    ck(false, "no generic curve found over GF(11)");
}

void criterion3(Checker& ck, std::mt19937_64&) {
    const CurvePtr c = y2y_x3(2);
    const Subgroup g = full_group(*c);
    ck(g.order() == 216, "full group has " + std::to_string(g.order()) + " elements");
    const auto& pts = c->points();
    // Point images of every element, then composition checked against them.
    std::vector<std::vector<std::size_t>> image(g.order(), std::vector<std::size_t>(pts.size()));
    for (std::size_t i = 0; i < g.order(); ++i)
        for (std::size_t p = 0; p < pts.size(); ++p) {
            const StabAut& al = g.elements[i].stab;
            const Element u2 = al.u * al.u;
            const Point moved = pts[p].infinity
                                    ? pts[p]
                                    : Point::affine(u2 * pts[p].x + al.r, u2 * al.u * pts[p].y + u2 * al.s * pts[p].x + al.t);
            image[i][p] = c->index_of(c->add(moved, g.elements[i].translate));
        }
    std::size_t bad = 0, outside = 0;
    for (std::size_t i = 0; i < g.order(); ++i)
        for (std::size_t j = 0; j < g.order(); ++j) {
            const CurveAut ab = compose(*c, g.elements[i], g.elements[j]);
            if (!g.contains(ab)) ++outside;
            for (std::size_t p = 0; p < pts.size(); ++p)
                if (c->index_of(apply_to_point(*c, ab, pts[p])) != image[i][image[j][p]]) {
                    ++bad;
                    break;
                }
        }
    ck(bad == 0, std::to_string(bad) + " pairs disagree with pointwise composition");
    ck(outside == 0, std::to_string(outside) + " products leave the group");
    ck.notes << "|Aut|=" << g.order() << " pairs=" << g.order() * g.order();
}

void criterion4(Checker& ck, std::mt19937_64&) {
    const CurvePtr c = y2y_x3(2);
    std::vector<CurveAut> trans, stabs;
    for (const auto& p : c->points())
        if (!p.infinity) trans.push_back(CurveAut::translation(c->field(), p));
    for (const auto& s : enumerate_stabilizer(*c))
        if (!s.is_identity()) stabs.push_back(CurveAut::from_stab(s));
    const auto ts = enumerate_subgroups(*c, trans);
    const auto as = enumerate_subgroups(*c, stabs);
    std::size_t agree = 0, pairs = 0, subgroups = 0;
    for (const auto& t : ts)
        for (const auto& a : as) {
            ++pairs;
            std::vector<CurveAut> gens = t.elements;
            gens.insert(gens.end(), a.elements.begin(), a.elements.end());
            const bool brute = closure(*c, gens).order() == t.order() * a.order();
            const bool crit = ta_criterion(*c, t, a);
            bool thrown = false;
            try {
                ta_subgroup(*c, t, a);
            } catch (const Error& e) {
                thrown = e.kind() == ErrorKind::NotASubgroup;
            }
            if (brute == crit && thrown == !crit) ++agree;
            if (brute) ++subgroups;
        }
    ck(ts.size() == 6, "expected 6 translation subgroups of Z/3 x Z/3, got " + std::to_string(ts.size()));
    ck(as.size() == 15, "expected 15 stabilizer subgroups, got " + std::to_string(as.size()));
    ck(agree == pairs, std::to_string(pairs - agree) + " of " + std::to_string(pairs) + " pairs disagree");
    ck.notes << "T-subgroups=" << ts.size() << " A-subgroups=" << as.size() << " pairs=" << pairs
             << " TA-subgroups=" << subgroups;
}

void criterion5(Checker& ck, std::mt19937_64&) {
    for (std::uint32_t a : {2u, 4u}) {
        const CurvePtr c = y2y_x3(a);
        const Subgroup all = full_group(*c);
        std::size_t best = 0, best_mixed = 0;
        for (const auto& p : c->points()) {
            const CurveAut tq = CurveAut::translation(c->field(), p);
            for (const auto& s : all.elements) {
                if (s.is_identity()) continue;
                if (!(compose(*c, tq, s) == compose(*c, s, tq))) continue;
                const Subgroup g = closure(*c, {tq, s});
                ck(is_abelian(*c, g), "commuting generators gave a non-abelian group");
                best = std::max(best, g.order());
                if (!s.stab.is_identity()) best_mixed = std::max(best_mixed, g.order());
            }
        }
        const std::string label = "GF(" + std::to_string(c->field().q()) + ")";
        ck(best <= 9, label + " abelian order " + std::to_string(best) + " exceeds 9");
        ck(best_mixed == 9, label + " order 9 with a nontrivial stabilizer part not reached");
        ck(max_abelian_scan(*c) == best_mixed, label + " library scan disagrees with brute force");
        const Subgroup g9 = order9_abelian(*c);
        ck(g9.order() == 9 && is_abelian(*c, g9), label + " preset group is not abelian of order 9");
        ck.notes << label << " max=" << best << " ";
    }
}

void criterion6(Checker& ck, std::mt19937_64&) {
    const LrcCode& code = fixtures().big;
    const CurvePtr c = code.curve;
    const Field& f = c->field();
    const Subgroup g = order9_abelian(*c);
    ck(g.order() == 9, "G has order " + std::to_string(g.order()));
    ck(is_abelian(*c, g), "G is not abelian");
    std::size_t ramified = 0, free_count = 0;
    for (const auto& o : orbits(*c, g)) {
        if (o.size() == g.order()) ++free_count;
        else ramified += o.size();
    }
    ck(ramified == 9, std::to_string(ramified) + " points in non-free orbits");
    ck(free_count == 8, std::to_string(free_count) + " free orbits");

    const FuncElem y = FuncElem::y(c), one = FuncElem::constant(c, f.one());
    const FuncElem ref = y * (y + one) / (y * y * y + y + one);
    const FuncElem ratio = code.z / ref;
    ck(ratio.is_constant(), "z is not a scalar multiple of y(y+1)/(y^3+y+1)");

    Divisor want;
    want.add(Point::at_infinity(), 3);
    want.add(Point::affine(f.zero(), f.zero()), 3);
    want.add(Point::affine(f.zero(), f.one()), 3);
    std::size_t poles = 0;
    for (const auto& p : c->points())
        if (!p.infinity && (p.y * p.y * p.y + p.y + f.one()).is_zero()) {
            want.add(p, -1);
            ++poles;
        }
    ck(poles == 9, "reference pole set has " + std::to_string(poles) + " points");
    ck(principal_divisor(code.z) == want, "principal divisor of z differs from 3O+3(0,0)+3(0,1)-sum P_j");
    for (const auto& e : g.elements)
        ck(pullback(code.z, e) == code.z, "z is not invariant under an element of G");
    ck.notes << "z=" << code.z.to_string() << " free=" << free_count << " ramified=" << ramified;
}

void criterion7(Checker& ck, std::mt19937_64& rng) {
    const LrcCode& code = fixtures().big;
    const Field& f = code.field();
    ck(code.n == 72 && code.k == 9 && code.d_design == 63 && code.r == 8, "parameters differ from [72,9,63], r=8");
    Matrix gm(f, code.k, code.n);
    for (std::size_t a = 0; a < code.k; ++a)
        for (std::size_t b = 0; b < code.n; ++b) gm(a, b) = code.generator[a][b];
    ck(gm.rank() == 9, "generator rank is not 9");

    std::size_t repair_bad = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto word = encode(code, random_message(code, rng));
        for (std::size_t idx = 0; idx < code.n; ++idx) {
            std::vector<bool> erased(code.n, false);
            erased[idx] = true;
            auto received = word;
            received[idx] = 0;
            if (repair(code, received, erased, idx) != word[idx]) ++repair_bad;
        }
    }
    ck(repair_bad == 0, std::to_string(repair_bad) + " repairs failed");

    std::size_t min_seen = code.n;
    for (int trial = 0; trial < 100000; ++trial) {
        auto msg = random_message(code, rng);
        if (std::all_of(msg.begin(), msg.end(), [](std::uint32_t s) { return s == 0; })) msg[0] = 1;
        min_seen = std::min(min_seen, weight(encode(code, msg)));
    }
    ck(min_seen >= 63, "random codeword of weight " + std::to_string(min_seen));

    const auto witness = min_weight_witness(code);
    ck(weight(witness) == 63, "witness has weight " + std::to_string(weight(witness)));
    const std::size_t bound = code.n - code.k - (code.k + code.r - 1) / code.r + 2;
    ck(bound == 63 && singleton_bound(code.n, code.k, code.r) == 63, "optimality identity fails");
    const OptimalityReport rep = verify_optimal(code, false);
    ck(rep.certified && rep.identity_holds, "verify_optimal does not certify the code");

    std::size_t decode_bad = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const auto msg = random_message(code, rng);
        const auto word = encode(code, msg);
        std::vector<std::size_t> perm(code.n);
        for (std::size_t i = 0; i < code.n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<bool> erased(code.n, false);
        auto received = word;
        for (std::size_t i = 0; i < 62; ++i) {
            erased[perm[i]] = true;
            received[perm[i]] = 0;
        }
        if (erasure_decode(code, received, erased) != msg) ++decode_bad;
    }
    ck(decode_bad == 0, std::to_string(decode_bad) + " erasure decodes failed");
    ck.notes << "[" << code.n << "," << code.k << "," << code.d_design << "] r=" << code.r
             << " min sampled weight=" << min_seen << " witness=" << weight(witness);
}

void criterion8(Checker& ck, std::mt19937_64&) {
    const LrcCode& code = fixtures().small;
    const Field& f = code.field();
    ck(code.n == 8 && code.k == 3 && code.r == 1 && code.d_design == 4, "parameters differ from [8,3,4], r=1");
    std::vector<std::vector<std::uint32_t>> words;
    std::size_t dmin = code.n;
    for (std::uint32_t m0 = 0; m0 < f.q(); ++m0)
        for (std::uint32_t m1 = 0; m1 < f.q(); ++m1)
            for (std::uint32_t m2 = 0; m2 < f.q(); ++m2) {
                words.push_back(encode(code, {m0, m1, m2}));
                if (m0 || m1 || m2) dmin = std::min(dmin, weight(words.back()));
            }
    ck(dmin == 4, "exhaustive minimum distance " + std::to_string(dmin));
    ck(min_distance_exact(code) == 4, "library exact distance differs");

    // For each coordinate i, restrictions to the rest of its repair group
    // determine c_i: no restriction may occur with two different values.
    std::size_t clashes = 0;
    for (std::size_t i = 0; i < code.n; ++i) {
        const auto& group = code.repair_groups[code.group_of[i]];
        std::map<std::vector<std::uint32_t>, std::uint32_t> seen;
        for (const auto& w : words) {
            std::vector<std::uint32_t> proj;
            for (auto col : group)
                if (col != i) proj.push_back(w[col]);
            const auto [it, fresh] = seen.emplace(proj, w[i]);
            if (!fresh && it->second != w[i]) ++clashes;
        }
    }
    ck(clashes == 0, std::to_string(clashes) + " locality clashes");
    ck(singleton_bound(code.n, code.k, code.r) == 4 && code.n - code.k - code.k + 2 == 4, "optimality identity fails");
    const OptimalityReport rep = verify_optimal(code, true);
    ck(rep.d_exact && *rep.d_exact == 4 && rep.certified, "verify_optimal does not certify the code");
    ck.notes << "exact d=" << dmin << " over " << words.size() << " codewords";
}

void criterion9(Checker& ck, std::mt19937_64& rng) {
    const CurvePtr c = find_maximal_curve(16);
    const auto& pts = c->points();
    std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
    std::uniform_int_distribution<int> deg_dist(1, 12), coef(-2, 3);
    for (int trial = 0; trial < 50; ++trial) {
        const int target = deg_dist(rng);
        Divisor d;
        const std::size_t support = 1 + pick(rng) % 6;
        for (std::size_t i = 0; i < support; ++i) d.add(pts[pick(rng)], coef(rng));
        // Settle the degree on one more random point.
        d.add(pts[pick(rng)], target - d.degree());
        if (d.degree() != target) {
            ck(false, "divisor construction");
            continue;
        }
        const auto basis = riemann_roch_basis(c, d);
        ck(basis.size() == static_cast<std::size_t>(target),
           "dim L(D)=" + std::to_string(basis.size()) + " for deg " + std::to_string(target));
        for (const auto& b : basis)
            for (const auto& p : pts) ck(valuation(b, p) >= -d.coeff(p), "basis element outside L(D)");
        // A nonzero element of L(D) has at most deg D zeros, and more than
        // deg D points avoid supp D, so evaluation there is injective.
        std::vector<Point> probe;
        for (const auto& p : pts)
            if (d.coeff(p) == 0) probe.push_back(p);
        if (probe.size() > static_cast<std::size_t>(target)) {
            Matrix mm(c->field(), basis.size(), probe.size());
            for (std::size_t i = 0; i < basis.size(); ++i)
                for (std::size_t j = 0; j < probe.size(); ++j) mm(i, j) = evaluate(basis[i], probe[j])->index();
            ck(mm.rank() == basis.size(), "basis is linearly dependent");
        }
    }
    for (int trial = 0; trial < 100; ++trial) {
        FuncElem f = FuncElem::constant(c, c->field().one());
        const int factors = 1 + static_cast<int>(pick(rng) % 4);
        for (int i = 0; i < factors; ++i) {
            const FuncElem l = line_through(c, pts[pick(rng)], pts[pick(rng)]);
            f = (pick(rng) % 2) ? f * l : f / l;
        }
        const Divisor div = principal_divisor(f);
        ck(div.degree() == 0, "principal divisor of nonzero degree");
        ck(abel_sum(*c, div).infinity, "Abel sum of a principal divisor is not O");
    }
    ck.notes << "curve " << c->equation() << " N=" << pts.size();
}

void criterion10(Checker& ck, std::mt19937_64&) {
    std::size_t fibers = 0, minors = 0;
    for (const LrcCode* code : {&fixtures().big, &fixtures().small}) {
        const Field& f = code->field();
        const std::size_t r = code->r;
        auto check_fiber = [&](const std::vector<Point>& pts, const std::function<Element(std::size_t, const Point&)>& col) {
            ++fibers;
            for (std::size_t skip = 0; skip < pts.size(); ++skip) {
                Matrix mm(f, r, r);
                std::size_t row = 0;
                for (std::size_t a = 0; a < pts.size(); ++a) {
                    if (a == skip) continue;
                    for (std::size_t i = 0; i < r; ++i) mm(row, i) = col(i, pts[a]).index();
                    ++row;
                }
                ++minors;
                ck(mm.determinant() != 0, "singular minor on a fiber");
            }
        };
        for (const auto& fb : code->fibers)
            check_fiber(fb.points, [&](std::size_t i, const Point& p) { return *evaluate(code->w[i], p); });
        if (code->include_pole_fiber) {
            const FuncElem inv_z = code->z.inv();
            check_fiber(code->pole_fiber.points, [&](std::size_t i, const Point& p) {
                return i == 0 ? f.one() : *evaluate(code->w[i] * inv_z, p);
            });
        }
    }
    ck.notes << fibers << " fibers, " << minors << " minors";
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
    const std::vector<std::pair<std::string, Body>> table = {
        {"point counts and maximal curves", criterion1},
        {"stabilizer orders", criterion2},
        {"full automorphism group and composition law", criterion3},
        {"TA subgroup criterion versus closure", criterion4},
        {"abelian subgroups have order at most 9", criterion5},
        {"order-9 abelian fixture and z", criterion6},
        {"[72,9,63] code with r=8", criterion7},
        {"[8,3,4] code with r=1", criterion8},
        {"Riemann-Roch dimensions and Abel sums", criterion9},
        {"repair-matrix minors", criterion10},
    };
    std::vector<CriterionResult> out;
    for (std::size_t i = 0; i < table.size(); ++i)
        out.push_back(run_one(static_cast<int>(i + 1), table[i].first, seed, table[i].second));
    return out;
}

}  // namespace eclrc
