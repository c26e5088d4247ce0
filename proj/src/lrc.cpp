#include "eclrc/lrc.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace eclrc {

std::size_t singleton_bound(std::size_t n, std::size_t k, std::size_t r) {
    if (r == 0) fail(ErrorKind::InvalidArgument, "locality must be positive");
    const std::size_t ceil_kr = (k + r - 1) / r;
    if (n + 2 < k + ceil_kr) return 0;
    return n - k - ceil_kr + 2;
}

ZeroPoleData zero_orbit(const Curve& curve, const Subgroup& g) {
    ZeroPoleData out;
    std::set<Point> orbit;
    for (const auto& e : g.elements) {
        orbit.insert(apply_to_point(curve, e, Point::at_infinity()));
        if (e.translate.infinity) ++out.a_order;
    }
    out.zero_orbit.assign(orbit.begin(), orbit.end());
    return out;
}

std::vector<Fiber> free_fibers(const Curve& curve, const Subgroup& g) {
    std::vector<Fiber> out;
    for (auto& orb : orbits(curve, g))
        if (orb.size() == g.order()) out.push_back({out.size(), std::move(orb)});
    return out;
}

namespace {

FuncElem scale_top_term(const FuncElem& f) {
    const int pu = f.u().is_zero() ? -1 : 2 * f.u().degree();
    const int pv = f.v().is_zero() ? -1 : 2 * f.v().degree() + 3;
    const Element lc = pv > pu ? f.v().lead() : f.u().lead();
    return f.scaled(lc.inv());
}

std::uint32_t power_with_zero(const Field& f, std::uint32_t base, std::size_t e) {
    if (e == 0) return 1;
    return f.pow(base, static_cast<std::int64_t>(e));
}

Element value_or_throw(const FuncElem& f, const Point& p, const char* what) {
    auto v = evaluate(f, p);
    if (!v) fail(ErrorKind::NoSuchFunction, std::string(what) + " has an unexpected pole at an evaluation point");
    return *v;
}

// Coefficient of t^-1 in the expansion at P.
std::uint32_t polar_coefficient(const FuncElem& f, const Point& p) {
    if (f.is_zero()) return 0;
    if (valuation(f, p) >= 0) return 0;
    const LocalSeries s = local_expansion(f, p, 1);
    if (s.order != -1) fail(ErrorKind::NoSuchFunction, "basis function has a pole of order above one");
    return s.coeffs[0].index();
}

// Whether the free coordinates can be chosen so that every affine form
// const_k + sum_m coef[k][m] c_m is nonzero.
bool forms_avoidable(const Field& f, const std::vector<std::uint32_t>& consts,
                     const std::vector<std::vector<std::uint32_t>>& coefs, std::size_t free_from) {
    const std::size_t dim = coefs.empty() ? 0 : coefs[0].size();
    std::size_t nonconstant = 0;
    for (std::size_t k = 0; k < consts.size(); ++k) {
        bool varies = false;
        for (std::size_t m = free_from; m < dim; ++m) varies = varies || coefs[k][m] != 0;
        if (varies) ++nonconstant;
        else if (consts[k] == 0) return false;
    }
    // Fewer hyperplanes than q cannot cover the free coordinate space.
    if (nonconstant < f.q()) return true;
    const std::size_t free = dim - free_from;
    double space = 1;
    for (std::size_t i = 0; i < free; ++i) space *= f.q();
    if (space > double(1 << 20))
        fail(ErrorKind::NoSuchFunction, "pole-condition search space too large");
    std::vector<std::uint32_t> c(free, 0);
    while (true) {
        bool ok = true;
        for (std::size_t k = 0; k < consts.size() && ok; ++k) {
            std::uint32_t acc = consts[k];
            for (std::size_t i = 0; i < free; ++i) acc = f.add(acc, f.mul(coefs[k][free_from + i], c[i]));
            ok = acc != 0;
        }
        if (ok) return true;
        std::size_t i = 0;
        while (i < free && ++c[i] == f.q()) c[i++] = 0;
        if (i == free) return false;
    }
}

bool all_minors_nonzero(const Field& f, const Rows& local) {
    const std::size_t rows = local.size(), cols = rows ? local[0].size() : 0;
    for (std::size_t skip = 0; skip < rows; ++skip) {
        Matrix mm(f, cols, cols);
        std::size_t rr = 0;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == skip) continue;
            for (std::size_t j = 0; j < cols; ++j) mm(rr, j) = local[i][j];
            ++rr;
        }
        if (mm.determinant() == 0) return false;
    }
    return true;
}

}  // namespace

FuncElem construct_z(const CurvePtr& curve, const Subgroup& g, const Fiber& pole_fiber) {
    const Curve& c = *curve;
    const ZeroPoleData zp = zero_orbit(c, g);
    if (zp.a_order < 2) fail(ErrorKind::NoSuchFunction, "the stabilizer part of G is trivial");
    const auto orbs = orbits(c, g);
    if (pole_fiber.points.size() != g.order() ||
        std::find(orbs.begin(), orbs.end(), pole_fiber.points) == orbs.end())
        fail(ErrorKind::NoSuchFunction, "pole fiber is not a free orbit of G");

    Divisor d;
    for (const auto& p : pole_fiber.points) d.add(p, 1);
    for (const auto& p : zp.zero_orbit) d.add(p, -static_cast<int>(zp.a_order));
    const auto basis = riemann_roch_basis(curve, d);
    if (basis.size() != 1) fail(ErrorKind::NoSuchFunction, "Riemann-Roch space for z is not one-dimensional");
    FuncElem z = scale_top_term(basis[0]);

    Divisor expected;
    expected -= d;
    if (!(principal_divisor(z) == expected))
        fail(ErrorKind::NoSuchFunction, "z does not have the required divisor");
    const auto& gens = g.generators.empty() ? g.elements : g.generators;
    for (const auto& s : gens)
        if (!(pullback(z, s) == z)) fail(ErrorKind::InvarianceFailure, "z is not invariant under G");
    return z;
}

std::vector<FuncElem> construct_w(const CurvePtr& curve, const Fiber& pole_fiber, std::size_t r,
                                  const Fiber* spare) {
    const Field& f = curve->field();
    if (pole_fiber.points.size() < r + 1 && r > 1)
        fail(ErrorKind::NoSuchFunction, "pole fiber has fewer than r+1 places");
    std::vector<FuncElem> w{FuncElem::constant(curve, f.one())};
    for (std::size_t i = 1; i < r; ++i) {
        Divisor d;
        for (std::size_t k = 0; k <= i; ++k) d.add(pole_fiber.points[k], 1);
        const auto basis = riemann_roch_basis(curve, d);
        const std::size_t dim = basis.size();
        std::vector<std::vector<std::uint32_t>> coefs(i + 1, std::vector<std::uint32_t>(dim));
        for (std::size_t k = 0; k <= i; ++k)
            for (std::size_t m = 0; m < dim; ++m) coefs[k][m] = polar_coefficient(basis[m], pole_fiber.points[k]);

        std::vector<std::uint32_t> chosen(dim, 0), consts(i + 1, 0);
        for (std::size_t pos = 0; pos < dim; ++pos) {
            bool placed = false;
            for (std::uint32_t val = 0; val < f.q() && !placed; ++val) {
                std::vector<std::uint32_t> trial = consts;
                for (std::size_t k = 0; k <= i; ++k) trial[k] = f.add(trial[k], f.mul(coefs[k][pos], val));
                if (forms_avoidable(f, trial, coefs, pos + 1)) {
                    chosen[pos] = val;
                    consts = std::move(trial);
                    placed = true;
                }
            }
            if (!placed) fail(ErrorKind::NoSuchFunction, "no function with the required simple poles");
        }
        FuncElem wi = FuncElem::constant(curve, f.zero());
        for (std::size_t m = 0; m < dim; ++m)
            if (chosen[m]) wi = wi + basis[m].scaled(Element(f, chosen[m]));

        // Zeros of w_i may sit at places of higher degree, so the pole
        // divisor is read off valuations at the rational points.
        Divisor poles;
        for (const auto& p : curve->points()) {
            const int v = valuation(wi, p);
            if (v < 0) poles.add(p, -v);
        }
        if (!(poles == d)) fail(ErrorKind::NoSuchFunction, "w has the wrong pole divisor");
        w.push_back(std::move(wi));
    }
    if (spare && r > 0) {
        if (spare->points.size() < r) fail(ErrorKind::InvalidArgument, "spare fiber too small");
        Matrix mm(f, r, r);
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < r; ++b) mm(a, b) = value_or_throw(w[b], spare->points[a], "w").index();
        if (mm.determinant() == 0) fail(ErrorKind::DependenceDetected, "w functions are dependent on a fiber");
    }
    return w;
}

std::vector<Fiber> select_fibers(const Curve& curve, const Subgroup& g, const FuncElem& z, std::size_t m) {
    const Divisor div = principal_divisor(z);
    std::vector<Fiber> usable;
    for (auto& fb : free_fibers(curve, g)) {
        const bool touches = std::any_of(fb.points.begin(), fb.points.end(),
                                         [&](const Point& p) { return div.coeff(p) != 0; });
        if (!touches) usable.push_back(std::move(fb));
    }
    if (m > usable.size())
        fail(ErrorKind::NotEnoughFibers, "requested " + std::to_string(m) + " fibers but only " +
                                             std::to_string(usable.size()) + " are available");
    usable.resize(m);
    return usable;
}

LrcCode build_code(const CurvePtr& curve, const Subgroup& g, std::size_t t, std::size_t m,
                   const BuildOptions& opts) {
    const Curve& c = *curve;
    const Field& f = c.field();
    LrcCode code;
    code.curve = curve;
    code.group = g;
    const ZeroPoleData zp = zero_orbit(c, g);
    code.a_order = zp.a_order;
    code.t_order = g.order() / std::max<std::size_t>(zp.a_order, 1);
    code.r = g.order() - 1;
    code.t = t;
    code.m = m;
    code.include_pole_fiber = opts.include_pole_fiber;
    if (zp.a_order < 2) fail(ErrorKind::ParameterViolation, "G must contain a nontrivial stabilizer part");
    if (code.r < 1) fail(ErrorKind::ParameterViolation, "locality must be at least 1");
    if (t < 1 || t > m) fail(ErrorKind::ParameterViolation, "need 1 <= t <= m");
    if (g.order() > f.q()) fail(ErrorKind::ParameterViolation, "|G| exceeds q");

    const auto fibers = free_fibers(c, g);
    if (fibers.empty()) fail(ErrorKind::NotEnoughFibers, "G has no free orbit");
    std::size_t pole_idx = 0;
    if (opts.pole_point) {
        pole_idx = fibers.size();
        for (std::size_t i = 0; i < fibers.size(); ++i)
            if (std::find(fibers[i].points.begin(), fibers[i].points.end(), *opts.pole_point) !=
                fibers[i].points.end())
                pole_idx = i;
        if (pole_idx == fibers.size()) fail(ErrorKind::ParameterViolation, "chosen pole point is not in a free orbit");
    }
    code.pole_fiber = fibers[pole_idx];
    code.z = construct_z(curve, g, code.pole_fiber);

    const std::size_t plain = opts.include_pole_fiber ? m - 1 : m;
    std::vector<Fiber> all_plain;
    for (const auto& fb : fibers)
        if (fb.id != pole_idx) all_plain.push_back(fb);
    code.fibers = select_fibers(c, g, code.z, std::min(plain, all_plain.size()));
    if (code.fibers.size() < plain)
        fail(ErrorKind::NotEnoughFibers, "requested " + std::to_string(plain) + " plain fibers but only " +
                                             std::to_string(code.fibers.size()) + " are available");
    code.w = construct_w(curve, code.pole_fiber, code.r, all_plain.empty() ? nullptr : &all_plain.front());

    const std::size_t r = code.r;
    code.n = m * (r + 1);
    code.k = r * t - r + 1;
    code.d_design = code.n - (t - 1) * (r + 1);

    // Basis order: (i, j) means z^j w_i.
    std::vector<std::pair<std::size_t, std::size_t>> basis;
    for (std::size_t j = 0; j < t; ++j) basis.emplace_back(0, j);
    for (std::size_t i = 1; i < r; ++i)
        for (std::size_t j = 0; j + 2 <= t; ++j) basis.emplace_back(i, j);
    if (basis.size() != code.k) fail(ErrorKind::ParameterViolation, "basis size mismatch");

    code.generator.assign(code.k, {});
    auto add_group = [&](const std::vector<Point>& pts, const Rows& local,
                         const std::function<std::uint32_t(std::size_t, std::size_t)>& entry) {
        if (!all_minors_nonzero(f, local))
            fail(ErrorKind::MinorSingular, "a local repair matrix has a singular r x r minor");
        std::vector<std::size_t> cols;
        for (std::size_t a = 0; a < pts.size(); ++a) {
            cols.push_back(code.columns.size());
            code.group_of.push_back(code.repair_groups.size());
            code.columns.push_back(pts[a]);
            for (std::size_t b = 0; b < basis.size(); ++b) code.generator[b].push_back(entry(a, b));
        }
        code.repair_groups.push_back(std::move(cols));
        code.local_matrices.push_back(local);
    };

    for (const auto& fb : code.fibers) {
        Rows local(fb.points.size(), std::vector<std::uint32_t>(r));
        std::vector<std::uint32_t> zv;
        for (std::size_t a = 0; a < fb.points.size(); ++a) {
            zv.push_back(value_or_throw(code.z, fb.points[a], "z").index());
            for (std::size_t i = 0; i < r; ++i) local[a][i] = value_or_throw(code.w[i], fb.points[a], "w").index();
        }
        add_group(fb.points, local, [&](std::size_t a, std::size_t b) {
            const auto [i, j] = basis[b];
            return f.mul(power_with_zero(f, zv[a], j), local[a][i]);
        });
    }
    if (opts.include_pole_fiber) {
        // Entries of z^(1-t) f: with s = 1/z, z^(1-t) z^j = s^(t-1-j) and
        // z^(1-t) z^j w_i = s^(t-2-j) (w_i / z).
        const FuncElem inv_z = code.z.inv();
        const auto& pts = code.pole_fiber.points;
        Rows local(pts.size(), std::vector<std::uint32_t>(r));
        std::vector<std::uint32_t> sv;
        for (std::size_t a = 0; a < pts.size(); ++a) {
            sv.push_back(value_or_throw(inv_z, pts[a], "1/z").index());
            local[a][0] = 1;
            for (std::size_t i = 1; i < r; ++i)
                local[a][i] = value_or_throw(code.w[i] * inv_z, pts[a], "w/z").index();
        }
        add_group(pts, local, [&](std::size_t a, std::size_t b) -> std::uint32_t {
            const auto [i, j] = basis[b];
            if (i == 0) return power_with_zero(f, sv[a], t - 1 - j);
            return f.mul(power_with_zero(f, sv[a], t - 2 - j), local[a][i]);
        });
    }

    Matrix gm(f, code.k, code.n);
    for (std::size_t a = 0; a < code.k; ++a)
        for (std::size_t b = 0; b < code.n; ++b) gm(a, b) = code.generator[a][b];
    if (gm.rank() != code.k) fail(ErrorKind::DependenceDetected, "generator matrix is rank deficient");
    return code;
}

std::vector<std::uint32_t> encode(const LrcCode& code, const std::vector<std::uint32_t>& message) {
    const Field& f = code.field();
    if (message.size() != code.k) fail(ErrorKind::InvalidArgument, "message length must equal k");
    std::vector<std::uint32_t> out(code.n, 0);
    for (std::size_t a = 0; a < code.k; ++a) {
        if (message[a] >= f.q()) fail(ErrorKind::InvalidArgument, "message symbol out of range");
        if (message[a] == 0) continue;
        for (std::size_t b = 0; b < code.n; ++b)
            out[b] = f.add(out[b], f.mul(message[a], code.generator[a][b]));
    }
    return out;
}

std::uint32_t repair(const LrcCode& code, const std::vector<std::uint32_t>& received,
                     const std::vector<bool>& erased, std::size_t idx) {
    const Field& f = code.field();
    if (received.size() != code.n || erased.size() != code.n)
        fail(ErrorKind::InvalidArgument, "received word has the wrong length");
    if (idx >= code.n) fail(ErrorKind::InvalidArgument, "coordinate out of range");
    if (!erased[idx]) fail(ErrorKind::NotErased, "coordinate " + std::to_string(idx) + " is not erased");
    const std::size_t gi = code.group_of[idx];
    const auto& cols = code.repair_groups[gi];
    const auto& local = code.local_matrices[gi];
    const std::size_t r = code.r;
    Matrix mm(f, r, r);
    std::vector<std::uint32_t> rhs;
    std::size_t target = 0, row = 0;
    for (std::size_t a = 0; a < cols.size(); ++a) {
        if (cols[a] == idx) {
            target = a;
            continue;
        }
        if (erased[cols[a]])
            fail(ErrorKind::TooManyErasuresInGroup, "more than one erasure in repair group " + std::to_string(gi));
        for (std::size_t b = 0; b < r; ++b) mm(row, b) = local[a][b];
        rhs.push_back(received[cols[a]]);
        ++row;
    }
    const auto coeffs = solve(mm, rhs);
    if (!coeffs) fail(ErrorKind::MinorSingular, "local repair system is singular");
    std::uint32_t acc = 0;
    for (std::size_t b = 0; b < r; ++b) acc = f.add(acc, f.mul(local[target][b], (*coeffs)[b]));
    return acc;
}

std::vector<std::uint32_t> erasure_decode(const LrcCode& code, const std::vector<std::uint32_t>& received,
                                          const std::vector<bool>& erased) {
    const Field& f = code.field();
    if (received.size() != code.n || erased.size() != code.n)
        fail(ErrorKind::InvalidArgument, "received word has the wrong length");
    std::vector<std::size_t> keep;
    for (std::size_t b = 0; b < code.n; ++b)
        if (!erased[b]) keep.push_back(b);
    Matrix sys(f, keep.size(), code.k);
    std::vector<std::uint32_t> rhs;
    for (std::size_t a = 0; a < keep.size(); ++a) {
        for (std::size_t b = 0; b < code.k; ++b) sys(a, b) = code.generator[b][keep[a]];
        rhs.push_back(received[keep[a]]);
    }
    if (sys.rank() != code.k) fail(ErrorKind::Undecodable, "surviving coordinates do not determine the message");
    auto msg = solve(sys, rhs);
    if (!msg) fail(ErrorKind::Undecodable, "surviving symbols are inconsistent with the code");
    return *msg;
}

std::size_t weight(const std::vector<std::uint32_t>& word) {
    return static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](std::uint32_t c) { return c != 0; }));
}

std::size_t min_distance_exact(const LrcCode& code) {
    const Field& f = code.field();
    double space = 1;
    for (std::size_t i = 0; i < code.k; ++i) space *= f.q();
    if (space > double(1 << 24))
        fail(ErrorKind::SearchSpaceTooLarge, "q^k exceeds the exhaustive-search limit 2^24");
    // Up to scaling, every nonzero message has its first nonzero entry equal to 1.
    std::size_t best = code.n;
    std::vector<std::uint32_t> acc(code.n);
    std::function<void(std::size_t, std::vector<std::uint32_t>&)> walk = [&](std::size_t pos,
                                                                              std::vector<std::uint32_t>& word) {
        if (pos == code.k) {
            best = std::min(best, weight(word));
            return;
        }
        std::vector<std::uint32_t> next(code.n);
        for (std::uint32_t c = 0; c < f.q(); ++c) {
            for (std::size_t b = 0; b < code.n; ++b) next[b] = f.add(word[b], f.mul(c, code.generator[pos][b]));
            walk(pos + 1, next);
        }
    };
    for (std::size_t lead = 0; lead < code.k; ++lead) {
        std::vector<std::uint32_t> word = code.generator[lead];
        walk(lead + 1, word);
    }
    return best;
}

std::vector<std::uint32_t> witness_message(const LrcCode& code) {
    const Field& f = code.field();
    if (code.fibers.size() + 1 < code.t)
        fail(ErrorKind::NotEnoughFibers, "not enough plain fibers for a minimum-weight witness");
    Poly prod(f, {1});
    for (std::size_t i = 0; i + 1 < code.t; ++i) {
        const Element beta = value_or_throw(code.z, code.fibers[i].points.front(), "z");
        prod = prod * Poly::linear(beta);
    }
    std::vector<std::uint32_t> msg(code.k, 0);
    for (int j = 0; j <= prod.degree(); ++j) msg[static_cast<std::size_t>(j)] = prod.coeffs()[j];
    return msg;
}

std::vector<std::uint32_t> min_weight_witness(const LrcCode& code) { return encode(code, witness_message(code)); }

OptimalityReport verify_optimal(const LrcCode& code, bool try_exact) {
    OptimalityReport rep;
    rep.n = code.n;
    rep.k = code.k;
    rep.r = code.r;
    rep.d_design = code.d_design;
    rep.singleton_bound = singleton_bound(code.n, code.k, code.r);
    rep.identity_holds = rep.singleton_bound == code.d_design;
    rep.witness_weight = weight(min_weight_witness(code));
    if (try_exact) {
        try {
            rep.d_exact = min_distance_exact(code);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::SearchSpaceTooLarge) throw;
        }
    }
    if (rep.d_exact) rep.certified = *rep.d_exact == code.d_design;
    else rep.certified = rep.witness_weight == code.d_design;
    return rep;
}

std::vector<ParameterRow> parameter_table(std::uint64_t q) {
    std::vector<ParameterRow> rows;
    std::uint32_t p = 0, a = 0;
    if (!prime_power(q, p, a)) fail(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
    const auto qi = static_cast<std::int64_t>(q);
    const std::int64_t s = isqrt(qi);
    if (a % 2 != 0 || s * s != qi) return rows;
    auto ceil_div = [](std::int64_t num, std::int64_t den) -> std::int64_t {
        if (num <= 0) return -((-num) / den);
        return (num + den - 1) / den;
    };
    auto emit = [&](const std::string& fam, std::size_t h, std::size_t ao, std::int64_t r, std::int64_t mmax,
                    bool strict) {
        for (std::int64_t m = 1; m <= mmax; ++m)
            for (std::int64_t t = 1; strict ? t < m : t <= m; ++t) {
                ParameterRow row;
                row.family = fam;
                row.h = h;
                row.a_order = ao;
                row.r = static_cast<std::size_t>(r);
                row.t = static_cast<std::size_t>(t);
                row.m = static_cast<std::size_t>(m);
                row.n = static_cast<std::size_t>(m * (r + 1));
                row.k = static_cast<std::size_t>(r * (t - 1) + 1);
                row.d = static_cast<std::size_t>((m - t + 1) * (r + 1));
                rows.push_back(row);
            }
    };
    // Locality 2h - 1 from the involution and any translation subgroup.
    const std::int64_t big = (s + 1) * (s + 1);
    for (std::int64_t h = 1; h <= big; ++h) {
        if (big % h) continue;
        const std::int64_t r = 2 * h - 1;
        emit("involution", static_cast<std::size_t>(h), 2, r, ceil_div(qi + 2 * s - 2 * r - 1, r + 1), true);
    }
    // Locality h^2 |A| - 1 from h-torsion and a stabilizer subgroup.
    std::vector<std::size_t> orders;
    if (p == 2) orders = {2, 3, 4, 6, 8, 12, 24};
    else if (p == 3) orders = {2, 3, 4, 6, 12};
    else {
        std::set<std::size_t> u;
        if (p % 3 == 2) u.insert({2, 3, 6});
        if (p % 4 == 3) u.insert({2, 4});
        orders.assign(u.begin(), u.end());
    }
    for (std::int64_t h = 1; h <= s + 1; ++h) {
        if ((s + 1) % h) continue;
        for (auto ao : orders) {
            const std::int64_t r = h * h * static_cast<std::int64_t>(ao) - 1;
            emit("torsion-stabilizer", static_cast<std::size_t>(h), ao, r,
                 ceil_div(qi + 2 * s - 2 * h * h - r, r + 1), true);
        }
    }
    // Locality 8 from the order-9 abelian group when q is an odd power of 4.
    if (p == 2 && a % 4 == 2) emit("order-9-abelian", 3, 3, 8, (qi + 2 * s - 8) / 9, false);
    return rows;
}

}  // namespace eclrc
