#include "eclrc/funcfield.hpp"
#include "eclrc/linalg.hpp"

#include <algorithm>

namespace eclrc {

namespace {

const Curve& same_curve(const FuncElem& a, const FuncElem& b) {
    if (!a.curve() || a.curve() != b.curve()) fail(ErrorKind::FieldMismatch, "functions on different curves");
    return *a.curve();
}

Poly h_poly(const Curve& c) { return Poly(c.field(), {c.a3().index(), c.a1().index()}); }

Poly f_poly(const Curve& c) {
    return Poly(c.field(), {c.a6().index(), c.a4().index(), c.a2().index(), 1});
}

Poly divide_exact(const Poly& a, const Poly& b) { return divmod(a, b).first; }

std::string poly_string(const Poly& p) {
    if (p.is_zero()) return "0";
    const std::uint32_t prime = p.field()->p();
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const auto c = p.coeffs()[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        const bool unit = c == 1 && i > 0;
        if (!unit) out += (c < prime ? "" : "g") + std::to_string(c);
        if (i > 0) out += (unit ? "" : "*") + std::string("x") + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return out;
}

}  // namespace

FuncElem::FuncElem(CurvePtr curve, Poly u, Poly v, Poly d)
    : curve_(std::move(curve)), u_(std::move(u)), v_(std::move(v)), d_(std::move(d)) {
    if (!curve_) fail(ErrorKind::InvalidArgument, "function needs a curve");
    const Field* f = &curve_->field();
    if (u_.field() == nullptr) u_ = Poly(*f);
    if (v_.field() == nullptr) v_ = Poly(*f);
    if (u_.field() != f || v_.field() != f || d_.field() != f)
        fail(ErrorKind::FieldMismatch, "function coefficients over another field");
    normalize();
}

void FuncElem::normalize() {
    if (d_.is_zero()) fail(ErrorKind::DivisionByZero, "function with zero denominator");
    const Field& f = curve_->field();
    if (u_.is_zero() && v_.is_zero()) {
        d_ = Poly(f, {1});
        return;
    }
    const Poly g = gcd(gcd(u_, v_), d_);
    if (g.degree() > 0) {
        u_ = divide_exact(u_, g);
        v_ = divide_exact(v_, g);
        d_ = divide_exact(d_, g);
    }
    const Element s = d_.lead().inv();
    u_ = u_.scaled(s);
    v_ = v_.scaled(s);
    d_ = d_.scaled(s);
}

FuncElem FuncElem::from_y_powers(CurvePtr curve, const std::vector<Poly>& numer, Poly d) {
    const Curve& c = *curve;
    const Field& f = c.field();
    const Poly h = h_poly(c), F = f_poly(c);
    Poly p(f, {1}), q(f);  // y^j = p + q y
    Poly u(f), v(f);
    for (const auto& n : numer) {
        u += n * p;
        v += n * q;
        Poly np = q * F;
        Poly nq = p - q * h;
        p = std::move(np);
        q = std::move(nq);
    }
    return FuncElem(std::move(curve), std::move(u), std::move(v), std::move(d));
}

FuncElem FuncElem::constant(CurvePtr curve, const Element& c) {
    const Field& f = curve->field();
    return FuncElem(std::move(curve), Poly::constant(c), Poly(f), Poly(f, {1}));
}

FuncElem FuncElem::x(CurvePtr curve) {
    const Field& f = curve->field();
    return FuncElem(std::move(curve), Poly::x(f), Poly(f), Poly(f, {1}));
}

FuncElem FuncElem::y(CurvePtr curve) {
    const Field& f = curve->field();
    return FuncElem(std::move(curve), Poly(f), Poly(f, {1}), Poly(f, {1}));
}

FuncElem FuncElem::operator-() const { return FuncElem(curve_, -u_, -v_, d_); }

FuncElem FuncElem::scaled(const Element& c) const { return FuncElem(curve_, u_.scaled(c), v_.scaled(c), d_); }

FuncElem FuncElem::inv() const {
    if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of the zero function");
    const Poly h = h_poly(*curve_), F = f_poly(*curve_);
    const Poly norm = u_ * u_ - u_ * v_ * h - v_ * v_ * F;
    return FuncElem(curve_, d_ * (u_ - v_ * h), -(d_ * v_), norm);
}

FuncElem FuncElem::pow(std::int64_t e) const {
    FuncElem base = e < 0 ? inv() : *this;
    std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
    FuncElem acc = constant(curve_, curve_->field().one());
    while (n) {
        if (n & 1) acc = acc * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return acc;
}

FuncElem operator+(const FuncElem& a, const FuncElem& b) {
    same_curve(a, b);
    if (a.d_ == b.d_) return FuncElem(a.curve_, a.u_ + b.u_, a.v_ + b.v_, a.d_);
    return FuncElem(a.curve_, a.u_ * b.d_ + b.u_ * a.d_, a.v_ * b.d_ + b.v_ * a.d_, a.d_ * b.d_);
}

FuncElem operator-(const FuncElem& a, const FuncElem& b) { return a + (-b); }

FuncElem operator*(const FuncElem& a, const FuncElem& b) {
    const Curve& c = same_curve(a, b);
    const Poly h = h_poly(c), F = f_poly(c);
    const Poly vv = a.v_ * b.v_;
    return FuncElem(a.curve_, a.u_ * b.u_ + vv * F, a.u_ * b.v_ + b.u_ * a.v_ - vv * h, a.d_ * b.d_);
}

FuncElem operator/(const FuncElem& a, const FuncElem& b) { return a * b.inv(); }

std::string FuncElem::to_string() const {
    std::string num;
    if (!u_.is_zero()) num = poly_string(u_);
    if (!v_.is_zero()) num += (num.empty() ? "" : "+") + ("(" + poly_string(v_) + ")*y");
    if (num.empty()) num = "0";
    if (d_.degree() == 0) return num;
    return "(" + num + ")/(" + poly_string(d_) + ")";
}

FuncElem normalize(const FuncElem& f) { return FuncElem(f.curve(), f.u(), f.v(), f.d()); }

std::string_view to_string(Uniformizer u) {
    switch (u) {
    case Uniformizer::XOverY: return "x/y";
    case Uniformizer::XMinusX0: return "x-x0";
    case Uniformizer::YMinusY0: return "y-y0";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Truncated power series in the local parameter. All series in one
// computation share an absolute precision n (coefficients of t^0..t^{n-1}).

namespace {

using Series = std::vector<std::uint32_t>;

struct SeriesOps {
    const Field& f;
    std::size_t n;

    Series zero() const { return Series(n, 0); }
    Series constant(std::uint32_t c) const {
        Series s(n, 0);
        if (n) s[0] = c;
        return s;
    }
    Series t_power(std::size_t k) const {
        Series s(n, 0);
        if (k < n) s[k] = 1;
        return s;
    }
    Series add(const Series& a, const Series& b) const {
        Series s(n);
        for (std::size_t i = 0; i < n; ++i) s[i] = f.add(a[i], b[i]);
        return s;
    }
    Series sub(const Series& a, const Series& b) const {
        Series s(n);
        for (std::size_t i = 0; i < n; ++i) s[i] = f.sub(a[i], b[i]);
        return s;
    }
    Series scale(const Series& a, std::uint32_t c) const {
        Series s(n);
        for (std::size_t i = 0; i < n; ++i) s[i] = f.mul(a[i], c);
        return s;
    }
    Series mul(const Series& a, const Series& b) const {
        Series s(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; i + j < n; ++j)
                if (b[j]) s[i + j] = f.add(s[i + j], f.mul(a[i], b[j]));
        }
        return s;
    }
    Series inv(const Series& a) const {
        if (n == 0) return {};
        if (a[0] == 0) fail(ErrorKind::DivisionByZero, "series with zero constant term is not invertible");
        Series b(n, 0);
        const std::uint32_t a0i = f.pow(a[0], -1);
        b[0] = a0i;
        for (std::size_t k = 1; k < n; ++k) {
            std::uint32_t acc = 0;
            for (std::size_t i = 1; i <= k; ++i)
                if (a[i]) acc = f.add(acc, f.mul(a[i], b[k - i]));
            b[k] = f.neg(f.mul(acc, a0i));
        }
        return b;
    }
    Series eval(const Poly& p, const Series& x) const {
        Series acc = zero();
        for (int k = p.degree(); k >= 0; --k) {
            acc = mul(acc, x);
            if (n) acc[0] = f.add(acc[0], p.coeffs()[static_cast<std::size_t>(k)]);
        }
        return acc;
    }
    bool is_zero(const Series& a) const {
        return std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c == 0; });
    }
};

// Root of sum_k g[k] Z^k = 0 with Z(0) = z0, by Newton iteration.
Series newton(const SeriesOps& ops, const std::vector<Series>& g, std::uint32_t z0) {
    Series z = ops.constant(z0);
    const std::size_t cap = 4 * std::max<std::size_t>(ops.n, 1);
    for (std::size_t iter = 0; iter < cap; ++iter) {
        Series val = ops.zero(), der = ops.zero();
        for (std::size_t k = g.size(); k-- > 0;) {
            der = ops.add(ops.mul(der, z), val);
            val = ops.add(ops.mul(val, z), g[k]);
        }
        if (ops.is_zero(val)) return z;
        z = ops.sub(z, ops.mul(val, ops.inv(der)));
    }
    fail(ErrorKind::PrecisionCapExceeded, "Newton lifting did not converge");
}

// Coordinate series at a place. Affine places give X and Y; at O only W = 1/y
// is produced and x = t/W, y = 1/W.
struct Coordinates {
    Uniformizer kind;
    Series x, y, w;
};

Coordinates coordinates(const Curve& c, const Point& p, const SeriesOps& ops) {
    const Field& f = c.field();
    const auto a1 = c.a1().index(), a2 = c.a2().index(), a3 = c.a3().index(), a4 = c.a4().index(),
               a6 = c.a6().index();
    Coordinates out;
    if (p.infinity) {
        out.kind = Uniformizer::XOverY;
        // w + a1 t w + a3 w^2 = t^3 + a2 t^2 w + a4 t w^2 + a6 w^3
        Series g1 = ops.constant(1);
        if (ops.n > 1) g1[1] = a1;
        if (ops.n > 2) g1[2] = f.neg(a2);
        Series g2 = ops.constant(a3);
        if (ops.n > 1) g2[1] = f.neg(a4);
        out.w = newton(ops, {ops.scale(ops.t_power(3), f.neg(1)), g1, g2, ops.constant(f.neg(a6))}, 0);
        return out;
    }
    if (!c.partial_y(p).is_zero()) {
        out.kind = Uniformizer::XMinusX0;
        out.x = ops.constant(p.x.index());
        if (ops.n > 1) out.x[1] = 1;
        const Series& x = out.x;
        Series fx = ops.eval(Poly(f, {a6, a4, a2, 1}), x);
        Series hx = ops.add(ops.scale(x, a1), ops.constant(a3));
        out.y = newton(ops, {ops.scale(fx, f.neg(1)), hx, ops.constant(1)}, p.y.index());
    } else {
        out.kind = Uniformizer::YMinusY0;
        out.y = ops.constant(p.y.index());
        if (ops.n > 1) out.y[1] = 1;
        const Series& y = out.y;
        Series g0 = ops.sub(ops.add(ops.mul(y, y), ops.scale(y, a3)), ops.constant(a6));
        Series g1 = ops.sub(ops.scale(y, a1), ops.constant(a4));
        out.x = newton(ops, {g0, g1, ops.constant(f.neg(a2)), ops.constant(f.neg(1))}, p.x.index());
    }
    return out;
}

std::size_t first_nonzero(const Series& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i]) return i;
    return s.size();
}

int pole_budget(const Poly& u, const Poly& v) {
    int b = 0;
    if (!u.is_zero()) b = std::max(b, 2 * u.degree());
    if (!v.is_zero()) b = std::max(b, 2 * v.degree() + 3);
    return b;
}

int valuation_at_infinity(const FuncElem& f) {
    int m = 1 << 30;
    if (!f.u().is_zero()) m = std::min(m, -2 * f.u().degree());
    if (!f.v().is_zero()) m = std::min(m, -3 - 2 * f.v().degree());
    return m + 2 * f.d().degree();
}

}  // namespace

Uniformizer uniformizer_kind(const Curve& curve, const Point& p) {
    if (p.infinity) return Uniformizer::XOverY;
    return curve.partial_y(p).is_zero() ? Uniformizer::YMinusY0 : Uniformizer::XMinusX0;
}

LocalSeries local_expansion(const FuncElem& fn, const Point& p, std::size_t prec) {
    if (fn.is_zero()) fail(ErrorKind::ZeroFunction, "expansion of the zero function");
    if (prec < 1) fail(ErrorKind::InvalidArgument, "precision must be at least 1");
    const Curve& c = *fn.curve();
    if (!c.contains(p)) fail(ErrorKind::PointNotOnCurve, "expansion point is not on the curve");
    const Field& f = c.field();
    const Poly &u = fn.u(), &v = fn.v(), &d = fn.d();

    int k_num = 0, k_den = d.degree(), bound = 0;
    if (p.infinity) {
        k_num = std::max(u.is_zero() ? 0 : u.degree(), v.is_zero() ? 0 : v.degree() + 1);
        bound = std::max(3 * k_num, k_den);
    } else {
        bound = std::max(pole_budget(u, v), 2 * d.degree());
    }
    const SeriesOps ops{f, static_cast<std::size_t>(bound) + prec + 4};
    const Coordinates co = coordinates(c, p, ops);

    Series num, den;
    if (p.infinity) {
        std::vector<Series> wp{ops.constant(1)};
        for (int i = 0; i < std::max(k_num, k_den); ++i) wp.push_back(ops.mul(wp.back(), co.w));
        auto shifted = [&](const Series& s, int k) {
            Series out = ops.zero();
            for (std::size_t i = 0; i + static_cast<std::size_t>(k) < ops.n; ++i) out[i + k] = s[i];
            return out;
        };
        num = ops.zero();
        for (int i = 0; i <= u.degree(); ++i)
            if (u.coeffs()[i]) num = ops.add(num, ops.scale(shifted(wp[k_num - i], i), u.coeffs()[i]));
        for (int i = 0; i <= v.degree(); ++i)
            if (v.coeffs()[i]) num = ops.add(num, ops.scale(shifted(wp[k_num - 1 - i], i), v.coeffs()[i]));
        den = ops.zero();
        for (int i = 0; i <= d.degree(); ++i)
            if (d.coeffs()[i]) den = ops.add(den, ops.scale(shifted(wp[k_den - i], i), d.coeffs()[i]));
    } else {
        num = ops.add(ops.eval(u, co.x), ops.mul(ops.eval(v, co.x), co.y));
        den = ops.eval(d, co.x);
    }
    const std::size_t oa = first_nonzero(num), ob = first_nonzero(den);
    if (oa + prec > ops.n || ob + prec > ops.n)
        fail(ErrorKind::PrecisionCapExceeded, "expansion needs more terms than the valuation bound allows");

    const SeriesOps rel{f, prec};
    Series a(num.begin() + static_cast<std::ptrdiff_t>(oa), num.begin() + static_cast<std::ptrdiff_t>(oa + prec));
    Series b(den.begin() + static_cast<std::ptrdiff_t>(ob), den.begin() + static_cast<std::ptrdiff_t>(ob + prec));
    Series q = rel.mul(a, rel.inv(b));
    int order = static_cast<int>(oa) - static_cast<int>(ob);
    if (p.infinity) {
        // Undo the w^(k_num) and w^(k_den) scalings: multiply by w^(k_den - k_num).
        const int e = k_den - k_num;
        Series wunit(co.w.begin() + 3, co.w.begin() + 3 + static_cast<std::ptrdiff_t>(prec));
        Series factor = rel.constant(1);
        const Series base = e >= 0 ? wunit : rel.inv(wunit);
        for (int i = 0; i < std::abs(e); ++i) factor = rel.mul(factor, base);
        q = rel.mul(q, factor);
        order += 3 * e;
    }
    LocalSeries out;
    out.place = p;
    out.uniformizer = co.kind;
    out.order = order;
    for (auto ci : q) out.coeffs.emplace_back(f, ci);
    return out;
}

int valuation(const FuncElem& f, const Point& p) {
    if (f.is_zero()) fail(ErrorKind::ZeroFunction, "valuation of the zero function");
    if (p.infinity) return valuation_at_infinity(f);
    if (!f.curve()->contains(p)) fail(ErrorKind::PointNotOnCurve, "point is not on the curve");
    const Element dv = f.d().eval(p.x);
    if (!dv.is_zero() && !(f.u().eval(p.x) + f.v().eval(p.x) * p.y).is_zero()) return 0;
    return local_expansion(f, p, 1).order;
}

std::optional<Element> evaluate(const FuncElem& f, const Point& p) {
    const Field& field = f.curve()->field();
    if (f.is_zero()) return field.zero();
    if (p.infinity) {
        const int v = valuation_at_infinity(f);
        if (v < 0) return std::nullopt;
        if (v > 0) return field.zero();
        return f.u().lead() / f.d().lead();
    }
    if (!f.curve()->contains(p)) fail(ErrorKind::PointNotOnCurve, "point is not on the curve");
    const Element dv = f.d().eval(p.x);
    if (!dv.is_zero()) return (f.u().eval(p.x) + f.v().eval(p.x) * p.y) / dv;
    const LocalSeries s = local_expansion(f, p, 1);
    if (s.order < 0) return std::nullopt;
    if (s.order > 0) return field.zero();
    return s.coeffs[0];
}

FuncElem uniformizer(const CurvePtr& curve, const Point& p) {
    const Field& f = curve->field();
    FuncElem out;
    switch (uniformizer_kind(*curve, p)) {
    case Uniformizer::XOverY: out = FuncElem::x(curve) / FuncElem::y(curve); break;
    case Uniformizer::XMinusX0: out = FuncElem::x(curve) - FuncElem::constant(curve, p.x); break;
    case Uniformizer::YMinusY0: out = FuncElem::y(curve) - FuncElem::constant(curve, p.y); break;
    }
    (void)f;
    if (valuation(out, p) != 1) fail(ErrorKind::PrecisionCapExceeded, "local parameter check failed");
    return out;
}

// ---------------------------------------------------------------------------

Divisor Divisor::single(const Point& p, int n) {
    Divisor d;
    d.add(p, n);
    return d;
}

int Divisor::coeff(const Point& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? 0 : it->second;
}

void Divisor::add(const Point& p, int n) {
    if (n == 0) return;
    int& slot = terms_[p];
    slot += n;
    if (slot == 0) terms_.erase(p);
}

int Divisor::degree() const {
    int s = 0;
    for (const auto& [p, n] : terms_) s += n;
    return s;
}

bool Divisor::is_effective() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second > 0; });
}

Divisor& Divisor::operator+=(const Divisor& o) {
    for (const auto& [p, n] : o.terms_) add(p, n);
    return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
    for (const auto& [p, n] : o.terms_) add(p, -n);
    return *this;
}

Divisor operator*(int k, const Divisor& d) {
    Divisor out;
    for (const auto& [p, n] : d.terms_) out.add(p, k * n);
    return out;
}

bool operator>=(const Divisor& a, const Divisor& b) { return (a - b).is_effective(); }

Divisor principal_divisor(const FuncElem& f) {
    if (f.is_zero()) fail(ErrorKind::ZeroFunction, "divisor of the zero function");
    Divisor out;
    for (const auto& p : f.curve()->points()) out.add(p, valuation(f, p));
    if (out.degree() != 0)
        fail(ErrorKind::NonRationalSupport, "zeros or poles lie at places of higher degree");
    return out;
}

Point abel_sum(const Curve& curve, const Divisor& d) {
    Point acc = Point::at_infinity();
    for (const auto& [p, n] : d.terms()) acc = curve.add(acc, curve.scalar_mul(n, p));
    return acc;
}

std::vector<FuncElem> riemann_roch_basis(const CurvePtr& curve, const Divisor& dv) {
    const Curve& c = *curve;
    const Field& f = c.field();
    for (const auto& [p, n] : dv.terms())
        if (!c.contains(p)) fail(ErrorKind::NonRationalSupport, "divisor support is not a rational point");

    // Shift by h = prod (x - x(P))^{n_P} over affine P with n_P > 0; g = h f
    // then lies in L(M O).
    Poly h(f, {1});
    int m = dv.coeff(Point::at_infinity());
    std::vector<std::pair<Point, int>> positive;
    for (const auto& [p, n] : dv.terms()) {
        if (p.infinity || n <= 0) continue;
        positive.emplace_back(p, n);
        for (int i = 0; i < n; ++i) h = h * Poly::linear(p.x);
        m += 2 * n;
    }
    if (m < 0) return {};

    std::vector<std::pair<int, int>> monos;  // (i, j) for x^i y^j, by pole order 2i + 3j
    for (int w = 0; w <= m; ++w) {
        if (w % 2 == 0) monos.emplace_back(w / 2, 0);
        else if (w >= 3) monos.emplace_back((w - 3) / 2, 1);
    }

    std::vector<std::vector<std::uint32_t>> rows;
    for (const auto& q : c.points()) {
        if (q.infinity) continue;
        int e = -dv.coeff(q);
        const int vx = c.partial_y(q).is_zero() ? 2 : 1;
        for (const auto& [p, n] : positive)
            if (p.x == q.x) e += n * vx;
        if (e <= 0) continue;
        const SeriesOps ops{f, static_cast<std::size_t>(e)};
        const Coordinates co = coordinates(c, q, ops);
        std::vector<Series> xp{ops.constant(1)};
        for (int i = 1; i <= m / 2; ++i) xp.push_back(ops.mul(xp.back(), co.x));
        std::vector<Series> cols;
        for (const auto& [i, j] : monos) cols.push_back(j == 0 ? xp[i] : ops.mul(xp[i], co.y));
        for (int k = 0; k < e; ++k) {
            std::vector<std::uint32_t> row;
            for (const auto& s : cols) row.push_back(s[k]);
            rows.push_back(std::move(row));
        }
    }

    std::vector<std::vector<std::uint32_t>> kernel;
    if (rows.empty()) {
        for (std::size_t i = 0; i < monos.size(); ++i) {
            std::vector<std::uint32_t> v(monos.size(), 0);
            v[i] = 1;
            kernel.push_back(std::move(v));
        }
    } else {
        Matrix mat(f, rows.size(), monos.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t col = 0; col < monos.size(); ++col) mat(r, col) = rows[r][col];
        kernel = mat.nullspace();
    }

    std::vector<FuncElem> basis;
    for (const auto& vec : kernel) {
        std::vector<std::uint32_t> uc(static_cast<std::size_t>(m / 2 + 1), 0), vc(uc.size(), 0);
        for (std::size_t idx = 0; idx < monos.size(); ++idx) {
            const auto [i, j] = monos[idx];
            (j == 0 ? uc : vc)[static_cast<std::size_t>(i)] = vec[idx];
        }
        basis.emplace_back(curve, Poly(f, uc), Poly(f, vc), h);
    }
    return basis;
}

// ---------------------------------------------------------------------------

FuncElem pullback(const FuncElem& fn, const StabAut& al) {
    const CurvePtr& curve = fn.curve();
    const Field& f = curve->field();
    const Element u2 = al.u * al.u;
    const Poly lin(f, {al.r.index(), u2.index()});
    const Poly vl = fn.v().compose(lin);
    const Poly ycoef_x(f, {al.t.index(), (u2 * al.s).index()});
    return FuncElem(curve, fn.u().compose(lin) + vl * ycoef_x, vl.scaled(u2 * al.u), fn.d().compose(lin));
}

FuncElem pullback_translation(const FuncElem& fn, const Point& q) {
    if (q.infinity) return fn;
    const CurvePtr& curve = fn.curve();
    const Curve& c = *curve;
    if (!c.contains(q)) fail(ErrorKind::PointNotOnCurve, "translation point is not on the curve");
    const FuncElem x = FuncElem::x(curve), y = FuncElem::y(curve);
    auto k = [&](const Element& e) { return FuncElem::constant(curve, e); };
    const FuncElem dx = x - k(q.x);
    const FuncElem lambda = (y - k(q.y)) / dx;
    const FuncElem nu = (k(q.y) * x - y * k(q.x)) / dx;
    const FuncElem x3 = lambda * lambda + k(c.a1()) * lambda - k(c.a2()) - x - k(q.x);
    const FuncElem y3 = -((lambda + k(c.a1())) * x3) - nu - k(c.a3());
    auto horner = [&](const Poly& p) {
        FuncElem acc = k(c.field().zero());
        for (int i = p.degree(); i >= 0; --i) acc = acc * x3 + k(p.coeff(i));
        return acc;
    };
    return (horner(fn.u()) + horner(fn.v()) * y3) / horner(fn.d());
}

FuncElem pullback(const FuncElem& f, const CurveAut& sigma) {
    return pullback(pullback_translation(f, sigma.translate), sigma.stab);
}

}  // namespace eclrc
