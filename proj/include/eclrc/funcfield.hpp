#ifndef ECLRC_FUNCFIELD_HPP
#define ECLRC_FUNCFIELD_HPP

// Rational functions (u(x) + v(x) y) / d(x) on a curve, their valuations at
// rational places, principal divisors and Riemann-Roch spaces.
//
// With h = a1 x + a3 and F = x^3 + a2 x^2 + a4 x + a6 the curve reads
// y^2 = F - h y, so every function has a unique representative with y-degree
// at most one, gcd(u, v, d) = 1 and d monic.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eclrc/autgroup.hpp"
#include "eclrc/curve.hpp"
#include "eclrc/poly.hpp"

namespace eclrc {

class FuncElem {
public:
    FuncElem() = default;
    /// Normalizes (u + v y) / d. Throws DivisionByZero when d is zero.
    FuncElem(CurvePtr curve, Poly u, Poly v, Poly d);
    /// Numerator given by y-power: sum_j numer[j](x) y^j, over d(x).
    static FuncElem from_y_powers(CurvePtr curve, const std::vector<Poly>& numer, Poly d);

    static FuncElem constant(CurvePtr curve, const Element& c);
    static FuncElem x(CurvePtr curve);
    static FuncElem y(CurvePtr curve);

    const CurvePtr& curve() const noexcept { return curve_; }
    const Poly& u() const noexcept { return u_; }
    const Poly& v() const noexcept { return v_; }
    const Poly& d() const noexcept { return d_; }
    bool is_zero() const noexcept { return u_.is_zero() && v_.is_zero(); }
    bool is_constant() const noexcept { return v_.is_zero() && u_.degree() <= 0 && d_.degree() == 0; }

    FuncElem operator-() const;
    FuncElem inv() const;
    FuncElem pow(std::int64_t e) const;
    friend FuncElem operator+(const FuncElem& a, const FuncElem& b);
    friend FuncElem operator-(const FuncElem& a, const FuncElem& b);
    friend FuncElem operator*(const FuncElem& a, const FuncElem& b);
    friend FuncElem operator/(const FuncElem& a, const FuncElem& b);
    FuncElem scaled(const Element& c) const;

    friend bool operator==(const FuncElem& a, const FuncElem& b) {
        return a.curve_ == b.curve_ && a.u_ == b.u_ && a.v_ == b.v_ && a.d_ == b.d_;
    }

    std::string to_string() const;

private:
    void normalize();
    CurvePtr curve_;
    Poly u_, v_, d_;
};

/// Returns a copy in canonical form (construction already normalizes).
FuncElem normalize(const FuncElem& f);

enum class Uniformizer { XOverY, XMinusX0, YMinusY0 };
std::string_view to_string(Uniformizer u);

/// Laurent expansion sum_{i} coeffs[i] t^(order + i), coefficients known for
/// i < coeffs.size().
struct LocalSeries {
    Point place;
    Uniformizer uniformizer = Uniformizer::XOverY;
    int order = 0;
    std::vector<Element> coeffs;
};

/// Local parameter at P: x/y at O, x - x(P) when dF/dy(P) != 0, y - y(P) otherwise.
FuncElem uniformizer(const CurvePtr& curve, const Point& p);
Uniformizer uniformizer_kind(const Curve& curve, const Point& p);

/// Series of f at P in the local parameter to relative precision prec.
/// Throws ZeroFunction for f = 0 and PrecisionCapExceeded if the Newton
/// lifting of the coordinates fails to settle.
LocalSeries local_expansion(const FuncElem& f, const Point& p, std::size_t prec);

int valuation(const FuncElem& f, const Point& p);

/// Value at P, or nullopt when P is a pole.
std::optional<Element> evaluate(const FuncElem& f, const Point& p);

class Divisor {
public:
    Divisor() = default;
    static Divisor single(const Point& p, int n = 1);

    int coeff(const Point& p) const;
    void add(const Point& p, int n);
    int degree() const;
    bool is_effective() const;
    const std::map<Point, int>& terms() const noexcept { return terms_; }

    Divisor& operator+=(const Divisor& o);
    Divisor& operator-=(const Divisor& o);
    friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
    friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
    friend Divisor operator*(int k, const Divisor& d);
    friend bool operator==(const Divisor& a, const Divisor& b) { return a.terms_ == b.terms_; }
    /// a >= b coefficient-wise
    friend bool operator>=(const Divisor& a, const Divisor& b);

private:
    std::map<Point, int> terms_;  // nonzero entries only
};

/// Valuations at all rational places. Throws NonRationalSupport when they
/// do not sum to zero.
Divisor principal_divisor(const FuncElem& f);

/// Basis of L(D) = {f : (f) >= -D} plus 0.
std::vector<FuncElem> riemann_roch_basis(const CurvePtr& curve, const Divisor& d);

/// f o alpha, f o tau_Q, and f o sigma for sigma = tau_Q o alpha.
FuncElem pullback(const FuncElem& f, const StabAut& alpha);
FuncElem pullback_translation(const FuncElem& f, const Point& q);
FuncElem pullback(const FuncElem& f, const CurveAut& sigma);

/// Sum of coefficient-weighted points under the group law.
Point abel_sum(const Curve& curve, const Divisor& d);

}  // namespace eclrc

#endif
