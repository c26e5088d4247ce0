#include "eclrc/gf.hpp"

#include <numeric>
#include <string>

namespace eclrc {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::SingularCurve: return "SingularCurve";
    case ErrorKind::PointNotOnCurve: return "PointNotOnCurve";
    case ErrorKind::StructureContradiction: return "StructureContradiction";
    case ErrorKind::NoMaximalCurveFound: return "NoMaximalCurveFound";
    case ErrorKind::PrecisionCapExceeded: return "PrecisionCapExceeded";
    case ErrorKind::ZeroFunction: return "ZeroFunction";
    case ErrorKind::NonRationalSupport: return "NonRationalSupport";
    case ErrorKind::FieldTooLargeForScan: return "FieldTooLargeForScan";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::NoSuchFunction: return "NoSuchFunction";
    case ErrorKind::InvarianceFailure: return "InvarianceFailure";
    case ErrorKind::DependenceDetected: return "DependenceDetected";
    case ErrorKind::NotEnoughFibers: return "NotEnoughFibers";
    case ErrorKind::ParameterViolation: return "ParameterViolation";
    case ErrorKind::MinorSingular: return "MinorSingular";
    case ErrorKind::TooManyErasuresInGroup: return "TooManyErasuresInGroup";
    case ErrorKind::NotErased: return "NotErased";
    case ErrorKind::Undecodable: return "Undecodable";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool prime_power(std::uint64_t q, std::uint32_t& p, std::uint32_t& a) {
    if (q < 2) return false;
    std::uint64_t d = 2;
    while (d * d <= q && q % d != 0) ++d;
    if (q % d != 0) d = q;
    std::uint32_t e = 0;
    std::uint64_t r = q;
    while (r % d == 0) {
        r /= d;
        ++e;
    }
    if (r != 1) return false;
    p = static_cast<std::uint32_t>(d);
    a = e;
    return true;
}

namespace {

using Coeffs = std::vector<std::uint32_t>;

// Remainder of num modulo a monic den over GF(p); both low degree first.
Coeffs poly_mod(Coeffs num, const Coeffs& den, std::uint32_t p) {
    const std::size_t dd = den.size() - 1;
    for (std::size_t i = num.size(); i-- > dd;) {
        const std::uint32_t c = num[i] % p;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) {
            const std::uint64_t sub = std::uint64_t{c} * den[j] % p;
            num[i - dd + j] = static_cast<std::uint32_t>((num[i - dd + j] + p - sub) % p);
        }
    }
    num.resize(std::min(num.size(), dd));
    return num;
}

bool all_zero(const Coeffs& c) {
    for (auto v : c)
        if (v != 0) return false;
    return true;
}

// Exhaustive factor scan: no monic polynomial of degree 1..a/2 divides f.
bool is_irreducible(const Coeffs& f, std::uint32_t p) {
    const std::uint32_t a = static_cast<std::uint32_t>(f.size() - 1);
    for (std::uint32_t d = 1; d <= a / 2; ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t n = 0; n < count; ++n) {
            Coeffs g(d + 1);
            std::uint64_t rest = n;
            for (std::uint32_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            g[d] = 1;
            if (all_zero(poly_mod(f, g, p))) return false;
        }
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

FieldPtr make_field(std::uint32_t p, std::uint32_t a, std::uint64_t cap) {
    if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (a < 1) fail(ErrorKind::InvalidArgument, "extension degree must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < a; ++i) {
        q *= p;
        if (q > cap)
            fail(ErrorKind::FieldTooLarge,
                 "GF(" + std::to_string(p) + "^" + std::to_string(a) + ") exceeds cap " +
                     std::to_string(cap));
    }

    // Lexicographic scan over (c_0, ..., c_{a-1}), c_0 most significant.
    Coeffs modulus;
    for (std::uint64_t n = 0; n < q; ++n) {
        Coeffs f(a + 1);
        std::uint64_t rest = n;
        for (std::uint32_t i = a; i-- > 0;) {
            f[i] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        f[a] = 1;
        if (is_irreducible(f, p)) {
            modulus = std::move(f);
            break;
        }
    }
    return FieldPtr(new Field(p, a, std::move(modulus)));
}

FieldPtr make_field_of_order(std::uint64_t q, std::uint64_t cap) {
    std::uint32_t p = 0, a = 0;
    if (!prime_power(q, p, a))
        fail(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
    return make_field(p, a, cap);
}

Field::Field(std::uint32_t p, std::uint32_t a, std::vector<std::uint32_t> modulus)
    : p_(p), a_(a), modulus_(std::move(modulus)) {
    q_ = 1;
    for (std::uint32_t i = 0; i < a_; ++i) q_ *= p_;

    neg_.resize(q_);
    for (std::uint32_t x = 0; x < q_; ++x) {
        std::uint32_t out = 0, scale = 1, rest = x;
        for (std::uint32_t i = 0; i < a_; ++i) {
            const std::uint32_t c = rest % p_;
            rest /= p_;
            out += ((p_ - c) % p_) * scale;
            scale *= p_;
        }
        neg_[x] = out;
    }
    if (p_ != 2 && q_ <= 1024) {
        add_table_.resize(std::size_t{q_} * q_);
        for (std::uint32_t x = 0; x < q_; ++x)
            for (std::uint32_t y = 0; y < q_; ++y) {
                std::uint32_t out = 0, scale = 1, rx = x, ry = y;
                for (std::uint32_t i = 0; i < a_; ++i) {
                    out += ((rx % p_ + ry % p_) % p_) * scale;
                    rx /= p_;
                    ry /= p_;
                    scale *= p_;
                }
                add_table_[std::size_t{x} * q_ + y] = static_cast<std::uint16_t>(out);
            }
    }

    log_.assign(q_, 0);
    exp_.assign(2 * std::size_t{q_ - 1} + 1, 1);
    if (q_ == 2) {
        exp_ = {1, 1, 1};
        return;
    }
    const auto factors = prime_factors(q_ - 1);
    auto slow_pow = [&](std::uint32_t x, std::uint64_t e) {
        std::uint32_t acc = 1;
        while (e) {
            if (e & 1) acc = slow_mul(acc, x);
            x = slow_mul(x, x);
            e >>= 1;
        }
        return acc;
    };
    std::uint32_t gen = 0;
    for (std::uint32_t g = 2; g < q_ && gen == 0; ++g) {
        bool primitive = true;
        for (auto l : factors)
            if (slow_pow(g, (q_ - 1) / l) == 1) {
                primitive = false;
                break;
            }
        if (primitive) gen = g;
    }
    std::uint32_t cur = 1;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
        exp_[i] = cur;
        exp_[i + q_ - 1] = cur;
        log_[cur] = i;
        cur = slow_mul(cur, gen);
    }
}

std::uint32_t Field::slow_mul(std::uint32_t x, std::uint32_t y) const {
    Coeffs cx(a_), cy(a_);
    for (std::uint32_t i = 0; i < a_; ++i) {
        cx[i] = x % p_;
        x /= p_;
        cy[i] = y % p_;
        y /= p_;
    }
    Coeffs prod(2 * a_ - 1, 0);
    for (std::uint32_t i = 0; i < a_; ++i)
        for (std::uint32_t j = 0; j < a_; ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{cx[i]} * cy[j]) % p_);
    Coeffs r = poly_mod(std::move(prod), modulus_, p_);
    std::uint32_t out = 0, scale = 1;
    for (std::uint32_t i = 0; i < r.size(); ++i) {
        out += r[i] * scale;
        scale *= p_;
    }
    return out;
}

std::uint32_t Field::add(std::uint32_t x, std::uint32_t y) const {
    if (p_ == 2) return x ^ y;
    if (!add_table_.empty()) return add_table_[std::size_t{x} * q_ + y];
    std::uint32_t out = 0, scale = 1;
    for (std::uint32_t i = 0; i < a_; ++i) {
        out += ((x % p_ + y % p_) % p_) * scale;
        x /= p_;
        y /= p_;
        scale *= p_;
    }
    return out;
}

std::uint32_t Field::pow(std::uint32_t x, std::int64_t e) const {
    if (e < 0) {
        if (x == 0) fail(ErrorKind::DivisionByZero, "negative power of zero");
        // Inversion as x^(q-2).
        x = pow(x, q_ - 2);
        e = -e;
    }
    std::uint32_t acc = 1;
    while (e) {
        if (e & 1) acc = mul(acc, x);
        x = mul(x, x);
        e >>= 1;
    }
    return acc;
}

Element Field::element(std::uint64_t index) const {
    if (index >= q_)
        fail(ErrorKind::InvalidArgument,
             "element index " + std::to_string(index) + " out of range for GF(" + std::to_string(q_) + ")");
    return Element(*this, static_cast<std::uint32_t>(index));
}

Element Field::from_int(std::int64_t n) const {
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return Element(*this, static_cast<std::uint32_t>(r));
}

Element Field::from_coefficients(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() > a_) fail(ErrorKind::InvalidArgument, "too many coefficients");
    std::uint32_t out = 0, scale = 1;
    for (auto c : coeffs) {
        out += (c % p_) * scale;
        scale *= p_;
    }
    return Element(*this, out);
}

std::vector<std::uint32_t> Field::coefficients(const Element& x) const {
    std::vector<std::uint32_t> out(a_);
    std::uint32_t rest = x.index();
    for (auto& c : out) {
        c = rest % p_;
        rest /= p_;
    }
    return out;
}

Element::Element(const Field& field, std::uint32_t index) : field_(&field), index_(index) {}

bool Element::is_one() const noexcept { return field_ != nullptr && index_ == 1; }

namespace {
inline void check_same(const Element& a, const Element& b) {
    if (a.field() != b.field() || a.field() == nullptr)
        fail(ErrorKind::FieldMismatch, "operands belong to different fields");
}
}  // namespace

Element& Element::operator+=(const Element& o) {
    check_same(*this, o);
    index_ = field_->add(index_, o.index_);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    check_same(*this, o);
    index_ = field_->sub(index_, o.index_);
    return *this;
}

Element& Element::operator*=(const Element& o) {
    check_same(*this, o);
    index_ = field_->mul(index_, o.index_);
    return *this;
}

Element& Element::operator/=(const Element& o) {
    check_same(*this, o);
    if (o.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero field element");
    index_ = field_->mul(index_, field_->pow(o.index_, field_->q() - 2));
    return *this;
}

Element Element::operator-() const {
    if (!field_) fail(ErrorKind::FieldMismatch, "element has no field");
    return Element(*field_, field_->neg(index_));
}

Element Element::inv() const {
    if (!field_) fail(ErrorKind::FieldMismatch, "element has no field");
    if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
    return Element(*field_, field_->pow(index_, field_->q() - 2));
}

Element Element::pow(std::int64_t e) const {
    if (!field_) fail(ErrorKind::FieldMismatch, "element has no field");
    return Element(*field_, field_->pow(index_, e));
}

std::vector<Element> enumerate(const Field& field) {
    std::vector<Element> out;
    out.reserve(field.q());
    for (std::uint32_t i = 0; i < field.q(); ++i) out.emplace_back(field, i);
    return out;
}

std::vector<Element> roots_of_unity(const Field& field, std::uint64_t n) {
    if (n < 1) fail(ErrorKind::InvalidArgument, "roots_of_unity needs n >= 1");
    std::vector<Element> out;
    for (std::uint32_t i = 1; i < field.q(); ++i)
        if (field.pow(i, static_cast<std::int64_t>(n)) == 1) out.emplace_back(field, i);
    return out;
}

std::vector<Element> solve_poly(const Field& field, std::span<const Element> coeffs) {
    bool nonzero = false;
    for (const auto& c : coeffs) {
        if (c.field() != &field) fail(ErrorKind::FieldMismatch, "coefficient from another field");
        nonzero = nonzero || !c.is_zero();
    }
    if (!nonzero) fail(ErrorKind::InvalidArgument, "solve_poly needs a nonzero polynomial");
    std::vector<Element> out;
    for (std::uint32_t i = 0; i < field.q(); ++i) {
        std::uint32_t acc = 0;
        for (std::size_t k = coeffs.size(); k-- > 0;) acc = field.add(field.mul(acc, i), coeffs[k].index());
        if (acc == 0) out.emplace_back(field, i);
    }
    return out;
}

}  // namespace eclrc
