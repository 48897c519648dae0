// Copyright 2026 The ahgeom Authors
// SPDX-License-Identifier: Apache-2.0

#include "ahg/scalar.hpp"

#include <array>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace ahg {

// ---------------------------------------------------------------------------
// Monomial
// ---------------------------------------------------------------------------

Monomial::Monomial(std::vector<int> exponents) : exp_(std::move(exponents)) {
    while (!exp_.empty() && exp_.back() == 0) exp_.pop_back();
}

Monomial Monomial::variable(std::size_t index, int power) {
    std::vector<int> e(index + 1, 0);
    e[index] = power;
    return Monomial(std::move(e));
}

int Monomial::degree() const noexcept {
    return std::accumulate(exp_.begin(), exp_.end(), 0);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.exp_.empty()) return b;
    if (b.exp_.empty()) return a;
    std::vector<int> e(std::max(a.exp_.size(), b.exp_.size()), 0);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exponent(i) + b.exponent(i);
    return Monomial(std::move(e));
}

// Graded order: constants first, then by total degree, then lexicographic.
std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (a.exp_.size() == 0 || b.exp_.size() == 0) {
        if (a.exp_.size() != 0) return std::strong_ordering::greater;
        if (b.exp_.size() != 0) return std::strong_ordering::less;
        return std::strong_ordering::equal;
    }
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    const std::size_t len = std::max(a.exp_.size(), b.exp_.size());
    for (std::size_t i = 0; i < len; ++i) {
        // Higher power of an earlier parameter sorts first.
        if (auto c = b.exponent(i) <=> a.exponent(i); c != 0) return c;
    }
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Scalar
// ---------------------------------------------------------------------------

bool is_square_free(long d) {
    if (d < 0) return false;
    if (d == 0) return true;
    if (d == 1) return false;
    for (long k = 2; k * k <= d; ++k) {
        if (d % (k * k) == 0) return false;
    }
    return true;
}

namespace {

void require_square_free(long d) {
    if (!is_square_free(d)) {
        throw ScalarError("extension d = " + std::to_string(d) + " is not square-free");
    }
}

long combine_extension(long a, long b) {
    if (a == 0) return b;
    if (b == 0 || a == b) return a;
    throw ScalarError("extension mismatch: sqrt(" + std::to_string(a) + ") vs sqrt(" +
                      std::to_string(b) + ")");
}

}  // namespace

Scalar::Scalar(long value) {
    if (value != 0) terms_.push_back(Term{Monomial{}, Rational(value), Rational(0)});
}

Scalar::Scalar(const Rational& value) {
    if (value != 0) {
        Rational v = value;
        v.canonicalize();
        terms_.push_back(Term{Monomial{}, v, Rational(0)});
    }
}

Scalar Scalar::quadratic(const Rational& p, const Rational& q, long d) {
    require_square_free(d);
    if (d == 0 && q != 0) throw ScalarError("sqrt part requires a nonzero extension");
    std::vector<Term> raw;
    raw.push_back(Term{Monomial{}, p, q});
    return normalize(std::move(raw), d);
}

Scalar Scalar::parameter(std::size_t index, int power) {
    Scalar s;
    s.terms_.push_back(Term{Monomial::variable(index, power), Rational(1), Rational(0)});
    return s;
}

Scalar Scalar::normalize(std::vector<Term> raw, long d) {
    require_square_free(d);
    Scalar s;
    s.d_ = d;
    for (auto& t : raw) {
        t.p.canonicalize();
        t.q.canonicalize();
        if (d == 0 && t.q != 0) throw ScalarError("sqrt part requires a nonzero extension");
    }
    std::sort(raw.begin(), raw.end(),
              [](const Term& a, const Term& b) { return a.mono < b.mono; });
    for (auto& t : raw) {
        if (!s.terms_.empty() && s.terms_.back().mono == t.mono) {
            s.terms_.back().p += t.p;
            s.terms_.back().q += t.q;
        } else {
            s.terms_.push_back(std::move(t));
        }
    }
    s.canonicalize();
    return s;
}

void Scalar::canonicalize() {
    std::erase_if(terms_, [](const Term& t) { return t.p == 0 && t.q == 0; });
    const bool any_root = std::any_of(terms_.begin(), terms_.end(),
                                      [](const Term& t) { return t.q != 0; });
    if (!any_root) d_ = 0;
}

bool Scalar::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_constant());
}

bool Scalar::is_rational() const noexcept {
    return is_constant() && d_ == 0;
}

Rational Scalar::to_rational() const {
    if (!is_rational()) throw ScalarError("scalar is not a plain rational");
    return terms_.empty() ? Rational(0) : terms_.front().p;
}

std::pair<Rational, Rational> Scalar::constant_parts() const {
    if (!is_constant()) throw ScalarError("scalar depends on parameters");
    if (terms_.empty()) return {Rational(0), Rational(0)};
    return {terms_.front().p, terms_.front().q};
}

std::size_t Scalar::parameter_span() const noexcept {
    std::size_t span = 0;
    for (const auto& t : terms_) span = std::max(span, t.mono.size());
    return span;
}

int Scalar::degree() const noexcept {
    int deg = 0;
    for (const auto& t : terms_) deg = std::max(deg, t.mono.degree());
    return deg;
}

Scalar& Scalar::operator+=(const Scalar& other) {
    if (other.terms_.empty()) return *this;
    if (terms_.empty()) return *this = other;
    d_ = combine_extension(d_, other.d_);
    // Fast path: both constants.
    if (terms_.size() == 1 && other.terms_.size() == 1 && terms_[0].mono == other.terms_[0].mono) {
        terms_[0].p += other.terms_[0].p;
        terms_[0].q += other.terms_[0].q;
        canonicalize();
        return *this;
    }
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end() || (a != terms_.end() && a->mono < b->mono)) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->mono < a->mono) {
            merged.push_back(*b++);
        } else {
            Term t = std::move(*a++);
            t.p += b->p;
            t.q += b->q;
            ++b;
            merged.push_back(std::move(t));
        }
    }
    terms_ = std::move(merged);
    canonicalize();
    return *this;
}

Scalar operator-(Scalar a) {
    for (auto& t : a.terms_) {
        t.p = -t.p;
        t.q = -t.q;
    }
    return a;
}

Scalar& Scalar::operator-=(const Scalar& other) {
    if (other.terms_.empty()) return *this;
    return *this += -other;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.terms_.empty() || b.terms_.empty()) return Scalar{};
    const long d = combine_extension(a.d_, b.d_);
    Scalar out;
    out.d_ = d;
    if (a.terms_.size() == 1 && b.terms_.size() == 1) {
        const Term& x = a.terms_[0];
        const Term& y = b.terms_[0];
        Term t{x.mono * y.mono, x.p * y.p, x.p * y.q + x.q * y.p};
        if (x.q != 0 && y.q != 0) t.p += d * (x.q * y.q);
        out.terms_.push_back(std::move(t));
        out.canonicalize();
        return out;
    }
    std::vector<Term> raw;
    raw.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_) {
        for (const auto& y : b.terms_) {
            Term t{x.mono * y.mono, x.p * y.p, x.p * y.q + x.q * y.p};
            if (x.q != 0 && y.q != 0) t.p += d * (x.q * y.q);
            raw.push_back(std::move(t));
        }
    }
    std::sort(raw.begin(), raw.end(),
              [](const Term& l, const Term& r) { return l.mono < r.mono; });
    for (auto& t : raw) {
        if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
            out.terms_.back().p += t.p;
            out.terms_.back().q += t.q;
        } else {
            out.terms_.push_back(std::move(t));
        }
    }
    out.canonicalize();
    return out;
}

Scalar& Scalar::operator*=(const Scalar& other) {
    return *this = *this * other;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    if (a.d_ != b.d_) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        const auto& x = a.terms_[i];
        const auto& y = b.terms_[i];
        if (!(x.mono == y.mono) || x.p != y.p || x.q != y.q) return false;
    }
    return true;
}

Scalar inverse(const Scalar& c) {
    if (c.is_zero()) throw ScalarError("division by zero");
    if (!c.is_constant()) throw ScalarError("non-constant divisor");
    auto [p, q] = c.constant_parts();
    const long d = c.extension();
    const Rational norm = p * p - d * (q * q);
    if (norm == 0) throw ScalarError("division by zero");
    const Rational ip = p / norm;
    const Rational iq = -q / norm;
    return d == 0 ? Scalar(ip) : Scalar::quadratic(ip, iq, d);
}

Scalar divide_by_constant(const Scalar& a, const Scalar& c) {
    if (c.is_zero()) throw ScalarError("division by zero");
    if (!c.is_constant()) throw ScalarError("non-constant divisor");
    if (c.is_rational()) {
        const Rational r = c.to_rational();
        Scalar out = a;
        for (auto& t : out.terms_) {
            t.p /= r;
            t.q /= r;
        }
        return out;
    }
    return a * inverse(c);
}

namespace {

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    mpz_class num = r.get_num();
    mpz_class den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
        return std::nullopt;
    }
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    Rational out(sn, sd);
    out.canonicalize();
    return out;
}

}  // namespace

std::optional<Scalar> exact_sqrt(const Scalar& a, long d) {
    if (!a.is_constant()) return std::nullopt;
    if (a.is_zero()) return Scalar{};
    auto [p, q] = a.constant_parts();
    const long ad = a.extension();
    if (ad != 0 && d != 0 && ad != d) return std::nullopt;
    if (q == 0) {
        if (auto s = rational_sqrt(p)) return Scalar(*s);
        if (d != 0) {
            // sqrt(p) = y*sqrt(d)  <=>  p/d = y^2
            if (auto y = rational_sqrt(p / d)) return Scalar::quadratic(0, *y, d);
        }
        return std::nullopt;
    }
    // (x + y sqrt(d))^2 = p + q sqrt(d):  x^2 + d y^2 = p,  2xy = q.
    const long e = ad;
    auto disc = rational_sqrt(p * p - e * (q * q));
    if (!disc) return std::nullopt;
    const std::array<Rational, 2> halves{Rational((p + *disc) / 2), Rational((p - *disc) / 2)};
    for (const Rational& x2 : halves) {
        auto x = rational_sqrt(x2);
        if (!x || *x == 0) continue;
        const Rational y = q / (2 * *x);
        Scalar cand = Scalar::quadratic(*x, y, e);
        if (cand * cand == a) return cand;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Context, evaluation
// ---------------------------------------------------------------------------

std::optional<std::size_t> ScalarContext::parameter_index(std::string_view name) const {
    for (std::size_t i = 0; i < parameters.size(); ++i) {
        if (parameters[i] == name) return i;
    }
    return std::nullopt;
}

Scalar evaluate(const Scalar& a, const ScalarContext& ctx,
                const std::map<std::string, Rational>& bindings) {
    std::vector<std::optional<Rational>> values(ctx.parameters.size());
    for (std::size_t i = 0; i < ctx.parameters.size(); ++i) {
        if (auto it = bindings.find(ctx.parameters[i]); it != bindings.end()) values[i] = it->second;
    }
    std::set<std::string> unbound;
    for (const auto& t : a.terms()) {
        for (std::size_t i = 0; i < t.mono.size(); ++i) {
            if (t.mono.exponent(i) == 0) continue;
            if (i >= values.size()) {
                unbound.insert("#" + std::to_string(i));
            } else if (!values[i]) {
                unbound.insert(ctx.parameters[i]);
            }
        }
    }
    if (!unbound.empty()) {
        std::string msg = "unbound parameters:";
        for (const auto& u : unbound) msg += " " + u;
        throw ScalarError(msg);
    }
    Rational p = 0;
    Rational q = 0;
    for (const auto& t : a.terms()) {
        Rational f = 1;
        for (std::size_t i = 0; i < t.mono.size(); ++i) {
            for (int k = 0; k < t.mono.exponent(i); ++k) f *= *values[i];
        }
        p += t.p * f;
        q += t.q * f;
    }
    if (q == 0) return Scalar(p);
    return Scalar::quadratic(p, q, a.extension());
}

// ---------------------------------------------------------------------------
// Literal grammar
// ---------------------------------------------------------------------------

namespace {

class LiteralParser {
public:
    LiteralParser(std::string_view text, const ScalarContext& ctx) : s_(text), ctx_(ctx) {}

    Scalar parse() {
        skip_ws();
        if (pos_ == s_.size()) fail("empty scalar literal");
        Scalar total;
        bool first = true;
        while (true) {
            skip_ws();
            int sign = 1;
            if (!first) {
                if (pos_ == s_.size()) break;
                if (s_[pos_] == '+') {
                    ++pos_;
                } else if (s_[pos_] == '-') {
                    sign = -1;
                    ++pos_;
                } else {
                    fail("expected '+' or '-'");
                }
                skip_ws();
            }
            while (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
                if (s_[pos_] == '-') sign = -sign;
                ++pos_;
                skip_ws();
            }
            Scalar term = parse_term();
            total += sign < 0 ? -term : term;
            first = false;
            skip_ws();
            if (pos_ == s_.size()) break;
        }
        return total;
    }

private:
    Scalar parse_term() {
        Scalar value(1L);
        bool need_factor = true;
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            Rational c = parse_int();
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                skip_ws();
                Rational den = parse_int();
                if (den == 0) fail("zero denominator");
                c /= den;
            }
            value = Scalar(c);
            need_factor = false;
        }
        while (true) {
            skip_ws();
            if (!need_factor) {
                if (pos_ < s_.size() && s_[pos_] == '*') {
                    ++pos_;
                    skip_ws();
                } else {
                    break;
                }
            }
            value = value * parse_factor();
            need_factor = false;
        }
        return value;
    }

    Scalar parse_factor() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
            ++pos_;
        }
        if (start == pos_) fail("expected a factor");
        const std::string name(s_.substr(start, pos_ - start));
        int power = 1;
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            skip_ws();
            Rational e = parse_int();
            if (!e.get_num().fits_sint_p()) fail("exponent too large");
            power = static_cast<int>(e.get_num().get_si());
            if (power < 0) fail("negative exponent");
        }
        if (name == "r") {
            if (ctx_.d == 0) fail("'r' used without a sqrt extension");
            Scalar base = Scalar::root(ctx_.d);
            Scalar out(1L);
            for (int k = 0; k < power; ++k) out *= base;
            return out;
        }
        auto idx = ctx_.parameter_index(name);
        if (!idx) {
            pos_ = start;
            fail("unknown parameter '" + name + "'");
        }
        if (power == 0) return Scalar(1L);
        return Scalar::parameter(*idx, power);
    }

    Rational parse_int() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return Rational(mpz_class(std::string(s_.substr(start, pos_ - start))));
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ScalarError("scalar literal \"" + std::string(s_) + "\", column " +
                          std::to_string(pos_ + 1) + ": " + what);
    }

    std::string_view s_;
    const ScalarContext& ctx_;
    std::size_t pos_ = 0;
};

std::string monomial_text(const Monomial& m, const ScalarContext& ctx) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        const int e = m.exponent(i);
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += i < ctx.parameters.size() ? ctx.parameters[i] : "p" + std::to_string(i);
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::string rational_text(const Rational& r) {
    return r.get_str();
}

// One signed literal atom: coefficient, optional r, optional monomial.
std::string atom_text(const Rational& c, bool root, const std::string& mono) {
    std::string factors;
    if (root) factors = "r";
    if (!mono.empty()) factors += (factors.empty() ? "" : "*") + mono;
    if (factors.empty()) return rational_text(c);
    if (c == 1) return factors;
    if (c == -1) return "-" + factors;
    return rational_text(c) + "*" + factors;
}

}  // namespace

Scalar parse_scalar(std::string_view text, const ScalarContext& ctx) {
    return LiteralParser(text, ctx).parse();
}

std::string to_literal(const Scalar& a, const ScalarContext& ctx) {
    if (a.is_zero()) return "0";
    std::vector<std::string> atoms;
    for (const auto& t : a.terms()) {
        const std::string mono = monomial_text(t.mono, ctx);
        if (t.p != 0) atoms.push_back(atom_text(t.p, false, mono));
        if (t.q != 0) atoms.push_back(atom_text(t.q, true, mono));
    }
    std::string out;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (i > 0) out += " + ";
        out += atoms[i];
    }
    return out;
}

CoefficientText coefficient_text(const Scalar& a, const ScalarContext& ctx) {
    CoefficientText out;
    std::size_t atoms = 0;
    for (const auto& t : a.terms()) atoms += (t.p != 0) + (t.q != 0);
    if (atoms != 1) {
        out.magnitude = "(" + to_literal(a, ctx) + ")";
        return out;
    }
    const Term& t = a.terms().front();
    const bool root = t.q != 0;
    Rational c = root ? t.q : t.p;
    if (c < 0) {
        out.negative = true;
        c = -c;
    }
    std::string factors;
    if (root) factors = "r";
    const std::string mono = monomial_text(t.mono, ctx);
    if (!mono.empty()) factors += (factors.empty() ? "" : "*") + mono;
    if (factors.empty()) {
        out.magnitude = c == 1 ? "" : rational_text(c);
    } else if (c == 1) {
        out.magnitude = factors;
    } else if (c.get_den() == 1) {
        out.magnitude = rational_text(c) + "*" + factors;
    } else {
        out.magnitude = "(" + rational_text(c) + ")*" + factors;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& a) {
    ScalarContext ctx;
    ctx.d = a.extension();
    for (std::size_t i = 0; i < a.parameter_span(); ++i) ctx.parameters.push_back("p" + std::to_string(i));
    return os << to_literal(a, ctx);
}

// ---------------------------------------------------------------------------
// Rational roots of univariate polynomials
// ---------------------------------------------------------------------------

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
    if (n < 0) n = -n;
    std::vector<mpz_class> primes;
    std::vector<int> mult;
    mpz_class m = n;
    for (mpz_class p = 2; p * p <= m && p < 100000; ++p) {
        if (m % p == 0) {
            primes.push_back(p);
            mult.push_back(0);
            while (m % p == 0) {
                m /= p;
                ++mult.back();
            }
        }
    }
    if (m > 1) {
        primes.push_back(m);
        mult.push_back(1);
    }
    std::vector<mpz_class> out{1};
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const std::size_t base = out.size();
        mpz_class pk = 1;
        for (int k = 1; k <= mult[i]; ++k) {
            pk *= primes[i];
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    return out;
}

// Integer coefficients c[0..deg] of a polynomial with rational coefficients.
std::vector<mpz_class> clear_denominators(const std::vector<Rational>& coeffs) {
    mpz_class l = 1;
    for (const auto& c : coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<mpz_class> out;
    for (const auto& c : coeffs) out.push_back(mpz_class(c.get_num() * (l / c.get_den())));
    return out;
}

std::set<Rational> roots_of(std::vector<Rational> coeffs) {
    std::set<Rational> roots;
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    if (coeffs.size() <= 1) return roots;
    std::size_t low = 0;
    while (coeffs[low] == 0) ++low;
    if (low > 0) roots.insert(Rational(0));
    std::vector<Rational> reduced(coeffs.begin() + static_cast<long>(low), coeffs.end());
    if (reduced.size() <= 1) return roots;
    auto ints = clear_denominators(reduced);
    const auto num_div = divisors(ints.front());
    const auto den_div = divisors(ints.back());
    for (const auto& a : num_div) {
        for (const auto& b : den_div) {
            for (int sgn : {1, -1}) {
                Rational x(sgn * a, b);
                x.canonicalize();
                Rational acc = 0;
                for (auto it = reduced.rbegin(); it != reduced.rend(); ++it) acc = acc * x + *it;
                if (acc == 0) roots.insert(x);
            }
        }
    }
    return roots;
}

}  // namespace

std::vector<Rational> rational_roots(const Scalar& poly, std::size_t index) {
    if (poly.is_zero()) throw ScalarError("zero polynomial has every value as a root");
    std::vector<Rational> pc;
    std::vector<Rational> qc;
    for (const auto& t : poly.terms()) {
        for (std::size_t i = 0; i < t.mono.size(); ++i) {
            if (i != index && t.mono.exponent(i) != 0) {
                throw ScalarError("polynomial is not univariate");
            }
        }
        const auto k = static_cast<std::size_t>(t.mono.exponent(index));
        if (pc.size() <= k) {
            pc.resize(k + 1);
            qc.resize(k + 1);
        }
        pc[k] += t.p;
        qc[k] += t.q;
    }
    const bool has_root_part = std::any_of(qc.begin(), qc.end(), [](const Rational& c) { return c != 0; });
    const bool has_rat_part = std::any_of(pc.begin(), pc.end(), [](const Rational& c) { return c != 0; });
    std::set<Rational> out;
    if (has_rat_part && has_root_part) {
        auto a = roots_of(pc);
        auto b = roots_of(qc);
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    } else {
        out = roots_of(has_rat_part ? pc : qc);
    }
    return {out.begin(), out.end()};
}

}  // namespace ahg
