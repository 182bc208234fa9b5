#include "extalg/field.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace extalg {

namespace {

bool is_prime_ll(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long long ipow_checked(long long base, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > (1LL << 60) / base) fail("BudgetExceeded", "field size overflows");
        r *= base;
    }
    return r;
}

// ---- GF(p)[t] polynomials as coefficient vectors (ascending powers) ----

using Poly = std::vector<long long>;

int pdeg(const Poly& p) {
    for (int i = (int)p.size() - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

Poly ptrim(Poly p) {
    p.resize(pdeg(p) + 1);
    return p;
}

Poly pmul(const Poly& x, const Poly& y, long long p) {
    if (x.empty() || y.empty()) return {};
    Poly r(x.size() + y.size() - 1, 0);
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < y.size(); ++j) r[i + j] = (r[i + j] + x[i] * y[j]) % p;
    return ptrim(r);
}

Poly padd(const Poly& x, const Poly& y, long long p) {
    Poly r(std::max(x.size(), y.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        long long v = (i < x.size() ? x[i] : 0) + (i < y.size() ? y[i] : 0);
        r[i] = v % p;
    }
    return ptrim(r);
}

Poly pscale(const Poly& x, long long c, long long p) {
    Poly r = x;
    for (auto& v : r) v = v * c % p;
    return ptrim(r);
}

long long inv_mod(long long a, long long p) {
    a %= p;
    long long t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        long long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    return ((t % p) + p) % p;
}

// x mod m, m monic-enough (leading coefficient invertible)
Poly pmod(Poly x, const Poly& m, long long p) {
    int dm = pdeg(m);
    long long lead_inv = inv_mod(m[dm], p);
    x = ptrim(std::move(x));
    while (pdeg(x) >= dm) {
        int dx = pdeg(x);
        long long c = x[dx] * lead_inv % p;
        for (int i = 0; i <= dm; ++i) {
            long long v = x[dx - dm + i] - c * m[i] % p;
            x[dx - dm + i] = ((v % p) + p) % p;
        }
        x = ptrim(std::move(x));
    }
    return x;
}

std::pair<Poly, Poly> pdivmod(Poly x, const Poly& m, long long p) {
    int dm = pdeg(m);
    long long lead_inv = inv_mod(m[dm], p);
    x = ptrim(std::move(x));
    Poly q(std::max(0, pdeg(x) - dm + 1), 0);
    while (pdeg(x) >= dm) {
        int dx = pdeg(x);
        long long c = x[dx] * lead_inv % p;
        q[dx - dm] = c;
        for (int i = 0; i <= dm; ++i) {
            long long v = x[dx - dm + i] - c * m[i] % p;
            x[dx - dm + i] = ((v % p) + p) % p;
        }
        x = ptrim(std::move(x));
    }
    return {ptrim(std::move(q)), x};
}

// extended Euclid: returns g, u with u*x = g (mod m)
std::pair<Poly, Poly> pgcdx(Poly x, Poly m, long long p) {
    Poly r0 = std::move(m), r1 = ptrim(std::move(x));
    Poly u0 = {}, u1 = {1};
    while (pdeg(r1) >= 0) {
        auto [q, r] = pdivmod(r0, r1, p);
        Poly nu = padd(u0, pscale(pmul(q, u1, p), p - 1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(nu);
    }
    return {r0, u0};
}

long long pack(const Poly& x, long long p, int deg) {
    long long v = 0;
    for (int i = deg - 1; i >= 0; --i) v = v * p + (i < (int)x.size() ? x[i] : 0);
    return v;
}

Poly unpack(long long v, long long p, int deg) {
    Poly x(deg, 0);
    for (int i = 0; i < deg; ++i) {
        x[i] = v % p;
        v /= p;
    }
    return ptrim(std::move(x));
}

bool poly_irreducible(const Poly& m, long long p) {
    int d = pdeg(m);
    if (d < 1) return false;
    // trial division by all monic polynomials of degree 1..d/2
    for (int e = 1; 2 * e <= d; ++e) {
        long long count = 1;
        for (int i = 0; i < e; ++i) count *= p;
        for (long long idx = 0; idx < count; ++idx) {
            Poly f = unpack(idx, p, e);
            f.resize(e + 1, 0);
            f[e] = 1;
            if (pdeg(pmod(m, f, p)) < 0) return false;
        }
    }
    return true;
}

// ---- GF(2)[t] polynomials as bitmasks ----

int bdeg(unsigned long long x) { return x == 0 ? -1 : 63 - __builtin_clzll(x); }

unsigned long long bmul(unsigned long long x, unsigned long long y) {
    if (x && y && bdeg(x) + bdeg(y) > 62) fail("BudgetExceeded", "GF(2)[t] degree overflow");
    unsigned long long r = 0;
    while (y) {
        if (y & 1) r ^= x;
        x <<= 1;
        y >>= 1;
    }
    return r;
}

unsigned long long bmod(unsigned long long x, unsigned long long m) {
    int dm = bdeg(m);
    while (bdeg(x) >= dm) x ^= m << (bdeg(x) - dm);
    return x;
}

unsigned long long bgcd(unsigned long long x, unsigned long long y) {
    while (y) {
        x = bmod(x, y);
        std::swap(x, y);
    }
    return x;
}

unsigned long long bdiv(unsigned long long x, unsigned long long m) {
    int dm = bdeg(m);
    unsigned long long q = 0;
    while (bdeg(x) >= dm) {
        int s = bdeg(x) - dm;
        q |= 1ULL << s;
        x ^= m << s;
    }
    return q;
}

// ---- small rational helpers ----

long long checked_ll(__int128 v) {
    if (v > INT64_MAX / 2 || v < INT64_MIN / 2) fail("BudgetExceeded", "rational overflow");
    return (long long)v;
}

// ---- parsing helpers ----

std::string strip_ws(const std::string& s) {
    std::string r;
    for (char c : s)
        if (!std::isspace((unsigned char)c)) r += c;
    return r;
}

// parses "2t^2+t+1" / "t" / "-3" into ascending coefficients over the integers
Poly parse_poly_z(const std::string& in) {
    std::string s = strip_ws(in);
    if (s.empty()) fail("ParseError", "empty polynomial");
    Poly coeffs;
    size_t i = 0;
    long long sign = 1;
    while (i < s.size()) {
        if (s[i] == '+') {
            sign = 1;
            ++i;
            continue;
        }
        if (s[i] == '-') {
            sign = -1;
            ++i;
            continue;
        }
        long long c = 1;
        bool have_digits = false;
        long long v = 0;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) {
            v = v * 10 + (s[i] - '0');
            have_digits = true;
            ++i;
        }
        if (have_digits) c = v;
        if (i < s.size() && s[i] == '*') ++i;
        int e = 0;
        if (i < s.size() && s[i] == 't') {
            ++i;
            e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                if (i >= s.size() || !std::isdigit((unsigned char)s[i]))
                    fail("ParseError", "bad exponent in '" + in + "'");
                e = 0;
                while (i < s.size() && std::isdigit((unsigned char)s[i])) {
                    e = e * 10 + (s[i] - '0');
                    ++i;
                }
            }
        } else if (!have_digits) {
            fail("ParseError", "unexpected character in '" + in + "'");
        }
        if (e > 62) fail("ParseError", "exponent too large");
        if ((int)coeffs.size() <= e) coeffs.resize(e + 1, 0);
        coeffs[e] += sign * c;
        sign = 1;
    }
    return coeffs;
}

std::string poly_to_string(const Poly& x) {
    int d = pdeg(x);
    if (d < 0) return "0";
    std::string s;
    for (int i = d; i >= 0; --i) {
        if (x[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(x[i]);
        } else {
            if (x[i] != 1) s += std::to_string(x[i]);
            s += "t";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

}  // namespace

// ---- ClassSystem accessors ----

const std::vector<Fel>& ClassSystem::S() const {
    if (!s_available) fail("InfiniteClassSet", "S not available for " + field->spec_string());
    return s_reps;
}
const std::vector<Fel>& ClassSystem::T() const {
    if (!t_available) fail("InfiniteClassSet", "T not available for " + field->spec_string());
    return t_reps;
}
const std::vector<Fel>& ClassSystem::R() const {
    if (!r_available) fail("InfiniteClassSet", "R not available for " + field->spec_string());
    return r_reps;
}

// ---- construction ----

FieldPtr Field::rationals() {
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::Rationals;
    return f;
}

FieldPtr Field::prime(long long p) {
    if (!is_prime_ll(p)) fail("NotPrime", std::to_string(p) + " is not prime");
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::Prime;
    f->char_ = p;
    f->size_ = p;
    return f;
}

FieldPtr Field::extension(long long p, std::vector<long long> modulus) {
    if (!is_prime_ll(p)) fail("NotPrime", std::to_string(p) + " is not prime");
    for (auto& c : modulus) c = ((c % p) + p) % p;
    int d = pdeg(modulus);
    if (d < 2) fail("ParseError", "extension modulus must have degree >= 2");
    modulus.resize(d + 1);
    if (modulus[d] != 1) fail("ReducibleModulus", "modulus is not monic");
    if (!poly_irreducible(modulus, p))
        fail("ReducibleModulus", poly_to_string(modulus) + " is reducible over GF(" + std::to_string(p) + ")");
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::Extension;
    f->char_ = p;
    f->deg_ = d;
    f->modulus_ = std::move(modulus);
    f->size_ = ipow_checked(p, d);
    return f;
}

FieldPtr Field::rational_function2() {
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::RationalFunction2;
    f->char_ = 2;
    return f;
}

FieldPtr Field::parse(const std::string& text) {
    std::string s = strip_ws(text);
    if (s == "Q") return rationals();
    if (s == "GF(2)(t)") return rational_function2();
    if (s.rfind("GF(", 0) != 0) fail("ParseError", "unrecognized field '" + text + "'");
    size_t close = s.find(')');
    if (close == std::string::npos) fail("ParseError", "unrecognized field '" + text + "'");
    std::string qstr = s.substr(3, close - 3);
    long long q = 0;
    for (char c : qstr) {
        if (!std::isdigit((unsigned char)c)) fail("ParseError", "bad field size '" + qstr + "'");
        q = q * 10 + (c - '0');
    }
    if (close + 1 == s.size()) return prime(q);
    // GF(q)=GF(p)[t]/(poly)
    std::string rest = s.substr(close + 1);
    if (rest[0] != '=' || rest.rfind("=GF(", 0) != 0) fail("ParseError", "unrecognized field '" + text + "'");
    size_t pc = rest.find(')');
    if (pc == std::string::npos) fail("ParseError", "unrecognized field '" + text + "'");
    long long p = 0;
    for (size_t i = 4; i < pc; ++i) {
        if (!std::isdigit((unsigned char)rest[i])) fail("ParseError", "bad characteristic");
        p = p * 10 + (rest[i] - '0');
    }
    std::string tail = rest.substr(pc + 1);
    if (tail.rfind("[t]/(", 0) != 0 || tail.back() != ')')
        fail("ParseError", "unrecognized field '" + text + "'");
    std::string polystr = tail.substr(5, tail.size() - 6);
    if (!is_prime_ll(p)) fail("NotPrime", std::to_string(p) + " is not prime");
    Poly m = parse_poly_z(polystr);
    auto f = extension(p, m);
    if (q != f->size()) fail("ParseError", "declared size does not match p^deg");
    return f;
}

std::string Field::spec_string() const {
    switch (kind_) {
        case FieldKind::Rationals: return "Q";
        case FieldKind::Prime: return "GF(" + std::to_string(char_) + ")";
        case FieldKind::Extension:
            return "GF(" + std::to_string(size_) + ")=GF(" + std::to_string(char_) + ")[t]/(" +
                   poly_to_string(modulus_) + ")";
        case FieldKind::RationalFunction2: return "GF(2)(t)";
    }
    return "?";
}

long long Field::size() const {
    if (!finite()) fail("InfiniteField", spec_string() + " is infinite");
    return size_;
}

// ---- arithmetic ----

Fel Field::canon_rational(long long num, long long den) const {
    if (den == 0) fail("DivisionByZero", "zero denominator");
    if (num == 0) return {0, 1};
    long long g = std::gcd(std::llabs(num), std::llabs(den));
    num /= g;
    den /= g;
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return {num, den};
}

Fel Field::canon_ratfunc(unsigned long long num, unsigned long long den) const {
    if (den == 0) fail("DivisionByZero", "zero denominator");
    if (num == 0) return {0, 1};
    unsigned long long g = bgcd(num, den);
    return {(long long)bdiv(num, g), (long long)bdiv(den, g)};
}

Fel Field::from_int(long long n) const {
    switch (kind_) {
        case FieldKind::Rationals: return {n, 1};
        case FieldKind::Prime:
        case FieldKind::Extension: return {((n % char_) + char_) % char_, 1};
        case FieldKind::RationalFunction2: return {((n % 2) + 2) % 2, 1};
    }
    return {};
}

Fel Field::add(const Fel& x, const Fel& y) const {
    switch (kind_) {
        case FieldKind::Prime: return {(x.a + y.a) % char_, 1};
        case FieldKind::Extension: {
            Poly r = padd(unpack(x.a, char_, deg_), unpack(y.a, char_, deg_), char_);
            return {pack(r, char_, deg_), 1};
        }
        case FieldKind::Rationals:
            return canon_rational(checked_ll((__int128)x.a * y.b + (__int128)y.a * x.b),
                                  checked_ll((__int128)x.b * y.b));
        case FieldKind::RationalFunction2: {
            unsigned long long n = bmul(x.a, y.b) ^ bmul(y.a, x.b);
            return canon_ratfunc(n, bmul(x.b, y.b));
        }
    }
    return {};
}

Fel Field::neg(const Fel& x) const {
    switch (kind_) {
        case FieldKind::Prime: return {(char_ - x.a) % char_, 1};
        case FieldKind::Extension: {
            Poly r = pscale(unpack(x.a, char_, deg_), char_ - 1, char_);
            return {pack(r, char_, deg_), 1};
        }
        case FieldKind::Rationals: return {-x.a, x.b};
        case FieldKind::RationalFunction2: return x;
    }
    return {};
}

Fel Field::sub(const Fel& x, const Fel& y) const { return add(x, neg(y)); }

Fel Field::mul(const Fel& x, const Fel& y) const {
    switch (kind_) {
        case FieldKind::Prime: return {x.a * y.a % char_, 1};
        case FieldKind::Extension: {
            Poly r = pmod(pmul(unpack(x.a, char_, deg_), unpack(y.a, char_, deg_), char_), modulus_, char_);
            return {pack(r, char_, deg_), 1};
        }
        case FieldKind::Rationals:
            return canon_rational(checked_ll((__int128)x.a * y.a), checked_ll((__int128)x.b * y.b));
        case FieldKind::RationalFunction2: return canon_ratfunc(bmul(x.a, y.a), bmul(x.b, y.b));
    }
    return {};
}

Fel Field::inv(const Fel& x) const {
    if (is_zero(x)) fail("DivisionByZero", "inverse of zero");
    switch (kind_) {
        case FieldKind::Prime: return {inv_mod(x.a, char_), 1};
        case FieldKind::Extension: {
            auto [g, u] = pgcdx(unpack(x.a, char_, deg_), modulus_, char_);
            // g is a nonzero constant since the modulus is irreducible
            Poly r = pmod(pscale(u, inv_mod(g[0], char_), char_), modulus_, char_);
            return {pack(r, char_, deg_), 1};
        }
        case FieldKind::Rationals: return canon_rational(x.b, x.a);
        case FieldKind::RationalFunction2: return canon_ratfunc(x.b, x.a);
    }
    return {};
}

// ---- enumeration ----

Fel Field::element(long long index) const {
    if (!finite()) fail("InfiniteField", spec_string() + " is infinite");
    if (index < 0 || index >= size_) fail("ParseError", "element index out of range");
    return {index, 1};
}

long long Field::index_of(const Fel& x) const {
    if (!finite()) fail("InfiniteField", spec_string() + " is infinite");
    return x.a;
}

std::vector<Fel> Field::elements() const {
    if (!finite()) fail("InfiniteField", spec_string() + " is infinite");
    std::vector<Fel> r;
    r.reserve(size_);
    for (long long i = 0; i < size_; ++i) r.push_back({i, 1});
    return r;
}

std::vector<Fel> Field::bounded_elements(int degree_bound) const {
    if (kind_ != FieldKind::RationalFunction2)
        fail("Unsupported", "bounded_elements is for GF(2)(t)");
    if (degree_bound < 0 || degree_bound > 20) fail("BudgetExceeded", "degree bound out of range");
    std::vector<Fel> out;
    unsigned long long lim = 1ULL << (degree_bound + 1);
    for (unsigned long long den = 1; den < lim; ++den)
        for (unsigned long long num = 0; num < lim; ++num) {
            Fel e = canon_ratfunc(num, den);
            if ((unsigned long long)e.a == num && (unsigned long long)e.b == den) out.push_back(e);
        }
    // canonical order: degree profile, then denominator, then numerator
    std::sort(out.begin(), out.end(), [](const Fel& x, const Fel& y) {
        int dx = std::max(bdeg(x.a), bdeg(x.b)), dy = std::max(bdeg(y.a), bdeg(y.b));
        if (dx != dy) return dx < dy;
        if (x.b != y.b) return x.b < y.b;
        return x.a < y.a;
    });
    return out;
}

// ---- squares ----

std::optional<Fel> Field::square_root(const Fel& x) const {
    switch (kind_) {
        case FieldKind::Prime:
        case FieldKind::Extension: {
            for (long long i = 0; i < size_; ++i) {
                Fel q{i, 1};
                if (mul(q, q) == x) return q;
            }
            return std::nullopt;
        }
        case FieldKind::Rationals: {
            if (x.a == 0) return Fel{0, 1};
            if (x.a < 0) return std::nullopt;
            auto isqrt = [](long long v) -> std::optional<long long> {
                long long r = (long long)std::llround(std::sqrt((double)v));
                for (long long c = std::max(0LL, r - 2); c <= r + 2; ++c)
                    if (c * c == v) return c;
                return std::nullopt;
            };
            auto rn = isqrt(x.a), rd = isqrt(x.b);
            if (rn && rd) return Fel{*rn, *rd};
            return std::nullopt;
        }
        case FieldKind::RationalFunction2: {
            // n/d reduced is a square iff n and d only have even-degree terms
            auto sqrt_poly = [](unsigned long long v) -> std::optional<unsigned long long> {
                unsigned long long r = 0;
                for (int i = 0; i <= bdeg((long long)v); ++i)
                    if (v >> i & 1) {
                        if (i % 2) return std::nullopt;
                        r |= 1ULL << (i / 2);
                    }
                return r;
            };
            auto rn = sqrt_poly(x.a), rd = sqrt_poly(x.b);
            if (rn && rd) return Fel{(long long)*rn, (long long)*rd};
            return std::nullopt;
        }
    }
    return std::nullopt;
}

// ---- class systems ----

ClassSystem Field::class_system(int degree_bound) const {
    ClassSystem cs;
    cs.field = shared_from_this();
    if (kind_ == FieldKind::Rationals) return cs;  // squares predicate only

    if (finite()) {
        std::vector<Fel> nonsquares;
        for (long long i = 0; i < size_; ++i)
            if (!is_square({i, 1})) nonsquares.push_back({i, 1});
        // S: orbits of d -> q^2 d over nonsquares
        cs.s_available = true;
        {
            std::vector<bool> seen(size_, false);
            for (const Fel& d : nonsquares) {
                if (seen[d.a]) continue;
                cs.s_reps.push_back(d);
                for (long long q = 1; q < size_; ++q) {
                    Fel v = mul(mul({q, 1}, {q, 1}), d);
                    seen[v.a] = true;
                }
            }
        }
        if (char_ == 2) {
            // T: cosets of the additive image of a -> a^2 - a; 0 first
            cs.t_available = true;
            std::vector<bool> seen(size_, false);
            std::vector<Fel> image;
            for (long long a = 0; a < size_; ++a) image.push_back(sub(mul({a, 1}, {a, 1}), {a, 1}));
            for (long long c = 0; c < size_; ++c) {
                if (seen[c]) continue;
                cs.t_reps.push_back({c, 1});
                for (const Fel& w : image) seen[add({c, 1}, w).a] = true;
            }
            // R: empty since finite fields of characteristic 2 are perfect
            cs.r_available = true;
        }
        return cs;
    }

    // GF(2)(t): degree-bounded computation (no completeness claim)
    cs.degree_bound = degree_bound;
    std::vector<Fel> universe = bounded_elements(degree_bound);
    std::vector<Fel> qs;  // nonzero scalers
    for (const Fel& q : universe)
        if (!is_zero(q)) qs.push_back(q);

    auto reps_of = [&](const std::vector<Fel>& carrier, auto&& related) {
        std::vector<Fel> reps;
        std::vector<bool> used(carrier.size(), false);
        for (size_t i = 0; i < carrier.size(); ++i) {
            if (used[i]) continue;
            reps.push_back(carrier[i]);
            for (size_t j = i; j < carrier.size(); ++j)
                if (!used[j] && related(carrier[i], carrier[j])) used[j] = true;
        }
        return reps;
    };

    std::vector<Fel> nonsquares;
    for (const Fel& x : universe)
        if (!is_square(x)) nonsquares.push_back(x);

    cs.s_available = true;
    cs.s_reps = reps_of(nonsquares, [&](const Fel& d, const Fel& e) {
        for (const Fel& q : qs)
            if (mul(mul(q, q), e) == d || mul(mul(q, q), d) == e) return true;
        return false;
    });
    cs.t_available = true;
    cs.t_reps = reps_of(universe, [&](const Fel& c, const Fel& cc) {
        for (const Fel& a : universe)
            if (sub(c, cc) == sub(mul(a, a), a)) return true;
        return false;
    });
    cs.r_available = true;
    cs.r_reps = reps_of(nonsquares, [&](const Fel& d, const Fel& e) {
        for (const Fel& q : qs)
            if (is_square(sub(d, mul(mul(q, q), e))) || is_square(sub(e, mul(mul(q, q), d))))
                return true;
        return false;
    });
    return cs;
}

// ---- element strings ----

std::string Field::to_string(const Fel& x) const {
    switch (kind_) {
        case FieldKind::Prime: return std::to_string(x.a);
        case FieldKind::Extension: return poly_to_string(unpack(x.a, char_, deg_));
        case FieldKind::Rationals:
            return x.b == 1 ? std::to_string(x.a) : std::to_string(x.a) + "/" + std::to_string(x.b);
        case FieldKind::RationalFunction2: {
            auto bm_to_poly = [](unsigned long long v) {
                Poly r;
                for (int i = 0; i <= bdeg(v); ++i) r.push_back(v >> i & 1);
                return r;
            };
            std::string n = poly_to_string(bm_to_poly(x.a));
            if (x.b == 1) return n;
            std::string d = poly_to_string(bm_to_poly(x.b));
            if (n.find('+') != std::string::npos) n = "(" + n + ")";
            if (d.find('+') != std::string::npos) d = "(" + d + ")";
            return n + "/" + d;
        }
    }
    return "?";
}

Fel Field::parse_element(const std::string& in) const {
    std::string s = strip_ws(in);
    if (s.empty()) fail("ParseError", "empty element");
    switch (kind_) {
        case FieldKind::Prime:
        case FieldKind::Extension: {
            Poly z = parse_poly_z(s);
            Poly r(z.size(), 0);
            for (size_t i = 0; i < z.size(); ++i) r[i] = ((z[i] % char_) + char_) % char_;
            r = ptrim(std::move(r));
            if (kind_ == FieldKind::Prime) {
                if (pdeg(r) > 0) fail("ParseError", "'t' in prime field element");
            } else {
                r = pmod(std::move(r), modulus_, char_);
            }
            return {pack(r, char_, deg_), 1};
        }
        case FieldKind::Rationals: {
            size_t slash = s.find('/');
            auto parse_int = [](const std::string& v) {
                size_t pos = 0;
                long long r = std::stoll(v, &pos);
                if (pos != v.size()) fail("ParseError", "bad integer '" + v + "'");
                return r;
            };
            if (slash == std::string::npos) return {parse_int(s), 1};
            return canon_rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
        }
        case FieldKind::RationalFunction2: {
            auto poly_bits = [&](std::string v) -> unsigned long long {
                if (!v.empty() && v.front() == '(' && v.back() == ')') v = v.substr(1, v.size() - 2);
                Poly z = parse_poly_z(v);
                unsigned long long r = 0;
                for (size_t i = 0; i < z.size(); ++i)
                    if (((z[i] % 2) + 2) % 2) r |= 1ULL << i;
                return r;
            };
            int depth = 0;
            size_t slash = std::string::npos;
            for (size_t i = 0; i < s.size(); ++i) {
                if (s[i] == '(') ++depth;
                if (s[i] == ')') --depth;
                if (s[i] == '/' && depth == 0) slash = i;
            }
            if (slash == std::string::npos) return {(long long)poly_bits(s), 1};
            return canon_ratfunc(poly_bits(s.substr(0, slash)), poly_bits(s.substr(slash + 1)));
        }
    }
    fail("ParseError", "bad element '" + in + "'");
}

}  // namespace extalg
