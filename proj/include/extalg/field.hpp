#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace extalg {

/// Error with a stable machine-readable code ("NotPrime", "AxiomsFailed", ...).
struct Error : std::runtime_error {
    std::string code;
    Error(std::string c, const std::string& msg)
        : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
    throw Error(code, msg);
}

enum class FieldKind { Rationals, Prime, Extension, RationalFunction2 };

/// Canonical exact field element. The two words are interpreted by the owning
/// field:
///   Prime:             a = residue in [0, p), b unused (= 1)
///   Extension:         a = coefficient vector packed base p (the enumeration
///                      index in [0, p^deg)), b unused (= 1)
///   Rationals:         a/b reduced, b > 0
///   RationalFunction2: a, b = GF(2)[t] polynomials as bitmasks, b != 0,
///                      gcd(a, b) = 1, a = 0 implies b = 1
/// Equality of elements is representation equality.
struct Fel {
    long long a = 0;
    long long b = 1;
    friend bool operator==(const Fel&, const Fel&) = default;
    friend auto operator<=>(const Fel&, const Fel&) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Representative systems for the square-class machinery on a field:
///   S: k \ k^2 modulo d ~ q^2 d'
///   T: k modulo c ~ c' iff c - c' = a^2 - a  (char 2 only; 0 always in T)
///   R: k \ k^2 modulo delta ~ delta' iff delta - q^2 delta' in k^2 (char 2)
/// Lists are unavailable where the carrier is infinite (Rationals) or the
/// relation is not an equivalence (T in odd characteristic); accessors throw
/// InfiniteClassSet/Unsupported in that case. For RationalFunction2 the lists
/// are computed inside a degree bound and make no completeness claim.
struct ClassSystem {
    FieldPtr field;
    bool s_available = false, t_available = false, r_available = false;
    std::vector<Fel> s_reps, t_reps, r_reps;
    int degree_bound = 0;  // RationalFunction2 only

    const std::vector<Fel>& S() const;
    const std::vector<Fel>& T() const;
    const std::vector<Fel>& R() const;
    /// [k* : (k^2)*] for finite fields (= |S| + 1).
    long long square_index() const { return (long long)S().size() + 1; }
};

/// An exact field: Q, GF(p), GF(p^n) or GF(2)(t). Immutable; share via
/// FieldPtr. All element values are canonical, so Fel equality is field
/// element equality.
class Field : public std::enable_shared_from_this<Field> {
public:
    /// Grammar: `Q` | `GF(p)` | `GF(q)=GF(p)[t]/(poly)` | `GF(2)(t)`.
    static FieldPtr parse(const std::string& text);
    static FieldPtr rationals();
    static FieldPtr prime(long long p);
    /// modulus = coefficients c0..cd of a monic irreducible polynomial, cd = 1.
    static FieldPtr extension(long long p, std::vector<long long> modulus);
    static FieldPtr rational_function2();

    FieldKind kind() const { return kind_; }
    long long characteristic() const { return char_; }
    bool finite() const { return kind_ == FieldKind::Prime || kind_ == FieldKind::Extension; }
    long long size() const;  // InfiniteField when not finite
    int extension_degree() const { return deg_; }
    const std::vector<long long>& modulus() const { return modulus_; }

    Fel zero() const { return {0, 1}; }
    Fel one() const { return {1, 1}; }
    Fel from_int(long long n) const;
    bool is_zero(const Fel& x) const { return x.a == 0; }
    bool is_one(const Fel& x) const { return x == one(); }

    Fel add(const Fel&, const Fel&) const;
    Fel sub(const Fel&, const Fel&) const;
    Fel mul(const Fel&, const Fel&) const;
    Fel neg(const Fel&) const;
    Fel inv(const Fel&) const;  // DivisionByZero on 0
    Fel div(const Fel& x, const Fel& y) const { return mul(x, inv(y)); }

    /// Finite fields: fixed canonical enumeration order, 0 first, then 1.
    Fel element(long long index) const;
    long long index_of(const Fel&) const;
    std::vector<Fel> elements() const;  // InfiniteField when not finite

    /// Elements of GF(2)(t) with numerator and denominator degree <= bound,
    /// in canonical order (0 first, then 1).
    std::vector<Fel> bounded_elements(int degree_bound) const;

    /// Square test with witness: returns q with q*q = x, or nullopt.
    std::optional<Fel> square_root(const Fel&) const;
    bool is_square(const Fel& x) const { return square_root(x).has_value(); }

    ClassSystem class_system(int degree_bound = 2) const;

    std::string to_string(const Fel&) const;
    Fel parse_element(const std::string&) const;

    std::string spec_string() const;  // round-trips through parse
    bool same(const Field& other) const {
        return kind_ == other.kind_ && char_ == other.char_ && modulus_ == other.modulus_;
    }

private:
    Field() = default;
    FieldKind kind_ = FieldKind::Rationals;
    long long char_ = 0;  // characteristic; 0 for Q
    int deg_ = 1;
    std::vector<long long> modulus_;  // Extension only
    long long size_ = 0;              // finite fields only

    Fel canon_rational(long long num, long long den) const;
    Fel canon_ratfunc(unsigned long long num, unsigned long long den) const;
};

}  // namespace extalg
