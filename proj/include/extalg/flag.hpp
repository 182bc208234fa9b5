#pragma once

#include <optional>
#include <string>
#include <vector>

#include "extalg/unified.hpp"

namespace extalg {

/// Codimension-1 extension data for an algebra A: two characters, two
/// twisted derivations, an element a0 of A and a scalar u. The extension is
/// generated by A and one new element x subject to
///   x^2 = a0 + u x,  a x = d(a) + lambda(a) x,  x a = D(a) + Lambda(a) x.
struct FlagDatum {
    Vec Lambda, lambda;  // character values on the basis of A
    Mat D, d;            // n x n twisted derivations
    Vec a0;
    Fel u;
    friend bool operator==(const FlagDatum&, const FlagDatum&) = default;
    /// Deterministic comparison key (finite fields).
    std::vector<long long> key(const Field& F) const;
};

/// Per-equation verdicts on the six flag compatibility groups.
ConditionReport flag_check(const Algebra& A, const FlagDatum& fd);

/// The extending datum of the dictionary x <| a = Lambda(a) x, x |> a = D(a),
/// a <- x = d(a), a -> x = lambda(a) x, f(x,x) = a0, x.x = u x.
ExtendingDatum flag_to_datum(const Algebra& A, const FlagDatum& fd);

/// Complete list over a finite field (dim A <= 4): per character pair the
/// twisted-derivation conditions are solved linearly, then (a0, u) candidates
/// are filtered through the remaining equations.
std::vector<FlagDatum> enumerate_flag_datums(const Algebra& A);

/// The (dim A + 1)-dimensional extension algebra; throws FlagCheckFailed.
Algebra flag_extension(const Algebra& A, const FlagDatum& fd);

enum class EquivMode { Equivalent, Cohomologous };

/// Witness (q, alpha) relating two flag datums: requires equal characters and
///   D = q D' + [alpha, -]_Lambda,  d = q d' + [-, alpha]_lambda,
///   a0 = q^2 a0' + alpha^2 - u alpha + q d'(alpha) + q D'(alpha),
///   u = q u' + lambda(alpha) + Lambda(alpha).
/// Cohomologous mode pins q = 1.
std::optional<std::pair<Fel, Vec>> flag_equiv(const Algebra& A, const FlagDatum& fd,
                                              const FlagDatum& fd2, EquivMode mode);

struct ClassifiedFamily {
    EquivMode mode = EquivMode::Equivalent;
    std::vector<FlagDatum> datums;                        // enumeration order
    std::vector<int> class_of;                            // datum -> class id
    std::vector<int> representative;                      // class id -> datum index
    std::vector<std::pair<Fel, Vec>> witness;             // datum -> (q, alpha) to its rep
    int class_count() const { return (int)representative.size(); }
};

/// Quotient of the flag datum set by the chosen relation; representatives are
/// the least datum of each class in key order, and every datum carries a
/// verified certificate to its representative.
ClassifiedFamily classify_codim1(const Algebra& A, EquivMode mode);

/// Complete duplicate-free list of m-dimensional algebras built from k by
/// iterated codimension-1 extensions, deduplicated up to isomorphism.
std::vector<Algebra> supersolvable_catalog(FieldPtr F, int m);

struct CatalogEntry {
    std::string name;
    std::string presentation;
    Algebra algebra;
    bool family = false;     // one representative of an infinite family
    std::string note;
};

/// Named normal forms of 2- and 3-dimensional supersolvable algebras,
/// instantiated with this field's square/Artin-Schreier class representatives.
std::vector<CatalogEntry> catalog_dim2(FieldPtr F, int degree_bound = 2);
std::vector<CatalogEntry> catalog_dim3(FieldPtr F, int degree_bound = 2);

struct FlagFamily {
    std::string name;
    std::vector<FlagDatum> members;
};

/// The parametrized flag-datum families of the bases k_(0,0) and k_(0,1);
/// over finite fields their union equals enumerate_flag_datums exactly.
std::vector<FlagFamily> flag_family_generators(const Algebra& A);

}  // namespace extalg
