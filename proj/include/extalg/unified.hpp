#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "extalg/algebra.hpp"

namespace extalg {

/// Bilinear map between coordinate spaces, stored by its values on basis
/// pairs: value(i, j) is a codomain coefficient vector.
struct BilinearMap {
    int l = 0, r = 0, c = 0;
    std::vector<Fel> t;  // ((i*r)+j)*c + k

    BilinearMap() = default;
    BilinearMap(int left, int right, int codim)
        : l(left), r(right), c(codim), t((size_t)left * right * codim, Fel{0, 1}) {}
    Fel& at(int i, int j, int k) { return t[((size_t)i * r + j) * c + k]; }
    const Fel& at(int i, int j, int k) const { return t[((size_t)i * r + j) * c + k]; }
    Vec value(int i, int j) const {
        return Vec(t.begin() + ((size_t)i * r + j) * c, t.begin() + ((size_t)i * r + j + 1) * c);
    }
    void set_value(int i, int j, const Vec& v) {
        std::copy(v.begin(), v.end(), t.begin() + ((size_t)i * r + j) * c);
    }
    /// Bilinear extension.
    Vec apply(const Field& F, const Vec& u, const Vec& w) const;
    bool is_zero() const {
        for (const Fel& x : t)
            if (x.a != 0) return false;
        return true;
    }
    friend bool operator==(const BilinearMap&, const BilinearMap&) = default;
};

/// The six bilinear maps connecting an algebra A and a space V:
///   lact    x <| a : V x A -> V      ract    x |> a : V x A -> A
///   lhar    a <- x : A x V -> A      rhar    a -> x : A x V -> V
///   cocycle f(x,y) : V x V -> A      vmult   x . y : V x V -> V
struct ExtendingDatum {
    Algebra A;
    int vdim = 0;
    BilinearMap lact, ract, lhar, rhar, cocycle, vmult;

    ExtendingDatum() = default;
    ExtendingDatum(Algebra a, int m);
    int adim() const { return A.dim; }
};

/// Per-axiom verdicts for the normalization check plus A1..A12; failing
/// entries carry the first offending basis tuple.
struct AxiomReport {
    struct Entry {
        bool ok = true;
        std::string witness;
    };
    Entry normalization;
    std::array<Entry, 12> axiom;
    bool all_ok() const;
    std::string first_failure() const;
};

AxiomReport check_axioms(const ExtendingDatum& D);

/// Product algebra on A x V regardless of axiom status (for cross-checks).
Algebra unified_product_raw(const ExtendingDatum& D);
/// Guarded product: throws AxiomsFailed unless every axiom passes.
Algebra unified_product(const ExtendingDatum& D);

/// Extracts the datum of E relative to the subalgebra spanned by a_rows and
/// the retraction p (a_rows.rows x E.dim matrix taking E coordinates to
/// subalgebra coordinates; p restricted to the span must be the identity).
/// Returns the datum plus the map phi(a, x) = a + x back into E, as a matrix
/// whose first adim columns are the subalgebra basis and remaining columns
/// the kernel basis of p.
std::pair<ExtendingDatum, Mat> datum_from_retraction(const Algebra& E, const Mat& a_rows,
                                                     const Mat& p);

/// Pair (r, v) describing psi(a, x) = (a + r(x), v(x)).
struct MorphismPair {
    Mat r;  // adim x vdim
    Mat v;  // vdim x vdim
};

/// True iff the six morphism conditions hold, i.e. psi is an algebra map of
/// the two unified products (which must share A and vdim).
bool morphism_check(const ExtendingDatum& D, const ExtendingDatum& E, const MorphismPair& pair);

/// Matrix of psi on A x V coordinates.
Mat morphism_matrix(const ExtendingDatum& D, const MorphismPair& pair);

/// Exhaustive search for a pair with invertible v (equivalence witness) or
/// with v = id (cohomologous witness). Finite fields only.
std::optional<MorphismPair> find_equivalence(const ExtendingDatum& D, const ExtendingDatum& E);
std::optional<Mat> find_cohomologous(const ExtendingDatum& D, const ExtendingDatum& E);

/// Structural tags of a datum that passes the axioms.
std::vector<std::string> classify_special(const ExtendingDatum& D);

/// Matched pair: cocycle-free datum with (V, .) an associative multiplication.
struct MatchedPair {
    Algebra A;
    int vdim = 0;
    BilinearMap vmult, lact, ract, lhar, rhar;
};

struct ConditionReport {
    struct Entry {
        std::string name;
        bool ok = true;
        std::string witness;
    };
    std::vector<Entry> entries;
    bool all_ok() const {
        for (const auto& e : entries)
            if (!e.ok) return false;
        return true;
    }
    std::string first_failure() const;
};

ConditionReport matched_pair_check(const MatchedPair& mp);
Algebra bicrossed_product(const MatchedPair& mp);
ExtendingDatum matched_pair_datum(const MatchedPair& mp);

/// Splits E across the complementary closed spans a_rows (unital) and v_rows
/// (not necessarily unital); the extracted cocycle vanishes.
MatchedPair factorize(const Algebra& E, const Mat& a_rows, const Mat& v_rows);

/// Finite group given by labels and a multiplication table of indices.
struct GroupPresentationInput {
    std::vector<std::string> labels;
    std::vector<std::vector<int>> table;
    int identity = 0;
    int size() const { return (int)labels.size(); }
    void validate() const;  // closure, identity, inverses, associativity
};

/// Crossed product of A by G: free left A-module on G with multiplication
/// (a g)(b h) = a (g|>b) f(g,h) gh. Actions are per-element automorphism
/// matrices; the cocycle takes values in the units of A.
Algebra crossed_product(const Algebra& A, const GroupPresentationInput& G,
                        const std::vector<Mat>& action, const std::vector<std::vector<Vec>>& cocycle);

/// Commutative datum (A commutative; f and . symmetric).
struct CommutativeDatum {
    Algebra A;
    int vdim = 0;
    BilinearMap lact, ract, cocycle, vmult;  // x <| a, x |> a, f, .
};

/// Report on the six commutative axioms; the expanded datum (with
/// a <- x := x |> a and a -> x := x <| a) passes A1..A12 iff these pass.
ConditionReport commutative_check(const CommutativeDatum& D);
ExtendingDatum expand_commutative(const CommutativeDatum& D);

/// Two-sided inverse in A, when it exists.
std::optional<Vec> algebra_inverse(const Algebra& A, const Vec& u);

/// Direct associativity-plus-unit test (independent of the axiom system).
bool is_associative_unital(const Algebra& A);

}  // namespace extalg
