#pragma once

#include <optional>
#include <string>
#include <vector>

#include "extalg/linalg.hpp"

namespace extalg {

/// Finite-dimensional unital associative algebra over an exact field, given
/// by structure constants: table entry (i, j) is the coefficient vector of
/// e_i * e_j in the basis. The unit is an arbitrary coefficient vector.
struct Algebra {
    FieldPtr F;
    int dim = 0;
    std::vector<Fel> table;  // ((i*dim)+j)*dim + l
    Vec unit;

    Algebra() = default;
    Algebra(FieldPtr f, int n) : F(std::move(f)), dim(n), table((size_t)n * n * n, Fel{0, 1}), unit(vec_zero(n)) {}

    Fel& c(int i, int j, int l) { return table[((size_t)i * dim + j) * dim + l]; }
    const Fel& c(int i, int j, int l) const { return table[((size_t)i * dim + j) * dim + l]; }
    Vec basis_product(int i, int j) const {
        return Vec(table.begin() + ((size_t)i * dim + j) * dim, table.begin() + ((size_t)i * dim + j + 1) * dim);
    }
    void set_product(int i, int j, const Vec& v) {
        std::copy(v.begin(), v.end(), table.begin() + ((size_t)i * dim + j) * dim);
    }

    /// Bilinear extension of the table.
    Vec mul(const Vec& u, const Vec& v) const;
    bool is_commutative() const;
    /// Deterministic serialization of (table, unit); used as a dedup key.
    std::string key() const;
};

struct ValidationIssue {
    enum Kind { Associativity, Unit } kind;
    int i = 0, j = 0, l = 0;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    std::string summary() const;
};

/// Lists every failing associativity triple and unitality basis vector.
ValidationReport validate(const Algebra& A);

/// Unital multiplicative linear functional, stored as its values on the basis.
struct Character {
    Vec row;
    Fel apply(const Field& F, const Vec& v) const { return dot(F, row, v); }
};

/// Complete character list. Finite fields: exhaustive; Q: monogenic algebras
/// via rational roots of the generator's minimal polynomial.
std::vector<Character> characters(const Algebra& A);

/// Echelon basis of the smallest unital subalgebra containing the generators.
Mat subalgebra_generated(const Algebra& A, const std::vector<Vec>& gens);

/// rows span a multiplicatively closed subspace; `unital` additionally
/// requires the unit of A to lie in the span.
bool is_subalgebra(const Algebra& A, const Mat& rows, bool unital = true);

/// The algebra structure induced on a closed span, in row coordinates.
Algebra subalgebra_restrict(const Algebra& A, const Mat& rows);

/// Conjugated table for the new basis given by the columns of C.
Algebra change_basis(const Algebra& A, const Mat& C);

/// Basis change moving the unit into position 0; returns (algebra, C) with
/// new coordinates x satisfying old = C * x.
std::pair<Algebra, Mat> with_unit_first(const Algebra& A);

/// Unit-preserving multiplicative bijection A -> B as a matrix (columns are
/// images of basis vectors), or nullopt. Finite fields by pruned exhaustive
/// search; Q only for dim <= 2 via quadratic normal forms.
std::optional<Mat> find_isomorphism(const Algebra& A, const Algebra& B);

/// All algebra automorphisms of B restricting to the identity on the span of
/// a_rows (validated to be a unital subalgebra).
std::vector<Mat> automorphisms_fixing(const Algebra& B, const Mat& a_rows);

/// Chain of unital subalgebras k = E_0 c ... c E_m = E with codimension-1
/// steps, as echelon bases in E coordinates, or nullopt.
std::optional<std::vector<Mat>> supersolvable_tower(const Algebra& E);

/// Cheap isomorphism invariants used for search pruning (finite fields).
struct AlgebraInvariants {
    bool commutative = false;
    long long idempotents = 0;   // v*v = v
    long long square_zero = 0;   // v*v = 0
    long long characters = 0;
    int center_dim = 0;
    friend bool operator==(const AlgebraInvariants&, const AlgebraInvariants&) = default;
};
AlgebraInvariants invariants(const Algebra& A);

/// Matrix of left multiplication by v.
Mat left_mult(const Algebra& A, const Vec& v);
Mat right_mult(const Algebra& A, const Vec& v);

// Builders for standard presentations; basis index 0 is the unit.
Algebra algebra_k(FieldPtr F);
/// Basis {1, x} with x^2 = a + b x.
Algebra algebra_dim2(FieldPtr F, const Fel& a, const Fel& b);
/// Basis {1, x, y} with the four products given as coefficient vectors.
Algebra algebra_dim3(FieldPtr F, const Vec& xx, const Vec& yy, const Vec& xy, const Vec& yx);
/// Full matrix algebra M_2(k), basis {E11, E12, E21, E22}.
Algebra algebra_m2(FieldPtr F);

}  // namespace extalg
