#pragma once

#include <optional>
#include <string>
#include <vector>

#include "extalg/flag.hpp"
#include "extalg/unified.hpp"

namespace extalg {

/// Finite group realized as a closed element set with a multiplication
/// table. Elements carry their realization: the automorphism matrix on the
/// ambient algebra and, for the pair forms, the defining data.
struct FiniteGroup {
    std::vector<std::string> labels;
    std::vector<std::vector<int>> table;
    int identity = -1;
    std::vector<Mat> action;  // automorphism matrices on the extension

    int order() const { return (int)labels.size(); }
    void validate_or_throw() const;
    bool abelian() const;
    int element_order(int g) const;
    std::vector<int> element_orders() const;  // sorted
    /// Heuristic isomorphism-type name ("Z/4", "GL(2,2)", ...); may be empty.
    std::string iso_hint() const;
};

/// Builds the table of a set of matrices closed under multiplication.
FiniteGroup group_from_matrices(const Field& F, const std::vector<Mat>& mats);

/// Automorphisms of B fixing the span of a_rows pointwise, with table.
FiniteGroup galois_group_brute(const Algebra& B, const Mat& a_rows);

/// Pair presentation on a unified product: all (r, sigma) with sigma
/// invertible acting by psi(a, x) = (a + r(x), sigma(x)), multiplied by
/// (r, sigma)(r', sigma') = (r' + r sigma', sigma sigma').
struct PairGroupElement {
    Mat r;      // adim x vdim
    Mat sigma;  // vdim x vdim
};
struct UnifiedGaloisGroup {
    FiniteGroup group;
    std::vector<PairGroupElement> pairs;  // aligned with group elements
};
UnifiedGaloisGroup galois_group_unified(const ExtendingDatum& D);

/// Codimension-1 pair form: all (alpha, q) in A x k* with
///   (1-q) D(a) = alpha a - Lambda(a) alpha,
///   (1-q) d(a) = a alpha - lambda(a) alpha,
///   (1-q^2) a0 = alpha^2 - u alpha + q d(alpha) + q D(alpha),
///   (1-q) u   = lambda(alpha) + Lambda(alpha),
/// multiplied by (alpha, q)(alpha', q') = (alpha' + q' alpha, q q').
struct CodimOneGaloisGroup {
    FiniteGroup group;
    std::vector<std::pair<Vec, Fel>> pairs;  // (alpha, q)
};
CodimOneGaloisGroup galois_group_codim1(const Algebra& A, const FlagDatum& fd);

/// The abelian normal subgroup of pairs with sigma = id (automorphisms that
/// also act as the identity on the complement).
UnifiedGaloisGroup stabilizing_costabilizing_subgroup(const ExtendingDatum& D);

/// Fixed subalgebra of the full Galois group and the Galois-extension test.
struct GaloisTestResult {
    Mat fixed_rows;  // echelon basis of B^G
    bool is_galois = false;
};
GaloisTestResult invariants_and_galois_test(const Algebra& B, const Mat& a_rows);

/// Order of GL(m, q).
long long gl_order(long long q, int m);

}  // namespace extalg
