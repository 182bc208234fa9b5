#pragma once

// Shared example algebras used across the test suites.

#include "extalg/algebra.hpp"

namespace extalg::fixtures {

/// 3-dim algebra, basis {1, x, y}: x^2 = 0, y^2 = y, xy = x, yx = 0.
inline Algebra ana1(FieldPtr F) {
    Vec z = vec_zero(3);
    Vec x = {F->zero(), F->one(), F->zero()};
    Vec y = {F->zero(), F->zero(), F->one()};
    return algebra_dim3(F, z, y, x, z);
}

/// 3-dim algebra, basis {1, x, y}: x^2 = x, y^2 = 0, xy = y, yx = 0.
inline Algebra ana2(FieldPtr F) {
    Vec z = vec_zero(3);
    Vec x = {F->zero(), F->one(), F->zero()};
    Vec y = {F->zero(), F->zero(), F->one()};
    return algebra_dim3(F, x, z, y, z);
}

/// 4-dim algebra with basis {e1, e2, e3, e4}, unit e1 + e2:
/// e1e1 = e1, e1e3 = e3e1 = e3, e2e2 = e2, e2e4 = e4, e4e1 = e4.
inline Algebra ana3_b(FieldPtr F) {
    Algebra B(F, 4);
    auto one = F->one();
    B.c(0, 0, 0) = one;
    B.c(0, 2, 2) = one;
    B.c(2, 0, 2) = one;
    B.c(1, 1, 1) = one;
    B.c(1, 3, 3) = one;
    B.c(3, 0, 3) = one;
    B.unit = {one, one, F->zero(), F->zero()};
    return B;
}

/// 4-dim algebra with basis {e1, e2, e3, e4}, unit e1 + e2:
/// e1e1 = e1, e2e2 = e2, e2e3 = e3, e2e4 = e4, e3e1 = e3, e4e1 = e4.
inline Algebra ana3_c(FieldPtr F) {
    Algebra C(F, 4);
    auto one = F->one();
    C.c(0, 0, 0) = one;
    C.c(1, 1, 1) = one;
    C.c(1, 2, 2) = one;
    C.c(1, 3, 3) = one;
    C.c(2, 0, 2) = one;
    C.c(3, 0, 3) = one;
    C.unit = {one, one, F->zero(), F->zero()};
    return C;
}

/// Echelon rows spanning {e1, e2} inside the 4-dim examples above.
inline Mat ana3_subalgebra(FieldPtr F) {
    Mat rows(2, 4);
    rows.at(0, 0) = F->one();
    rows.at(1, 1) = F->one();
    return rows;
}

}  // namespace extalg::fixtures
