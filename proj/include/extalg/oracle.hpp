#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "extalg/algebra.hpp"

namespace extalg {

/// Exhaustive enumeration of unital associative multiplication tables with
/// the unit pinned to basis vector 0 (which forces every product with e_0).
struct EnumerationTask {
    EnumerationTask(FieldPtr f, int d) : F(std::move(f)), dim(d) {}
    FieldPtr F;
    int dim = 2;
    bool require_commutative = false;
    bool require_supersolvable = false;
    std::optional<Algebra> contains;  // keep only algebras with a unital subalgebra isomorphic to this
    long long budget = 50'000'000;    // candidate-count ceiling
    int threads = 1;

    /// |field|^{(dim-1)^2 * dim}: the raw candidate count (may overflow the
    /// budget, in which case enumeration refuses to run).
    long long candidate_count() const;
};

/// All tables passing the filters, in odometer order over the free entries;
/// the result is independent of the thread count.
std::vector<Algebra> enumerate_algebras(const EnumerationTask& task);

struct IsoClasses {
    std::vector<int> class_of;        // input index -> class id
    std::vector<int> representative;  // class id -> first input index
    std::vector<long long> class_size;
    int count() const { return (int)representative.size(); }
};

/// Partition under isomorphism with invariant pre-bucketing; representatives
/// are the first members in input order.
IsoClasses iso_classes(const std::vector<Algebra>& algebras);

/// Extensions of A by one basis vector, classified up to isomorphisms that
/// restrict to the identity on A. A must carry its unit at basis index 0.
struct ExtensionClasses {
    std::vector<Algebra> representatives;  // tables on A (+) k x
    std::vector<long long> class_size;
    long long total_tables = 0;
    long long valid = 0;
};
ExtensionClasses brute_extensions_codim1(const Algebra& A, long long budget = 50'000'000);

}  // namespace extalg
