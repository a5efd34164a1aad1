#pragma once

#include <vector>

#include "cbl/context_system.hpp"

namespace cbl {

/// Curvature of a context system: the GF(2) rank of the first cohomology of
/// the nerve of the cover, fixed at dimensions 0-2 (contexts, overlapping
/// pairs, triples with non-empty triple intersection).
struct CurvatureReport {
    int kappa = 0;
    int rank_delta0 = 0;  // rank of the coboundary C0 -> C1
    int rank_delta1 = 0;  // rank of the coboundary C1 -> C2
    int dim_c0 = 0;
    int dim_c1 = 0;
    int dim_c2 = 0;
};

CurvatureReport kappa(const ContextSystem& sys);

/// Minimal subfamily of context ids with kappa > 0; every proper subfamily
/// is flat.
struct CurvedCore {
    std::vector<int> context_ids;  // ascending

    bool operator==(const CurvedCore& other) const { return context_ids == other.context_ids; }
};

/// Breadth-first enumeration of context subfamilies by increasing size up to
/// max_size. Returns all minimal curved subfamilies; empty means flat up to
/// that size. Throws input_error when max_size exceeds the context count.
std::vector<CurvedCore> curved_cores(const ContextSystem& sys, int max_size = 8);

/// Extends a compatible family on a flat system to the global valuation it
/// induces, by BFS propagation over the context-intersection graph starting
/// from the lowest-index context of each component. Variables untouched by
/// the propagation default to 0.
/// Throws curvature_error when kappa > 0 and input_error when fam is
/// incompatible; a propagation contradiction raises internal_error.
GlobalValuation flatten(const ContextSystem& sys, const CompatibleFamily& fam);

}  // namespace cbl
