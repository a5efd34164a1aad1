#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cbl/context_system.hpp"

namespace cbl {

// Literals are DIMACS-style signed variable indices over the internal
// 0-based variables: +(v+1) for v, -(v+1) for NOT v.
using Lit = int;

inline int lit_var(Lit l) { return (l > 0 ? l : -l) - 1; }
inline bool lit_sign(Lit l) { return l > 0; }  // true = positive
inline Lit make_lit(int var, bool positive) { return positive ? var + 1 : -(var + 1); }

/// A clause bound to its owning context; every literal's variable must
/// belong to that context.
struct Clause {
    std::vector<Lit> literals;
    int context_id = -1;
};

struct InstanceMeta {
    std::string name;
    std::optional<double> rho_face;  // faces per boundary edge, when generated
    std::optional<uint64_t> seed;

    bool operator==(const InstanceMeta& o) const {
        return name == o.name && rho_face == o.rho_face && seed == o.seed;
    }
};

/// CBL-SAT input: a context system plus clauses attached to contexts.
struct CblInstance {
    ContextSystem system;
    std::vector<Clause> clauses;
    InstanceMeta meta;

    bool operator==(const CblInstance& o) const;
};

/// Throws input_error unless every clause sits inside its context and all
/// context ids are valid.
void validate(const CblInstance& inst);

bool clause_satisfied(const Clause& clause, const std::vector<int8_t>& values);

// ---- canonical generators -------------------------------------------------

/// Odd cycle of pair contexts {v_i, v_{i+1}} with the exclusivity/one-of
/// clause pair per edge. Rejects even n (the odd cycle is the curvature
/// witness). rho_face recorded as 1/5 for n=5.
CblInstance gen_kcbs(int n);

/// Nine variables in a 3x3 grid, six row/column contexts, XOR parities
/// (rows even, columns even except the last, which is odd) expanded to CNF.
/// flip_last_column=false drops the odd parity, making the instance
/// satisfiable.
CblInstance gen_mermin(bool flip_last_column = true);

/// Deterministic random instance. curved=false builds a tree-shaped overlap
/// graph (kappa = 0) with clauses planted around a hidden solution;
/// curved=true additionally plants a 5-cycle core isomorphic to gen_kcbs(5)
/// on fresh variables (kappa >= 1, globally unsatisfiable).
CblInstance gen_random(int num_vars, int num_contexts, int overlap_size, bool curved,
                       uint64_t seed);

/// Concatenated tiling of CHSH-type faces (4-cycle gadgets, density 1/4) and
/// KCBS-type faces (5-cycle gadgets, density 1/5); a fraction p of the
/// `length` tiles is CHSH. rho_face = p/4 + (1-p)/5.
CblInstance gen_mixture(double p, int length);

// ---- context-annotated CNF format ------------------------------------------

/// Canonical serialization: header, meta comments, contexts ascending by id
/// (variables ascending, 1-based), clauses in stored order. Bit-exact and
/// stable: parse(serialize(x)) == x and serialize(parse(d)) is canonical.
std::string serialize(const CblInstance& inst);

/// Parses the line-oriented format; syntax errors carry line/column.
CblInstance parse(const std::string& text);

}  // namespace cbl
