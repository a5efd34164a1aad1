#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace cbl {

/// A finite family of non-empty variable-index sets covering all variables.
/// Contexts are stored sorted and deduplicated; every variable 0..num_vars-1
/// must appear in at least one context.
class ContextSystem {
public:
    ContextSystem(int num_vars, std::vector<std::vector<int>> contexts);

    int num_vars() const { return num_vars_; }
    int num_contexts() const { return static_cast<int>(contexts_.size()); }
    const std::vector<int>& context(int id) const { return contexts_.at(id); }
    const std::vector<std::vector<int>>& contexts() const { return contexts_; }

    bool context_contains(int id, int var) const;

    /// Sorted intersection of two contexts.
    std::vector<int> overlap(int a, int b) const;

    /// Restriction to a subset of context ids (same variable universe).
    /// Coverage of all variables is intentionally not re-checked: subfamilies
    /// are used for curvature scans where partial covers are fine.
    ContextSystem subfamily(const std::vector<int>& ids) const;

    bool operator==(const ContextSystem& other) const {
        return num_vars_ == other.num_vars_ && contexts_ == other.contexts_;
    }

private:
    struct subfamily_tag {};
    ContextSystem(subfamily_tag, int num_vars, std::vector<std::vector<int>> contexts);

    int num_vars_;
    std::vector<std::vector<int>> contexts_;
};

/// Boolean assignment on exactly the variables of one context.
struct LocalValuation {
    int context_id = -1;
    std::map<int, uint8_t> assignment;  // var -> bit, domain == context vars

    bool has(int var) const { return assignment.count(var) != 0; }
    uint8_t at(int var) const;
};

/// One local valuation per context, in context order.
struct CompatibleFamily {
    std::vector<LocalValuation> locals;
};

/// One bit per variable.
struct GlobalValuation {
    std::vector<uint8_t> bits;

    bool operator==(const GlobalValuation& other) const { return bits == other.bits; }
};

/// True iff a and b agree on every variable in overlap_vars.
/// Throws input_error if some overlap variable is missing from either domain.
bool check_overlap(const LocalValuation& a, const LocalValuation& b,
                   const std::vector<int>& overlap_vars);

/// Pairwise overlap agreement across the whole family.
bool is_compatible(const CompatibleFamily& fam, const ContextSystem& sys);

/// Glues a compatible family into the global valuation it defines (the union
/// assignment; variables outside every context cannot exist by the system
/// invariant). Throws input_error when the family is incompatible.
GlobalValuation global_sections_exist(const ContextSystem& sys, const CompatibleFamily& fam);

/// The family of restrictions of g to each context.
CompatibleFamily restrict_global(const ContextSystem& sys, const GlobalValuation& g);

}  // namespace cbl
