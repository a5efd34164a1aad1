#include "cbl/context_system.hpp"

#include <algorithm>
#include <set>

#include "cbl/errors.hpp"

namespace cbl {

namespace {

std::vector<std::vector<int>> normalize_contexts(int num_vars,
                                                 std::vector<std::vector<int>> contexts,
                                                 bool require_cover) {
    std::vector<uint8_t> covered(static_cast<size_t>(num_vars), 0);
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> out;
    for (auto& ctx : contexts) {
        if (ctx.empty()) throw input_error("context must be non-empty");
        std::sort(ctx.begin(), ctx.end());
        ctx.erase(std::unique(ctx.begin(), ctx.end()), ctx.end());
        for (int v : ctx) {
            if (v < 0 || v >= num_vars) throw input_error("context variable index out of range");
            covered[static_cast<size_t>(v)] = 1;
        }
        if (!seen.insert(ctx).second) continue;  // deduplicate
        out.push_back(std::move(ctx));
    }
    if (require_cover) {
        for (int v = 0; v < num_vars; ++v) {
            if (!covered[static_cast<size_t>(v)])
                throw input_error("variable " + std::to_string(v) + " appears in no context");
        }
    }
    if (out.empty()) throw input_error("context system needs at least one context");
    return out;
}

}  // namespace

ContextSystem::ContextSystem(int num_vars, std::vector<std::vector<int>> contexts)
    : num_vars_(num_vars), contexts_(normalize_contexts(num_vars, std::move(contexts), true)) {
    if (num_vars <= 0) throw input_error("num_vars must be positive");
}

ContextSystem::ContextSystem(subfamily_tag, int num_vars, std::vector<std::vector<int>> contexts)
    : num_vars_(num_vars), contexts_(normalize_contexts(num_vars, std::move(contexts), false)) {}

bool ContextSystem::context_contains(int id, int var) const {
    const auto& ctx = contexts_.at(id);
    return std::binary_search(ctx.begin(), ctx.end(), var);
}

std::vector<int> ContextSystem::overlap(int a, int b) const {
    const auto& ca = contexts_.at(a);
    const auto& cb = contexts_.at(b);
    std::vector<int> out;
    std::set_intersection(ca.begin(), ca.end(), cb.begin(), cb.end(), std::back_inserter(out));
    return out;
}

ContextSystem ContextSystem::subfamily(const std::vector<int>& ids) const {
    std::vector<std::vector<int>> sub;
    sub.reserve(ids.size());
    for (int id : ids) sub.push_back(contexts_.at(id));
    return ContextSystem(subfamily_tag{}, num_vars_, std::move(sub));
}

uint8_t LocalValuation::at(int var) const {
    auto it = assignment.find(var);
    if (it == assignment.end())
        throw input_error("variable " + std::to_string(var) + " not in local valuation domain");
    return it->second;
}

bool check_overlap(const LocalValuation& a, const LocalValuation& b,
                   const std::vector<int>& overlap_vars) {
    for (int v : overlap_vars) {
        if (a.at(v) != b.at(v)) return false;
    }
    return true;
}

bool is_compatible(const CompatibleFamily& fam, const ContextSystem& sys) {
    if (static_cast<int>(fam.locals.size()) != sys.num_contexts())
        throw input_error("family must carry one local valuation per context");
    for (int i = 0; i < sys.num_contexts(); ++i) {
        const auto& loc = fam.locals[static_cast<size_t>(i)];
        const auto& ctx = sys.context(i);
        if (static_cast<int>(loc.assignment.size()) != static_cast<int>(ctx.size()))
            throw input_error("local valuation domain differs from its context");
        for (int v : ctx) {
            if (!loc.has(v)) throw input_error("local valuation misses a context variable");
        }
    }
    for (int i = 0; i < sys.num_contexts(); ++i) {
        for (int j = i + 1; j < sys.num_contexts(); ++j) {
            auto shared = sys.overlap(i, j);
            if (shared.empty()) continue;
            if (!check_overlap(fam.locals[static_cast<size_t>(i)], fam.locals[static_cast<size_t>(j)], shared))
                return false;
        }
    }
    return true;
}

GlobalValuation global_sections_exist(const ContextSystem& sys, const CompatibleFamily& fam) {
    if (!is_compatible(fam, sys)) throw input_error("family is incompatible");
    GlobalValuation g;
    g.bits.assign(static_cast<size_t>(sys.num_vars()), 0);
    for (int i = 0; i < sys.num_contexts(); ++i) {
        for (auto [v, bit] : fam.locals[static_cast<size_t>(i)].assignment) {
            g.bits[static_cast<size_t>(v)] = bit;
        }
    }
    return g;
}

CompatibleFamily restrict_global(const ContextSystem& sys, const GlobalValuation& g) {
    CompatibleFamily fam;
    fam.locals.resize(static_cast<size_t>(sys.num_contexts()));
    for (int i = 0; i < sys.num_contexts(); ++i) {
        auto& loc = fam.locals[static_cast<size_t>(i)];
        loc.context_id = i;
        for (int v : sys.context(i)) loc.assignment[v] = g.bits.at(static_cast<size_t>(v));
    }
    return fam;
}

}  // namespace cbl
