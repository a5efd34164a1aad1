#include "cbl/curvature.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>

#include "cbl/errors.hpp"
#include "cbl/gf2.hpp"

namespace cbl {

namespace {

// Non-empty triple intersection, assuming sorted contexts.
bool triple_intersects(const std::vector<int>& a, const std::vector<int>& b,
                       const std::vector<int>& c) {
    size_t ia = 0, ib = 0, ic = 0;
    while (ia < a.size() && ib < b.size() && ic < c.size()) {
        int m = std::max({a[ia], b[ib], c[ic]});
        if (a[ia] == m && b[ib] == m && c[ic] == m) return true;
        if (a[ia] < m) ++ia;
        if (ib < b.size() && b[ib] < m) ++ib;
        if (ic < c.size() && c[ic] < m) ++ic;
    }
    return false;
}

}  // namespace

CurvatureReport kappa(const ContextSystem& sys) {
    const int n = sys.num_contexts();
    CurvatureReport rep;
    rep.dim_c0 = n;

    // 1-cells: unordered context pairs with non-empty intersection. Pairs
    // with empty intersection contribute zero-dimensional blocks and are
    // skipped outright.
    std::map<std::pair<int, int>, int> edge_index;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!sys.overlap(i, j).empty()) {
                int id = static_cast<int>(edge_index.size());
                edge_index[{i, j}] = id;
            }
        }
    }
    rep.dim_c1 = static_cast<int>(edge_index.size());

    // 2-cells: triples whose three-way intersection is non-empty.
    std::vector<std::array<int, 3>> triangles;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!edge_index.count({i, j})) continue;
            for (int k = j + 1; k < n; ++k) {
                if (!edge_index.count({i, k}) || !edge_index.count({j, k})) continue;
                if (triple_intersects(sys.context(i), sys.context(j), sys.context(k)))
                    triangles.push_back({i, j, k});
            }
        }
    }
    rep.dim_c2 = static_cast<int>(triangles.size());

    if (rep.dim_c1 == 0) return rep;  // no overlaps, H^1 trivial

    // delta0: restriction XOR across pairs, (f_i) -> f_i + f_j on edge (i,j).
    Gf2Matrix d0(rep.dim_c1, rep.dim_c0);
    for (const auto& [edge, row] : edge_index) {
        d0.set(row, edge.first);
        d0.set(row, edge.second);
    }
    rep.rank_delta0 = d0.rank();

    // delta1: alternating XOR across triples, (g_e) -> g_jk + g_ik + g_ij.
    if (!triangles.empty()) {
        Gf2Matrix d1(rep.dim_c2, rep.dim_c1);
        for (int t = 0; t < rep.dim_c2; ++t) {
            auto [i, j, k] = triangles[static_cast<size_t>(t)];
            d1.set(t, edge_index.at({i, j}));
            d1.set(t, edge_index.at({i, k}));
            d1.set(t, edge_index.at({j, k}));
        }
        rep.rank_delta1 = d1.rank();
    }

    rep.kappa = (rep.dim_c1 - rep.rank_delta1) - rep.rank_delta0;
    return rep;
}

std::vector<CurvedCore> curved_cores(const ContextSystem& sys, int max_size) {
    const int n = sys.num_contexts();
    if (max_size > n) throw input_error("max_size exceeds context count");
    std::vector<CurvedCore> cores;

    std::vector<int> pick;
    // Enumerate subfamilies of one size in lexicographic order.
    auto scan_size = [&](int size, auto&& self, int start) -> void {
        if (static_cast<int>(pick.size()) == size) {
            for (const auto& core : cores) {
                if (std::includes(pick.begin(), pick.end(), core.context_ids.begin(),
                                  core.context_ids.end()))
                    return;  // a smaller curved subfamily sits inside: not minimal
            }
            if (kappa(sys.subfamily(pick)).kappa > 0) cores.push_back(CurvedCore{pick});
            return;
        }
        for (int i = start; i <= n - (size - static_cast<int>(pick.size())); ++i) {
            pick.push_back(i);
            self(size, self, i + 1);
            pick.pop_back();
        }
    };
    // A single context has no overlap pairs, so curvature needs size >= 3;
    // start at 2 anyway to keep the scan shape obvious.
    for (int size = 2; size <= max_size; ++size) scan_size(size, scan_size, 0);
    return cores;
}

GlobalValuation flatten(const ContextSystem& sys, const CompatibleFamily& fam) {
    auto rep = kappa(sys);
    if (rep.kappa > 0)
        throw curvature_error("flatten requires kappa=0, got kappa=" + std::to_string(rep.kappa));
    if (!is_compatible(fam, sys)) throw input_error("family is incompatible");

    const int n = sys.num_contexts();
    std::vector<int8_t> value(static_cast<size_t>(sys.num_vars()), -1);
    std::vector<uint8_t> visited(static_cast<size_t>(n), 0);

    auto adopt = [&](int ctx_id) {
        for (auto [v, bit] : fam.locals[static_cast<size_t>(ctx_id)].assignment) {
            int8_t& slot = value[static_cast<size_t>(v)];
            if (slot == -1) {
                slot = static_cast<int8_t>(bit);
            } else if (slot != static_cast<int8_t>(bit)) {
                throw internal_error("propagation contradiction on a compatible family");
            }
        }
    };

    for (int root = 0; root < n; ++root) {
        if (visited[static_cast<size_t>(root)]) continue;
        std::deque<int> queue{root};
        visited[static_cast<size_t>(root)] = 1;
        while (!queue.empty()) {
            int c = queue.front();
            queue.pop_front();
            adopt(c);
            for (int d = 0; d < n; ++d) {
                if (!visited[static_cast<size_t>(d)] && !sys.overlap(c, d).empty()) {
                    visited[static_cast<size_t>(d)] = 1;
                    queue.push_back(d);
                }
            }
        }
    }

    GlobalValuation g;
    g.bits.resize(static_cast<size_t>(sys.num_vars()));
    for (size_t v = 0; v < g.bits.size(); ++v) {
        g.bits[v] = value[v] == -1 ? 0 : static_cast<uint8_t>(value[v]);
    }
    return g;
}

}  // namespace cbl
