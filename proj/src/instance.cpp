#include "cbl/instance.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <sstream>

#include "cbl/errors.hpp"
#include "cbl/rng.hpp"

namespace cbl {

bool CblInstance::operator==(const CblInstance& o) const {
    if (!(system == o.system) || !(meta == o.meta)) return false;
    if (clauses.size() != o.clauses.size()) return false;
    for (size_t i = 0; i < clauses.size(); ++i) {
        if (clauses[i].literals != o.clauses[i].literals ||
            clauses[i].context_id != o.clauses[i].context_id)
            return false;
    }
    return true;
}

void validate(const CblInstance& inst) {
    for (const auto& cl : inst.clauses) {
        if (cl.context_id < 0 || cl.context_id >= inst.system.num_contexts())
            throw input_error("clause references unknown context " + std::to_string(cl.context_id));
        if (cl.literals.empty()) throw input_error("empty clause");
        for (Lit l : cl.literals) {
            int v = lit_var(l);
            if (v < 0 || v >= inst.system.num_vars())
                throw input_error("literal variable out of range");
            if (!inst.system.context_contains(cl.context_id, v))
                throw input_error("literal v" + std::to_string(v + 1) + " outside context " +
                                  std::to_string(cl.context_id));
        }
    }
}

bool clause_satisfied(const Clause& clause, const std::vector<int8_t>& values) {
    for (Lit l : clause.literals) {
        int8_t v = values.at(static_cast<size_t>(lit_var(l)));
        if (v == -1) continue;
        if ((v == 1) == lit_sign(l)) return true;
    }
    return false;
}

// ---- generators -------------------------------------------------------------

CblInstance gen_kcbs(int n) {
    if (n % 2 == 0) throw input_error("gen_kcbs needs odd n: the odd cycle is the curvature witness");
    if (n < 5) throw input_error("gen_kcbs needs n >= 5");
    std::vector<std::vector<int>> contexts;
    contexts.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) contexts.push_back({i, (i + 1) % n});

    CblInstance inst{ContextSystem(n, std::move(contexts)), {}, {}};
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        inst.clauses.push_back({{make_lit(i, true), make_lit(j, true)}, i});
        inst.clauses.push_back({{make_lit(i, false), make_lit(j, false)}, i});
    }
    inst.meta.name = "kcbs-" + std::to_string(n);
    if (n == 5) inst.meta.rho_face = 0.2;
    validate(inst);
    return inst;
}

namespace {

// The four CNF clauses of a 3-variable XOR constraint a^b^c = parity.
void append_xor3(std::vector<Clause>& out, int a, int b, int c, int parity, int context_id) {
    for (int mask = 0; mask < 8; ++mask) {
        int bits = (mask & 1) + ((mask >> 1) & 1) + ((mask >> 2) & 1);
        if (bits % 2 == parity) continue;  // assignment allowed, nothing to forbid
        out.push_back({{make_lit(a, !(mask & 1)), make_lit(b, !(mask & 2)), make_lit(c, !(mask & 4))},
                       context_id});
    }
}

}  // namespace

CblInstance gen_mermin(bool flip_last_column) {
    // Variable v_{rc} at index 3r + c.
    std::vector<std::vector<int>> contexts;
    for (int r = 0; r < 3; ++r) contexts.push_back({3 * r, 3 * r + 1, 3 * r + 2});
    for (int c = 0; c < 3; ++c) contexts.push_back({c, c + 3, c + 6});

    CblInstance inst{ContextSystem(9, std::move(contexts)), {}, {}};
    for (int r = 0; r < 3; ++r) append_xor3(inst.clauses, 3 * r, 3 * r + 1, 3 * r + 2, 0, r);
    for (int c = 0; c < 3; ++c) {
        int parity = (c == 2 && flip_last_column) ? 1 : 0;
        append_xor3(inst.clauses, c, c + 3, c + 6, parity, 3 + c);
    }
    inst.meta.name = flip_last_column ? "mermin" : "mermin-noflip";
    validate(inst);
    return inst;
}

namespace {

// Two planted clauses per tree context: random width-2 draws repaired to
// agree with the hidden solution, so flat instances stay satisfiable.
void plant_clauses(CblInstance& inst, int context_id, const std::vector<int>& ctx,
                   const std::vector<uint8_t>& hidden, Rng& rng) {
    for (int k = 0; k < 2; ++k) {
        size_t width = std::min<size_t>(2, ctx.size());
        std::vector<int> vars = ctx;
        rng.shuffle(vars);
        vars.resize(width);
        std::sort(vars.begin(), vars.end());
        Clause cl;
        cl.context_id = context_id;
        for (int v : vars) cl.literals.push_back(make_lit(v, rng.bernoulli(0.5)));
        bool sat = false;
        for (Lit l : cl.literals) {
            if (lit_sign(l) == (hidden[static_cast<size_t>(lit_var(l))] == 1)) sat = true;
        }
        if (!sat) {
            size_t i = static_cast<size_t>(rng.below(cl.literals.size()));
            cl.literals[i] = -cl.literals[i];
        }
        inst.clauses.push_back(std::move(cl));
    }
}

}  // namespace

CblInstance gen_random(int num_vars, int num_contexts, int overlap_size, bool curved,
                       uint64_t seed) {
    if (num_vars < 1 || num_contexts < 1 || overlap_size < 1)
        throw input_error("gen_random parameters must be positive");

    Rng rng(Rng::derive(seed, 0x67656e72 /* tag */));

    int tree_contexts = num_contexts;
    int first_free_var = 0;
    std::vector<std::vector<int>> contexts;

    if (curved) {
        if (num_contexts < 6)
            throw input_error("curved instances need at least 6 contexts (5-cycle core plus cover)");
        for (int i = 0; i < 5; ++i) contexts.push_back({i, (i + 1) % 5});
        tree_contexts = num_contexts - 5;
        first_free_var = 5;
    }

    int root_size = std::max(1, overlap_size);
    int min_tree_vars = root_size + (tree_contexts - 1);
    int free_vars = num_vars - first_free_var;
    if (free_vars < min_tree_vars)
        throw input_error("infeasible parameter combination: not enough variables to cover");

    // Fresh-variable budget per tree context; extras spread deterministically.
    std::vector<int> fresh(static_cast<size_t>(tree_contexts), 1);
    fresh[0] = root_size;
    int extra = free_vars - min_tree_vars;
    for (int i = 0; extra > 0; i = (i + 1) % tree_contexts, --extra) fresh[static_cast<size_t>(i)]++;

    int next_var = first_free_var;
    std::vector<std::vector<int>> tree;
    for (int i = 0; i < tree_contexts; ++i) {
        std::vector<int> ctx;
        if (i > 0) {
            // Share overlap_size variables with a random earlier tree context.
            const auto& parent = tree[static_cast<size_t>(rng.below(static_cast<uint64_t>(i)))];
            std::vector<int> pool = parent;
            rng.shuffle(pool);
            int take = std::min<int>(overlap_size, static_cast<int>(pool.size()));
            ctx.assign(pool.begin(), pool.begin() + take);
        }
        for (int k = 0; k < fresh[static_cast<size_t>(i)]; ++k) ctx.push_back(next_var++);
        std::sort(ctx.begin(), ctx.end());
        tree.push_back(ctx);
    }
    for (auto& ctx : tree) contexts.push_back(std::move(ctx));

    CblInstance inst{ContextSystem(num_vars, std::move(contexts)), {}, {}};

    std::vector<uint8_t> hidden(static_cast<size_t>(num_vars));
    for (auto& b : hidden) b = rng.bernoulli(0.5) ? 1 : 0;

    if (curved) {
        for (int i = 0; i < 5; ++i) {
            int j = (i + 1) % 5;
            inst.clauses.push_back({{make_lit(i, true), make_lit(j, true)}, i});
            inst.clauses.push_back({{make_lit(i, false), make_lit(j, false)}, i});
        }
    }
    for (int i = 0; i < tree_contexts; ++i) {
        int id = (curved ? 5 : 0) + i;
        plant_clauses(inst, id, inst.system.context(id), hidden, rng);
    }

    inst.meta.name = std::string(curved ? "random-curved" : "random-flat");
    inst.meta.seed = seed;
    validate(inst);
    return inst;
}

CblInstance gen_mixture(double p, int length) {
    if (p < 0.0 || p > 1.0) throw input_error("mixture fraction must lie in [0,1]");
    if (length < 1) throw input_error("mixture length must be positive");
    int n_chsh = static_cast<int>(p * length + 0.5);
    if (p > 0.0 && p < 1.0 && (n_chsh == 0 || n_chsh == length))
        throw input_error("length too small to realize at least one tile of each kind");
    int n_kcbs = length - n_chsh;

    std::vector<std::vector<int>> contexts;
    std::vector<Clause> clauses;
    int base = 0;
    auto add_cycle = [&](int size) {
        for (int i = 0; i < size; ++i) {
            int a = base + i;
            int b = base + (i + 1) % size;
            std::vector<int> ctx{a, b};
            std::sort(ctx.begin(), ctx.end());
            int id = static_cast<int>(contexts.size());
            contexts.push_back(ctx);
            clauses.push_back({{make_lit(a, true), make_lit(b, true)}, id});
            clauses.push_back({{make_lit(a, false), make_lit(b, false)}, id});
        }
        base += size;
    };
    for (int t = 0; t < n_chsh; ++t) add_cycle(4);
    for (int t = 0; t < n_kcbs; ++t) add_cycle(5);

    CblInstance inst{ContextSystem(base, std::move(contexts)), std::move(clauses), {}};
    char buf[64];
    std::snprintf(buf, sizeof buf, "mixture-p%.6f", p);
    inst.meta.name = buf;
    inst.meta.rho_face = p / 4.0 + (1.0 - p) / 5.0;
    validate(inst);
    return inst;
}

// ---- serialization -----------------------------------------------------------

std::string serialize(const CblInstance& inst) {
    validate(inst);
    std::string out;
    char buf[128];
    std::snprintf(buf, sizeof buf, "p cbl %d %zu %d\n", inst.system.num_vars(),
                  inst.clauses.size(), inst.system.num_contexts());
    out += buf;
    if (!inst.meta.name.empty()) out += "c meta name " + inst.meta.name + "\n";
    if (inst.meta.rho_face) {
        std::snprintf(buf, sizeof buf, "c meta rho_face %.17g\n", *inst.meta.rho_face);
        out += buf;
    }
    if (inst.meta.seed) {
        std::snprintf(buf, sizeof buf, "c meta seed %" PRIu64 "\n", *inst.meta.seed);
        out += buf;
    }
    for (int i = 0; i < inst.system.num_contexts(); ++i) {
        out += "x " + std::to_string(i);
        for (int v : inst.system.context(i)) out += " " + std::to_string(v + 1);
        out += " 0\n";
    }
    for (const auto& cl : inst.clauses) {
        std::string line;
        for (Lit l : cl.literals) line += std::to_string(l) + " ";
        line += "0 @ " + std::to_string(cl.context_id);
        out += line + "\n";
    }
    return out;
}

namespace {

struct ParseCursor {
    int line = 0;
    int col = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw input_error("parse error at line " + std::to_string(line) + ", column " +
                          std::to_string(col) + ": " + msg);
    }
};

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

long long to_int(const std::string& tok, const ParseCursor& at) {
    size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        at.fail("expected integer, got '" + tok + "'");
    }
    if (pos != tok.size()) at.fail("expected integer, got '" + tok + "'");
    return v;
}

}  // namespace

CblInstance parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    ParseCursor at;

    int num_vars = -1, num_clauses = -1, num_contexts = -1;
    std::vector<std::vector<int>> contexts;
    std::vector<uint8_t> context_seen;
    std::vector<Clause> clauses;
    InstanceMeta meta;

    while (std::getline(in, line)) {
        ++at.line;
        at.col = 1;
        if (line.empty()) continue;
        auto toks = tokens_of(line);
        if (toks.empty()) continue;

        if (toks[0] == "c") {
            if (toks.size() >= 4 && toks[1] == "meta") {
                if (toks[2] == "name") {
                    meta.name = line.substr(line.find("name") + 5);
                } else if (toks[2] == "rho_face") {
                    meta.rho_face = std::stod(toks[3]);
                } else if (toks[2] == "seed") {
                    meta.seed = static_cast<uint64_t>(std::stoull(toks[3]));
                }
            }
            continue;
        }
        if (toks[0] == "p") {
            if (num_vars >= 0) at.fail("duplicate header");
            if (toks.size() != 5 || toks[1] != "cbl") at.fail("header must be 'p cbl <vars> <clauses> <contexts>'");
            num_vars = static_cast<int>(to_int(toks[2], at));
            num_clauses = static_cast<int>(to_int(toks[3], at));
            num_contexts = static_cast<int>(to_int(toks[4], at));
            if (num_vars < 1 || num_clauses < 0 || num_contexts < 1) at.fail("header counts out of range");
            contexts.assign(static_cast<size_t>(num_contexts), {});
            context_seen.assign(static_cast<size_t>(num_contexts), 0);
            continue;
        }
        if (num_vars < 0) at.fail("missing 'p cbl' header");

        if (toks[0] == "x") {
            if (toks.size() < 4) at.fail("context line needs id, variables and terminating 0");
            int id = static_cast<int>(to_int(toks[1], at));
            if (id < 0 || id >= num_contexts) at.fail("context id out of range");
            if (context_seen[static_cast<size_t>(id)]) at.fail("duplicate context id");
            if (toks.back() != "0") at.fail("context line must end with 0");
            std::vector<int> ctx;
            for (size_t i = 2; i + 1 < toks.size(); ++i) {
                at.col = static_cast<int>(i + 1);
                int v = static_cast<int>(to_int(toks[i], at));
                if (v < 1 || v > num_vars) at.fail("variable v" + std::to_string(v) + " outside declared range");
                ctx.push_back(v - 1);
            }
            if (ctx.empty()) at.fail("context must be non-empty");
            contexts[static_cast<size_t>(id)] = std::move(ctx);
            context_seen[static_cast<size_t>(id)] = 1;
            continue;
        }

        // Clause line: "<lit>+ 0 @ <context_id>".
        auto sep = std::find(toks.begin(), toks.end(), "@");
        if (sep == toks.end() || sep + 2 != toks.end()) at.fail("clause line must end with '0 @ <context>'");
        if (sep == toks.begin() || *(sep - 1) != "0") at.fail("clause literals must end with 0");
        Clause cl;
        for (auto it = toks.begin(); it + 1 != sep; ++it) {
            at.col = static_cast<int>(it - toks.begin() + 1);
            long long l = to_int(*it, at);
            if (l == 0) at.fail("literal 0 inside clause body");
            if (std::abs(l) > num_vars) at.fail("literal variable outside declared range");
            cl.literals.push_back(static_cast<Lit>(l));
        }
        if (cl.literals.empty()) at.fail("empty clause");
        at.col = static_cast<int>(toks.size());
        cl.context_id = static_cast<int>(to_int(*(sep + 1), at));
        if (cl.context_id < 0 || cl.context_id >= num_contexts) at.fail("clause references unknown context");
        clauses.push_back(std::move(cl));
    }

    at.col = 1;
    if (num_vars < 0) at.fail("missing 'p cbl' header");
    for (int i = 0; i < num_contexts; ++i) {
        if (!context_seen[static_cast<size_t>(i)])
            at.fail("context " + std::to_string(i) + " declared in header but never defined");
    }
    if (static_cast<int>(clauses.size()) != num_clauses)
        at.fail("header declares " + std::to_string(num_clauses) + " clauses, found " +
                std::to_string(clauses.size()));

    CblInstance inst{ContextSystem(num_vars, std::move(contexts)), std::move(clauses), std::move(meta)};
    validate(inst);  // clause-in-context and range checks
    return inst;
}

}  // namespace cbl
