#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "chowlab/varcontext.hpp"

namespace chow {

using Monomial = std::vector<uint32_t>;

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {  // a | b
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Monomial mono_div(const Monomial& b, const Monomial& a) {  // b / a
    Monomial r(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] = b[i] - a[i];
    return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
    return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) return false;
    return true;
}

inline bool mono_is_one(const Monomial& a) {
    for (auto e : a)
        if (e) return false;
    return true;
}

inline uint64_t mono_degree(const Monomial& a) {
    uint64_t d = 0;
    for (auto e : a) d += e;
    return d;
}

// Block order: variable index blocks compared in sequence, each block with
// its own local rule. Graded reverse lex is the default everywhere; lex is
// available for pinned textbook fixtures. Every factory places the
// parameter block last, which keeps parameters smaller than any main
// variable.
class MonomialOrder {
public:
    enum class Local { GrevLex, Lex };

    struct Block {
        std::vector<int> vars;  // significance order within the block
        Local local = Local::GrevLex;
    };

    std::vector<Block> blocks;

    static MonomialOrder grevlex(const VarContext& ctx) {
        MonomialOrder o;
        o.blocks.push_back({main_indices(ctx), Local::GrevLex});
        o.append_params(ctx);
        return o;
    }

    static MonomialOrder lex(const VarContext& ctx) {
        MonomialOrder o;
        o.blocks.push_back({main_indices(ctx), Local::Lex});
        o.append_params(ctx);
        return o;
    }

    // Elimination order for `first`: any monomial containing one of those
    // variables beats any monomial free of them.
    static MonomialOrder elimination(const VarContext& ctx, const std::vector<int>& first) {
        MonomialOrder o;
        o.blocks.push_back({first, Local::GrevLex});
        std::vector<int> rest;
        for (int i : main_indices(ctx)) {
            bool skip = false;
            for (int j : first) skip = skip || (i == j);
            if (!skip) rest.push_back(i);
        }
        o.blocks.push_back({std::move(rest), Local::GrevLex});
        o.append_params(ctx);
        return o;
    }

    // -1: a < b, 0: equal, +1: a > b.
    int compare(const Monomial& a, const Monomial& b) const {
        for (const auto& blk : blocks) {
            uint64_t da = 0, db = 0;
            for (int i : blk.vars) {
                da += a[i];
                db += b[i];
            }
            if (blk.local == Local::GrevLex) {
                if (da != db) return da < db ? -1 : 1;
                for (auto it = blk.vars.rbegin(); it != blk.vars.rend(); ++it) {
                    if (a[*it] != b[*it]) return a[*it] > b[*it] ? -1 : 1;
                }
            } else {
                for (int i : blk.vars) {
                    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
                }
                (void)da;
                (void)db;
            }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    // Stable identity for caching.
    std::string key() const {
        std::string k;
        for (const auto& blk : blocks) {
            k += blk.local == Local::GrevLex ? "g[" : "l[";
            for (int i : blk.vars) k += std::to_string(i) + ",";
            k += "]";
        }
        return k;
    }

private:
    static std::vector<int> main_indices(const VarContext& ctx) {
        std::vector<int> v(ctx.n_main());
        std::iota(v.begin(), v.end(), 0);
        return v;
    }

    void append_params(const VarContext& ctx) {
        if (ctx.n_params() == 0) return;
        std::vector<int> v(ctx.n_params());
        std::iota(v.begin(), v.end(), ctx.n_main());
        blocks.push_back({std::move(v), Local::GrevLex});
    }
};

}  // namespace chow
