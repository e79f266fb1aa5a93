#include "comin/submodule.hpp"

#include "comin/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace comin {

namespace {

std::string weight_str(const Weight& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.coords.size(); ++i)
        s += (i ? "," : "") + w.coords[i].get_str();
    return s + ")";
}

} // namespace

SubmodulePartition submodule_from_coweight(const GradedModule& graded, const Coweight& h, int r,
                                           std::vector<Weight>* bound_violations) {
    const WeightedModule& mod = *graded.base;
    const RootSystem& rs = graded.pair->rs;

    SubmodulePartition sub;
    sub.graded = &graded;
    sub.h = h;
    sub.r = r;
    sub.vee_entries.assign(r + 1, {});
    sub.dims.assign(r + 1, Int(0));

    for (int i = 0; i <= graded.p(); ++i) {
        for (std::size_t e : graded.grade_entries[i]) {
            const WeightEntry& we = mod.entries()[e];
            Rat vh = rs.pair_weight_coweight(we.weight, h);
            Rat bound = Rat(r - 2 * i);
            if (vh < bound) {
                if (bound_violations)
                    bound_violations->push_back(we.weight);
                else
                    throw ConsistencyError("submodule: <chi,h> < r - 2i at " + weight_str(we.weight));
            }
            if (vh == bound) {
                if (i > r)
                    throw ConsistencyError("submodule: nonempty V_i beyond i = r");
                sub.vee_entries[i].push_back(e);
                sub.dims[i] += we.mult;
            }
        }
    }
    for (const Int& d : sub.dims) sub.total_dim += d;
    return sub;
}

SubmodulePartition build_submodule(const GradedModule& graded, const CascadeResult& cascade) {
    if (cascade.pair != graded.pair)
        throw ArgError("build_submodule: cascade and grading come from different pairs");
    SubmodulePartition sub = submodule_from_coweight(graded, cascade.h, cascade.r, nullptr);
    sub.cascade_alphas = cascade.alphas;
    for (int i = 0; i <= sub.r; ++i) {
        if (sub.dims[i] == 0)
            throw ConsistencyError("submodule: empty V_" + std::to_string(i));
        if (sub.dims[i] != sub.dims[sub.r - i])
            throw ConsistencyError("submodule: dim V_i != dim V_{r-i}");
    }
    return sub;
}

QLHPartition qlh_from_coweight(const HermitianPair& pair, const Coweight& h) {
    const RootSystem& rs = pair.rs;
    QLHPartition q;
    q.h = h;
    for (std::size_t i = 0; i < rs.num_roots(); ++i) {
        Rat vh = rs.pair_root_coweight(rs.root(i), h);
        Rat vz = rs.pair_root_coweight(rs.root(i), pair.z);
        if (vh <= vz) q.q_roots.push_back(i);
        if (vh == vz) {
            q.l_roots.push_back(i);
            if (vz == 2) q.l_plus.push_back(i);
            if (vz == -2) q.l_minus.push_back(i);
            if (vz == 0) q.levi_h_roots.push_back(i);
        }
    }
    return q;
}

QLHPartition build_qlh(const HermitianPair& pair, const CascadeResult& cascade) {
    QLHPartition q = qlh_from_coweight(pair, cascade.h);
    if (cascade.r >= 1 && q.l_minus.empty())
        throw ConsistencyError("qlh: l_- is empty at r >= 1");
    return q;
}

namespace {

// weight coords -> (grade, vee index or -1)
struct Membership {
    std::map<IntVec, std::pair<int, int>, IntVecLess> of;

    static Membership build(const SubmodulePartition& sub) {
        Membership m;
        const GradedModule& g = *sub.graded;
        for (std::size_t e = 0; e < g.base->entries().size(); ++e)
            m.of[g.base->entries()[e].weight.coords] = {g.entry_grade[e], -1};
        for (int i = 0; i <= sub.r; ++i)
            for (std::size_t e : sub.vee_entries[i])
                m.of[g.base->entries()[e].weight.coords].second = i;
        return m;
    }
};

} // namespace

std::vector<ClosureViolation> check_closure(const SubmodulePartition& sub, const QLHPartition& qlh) {
    const GradedModule& g = *sub.graded;
    const WeightedModule& mod = *g.base;
    const RootSystem& rs = g.pair->rs;
    std::vector<ClosureViolation> out;
    Membership mem = Membership::build(sub);

    auto check_target = [&](const Weight& chi, const Weight& moved, int target_vee,
                            const char* label) {
        auto it = mem.of.find(moved.coords);
        if (it == mem.of.end()) return;  // left the weight system
        if (it->second.second != target_vee)
            out.push_back({std::string(label) + ": " + weight_str(chi) + " shifted to " +
                               weight_str(moved) + " misses V_" + std::to_string(target_vee),
                           chi});
    };

    for (int i = 0; i <= sub.r; ++i) {
        for (std::size_t e : sub.vee_entries[i]) {
            const Weight& chi = mod.entries()[e].weight;
            for (std::size_t a : qlh.l_minus)
                check_target(chi, rs.add(chi, rs.root_as_weight(rs.root(a))),
                             i + 1 <= sub.r ? i + 1 : -2, "(a) l_-");
            for (std::size_t a : qlh.l_plus)
                check_target(chi, rs.add(chi, rs.root_as_weight(rs.root(a))),
                             i - 1 >= 0 ? i - 1 : -2, "(b) l_+");
            for (const Root& ak : sub.cascade_alphas)
                check_target(chi, rs.sub(chi, rs.root_as_weight(ak)),
                             i + 1 <= sub.r ? i + 1 : -2, "(d) cascade root");
        }
    }

    // (c) surjectivity of l_- : V_i -> V_{i+1}
    for (int i = 1; i <= sub.r; ++i) {
        for (std::size_t e : sub.vee_entries[i]) {
            const Weight& psi = mod.entries()[e].weight;
            bool reached = false;
            for (std::size_t a : qlh.l_minus) {
                Weight src = rs.sub(psi, rs.root_as_weight(rs.root(a)));
                auto it = mem.of.find(src.coords);
                if (it != mem.of.end() && it->second.second == i - 1) {
                    reached = true;
                    break;
                }
            }
            if (!reached)
                out.push_back({"(c) V_" + std::to_string(i) + " weight " + weight_str(psi) +
                                   " is not l_- applied to V_" + std::to_string(i - 1),
                               psi});
        }
    }
    return out;
}

std::vector<ClosureViolation> check_nilradical_triviality(const SubmodulePartition& sub,
                                                          const QLHPartition& qlh) {
    const GradedModule& g = *sub.graded;
    const WeightedModule& mod = *g.base;
    const RootSystem& rs = g.pair->rs;
    std::vector<ClosureViolation> out;
    Membership mem = Membership::build(sub);

    std::set<std::size_t> levi(qlh.l_roots.begin(), qlh.l_roots.end());
    for (std::size_t a : qlh.q_roots) {
        if (levi.count(a)) continue;  // strict part of q only
        const Root& alpha = rs.root(a);
        Weight aw = rs.root_as_weight(alpha);
        for (int i = 0; i <= sub.r; ++i) {
            for (std::size_t e : sub.vee_entries[i]) {
                Weight moved = rs.add(mod.entries()[e].weight, aw);
                auto it = mem.of.find(moved.coords);
                if (it != mem.of.end() && it->second.second >= 0)
                    out.push_back({"nilradical root moved V_" + std::to_string(i) + " weight " +
                                       weight_str(mod.entries()[e].weight) + " back into V",
                                   mod.entries()[e].weight});
            }
        }
    }
    return out;
}

std::vector<Coweight> central_directions(const HermitianPair& pair, const QLHPartition& qlh) {
    const RootSystem& rs = pair.rs;
    std::vector<Coweight> dirs{pair.z, qlh.h};
    std::vector<bool> in_support(rs.rank(), false);
    for (std::size_t a : qlh.levi_h_roots)
        for (int b = 0; b < rs.rank(); ++b)
            if (rs.root(a).coords[b] != 0) in_support[b] = true;
    for (int b = 0; b < rs.rank(); ++b) {
        if (in_support[b]) continue;
        Coweight c = rs.coweight_zero();
        c.coords[b] = 1;
        dirs.push_back(c);
    }
    return dirs;
}

SlopeFunctional slope(const RootSystem& rs, const std::vector<std::pair<Weight, Int>>& weights,
                      const std::vector<Coweight>& directions) {
    if (weights.empty()) throw ArgError("slope: empty weight subset");
    SlopeFunctional s;
    s.numerator = rs.zero_weight();
    for (const auto& [w, m] : weights) {
        s.numerator = rs.add(s.numerator, rs.scale(m, w));
        s.dimension += m;
    }
    for (const Coweight& d : directions)
        s.restriction.push_back(rs.pair_weight_coweight(s.numerator, d) / Rat(s.dimension));
    return s;
}

SlopeFunctional slope_of_vee(const SubmodulePartition& sub, int i,
                             const std::vector<Coweight>& directions) {
    const WeightedModule& mod = *sub.graded->base;
    std::vector<std::pair<Weight, Int>> ws;
    for (std::size_t e : sub.vee_entries[i])
        ws.emplace_back(mod.entries()[e].weight, mod.entries()[e].mult);
    return slope(sub.graded->pair->rs, ws, directions);
}

std::vector<std::string> check_slope_identity(const SubmodulePartition& sub,
                                              const QLHPartition& qlh) {
    const HermitianPair& pair = *sub.graded->pair;
    std::vector<Coweight> dirs = central_directions(pair, qlh);
    std::vector<std::string> out;

    SlopeFunctional mu0 = slope_of_vee(sub, 0, dirs);
    SlopeFunctional mu1 = slope_of_vee(sub, 1 <= sub.r ? 1 : 0, dirs);
    for (int i = 0; i <= sub.r; ++i) {
        SlopeFunctional mui = slope_of_vee(sub, i, dirs);
        for (std::size_t d = 0; d < dirs.size(); ++d) {
            Rat expected = mu0.restriction[d] + Rat(i) * (mu1.restriction[d] - mu0.restriction[d]);
            if (mui.restriction[d] != expected)
                out.push_back("slope of V_" + std::to_string(i) + " direction " + std::to_string(d) +
                              ": " + mui.restriction[d].get_str() + " != " + expected.get_str());
        }
    }
    return out;
}

std::vector<std::string> tensor_power_check(const HermitianPair& pair,
                                            const CascadeResult& cascade, int k) {
    if (k < 1 || k > 3) throw ArgError("tensor_power_check: k must be 1, 2 or 3");
    const RootSystem& rs = pair.rs;
    WeightedModule mod = weight_system(rs, pair.varpi);
    if (mod.dimension() > 30)
        throw CapacityError("tensor_power_check: dim E = " + mod.dimension().get_str() +
                            " exceeds the enumeration guard of 30");
    GradedModule graded = grade_by_z(mod, pair);
    SubmodulePartition sub = build_submodule(graded, cascade);
    const int r = cascade.r;

    // Multiset keyed by (compound grade, weight coords).
    using Key = std::pair<long, IntVec>;
    auto mk_cmp = [](const Key& a, const Key& b) {
        if (a.first != b.first) return a.first < b.first;
        return lex_compare(a.second, b.second) < 0;
    };
    std::map<Key, Int, decltype(mk_cmp)> full(mk_cmp), prod(mk_cmp);

    const auto& entries = mod.entries();
    const std::size_t n = entries.size();
    std::vector<int> entry_vee(n, -1);
    for (int i = 0; i <= r; ++i)
        for (std::size_t e : sub.vee_entries[i]) entry_vee[e] = i;

    std::vector<std::size_t> idx(k, 0);
    for (;;) {
        // sum over the tuple
        Weight lam = rs.zero_weight();
        Int mult = 1;
        for (int t = 0; t < k; ++t) {
            lam = rs.add(lam, entries[idx[t]].weight);
            mult *= entries[idx[t]].mult;
        }
        Rat zv = rs.pair_weight_coweight(lam, pair.z);
        Rat grade = (Rat(k) * pair.z_max - zv) / 2;
        long gi = to_int(grade).get_si();
        Rat hv = rs.pair_weight_coweight(lam, cascade.h);
        if (hv == Rat(k * r - 2 * gi)) full[{gi, lam.coords}] += mult;

        // tuple from V with its V-grades
        bool all_in_v = true;
        long vg = 0;
        for (int t = 0; t < k && all_in_v; ++t) {
            int v = entry_vee[idx[t]];
            if (v < 0)
                all_in_v = false;
            else
                vg += v;
        }
        if (all_in_v) prod[{vg, lam.coords}] += mult;

        int t = 0;
        while (t < k && idx[t] == n - 1) idx[t++] = 0;
        if (t == k) break;
        ++idx[t];
    }

    std::vector<std::string> out;
    for (const auto& [key, m] : full) {
        auto it = prod.find(key);
        Int pm = it == prod.end() ? Int(0) : it->second;
        if (pm != m)
            out.push_back("grade " + std::to_string(key.first) + ": multiplicity " + m.get_str() +
                          " in E^(x)" + std::to_string(k) + " vs " + pm.get_str() + " in V^(x)" +
                          std::to_string(k));
    }
    for (const auto& [key, m] : prod)
        if (!full.count(key))
            out.push_back("grade " + std::to_string(key.first) +
                          ": V-product weight missing from the graded filter");
    return out;
}

namespace {

bool strongly_orthogonal(const RootSystem& rs, const Root& a, const Root& b) {
    std::vector<int> sum = a.coords, diff = a.coords;
    for (std::size_t i = 0; i < sum.size(); ++i) {
        sum[i] += b.coords[i];
        diff[i] -= b.coords[i];
    }
    return rs.root_index(sum) < 0 && rs.root_index(diff) < 0;
}

} // namespace

std::vector<std::string> check_v_tube_structure(const HermitianPair& pair,
                                                const CascadeResult& cascade,
                                                const QLHPartition& qlh) {
    const RootSystem& rs = pair.rs;
    std::vector<std::string> out;
    std::set<int> l_set;
    for (std::size_t a : qlh.l_roots) l_set.insert(static_cast<int>(a));

    for (const Root& a : cascade.alphas)
        if (!l_set.count(rs.root_index(a.coords)))
            out.push_back("cascade root of height " + std::to_string(a.height) + " is not in l");

    for (std::size_t a : qlh.l_roots) {
        const Root& gamma = rs.root(a);
        if (gamma.is_positive() && rs.pair_root_coweight(gamma, cascade.h) < 0)
            out.push_back("h fails to be dominant on l");
    }

    // Maximality of the orthogonal sequence inside l: the sub-pair has rank
    // exactly r, so h is its full coroot sum and V is tube type over l.
    for (std::size_t a : qlh.l_plus) {
        const Root& gamma = rs.root(a);
        bool extends = true;
        for (const Root& al : cascade.alphas)
            if (gamma == al || !strongly_orthogonal(rs, gamma, al)) {
                extends = false;
                break;
            }
        if (extends) out.push_back("a root of l_+ extends the orthogonal sequence inside l");
    }
    return out;
}

} // namespace comin
