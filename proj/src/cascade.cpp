#include "comin/cascade.hpp"

#include "comin/errors.hpp"

#include <algorithm>

namespace comin {

namespace detail {

RawCascade raw_cascade(const RootSystem& rs, int zeta) {
    RawCascade out;
    std::vector<int> pi(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) pi[i] = i;

    for (int guard = 0; guard <= rs.rank(); ++guard) {
        Root alpha = rs.highest_root(pi);
        Coweight av = rs.coroot(alpha);
        std::vector<int> sigma;
        for (int b : pi)
            if (av.coords[b] != 0) sigma.push_back(b);

        out.alpha_indices.push_back(static_cast<std::size_t>(rs.root_index(alpha.coords)));
        out.pis.push_back(pi);
        out.sigmas.push_back(sigma);

        if (std::find(sigma.begin(), sigma.end(), zeta) != sigma.end()) return out;

        // Connected component of Pi_i \ Sigma_i containing zeta, in the
        // Dynkin-diagram adjacency.
        std::vector<int> rest;
        for (int b : pi)
            if (std::find(sigma.begin(), sigma.end(), b) == sigma.end()) rest.push_back(b);
        std::vector<int> comp{zeta};
        for (bool grew = true; grew;) {
            grew = false;
            for (int b : rest) {
                if (std::find(comp.begin(), comp.end(), b) != comp.end()) continue;
                for (int c : comp)
                    if (rs.dynkin_adjacent(b, c)) {
                        comp.push_back(b);
                        grew = true;
                        break;
                    }
            }
        }
        std::sort(comp.begin(), comp.end());
        pi = comp;
    }
    throw ConsistencyError("cascade recursion failed to terminate");
}

} // namespace detail

std::optional<Root> theta_root(const HermitianPair& pair, const Coweight& h) {
    const RootSystem& rs = pair.rs;
    const Root* best = nullptr;
    bool tie = false;
    for (const Root& a : rs.roots()) {
        if (rs.pair_root_coweight(a, h) != 2) continue;
        if (!best || a.height < best->height) {
            best = &a;
            tie = false;
        } else if (a.height == best->height) {
            tie = true;
        }
    }
    if (!best) return std::nullopt;
    if (tie) throw ConsistencyError("theta_root: minimal height is not unique");
    return *best;
}

namespace {

void verify_cascade_laws(const HermitianPair& pair, const CascadeResult& res) {
    const RootSystem& rs = pair.rs;
    for (const Root& a : res.alphas)
        if (!a.is_long) throw ConsistencyError("cascade root is short");
    for (std::size_t i = 0; i < res.alphas.size(); ++i) {
        Coweight ci = rs.coroot(res.alphas[i]);
        for (std::size_t j = 0; j < res.alphas.size(); ++j)
            if (i != j && rs.pair_root_coweight(res.alphas[j], ci) != 0)
                throw ConsistencyError("cascade roots are not orthogonal");
    }
    for (const Root& a : rs.roots()) {
        Rat vh = rs.pair_root_coweight(a, res.h);
        if (a.is_positive() && vh < 0) throw ConsistencyError("cascade coweight is not dominant");
        if (vh > 2) throw ConsistencyError("<alpha,h> exceeds 2");
        if (vh == 2 && rs.pair_root_coweight(a, pair.z) != 2)
            throw ConsistencyError("<alpha,h> = 2 without <alpha,z> = 2");
    }
    if (rs.pair_weight_coweight(pair.varpi, res.h) != Rat(res.r))
        throw ConsistencyError("<varpi,h> != r");
}

} // namespace

CascadeResult run_cascade(const HermitianPair& pair, int r) {
    detail::RawCascade raw = detail::raw_cascade(pair.rs, pair.zeta);
    const int q = static_cast<int>(raw.alpha_indices.size());
    if (r < 1 || r > q)
        throw ArgError("cascade length r = " + std::to_string(r) + " out of range for " +
                       pair.real_form_label + ": maximal length q = " + std::to_string(q));

    CascadeResult res;
    res.pair = &pair;
    res.r = r;
    res.h = pair.rs.coweight_zero();
    for (int i = 0; i < r; ++i) {
        const Root& a = pair.rs.root(raw.alpha_indices[i]);
        res.alphas.push_back(a);
        res.pis.push_back(raw.pis[i]);
        res.sigmas.push_back(raw.sigmas[i]);
        res.h = pair.rs.coweight_add(res.h, pair.rs.coroot(a));
    }
    res.theta = theta_root(pair, res.h);
    verify_cascade_laws(pair, res);
    return res;
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

CascadeResult max_cascade(const HermitianPair& pair) {
    CascadeResult res = run_cascade(pair, pair.rank_p);
    // Maximality: no root of u_+ extends the set of strongly orthogonal
    // roots.  (Compact roots orthogonal to every alpha_i can exist; the
    // cardinality-p statement is about noncompact ones.)
    for (std::size_t idx : pair.u_plus) {
        const Root& gamma = pair.rs.root(idx);
        bool extends = true;
        for (const Root& a : res.alphas) {
            if (gamma == a || !strongly_orthogonal(pair.rs, gamma, a)) {
                extends = false;
                break;
            }
        }
        if (extends)
            throw ConsistencyError("max_cascade: sequence is not maximal at " + pair.real_form_label);
    }
    return res;
}

bool is_tube_type(const HermitianPair& pair) {
    CascadeResult res = max_cascade(pair);
    bool tube = res.h == pair.z;
    bool zmax_is_p = pair.z_max == Rat(pair.rank_p);
    if (tube != zmax_is_p)
        throw ConsistencyError("tube-type criteria disagree for " + pair.real_form_label);
    return tube;
}

} // namespace comin
