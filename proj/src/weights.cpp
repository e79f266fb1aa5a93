#include "comin/weights.hpp"

#include "comin/errors.hpp"

#include <algorithm>

namespace comin {

Int WeightedModule::multiplicity(const Weight& w) const {
    auto it = index_.find(w.coords);
    return it == index_.end() ? Int(0) : entries_[it->second].mult;
}

namespace {

Int depth_of(const RootSystem& rs, const Weight& lambda, const Weight& chi) {
    RatVec m = rs.weight_in_root_basis(rs.sub(lambda, chi));
    Rat h = 0;
    for (const Rat& x : m) h += x;
    return to_int(h);
}

} // namespace

WeightedModule weight_system(const RootSystem& rs, const Weight& lambda) {
    if (!rs.is_dominant(lambda)) {
        std::string s;
        for (const Int& c : lambda.coords) s += (s.empty() ? "" : ",") + c.get_str();
        throw ArgError("weight_system: highest weight (" + s + ") is not dominant");
    }
    const int n = rs.rank();

    // Box bound for lambda - mu in the root lattice: the lowest weight is the
    // antidominant conjugate of lambda, and every weight sits between them.
    Weight mu0 = rs.antidominant_conjugate(lambda);
    RatVec span = rs.weight_in_root_basis(rs.sub(lambda, mu0));
    std::vector<Int> box(n);
    for (int i = 0; i < n; ++i) box[i] = to_int(span[i]);

    // Every dominant mu <= lambda with lambda - mu in the positive root
    // lattice is a weight of the module, so enumerating the box and keeping
    // the dominant ones yields exactly the dominant weights.
    struct Dominant {
        Weight weight;
        Int depth;
        Int mult;
    };
    std::vector<Dominant> doms;
    std::vector<Int> c(n, 0);
    for (;;) {
        Weight w = lambda;
        Int depth = 0;
        for (int b = 0; b < n; ++b) {
            depth += c[b];
            if (c[b] == 0) continue;
            for (int g = 0; g < n; ++g) w.coords[g] -= c[b] * rs.cartan()[g][b];
        }
        if (rs.is_dominant(w)) doms.push_back({w, depth, Int(0)});
        int i = 0;
        while (i < n && c[i] == box[i]) c[i++] = 0;
        if (i == n) break;
        ++c[i];
    }
    std::sort(doms.begin(), doms.end(), [](const Dominant& a, const Dominant& b) {
        int d = cmp(a.depth, b.depth);
        if (d != 0) return d < 0;
        return lex_compare(a.weight.coords, b.weight.coords) < 0;
    });

    std::map<IntVec, std::size_t, IntVecLess> dom_index;
    for (std::size_t i = 0; i < doms.size(); ++i) dom_index[doms[i].weight.coords] = i;

    const Weight rho = rs.rho();
    const Weight lambda_rho = rs.add(lambda, rho);
    const Rat norm_top = rs.inner(lambda_rho, lambda_rho);

    std::vector<Weight> positive_roots_as_weights;
    std::vector<const Root*> positive_roots;
    for (const Root& r : rs.roots())
        if (r.is_positive()) {
            positive_roots.push_back(&r);
            positive_roots_as_weights.push_back(rs.root_as_weight(r));
        }

    // Freudenthal, outermost weight first.
    for (std::size_t i = 0; i < doms.size(); ++i) {
        if (doms[i].depth == 0) {
            doms[i].mult = 1;
            continue;
        }
        const Weight& mu = doms[i].weight;
        Rat sum = 0;
        for (std::size_t a = 0; a < positive_roots.size(); ++a) {
            const Weight& aw = positive_roots_as_weights[a];
            Weight nu = mu;
            for (Int k = 1;; ++k) {
                nu = rs.add(nu, aw);
                auto it = dom_index.find(rs.dominant_conjugate(nu).coords);
                if (it == dom_index.end()) break;  // string left the weight system
                const Int& m = doms[it->second].mult;
                if (m == 0)
                    throw ConsistencyError("weight_system: Freudenthal order violated");
                sum += Rat(m) * rs.inner(nu, aw);
            }
        }
        Weight mu_rho = rs.add(mu, rho);
        Rat denom = norm_top - rs.inner(mu_rho, mu_rho);
        Rat mult = 2 * sum / denom;
        doms[i].mult = to_int(mult);
        if (doms[i].mult <= 0)
            throw ConsistencyError("weight_system: nonpositive Freudenthal multiplicity");
    }

    WeightedModule mod;
    mod.rs_ = &rs;
    mod.highest_ = lambda;
    for (const Dominant& d : doms) {
        for (const Weight& w : rs.weyl_orbit(d.weight))
            mod.entries_.push_back({w, d.mult, depth_of(rs, lambda, w)});
    }
    std::sort(mod.entries_.begin(), mod.entries_.end(), [](const WeightEntry& a, const WeightEntry& b) {
        int d = cmp(a.depth, b.depth);
        if (d != 0) return d < 0;
        return lex_compare(a.weight.coords, b.weight.coords) < 0;
    });
    for (std::size_t i = 0; i < mod.entries_.size(); ++i) {
        mod.index_[mod.entries_[i].weight.coords] = i;
        mod.dimension_ += mod.entries_[i].mult;
    }

    if (mod.entries_.front().mult != 1 || mod.entries_.back().mult != 1)
        throw ConsistencyError("weight_system: extreme weights must have multiplicity 1");
    return mod;
}

Int weyl_dimension(const RootSystem& rs, const Weight& lambda) {
    if (!rs.is_dominant(lambda)) throw ArgError("weyl_dimension: weight is not dominant");
    const Weight rho = rs.rho();
    const Weight top = rs.add(lambda, rho);
    Rat prod = 1;
    for (const Root& r : rs.roots()) {
        if (!r.is_positive()) continue;
        Weight aw = rs.root_as_weight(r);
        prod *= rs.inner(top, aw) / rs.inner(rho, aw);
    }
    return to_int(prod);
}

std::vector<LemmaViolation> check_weight2(const WeightedModule& module) {
    const RootSystem& rs = module.rs();
    std::vector<LemmaViolation> out;
    for (const WeightEntry& e : module.entries()) {
        for (const Root& alpha : rs.roots()) {
            Int v = rs.pair_weight_coroot(e.weight, alpha);
            Int av = abs(v);
            if (av > 2)
                out.push_back({e.weight, alpha, "|<chi,alpha^vee>| = " + av.get_str() + " > 2"});
            else if (av == 2 && alpha.is_long)
                out.push_back({e.weight, alpha, "|<chi,alpha^vee>| = 2 at a long root"});
        }
    }
    return out;
}

std::vector<LemmaViolation> check_long_root_strings(const WeightedModule& module) {
    const RootSystem& rs = module.rs();
    std::vector<LemmaViolation> out;
    for (const WeightEntry& e : module.entries()) {
        for (const Root& alpha : rs.roots()) {
            if (!alpha.is_long) continue;
            Int v = rs.pair_weight_coroot(e.weight, alpha);
            Weight below = rs.sub(e.weight, rs.root_as_weight(alpha));
            if (v == 1) {
                if (!module.contains(below))
                    out.push_back({e.weight, alpha, "<chi,alpha^vee> = 1 but chi - alpha is absent"});
                else if (module.multiplicity(below) != e.mult)
                    out.push_back({e.weight, alpha, "multiplicity drop across a long-root string"});
            } else if (v <= 0) {
                if (module.contains(below))
                    out.push_back({e.weight, alpha,
                                   "<chi,alpha^vee> = " + v.get_str() + " yet chi - alpha is a weight"});
            }
        }
    }
    return out;
}

} // namespace comin
