#include "comin/hermitian.hpp"

#include "comin/cascade.hpp"
#include "comin/errors.hpp"

#include <algorithm>

namespace comin {

std::vector<CatalogEntry> catalog() {
    return {
        {"A", Family::A, "SU(p,q)", 2, "node p of A_{p+q-1}", "min(p,q)"},
        {"B", Family::B, "SO0(2,2n-1)", 1, "node 1 of B_n (n >= 2)", "2"},
        {"C", Family::C, "Sp(2n,R)", 1, "node n of C_n (n >= 2)", "n"},
        {"D1", Family::D, "SO0(2,2n-2)", 1, "node 1 of D_n (n >= 3)", "2"},
        {"Dn", Family::D, "SO*(2n)", 1, "node n of D_n (n >= 3)", "floor(n/2)"},
        {"E6", Family::E6, "E6(-14)", 0, "node 1 of E6", "2"},
        {"E7", Family::E7, "E7(-25)", 0, "node 7 of E7", "3"},
    };
}

HermitianPair instantiate(const CatalogEntry& entry, const std::vector<int>& params) {
    if (static_cast<int>(params.size()) != entry.num_params)
        throw ArgError("catalog entry " + entry.key + " takes " + std::to_string(entry.num_params) +
                       " parameter(s)");
    switch (entry.family) {
        case Family::A: {
            int p = params[0], q = params[1];
            if (p < 1 || q < 1 || p + q < 3)
                throw ConfigError("SU(p,q) needs p,q >= 1 and p+q >= 3");
            return build_pair(Family::A, p + q - 1, p - 1);
        }
        case Family::B: return build_pair(Family::B, params[0], 0);
        case Family::C: return build_pair(Family::C, params[0], params[0] - 1);
        case Family::D:
            return entry.key == "D1" ? build_pair(Family::D, params[0], 0)
                                     : build_pair(Family::D, params[0], params[0] - 1);
        case Family::E6: return build_pair(Family::E6, 6, 0);
        case Family::E7: return build_pair(Family::E7, 7, 6);
    }
    throw ConfigError("unknown catalog entry");
}

bool is_cominuscule(const RootSystem& rs, int candidate_node) {
    for (const Root& r : rs.roots()) {
        int c = r.coords[candidate_node];
        if (c < -1 || c > 1) return false;
    }
    return true;
}

namespace {

std::string coords_string(const std::vector<int>& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + ")";
}

std::string real_form_label(Family f, int rank, int zeta) {
    switch (f) {
        case Family::A:
            return "SU(" + std::to_string(zeta + 1) + "," + std::to_string(rank - zeta) + ")";
        case Family::B: return "SO0(2," + std::to_string(2 * rank - 1) + ")";
        case Family::C: return "Sp(" + std::to_string(2 * rank) + ",R)";
        case Family::D:
            if (zeta == 0) return "SO0(2," + std::to_string(2 * rank - 2) + ")";
            return "SO*(" + std::to_string(2 * rank) + ")";
        case Family::E6: return "E6(-14)";
        case Family::E7: return "E7(-25)";
    }
    return "?";
}

} // namespace

HermitianPair build_pair(Family family, int rank, int zeta) {
    HermitianPair pair(RootSystem::build(family, rank));
    const RootSystem& rs = pair.rs;
    if (zeta < 0 || zeta >= rank)
        throw ArgError("zeta node index out of range for " + rs.name());

    for (const Root& r : rs.roots()) {
        int c = r.coords[zeta];
        if (c < -1 || c > 1)
            throw ConfigError("node " + std::to_string(zeta + 1) + " of " + rs.name() +
                              " is not cominuscule: root " + coords_string(r.coords) +
                              " has coefficient " + std::to_string(c));
    }

    pair.zeta = zeta;
    pair.varpi = rs.fundamental_weight(zeta);
    pair.z = rs.coweight_zero();
    pair.z.coords[zeta] = 2;

    IntVec u_plus_sum(rank, Int(0));
    for (std::size_t i = 0; i < rs.num_roots(); ++i) {
        int c = rs.root(i).coords[zeta];
        if (c == 1) {
            pair.u_plus.push_back(i);
            for (int b = 0; b < rank; ++b) u_plus_sum[b] += rs.root(i).coords[b];
        } else if (c == -1) {
            pair.u_minus.push_back(i);
        } else {
            pair.k_roots.push_back(i);
        }
    }
    pair.dim_u_plus = static_cast<long>(pair.u_plus.size());
    if (pair.u_plus.size() != pair.u_minus.size() ||
        pair.u_plus.size() + pair.u_minus.size() + pair.k_roots.size() != rs.num_roots())
        throw ConsistencyError("u+/u-/k do not partition the roots");

    // Fano index: the sum of the u_+ roots must be an integer multiple of varpi.
    {
        Weight s = rs.zero_weight();
        for (int g = 0; g < rank; ++g) {
            Int acc = 0;
            for (int b = 0; b < rank; ++b) acc += Int(rs.cartan()[g][b]) * u_plus_sum[b];
            s.coords[g] = acc;
        }
        for (int g = 0; g < rank; ++g)
            if (g != zeta && s.coords[g] != 0)
                throw ConsistencyError("sum of u_+ roots is not proportional to varpi");
        pair.fano_index = s.coords[zeta];
        if (pair.fano_index <= 0) throw ConsistencyError("Fano index must be positive");
    }

    pair.z_max = rs.pair_weight_coweight(pair.varpi, pair.z);
    if (pair.z_max * Rat(pair.fano_index) != Rat(2 * pair.dim_u_plus))
        throw ConsistencyError("z_max * fano_index != 2 dim u_+");

    pair.rank_p = static_cast<int>(detail::raw_cascade(rs, zeta).alpha_indices.size());
    pair.real_form_label = real_form_label(family, rank, zeta);
    return pair;
}

} // namespace comin
