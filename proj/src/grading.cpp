#include "comin/grading.hpp"

#include "comin/errors.hpp"

namespace comin {

GradedModule grade_by_z(const WeightedModule& module, const HermitianPair& pair) {
    const RootSystem& rs = pair.rs;
    if (!(module.highest_weight() == pair.varpi))
        throw ArgError("grade_by_z: module is not the cominuscule module of " +
                       pair.real_form_label);

    GradedModule g;
    g.base = &module;
    g.pair = &pair;
    g.grade_entries.assign(pair.rank_p + 1, {});
    g.dims.assign(pair.rank_p + 1, Int(0));
    g.entry_grade.assign(module.entries().size(), -1);

    for (std::size_t e = 0; e < module.entries().size(); ++e) {
        const WeightEntry& we = module.entries()[e];
        Rat v = rs.pair_weight_coweight(we.weight, pair.z);
        Rat step = (pair.z_max - v) / 2;
        if (!is_integral(step))
            throw ConsistencyError("grade_by_z: <chi,z> off the arithmetic progression");
        Int i = to_int(step);
        if (i < 0 || i > pair.rank_p)
            throw ConsistencyError("grade_by_z: grade index " + i.get_str() +
                                   " outside 0.." + std::to_string(pair.rank_p));
        long gi = i.get_si();
        g.grade_entries[gi].push_back(e);
        g.dims[gi] += we.mult;
        g.entry_grade[e] = static_cast<int>(gi);
    }

    for (int i = 0; i <= pair.rank_p; ++i)
        if (g.dims[i] == 0)
            throw ConsistencyError("grade_by_z: empty grade " + std::to_string(i));
    if (g.dims[0] != 1) throw ConsistencyError("grade_by_z: d0 != 1");
    if (pair.rank_p >= 1 && g.dims[1] != Int(static_cast<long>(pair.u_minus.size())))
        throw ConsistencyError("grade_by_z: d1 != dim u_-");
    return g;
}

} // namespace comin
