#pragma once

#include "comin/hermitian.hpp"
#include "comin/weights.hpp"

#include <vector>

namespace comin {

// The z-grading of a cominuscule module: grade i collects the weights with
// <chi, z> = z_max - 2i, for i = 0 .. p.  Holds references into the base
// module; keep the module and pair alive alongside.
struct GradedModule {
    const WeightedModule* base = nullptr;
    const HermitianPair* pair = nullptr;
    std::vector<std::vector<std::size_t>> grade_entries;  // grade -> entry indices
    std::vector<Int> dims;
    std::vector<int> entry_grade;  // entry index -> grade

    int p() const { return static_cast<int>(dims.size()) - 1; }
};

// Fails with a consistency error if some <chi, z> falls outside the
// arithmetic progression z_max, z_max - 2, ..., z_max - 2p, or if the
// grading laws (every grade nonempty, d0 = 1, d1 = dim u_-) break.
GradedModule grade_by_z(const WeightedModule& module, const HermitianPair& pair);

} // namespace comin
