#pragma once

#include "comin/cascade.hpp"
#include "comin/grading.hpp"

#include <string>
#include <vector>

namespace comin {

// The graded subspace V = (+) V_i attached to a cascade of length r:
// V_i collects the weights of grade i with <chi, h> = r - 2i.
struct SubmodulePartition {
    const GradedModule* graded = nullptr;
    Coweight h;
    int r = 0;
    std::vector<Root> cascade_alphas;  // empty when built from a raw coweight
    std::vector<std::vector<std::size_t>> vee_entries;  // i = 0..r -> base entry indices
    std::vector<Int> dims;                              // n_i
    Int total_dim = 0;
};

// Root partition cut out by the coweight z - h.
struct QLHPartition {
    Coweight h;
    std::vector<std::size_t> q_roots;       // <alpha,h> <= <alpha,z>
    std::vector<std::size_t> l_roots;       // <alpha,h>  = <alpha,z>
    std::vector<std::size_t> l_plus;        // <alpha,h>  = <alpha,z> = +2
    std::vector<std::size_t> l_minus;       // <alpha,h>  = <alpha,z> = -2
    std::vector<std::size_t> levi_h_roots;  // <alpha,h>  = <alpha,z> =  0
};

// det/dim of a weight multiset, together with its restriction to the
// central directions of the Levi.
struct SlopeFunctional {
    Weight numerator;  // sum of mult * chi
    Int dimension = 0;
    RatVec restriction;  // <numerator, d>/dimension per central direction
};

// Rational spanning set for the central torus directions: z, h, and the
// fundamental coweights untouched by the levi_h support.
std::vector<Coweight> central_directions(const HermitianPair& pair, const QLHPartition& qlh);

SubmodulePartition build_submodule(const GradedModule& graded, const CascadeResult& cascade);
QLHPartition build_qlh(const HermitianPair& pair, const CascadeResult& cascade);

// Variants taking a raw coweight in place of a cascade; used by the
// synthetic negative controls.  bound_violations, when non-null, collects
// the weights with <chi,h> < r - 2i instead of failing on them.
SubmodulePartition submodule_from_coweight(const GradedModule& graded, const Coweight& h, int r,
                                           std::vector<Weight>* bound_violations);
QLHPartition qlh_from_coweight(const HermitianPair& pair, const Coweight& h);

struct ClosureViolation {
    std::string what;
    Weight chi;
};

// Weight-level closure laws:
//  (a) l_- moves V_i into V_{i+1} whenever chi + alpha stays a weight,
//  (b) l_+ moves V_i into V_{i-1} likewise,
//  (c) every weight of V_{i+1} is chi + alpha with chi in V_i, alpha in l_-,
//  (d) subtracting a cascade root from V_i lands in V_{i+1} when possible.
std::vector<ClosureViolation> check_closure(const SubmodulePartition& sub, const QLHPartition& qlh);

// For alpha strictly inside q (<alpha,h> < <alpha,z>) and chi in V, the
// shifted weight chi + alpha never lands back in V.
std::vector<ClosureViolation> check_nilradical_triviality(const SubmodulePartition& sub,
                                                          const QLHPartition& qlh);

SlopeFunctional slope(const RootSystem& rs, const std::vector<std::pair<Weight, Int>>& weights,
                      const std::vector<Coweight>& directions);
SlopeFunctional slope_of_vee(const SubmodulePartition& sub, int i,
                             const std::vector<Coweight>& directions);

// mu(V_i) = mu(V_0) + i (mu(V_1) - mu(V_0)), tested exactly on the
// restricted functionals.
std::vector<std::string> check_slope_identity(const SubmodulePartition& sub,
                                              const QLHPartition& qlh);

// Weight multiset of E^(x)k graded by (<.,z>, <.,h>) against the k-fold
// products of V; k in {1,2,3}, dim E <= 30.
std::vector<std::string> tensor_power_check(const HermitianPair& pair,
                                            const CascadeResult& cascade, int k);

// V as an l-module is tube type: the cascade roots all lie in l, their
// coweight restricted to l is the grading element, and no root of l_+
// extends them as a strongly orthogonal set.
std::vector<std::string> check_v_tube_structure(const HermitianPair& pair,
                                                const CascadeResult& cascade,
                                                const QLHPartition& qlh);

} // namespace comin
