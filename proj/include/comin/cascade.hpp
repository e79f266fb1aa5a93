#pragma once

#include "comin/hermitian.hpp"

#include <optional>
#include <vector>

namespace comin {

namespace detail {

// The bare dominant-orthogonal-sequence recursion, independent of the
// HermitianPair wrapper so that pair construction itself can use it.
struct RawCascade {
    std::vector<std::size_t> alpha_indices;  // root indices of alpha_1 .. alpha_q
    std::vector<std::vector<int>> pis;       // Pi_1 contains Pi_2 contains ... (simple indices)
    std::vector<std::vector<int>> sigmas;    // Sigma_i
};

RawCascade raw_cascade(const RootSystem& rs, int zeta);

} // namespace detail

struct CascadeResult {
    const HermitianPair* pair = nullptr;
    int r = 0;
    std::vector<Root> alphas;
    std::vector<std::vector<int>> pis;
    std::vector<std::vector<int>> sigmas;
    Coweight h;                // alpha_1^vee + ... + alpha_r^vee
    std::optional<Root> theta; // minimal-height root pairing to 2 with h
};

// Runs the recursion for the first r steps, 1 <= r <= pair.rank_p; verifies
// the structural laws (long + strongly orthogonal alphas, dominant h,
// <alpha,h> <= 2 with <alpha,h> = 2 implying <alpha,z> = 2, <varpi,h> = r)
// before returning.  An out-of-range r reports the maximal length.
CascadeResult run_cascade(const HermitianPair& pair, int r);

// The terminal sequence; additionally verifies maximality: no positive root
// is orthogonal to every alpha_i.
CascadeResult max_cascade(const HermitianPair& pair);

// Minimal-height root with <theta, h> = 2, if any; the minimum must be
// unique or the run fails loudly.
std::optional<Root> theta_root(const HermitianPair& pair, const Coweight& h);

// True iff z equals alpha_1^vee + ... + alpha_p^vee; cross-checked against
// z_max = p.
bool is_tube_type(const HermitianPair& pair);

} // namespace comin
