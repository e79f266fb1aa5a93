#pragma once

#include "comin/qmatrix.hpp"
#include "comin/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace comin {

// Split octonions as Zorn vector matrices [[a, v], [w, b]] over Q.  The
// norm N(x) = ab - v.w is multiplicative and split: isotropic vectors
// exist, which is what the rank-1 stratum needs.
struct SplitOctonion {
    Rat a;
    std::array<Rat, 3> v{};
    std::array<Rat, 3> w{};
    Rat b;

    static SplitOctonion one();
    static SplitOctonion zero();
    bool is_zero() const;
    bool operator==(const SplitOctonion& o) const = default;
};

SplitOctonion oct_mul(const SplitOctonion& x, const SplitOctonion& y);
SplitOctonion oct_add(const SplitOctonion& x, const SplitOctonion& y);
SplitOctonion oct_scale(const Rat& s, const SplitOctonion& x);
Rat oct_norm(const SplitOctonion& x);
// Polarization of the norm: B(x,y) = (N(x+y) - N(x) - N(y))/2.
Rat oct_bilinear(const SplitOctonion& x, const SplitOctonion& y);

// E_1 ~ O (+) O, 16 rational coordinates.
struct E1Vector {
    SplitOctonion u, v;
    bool is_zero() const { return u.is_zero() && v.is_zero(); }
    bool operator==(const E1Vector& o) const = default;
};

// E_2 ~ C (+) O (+) C, 10 rational coordinates.
struct E2Vector {
    Rat t;
    SplitOctonion z;
    Rat t_prime;
    bool is_zero() const;
};

// Invariant quadratic form on E_2, normalized as q(t,z,t') = t t' - N(z).
Rat e2_form(const E2Vector& x);

RatVec e1_coords(const E1Vector& x);
E1Vector e1_from_coords(const RatVec& c);
RatVec e2_coords(const E2Vector& x);

// kappa(u,v) = (N(u), uv, N(v)); quadratic.
E2Vector kappa(const E1Vector& x);
// Symmetric bilinearization, kappa_tilde(x,x) = kappa(x).
E2Vector kappa_bilinear(const E1Vector& x, const E1Vector& y);

// Matrix of y -> kappa_tilde(x, y), 10 x 16; linear in x.
QMatrix lambda2(const E1Vector& x);

// 0 iff x = 0; 1 iff x != 0 and kappa(x) = 0; 2 otherwise.  Cross-checked
// against rank lambda2(x) in {0, 5, 9}.
int rank_class(const E1Vector& x);

// True iff no nontrivial combination s x + t y drops below rank 2, decided
// exactly through the gcd of the ten componentwise binary quadratics.
// x and y must be linearly independent.
bool pencil_all_rank2(const E1Vector& x, const E1Vector& y);

std::size_t kernel_intersection_dim(const E1Vector& x, const E1Vector& y);
std::size_t image_intersection_dim(const E1Vector& x, const E1Vector& y);

// Dual model: iota_tilde(w, .) with the same ternary formula, transposed,
// giving mu2(w) : E_2 coordinates -> E_1 coordinates.
QMatrix dual_model_mu2(const E1Vector& w);
std::size_t mu2_kernel_intersection_dim(const E1Vector& w, const E1Vector& z);
std::size_t mu2_image_intersection_dim(const E1Vector& w, const E1Vector& z);

// The graded nilpotent y = lambda1(x) (+) lambda2(x) (+) 0 on the
// 27-dimensional space E_0 (+) E_1 (+) E_2.
QMatrix nilpotent_action(const E1Vector& x);

// dims of V_i = E_i intersect F_{r-2i}, from explicit kernels and images of
// the nilpotent action; r = rank_class(x).
std::vector<std::size_t> filtration_dims(const E1Vector& x);

// ---- randomized property suite ------------------------------------------

struct OctonionSuiteReport {
    std::uint64_t seed = 0;
    int norm_trials = 0;
    int rank_trials = 0;
    std::map<int, int> lambda2_rank_histogram;
    int classification_agreements = 0;
    int pencil_trials = 0;
    int image_trials = 0;
    std::vector<std::string> violations;

    bool passed() const { return violations.empty(); }
};

// Deterministic given the seed; trial data is drawn from a fixed-width
// generator, never from distribution adapters.
OctonionSuiteReport run_octonion_suite(std::uint64_t seed, int norm_trials = 1000,
                                       int rank_trials = 1000, int pencil_trials = 200,
                                       int image_trials = 200);

} // namespace comin
