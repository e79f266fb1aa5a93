#pragma once

#include "comin/qmatrix.hpp"
#include "comin/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace comin {

enum class Family { A, B, C, D, E6, E7 };

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

// A root, in coordinates over the simple-root basis.
struct Root {
    std::vector<int> coords;
    int height = 0;
    bool is_long = true;

    bool is_positive() const { return height > 0; }
    int len2() const { return is_long ? 2 : 1; }  // squared length, long roots normalized to 2
    bool operator==(const Root& o) const { return coords == o.coords; }
};

// An integral weight, in coordinates over the fundamental-weight basis:
// coords[b] = <chi, alpha_b^vee>.
struct Weight {
    IntVec coords;
    bool operator==(const Weight& o) const { return coords == o.coords; }
};

// A rational coweight, in coordinates over the fundamental-coweight basis:
// coords[b] = <alpha_b, c>.
struct Coweight {
    RatVec coords;
    bool operator==(const Coweight& o) const { return coords == o.coords; }
};

struct WeightLess {
    bool operator()(const Weight& a, const Weight& b) const {
        return lex_compare(a.coords, b.coords) < 0;
    }
};

// Immutable root-system data for the families where Hermitian pairs exist.
// Node numbering is Bourbaki throughout.  All cross-basis pairings route
// through the Cartan matrix and its exact rational inverse.
class RootSystem {
public:
    static RootSystem build(Family family, int rank);

    Family family() const { return family_; }
    int rank() const { return rank_; }
    std::string name() const;

    // cartan[i][j] = <alpha_j, alpha_i^vee>
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }
    const QMatrix& inverse_cartan() const { return inverse_cartan_; }

    const std::vector<Root>& roots() const { return roots_; }
    std::size_t num_roots() const { return roots_.size(); }
    std::size_t num_positive_roots() const { return roots_.size() / 2; }

    const Root& root(std::size_t idx) const { return roots_[idx]; }
    // Index into roots() of the given coordinate vector, or -1.
    int root_index(const std::vector<int>& coords) const;
    int negative_of(std::size_t idx) const;
    const Root& simple_root(int i) const { return roots_[simple_idx_[i]]; }
    std::size_t simple_root_index(int i) const { return simple_idx_[i]; }

    bool dynkin_adjacent(int i, int j) const { return i != j && cartan_[i][j] != 0; }
    int simple_len2(int i) const { return simple_len2_[i]; }
    bool two_root_lengths() const { return two_lengths_; }

    // ---- weights & pairings -------------------------------------------------

    Weight zero_weight() const { return Weight{IntVec(rank_, Int(0))}; }
    Weight fundamental_weight(int i) const;
    Weight rho() const;  // sum of the fundamental weights

    Weight add(const Weight& a, const Weight& b) const;
    Weight sub(const Weight& a, const Weight& b) const;
    Weight negate(const Weight& a) const;
    Weight scale(const Int& k, const Weight& a) const;

    // <chi, alpha^vee>, exact; always an integer.
    Int pair_weight_coroot(const Weight& chi, const Root& alpha) const;
    // <alpha, c> for a root alpha and coweight c.
    Rat pair_root_coweight(const Root& alpha, const Coweight& c) const;
    // <chi, c> for a weight chi and coweight c (uses the inverse Cartan).
    Rat pair_weight_coweight(const Weight& chi, const Coweight& c) const;

    // The functional alpha in fundamental-weight coordinates (Cartan row dot).
    Weight root_as_weight(const Root& alpha) const;
    // alpha^vee in fundamental-coweight coordinates.
    Coweight coroot(const Root& alpha) const;

    Coweight coweight_zero() const { return Coweight{RatVec(rank_, Rat(0))}; }
    Coweight coweight_add(const Coweight& a, const Coweight& b) const;

    // s_alpha(chi) = chi - <chi, alpha^vee> alpha
    Weight reflect(const Weight& chi, const Root& alpha) const;
    Weight simple_reflect(const Weight& chi, int i) const;

    bool is_dominant(const Weight& chi) const;
    Weight dominant_conjugate(const Weight& chi) const;
    Weight antidominant_conjugate(const Weight& chi) const;
    std::vector<Weight> weyl_orbit(const Weight& chi) const;

    // Simple-root coordinates of a weight, m = C^{-1} chi; exact rationals.
    RatVec weight_in_root_basis(const Weight& chi) const;
    // Invariant symmetric form with long roots of squared length 2.
    Rat inner(const Weight& a, const Weight& b) const;

    // Highest root of the subsystem generated by a set of simple-root
    // indices; the subset must be nonempty.
    Root highest_root(const std::vector<int>& subset) const;
    Root highest_root() const;

private:
    RootSystem() = default;
    void generate_roots();
    void validate() const;

    Family family_{};
    int rank_ = 0;
    std::vector<std::vector<int>> cartan_;
    QMatrix inverse_cartan_;
    std::vector<int> simple_len2_;
    bool two_lengths_ = false;
    std::vector<Root> roots_;
    std::vector<std::size_t> simple_idx_;
    std::map<std::vector<int>, int> index_of_;
};

// Closed-form root count per family, used as an independent cross-check.
std::size_t expected_root_count(Family f, int rank);

} // namespace comin
