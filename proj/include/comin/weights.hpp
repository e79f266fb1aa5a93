#pragma once

#include "comin/root_system.hpp"

#include <map>
#include <string>
#include <vector>

namespace comin {

struct WeightEntry {
    Weight weight;
    Int mult;
    Int depth;  // height of (highest_weight - weight) in the root lattice
};

// Full weight system of an irreducible highest-weight module, with exact
// multiplicities.  Entries are kept in a deterministic order: by depth,
// then lexicographically on coordinates.
class WeightedModule {
public:
    const RootSystem& rs() const { return *rs_; }
    const Weight& highest_weight() const { return highest_; }
    const std::vector<WeightEntry>& entries() const { return entries_; }
    const Int& dimension() const { return dimension_; }

    bool contains(const Weight& w) const { return index_.count(w.coords) > 0; }
    Int multiplicity(const Weight& w) const;
    const Weight& lowest_weight() const { return entries_.back().weight; }

private:
    friend WeightedModule weight_system(const RootSystem&, const Weight&);
    const RootSystem* rs_ = nullptr;
    Weight highest_;
    std::vector<WeightEntry> entries_;
    Int dimension_ = 0;
    std::map<IntVec, std::size_t, IntVecLess> index_;
};

// Multiplicities by the Freudenthal recursion, processed by decreasing
// depth layer; exact rational arithmetic throughout.
WeightedModule weight_system(const RootSystem& rs, const Weight& lambda);

// Independent cross-check: the Weyl product formula.
Int weyl_dimension(const RootSystem& rs, const Weight& lambda);

struct LemmaViolation {
    Weight chi;
    Root alpha;
    std::string what;
};

// Scans for |<chi, alpha^vee>| > 2, or equal to 2 at a long root.
std::vector<LemmaViolation> check_weight2(const WeightedModule& module);

// For every long root alpha: <chi, alpha^vee> = 1 forces chi - alpha to be a
// weight of equal multiplicity, and <chi, alpha^vee> <= 0 forces chi - alpha
// to be absent.
std::vector<LemmaViolation> check_long_root_strings(const WeightedModule& module);

} // namespace comin
