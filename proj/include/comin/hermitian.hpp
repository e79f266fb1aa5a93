#pragma once

#include "comin/root_system.hpp"

#include <string>
#include <vector>

namespace comin {

// An irreducible Hermitian pair: a root system with the distinguished
// cominuscule simple node zeta (0-based index; Bourbaki node zeta+1),
// the central coweight z = 2 varpi_{zeta^vee}, and the derived data.
struct HermitianPair {
    explicit HermitianPair(RootSystem rs_) : rs(std::move(rs_)) {}

    RootSystem rs;
    int zeta = 0;
    Weight varpi;   // fundamental weight at zeta
    Coweight z;     // <alpha, z> = 2 n_zeta(alpha)

    std::vector<std::size_t> u_plus;   // roots with <alpha, z> = +2
    std::vector<std::size_t> u_minus;  // roots with <alpha, z> = -2
    std::vector<std::size_t> k_roots;  // roots with <alpha, z> = 0

    Int dim_u_plus = 0;
    int rank_p = 0;      // length of the maximal dominant orthogonal sequence
    Rat z_max;           // <varpi, z> = 2 dim u_+ / fano_index
    Int fano_index = 0;  // the c with sum of u_+ roots = c varpi
    std::string real_form_label;
};

// One catalog row per family of irreducible Hermitian pairs.
struct CatalogEntry {
    std::string key;            // "A", "B", "C", "D1", "Dn", "E6", "E7"
    Family family;
    std::string label_pattern;  // e.g. "SU(p,q)"
    int num_params;             // 2 for A (p,q); 1 for B/C/D (n); 0 for E6/E7
    std::string zeta_rule;      // human-readable node rule
    std::string rank_rule;      // real rank as a function of the parameters
};

std::vector<CatalogEntry> catalog();

// Instantiates a catalog entry at concrete parameters.
HermitianPair instantiate(const CatalogEntry& entry, const std::vector<int>& params);

// Builds the pair directly; zeta is a 0-based simple-root index.  Rejects
// nodes that are not cominuscule, naming an offending root.
HermitianPair build_pair(Family family, int rank, int zeta);

// True iff every root has coefficient in {-1, 0, 1} at the candidate node.
bool is_cominuscule(const RootSystem& rs, int candidate_node);

} // namespace comin
