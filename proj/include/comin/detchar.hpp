#pragma once

#include "comin/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace comin {

// Formal sums of tensor products of symbols under id, wedge^2 and sym^2,
// e.g. "w2(V)*s2(B) + s2(V)*w2(B) + V*A*B".  Symbol dimensions come from a
// caller-supplied table.
namespace detchar {

enum class Functor { Id, Wedge2, Sym2 };

struct Factor {
    Functor functor = Functor::Id;
    std::string symbol;
};

struct Term {
    std::vector<Factor> factors;
};

struct TensorExpr {
    std::vector<Term> terms;
};

using DimTable = std::map<std::string, Int>;

TensorExpr parse(const std::string& text);

Int factor_dim(const Factor& f, const DimTable& dims);
Int term_dim(const Term& t, const DimTable& dims);
Int total_dim(const TensorExpr& e, const DimTable& dims);

// Exponent e with det(action on the total space) = det(g)^e for g unitary
// on the actor symbol: scale the actor by a parameter, sum the homogeneity
// degrees weighted by block dimensions, divide by dim(actor).
Int det_exponent(const TensorExpr& e, const DimTable& dims, const std::string& actor);

} // namespace detchar

} // namespace comin
