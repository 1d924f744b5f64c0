#ifndef LGB_INTMAT_HPP
#define LGB_INTMAT_HPP

#include "lgb/rational.hpp"

#include <vector>

namespace lgb {

using IntMat = std::vector<std::vector<Integer>>;

// Smith normal form D = R * A * C with R, C unimodular; D rectangular
// diagonal with d_1 | d_2 | ... (nonnegative). Only C is returned since the
// symmetry-group kernel computation needs column operations only:
// A g in Z^m  <=>  D (C^-1 g) in Z^m, and generators pull back through C.
struct SmithResult {
    std::vector<Integer> diag;  // min(m,n) entries, divisibility chain
    IntMat c;                   // n x n unimodular
};

SmithResult smith_normal_form(IntMat a);

}  // namespace lgb

#endif
