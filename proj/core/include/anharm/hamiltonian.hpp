#pragma once

#include <string>
#include <vector>

#include "anharm/basis.hpp"
#include "anharm/model.hpp"

namespace anharm {

/// One normal-ordered term c (a^dag)^dp a^ap of the expansion of (a+a^dag)^i.
struct OrderedTerm {
    int dagger_power;
    int a_power;
    double coefficient;
};

/// Dense symmetric matrix with band structure |s-t| <= bandwidth.
struct SymmetricBandMatrix {
    int dimension = 0;
    int bandwidth = 0;
    std::vector<double> entries;  // row-major, dimension x dimension

    double operator()(int s, int t) const { return entries[s * dimension + t]; }
    double& at(int s, int t) { return entries[s * dimension + t]; }
};

/// Normal-ordered expansion of (a+a^dag)^i: terms (a^dag)^{i-2k-j} a^j with
/// coefficient i!/(2^k k! j! (i-2k-j)!) over 0 <= k <= i/2, 0 <= j <= i-2k.
std::vector<OrderedTerm> ordered_power(int i);

/// N x N matrix of H in the oscillator basis of the given spec.
SymmetricBandMatrix assemble(const Model& model, const BasisSpec& basis);

/// Position operator Q = (r0/sqrt(2)) (a + a^dag) truncated to N x N.
SymmetricBandMatrix position_operator(const BasisSpec& basis);

/// Row-major plain-text dump, 17 significant digits, one row per line.
std::string dump_matrix(const SymmetricBandMatrix& matrix);

}  // namespace anharm
