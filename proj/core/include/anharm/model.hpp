#pragma once

#include <vector>

namespace anharm {

/// Polynomial oscillator H = P^2/2m + sum_i lambda_i Q^i.
/// Immutable after construction; the leading coefficient must have even
/// index and be positive so the spectrum is bounded below.
struct Model {
    std::vector<double> lambdas;  // dense from index 0
    double mass = 1.0;
    double hbar = 1.0;
    int degree = 0;  // highest nonzero index

    double lambda(int i) const {
        return (i >= 0 && i < static_cast<int>(lambdas.size())) ? lambdas[i] : 0.0;
    }
};

/// Double well V(Q) = alpha/2 Q^2 + beta/4 Q^4 tilted by an external
/// field term -pQ.
struct DoubleWellParams {
    double alpha;  // < 0
    double beta;   // > 0
    double p = 0.0;
};

Model make_model(std::vector<double> lambdas, double mass, double hbar);

/// lambda_1 = -p, lambda_2 = alpha/2, lambda_4 = beta/4.
Model from_double_well(const DoubleWellParams& params, double mass = 1.0, double hbar = 1.0);

double potential_value(const Model& model, double q);

/// Depth of the single surviving well of lambda4 q^4 - p q for large p:
/// -(3/4) (4 lambda4)^(-1/3) p^(4/3).
double well_depth_asymptotic(double lambda4, double p);

}  // namespace anharm
