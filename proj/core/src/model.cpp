#include "anharm/model.hpp"

#include <cmath>
#include <stdexcept>

namespace anharm {

Model make_model(std::vector<double> lambdas, double mass, double hbar) {
    if (lambdas.empty())
        throw std::invalid_argument("make_model: empty coefficient list");
    if (!(mass > 0.0))
        throw std::invalid_argument("make_model: mass must be positive");
    if (!(hbar > 0.0))
        throw std::invalid_argument("make_model: hbar must be positive");

    int degree = -1;
    for (int i = static_cast<int>(lambdas.size()) - 1; i >= 0; --i) {
        if (lambdas[i] != 0.0) {
            degree = i;
            break;
        }
    }
    if (degree < 2)
        throw std::invalid_argument("make_model: potential degree must be >= 2");
    if (degree % 2 != 0)
        throw std::invalid_argument("make_model: leading coefficient must have even index");
    if (!(lambdas[degree] > 0.0))
        throw std::invalid_argument("make_model: leading coefficient must be positive");

    lambdas.resize(degree + 1);
    return Model{std::move(lambdas), mass, hbar, degree};
}

Model from_double_well(const DoubleWellParams& params, double mass, double hbar) {
    if (!(params.alpha < 0.0))
        throw std::invalid_argument("from_double_well: alpha must be negative");
    if (!(params.beta > 0.0))
        throw std::invalid_argument("from_double_well: leading coefficient must be positive");
    std::vector<double> lambdas(5, 0.0);
    lambdas[1] = -params.p;
    lambdas[2] = params.alpha / 2.0;
    lambdas[4] = params.beta / 4.0;
    return make_model(std::move(lambdas), mass, hbar);
}

double potential_value(const Model& model, double q) {
    double v = 0.0;
    for (int i = model.degree; i >= 0; --i) v = v * q + model.lambda(i);
    return v;
}

double well_depth_asymptotic(double lambda4, double p) {
    if (!(lambda4 > 0.0))
        throw std::invalid_argument("well_depth_asymptotic: lambda4 must be positive");
    if (!(p > 0.0))
        throw std::invalid_argument("well_depth_asymptotic: p must be positive");
    return -0.75 * std::pow(4.0 * lambda4, -1.0 / 3.0) * std::pow(p, 4.0 / 3.0);
}

}  // namespace anharm
