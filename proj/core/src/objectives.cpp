#include "fishswarm/objectives.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fishswarm {

double sphere(const Point& x) {
    double sum = 0.0;
    for (double v : x) {
        sum += v * v;
    }
    return sum;
}

double rosenbrock(const Point& x) {
    if (x.size() < 2) {
        throw std::invalid_argument("rosenbrock: needs dimension >= 2");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double valley = x[i + 1] - x[i] * x[i];
        const double offset = x[i] - 1.0;
        sum += 100.0 * valley * valley + offset * offset;
    }
    return sum;
}

double ackley(const Point& x) {
    if (x.empty()) {
        throw std::invalid_argument("ackley: needs dimension >= 1");
    }
    const double n = static_cast<double>(x.size());
    double sum_sq = 0.0;
    double sum_cos = 0.0;
    for (double v : x) {
        sum_sq += v * v;
        sum_cos += std::cos(2.0 * std::numbers::pi * v);
    }
    return 20.0 + std::numbers::e - 20.0 * std::exp(-0.2 * std::sqrt(sum_sq / n)) -
           std::exp(sum_cos / n);
}

double griewank(const Point& x) {
    double sum = 0.0;
    double product = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sum += x[i] * x[i] / 4000.0;
        product *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return sum - product + 1.0;
}

Objective lookup_objective(const std::string& name, int dimension) {
    if (dimension <= 0) {
        throw std::invalid_argument("lookup_objective: dimension must be positive");
    }
    if (name == "sphere") {
        return Objective{"sphere", dimension, Bounds(-500.0, 500.0), 0.01, sphere};
    }
    if (name == "rosenbrock") {
        if (dimension < 2) {
            throw std::invalid_argument("lookup_objective: rosenbrock needs dimension >= 2");
        }
        return Objective{"rosenbrock", dimension, Bounds(-10.0, 10.0), 100.0, rosenbrock};
    }
    if (name == "ackley" || name == "ackly") {
        return Objective{"ackley", dimension, Bounds(-32.0, 32.0), 0.01, ackley};
    }
    if (name == "griewank") {
        return Objective{"griewank", dimension, Bounds(-600.0, 600.0), 0.01, griewank};
    }
    throw std::invalid_argument("lookup_objective: unknown function '" + name +
                                "'; valid names: sphere, rosenbrock, ackley (alias ackly), griewank");
}

} // namespace fishswarm
