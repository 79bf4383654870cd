#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "ridgerec/dataset.hpp"
#include "ridgerec/linalg.hpp"

namespace ridgerec {

enum class FunctionName {
    Quad1d,          // (b^T x)^2, m = 10, standard Gaussian inputs
    Quad3d,          // x^T B B^T x + b^T x, m = 10
    Product,         // x1 * x2, m = 2
    ShiftedProduct,  // (x1 + c1)(x2 + c2), m = 2
    Bullseye,        // two-valued radial function, m = 2
    Linear,          // a^T x
    HartmannLog,     // induced magnetic field vs log physical inputs, m = 5
};

struct TestFunction {
    FunctionName name;
    int m;
    VectorXd direction;   // b for quad1d/quad3d, a for linear
    MatrixXd quad_basis;  // B for quad3d (m x 2)
    double c1 = 0.0, c2 = 0.0;
    double r1 = 0.0, r2 = 0.0;
    double y1 = 0.0, y2 = 1.0;
    VectorXd input_mean;      // input density mean
    VectorXd input_variance;  // diagonal covariance
};

struct OracleSubspace {
    std::optional<OrthonormalBasis> basis;
    std::string note;  // exact | asserted | none
};

// r1 = 1 by convention; r2 > sqrt(2) solves r^2 exp(-r^2/2) = e^{-1/2},
// found by bisection to 1e-12.
std::pair<double, double> bullseye_radii();

// Instantiate a named test function. Recognized params: m (quad1d/linear),
// c1, c2 (shifted_product), r1, r2 (bullseye).
TestFunction make_test_function(FunctionName name,
                                const std::map<std::string, double>& params = {});
TestFunction make_test_function(const std::string& name,
                                const std::map<std::string, double>& params = {});

double evaluate(const TestFunction& fn, const VectorXd& x);

// Draw N inputs from the function's density and fill responses.
Dataset sample_inputs(const TestFunction& fn, int n, std::uint64_t seed);

OracleSubspace oracle_subspace(const TestFunction& fn);

double shifted_product_evaluate(const VectorXd& x, double c1, double c2);

}  // namespace ridgerec
