#include "ridgerec/testbed.hpp"

#include <cmath>

#include "ridgerec/rng.hpp"

namespace ridgerec {

namespace {

VectorXd seeded_unit_vector(int m, std::uint64_t seed) {
    Rng rng(seed);
    VectorXd v(m);
    for (int i = 0; i < m; ++i) v(i) = rng.normal();
    v.normalize();
    return v;
}

int int_param(const std::map<std::string, double>& params, const std::string& key, int fallback) {
    const auto it = params.find(key);
    if (it == params.end()) return fallback;
    const int v = static_cast<int>(it->second);
    if (v < 1 || static_cast<double>(v) != it->second)
        throw Error(errc::bad_config, "parameter " + key + " must be a positive integer");
    return v;
}

double real_param(const std::map<std::string, double>& params, const std::string& key,
                  double fallback) {
    const auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

}  // namespace

std::pair<double, double> bullseye_radii() {
    const double target = std::exp(-0.5);  // g(1) with g(r) = r^2 exp(-r^2/2)
    const auto g = [](double r) { return r * r * std::exp(-r * r / 2.0); };
    // g decreases beyond sqrt(2); g(1.5) > g(1) > g(3) brackets the root.
    double lo = 1.5, hi = 3.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (std::abs(g(mid) - target) <= 1e-12) return {1.0, mid};
        (g(mid) > target ? lo : hi) = mid;
    }
    return {1.0, 0.5 * (lo + hi)};
}

TestFunction make_test_function(FunctionName name, const std::map<std::string, double>& params) {
    TestFunction fn;
    fn.name = name;
    switch (name) {
        case FunctionName::Quad1d: {
            fn.m = int_param(params, "m", 10);
            fn.direction = seeded_unit_vector(fn.m, 0x51AD1DULL);
            break;
        }
        case FunctionName::Quad3d: {
            fn.m = 10;
            Rng rng(0x51AD3DULL);
            MatrixXd raw(fn.m, 3);
            for (int i = 0; i < fn.m; ++i)
                for (int j = 0; j < 3; ++j) raw(i, j) = rng.normal();
            const MatrixXd frame = orthonormalize(raw).columns();
            // Distinct quadratic scales plus linear components both inside and
            // outside the B-plane give three well-separated inverse-regression
            // directions; a plain random draw makes the quadratic term dwarf
            // the linear one and pushes the third eigenvalue into the noise.
            fn.quad_basis = frame.leftCols(2);
            fn.quad_basis.col(1) *= 0.5;
            fn.direction = frame.col(0) + 0.5 * frame.col(1) + 0.5 * frame.col(2);
            // b must have a component outside colspan(B); the fixed seed gives
            // one, and the in-plane component is kept so the linear term
            // breaks the quadratic's symmetry in the B-plane.
            const OrthonormalBasis qb = orthonormalize(fn.quad_basis);
            const VectorXd residual =
                fn.direction - qb.columns() * (qb.columns().transpose() * fn.direction);
            if (residual.norm() < 0.1 * fn.direction.norm())
                throw Error(errc::invalid_input, "quad3d seed produced b near colspan(B)");
            break;
        }
        case FunctionName::Product:
            fn.m = 2;
            break;
        case FunctionName::ShiftedProduct:
            fn.m = 2;
            fn.c1 = real_param(params, "c1", 1.0);
            fn.c2 = real_param(params, "c2", 1.0);
            break;
        case FunctionName::Bullseye: {
            fn.m = 2;
            const auto [r1, r2] = bullseye_radii();
            fn.r1 = real_param(params, "r1", r1);
            fn.r2 = real_param(params, "r2", r2);
            if (!(0.0 < fn.r1 && fn.r1 < fn.r2))
                throw Error(errc::bad_config, "bullseye needs 0 < r1 < r2");
            break;
        }
        case FunctionName::Linear: {
            fn.m = int_param(params, "m", 5);
            fn.direction = seeded_unit_vector(fn.m, 0x11EA4ULL);
            break;
        }
        case FunctionName::HartmannLog: {
            fn.m = 5;
            fn.input_mean.resize(5);
            fn.input_mean << -2.25, 1.0, 0.3, 0.3, -0.75;
            fn.input_variance.resize(5);
            fn.input_variance << 0.15, 0.25, 0.25, 0.25, 0.25;
            break;
        }
    }
    if (fn.input_mean.size() == 0) {
        fn.input_mean = VectorXd::Zero(fn.m);
        fn.input_variance = VectorXd::Ones(fn.m);
    }
    return fn;
}

TestFunction make_test_function(const std::string& name,
                                const std::map<std::string, double>& params) {
    if (name == "quad1d") return make_test_function(FunctionName::Quad1d, params);
    if (name == "quad3d") return make_test_function(FunctionName::Quad3d, params);
    if (name == "product") return make_test_function(FunctionName::Product, params);
    if (name == "shifted_product") return make_test_function(FunctionName::ShiftedProduct, params);
    if (name == "bullseye") return make_test_function(FunctionName::Bullseye, params);
    if (name == "linear") return make_test_function(FunctionName::Linear, params);
    if (name == "hartmann_log") return make_test_function(FunctionName::HartmannLog, params);
    throw Error(errc::bad_config, "unknown test function: " + name);
}

double shifted_product_evaluate(const VectorXd& x, double c1, double c2) {
    if (x.size() != 2) throw Error(errc::dimension_mismatch, "shifted product needs m = 2");
    return (x(0) + c1) * (x(1) + c2);
}

double evaluate(const TestFunction& fn, const VectorXd& x) {
    if (x.size() != fn.m)
        throw Error(errc::dimension_mismatch, "input dimension does not match function");
    if (!x.allFinite()) throw Error(errc::invalid_input, "non-finite input");
    switch (fn.name) {
        case FunctionName::Quad1d: {
            const double t = fn.direction.dot(x);
            return t * t;
        }
        case FunctionName::Quad3d: {
            const VectorXd bx = fn.quad_basis.transpose() * x;
            return bx.squaredNorm() + fn.direction.dot(x);
        }
        case FunctionName::Product:
            return x(0) * x(1);
        case FunctionName::ShiftedProduct:
            return shifted_product_evaluate(x, fn.c1, fn.c2);
        case FunctionName::Bullseye: {
            const double r = x.norm();
            return (r <= fn.r1 || r >= fn.r2) ? fn.y1 : fn.y2;
        }
        case FunctionName::Linear:
            return fn.direction.dot(x);
        case FunctionName::HartmannLog: {
            // x holds logarithms of (viscosity, density, pressure gradient,
            // resistivity, applied field); plate half-gap and permeability 1.
            const double visc = std::exp(x(0));
            const double dpdx = std::exp(x(2));
            const double eta = std::exp(x(3));
            const double b0 = std::exp(x(4));
            const double s = std::sqrt(eta * visc);
            return dpdx / (2.0 * b0) * (1.0 - 2.0 * s / b0 * std::tanh(b0 / (2.0 * s)));
        }
    }
    throw Error(errc::invalid_input, "unreachable function tag");
}

Dataset sample_inputs(const TestFunction& fn, int n, std::uint64_t seed) {
    if (n < 1) throw Error(errc::invalid_input, "need at least one sample");
    Rng rng(seed);
    Dataset data;
    data.X.resize(n, fn.m);
    data.y.resize(n);
    const VectorXd sd = fn.input_variance.cwiseSqrt();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < fn.m; ++j)
            data.X(i, j) = fn.input_mean(j) + sd(j) * rng.normal();
        data.y(i) = evaluate(fn, data.X.row(i).transpose());
    }
    return data;
}

OracleSubspace oracle_subspace(const TestFunction& fn) {
    switch (fn.name) {
        case FunctionName::Quad1d:
        case FunctionName::Linear:
            return {orthonormalize(fn.direction), "exact"};
        case FunctionName::Quad3d: {
            MatrixXd cols(fn.m, 3);
            cols << fn.quad_basis, fn.direction;
            return {orthonormalize(cols), "exact"};
        }
        case FunctionName::Product:
        case FunctionName::ShiftedProduct:
        case FunctionName::Bullseye:
            return {OrthonormalBasis(MatrixXd::Identity(2, 2)), "asserted"};
        case FunctionName::HartmannLog: {
            // The field depends on the log inputs only through
            // log(dpdx) - log(B0) and log(B0) - (log(eta) + log(visc)) / 2.
            MatrixXd cols(5, 2);
            cols.setZero();
            cols(2, 0) = 1.0;
            cols(4, 0) = -1.0;
            cols(0, 1) = -0.5;
            cols(3, 1) = -0.5;
            cols(4, 1) = 1.0;
            return {orthonormalize(cols), "exact"};
        }
    }
    return {std::nullopt, "none"};
}

}  // namespace ridgerec
