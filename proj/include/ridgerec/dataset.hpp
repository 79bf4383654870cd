#pragma once

#include <string>

#include "ridgerec/linalg.hpp"

namespace ridgerec {

// Predictor table plus response vector; the sole input artifact.
struct Dataset {
    MatrixXd X;  // N x m, rows are inputs
    VectorXd y;  // length N

    int n_samples() const { return static_cast<int>(X.rows()); }
    int dim() const { return static_cast<int>(X.cols()); }

    void validate() const;
};

// CSV with header x1,...,xm,y; one sample per row; LF or CRLF.
Dataset read_dataset(const std::string& path);
void write_dataset(const Dataset& data, const std::string& path);

}  // namespace ridgerec
