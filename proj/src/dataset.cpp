#include "ridgerec/dataset.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

namespace ridgerec {

namespace {

std::vector<std::string> split_csv_line(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

double parse_cell(const std::string& cell, int row, int col) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(cell.c_str(), &end);
    if (end == cell.c_str() || *end != '\0' || errno == ERANGE)
        throw Error(errc::parse_error, "non-numeric cell at row " + std::to_string(row) +
                                           ", column " + std::to_string(col + 1) + ": '" + cell + "'");
    return v;
}

}  // namespace

void Dataset::validate() const {
    if (n_samples() < 2) throw Error(errc::insufficient_samples, "need at least 2 samples");
    if (dim() < 1) throw Error(errc::invalid_input, "need at least 1 input dimension");
    if (y.size() != X.rows()) throw Error(errc::dimension_mismatch, "X rows and y length differ");
    if (!X.allFinite() || !y.allFinite())
        throw Error(errc::invalid_input, "dataset contains non-finite values");
}

Dataset read_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(errc::io_error, "cannot open file: " + path);

    std::string line;
    if (!std::getline(in, line)) throw Error(errc::parse_error, "empty file: " + path);
    const auto header = split_csv_line(line);
    const int ncols = static_cast<int>(header.size());
    if (ncols < 2 || header.back() != "y")
        throw Error(errc::parse_error, "header must be x1,...,xm,y (missing y column)");
    const int m = ncols - 1;
    for (int j = 0; j < m; ++j) {
        if (header[j] != "x" + std::to_string(j + 1))
            throw Error(errc::parse_error, "unexpected header column '" + header[j] + "'");
    }

    std::vector<std::vector<double>> rows;
    int row_no = 0;
    while (std::getline(in, line)) {
        ++row_no;
        if (line.empty() || (line.size() == 1 && line[0] == '\r')) continue;
        const auto cells = split_csv_line(line);
        if (static_cast<int>(cells.size()) != ncols)
            throw Error(errc::parse_error, "ragged row " + std::to_string(row_no) + ": expected " +
                                               std::to_string(ncols) + " fields, got " +
                                               std::to_string(cells.size()));
        std::vector<double> vals(ncols);
        for (int j = 0; j < ncols; ++j) vals[j] = parse_cell(cells[j], row_no, j);
        rows.push_back(std::move(vals));
    }

    Dataset data;
    const int n = static_cast<int>(rows.size());
    data.X.resize(n, m);
    data.y.resize(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) data.X(i, j) = rows[i][j];
        data.y(i) = rows[i][m];
    }
    data.validate();
    return data;
}

void write_dataset(const Dataset& data, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(errc::io_error, "cannot write file: " + path);
    const int m = data.dim();
    for (int j = 0; j < m; ++j) out << "x" << (j + 1) << ",";
    out << "y\n";
    char buf[64];
    for (int i = 0; i < data.n_samples(); ++i) {
        for (int j = 0; j < m; ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", data.X(i, j));
            out << buf << ",";
        }
        std::snprintf(buf, sizeof buf, "%.17g", data.y(i));
        out << buf << "\n";
    }
    if (!out) throw Error(errc::io_error, "write failed: " + path);
}

}  // namespace ridgerec
