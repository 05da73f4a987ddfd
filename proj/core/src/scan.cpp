#include "anharm/scan.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

#include "anharm/eigensolver.hpp"
#include "anharm/errors.hpp"
#include "anharm/hamiltonian.hpp"
#include "anharm/perturbation.hpp"
#include "anharm/wavefunction.hpp"

namespace anharm {

std::vector<double> make_grid(double p_min, double p_max, double p_step) {
    if (!(p_step > 0.0)) throw std::invalid_argument("make_grid: step must be positive");
    if (!(p_max >= p_min)) throw std::invalid_argument("make_grid: p_max < p_min");
    const int n = static_cast<int>(std::round((p_max - p_min) / p_step)) + 1;
    std::vector<double> grid(n);
    for (int j = 0; j < n; ++j) grid[j] = p_min + j * p_step;
    return grid;
}

FieldScan scan_field(const DoubleWellParams& well, const std::vector<double>& p_grid,
                     int n_basis, int levels, int threads) {
    if (p_grid.empty()) throw std::invalid_argument("scan_field: empty grid");
    if (levels < 1 || 4 * levels > n_basis)
        throw std::invalid_argument("scan_field: levels must satisfy 1 <= levels <= N/4");

    DoubleWellParams shape = well;
    shape.p = 0.0;
    const BasisSpec basis = make_basis(from_double_well(shape), n_basis);

    FieldScan scan;
    scan.p_values = p_grid;
    scan.levels = levels;
    scan.basis = basis;
    const int np = scan.points();
    scan.energies.assign(static_cast<size_t>(levels) * np, 0.0);
    scan.q_diag.assign(static_cast<size_t>(levels) * np, 0.0);

    auto worker = [&](int begin, int end, std::string* failure) {
        for (int j = begin; j < end; ++j) {
            DoubleWellParams w = well;
            w.p = p_grid[j];
            try {
                const SpectralResult res = eigh(assemble(from_double_well(w), basis), basis);
                const PositionMatrix q = position_matrix(res, levels);
                for (int n = 0; n < levels; ++n) {
                    scan.energies[n * np + j] = res.eigenvalues[n];
                    scan.q_diag[n * np + j] = q(n, n);
                }
            } catch (const std::exception& e) {
                *failure =
                    "scan_field failed at p = " + std::to_string(p_grid[j]) + ": " + e.what();
                return;
            }
        }
    };

    int nthreads = threads > 0 ? threads
                               : static_cast<int>(std::thread::hardware_concurrency());
    if (nthreads < 1) nthreads = 1;
    nthreads = std::min(nthreads, np);
    std::vector<std::string> failures(nthreads);
    if (nthreads == 1) {
        worker(0, np, &failures[0]);
    } else {
        std::vector<std::thread> pool;
        const int chunk = (np + nthreads - 1) / nthreads;
        for (int w = 0; w < nthreads; ++w)
            pool.emplace_back(worker, w * chunk, std::min(np, (w + 1) * chunk), &failures[w]);
        for (auto& th : pool) th.join();
    }
    for (const std::string& f : failures)
        if (!f.empty()) throw SolverError(f);
    return scan;
}

ConvergenceTable convergence_study(const DoubleWellParams& well,
                                   const std::vector<int>& n_list,
                                   const std::vector<double>& fit_window, int threads) {
    DoubleWellParams shape = well;
    shape.p = 0.0;
    ConvergenceTable table;
    for (int n : n_list) {
        const BasisSpec basis = make_basis(from_double_well(shape), n);
        const SpectralResult res = eigh(assemble(from_double_well(shape), basis), basis);
        const double c1 = second_order_c1(res);
        const FieldScan scan = scan_field(shape, fit_window, n, 1, threads);
        const double a = fit_response_a(scan, c1);
        table.push_back({n, basis.r0_squared(), res.eigenvalues[0], res.eigenvalues[1], c1, a});
    }
    return table;
}

double hellmann_feynman_check(const FieldScan& scan) {
    const int np = scan.points();
    if (np < 5) throw std::invalid_argument("hellmann_feynman_check: need >= 5 points");
    double worst = 0.0;
    for (int n = 0; n < scan.levels; ++n) {
        for (int j = 2; j + 2 < np; ++j) {
            // fourth-order stencil: on a 0.01 grid the tanh knee makes the
            // centered three-point slope error swamp the identity itself
            const double h = scan.p_values[j + 1] - scan.p_values[j];
            const double slope = (scan.energy(n, j - 2) - 8.0 * scan.energy(n, j - 1) +
                                  8.0 * scan.energy(n, j + 1) - scan.energy(n, j + 2)) /
                                 (12.0 * h);
            worst = std::max(worst, std::abs(slope + scan.qdiag(n, j)));
        }
    }
    return worst;
}

namespace {
std::string fmt12(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}
}  // namespace

void write_scan_csv(const FieldScan& scan, std::ostream& out) {
    out << "p";
    for (int n = 0; n < scan.levels; ++n) out << ",E" << n;
    for (int n = 0; n < scan.levels; ++n) out << ",Q" << n << n;
    out << "\n";
    for (int j = 0; j < scan.points(); ++j) {
        out << fmt12(scan.p_values[j]);
        for (int n = 0; n < scan.levels; ++n) out << ',' << fmt12(scan.energy(n, j));
        for (int n = 0; n < scan.levels; ++n) out << ',' << fmt12(scan.qdiag(n, j));
        out << "\n";
    }
}

FieldScan read_scan_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw AnalysisError("read_scan_csv: empty input");
    int columns = 1;
    for (char c : line)
        if (c == ',') ++columns;
    if (columns < 3 || columns % 2 == 0)
        throw AnalysisError("read_scan_csv: malformed header");
    const int levels = (columns - 1) / 2;

    FieldScan scan;
    scan.levels = levels;
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        if (static_cast<int>(row.size()) != columns)
            throw AnalysisError("read_scan_csv: row width mismatch");
        rows.push_back(std::move(row));
    }
    const int np = static_cast<int>(rows.size());
    scan.p_values.resize(np);
    scan.energies.assign(static_cast<size_t>(levels) * np, 0.0);
    scan.q_diag.assign(static_cast<size_t>(levels) * np, 0.0);
    for (int j = 0; j < np; ++j) {
        scan.p_values[j] = rows[j][0];
        for (int n = 0; n < levels; ++n) {
            scan.energies[n * np + j] = rows[j][1 + n];
            scan.q_diag[n * np + j] = rows[j][1 + levels + n];
        }
    }
    return scan;
}

}  // namespace anharm
