#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcomb/report.hpp"

namespace qcomb::verify {

using report::OracleReport;

struct Options {
    std::uint64_t seed = 42;
    int threads = 1;
    double tol = 1e-10;  // tolerance fed to the paired numeric routes
};

// Shared exact-arithmetic scaffolding: q-Pochhammer recurrence, series
// round trips, Pascal's rule, harmonic telescoping.
std::vector<OracleReport> suite_core(const Options& opt);

std::vector<OracleReport> suite_register(const Options& opt);
std::vector<OracleReport> suite_counter(const Options& opt);
std::vector<OracleReport> suite_fm(const Options& opt);
std::vector<OracleReport> suite_dst(const Options& opt);
std::vector<OracleReport> suite_slices(const Options& opt);
std::vector<OracleReport> suite_sums(const Options& opt);
std::vector<OracleReport> suite_digits(const Options& opt);

// name in {register, counter, fm, dst, slices, sums, digits, all}; "all"
// prepends the core scaffolding rows. Unknown names throw invalid_argument.
std::vector<OracleReport> run_suite(const std::string& name, const Options& opt);

}  // namespace qcomb::verify
