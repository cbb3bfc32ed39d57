// Command-line front end. Every module is exposed as a data subcommand that
// prints a small table (csv or json-lines), and `verify` runs the full
// closed-form-vs-oracle comparison suites.
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qcomb/digits.hpp"
#include "qcomb/dst.hpp"
#include "qcomb/euler_ramanujan.hpp"
#include "qcomb/fm_sketch.hpp"
#include "qcomb/level_seq.hpp"
#include "qcomb/morris.hpp"
#include "qcomb/numerics.hpp"
#include "qcomb/rational.hpp"
#include "qcomb/report.hpp"
#include "qcomb/strahler.hpp"
#include "qcomb/verify.hpp"

namespace {

using qcomb::Int;
using qcomb::Rat;
using qcomb::report::format_double;
using qcomb::report::Table;

std::string istr(long v) { return std::to_string(v); }

// Exact rationals print as "num/den" unless the user asked for decimals.
std::string rat_str(const Rat& r, int decimal_digits) {
    if (decimal_digits <= 0) return r.str();
    mpq_class q(r.str());
    q.canonicalize();
    mpf_class f(q, 64 + 4 * static_cast<unsigned>(decimal_digits));
    char buf[512];
    gmp_snprintf(buf, sizeof buf, "%.*Fg", decimal_digits, f.get_mpf_t());
    return buf;
}

void emit(const Table& t, const std::string& fmt) {
    if (fmt == "json")
        qcomb::report::write_json_lines(std::cout, t);
    else
        qcomb::report::write_csv(std::cout, t);
}

// One named scalar, e.g. `fm --mean --n 1` -> 0.5. csv mode prints the bare
// value so the number is directly consumable by shell pipelines.
void emit_scalar(const std::string& key, long n, const std::string& value,
                 const std::string& fmt) {
    if (fmt == "json") {
        Table t;
        t.columns = {"n", key};
        t.rows.push_back({istr(n), value});
        qcomb::report::write_json_lines(std::cout, t);
    } else {
        std::cout << value << "\n";
    }
}

int run_register(long n, int p, const std::string& fmt) {
    namespace st = qcomb::strahler;
    Table t;
    t.columns = {"p", "count"};
    if (p > 0) {
        t.rows.push_back({istr(p), st::count_register(n, p).get_str()});
    } else {
        for (int q = 1; q <= 64; ++q) {
            const Int c = st::count_register(n, q);
            if (c == 0) break;
            t.rows.push_back({istr(q), c.get_str()});
        }
    }
    emit(t, fmt);
    return 0;
}

int run_morris(long n, bool mean, long trials, std::uint64_t seed, int threads,
               int dec, const std::string& fmt) {
    namespace mo = qcomb::morris;
    if (mean) {
        emit_scalar("mean", n, rat_str(mo::mean_rice(n), dec), fmt);
        return 0;
    }
    const auto pmf = mo::pmf_dp(n);
    std::vector<std::uint64_t> hist;
    if (trials > 0) hist = mo::simulate(n, trials, seed, threads);
    Table t;
    t.columns = {"level", "prob"};
    if (trials > 0) t.columns.push_back("sim_freq");
    for (std::size_t l = 1; l < pmf.size(); ++l) {
        std::vector<std::string> row{istr(static_cast<long>(l)),
                                     rat_str(pmf[l], dec)};
        if (trials > 0) {
            const double f = l < hist.size()
                                 ? static_cast<double>(hist[l]) / trials
                                 : 0.0;
            row.push_back(format_double(f));
        }
        t.rows.push_back(std::move(row));
    }
    emit(t, fmt);
    return 0;
}

int run_fm(long n, bool mean, double tol, int dec, const std::string& fmt) {
    namespace fm = qcomb::fm;
    if (mean) {
        const double v = n <= 128 ? fm::mean_R_exact(n).to_double()
                                  : fm::mean_R(n, tol);
        emit_scalar("mean", n, format_double(v), fmt);
        return 0;
    }
    Table t;
    t.columns = {"k", "q"};
    const int kmax = 20;
    for (int k = 0; k <= kmax; ++k) {
        const Rat q = fm::q_exact_row(n, k)[n];
        t.rows.push_back({istr(k), rat_str(q, dec)});
        if (q.is_zero()) break;
    }
    emit(t, fmt);
    return 0;
}

int run_dst(long n, bool mean, long trials, std::uint64_t seed, int threads,
            int dec, const std::string& fmt) {
    namespace dst = qcomb::dst;
    if (mean) {
        emit_scalar("mean_endnodes", n, rat_str(dst::ell_recurrence(n), dec), fmt);
        return 0;
    }
    const auto poly = dst::endnode_poly(n);
    std::vector<std::uint64_t> hist;
    if (trials > 0) hist = dst::simulate_dst(n, trials, seed, threads);
    Table t;
    t.columns = {"endnodes", "prob"};
    if (trials > 0) t.columns.push_back("sim_freq");
    for (int k = 0; k <= poly.order(); ++k) {
        if (poly.coeff(k).is_zero()) continue;
        std::vector<std::string> row{istr(k), rat_str(poly.coeff(k), dec)};
        if (trials > 0) {
            const double f = static_cast<std::size_t>(k) < hist.size()
                                 ? static_cast<double>(hist[k]) / trials
                                 : 0.0;
            row.push_back(format_double(f));
        }
        t.rows.push_back(std::move(row));
    }
    emit(t, fmt);
    return 0;
}

int run_slices(long nmax, const std::string& fmt) {
    Table t;
    t.columns = {"n", "count"};
    for (long n = 1; n <= nmax; ++n)
        t.rows.push_back({istr(n), qcomb::levels::count_dp(n).get_str()});
    emit(t, fmt);
    return 0;
}

int run_sums(long n, long mmax, int dec, const std::string& fmt) {
    Table t;
    t.columns = {"m", "value"};
    for (long m = 1; m <= mmax; ++m)
        t.rows.push_back({istr(m), rat_str(qcomb::sums::alt_binom_sum(n, m), dec)});
    emit(t, fmt);
    return 0;
}

int run_ramanujan(long n, int dec, const std::string& fmt) {
    namespace ra = qcomb::ramanujan;
    const Rat q = ra::ramanujan_Q(n);
    const double r = ra::ramanujan_R(n, 1e-12);
    Table t;
    t.columns = {"n", "q", "r", "q_plus_r", "stirling"};
    t.rows.push_back({istr(n), rat_str(q, dec), format_double(r),
                      format_double(q.to_double() + r),
                      format_double(ra::q_plus_r_reference(n))});
    emit(t, fmt);
    return 0;
}

int run_digits(long nmax, const std::string& fmt) {
    namespace dg = qcomb::digits;
    Table t;
    t.columns = {"n", "v2", "s2", "theta", "gray", "s_gray"};
    for (long n = 1; n <= nmax; ++n) {
        const auto u = static_cast<std::uint64_t>(n);
        std::string gray;
        const auto bits = dg::gray_bits(u);
        for (auto it = bits.rbegin(); it != bits.rend(); ++it)
            gray += static_cast<char>('0' + *it);
        t.rows.push_back({istr(n), istr(dg::v2(u)), istr(dg::s2(u)),
                          istr(dg::theta_sign(u)), std::move(gray),
                          istr(dg::s_gray(u))});
    }
    emit(t, fmt);
    return 0;
}

int run_verify(const std::string& suite, std::uint64_t seed, double tol,
               int threads, const std::string& fmt) {
    qcomb::verify::Options opt;
    opt.seed = seed;
    opt.tol = tol;
    opt.threads = threads;
    std::vector<qcomb::verify::OracleReport> rows;
    try {
        rows = qcomb::verify::run_suite(suite, opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "qcomb verify: " << e.what() << "\n";
        return 2;
    }
    if (fmt == "json")
        qcomb::report::write_json_lines(std::cout, rows);
    else
        qcomb::report::write_csv(std::cout, rows);
    return qcomb::report::all_pass(rows) ? 0 : 1;
}

int env_threads() {
    const char* s = std::getenv("THREADS");
    if (!s) return 1;
    const long v = std::strtol(s, nullptr, 10);
    if (v < 1) return 1;
    return v > 256 ? 256 : static_cast<int>(v);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and certified-numeric checks for early analyses of "
                 "registers, approximate counters, digital trees, and digit sums"};
    app.require_subcommand(1);

    const int threads = env_threads();
    std::string fmt = "csv";
    int decimal = 0;
    std::uint64_t seed = 42;
    double tol = 1e-10;

    const auto add_common = [&](CLI::App* sub, bool with_decimal = true) {
        sub->add_option("--format", fmt, "output format")
            ->check(CLI::IsMember({"csv", "json"}));
        if (with_decimal)
            sub->add_option("--decimal", decimal,
                            "print rationals as decimals with this many digits")
                ->check(CLI::Range(1, 60));
    };

    long reg_n = 8;
    int reg_p = 0;
    auto* reg = app.add_subcommand(
        "register", "census of binary trees by register function value");
    reg->add_option("--n", reg_n, "internal node count")->check(CLI::Range(1L, 5000L));
    reg->add_option("--p", reg_p, "single register value (default: all)")
        ->check(CLI::Range(1, 64));
    add_common(reg, false);

    long mo_n = 8, mo_trials = 0;
    bool mo_mean = false;
    auto* mo = app.add_subcommand(
        "morris", "level distribution of the base-2 approximate counter");
    mo->add_option("--n", mo_n, "number of counted events")->check(CLI::Range(1L, 512L));
    mo->add_flag("--mean", mo_mean, "print the exact mean level only");
    mo->add_option("--trials", mo_trials, "Monte Carlo trials for a sim_freq column")
        ->check(CLI::Range(0L, 100000000L));
    mo->add_option("--seed", seed, "simulation seed");
    add_common(mo);

    long fm_n = 8;
    bool fm_mean = false;
    auto* fms = app.add_subcommand(
        "fm", "occupancy probabilities of the probabilistic-counting sketch");
    fms->add_option("--n", fm_n, "number of distinct elements")->check(CLI::Range(1L, 4096L));
    fms->add_flag("--mean", fm_mean, "print the expected leftmost-zero index only");
    fms->add_option("--tol", tol, "tolerance for large-n numeric mean");
    add_common(fms);

    long dst_n = 8, dst_trials = 0;
    bool dst_mean = false;
    auto* ds = app.add_subcommand(
        "dst", "endnode distribution of random digital search trees");
    ds->add_option("--n", dst_n, "keys inserted")->check(CLI::Range(0L, 64L));
    ds->add_flag("--mean", dst_mean, "print the exact mean endnode count only");
    ds->add_option("--trials", dst_trials, "Monte Carlo trials for a sim_freq column")
        ->check(CLI::Range(0L, 100000000L));
    ds->add_option("--seed", seed, "simulation seed");
    add_common(ds);

    long sl_n = 20;
    auto* sl = app.add_subcommand(
        "slices", "counts of admissible level sequences of each length");
    sl->add_option("--n", sl_n, "largest length to tabulate")->check(CLI::Range(1L, 200L));
    add_common(sl, false);

    long su_n = 10, su_m = 5;
    auto* su = app.add_subcommand(
        "sums", "alternating binomial sums 1/k^m and their harmonic closed forms");
    su->add_option("--n", su_n, "upper summation index")->check(CLI::Range(1L, 500L));
    su->add_option("--m", su_m, "largest power m to tabulate")->check(CLI::Range(1L, 8L));
    add_common(su);

    long ra_n = 10;
    auto* ra = app.add_subcommand(
        "ramanujan", "Q and R splitting of n! e^n / n^n");
    ra->add_option("--n", ra_n, "argument n")->check(CLI::Range(1L, 10000L));
    add_common(ra);

    long dg_n = 32;
    auto* dg = app.add_subcommand(
        "digits", "binary digit statistics and the Gray code expansion");
    dg->add_option("--n", dg_n, "largest n to tabulate")->check(CLI::Range(1L, 1000000L));
    add_common(dg, false);

    std::string suite = "all";
    double vtol = 1e-10;
    auto* ve = app.add_subcommand(
        "verify", "run closed-form-vs-oracle comparison suites");
    ve->add_option("--suite", suite, "suite to run")
        ->check(CLI::IsMember({"register", "counter", "fm", "dst", "slices",
                               "sums", "digits", "all"}));
    ve->add_option("--seed", seed, "simulation seed");
    ve->add_option("--tol", vtol, "tolerance for dual-route numeric comparisons");
    add_common(ve, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (reg->parsed()) return run_register(reg_n, reg_p, fmt);
        if (mo->parsed())
            return run_morris(mo_n, mo_mean, mo_trials, seed, threads, decimal, fmt);
        if (fms->parsed()) return run_fm(fm_n, fm_mean, tol, decimal, fmt);
        if (ds->parsed())
            return run_dst(dst_n, dst_mean, dst_trials, seed, threads, decimal, fmt);
        if (sl->parsed()) return run_slices(sl_n, fmt);
        if (su->parsed()) return run_sums(su_n, su_m, decimal, fmt);
        if (ra->parsed()) return run_ramanujan(ra_n, decimal, fmt);
        if (dg->parsed()) return run_digits(dg_n, fmt);
        if (ve->parsed()) return run_verify(suite, seed, vtol, threads, fmt);
    } catch (const std::exception& e) {
        std::cerr << "qcomb: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
