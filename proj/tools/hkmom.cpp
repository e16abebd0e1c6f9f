#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hkmom/class_walk.hpp"
#include "hkmom/coverings.hpp"
#include "hkmom/expansion.hpp"
#include "hkmom/free_prob.hpp"
#include "hkmom/mc_sim.hpp"
#include "hkmom/noncross.hpp"
#include "hkmom/sym_char.hpp"
#include "hkmom/tensor_rep.hpp"

using json = nlohmann::ordered_json;
using namespace hkmom;

namespace {

constexpr const char* kVersion = "hkmom 0.1.0";

struct Output {
    std::string format = "json";
    std::string path;
    bool stamp = false;
    json manifest;
};

void add_output_flags(CLI::App* cmd, Output& out) {
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--output", out.path, "Write the result to this file instead of stdout");
    cmd->add_flag("--stamp", out.stamp,
                  "Embed a wall-clock timestamp in the manifest (off keeps runs byte-identical)");
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_text(const Output& out, const std::string& text) {
    if (out.path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream file(out.path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + out.path);
    file << text;
    if (!text.empty() && text.back() != '\n') file << '\n';
}

void emit(const Output& out, json payload, const std::string& csv_body = "") {
    if (out.format == "csv" && !csv_body.empty()) {
        std::string text = "# " + out.manifest.dump() + "\n" + csv_body;
        write_text(out, text);
        return;
    }
    payload["manifest"] = out.manifest;
    write_text(out, payload.dump(2));
}

struct Commands {
    Output out;
    std::string class_str = "1";
    std::string blocks_str;
    std::string word_str;
    std::string group_str = "u";
    std::string type_str;
    long n = 3, p = 0, kmax = 8, k = -1, d = -1, dmax = 12;
    long steps = 1000, samples = 10000;
    double t = 1.0, n_real = 2.0, tol = 1e-10;
    long n_int = 2;
    std::uint64_t seed = 0;
    bool su = false, raw_time = false, list = false, with_mc = false;
    std::string samples_csv;
    int exit_code = 0;
};

void run_s_table(Commands& c) {
    CycleType type = CycleType::parse(c.class_str);
    if (type.n() != c.n) throw std::invalid_argument("--class must sum to --n");
    auto table = class_walk::path_count_table(type, c.kmax);
    json entries = json::array();
    for (long kk = 0; kk < static_cast<long>(table.s.size()); ++kk)
        for (long dd = 0; dd < static_cast<long>(table.s[kk].size()); ++dd)
            if (table.s[kk][dd] != 0)
                entries.push_back({{"k", kk}, {"d", dd}, {"S", table.s[kk][dd].get_str()}});
    json payload;
    payload["n"] = c.n;
    payload["class"] = type.to_string();
    payload["k_max"] = c.kmax;
    payload["entries"] = entries;
    emit(c.out, payload, table.to_csv());
}

void run_s_closed(Commands& c) {
    json payload;
    payload["n"] = c.n;
    std::ostringstream csv;
    csv << "k,d,S\n";
    if (c.k >= 0 && c.d >= 0) {
        Integer v = sym_char::s_ncycle_closed(c.n, c.k, c.d);
        payload["k"] = c.k;
        payload["d"] = c.d;
        payload["S"] = v.get_str();
        csv << c.k << ',' << c.d << ',' << v.get_str() << '\n';
    } else {
        json entries = json::array();
        for (long kk = 0; kk <= c.kmax; ++kk)
            for (long dd = 0; dd <= kk; ++dd) {
                Integer v = sym_char::s_ncycle_closed(c.n, kk, dd);
                if (v == 0) continue;
                entries.push_back({{"k", kk}, {"d", dd}, {"S", v.get_str()}});
                csv << kk << ',' << dd << ',' << v.get_str() << '\n';
            }
        payload["k_max"] = c.kmax;
        payload["entries"] = entries;
    }
    emit(c.out, payload, csv.str());
}

void run_cnp(Commands& c) {
    Integer v = sym_char::c_np(c.n, c.p);
    json payload;
    payload["n"] = c.n;
    payload["p"] = c.p;
    payload["c_np"] = v.get_str();
    emit(c.out, payload,
         "n,p,c\n" + std::to_string(c.n) + "," + std::to_string(c.p) + "," + v.get_str() + "\n");
}

void run_expand(Commands& c) {
    CycleType type = CycleType::parse(c.class_str);
    auto group = c.su ? expansion::Group::SU : expansion::Group::U;
    auto poly = expansion::moment_expansion(type, group, c.dmax);
    json payload;
    payload["n"] = poly.n();
    payload["cycle_type"] = type.to_string();
    payload["group"] = c.su ? "SU" : "U";
    payload["prefactor"] = c.su ? "exp(-n*t/2 + n^2*t/(2*N^2))" : "exp(-n*t/2)";
    payload["series"] = "prefactor * sum_{d<=d_max} N^(-2d) * sum_k (-1)^k t^k S[d][k] / k!";
    payload["d_max"] = c.dmax;
    json slices = json::array();
    std::ostringstream csv;
    csv << "d,k,S\n";
    for (long dd = 0; dd <= poly.d_max; ++dd) {
        json slice;
        slice["d"] = dd;
        json terms = json::array();
        for (long kk = 0; kk < static_cast<long>(poly.slices[dd].size()); ++kk) {
            if (poly.slices[dd][kk] == 0) continue;
            terms.push_back({{"k", kk}, {"S", poly.slices[dd][kk].get_str()}});
            csv << dd << ',' << kk << ',' << poly.slices[dd][kk].get_str() << '\n';
        }
        slice["terms"] = terms;
        slices.push_back(slice);
    }
    payload["slices"] = slices;
    emit(c.out, payload, csv.str());
}

void run_eval(Commands& c) {
    CycleType type = CycleType::parse(c.class_str);
    auto group = c.su ? expansion::Group::SU : expansion::Group::U;
    auto poly = expansion::moment_expansion(type, group, c.dmax);
    auto r = expansion::evaluate(poly, rational_of(c.n_real), rational_of(c.t));
    if (r.tail_bound > c.tol)
        throw std::runtime_error("eval: tail bound " + format_double(r.tail_bound) +
                                 " exceeds --tol; raise --dmax");
    json payload;
    payload["cycle_type"] = type.to_string();
    payload["group"] = c.su ? "SU" : "U";
    payload["N"] = c.n_real;
    payload["t"] = c.t;
    payload["d_max"] = c.dmax;
    payload["value"] = r.value;
    payload["tail_bound"] = r.tail_bound;
    if (c.n_real != std::floor(c.n_real))
        payload["real_N_extrapolation"] = true;  // the series is only proved at integer N
    emit(c.out, payload,
         "value,tail_bound\n" + format_double(r.value) + "," + format_double(r.tail_bound) + "\n");
}

void run_fourier(Commands& c) {
    CycleType type = CycleType::parse(c.class_str);
    double v = expansion::fourier_moment(type, c.n_int, c.t);
    json payload;
    payload["cycle_type"] = type.to_string();
    payload["N"] = c.n_int;
    payload["t"] = c.t;
    payload["value"] = v;
    emit(c.out, payload, "value\n" + format_double(v) + "\n");
}

void run_nc(Commands& c) {
    json payload;
    payload["n"] = c.n;
    std::ostringstream csv;
    if (!c.type_str.empty()) {
        std::vector<int> type;
        std::istringstream in(c.type_str);
        std::string item;
        while (std::getline(in, item, ',')) type.push_back(std::stoi(item));
        type.resize(c.n, 0);
        Integer v = noncross::count_by_type(static_cast<int>(c.n), type);
        payload["type"] = c.type_str;
        payload["count"] = v.get_str();
        csv << "count\n" << v.get_str() << "\n";
    } else {
        auto all = noncross::enumerate_nc(static_cast<int>(c.n));
        payload["count"] = all.size();
        csv << "partition\n";
        if (c.list) {
            json items = json::array();
            for (const auto& q : all) {
                items.push_back(q.to_string());
                csv << q.to_string() << "\n";
            }
            payload["partitions"] = items;
        }
    }
    emit(c.out, payload, csv.str());
}

void run_kreweras(Commands& c) {
    auto p = noncross::NCPartition::parse(static_cast<int>(c.n), c.blocks_str);
    auto k = noncross::kreweras(p);
    json payload;
    payload["n"] = c.n;
    payload["blocks"] = p.to_string();
    payload["complement"] = k.to_string();
    emit(c.out, payload, "complement\n" + k.to_string() + "\n");
}

void run_moments(Commands& c) {
    double v = free_prob::limit_moment(c.n, c.t);
    json payload;
    payload["n"] = c.n;
    payload["t"] = c.t;
    payload["moment"] = v;
    emit(c.out, payload, "moment\n" + format_double(v) + "\n");
}

void run_cumulants(Commands& c) {
    double v = free_prob::free_cumulant(c.n, c.t);
    json payload;
    payload["n"] = c.n;
    payload["t"] = c.t;
    payload["cumulant"] = v;
    emit(c.out, payload, "cumulant\n" + format_double(v) + "\n");
}

void run_word(Commands& c) {
    auto w = free_prob::Word::parse(c.word_str);
    double v = free_prob::word_moment(w);
    json payload;
    payload["word"] = c.word_str;
    payload["length"] = w.size();
    payload["moment"] = v;
    emit(c.out, payload, "moment\n" + format_double(v) + "\n");
}

void run_verify_casimir(Commands& c) {
    tensor_rep::GroupKind g = tensor_rep::GroupKind::U;
    if (c.group_str == "so") g = tensor_rep::GroupKind::SO;
    if (c.group_str == "sp") g = tensor_rep::GroupKind::Sp;
    auto report =
        tensor_rep::casimir_identity_check(g, static_cast<int>(c.n), static_cast<int>(c.n_int));
    json payload;
    payload["group"] = c.group_str;
    payload["n"] = c.n;
    payload["N"] = c.n_int;
    payload["ok"] = report.ok;
    payload["max_deviation"] = report.max_deviation;
    if (!report.detail.empty()) payload["detail"] = report.detail;
    emit(c.out, payload, std::string("ok\n") + (report.ok ? "1" : "0") + "\n");
    if (!report.ok) c.exit_code = 1;
}

void run_simulate(Commands& c) {
    CycleType type = CycleType::parse(c.class_str);
    mc_sim::SimConfig cfg;
    cfg.N = static_cast<int>(c.n_int);
    cfg.t = c.t;
    cfg.raw_time = c.raw_time;
    cfg.steps = c.steps;
    cfg.samples = c.samples;
    cfg.seed = c.seed;
    json payload;
    payload["cycle_type"] = type.to_string();
    payload["N"] = cfg.N;
    payload["t"] = cfg.t;
    payload["raw_time"] = cfg.raw_time;
    payload["steps"] = cfg.steps;
    payload["seed"] = cfg.seed;
    double mean = 0, stderr_v = 0;
    long count = cfg.samples;
    if (!c.samples_csv.empty()) {
        auto values = mc_sim::moment_samples(type, cfg);
        std::ostringstream csv;
        csv << "# " << c.out.manifest.dump() << "\nsample,value\n";
        for (std::size_t i = 0; i < values.size(); ++i) {
            csv << i << ',' << format_double(values[i]) << '\n';
            mean += values[i];
        }
        mean /= values.size();
        double var = 0;
        for (double v : values) var += (v - mean) * (v - mean);
        var = values.size() > 1 ? var / (values.size() - 1) : 0;
        stderr_v = std::sqrt(var / values.size());
        std::ofstream file(c.samples_csv, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open " + c.samples_csv);
        file << csv.str();
        payload["samples_csv"] = c.samples_csv;
    } else {
        auto r = mc_sim::estimate_moment(type, cfg);
        mean = r.mean;
        stderr_v = r.stderr_;
        count = r.samples;
    }
    payload["mean"] = mean;
    payload["stderr"] = stderr_v;
    payload["samples"] = count;
    emit(c.out, payload,
         "mean,stderr,samples\n" + format_double(mean) + "," + format_double(stderr_v) + "," +
             std::to_string(count) + "\n");
}

void run_cover(Commands& c) {
    CycleType lambda = CycleType::parse(c.class_str);
    if (lambda.n() != c.n) throw std::invalid_argument("--lambda must sum to --n");
    auto r = coverings::genus_estimator(static_cast<int>(c.n), lambda, static_cast<int>(c.n_int),
                                        c.t, c.samples, c.seed);
    json payload;
    payload["n"] = c.n;
    payload["lambda"] = lambda.to_string();
    payload["N"] = c.n_int;
    payload["t"] = c.t;
    payload["seed"] = c.seed;
    payload["estimate"] = r.estimate;
    payload["stderr"] = r.stderr_;
    payload["exact"] = r.exact;
    payload["sigmas_away"] = r.sigmas_away;
    payload["samples"] = r.samples;
    emit(c.out, payload,
         "estimate,stderr,exact,sigmas_away\n" + format_double(r.estimate) + "," +
             format_double(r.stderr_) + "," + format_double(r.exact) + "," +
             format_double(r.sigmas_away) + "\n");
}

// verify-all: every cross-oracle and identity suite at desk budgets.
struct Verifier {
    json results = json::array();
    bool all_ok = true;

    void check(const std::string& name, bool ok, const std::string& note = "") {
        json r;
        r["check"] = name;
        r["ok"] = ok;
        if (!note.empty()) r["note"] = note;
        results.push_back(r);
        all_ok = all_ok && ok;
        std::fprintf(stderr, "[%s] %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
                     note.empty() ? "" : " - ", note.c_str());
    }
};

void run_verify_all(Commands& c) {
    Verifier v;

    {  // oracle equivalence across the exact engines
        bool ok = true;
        for (int n = 2; n <= 4 && ok; ++n)
            for (const auto& lam : partitions_of(n))
                for (long kk = 0; kk <= 5 && ok; ++kk) {
                    auto brute =
                        class_walk::brute_force_S_all(Permutation::class_representative(lam), kk);
                    auto poly = sym_char::char_sum_S(lam, kk);
                    for (long dd = 0; dd <= kk; ++dd) {
                        Integer want = class_walk::count_S(lam, kk, dd);
                        if (brute[dd] != want ||
                            poly.coeff(static_cast<int>(-2 * dd)) != Rational(want))
                            ok = false;
                    }
                }
        for (long n = 2; n <= 6 && ok; ++n)
            for (long kk = 0; kk <= 7 && ok; ++kk)
                for (long dd = 0; dd <= kk; ++dd)
                    if (sym_char::s_ncycle_closed(n, kk, dd) !=
                        class_walk::count_S(CycleType::single(static_cast<int>(n)), kk, dd))
                        ok = false;
        v.check("triple-oracle path counts", ok);
    }

    {  // structural identities of the class walk
        bool ok = true;
        for (int n = 1; n <= 6; ++n) {
            const auto& tm = class_walk::transition_counts(n);
            for (int i = 0; i < tm.num_classes(); ++i) {
                long row = 0;
                for (int j = 0; j < tm.num_classes(); ++j) row += tm.count(i, j);
                if (row != n * (n - 1) / 2) ok = false;
            }
            for (const auto& lam : partitions_of(n))
                for (long kk = 0; kk <= 4; ++kk) {
                    Integer mass = 0;
                    for (long dd = 0; dd <= kk; ++dd) mass += class_walk::count_S(lam, kk, dd);
                    if (mass != ipow(Integer(n * (n - 1) / 2), kk)) ok = false;
                }
        }
        const auto& tm = class_walk::transition_counts(4);
        ok = ok && tm.count(Partition({1, 1, 1, 1}), Partition({2, 1, 1})) == 6 &&
             tm.count(Partition({2, 1, 1}), Partition({1, 1, 1, 1})) == 1 &&
             tm.count(Partition({2, 1, 1}), Partition({3, 1})) == 4 &&
             tm.count(Partition({2, 1, 1}), Partition({2, 2})) == 1 &&
             tm.count(Partition({4}), Partition({2, 2})) == 2;
        v.check("class-walk structure", ok);
    }

    {
        bool ok = true;
        for (int n = 1; n <= 5; ++n) ok = ok && sym_char::jm_identity_check(n);
        v.check("Jucys-Murphy identity", ok);
        ok = class_walk::transfer_inverse_check(3, Rational(1), Rational(1)) < 1e-12 &&
             class_walk::transfer_inverse_check(3, ratio(1, 2), Rational(3)) < 1e-12;
        v.check("transfer matrices invert", ok);
    }

    {  // closed-form tables
        bool ok = true;
        for (long n = 1; n <= 7; ++n)
            ok = ok && sym_char::c_np(n, n - 1) == ipow(Integer(n), std::max<long>(n - 2, 0));
        for (long n = 2; n <= 5; ++n)
            ok = ok &&
                 sym_char::c_np(n, n + 1) == (Integer(n) * n - 1) * ipow(Integer(n), n + 1) / 24;
        for (long n = 2; n <= 7; ++n)
            for (long kk = 0; kk <= n; ++kk)
                ok = ok && noncross::s_cycle_zero_defect(n, kk) ==
                               class_walk::count_S(CycleType::single(static_cast<int>(n)), kk, 0);
        v.check("closed-form tables", ok);
    }

    {  // Casimir identities, exact
        using tensor_rep::GroupKind;
        bool ok = tensor_rep::casimir_identity_check(GroupKind::U, 2, 2).ok &&
                  tensor_rep::casimir_identity_check(GroupKind::U, 2, 3).ok &&
                  tensor_rep::casimir_identity_check(GroupKind::U, 3, 2).ok &&
                  tensor_rep::casimir_identity_check(GroupKind::SO, 2, 3).ok &&
                  tensor_rep::casimir_identity_check(GroupKind::Sp, 2, 1).ok &&
                  tensor_rep::casimir_identity_check(GroupKind::Sp, 2, 2).ok &&
                  tensor_rep::su_shift_check(2, 2) && tensor_rep::su_shift_check(2, 3);
        v.check("Casimir matrix identities", ok);
    }

    {  // Fourier oracle vs expansion
        bool ok = true;
        for (int n = 1; n <= 4; ++n)
            for (const auto& lam : partitions_of(n))
                for (long N = 1; N <= 3; ++N)
                    for (double t : {0.25, 1.0}) {
                        auto poly = expansion::moment_expansion(lam, expansion::Group::U, 36);
                        double a =
                            expansion::evaluate_strict(poly, Rational(N), rational_of(t), 1e-11);
                        double b = expansion::fourier_moment(lam, N, t);
                        if (std::abs(a - b) >= 1e-10) ok = false;
                    }
        v.check("Fourier oracle agreement", ok);
    }

    {  // factorization and variance
        bool ok = true;
        for (int n = 2; n <= 5; ++n)
            for (const auto& lam : partitions_of(n))
                if (lam.length() >= 2)
                    for (long kk = 0; kk <= n; ++kk)
                        if (expansion::shuffle_factorize(lam, kk) !=
                            class_walk::count_S(lam, kk, 0))
                            ok = false;
        for (int n = 1; n <= 3; ++n)
            for (const auto& lam : partitions_of(n)) {
                auto tab = expansion::variance_expansion(lam, 2);
                for (const auto& val : tab.v[0])
                    if (val != 0) ok = false;
            }
        v.check("factorization and variance order", ok);
    }

    {  // free probability
        bool ok = true;
        for (long n = 1; n <= 10; ++n)
            for (double t : {0.1, 1.0})
                if (std::abs(free_prob::limit_moment(n, t) -
                             free_prob::moment_from_cumulants(n, t)) >= 1e-12)
                    ok = false;
        for (int n = 1; n <= 8; ++n) {
            auto poly = expansion::moment_expansion(CycleType::single(n), expansion::Group::U, 0)
                            .slice_poly(0);
            auto want = free_prob::limit_moment_poly(n);
            for (std::size_t kk = 0; kk < want.size(); ++kk)
                if ((kk < poly.size() ? poly[kk] : Rational(0)) != want[kk]) ok = false;
        }
        for (const char* text : {"a(0.5) b(1.0)", "a(0.5) b(1.0) a(0.5) b(1.0)"})
            if (std::abs(free_prob::mixed_cumulant(free_prob::Word::parse(text))) >= 1e-10)
                ok = false;
        ok = ok && std::abs(free_prob::chi_residual(0.0, {0.05, 0.0})) < 1e-8 &&
             std::abs(free_prob::chi_residual(1.0, {0.05, 0.0})) < 1e-8;
        v.check("free probability", ok);
    }

    {  // non-crossing suite
        bool ok = noncross::enumerate_nc(10).size() == 16796;
        auto p = noncross::NCPartition::parse(12, "{1,3,12}{2}{4,8,9}{5,6,7}{10,11}");
        ok = ok && noncross::kreweras(p) ==
                       noncross::NCPartition::parse(12, "{1,2}{3,9,11}{4,7}{5}{6}{8}{10}{12}");
        for (int n = 2; n <= 7 && ok; ++n) {
            std::vector<Integer> by_rank(n, 0);
            for (const auto& q : noncross::enumerate_nc(n))
                by_rank[q.rank()] += noncross::count_increasing_paths(q);
            for (long kk = 0; kk <= n - 1; ++kk)
                if (by_rank[kk] != noncross::s_cycle_zero_defect(n, kk)) ok = false;
        }
        v.check("non-crossing lattice suite", ok);
    }

    {  // genus expansion, analytic side
        bool ok = true;
        for (int n = 1; n <= 3; ++n)
            for (const auto& lam : partitions_of(n))
                for (int N = 1; N <= 2; ++N)
                    for (double t : {0.25, 1.0}) {
                        double a = coverings::analytic_genus_expectation(n, lam, Rational(N),
                                                                         rational_of(t));
                        double b = coverings::genus_target(n, lam, N, t);
                        if (std::abs(a - b) >= 1e-10) ok = false;
                    }
        v.check("genus expansion Poissonization", ok);
    }

    if (c.with_mc) {
        mc_sim::SimConfig cfg;
        cfg.N = 4;
        cfg.t = 1.0;
        cfg.steps = 200;
        cfg.samples = 4000;
        cfg.seed = c.seed;
        auto m = mc_sim::estimate_moment(CycleType::single(1), cfg);
        v.check("Monte-Carlo moment (5 sigma)", std::abs(m.mean - std::exp(-0.5)) < 5 * m.stderr_);
        auto mg =
            mc_sim::martingale_check(Permutation::identity(2), 2, 0.3, 10000, 150, c.seed + 1);
        v.check("Monte-Carlo martingale (5 sigma)", mg.sigmas_away < 5);
        auto g = coverings::genus_estimator(3, CycleType::single(3), 2, 0.5, 200000, c.seed + 2);
        v.check("Monte-Carlo genus estimator (5 sigma)", g.sigmas_away < 5);
    }

    json payload;
    payload["ok"] = v.all_ok;
    payload["checks"] = v.results;
    emit(c.out, payload);
    if (!v.all_ok) c.exit_code = 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact and Monte-Carlo moments of unitary Brownian motion via the symmetric group"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    Commands c;

    auto manifest_for = [&](const char* name) {
        json m;
        m["tool"] = kVersion;
        m["subcommand"] = name;
        json flags = json::array();
        for (int i = 0; i < argc; ++i) flags.push_back(argv[i]);
        m["argv"] = flags;
        m["seed"] = c.seed;
        if (c.out.stamp) {
            auto now = std::chrono::system_clock::now().time_since_epoch();
            m["timestamp_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(now).count();
        }
        return m;
    };
    auto wrap = [&](const char* name, void (*fn)(Commands&)) {
        return [&c, name, fn, manifest_for] {
            c.out.manifest = manifest_for(name);
            fn(c);
        };
    };

    auto* s_table = app.add_subcommand("s-table", "Path-count table S(sigma,k,d) for one class");
    s_table->add_option("--n", c.n, "Degree")->required();
    s_table->add_option("--class", c.class_str, "Cycle type, e.g. 1,1,1")->required();
    s_table->add_option("--kmax", c.kmax, "Largest path length")->capture_default_str();
    add_output_flags(s_table, c.out);
    s_table->callback(wrap("s-table", run_s_table));

    auto* s_closed = app.add_subcommand("s-closed", "Closed-form S((1..n),k,d)");
    s_closed->add_option("--n", c.n)->required();
    s_closed->add_option("--k", c.k);
    s_closed->add_option("--d", c.d);
    s_closed->add_option("--kmax", c.kmax)->capture_default_str();
    add_output_flags(s_closed, c.out);
    s_closed->callback(wrap("s-closed", run_s_closed));

    auto* cnp = app.add_subcommand("cnp", "Factorizations of the n-cycle into p transpositions");
    cnp->add_option("--n", c.n)->required();
    cnp->add_option("--p", c.p)->required();
    add_output_flags(cnp, c.out);
    cnp->callback(wrap("cnp", run_cnp));

    auto* expand =
        app.add_subcommand("expand", "Exact (d,k) coefficient table of the moment series");
    expand->add_option("--cycle-type", c.class_str)->required();
    expand->add_option("--dmax", c.dmax)->capture_default_str();
    expand->add_flag("--su", c.su, "Special unitary prefactor");
    add_output_flags(expand, c.out);
    expand->callback(wrap("expand", run_expand));

    auto* eval = app.add_subcommand("eval", "Evaluate the moment series at (N, t)");
    eval->add_option("--cycle-type", c.class_str)->required();
    eval->add_option("--N", c.n_real, "Matrix size (real values are extrapolation)")->required();
    eval->add_option("--t", c.t)->required();
    eval->add_option("--dmax", c.dmax)->capture_default_str();
    eval->add_option("--tol", c.tol, "Required tail bound")->capture_default_str();
    eval->add_flag("--su", c.su);
    add_output_flags(eval, c.out);
    eval->callback(wrap("eval", run_eval));

    auto* fourier = app.add_subcommand("fourier", "Character-sum oracle for the same moment");
    fourier->add_option("--cycle-type", c.class_str)->required();
    fourier->add_option("--N", c.n_int, "Matrix size (integer)")->required();
    fourier->add_option("--t", c.t)->required();
    add_output_flags(fourier, c.out);
    fourier->callback(wrap("fourier", run_fourier));

    auto* nc = app.add_subcommand("nc", "Non-crossing partitions: count, list, or count by type");
    nc->add_option("--n", c.n)->required();
    nc->add_flag("--list", c.list, "List all partitions");
    nc->add_option("--type", c.type_str, "Type vector s1,s2,...");
    add_output_flags(nc, c.out);
    nc->callback(wrap("nc", run_nc));

    auto* krew = app.add_subcommand("kreweras", "Kreweras complement of a non-crossing partition");
    krew->add_option("--n", c.n)->required();
    krew->add_option("--blocks", c.blocks_str, "Block notation, e.g. {1,3}{2}")->required();
    add_output_flags(krew, c.out);
    krew->callback(wrap("kreweras", run_kreweras));

    auto* moments = app.add_subcommand("moments", "Large-N limit moment of u_t");
    moments->add_option("--n", c.n)->required();
    moments->add_option("--t", c.t)->required();
    add_output_flags(moments, c.out);
    moments->callback(wrap("moments", run_moments));

    auto* cumulants = app.add_subcommand("cumulants", "Free cumulant k_n of u_t");
    cumulants->add_option("--n", c.n)->required();
    cumulants->add_option("--t", c.t)->required();
    add_output_flags(cumulants, c.out);
    cumulants->callback(wrap("cumulants", run_cumulants));

    auto* word = app.add_subcommand("word", "Limit moment of a word in independent variables");
    word->add_option("--word", c.word_str, "e.g. \"a(0.5) b(1.0) a(0.5) b(1.0)\"")->required();
    add_output_flags(word, c.out);
    word->callback(wrap("word", run_word));

    auto* vc = app.add_subcommand("verify-casimir", "Exact Laplacian/walk operator identity");
    vc->add_option("--group", c.group_str, "u, so, or sp")
        ->check(CLI::IsMember({"u", "so", "sp"}))
        ->required();
    vc->add_option("--n", c.n)->required();
    vc->add_option("--N", c.n_int)->required();
    add_output_flags(vc, c.out);
    vc->callback(wrap("verify-casimir", run_verify_casimir));

    auto* sim = app.add_subcommand("simulate", "Monte-Carlo Brownian motion moment estimate");
    sim->add_option("--cycle-type", c.class_str)->required();
    sim->add_option("--N", c.n_int)->required();
    sim->add_option("--t", c.t)->required();
    sim->add_option("--steps", c.steps)->capture_default_str();
    sim->add_option("--samples", c.samples)->capture_default_str();
    sim->add_option("--seed", c.seed)->capture_default_str();
    sim->add_flag("--raw-time", c.raw_time, "Interpret --t as raw time instead of t/N");
    sim->add_option("--samples-csv", c.samples_csv, "Also write per-sample values to this CSV");
    add_output_flags(sim, c.out);
    sim->callback(wrap("simulate", run_simulate));

    auto* cover = app.add_subcommand("cover", "Random branched-covering genus estimator");
    cover->add_option("--n", c.n)->required();
    cover->add_option("--lambda", c.class_str, "Boundary monodromy class")->required();
    cover->add_option("--N", c.n_int)->required();
    cover->add_option("--t", c.t)->required();
    cover->add_option("--samples", c.samples)->capture_default_str();
    cover->add_option("--seed", c.seed)->capture_default_str();
    add_output_flags(cover, c.out);
    cover->callback(wrap("cover", run_cover));

    auto* verify = app.add_subcommand("verify-all", "Run every cross-oracle and identity suite");
    verify->add_flag("--with-mc", c.with_mc, "Include the Monte-Carlo checks");
    verify->add_option("--seed", c.seed)->capture_default_str();
    add_output_flags(verify, c.out);
    verify->callback(wrap("verify-all", run_verify_all));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return c.exit_code;
}
