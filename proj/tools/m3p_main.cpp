// Command-line front end: admissible partition enumeration, Gordon-type
// characters, the partition bijection, three-point polynomials and the
// verification suites, all with machine-readable JSON output.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "m3p/bijection.hpp"
#include "m3p/characters.hpp"
#include "m3p/json_io.hpp"
#include "m3p/moderel.hpp"
#include "m3p/partitions.hpp"
#include "m3p/sympoly.hpp"
#include "m3p/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

void validate_p_or_exit(int p) {
    if (p < 4 || p % 3 == 0)
        throw CLI::ValidationError("--p", "p must be >= 4 and not divisible by 3");
}

void emit(const m3p::OrderedJson& j, const std::string& path) {
    std::string text = j.dump(2);
    std::cout << text << "\n";
    if (!path.empty()) {
        std::ofstream out(path);
        out << text << "\n";
    }
}

int cmd_enumerate(int p, int N, int n, long d, const std::string& json_path) {
    validate_p_or_exit(p);
    if (N < 1) throw CLI::ValidationError("--N", "N must be >= 1");
    if (n < 0) throw CLI::ValidationError("--n", "n must be >= 0");
    auto cls = m3p::enumerate_admissible(p, N, n);
    m3p::OrderedJson j;
    j["p"] = p;
    j["N"] = N;
    j["n"] = n;
    if (d >= 0) j["d"] = d;
    m3p::OrderedJson parts = m3p::OrderedJson::array();
    std::map<long, long> by_weight;
    for (const auto& lam : cls) {
        if (d >= 0 && lam.weight() != d) continue;
        parts.push_back(m3p::partition_json(lam));
        by_weight[lam.weight()] += 1;
    }
    j["partitions"] = std::move(parts);
    m3p::OrderedJson counts = m3p::OrderedJson::object();
    for (auto [w, c] : by_weight) counts[std::to_string(w)] = c;
    j["count_by_weight"] = std::move(counts);
    emit(j, json_path);
    return kExitPass;
}

int cmd_char(const std::string& target, int p, int N, int l, int n, int order,
             const std::string& json_path) {
    validate_p_or_exit(p);
    if (order < 1) throw CLI::ValidationError("--order", "order must be >= 1");
    m3p::OrderedJson j;
    j["target"] = target;
    j["p"] = p;
    j["order"] = order;
    if (target == "principal") {
        j["series"] = m3p::series_json(m3p::fermionic_principal(p, order));
    } else if (target == "voa") {
        j["series"] = m3p::series_json(m3p::fermionic_voa(p, order));
    } else if (target == "extremal") {
        if (l < 0) throw CLI::ValidationError("--l", "l must be >= 0");
        j["l"] = l;
        j["series"] = m3p::series_json(m3p::fermionic_extremal(p, l, order));
    } else if (target == "finitized") {
        if (N < 1) throw CLI::ValidationError("--N", "finitized target needs --N >= 1");
        j["N"] = N;
        j["series"] = m3p::series_json(m3p::fermionic_finitized(p, N, order));
    } else if (target == "ideal3") {
        j["series"] = m3p::series_json(m3p::ideal3_char(p, order));
    } else if (target == "a3") {
        j["series"] = m3p::series_json(m3p::a3_char(p, order));
    } else if (target == "recursion") {
        if (n < 0) throw CLI::ValidationError("--n", "recursion target needs --n >= 0");
        j["n"] = n;
        if (N >= 1) {
            j["N"] = N;
            j["series"] = m3p::series_json(m3p::recursion_rhs(p, N, n, order));
        } else {
            j["series"] = m3p::series_json(m3p::principal_recursion_rhs(p, n, order));
        }
    } else {
        throw CLI::ValidationError("--target", "unknown target " + target);
    }
    emit(j, json_path);
    return kExitPass;
}

int cmd_bijection(int p, int N, const std::string& decompose_arg,
                  const std::string& compose_arg, const std::string& mu_arg, bool sweep,
                  int nmax, const std::string& json_path) {
    validate_p_or_exit(p);
    if (N < 1) throw CLI::ValidationError("--N", "N must be >= 1");
    m3p::OrderedJson j;
    j["p"] = p;
    j["N"] = N;
    if (sweep) {
        m3p::VerifySizes sizes;
        sizes.ps = {p};
        sizes.Nmax = N;
        sizes.nmax = nmax;
        m3p::CheckResult res = m3p::check_bijection_roundtrip(sizes);
        m3p::RunReport report;
        report.command = "bijection --sweep";
        report.parameters = {{"p", p}, {"N", N}, {"nmax", nmax}};
        report.checks.push_back(res);
        emit(m3p::report_json(report), json_path);
        return report.overall() ? kExitPass : kExitFail;
    }
    if (!decompose_arg.empty()) {
        m3p::Partition nu(parse_int_list(decompose_arg));
        if (!m3p::in_admissible_class(nu.parts(), p, N))
            throw CLI::ValidationError("--decompose", "partition is not in C^[p]_{N,n}");
        m3p::Decomposition dec = m3p::decompose(nu, p, N);
        j["input"] = m3p::partition_json(nu);
        j["decomposition"] = m3p::decomposition_json(dec);
        m3p::Partition back = m3p::compose(dec.lambda, dec.mu, p, N);
        j["recomposed"] = m3p::partition_json(back);
        j["roundtrip"] = back == nu;
        emit(j, json_path);
        return back == nu ? kExitPass : kExitFail;
    }
    if (!compose_arg.empty() || !mu_arg.empty()) {
        m3p::Partition lam(parse_int_list(compose_arg));
        std::vector<int> mu = parse_int_list(mu_arg);
        m3p::Partition nu = m3p::compose(lam, mu, p, N);
        j["lambda"] = m3p::partition_json(lam);
        m3p::OrderedJson muj = m3p::OrderedJson::array();
        for (int v : mu) muj.push_back(v);
        j["mu"] = std::move(muj);
        j["nu"] = m3p::partition_json(nu);
        m3p::Decomposition dec = m3p::decompose(nu, p, N);
        j["roundtrip"] = dec.lambda == lam && dec.mu == mu;
        emit(j, json_path);
        return j["roundtrip"].get<bool>() ? kExitPass : kExitFail;
    }
    throw CLI::ValidationError("bijection", "need one of --decompose, --compose, --sweep");
}

int cmd_phi3(int p, const std::string& json_path) {
    validate_p_or_exit(p);
    m3p::OrderedJson j;
    j["p"] = p;
    j["phi3"] = m3p::sympoly_json(m3p::phi3(p));
    j["l1_phi3"] = m3p::sympoly_json(m3p::l_op(1, m3p::phi3(p)));
    emit(j, json_path);
    return kExitPass;
}

int cmd_verify(const std::string& check, const m3p::VerifySizes& sizes, bool timings,
               const std::string& json_path) {
    for (int p : sizes.ps) validate_p_or_exit(p);
    m3p::RunReport report = m3p::run_verify(check, sizes);
    emit(m3p::report_json(report, timings), json_path);
    return report.overall() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of the (3,p) principal subspace"};
    app.require_subcommand(1);

    std::string json_path;
    auto add_json = [&](CLI::App* sub) {
        sub->add_option("--json", json_path, "also write the JSON payload to this file");
    };

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "list an admissible class");
    int e_p = 4, e_N = 1, e_n = 0;
    long e_d = -1;
    enumerate->add_option("--p", e_p, "window parameter")->required();
    enumerate->add_option("--N", e_N, "part bound")->required();
    enumerate->add_option("--n", e_n, "number of parts")->required();
    enumerate->add_option("--d", e_d, "restrict to weight d");
    add_json(enumerate);

    // char
    auto* chr = app.add_subcommand("char", "character series");
    std::string c_target = "ideal3";
    int c_p = 4, c_N = 0, c_l = 0, c_n = -1, c_order = 24;
    chr->add_option("--target", c_target,
                    "principal|voa|extremal|finitized|ideal3|a3|recursion")
        ->required();
    chr->add_option("--p", c_p)->required();
    chr->add_option("--N", c_N, "bound for finitized/recursion targets");
    chr->add_option("--l", c_l, "extremal shift");
    chr->add_option("--n", c_n, "column for the recursion target");
    chr->add_option("--order", c_order, "truncation order");
    add_json(chr);

    // bijection
    auto* bij = app.add_subcommand("bijection", "partition bijection tools");
    int b_p = 4, b_N = 1, b_nmax = 6;
    std::string b_dec, b_com, b_mu;
    bool b_sweep = false;
    bij->add_option("--p", b_p)->required();
    bij->add_option("--N", b_N)->required();
    bij->add_option("--decompose", b_dec, "comma-separated partition to decompose");
    bij->add_option("--compose", b_com, "comma-separated lambda (with --mu)");
    bij->add_option("--mu", b_mu, "comma-separated box partition");
    bij->add_flag("--sweep", b_sweep, "exhaustive round-trip sweep");
    bij->add_option("--nmax", b_nmax, "largest length for --sweep");
    add_json(bij);

    // phi3
    auto* phi = app.add_subcommand("phi3", "three-point polynomial");
    int f_p = 4;
    phi->add_option("--p", f_p)->required();
    add_json(phi);

    // verify
    auto* ver = app.add_subcommand("verify", "run verification suites");
    std::string v_check = "all", v_ps = "4,5,7,8";
    m3p::VerifySizes sizes;
    bool v_timings = false;
    ver->add_option("--check", v_check, "suite or focused check name");
    ver->add_option("--p", v_ps, "comma-separated p list");
    ver->add_option("--order", sizes.order);
    ver->add_option("--nmax", sizes.nmax);
    ver->add_option("--N", sizes.Nmax, "bound cap (0 = per-check default)");
    ver->add_option("--dmax", sizes.dmax, "degree cap (0 = per-check default)");
    ver->add_option("--cap", sizes.exact_cap, "exactness degree cap (0 = 2p)");
    ver->add_option("--threads", sizes.threads);
    ver->add_flag("--timings", v_timings, "include wall times in the report");
    add_json(ver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*enumerate) return cmd_enumerate(e_p, e_N, e_n, e_d, json_path);
        if (*chr) return cmd_char(c_target, c_p, c_N, c_l, c_n, c_order, json_path);
        if (*bij)
            return cmd_bijection(b_p, b_N, b_dec, b_com, b_mu, b_sweep, b_nmax, json_path);
        if (*phi) return cmd_phi3(f_p, json_path);
        if (*ver) {
            sizes.ps = parse_int_list(v_ps);
            if (sizes.ps.empty())
                throw CLI::ValidationError("--p", "p list must not be empty");
            bool known = false;
            for (const auto& name : m3p::verify_check_names()) known |= name == v_check;
            if (!known)
                throw CLI::ValidationError("--check", "unknown check " + v_check);
            return cmd_verify(v_check, sizes, v_timings, json_path);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
