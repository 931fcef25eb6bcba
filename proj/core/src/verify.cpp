#include "m3p/verify.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <sstream>

#include "m3p/bijection.hpp"
#include "m3p/characters.hpp"
#include "m3p/moderel.hpp"

namespace m3p {

bool RunReport::overall() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

OrderedJson report_json(const RunReport& report, bool with_timings) {
    OrderedJson j;
    j["command"] = report.command;
    j["parameters"] = report.parameters;
    OrderedJson checks = OrderedJson::array();
    for (const auto& c : report.checks) {
        OrderedJson e;
        e["name"] = c.name;
        e["params"] = c.params;
        e["pass"] = c.pass;
        e["counterexample"] = c.counterexample;
        if (with_timings) e["wall_ms"] = c.wall_ms;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    j["overall"] = report.overall() ? "pass" : "fail";
    return j;
}

Int admissible_triple_count(int p, long d) {
    Int total = 0;
    for (long a = 0; 3 * a <= d; ++a)
        for (long b = a; a + 2 * b <= d; ++b) {
            long c = d - a - b;
            if (c >= b && c - a >= p - 2) total += 1;
        }
    return total;
}

namespace {

using Clock = std::chrono::steady_clock;

CheckResult timed(const std::string& name, OrderedJson params,
                  const std::function<std::string()>& body) {
    CheckResult res;
    res.name = name;
    res.params = std::move(params);
    auto t0 = Clock::now();
    res.counterexample = body();
    res.pass = res.counterexample.empty();
    res.wall_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return res;
}

std::string fmt(const char* tag, int p, int N, int n, long d = -1) {
    std::ostringstream os;
    os << tag << " p=" << p;
    if (N >= 0) os << " N=" << N;
    if (n >= 0) os << " n=" << n;
    if (d >= 0) os << " d=" << d;
    return os.str();
}

long weight_law(int p, int l, int m) {
    return static_cast<long>(l) * (l - 1) + static_cast<long>(p - 2) * l * m +
           static_cast<long>(p - 2) * m * (m - 1) + 2L * m;
}

OrderedJson ps_json(const std::vector<int>& ps) {
    OrderedJson arr = OrderedJson::array();
    for (int p : ps) arr.push_back(p);
    return arr;
}

}  // namespace

CheckResult check_recursion_fixpoint(const VerifySizes& s) {
    int Nmax = s.Nmax > 0 ? s.Nmax : 10;
    OrderedJson params{{"p", ps_json(s.ps)}, {"Nmax", Nmax}, {"nmax", s.nmax}, {"order", s.order}};
    return timed("recursion-fixpoint", params, [&]() -> std::string {
        for (int p : s.ps)
            for (int N = 1; N <= Nmax; ++N)
                for (int n = 0; n <= s.nmax; ++n)
                    if (admissible_gen_function(p, N, n, s.order) !=
                        recursion_rhs(p, N, n, s.order))
                        return fmt("gen_function != recursion_rhs:", p, N, n);
        return {};
    });
}

CheckResult check_bijection_roundtrip(const VerifySizes& s) {
    int Nmax = s.Nmax > 0 ? s.Nmax : 9;
    OrderedJson params{{"p", ps_json(s.ps)}, {"Nmax", Nmax}, {"nmax", s.nmax}};
    return timed("bijection-roundtrip", params, [&]() -> std::string {
        for (int p : s.ps)
            for (int N = 1; N <= Nmax; ++N)
                for (int n = 0; n <= s.nmax; ++n) {
                    auto cls = enumerate_admissible(p, N, n);
                    size_t pair_count = 0;
                    // compose side: every (lambda, mu) of the matching
                    // classes must land in C^[p]_{N,n} and invert
                    for (int m = 0; 2 * m <= n; ++m) {
                        int l = n - 2 * m;
                        int L = N - 2 * (l - 1) - (p - 2) * m;
                        long M = 2L * (N - 1) - static_cast<long>(p - 2) * (n - 2);
                        if (m > 0 && M < 0) continue;
                        auto lams = enumerate_admissible(p - 3, L, l);
                        std::vector<std::vector<int>> mus =
                            m == 0 ? std::vector<std::vector<int>>{{}}
                                   : bounded_partitions(static_cast<int>(M), m);
                        for (const auto& lam : lams)
                            for (const auto& mu : mus) {
                                Partition nu = compose(lam, mu, p, N);
                                if (!in_admissible_class(nu.parts(), p, N))
                                    return fmt("compose image outside class:", p, N, n);
                                Decomposition dec = decompose(nu, p, N);
                                if (dec.lambda != lam || dec.mu != mu)
                                    return fmt("decompose(compose) != id:", p, N, n);
                                long expect = lam.weight() + weight_law(p, l, m);
                                for (int v : mu) expect += v;
                                if (nu.weight() != expect)
                                    return fmt("weight law failed:", p, N, n);
                                ++pair_count;
                            }
                    }
                    if (pair_count != cls.size())
                        return fmt("pair count != class size:", p, N, n);
                    for (const Partition& nu : cls) {
                        Decomposition dec = decompose(nu, p, N);
                        if (compose(dec.lambda, dec.mu, p, N) != nu)
                            return fmt("compose(decompose) != id:", p, N, n, nu.weight());
                        if (auto up = b3(nu, p, N)) {
                            auto back = b3_star(*up, p, N);
                            if (!back || *back != nu)
                                return fmt("b3* o b3 != id:", p, N, n, nu.weight());
                        }
                        if (auto down = b3_star(nu, p, N)) {
                            auto back = b3(*down, p, N);
                            if (!back || *back != nu)
                                return fmt("b3 o b3* != id:", p, N, n, nu.weight());
                        }
                    }
                }
        return {};
    });
}

CheckResult check_finitized_characters(const VerifySizes& s) {
    int Nmax = s.Nmax > 0 ? s.Nmax : 8;
    std::vector<int> ps;
    for (int p : s.ps)
        if (p != 8) ps.push_back(p);
    OrderedJson params{{"p", ps_json(ps)}, {"Nmax", Nmax}, {"nmax", s.nmax}, {"order", s.order}};
    return timed("finitized-characters", params, [&]() -> std::string {
        for (int p : ps)
            for (int N = 1; N <= Nmax; ++N) {
                QZSeries ferm = fermionic_finitized(p, N, s.order);
                for (int n = 0; n <= s.nmax; ++n)
                    if (ferm.column(n) != admissible_gen_function(p, N, n, s.order))
                        return fmt("finitized z-column != gen_function:", p, N, n);
            }
        return {};
    });
}

CheckResult check_principal_chain(const VerifySizes& s) {
    int order = std::min(s.order, 24);
    int nmax = std::min(s.nmax, 5);
    OrderedJson params{{"p", ps_json(s.ps)}, {"nmax", nmax}, {"order", order}};
    return timed("principal-chain", params, [&]() -> std::string {
        for (int p : s.ps) {
            QZSeries reg = regrade_z_to_qz(fermionic_principal(p, order));
            for (int n = 0; n <= nmax; ++n) {
                QSeries col = reg.column(n);
                if (col != principal_recursion_rhs(p, n, order))
                    return fmt("regraded principal != recursion:", p, -1, n);
                if (col != admissible_gen_function(p, kUnbounded, n, order))
                    return fmt("regraded principal != stabilized gen_function:", p, -1, n);
            }
            QZSeries prev = fermionic_extremal(p, 0, order);
            if (prev != reg) return fmt("extremal(0) != regraded principal:", p, -1, -1);
            for (int l = 0; l <= 4; ++l) {
                QZSeries next = fermionic_extremal(p, l + 1, order);
                if (!leq(prev, next)) return fmt("extremal not monotone at l:", p, -1, l);
                prev = std::move(next);
            }
            QZSeries stable = fermionic_extremal(p, order, order);
            if (stable != fermionic_extremal(p, order + 1, order))
                return fmt("extremal not stable past order:", p, -1, -1);
            if (stable != fermionic_voa(p, order))
                return fmt("extremal limit != voa form:", p, -1, -1);
        }
        return {};
    });
}

CheckResult check_ideal3_counts(const VerifySizes& s) {
    OrderedJson params{{"p", ps_json(s.ps)}, {"dmax", s.order}};
    return timed("ideal3-counts", params, [&]() -> std::string {
        int order = s.order + 1;  // degrees up to s.order inclusive
        for (int p : s.ps) {
            QSeries ic = ideal3_char(p, order);
            for (long d = 0; d < order; ++d)
                if (ic.coeff(d) != admissible_triple_count(p, d))
                    return fmt("ideal3_char != triple count:", p, -1, -1, d);
            QSeries lhs = a3_char(p, order) + ic.shifted(3);
            if (lhs != pochhammer_inverse(3, order).shifted(3))
                return fmt("a3 + q^3 ideal3 != q^3/(q)_3:", p, -1, -1);
        }
        return {};
    });
}

CheckResult check_phi3_suite(const VerifySizes& s) {
    (void)s;
    const std::vector<int> core_ps{4, 5, 7};
    const std::vector<int> nested_ps{7, 8, 10, 11};
    const std::vector<int> squarefree_ps{4, 5, 7, 8, 10, 11, 13, 14};
    OrderedJson params{{"p", ps_json(core_ps)},
                       {"nested_p", ps_json(nested_ps)},
                       {"squarefree_p", ps_json(squarefree_ps)}};
    return timed("phi3-suite", params, [&]() -> std::string {
        for (int p : core_ps) {
            SymPoly3 phi = phi3(p);  // construction verifies symmetry
            if (phi.homogeneous_degree() != p - 2)
                return fmt("phi3 degree wrong:", p, -1, -1);
            if (!hyp_ode_check(p)) return fmt("hypergeometric ODE failed:", p, -1, -1);
            Poly2 xy;  // (x-y)^{p-2}
            for (int t = 0; t <= p - 2; ++t) {
                Int b;
                mpz_bin_uiui(b.get_mpz_t(), p - 2, t);
                if ((p - 2 - t) % 2 != 0) b = -b;
                xy.add_term(t, p - 2 - t, Rat(b));
            }
            if (specialize_pi(phi) != xy) return fmt("pi(phi3) != (x-y)^(p-2):", p, -1, -1);
            Poly2 xpy;
            xpy.add_term(1, 0, Rat(p - 2));
            xpy.add_term(0, 1, Rat(p - 2));
            if (specialize_pi(l_op(1, phi)) != xpy * xy)
                return fmt("pi(l1 phi3) != (p-2)(x+y)(x-y)^(p-2):", p, -1, -1);
            for (int m = 2; m <= 4; ++m)
                if (!qr_reduction(p, m).identity_holds)
                    return fmt("Q/R identity failed at m:", p, -1, m);
            for (int j = 0; j <= p - 2; ++j) {
                Exp3 lead = leading_monomial(f_j(p, j));
                if (lead != Exp3{p - 2, j, 0})
                    return fmt("f_j leading monomial wrong at j:", p, -1, j);
            }
        }
        for (int p : nested_ps)
            if (!nested_identity_check(p)) return fmt("nested identity failed:", p, -1, -1);
        for (int p : squarefree_ps)
            if (!squarefree_check(p)) return fmt("squarefree check failed:", p, -1, -1);
        return {};
    });
}

CheckResult check_exact_sequences(const VerifySizes& s) {
    std::vector<int> ps;
    for (int p : s.ps)
        if (p != 8) ps.push_back(p);
    OrderedJson params{{"p", ps_json(ps)}};
    return timed("exact-sequences", params, [&]() -> std::string {
        for (int p : ps) {
            int cap = s.exact_cap > 0 ? s.exact_cap : 2 * p;
            if (!exactness_check(p, cap)) return fmt("exactness failed:", p, -1, -1);
            int N = s.Nmax > 0 ? s.Nmax : p + 1;
            if (!finitized_exactness_check(p, N))
                return fmt("finitized exactness failed:", p, N, -1);
        }
        return {};
    });
}

CheckResult check_mode_relations(const VerifySizes& s) {
    OrderedJson params{{"p", ps_json(s.ps)}, {"dmax", s.dmax}};
    return timed("mode-relations", params, [&]() -> std::string {
        for (int p : s.ps) {
            int dmax = s.dmax > 0 ? s.dmax : 2 * p + 4;
            Ideal3 ideal = Ideal3::make(p);
            for (int d = 3; d <= dmax; ++d) {
                for (int nu = 0; nu <= p - 3; ++nu)
                    if (!annihilation_check(squared_current_relation(p, nu, d), ideal))
                        return fmt("squared-current annihilation failed at nu:", p, -1, nu, d);
                if (!annihilation_check(mixed_current_relation(p, d), ideal))
                    return fmt("mixed-current annihilation failed:", p, -1, -1, d);
            }
            if (p >= 7 && !independence_check(p))
                return fmt("independence failed:", p, -1, -1);
        }
        for (int d = 3; d <= 12; ++d)
            if (!a3_dimension_crosscheck(4, d))
                return fmt("a3 dimension crosscheck failed:", 4, -1, -1, d);
        return {};
    });
}

namespace {

CheckResult focused(const std::string& name, const VerifySizes& s) {
    if (name == "ode") {
        return timed("ode", {{"p", ps_json(s.ps)}}, [&]() -> std::string {
            for (int p : s.ps)
                if (!hyp_ode_check(p)) return fmt("ODE failed:", p, -1, -1);
            return {};
        });
    }
    if (name == "exact3") {
        return timed("exact3", {{"p", ps_json(s.ps)}}, [&]() -> std::string {
            for (int p : s.ps) {
                int cap = s.exact_cap > 0 ? s.exact_cap : 2 * p;
                if (!exactness_check(p, cap)) return fmt("exactness failed:", p, -1, -1);
            }
            return {};
        });
    }
    if (name == "exactN") {
        return timed("exactN", {{"p", ps_json(s.ps)}, {"N", s.Nmax}}, [&]() -> std::string {
            for (int p : s.ps) {
                int N = s.Nmax > 0 ? s.Nmax : p + 1;
                if (!finitized_exactness_check(p, N))
                    return fmt("finitized exactness failed:", p, N, -1);
            }
            return {};
        });
    }
    if (name == "squarefree") {
        return timed("squarefree", {{"p", ps_json(s.ps)}}, [&]() -> std::string {
            for (int p : s.ps)
                if (!squarefree_check(p)) return fmt("squarefree failed:", p, -1, -1);
            return {};
        });
    }
    if (name == "qr") {
        return timed("qr", {{"p", ps_json(s.ps)}}, [&]() -> std::string {
            for (int p : s.ps)
                for (int m = 2; m <= 4; ++m)
                    if (!qr_reduction(p, m).identity_holds)
                        return fmt("Q/R identity failed at m:", p, -1, m);
            return {};
        });
    }
    if (name == "nested") {
        return timed("nested", {{"p", ps_json(s.ps)}}, [&]() -> std::string {
            for (int p : s.ps)
                if (!nested_identity_check(p)) return fmt("nested identity failed:", p, -1, -1);
            return {};
        });
    }
    if (name == "leading") {
        return timed("leading", {{"p", ps_json(s.ps)}}, [&]() -> std::string {
            for (int p : s.ps) {
                for (int j = 0; j <= p - 2; ++j)
                    if (leading_monomial(f_j(p, j)) != Exp3{p - 2, j, 0})
                        return fmt("f_j leading wrong at j:", p, -1, j);
                // translates e1^a e2^b e3^c f_j cover the admissible cone
                SymPoly3 f1 = f_j(p, 1);
                for (int a = 0; a <= 2; ++a)
                    for (int b = 0; b <= 2; ++b)
                        for (int c = 0; c <= 2; ++c) {
                            SymPoly3 g = f1;
                            for (int t = 0; t < a; ++t) g = g * elementary(1);
                            for (int t = 0; t < b; ++t) g = g * elementary(2);
                            for (int t = 0; t < c; ++t) g = g * elementary(3);
                            if (leading_monomial(g) !=
                                Exp3{p - 2 + a + b + c, 1 + b + c, c}) {
                                std::ostringstream os;
                                os << "translate leading wrong: p=" << p << " (a,b,c)=("
                                   << a << "," << b << "," << c << ")";
                                return os.str();
                            }
                        }
            }
            return {};
        });
    }
    if (name == "independence") {
        return timed("independence", {{"p", ps_json(s.ps)}}, [&]() -> std::string {
            for (int p : s.ps) {
                if (p < 7) continue;
                if (!independence_check(p)) return fmt("independence failed:", p, -1, -1);
            }
            return {};
        });
    }
    if (name == "a3dim") {
        return timed("a3dim", {{"p", ps_json(s.ps)}, {"dmax", s.dmax}}, [&]() -> std::string {
            for (int p : s.ps) {
                int dmax = s.dmax > 0 ? s.dmax : 12;
                for (int d = 3; d <= dmax; ++d)
                    if (!a3_dimension_crosscheck(p, d))
                        return fmt("a3 dimension crosscheck failed:", p, -1, -1, d);
            }
            return {};
        });
    }
    throw std::domain_error("unknown check: " + name);
}

}  // namespace

std::vector<std::string> verify_check_names() {
    return {"ode",     "exact3",      "exactN",       "squarefree", "qr",
            "nested",  "leading",     "relations",    "independence", "a3dim",
            "recursion", "bijection", "finitized",    "principal",  "ideal3",
            "all"};
}

RunReport run_verify(const std::string& check, const VerifySizes& sizes) {
    RunReport report;
    report.command = "verify";
    report.parameters["check"] = check;
    report.parameters["p"] = ps_json(sizes.ps);

    if (check == "relations") {
        // one record per relation, as the machine-readable sweep
        for (int p : sizes.ps) {
            int dmax = sizes.dmax > 0 ? sizes.dmax : 2 * p + 4;
            Ideal3 ideal = Ideal3::make(p);
            for (int d = 3; d <= dmax; ++d) {
                for (int nu = 0; nu <= p - 3; ++nu) {
                    OrderedJson params{{"p", p}, {"nu", nu}, {"d", d}};
                    report.checks.push_back(
                        timed("squared-relation-annihilation", params, [&]() -> std::string {
                            return annihilation_check(squared_current_relation(p, nu, d), ideal)
                                       ? std::string{}
                                       : fmt("pairing nonzero:", p, -1, nu, d);
                        }));
                }
                OrderedJson params{{"p", p}, {"d", d}};
                report.checks.push_back(
                    timed("mixed-relation-annihilation", params, [&]() -> std::string {
                        return annihilation_check(mixed_current_relation(p, d), ideal)
                                   ? std::string{}
                                   : fmt("pairing nonzero:", p, -1, -1, d);
                    }));
            }
        }
        return report;
    }

    using Task = std::function<CheckResult()>;
    std::vector<Task> tasks;
    if (check == "all") {
        tasks = {[&] { return check_recursion_fixpoint(sizes); },
                 [&] { return check_bijection_roundtrip(sizes); },
                 [&] { return check_finitized_characters(sizes); },
                 [&] { return check_principal_chain(sizes); },
                 [&] { return check_ideal3_counts(sizes); },
                 [&] { return check_phi3_suite(sizes); },
                 [&] { return check_exact_sequences(sizes); },
                 [&] { return check_mode_relations(sizes); }};
    } else if (check == "recursion") {
        tasks = {[&] { return check_recursion_fixpoint(sizes); }};
    } else if (check == "bijection") {
        tasks = {[&] { return check_bijection_roundtrip(sizes); }};
    } else if (check == "finitized") {
        tasks = {[&] { return check_finitized_characters(sizes); }};
    } else if (check == "principal") {
        tasks = {[&] { return check_principal_chain(sizes); }};
    } else if (check == "ideal3") {
        tasks = {[&] { return check_ideal3_counts(sizes); }};
    } else {
        tasks = {[&] { return focused(check, sizes); }};
    }

    if (sizes.threads > 1 && tasks.size() > 1) {
        std::vector<std::future<CheckResult>> futures;
        futures.reserve(tasks.size());
        for (auto& t : tasks) futures.push_back(std::async(std::launch::async, t));
        for (auto& f : futures) report.checks.push_back(f.get());
    } else {
        for (auto& t : tasks) report.checks.push_back(t());
    }
    return report;
}

}  // namespace m3p
