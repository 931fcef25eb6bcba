#ifndef M3P_VERIFY_HPP
#define M3P_VERIFY_HPP

#include <string>
#include <vector>

#include "m3p/json_io.hpp"

namespace m3p {

/// One named verification with its parameters, outcome and the first
/// counterexample found (empty when the check passed).
struct CheckResult {
    std::string name;
    OrderedJson params = OrderedJson::object();
    bool pass = false;
    std::string counterexample;
    double wall_ms = 0.0;
};

struct RunReport {
    std::string command;
    OrderedJson parameters = OrderedJson::object();
    std::vector<CheckResult> checks;
    bool overall() const;
};

/// Timing is excluded by default so identical invocations serialize
/// byte-identically.
OrderedJson report_json(const RunReport& report, bool with_timings = false);

/// Size caps for the verification sweeps.  Zero-valued caps fall back
/// to their per-p defaults (2p for the exact-sequence cap, 2p+4 for
/// the relation degree).
struct VerifySizes {
    std::vector<int> ps{4, 5, 7, 8};
    int order = 30;
    int nmax = 6;
    int Nmax = 0;
    int dmax = 0;
    int exact_cap = 0;
    int threads = 1;
};

/// Composite suites, one per acceptance-style criterion.
CheckResult check_recursion_fixpoint(const VerifySizes& s);
CheckResult check_bijection_roundtrip(const VerifySizes& s);
CheckResult check_finitized_characters(const VerifySizes& s);
CheckResult check_principal_chain(const VerifySizes& s);
CheckResult check_ideal3_counts(const VerifySizes& s);
CheckResult check_phi3_suite(const VerifySizes& s);
CheckResult check_exact_sequences(const VerifySizes& s);
CheckResult check_mode_relations(const VerifySizes& s);

/// Focused checks exposed through `verify --check <name>`.
std::vector<std::string> verify_check_names();

/// Dispatch a named check ("all" runs the eight composite suites,
/// optionally across a thread pool, results assembled in declared
/// order).
RunReport run_verify(const std::string& check, const VerifySizes& sizes);

/// Enumeration oracle: #{ 0 <= a <= b <= c : c-a >= p-2, a+b+c = d }.
Int admissible_triple_count(int p, long d);

}  // namespace m3p

#endif
