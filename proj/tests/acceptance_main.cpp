// Acceptance suite: every criterion is exercised at its stated size
// with exact arithmetic, one pass/fail line per criterion.

#include <cstdio>

#include "m3p/verify.hpp"

namespace {

struct Criterion {
    const char* label;
    m3p::CheckResult (*run)(const m3p::VerifySizes&);
    m3p::VerifySizes sizes;
};

}  // namespace

int main() {
    using m3p::VerifySizes;

    VerifySizes recursion;   // p in {4,5,7,8}, N <= 10, n <= 6, order 30
    recursion.Nmax = 10;

    VerifySizes bijection;   // exhaustive classes, N <= 9, n <= 6
    bijection.Nmax = 9;

    VerifySizes finitized;   // p in {4,5,7}, N <= 8, n <= 6, order 30
    finitized.Nmax = 8;

    VerifySizes principal;   // n <= 5, order 24
    principal.order = 24;
    principal.nmax = 5;

    VerifySizes ideal;       // d < 30
    ideal.order = 30;

    VerifySizes phi;         // fixed p-lists inside the check

    VerifySizes exact;       // cap 2p, finitized pairs (p, p+1)

    VerifySizes relations;   // d <= 2p+4, independence at 7 and 8, a3 at p=4

    const Criterion criteria[] = {
        {"1 recursion fixpoint (bounded classes vs recursion)",
         m3p::check_recursion_fixpoint, recursion},
        {"2 bijection round-trip, weight law, involutions",
         m3p::check_bijection_roundtrip, bijection},
        {"3 finitized fermionic character vs enumeration",
         m3p::check_finitized_characters, finitized},
        {"4 principal chain and extremal stabilisation",
         m3p::check_principal_chain, principal},
        {"5 ideal character vs triple counts and duality",
         m3p::check_ideal3_counts, ideal},
        {"6 three-point polynomial suite", m3p::check_phi3_suite, phi},
        {"7 exact sequences (plain and finitized)",
         m3p::check_exact_sequences, exact},
        {"8 cubic relations, independence, dimensions",
         m3p::check_mode_relations, relations},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        m3p::CheckResult res = c.run(c.sizes);
        if (res.pass) {
            std::printf("PASS  criterion %s  (%.0f ms)\n", c.label, res.wall_ms);
        } else {
            ++failures;
            std::printf("FAIL  criterion %s  (%.0f ms)\n      %s\n", c.label,
                        res.wall_ms, res.counterexample.c_str());
        }
        std::fflush(stdout);
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
