#ifndef CHARFACT_VERIFY_HPP
#define CHARFACT_VERIFY_HPP

#include <string>
#include <vector>

namespace charfact {

// One failed instance: what was checked, what was expected, what came out.
struct VerifyFailure {
    std::string instance;
    std::string expected;
    std::string actual;
};

struct VerifyReport {
    std::string suite;
    long long instances = 0;
    std::vector<VerifyFailure> failures;
    long long millis = 0;

    bool ok() const { return failures.empty(); }
};

struct VerifyOptions {
    int max_size = -1;        // -1: suite default
    std::vector<int> ts;      // empty: suite default
    std::vector<int> zs;      // empty: suite default
    bool quick = false;       // bounded smoke sweep
};

std::vector<std::string> verify_suite_names();  // excludes "all"
VerifyReport run_suite(const std::string& name, const VerifyOptions& opt);
std::vector<VerifyReport> run_all_suites(const VerifyOptions& opt);

// Criterion-sized sweeps; the named suites below combine them.
VerifyReport verify_littlewood_core(const VerifyOptions& opt);
VerifyReport verify_littlewood_signs(const VerifyOptions& opt);
VerifyReport verify_zasym(const VerifyOptions& opt);
VerifyReport verify_schur_verschiebung(const VerifyOptions& opt);
VerifyReport verify_hk_identity(const VerifyOptions& opt);
VerifyReport verify_rs2(const VerifyOptions& opt);
VerifyReport verify_chiz_master(const VerifyOptions& opt);
VerifyReport verify_chiz_classical(const VerifyOptions& opt);
VerifyReport verify_characters(const VerifyOptions& opt);
VerifyReport verify_sxp(const VerifyOptions& opt);

VerifyReport verify_littlewood(const VerifyOptions& opt);
VerifyReport verify_hamel_king(const VerifyOptions& opt);
VerifyReport verify_chiz(const VerifyOptions& opt);

}  // namespace charfact

#endif
