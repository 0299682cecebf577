#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fintop/enumerate.hpp"

namespace fintop {

enum class VerifySuite { all, formulas, oracles };

struct CheckResult {
    std::string name;
    std::string expected_label;
    std::string expected;
    std::string actual_label;
    std::string actual;
    bool pass = false;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_passed() const;
    std::size_t failures() const;
};

/// Differential checks of every closed form against enumeration, plus
/// identities against brute-force oracles. Enumeration-side counts go through
/// `cache`. When `live` is given, each check's line is printed as it completes.
VerifyReport run_verify(VerifySuite suite, const EnumerationOptions& options, CountCache& cache,
                        std::ostream* live = nullptr);

std::string format_check(const CheckResult& c);

namespace oracle {

/// Every reflexive transitive relation on n <= 4 points, by exhaustive search.
std::vector<std::vector<VertexSet>> all_preorders(int n);

/// Smallest row-major arc encoding over all n! relabellings.
std::vector<VertexSet> brute_canonical_rows(const std::vector<VertexSet>& rows);

/// Surjections from an n-set onto some {0..k-1}, by enumerating all maps.
Count ordered_set_partitions(int n);

Count compositions(int n);

}  // namespace oracle

}  // namespace fintop
