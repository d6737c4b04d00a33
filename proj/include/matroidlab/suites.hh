/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MATROIDLAB_GUARD_SUITES_HH
#define MATROIDLAB_GUARD_SUITES_HH 1

#include <matroidlab/constructions.hh>

#include <iosfwd>
#include <string>
#include <vector>

namespace matroidlab
{
    struct CheckRecord
    {
        std::string id;
        std::vector<std::string> inputs;  ///< catalog ids
        bool pass = false;
        std::string witness;              ///< one line, no tabs
        long long millis = 0;
        std::string anchor;               ///< what the check establishes
    };

    struct SuiteReport
    {
        std::string suite;
        std::vector<CheckRecord> checks;  ///< sorted by check id

        auto passed() const -> bool;
        auto pass_count() const -> std::size_t;
        /// First failing check in report order, or nullptr.
        auto first_failure() const -> const CheckRecord *;
    };

    /// tables, dyadic, signedgraphic, nearreg, templates.
    auto suite_ids() -> std::vector<std::string>;

    /// Throws std::invalid_argument for an unknown suite. Failed checks,
    /// including ones that throw, are recorded rather than propagated.
    auto run_suite(const std::string & id, const Catalog & catalog) -> SuiteReport;

    /// `check-id TAB verdict TAB millis TAB witness TAB anchor`, one line per
    /// check. With stable set, millis are written as 0.
    auto write_report(std::ostream & out, const SuiteReport & r, bool stable = false) -> void;

    auto write_summary(std::ostream & out, const SuiteReport & r) -> void;
}

#endif
