/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <matroidlab/frame_template.hh>
#include <matroidlab/suites.hh>
#include <matroidlab/ytemplate.hh>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <functional>
#include <ostream>

using std::size_t;
using std::string;
using std::vector;

namespace matroidlab
{
    auto SuiteReport::passed() const -> bool
    {
        return first_failure() == nullptr;
    }

    auto SuiteReport::pass_count() const -> size_t
    {
        return size_t(std::count_if(checks.begin(), checks.end(), [](const CheckRecord & c) { return c.pass; }));
    }

    auto SuiteReport::first_failure() const -> const CheckRecord *
    {
        for (auto & c : checks)
            if (! c.pass)
                return &c;
        return nullptr;
    }

    namespace
    {
        const auto gf3 = FieldChar::gf3;
        const auto gf5 = FieldChar::gf5;

        struct Outcome
        {
            bool pass;
            string witness;
        };

        struct Check
        {
            string id;
            vector<string> inputs;
            string anchor;
            std::function<Outcome()> body;
        };

        auto one_line(string s) -> string
        {
            std::replace(s.begin(), s.end(), '\t', ' ');
            std::replace(s.begin(), s.end(), '\n', ' ');
            return s;
        }

        auto run_checks(const string & suite, vector<Check> checks) -> SuiteReport
        {
            SuiteReport r;
            r.suite = suite;
            for (auto & c : checks) {
                CheckRecord rec{c.id, c.inputs, false, "", 0, c.anchor};
                auto start = std::chrono::steady_clock::now();
                try {
                    auto o = c.body();
                    rec.pass = o.pass;
                    rec.witness = one_line(o.witness);
                }
                catch (const std::exception & e) {
                    rec.pass = false;
                    rec.witness = one_line(string("error: ") + e.what());
                }
                auto end = std::chrono::steady_clock::now();
                rec.millis = std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
                r.checks.push_back(std::move(rec));
            }
            std::sort(r.checks.begin(), r.checks.end(), [](const CheckRecord & a, const CheckRecord & b) { return a.id < b.id; });
            return r;
        }

        auto iso_outcome(const LinearMatroid & a, const LinearMatroid & b) -> Outcome
        {
            auto f = is_isomorphic(a, b);
            if (! f)
                return {false, "no isomorphism"};
            if (! verify_isomorphism(a, b, *f))
                return {false, "isomorphism does not verify " + to_string(*f)};
            return {true, to_string(*f)};
        }

        auto none_outcome(const LinearMatroid & a, const LinearMatroid & b) -> Outcome
        {
            auto f = is_restriction_of(a, b);
            if (f)
                return {false, "unexpected embedding " + to_string(*f)};
            return {true, "none"};
        }

        auto minor_outcome(const LinearMatroid & m, const LinearMatroid & n, const std::optional<LabelSet> & hint) -> Outcome
        {
            auto w = has_minor(m, n, hint);
            if (! w)
                return {false, "no minor"};
            if (! verify_minor_witness(m, n, *w))
                return {false, "witness does not verify " + to_string(*w)};
            return {true, to_string(*w)};
        }

        auto restriction_outcome(const LinearMatroid & n, const LinearMatroid & m) -> Outcome
        {
            auto f = is_restriction_of(n, m);
            if (! f)
                return {false, "no embedding"};
            if (! verify_restriction(n, m, *f))
                return {false, "embedding does not verify " + to_string(*f)};
            return {true, to_string(*f)};
        }

        /// Elements whose column vanishes on the given rows.
        auto supported_on(const LinearMatroid & m, size_t rows) -> LabelSet
        {
            LabelSet out;
            for (size_t c = 0; c < m.size(); ++c) {
                bool inside = true;
                for (size_t r = rows; r < m.rep().rows(); ++r)
                    inside = inside && m.rep()(r, c) == 0;
                if (inside)
                    out.push_back(m.labels()[c]);
            }
            return out;
        }

        auto tables_suite(const Catalog & cat) -> vector<Check>
        {
            vector<Check> checks;
            for (auto & row : table_rows()) {
                string id = "TABLE_" + row.id;
                checks.push_back({"tables." + row.id, {id, "AG23E", "AG23E_X"},
                    "forbidden submatrix " + row.id + ": si(M([I|D|P])/" + to_string(row.contract_hint) + ") has an AG(2,3)\\e minor",
                    [&cat, id] {
                        // the target must agree with the second stored copy of AG(2,3)\e
                        auto target = cat.matroid("AG23E");
                        if (! is_isomorphic(target, cat.matroid("AG23E_X")))
                            return Outcome{false, "catalog AG23E disagrees with AG23E_X"};
                        auto e = cat.get(id);
                        return minor_outcome(e.matroid(gf3), target, e.hint);
                    }});
            }
            return checks;
        }

        auto dyadic_suite(const Catalog & cat) -> vector<Check>
        {
            return {
                {"dyadic.pi4_cross_field", {"PI4"}, "[I4|D4|T1] over GF(3) and GF(5) are isomorphic",
                    [&cat] { return iso_outcome(cat.matroid("PI4", gf3), cat.matroid("PI4", gf5)); }},
                {"dyadic.omega5_cross_field", {"OMEGA5"}, "[I5|D5|T3] over GF(3) and GF(5) are isomorphic",
                    [&cat] { return iso_outcome(cat.matroid("OMEGA5", gf3), cat.matroid("OMEGA5", gf5)); }},
                {"dyadic.sigma3_dowling3", {"SIGMA3", "DOWLING3"}, "[I3|D3|T2] is the rank-3 ternary Dowling geometry",
                    [&cat] { return iso_outcome(cat.matroid("SIGMA3"), cat.matroid("DOWLING3")); }},
                {"dyadic.pi5_clique_block", {"PI5", "MK6"}, "the [I5|D5] block of PI5 is M(K6)",
                    [&cat] {
                        auto pi5 = cat.matroid("PI5");
                        auto mk6 = cat.matroid("MK6");
                        LabelSet block(pi5.labels().begin(), pi5.labels().begin() + std::min<size_t>(15, pi5.size()));
                        return iso_outcome(restrict_to(pi5, block), mk6);
                    }},
                {"dyadic.pi5_row_block", {"PI5", "PI4"}, "the columns of PI5 supported on the rows of T1 form [I4|D4|T1]",
                    [&cat] {
                        auto pi5 = cat.matroid("PI5");
                        return iso_outcome(restrict_to(pi5, supported_on(pi5, 4)), cat.matroid("PI4"));
                    }}};
        }

        auto signedgraphic_suite(const Catalog & cat) -> vector<Check>
        {
            return {
                {"signedgraphic.pi4_in_dowling4", {"PI4", "DOWLING4"}, "PI4 is not a restriction of the rank-4 Dowling geometry",
                    [&cat] { return none_outcome(cat.matroid("PI4"), cat.matroid("DOWLING4")); }},
                {"signedgraphic.sigma4_in_dowling4", {"SIGMA4", "DOWLING4"}, "SIGMA4 is not a restriction of the rank-4 Dowling geometry",
                    [&cat] { return none_outcome(cat.matroid("SIGMA4"), cat.matroid("DOWLING4")); }},
                {"signedgraphic.omega5_in_dowling5", {"OMEGA5", "DOWLING5"}, "OMEGA5 is not a restriction of the rank-5 Dowling geometry",
                    [&cat] { return none_outcome(cat.matroid("OMEGA5"), cat.matroid("DOWLING5")); }}};
        }

        auto nearreg_suite(const Catalog & cat) -> vector<Check>
        {
            return {
                {"nearreg.f7_conforming", {"F7MINUS_CONFORMING", "F7MINUS"}, "the conforming non-Fano representation is F7-",
                    [&cat] { return iso_outcome(cat.matroid("F7MINUS_CONFORMING"), cat.matroid("F7MINUS")); }},
                {"nearreg.f7_column_scaling", {"F7_COLUMN", "F7MINUS_CONFORMING", "F7MINUS"},
                    "[I3|D3|(1,1,-1)] equals the conforming F7- representation up to column scaling",
                    [&cat] {
                        auto u = universal_matroid(cat.get("F7_COLUMN").gf(gf3), 3);
                        auto conf = cat.get("F7MINUS_CONFORMING").gf(gf3);
                        if (u.rep().rows() != conf.rows() || u.rep().cols() != conf.cols())
                            return Outcome{false, "shapes differ"};
                        for (size_t c = 0; c < conf.cols(); ++c) {
                            auto a = u.rep().column(c), b = conf.column(c);
                            auto neg = b;
                            for (auto & x : neg)
                                x = Residue((3 - x) % 3);
                            if (a != b && a != neg)
                                return Outcome{false, "column " + std::to_string(c) + " is not a scalar multiple"};
                        }
                        return iso_outcome(u, cat.matroid("F7MINUS"));
                    }},
                {"nearreg.contract_all_ones", {"TABLE_A", "F7MINUS"}, "contracting the P column of [I4|D4|(1,1,1,1)] leaves an F7- restriction",
                    [&cat] {
                        auto m = cat.matroid("TABLE_A");
                        Label p = m.labels().back();
                        return restriction_outcome(cat.matroid("F7MINUS"), simplify(contract(m, {p})));
                    }},
                {"nearreg.f7_pair", {"F7_PAIR", "F7MINUS"}, "[I4|D4|P] has an F7- minor for the two-column block",
                    [&cat] {
                        auto p = cat.get("F7_PAIR").gf(gf3);
                        return minor_outcome(universal_matroid(p, p.rows()), cat.matroid("F7MINUS"), std::nullopt);
                    }},
                {"nearreg.f7_triangle", {"F7_TRIANGLE", "F7MINUS"}, "[I3|D3|P] has an F7- minor for the three-column block",
                    [&cat] {
                        auto p = cat.get("F7_TRIANGLE").gf(gf3);
                        return minor_outcome(universal_matroid(p, p.rows()), cat.matroid("F7MINUS"), std::nullopt);
                    }},
                {"nearreg.f7_in_dowling3", {"F7MINUS", "DOWLING3"}, "F7- is a restriction of the rank-3 Dowling geometry",
                    [&cat] { return restriction_outcome(cat.matroid("F7MINUS"), cat.matroid("DOWLING3")); }},
                {"nearreg.t1_4_cross_field", {"T1_4"}, "T_4^1 over GF(3) and GF(5) are isomorphic",
                    [&cat] { return iso_outcome(cat.matroid("T1_4", gf3), cat.matroid("T1_4", gf5)); }}};
        }

        auto classify_check(const Catalog & cat, const string & id, Verdict expected) -> Check
        {
            string lower = id;
            std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char ch) { return char(std::tolower(ch)); });
            return {"templates.classify_" + lower, {id}, "classifier verdict " + to_string(expected) + " with a certificate that re-verifies",
                [&cat, id, expected] {
                    auto c = classify_Y_template(cat.get(id).gf(gf3));
                    auto check = verify_certificate(c);
                    string w = to_string(c.verdict);
                    if (c.forbidden)
                        w += " pattern " + c.forbidden->pattern.id + " witness " + to_string(c.forbidden->witness);
                    if (c.embedding)
                        w += " in T" + std::to_string(c.embedding->t_index);
                    if (! check)
                        w += " certificate rejected: " + check.reason;
                    return Outcome{c.verdict == expected && check.ok, w};
                }};
        }

        auto templates_suite(const Catalog & cat) -> vector<Check>
        {
            return {
                {"templates.check_min_respects", {"AG23E_PRE"}, "the 4x9 matrix respects PHI_Y0 with Y0 = {9}",
                    [&cat] {
                        auto r = respects(cat.get("AG23E_PRE").gf(gf3), Placement{{}, {}, {8}, {}, {}}, named_template("PHI_Y0"));
                        return Outcome{r.ok, r.ok ? "respects" : r.diagnostic};
                    }},
                {"templates.check_min_contract", {"AG23E_PRE", "AG23E"}, "contracting element 9 of the 4x9 matrix gives AG(2,3)\\e",
                    [&cat] {
                        auto m = cat.matroid("AG23E_PRE");
                        return iso_outcome(contract(m, {m.labels().back()}), cat.matroid("AG23E"));
                    }},
                {"templates.matrix2_respects", {"AG23E_X"}, "the 3x8 matrix respects PHI_X with X the top row",
                    [&cat] {
                        auto r = respects(cat.get("AG23E_X").gf(gf3), Placement{{0}, {}, {}, {}, {}}, named_template("PHI_X"));
                        return Outcome{r.ok, r.ok ? "respects" : r.diagnostic};
                    }},
                {"templates.matrix2_iso", {"AG23E_X", "AG23E"}, "the 3x8 matrix represents AG(2,3)\\e",
                    [&cat] { return iso_outcome(cat.matroid("AG23E_X"), cat.matroid("AG23E")); }},
                classify_check(cat, "T1", Verdict::pi),
                classify_check(cat, "T2", Verdict::sigma),
                classify_check(cat, "T3", Verdict::omega),
                classify_check(cat, "FORBIDDEN_A", Verdict::contains_ag23e),
                classify_check(cat, "TYPE3_COLUMN", Verdict::signed_graphic)};
        }
    }

    auto suite_ids() -> vector<string>
    {
        return {"tables", "dyadic", "signedgraphic", "nearreg", "templates"};
    }

    auto run_suite(const string & id, const Catalog & catalog) -> SuiteReport
    {
        if (id == "tables")
            return run_checks(id, tables_suite(catalog));
        if (id == "dyadic")
            return run_checks(id, dyadic_suite(catalog));
        if (id == "signedgraphic")
            return run_checks(id, signedgraphic_suite(catalog));
        if (id == "nearreg")
            return run_checks(id, nearreg_suite(catalog));
        if (id == "templates")
            return run_checks(id, templates_suite(catalog));
        throw std::invalid_argument("unknown suite " + id);
    }

    auto write_report(std::ostream & out, const SuiteReport & r, bool stable) -> void
    {
        for (auto & c : r.checks)
            out << c.id << '\t' << (c.pass ? "pass" : "fail") << '\t' << (stable ? 0 : c.millis) << '\t'
                << c.witness << '\t' << c.anchor << '\n';
    }

    auto write_summary(std::ostream & out, const SuiteReport & r) -> void
    {
        out << "suite " << r.suite << ": " << r.pass_count() << "/" << r.checks.size() << " checks pass\n";
        for (auto & c : r.checks) {
            out << "  " << (c.pass ? "PASS " : "FAIL ") << c.id << " (" << c.millis << " ms)";
            if (! c.pass)
                out << ": " << c.witness;
            out << "\n";
        }
        if (auto f = r.first_failure())
            out << "first failing check: " << f->id << "\n";
    }
}
