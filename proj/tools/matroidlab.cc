/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <matroidlab/constructions.hh>
#include <matroidlab/suites.hh>
#include <matroidlab/ytemplate.hh>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using std::cerr;
using std::cout;
using std::size_t;
using std::string;
using std::vector;

using namespace matroidlab;

namespace
{
    /// Usage and parse problems; exit code 2.
    class UsageError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    struct Loaded
    {
        LinearMatroid matroid;
        GFMatrix matrix;
        std::optional<LabelSet> hint;
    };

    /// A path to a matrix file, or a catalog id with an optional @3 or @5.
    auto load(const string & source, const Catalog & cat, FieldChar default_field) -> Loaded
    {
        if (std::filesystem::is_regular_file(source)) {
            auto m = load_gfmat(source);
            return {vector_matroid(m), m, std::nullopt};
        }
        string id = source;
        FieldChar f = default_field;
        if (auto at = source.rfind('@'); at != string::npos) {
            id = source.substr(0, at);
            string p = source.substr(at + 1);
            if (p == "3")
                f = FieldChar::gf3;
            else if (p == "5")
                f = FieldChar::gf5;
            else
                throw UsageError("bad field suffix in '" + source + "'");
        }
        auto e = cat.get(id);
        return {e.matroid(f), e.gf(f), e.hint};
    }

    auto parse_labels(const string & list) -> LabelSet
    {
        LabelSet out;
        std::stringstream ss(list);
        string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty())
                continue;
            size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(item, &used);
            }
            catch (const std::exception &) {
                throw UsageError("bad label '" + item + "'");
            }
            if (used != item.size())
                throw UsageError("bad label '" + item + "'");
            out.push_back(v);
        }
        return out;
    }

    auto field_of(int p) -> FieldChar
    {
        try {
            return field_from_int(p);
        }
        catch (const std::invalid_argument & e) {
            throw UsageError(e.what());
        }
    }

    auto apply_overrides(Catalog & cat, const vector<string> & overrides) -> void
    {
        for (auto & o : overrides) {
            auto eq = o.find('=');
            if (eq == string::npos)
                throw UsageError("override must be ID=path, got '" + o + "'");
            auto m = load_gfmat(o.substr(eq + 1));
            cat.override_entry(o.substr(0, eq), to_int_matrix(m));
        }
    }

    auto expect_exit(bool found, const string & expect) -> int
    {
        return found == (expect == "yes") ? 0 : 1;
    }

    auto describe(const YTemplateClass & c) -> string
    {
        std::ostringstream out;
        out << "verdict " << to_string(c.verdict) << "\n";
        out << "normal form (" << (c.norm.appended ? "zero-sum row appended" : "rows already sum to zero") << ")\n"
            << to_string(c.norm.normal) << "\n";
        if (c.forbidden) {
            auto & f = *c.forbidden;
            out << "pattern " << f.pattern.id << " (base " << f.pattern.base << ")\n";
            out << "rows " << to_string(LabelSet(f.occ.rows.begin(), f.occ.rows.end()))
                << " cols " << to_string(LabelSet(f.occ.cols.begin(), f.occ.cols.end()))
                << " scalars " << to_string(LabelSet(f.occ.scalars.begin(), f.occ.scalars.end())) << "\n";
            for (auto & row : table_rows())
                if (row.id == f.pattern.base)
                    out << "hint " << to_string(row.contract_hint) << "\n";
            out << "witness " << to_string(f.witness) << "\n";
        }
        if (c.signed_graphic) {
            auto & s = *c.signed_graphic;
            out << "removed row " << (s.removed_row ? std::to_string(*s.removed_row) : "none")
                << ", special row " << (s.special_row ? std::to_string(*s.special_row) : "none") << "\n";
            out << "frame matrix\n" << to_string(s.frame) << "\n";
        }
        if (c.embedding) {
            auto & e = *c.embedding;
            out << "submatrix of T" << e.t_index << " after removing row "
                << (e.removed_row ? std::to_string(*e.removed_row) : "none") << "\n";
            out << "rows " << to_string(LabelSet(e.occ.rows.begin(), e.occ.rows.end()))
                << " cols " << to_string(LabelSet(e.occ.cols.begin(), e.occ.cols.end()))
                << " scalars " << to_string(LabelSet(e.occ.scalars.begin(), e.occ.scalars.end())) << "\n";
        }
        for (auto & d : c.diagnostics)
            out << "note: " << d << "\n";
        return out.str();
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"matroidlab: exact matroid computations over GF(3) and GF(5)"};
    app.require_subcommand(1);

    int field = 3;
    string emit, id;
    auto named_cmd = app.add_subcommand("named", "write a catalog matrix");
    named_cmd->add_option("id", id, "catalog id")->required();
    named_cmd->add_option("--field", field, "3 or 5");
    named_cmd->add_option("--emit", emit, "output path (default stdout)");

    string m_src, n_src, contract_list, expect = "yes";
    auto minor_cmd = app.add_subcommand("minor", "search for a minor");
    minor_cmd->add_option("-m", m_src, "matrix file or catalog id")->required();
    minor_cmd->add_option("-n", n_src, "target catalog id or file")->required();
    minor_cmd->add_option("--contract", contract_list, "comma-separated contraction hint");
    minor_cmd->add_option("--field", field, "field for catalog ids");
    minor_cmd->add_option("--expect", expect, "yes or no")->check(CLI::IsMember({"yes", "no"}));

    string suite, report_path;
    vector<string> overrides;
    bool stable = false;
    auto verify_cmd = app.add_subcommand("verify", "run verification suites");
    verify_cmd->add_option("--suite", suite, "tables, dyadic, signedgraphic, nearreg, templates or all")->required();
    verify_cmd->add_option("--report", report_path, "machine-readable report path, - for stdout");
    verify_cmd->add_option("--override", overrides, "replace a catalog matrix: ID=path");
    verify_cmd->add_flag("--stable", stable, "write 0 for all timings");

    string p_src;
    auto classify_cmd = app.add_subcommand("classify", "classify the Y-template of a block P");
    classify_cmd->add_option("-p", p_src, "matrix file or catalog id")->required();

    string a_src, b_src;
    auto iso_cmd = app.add_subcommand("iso", "isomorphism test");
    auto embed_cmd = app.add_subcommand("embed", "restriction embedding test");
    for (auto * cmd : {iso_cmd, embed_cmd}) {
        cmd->add_option("a", a_src, "first matrix file or catalog id")->required();
        cmd->add_option("b", b_src, "second matrix file or catalog id")->required();
        cmd->add_option("--field", field, "field for catalog ids");
        cmd->add_option("--expect", expect, "yes or no")->check(CLI::IsMember({"yes", "no"}));
    }

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Catalog cat;
        auto f = field_of(field);

        if (*named_cmd) {
            auto m = cat.get(id).gf(f);
            if (emit.empty())
                write_gfmat(cout, m);
            else
                save_gfmat(emit, m);
            return 0;
        }

        if (*minor_cmd) {
            auto m = load(m_src, cat, f);
            auto n = load(n_src, cat, f);
            std::optional<LabelSet> hint;
            if (! contract_list.empty())
                hint = parse_labels(contract_list);
            auto w = has_minor(m.matroid, n.matroid, hint);
            if (w && ! verify_minor_witness(m.matroid, n.matroid, *w)) {
                cerr << "witness failed verification\n";
                return 1;
            }
            if (w)
                cout << "found\n" << to_string(*w) << "\n";
            else
                cout << "no minor\n";
            return expect_exit(w.has_value(), expect);
        }

        if (*verify_cmd) {
            apply_overrides(cat, overrides);
            vector<string> suites;
            if (suite == "all")
                suites = suite_ids();
            else {
                auto ids = suite_ids();
                if (std::find(ids.begin(), ids.end(), suite) == ids.end())
                    throw UsageError("unknown suite " + suite);
                suites = {suite};
            }
            std::ofstream file;
            std::ostream * report = nullptr;
            if (report_path == "-")
                report = &cout;
            else if (! report_path.empty()) {
                file.open(report_path);
                if (! file)
                    throw UsageError("cannot write " + report_path);
                report = &file;
            }
            bool all = true;
            for (auto & s : suites) {
                auto r = run_suite(s, cat);
                if (report_path != "-")
                    write_summary(cout, r);
                if (report)
                    write_report(*report, r, stable);
                if (! r.passed() && all) {
                    all = false;
                    cerr << "first failing check: " << r.first_failure()->id << "\n";
                }
            }
            return all ? 0 : 1;
        }

        if (*classify_cmd) {
            auto p = load(p_src, cat, FieldChar::gf3);
            if (p.matrix.field() != FieldChar::gf3)
                throw UsageError("classify needs a matrix over GF(3)");
            auto c = classify_Y_template(p.matrix);
            auto check = verify_certificate(c);
            cout << describe(c);
            if (! check) {
                cout << "certificate rejected: " << check.reason << "\n";
                return 1;
            }
            cout << "certificate verified\n";
            return 0;
        }

        if (*iso_cmd || *embed_cmd) {
            auto a = load(a_src, cat, f);
            auto b = load(b_src, cat, f);
            bool iso = bool(*iso_cmd);
            auto g = iso ? is_isomorphic(a.matroid, b.matroid) : is_restriction_of(a.matroid, b.matroid);
            if (g) {
                bool ok = iso ? verify_isomorphism(a.matroid, b.matroid, *g) : verify_restriction(a.matroid, b.matroid, *g);
                if (! ok) {
                    cerr << "map failed verification\n";
                    return 1;
                }
                cout << (iso ? "isomorphic\n" : "embeds\n") << to_string(*g) << "\n";
            }
            else
                cout << "none\n";
            return expect_exit(g.has_value(), expect);
        }
    }
    catch (const UsageError & e) {
        cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const ParseError & e) {
        cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::invalid_argument & e) {
        // unknown catalog ids, bad labels and bad placements land here
        cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::out_of_range & e) {
        cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
