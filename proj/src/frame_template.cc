/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <matroidlab/frame_template.hh>

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

using std::size_t;
using std::string;
using std::vector;

namespace matroidlab
{
    namespace
    {
        const auto gf3 = FieldChar::gf3;

        auto full_space(size_t n) -> GFMatrix
        {
            return GFMatrix::identity(gf3, n);
        }

        auto zero_space(size_t n) -> GFMatrix
        {
            return GFMatrix(gf3, 0, n);
        }

        auto make(Gamma g, size_t c, size_t x, size_t y0, size_t y1) -> FrameTemplate
        {
            FrameTemplate t;
            t.gamma = g;
            t.c = c;
            t.x = x;
            t.y0 = y0;
            t.y1 = y1;
            t.a1 = GFMatrix(gf3, x, c + y0 + y1);
            t.delta_basis = zero_space(c + y0 + y1);
            t.lambda_basis = zero_space(x);
            return t;
        }
    }

    auto FrameTemplate::validate() const -> void
    {
        auto check = [](bool ok, const char * what) {
            if (! ok)
                throw std::invalid_argument(string("frame template: ") + what);
        };
        check(a1.field() == gf3 && delta_basis.field() == gf3 && lambda_basis.field() == gf3, "blocks must be over GF(3)");
        check(a1.rows() == x && a1.cols() == cy_count(), "A1 must be |X| x |C u Y0 u Y1|");
        check(delta_basis.cols() == cy_count(), "delta basis has the wrong width");
        check(lambda_basis.cols() == x, "lambda basis has the wrong width");
        check(rank(delta_basis) == delta_basis.rows(), "delta basis rows are dependent");
        check(rank(lambda_basis) == lambda_basis.rows(), "lambda basis rows are dependent");
    }

    auto named_template_ids() -> vector<string>
    {
        return {"PHI2", "PHI_C", "PHI_X", "PHI_Y0", "PHI_CX", "PHI_CX2"};
    }

    auto named_template(const string & id) -> FrameTemplate
    {
        if (id == "PHI2")
            return make(Gamma::plus_minus, 0, 0, 0, 0);
        if (id == "PHI_C") {
            auto t = make(Gamma::trivial, 1, 0, 0, 0);
            t.delta_basis = full_space(1);
            return t;
        }
        if (id == "PHI_X") {
            auto t = make(Gamma::trivial, 0, 1, 0, 0);
            t.lambda_basis = full_space(1);
            return t;
        }
        if (id == "PHI_Y0") {
            auto t = make(Gamma::trivial, 0, 0, 1, 0);
            t.delta_basis = full_space(1);
            return t;
        }
        if (id == "PHI_CX" || id == "PHI_CX2") {
            auto t = make(Gamma::trivial, 1, 1, 0, 0);
            t.a1.set(0, 0, id == "PHI_CX" ? 1 : -1);
            t.delta_basis = full_space(1);
            t.lambda_basis = full_space(1);
            return t;
        }
        throw std::invalid_argument("unknown template id " + id);
    }

    auto in_row_space(const GFMatrix & basis, const vector<Residue> & v) -> bool
    {
        if (v.size() != basis.cols())
            throw std::invalid_argument("in_row_space: length mismatch");
        if (std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; }))
            return true;
        vector<long long> row(v.begin(), v.end());
        return rank(append_row(basis, row)) == rank(basis);
    }

    auto is_gamma_frame_column(const vector<Residue> & v, Gamma g) -> bool
    {
        auto s = support(v);
        if (s.empty())
            return true;
        if (s.size() > 2)
            return false;
        if (s.size() == 1)
            return v[s[0]] == 1;
        Residue a = v[s[0]], b = v[s[1]];
        // one entry is 1 and the other is -gamma
        auto fits = [g](Residue other) { return other == 2 || (g == Gamma::plus_minus && other == 1); };
        return (a == 1 && fits(b)) || (b == 1 && fits(a));
    }

    auto is_gamma_frame(const GFMatrix & a, Gamma g) -> bool
    {
        if (a.field() != gf3)
            return false;
        for (size_t c = 0; c < a.cols(); ++c)
            if (! is_gamma_frame_column(a.column(c), g))
                return false;
        return true;
    }

    namespace
    {
        struct Split
        {
            vector<size_t> other_rows;  ///< B - X
            vector<size_t> cy;          ///< C, Y0, Y1 in template order
            vector<size_t> rest;        ///< columns outside C, Y0, Y1, Z
        };

        auto split(const GFMatrix & a, const Placement & w) -> Split
        {
            auto fail = [](const string & why) { throw std::invalid_argument("malformed placement: " + why); };

            std::set<size_t> rows;
            for (auto r : w.x_rows) {
                if (r >= a.rows())
                    fail("row index out of range");
                if (! rows.insert(r).second)
                    fail("row " + std::to_string(r) + " listed twice");
            }

            std::set<size_t> cols;
            Split s;
            for (auto * group : {&w.c_cols, &w.y0_cols, &w.y1_cols, &w.z_cols})
                for (auto c : *group) {
                    if (c >= a.cols())
                        fail("column index out of range");
                    if (! cols.insert(c).second)
                        fail("column " + std::to_string(c) + " placed twice");
                }
            for (auto * group : {&w.c_cols, &w.y0_cols, &w.y1_cols})
                s.cy.insert(s.cy.end(), group->begin(), group->end());
            for (size_t r = 0; r < a.rows(); ++r)
                if (! rows.count(r))
                    s.other_rows.push_back(r);
            for (size_t c = 0; c < a.cols(); ++c)
                if (! cols.count(c))
                    s.rest.push_back(c);
            return s;
        }

        auto sizes_match(const Placement & w, const FrameTemplate & t) -> bool
        {
            return w.x_rows.size() == t.x && w.c_cols.size() == t.c && w.y0_cols.size() == t.y0 && w.y1_cols.size() == t.y1;
        }
    }

    auto respects(const GFMatrix & a, const Placement & where, const FrameTemplate & t) -> RespectResult
    {
        t.validate();
        if (a.field() != gf3)
            throw std::invalid_argument("respects: templates are ternary");
        if (! sizes_match(where, t))
            throw std::invalid_argument("malformed placement: set sizes differ from the template");
        auto s = split(a, where);

        auto fail = [](string why) { return RespectResult{false, std::move(why)}; };

        for (size_t i = 0; i < t.x; ++i)
            for (size_t j = 0; j < s.cy.size(); ++j)
                if (a(where.x_rows[i], s.cy[j]) != t.a1(i, j))
                    return fail("A1 block mismatch at (" + std::to_string(i) + ", " + std::to_string(j) + ")");

        for (auto z : where.z_cols) {
            for (auto r : where.x_rows)
                if (a(r, z) != 0)
                    return fail("Z column " + std::to_string(z) + " nonzero on X");
            size_t nonzero = 0;
            bool unit = true;
            for (auto r : s.other_rows)
                if (a(r, z) != 0) {
                    ++nonzero;
                    unit = unit && a(r, z) == 1;
                }
            if (nonzero > 1 || ! unit)
                return fail("Z column " + std::to_string(z) + " is neither unit nor zero");
        }

        for (auto c : s.rest) {
            vector<Residue> v;
            for (auto r : s.other_rows)
                v.push_back(a(r, c));
            if (! is_gamma_frame_column(v, t.gamma))
                return fail("Γ-frame violated in column " + std::to_string(c));
        }

        for (auto c : s.rest) {
            vector<Residue> v;
            for (auto r : where.x_rows)
                v.push_back(a(r, c));
            if (! in_row_space(t.lambda_basis, v))
                return fail("Λ membership violated in column " + std::to_string(c));
        }

        for (auto r : s.other_rows) {
            vector<Residue> v;
            for (auto c : s.cy)
                v.push_back(a(r, c));
            if (! in_row_space(t.delta_basis, v))
                return fail("Δ membership violated in row " + std::to_string(r));
        }

        return RespectResult{true, ""};
    }

    auto conforms_step(const GFMatrix & a, const Placement & where, const std::map<size_t, size_t> & z_to_y1) -> GFMatrix
    {
        split(a, where);
        std::set<size_t> zs(where.z_cols.begin(), where.z_cols.end());
        std::set<size_t> y1s(where.y1_cols.begin(), where.y1_cols.end());
        GFMatrix out = a;
        const auto & ft = field_tables(a.field());
        for (auto [z, y] : z_to_y1) {
            if (! zs.count(z))
                throw std::invalid_argument("conforms_step: column " + std::to_string(z) + " is not in Z");
            if (! y1s.count(y))
                throw std::invalid_argument("conforms_step: column " + std::to_string(y) + " is not in Y1");
            for (size_t r = 0; r < a.rows(); ++r)
                out.set(r, z, ft.add(a(r, z), a(r, y)));
        }
        return out;
    }

    auto conforming_matroid(const GFMatrix & a, const Placement & where) -> LinearMatroid
    {
        split(a, where);
        auto m = vector_matroid(a);
        LabelSet c(where.c_cols.begin(), where.c_cols.end());
        LabelSet y1(where.y1_cols.begin(), where.y1_cols.end());
        return delete_elements(contract(m, c), y1);
    }

    namespace
    {
        auto expect_line(std::istream & in, const string & what) -> string
        {
            string line;
            while (std::getline(in, line)) {
                if (! line.empty() && line.back() == '\r')
                    line.pop_back();
                if (! line.empty() && line[0] != '#')
                    return line;
            }
            throw ParseError("template: unexpected end of input, expected " + what);
        }

        auto parse_count(const string & token, const string & key) -> size_t
        {
            if (token.compare(0, key.size() + 1, key + "=") != 0)
                throw ParseError("template: expected " + key + "=<k>, got '" + token + "'");
            string digits = token.substr(key.size() + 1);
            if (digits.empty() || ! std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
                throw ParseError("template: bad count in '" + token + "'");
            return size_t(std::stoul(digits));
        }
    }

    auto read_template(std::istream & in) -> FrameTemplate
    {
        if (expect_line(in, "header") != "template")
            throw ParseError("template: missing 'template' header");

        FrameTemplate t;
        string g = expect_line(in, "gamma line");
        if (g == "gamma {1}")
            t.gamma = Gamma::trivial;
        else if (g == "gamma {1,-1}")
            t.gamma = Gamma::plus_minus;
        else
            throw ParseError("template: bad gamma line '" + g + "'");

        std::istringstream sets(expect_line(in, "sets line"));
        string word, c, x, y0, y1, extra;
        if (! (sets >> word >> c >> x >> y0 >> y1) || word != "sets" || (sets >> extra))
            throw ParseError("template: bad sets line");
        t.c = parse_count(c, "C");
        t.x = parse_count(x, "X");
        t.y0 = parse_count(y0, "Y0");
        t.y1 = parse_count(y1, "Y1");

        auto block = [&](const string & key) {
            if (expect_line(in, key) != key)
                throw ParseError("template: expected '" + key + "'");
            return read_gfmat(in);
        };
        t.a1 = block("A1");
        t.delta_basis = block("delta");
        t.lambda_basis = block("lambda");
        try {
            t.validate();
        }
        catch (const std::invalid_argument & e) {
            throw ParseError(e.what());
        }
        return t;
    }

    auto write_template(std::ostream & out, const FrameTemplate & t) -> void
    {
        out << "template\n";
        out << "gamma " << (t.gamma == Gamma::trivial ? "{1}" : "{1,-1}") << "\n";
        out << "sets C=" << t.c << " X=" << t.x << " Y0=" << t.y0 << " Y1=" << t.y1 << "\n";
        out << "A1\n";
        write_gfmat(out, t.a1);
        out << "delta\n";
        write_gfmat(out, t.delta_basis);
        out << "lambda\n";
        write_gfmat(out, t.lambda_basis);
    }

    auto load_template(const string & path) -> FrameTemplate
    {
        std::ifstream in(path);
        if (! in)
            throw ParseError("cannot open '" + path + "'");
        return read_template(in);
    }

    auto save_template(const string & path, const FrameTemplate & t) -> void
    {
        std::ofstream out(path);
        if (! out)
            throw std::runtime_error("cannot write '" + path + "'");
        write_template(out, t);
    }
}
