/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <matroidlab/constructions.hh>

#include <charconv>
#include <functional>

using std::size_t;
using std::string;
using std::vector;

namespace matroidlab
{
    auto identity_int(size_t n) -> IntMatrix
    {
        IntMatrix m(n, n);
        for (size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    auto build_D(size_t r) -> IntMatrix
    {
        IntMatrix m(r, r < 2 ? 0 : r * (r - 1) / 2);
        size_t c = 0;
        for (size_t i = 0; i < r; ++i)
            for (size_t j = i + 1; j < r; ++j) {
                m(i, c) = 1;
                m(j, c) = -1;
                ++c;
            }
        return m;
    }

    auto build_D(FieldChar f, size_t r) -> GFMatrix
    {
        return reduce(build_D(r), f);
    }

    auto hconcat(const IntMatrix & a, const IntMatrix & b) -> IntMatrix
    {
        if (a.rows != b.rows)
            throw std::invalid_argument("hconcat: row counts differ");
        IntMatrix m(a.rows, a.cols + b.cols);
        for (size_t r = 0; r < a.rows; ++r) {
            for (size_t c = 0; c < a.cols; ++c)
                m(r, c) = a(r, c);
            for (size_t c = 0; c < b.cols; ++c)
                m(r, a.cols + c) = b(r, c);
        }
        return m;
    }

    auto vconcat(const IntMatrix & a, const IntMatrix & b) -> IntMatrix
    {
        if (a.cols != b.cols)
            throw std::invalid_argument("vconcat: column counts differ");
        IntMatrix m(a.rows + b.rows, a.cols);
        std::copy(a.entries.begin(), a.entries.end(), m.entries.begin());
        std::copy(b.entries.begin(), b.entries.end(), m.entries.begin() + a.entries.size());
        return m;
    }

    auto append_zero_sum_row(const IntMatrix & p) -> IntMatrix
    {
        IntMatrix row(1, p.cols);
        for (size_t c = 0; c < p.cols; ++c) {
            long long s = 0;
            for (size_t r = 0; r < p.rows; ++r)
                s += p(r, c);
            // keep entries in signed ternary form
            long long v = ((-s) % 3 + 3) % 3;
            row(0, c) = v == 2 ? -1 : v;
        }
        return vconcat(p, row);
    }

    auto universal_int(const IntMatrix & p, size_t r) -> IntMatrix
    {
        if (r < p.rows)
            throw std::invalid_argument("universal matroid: rank " + std::to_string(r) + " is below the row count of P");
        IntMatrix padded(r, p.cols);
        for (size_t i = 0; i < p.rows; ++i)
            for (size_t c = 0; c < p.cols; ++c)
                padded(i, c) = p(i, c);
        return hconcat(hconcat(identity_int(r), build_D(r)), padded);
    }

    auto universal_matroid(const GFMatrix & p, size_t r) -> LinearMatroid
    {
        return vector_matroid(reduce(universal_int(to_int_matrix(p), r), p.field()));
    }

    auto clique(size_t n, FieldChar f) -> LinearMatroid
    {
        if (n < 1)
            throw std::invalid_argument("clique: n must be positive");
        return vector_matroid(reduce(universal_int(IntMatrix(0, 0), n - 1), f));
    }

    namespace
    {
        auto dowling_int(size_t r) -> IntMatrix
        {
            IntMatrix dp = build_D(r);
            for (auto & x : dp.entries)
                if (x < 0)
                    x = 1;
            return hconcat(hconcat(identity_int(r), build_D(r)), dp);
        }

        auto t_r_1_int(size_t r) -> IntMatrix
        {
            if (r < 2)
                throw std::invalid_argument("T_r^1 needs r >= 2");
            IntMatrix q(r, r - 1);
            for (size_t c = 0; c + 1 < r; ++c) {
                q(0, c) = 1;
                q(c + 1, c) = 1;
            }
            return hconcat(hconcat(identity_int(r), build_D(r)), q);
        }
    }

    auto dowling(size_t r, FieldChar f) -> LinearMatroid
    {
        if (r < 1)
            throw std::invalid_argument("dowling: r must be positive");
        return vector_matroid(reduce(dowling_int(r), f));
    }

    auto t_r_1(size_t r, FieldChar f) -> LinearMatroid
    {
        return vector_matroid(reduce(t_r_1_int(r), f));
    }

    auto NamedEntry::gf(FieldChar f) const -> GFMatrix
    {
        return reduce(matrix, f);
    }

    auto NamedEntry::matroid(FieldChar f) const -> LinearMatroid
    {
        if (labels.empty())
            return vector_matroid(gf(f));
        return LinearMatroid(gf(f), labels);
    }

    namespace
    {
        const IntMatrix t1 = {{-1, 1, 0}, {-1, 1, 0}, {1, 0, 1}, {1, 0, 1}};
        const IntMatrix t2 = {{-1, 1, 1}, {1, -1, 1}, {1, 1, -1}};
        const IntMatrix t3 = {{-1, -1, 0}, {-1, -1, 0}, {1, 0, -1}, {1, 0, -1}, {0, 1, 1}};

        // The 4 x 9 matrix whose contraction by its last column is AG(2,3)\e.
        const IntMatrix ag23e_pre = {
            {0, 0, 0, 0, 0, 1, 1, 1, 1},
            {1, 0, 0, 1, 1, 0, 0, 0, 1},
            {0, 1, 0, -1, 0, 0, -1, 0, 1},
            {0, 0, 1, 0, -1, 0, 0, -1, 1}};

        const IntMatrix ag23e = {
            {1, 0, 0, 1, 1, 1, 1, 1},
            {0, 1, 0, -1, 0, 1, -1, 1},
            {0, 0, 1, 0, -1, 1, 1, -1}};

        // Same matroid, top row playing the role of X over a {1}-frame block.
        const IntMatrix ag23e_x = {
            {0, 0, -1, 0, 1, 1, -1, 1},
            {1, 0, 1, 1, 1, 0, 0, 1},
            {0, 1, 0, -1, 0, 1, 1, -1}};

        const IntMatrix f7minus = {
            {1, 0, 0, 1, 1, 0, 1},
            {0, 1, 0, 1, 0, 1, 1},
            {0, 0, 1, 0, 1, 1, 1}};

        const IntMatrix f7minus_conforming = {
            {1, 0, 0, -1, -1, 0, 1},
            {0, 1, 0, 1, 0, 1, 1},
            {0, 0, 1, 0, 1, -1, -1}};

        const IntMatrix u24 = {{1, 0, 1, 1}, {0, 1, 1, -1}};

        // Blocks P for which [I | D | P] has a non-Fano minor.
        const IntMatrix f7_pair = {{1, 0}, {1, 0}, {0, 1}, {0, 1}};
        const IntMatrix f7_triangle = {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}};

        auto make_table() -> vector<TableRow>
        {
            return {
                {"A", {{1}, {1}, {1}, {1}}, {10}},
                {"B", {{1, 0}, {1, 0}, {1, 0}, {0, 1}, {0, 1}}, {15, 16}},
                {"C", {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {0, 18, 23}},
                {"D", {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 0, 0}, {0, 1, 1}}, {0, 15}},
                {"E", {{1, 0}, {1, 0}, {1, 1}, {0, 1}, {0, -1}, {0, -1}}, {0, 4, 22}},
                {"F", {{1, 0}, {1, 1}, {1, -1}, {0, 1}, {0, -1}}, {0, 16}},
                {"G", {{1, 0}, {1, 0}, {-1, 0}, {-1, 1}, {0, 1}, {0, -1}, {0, -1}}, {0, 1, 28, 29}},
                {"H", {{-1, 1}, {-1, -1}, {1, 0}, {1, 0}, {0, 1}, {0, -1}}, {0, 15, 22}},
                {"I", {{-1, 1}, {-1, -1}, {1, -1}, {1, 0}, {0, 1}}, {0, 16}},
                {"J", {{-1, 1, 1}, {-1, 1, 0}, {1, 1, 1}, {1, 0, 1}}, {0}},
                {"K", {{-1, 1, 1}, {-1, 1, 0}, {1, 0, 1}, {1, 0, 1}, {0, 1, 0}}, {0, 13}},
                {"L", {{-1, -1, 1}, {-1, 1, 1}, {1, -1, 1}, {1, 1, 0}}, {0}},
                {"M", {{-1, -1, 1}, {-1, 1, 1}, {1, -1, 0}, {1, 1, 1}}, {0}},
                {"N", {{-1, -1, 0}, {-1, -1, 0}, {1, 1, 1}, {1, 0, 1}, {0, 1, 1}}, {0, 17}},
                {"O", {{-1, 0}, {-1, -1}, {1, 1}, {1, 0}, {0, -1}, {0, 1}}, {0, 15, 22}}};
        }

        auto one_to(size_t n) -> LabelSet
        {
            LabelSet l;
            for (size_t i = 1; i <= n; ++i)
                l.push_back(Label(i));
            return l;
        }

        auto entry(string id, IntMatrix m, EntryKind k, string origin, LabelSet labels = {},
            std::optional<LabelSet> hint = std::nullopt) -> NamedEntry
        {
            return NamedEntry{std::move(id), std::move(m), k, std::move(origin), std::move(labels), std::move(hint)};
        }

        auto transpose_int(const IntMatrix & a) -> IntMatrix
        {
            IntMatrix t(a.cols, a.rows);
            for (size_t r = 0; r < a.rows; ++r)
                for (size_t c = 0; c < a.cols; ++c)
                    t(c, r) = a(r, c);
            return t;
        }

        /// Dual of [I | A]: [-A^T | I].
        auto standard_dual(const IntMatrix & m) -> IntMatrix
        {
            size_t r = m.rows, n = m.cols;
            IntMatrix a(r, n - r);
            for (size_t i = 0; i < r; ++i)
                for (size_t c = r; c < n; ++c)
                    a(i, c - r) = m(i, c);
            IntMatrix at = transpose_int(a);
            for (auto & x : at.entries)
                x = -x;
            return hconcat(at, identity_int(n - r));
        }

        auto parse_suffix(const string & id, const string & prefix, size_t & out) -> bool
        {
            if (id.size() <= prefix.size() || id.compare(0, prefix.size(), prefix) != 0)
                return false;
            const char * b = id.data() + prefix.size();
            const char * e = id.data() + id.size();
            auto [p, ec] = std::from_chars(b, e, out);
            return ec == std::errc() && p == e && *b != '0';
        }

        const size_t max_param = 12;
    }

    auto table_rows() -> const vector<TableRow> &
    {
        static const vector<TableRow> rows = make_table();
        return rows;
    }

    auto named(const string & id) -> NamedEntry
    {
        using K = EntryKind;
        if (id == "T1")
            return entry(id, t1, K::matrix, "block for PI<r>");
        if (id == "T2")
            return entry(id, t2, K::matrix, "block for SIGMA<r>");
        if (id == "T3")
            return entry(id, t3, K::matrix, "block for OMEGA<r>");
        if (id == "T2PLUS")
            return entry(id, append_zero_sum_row(t2), K::matrix, "T2 with its zero-sum row appended");
        if (id == "T3PLUS")
            return entry(id, append_zero_sum_row(t3), K::matrix, "T3 with its zero-sum row appended");
        if (id == "AG23E")
            return entry(id, ag23e, K::matroid, "AG(2,3) minus a point, 3 x 8 form", one_to(8));
        if (id == "AG23E_PRE")
            return entry(id, ag23e_pre, K::matroid, "4 x 9 form respecting Phi_Y0; contract 9 for AG(2,3)\\e", one_to(9));
        if (id == "AG23E_X")
            return entry(id, ag23e_x, K::matroid, "3 x 8 form respecting Phi_X", one_to(8));
        if (id == "AG23E_DUAL")
            return entry(id, standard_dual(ag23e), K::matroid, "dual of AG23E", one_to(8));
        if (id == "F7MINUS")
            return entry(id, f7minus, K::matroid, "non-Fano matroid, standard form");
        if (id == "F7MINUS_CONFORMING")
            return entry(id, f7minus_conforming, K::matroid, "non-Fano form respecting Phi_X and Phi_Y0");
        if (id == "F7MINUS_DUAL")
            return entry(id, standard_dual(f7minus), K::matroid, "dual of F7MINUS");
        if (id == "F7_PAIR")
            return entry(id, f7_pair, K::matrix, "two disjoint weight-2 columns of equal entries");
        if (id == "F7_TRIANGLE")
            return entry(id, f7_triangle, K::matrix, "three columns e_i + e_j");
        if (id == "U24")
            return entry(id, u24, K::matroid, "four points on a line");
        if (id == "F7_COLUMN")
            return entry(id, IntMatrix{{1}, {1}, {-1}}, K::matrix, "the column (1, 1, -1); [I3 | D3 | it] is non-Fano");
        if (id == "TYPE3_COLUMN")
            return entry(id, IntMatrix{{1}, {1}, {1}}, K::matrix, "a single type-3 column");

        for (auto & row : table_rows()) {
            if (id == "FORBIDDEN_" + row.id)
                return entry(id, row.matrix, K::matrix, "forbidden submatrix " + row.id, {}, row.contract_hint);
            if (id == "TABLE_" + row.id)
                return entry(id, universal_int(row.matrix, row.matrix.rows), K::matroid,
                    "[I | D | P] for forbidden submatrix " + row.id, {}, row.contract_hint);
        }

        size_t r = 0;
        if (parse_suffix(id, "MK", r) && r <= max_param + 1)
            return entry(id, universal_int(IntMatrix(0, 0), r - 1), K::matroid, "complete graphic matroid");
        if (parse_suffix(id, "DOWLING", r) && r <= max_param)
            return entry(id, dowling_int(r), K::matroid, "ternary Dowling geometry");
        if (parse_suffix(id, "PI", r) && r >= 4 && r <= max_param)
            return entry(id, universal_int(t1, r), K::matroid, "universal matroid of T1");
        if (parse_suffix(id, "SIGMA", r) && r >= 3 && r <= max_param)
            return entry(id, universal_int(t2, r), K::matroid, "universal matroid of T2");
        if (parse_suffix(id, "OMEGA", r) && r >= 5 && r <= max_param)
            return entry(id, universal_int(t3, r), K::matroid, "universal matroid of T3");
        if (parse_suffix(id, "T1_", r) && r >= 2 && r <= max_param)
            return entry(id, t_r_1_int(r), K::matroid, "largest near-regular candidate T_r^1");

        throw UnknownCatalogId(id);
    }

    auto catalog_ids() -> vector<string>
    {
        vector<string> ids = {"T1", "T2", "T3", "T2PLUS", "T3PLUS", "AG23E", "AG23E_PRE", "AG23E_X", "AG23E_DUAL",
            "F7MINUS", "F7MINUS_CONFORMING", "F7MINUS_DUAL", "F7_PAIR", "F7_TRIANGLE", "F7_COLUMN", "TYPE3_COLUMN", "U24"};
        for (auto & row : table_rows())
            ids.push_back("FORBIDDEN_" + row.id);
        for (auto & row : table_rows())
            ids.push_back("TABLE_" + row.id);
        for (auto s : {"MK4", "MK5", "MK6", "DOWLING3", "DOWLING4", "DOWLING5", "PI4", "PI5", "SIGMA3", "SIGMA4",
                 "OMEGA5", "T1_3", "T1_4"})
            ids.push_back(s);
        return ids;
    }

    auto Catalog::override_entry(const string & id, const IntMatrix & m) -> void
    {
        named(id);  // the id must exist
        _overrides[id] = m;
    }

    auto Catalog::get(const string & id) const -> NamedEntry
    {
        auto e = named(id);
        auto it = _overrides.find(id);
        if (it != _overrides.end()) {
            e.matrix = it->second;
            if (! e.labels.empty() && e.labels.size() != e.matrix.cols)
                e.labels.clear();
        }
        return e;
    }

    auto Catalog::matroid(const string & id, FieldChar f) const -> LinearMatroid
    {
        return get(id).matroid(f);
    }
}
