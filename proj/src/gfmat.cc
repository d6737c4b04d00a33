/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <matroidlab/gfmat.hh>

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

using std::size_t;
using std::span;
using std::string;
using std::vector;

namespace matroidlab
{
    namespace
    {
        auto make_tables(int p) -> FieldTables
        {
            FieldTables t{};
            t.p = p;
            for (int a = 0; a < p; ++a) {
                for (int b = 0; b < p; ++b)
                    t.mul[a][b] = static_cast<Residue>((a * b) % p);
                t.neg[a] = static_cast<Residue>((p - a) % p);
                t.inv[a] = 0;
                for (int b = 1; b < p; ++b)
                    if ((a * b) % p == 1)
                        t.inv[a] = static_cast<Residue>(b);
            }
            return t;
        }

        auto parse_header(const string & line, const string & key) -> long long
        {
            std::istringstream ss(line);
            string word;
            long long value;
            string trailing;
            if (! (ss >> word >> value) || word != key || (ss >> trailing))
                throw ParseError("expected '" + key + " <n>', got '" + line + "'");
            return value;
        }

        auto check_row(const GFMatrix & a, size_t r) -> void
        {
            if (r >= a.rows())
                throw std::out_of_range("row index " + std::to_string(r) + " out of range");
        }

        auto check_col(const GFMatrix & a, size_t c) -> void
        {
            if (c >= a.cols())
                throw std::out_of_range("column index " + std::to_string(c) + " out of range");
        }

        auto check_perm(span<const size_t> perm, size_t n) -> void
        {
            if (perm.size() != n)
                throw std::out_of_range("permutation has wrong length");
            vector<bool> seen(n, false);
            for (auto i : perm) {
                if (i >= n || seen[i])
                    throw std::out_of_range("not a permutation");
                seen[i] = true;
            }
        }
    }

    auto field_from_int(long long p) -> FieldChar
    {
        if (p == 3)
            return FieldChar::gf3;
        if (p == 5)
            return FieldChar::gf5;
        throw std::invalid_argument("unsupported field characteristic " + std::to_string(p) + " (only 3 and 5)");
    }

    auto field_tables(FieldChar f) -> const FieldTables &
    {
        static const FieldTables gf3 = make_tables(3), gf5 = make_tables(5);
        return f == FieldChar::gf3 ? gf3 : gf5;
    }

    auto residue_of(long long value, FieldChar f) -> Residue
    {
        long long p = characteristic(f);
        long long r = value % p;
        if (r < 0)
            r += p;
        return static_cast<Residue>(r);
    }

    auto signed_value(Residue r, FieldChar f) -> int
    {
        int p = characteristic(f);
        return r > (p - 1) / 2 ? int(r) - p : int(r);
    }

    GFMatrix::GFMatrix(FieldChar field, size_t rows, size_t cols) :
        _field(field),
        _rows(rows),
        _cols(cols),
        _entries(rows * cols, 0)
    {
    }

    auto GFMatrix::identity(FieldChar field, size_t n) -> GFMatrix
    {
        GFMatrix result(field, n, n);
        for (size_t i = 0; i < n; ++i)
            result._entries[i * n + i] = 1;
        return result;
    }

    auto GFMatrix::at(size_t r, size_t c) const -> Residue
    {
        check_row(*this, r);
        check_col(*this, c);
        return (*this)(r, c);
    }

    auto GFMatrix::set(size_t r, size_t c, long long value) -> void
    {
        check_row(*this, r);
        check_col(*this, c);
        _entries[r * _cols + c] = residue_of(value, _field);
    }

    auto GFMatrix::signed_at(size_t r, size_t c) const -> int
    {
        return signed_value(at(r, c), _field);
    }

    auto GFMatrix::row(size_t r) const -> vector<Residue>
    {
        check_row(*this, r);
        return {_entries.begin() + r * _cols, _entries.begin() + (r + 1) * _cols};
    }

    auto GFMatrix::column(size_t c) const -> vector<Residue>
    {
        check_col(*this, c);
        vector<Residue> result(_rows);
        for (size_t r = 0; r < _rows; ++r)
            result[r] = (*this)(r, c);
        return result;
    }

    auto GFMatrix::transpose() const -> GFMatrix
    {
        GFMatrix result(_field, _cols, _rows);
        for (size_t r = 0; r < _rows; ++r)
            for (size_t c = 0; c < _cols; ++c)
                result._entries[c * _rows + r] = (*this)(r, c);
        return result;
    }

    auto GFMatrix::to_signed() const -> vector<long long>
    {
        vector<long long> result(_entries.size());
        for (size_t i = 0; i < _entries.size(); ++i)
            result[i] = signed_value(_entries[i], _field);
        return result;
    }

    IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> init)
    {
        rows = init.size();
        cols = rows == 0 ? 0 : init.begin()->size();
        for (auto & r : init) {
            if (r.size() != cols)
                throw std::invalid_argument("ragged matrix literal");
            entries.insert(entries.end(), r.begin(), r.end());
        }
    }

    auto reduce(FieldChar f, size_t rows, size_t cols, span<const long long> entries) -> GFMatrix
    {
        if (entries.size() != rows * cols)
            throw std::invalid_argument("entry count does not match dimensions");
        GFMatrix result(f, rows, cols);
        for (size_t r = 0; r < rows; ++r)
            for (size_t c = 0; c < cols; ++c)
                result.set(r, c, entries[r * cols + c]);
        return result;
    }

    auto reduce(const IntMatrix & m, FieldChar f) -> GFMatrix
    {
        return reduce(f, m.rows, m.cols, m.entries);
    }

    auto reduce(FieldChar f, std::initializer_list<std::initializer_list<long long>> init) -> GFMatrix
    {
        return reduce(IntMatrix(init), f);
    }

    auto to_int_matrix(const GFMatrix & m) -> IntMatrix
    {
        IntMatrix result(m.rows(), m.cols());
        result.entries = m.to_signed();
        return result;
    }

    auto row_echelon(const GFMatrix & a) -> RowEchelon
    {
        const auto & ft = field_tables(a.field());
        size_t nr = a.rows(), nc = a.cols();
        vector<Residue> m(a.entries().begin(), a.entries().end());
        vector<size_t> pivots;
        size_t lead = 0;
        for (size_t c = 0; c < nc && lead < nr; ++c) {
            size_t pr = lead;
            while (pr < nr && m[pr * nc + c] == 0)
                ++pr;
            if (pr == nr)
                continue;
            if (pr != lead)
                for (size_t k = 0; k < nc; ++k)
                    std::swap(m[pr * nc + k], m[lead * nc + k]);
            Residue inv = ft.inv[m[lead * nc + c]];
            for (size_t k = 0; k < nc; ++k)
                m[lead * nc + k] = ft.mul[m[lead * nc + k]][inv];
            for (size_t r = 0; r < nr; ++r) {
                if (r == lead || m[r * nc + c] == 0)
                    continue;
                Residue factor = m[r * nc + c];
                for (size_t k = 0; k < nc; ++k)
                    m[r * nc + k] = ft.sub(m[r * nc + k], ft.mul[factor][m[lead * nc + k]]);
            }
            pivots.push_back(c);
            ++lead;
        }

        GFMatrix reduced(a.field(), lead, nc);
        for (size_t r = 0; r < lead; ++r)
            for (size_t c = 0; c < nc; ++c)
                reduced.set(r, c, m[r * nc + c]);
        return RowEchelon{std::move(reduced), std::move(pivots)};
    }

    auto rank(const GFMatrix & a) -> size_t
    {
        return row_echelon(a).pivot_cols.size();
    }

    auto support(span<const Residue> v) -> vector<size_t>
    {
        vector<size_t> result;
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0)
                result.push_back(i);
        return result;
    }

    auto weight(span<const Residue> v) -> size_t
    {
        return static_cast<size_t>(std::count_if(v.begin(), v.end(), [](Residue x) { return x != 0; }));
    }

    auto scale_column(const GFMatrix & a, size_t c, long long scalar) -> GFMatrix
    {
        check_col(a, c);
        Residue s = residue_of(scalar, a.field());
        if (s == 0)
            throw std::invalid_argument("column scalar must be nonzero");
        const auto & ft = field_tables(a.field());
        GFMatrix result = a;
        for (size_t r = 0; r < a.rows(); ++r)
            result.set(r, c, ft.mul[a(r, c)][s]);
        return result;
    }

    auto permute_rows(const GFMatrix & a, span<const size_t> perm) -> GFMatrix
    {
        check_perm(perm, a.rows());
        return select_rows(a, perm);
    }

    auto permute_columns(const GFMatrix & a, span<const size_t> perm) -> GFMatrix
    {
        check_perm(perm, a.cols());
        return select_columns(a, perm);
    }

    auto select_rows(const GFMatrix & a, span<const size_t> rows) -> GFMatrix
    {
        GFMatrix result(a.field(), rows.size(), a.cols());
        for (size_t i = 0; i < rows.size(); ++i) {
            check_row(a, rows[i]);
            for (size_t c = 0; c < a.cols(); ++c)
                result.set(i, c, a(rows[i], c));
        }
        return result;
    }

    auto select_columns(const GFMatrix & a, span<const size_t> cols) -> GFMatrix
    {
        GFMatrix result(a.field(), a.rows(), cols.size());
        for (size_t j = 0; j < cols.size(); ++j) {
            check_col(a, cols[j]);
            for (size_t r = 0; r < a.rows(); ++r)
                result.set(r, j, a(r, cols[j]));
        }
        return result;
    }

    auto delete_rows(const GFMatrix & a, span<const size_t> rows) -> GFMatrix
    {
        vector<bool> drop(a.rows(), false);
        for (auto r : rows) {
            check_row(a, r);
            drop[r] = true;
        }
        vector<size_t> keep;
        for (size_t r = 0; r < a.rows(); ++r)
            if (! drop[r])
                keep.push_back(r);
        return select_rows(a, keep);
    }

    auto delete_columns(const GFMatrix & a, span<const size_t> cols) -> GFMatrix
    {
        vector<bool> drop(a.cols(), false);
        for (auto c : cols) {
            check_col(a, c);
            drop[c] = true;
        }
        vector<size_t> keep;
        for (size_t c = 0; c < a.cols(); ++c)
            if (! drop[c])
                keep.push_back(c);
        return select_columns(a, keep);
    }

    auto append_row(const GFMatrix & a, span<const long long> row) -> GFMatrix
    {
        if (row.size() != a.cols())
            throw std::out_of_range("appended row has wrong length");
        GFMatrix result(a.field(), a.rows() + 1, a.cols());
        for (size_t r = 0; r < a.rows(); ++r)
            for (size_t c = 0; c < a.cols(); ++c)
                result.set(r, c, a(r, c));
        for (size_t c = 0; c < a.cols(); ++c)
            result.set(a.rows(), c, row[c]);
        return result;
    }

    auto append_column(const GFMatrix & a, span<const long long> col) -> GFMatrix
    {
        if (col.size() != a.rows())
            throw std::out_of_range("appended column has wrong length");
        return hconcat(a, reduce(a.field(), a.rows(), 1, col));
    }

    auto hconcat(const GFMatrix & a, const GFMatrix & b) -> GFMatrix
    {
        if (a.field() != b.field())
            throw std::invalid_argument("field mismatch");
        if (a.rows() != b.rows())
            throw std::out_of_range("row counts differ");
        GFMatrix result(a.field(), a.rows(), a.cols() + b.cols());
        for (size_t r = 0; r < a.rows(); ++r) {
            for (size_t c = 0; c < a.cols(); ++c)
                result.set(r, c, a(r, c));
            for (size_t c = 0; c < b.cols(); ++c)
                result.set(r, a.cols() + c, b(r, c));
        }
        return result;
    }

    auto vconcat(const GFMatrix & a, const GFMatrix & b) -> GFMatrix
    {
        if (a.field() != b.field())
            throw std::invalid_argument("field mismatch");
        if (a.cols() != b.cols())
            throw std::out_of_range("column counts differ");
        GFMatrix result(a.field(), a.rows() + b.rows(), a.cols());
        for (size_t c = 0; c < a.cols(); ++c) {
            for (size_t r = 0; r < a.rows(); ++r)
                result.set(r, c, a(r, c));
            for (size_t r = 0; r < b.rows(); ++r)
                result.set(a.rows() + r, c, b(r, c));
        }
        return result;
    }

    auto add_row(const GFMatrix & a, size_t src, size_t dst, long long scalar) -> GFMatrix
    {
        check_row(a, src);
        check_row(a, dst);
        const auto & ft = field_tables(a.field());
        Residue s = residue_of(scalar, a.field());
        GFMatrix result = a;
        for (size_t c = 0; c < a.cols(); ++c)
            result.set(dst, c, ft.add(a(dst, c), ft.mul[s][a(src, c)]));
        return result;
    }

    auto to_string(const GFMatrix & a, bool signed_form) -> string
    {
        std::ostringstream out;
        for (size_t r = 0; r < a.rows(); ++r) {
            out << "[";
            for (size_t c = 0; c < a.cols(); ++c) {
                int v = signed_form ? signed_value(a(r, c), a.field()) : int(a(r, c));
                out << (c == 0 ? "" : " ") << (signed_form && v >= 0 ? " " : "") << v;
            }
            out << "]\n";
        }
        return out.str();
    }

    auto read_gfmat(std::istream & in) -> GFMatrix
    {
        string line;
        auto next_line = [&](const char * what) -> string {
            if (! std::getline(in, line))
                throw ParseError(string("unexpected end of input, expected ") + what);
            if (! line.empty() && line.back() == '\r')
                line.pop_back();
            return line;
        };

        do
            next_line("field header");
        while (! line.empty() && line[0] == '#');

        long long p = parse_header(line, "field");
        FieldChar f;
        try {
            f = field_from_int(p);
        }
        catch (const std::invalid_argument & e) {
            throw ParseError(e.what());
        }
        long long rows = parse_header(next_line("rows header"), "rows");
        long long cols = parse_header(next_line("cols header"), "cols");
        if (rows < 0 || cols < 0)
            throw ParseError("negative dimension");

        vector<long long> entries;
        entries.reserve(size_t(rows * cols));
        for (long long r = 0; r < rows; ++r) {
            if (cols == 0) {
                // rows of an r x 0 matrix are empty lines and may be omitted
                int ch = in.peek();
                if (ch == '\n' || ch == '\r')
                    std::getline(in, line);
                continue;
            }
            std::istringstream ss(next_line("matrix row"));
            long long v;
            long long count = 0;
            while (ss >> v) {
                entries.push_back(v);
                ++count;
            }
            if (! ss.eof() || count != cols)
                throw ParseError("row " + std::to_string(r) + " does not hold " + std::to_string(cols) + " integers");
        }
        return reduce(f, size_t(rows), size_t(cols), entries);
    }

    auto write_gfmat(std::ostream & out, const GFMatrix & a) -> void
    {
        out << "field " << a.p() << "\n";
        out << "rows " << a.rows() << "\n";
        out << "cols " << a.cols() << "\n";
        for (size_t r = 0; r < a.rows(); ++r) {
            for (size_t c = 0; c < a.cols(); ++c)
                out << (c == 0 ? "" : " ") << int(a(r, c));
            out << "\n";
        }
    }

    auto load_gfmat(const string & path) -> GFMatrix
    {
        std::ifstream in(path);
        if (! in)
            throw ParseError("cannot open '" + path + "'");
        return read_gfmat(in);
    }

    auto save_gfmat(const string & path, const GFMatrix & a) -> void
    {
        std::ofstream out(path);
        if (! out)
            throw std::runtime_error("cannot write '" + path + "'");
        write_gfmat(out, a);
    }
}
