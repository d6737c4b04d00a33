/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <matroidlab/constructions.hh>
#include <matroidlab/ytemplate.hh>

#include <algorithm>
#include <map>
#include <mutex>

using std::optional;
using std::size_t;
using std::string;
using std::vector;

namespace matroidlab
{
    namespace
    {
        const auto gf3 = FieldChar::gf3;

        auto require_ternary(const GFMatrix & p, const char * who) -> void
        {
            if (p.field() != gf3)
                throw std::invalid_argument(string(who) + ": Y-templates are ternary");
        }

        auto scaled(const vector<Residue> & v, int s) -> vector<Residue>
        {
            vector<Residue> out(v.size());
            for (size_t i = 0; i < v.size(); ++i)
                out[i] = Residue((v[i] * s) % 3);
            return out;
        }

        auto all_zero(const vector<Residue> & v) -> bool
        {
            return std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; });
        }
    }

    auto to_string(ColumnType t) -> string
    {
        switch (t) {
            case ColumnType::type3: return "Type3";
            case ColumnType::type4: return "Type4";
            case ColumnType::graphic: return "Graphic";
            case ColumnType::zero: return "Zero";
            case ColumnType::other: return "Other";
        }
        return "?";
    }

    auto classify_column(const vector<Residue> & v) -> ColumnClass
    {
        if (all_zero(v))
            return {ColumnType::zero, 1};
        for (int s = 1; s <= 2; ++s) {
            auto w = scaled(v, s);
            size_t ones = std::count(w.begin(), w.end(), Residue(1));
            size_t minus = std::count(w.begin(), w.end(), Residue(2));
            if (ones == 3 && minus == 0)
                return {ColumnType::type3, s};
            if (ones == 2 && minus == 2)
                return {ColumnType::type4, s};
            if (ones == 1 && minus <= 1)
                return {ColumnType::graphic, s};
        }
        return {ColumnType::other, 1};
    }

    auto has_zero_row_sums(const GFMatrix & p) -> bool
    {
        for (size_t c = 0; c < p.cols(); ++c) {
            int s = 0;
            for (size_t r = 0; r < p.rows(); ++r)
                s += p(r, c);
            if (s % p.p() != 0)
                return false;
        }
        return true;
    }

    auto add_zero_sum_row(const GFMatrix & p) -> GFMatrix
    {
        vector<long long> row(p.cols(), 0);
        for (size_t c = 0; c < p.cols(); ++c)
            for (size_t r = 0; r < p.rows(); ++r)
                row[c] -= p(r, c);
        return append_row(p, row);
    }

    auto remove_row(const GFMatrix & p, size_t i) -> GFMatrix
    {
        if (! has_zero_row_sums(p))
            throw std::invalid_argument("remove_row: the rows must sum to zero");
        if (i >= p.rows())
            throw std::out_of_range("remove_row: row index out of range");
        size_t rows[] = {i};
        return delete_rows(p, rows);
    }

    auto strip_graphic_columns(const GFMatrix & p) -> GFMatrix
    {
        vector<size_t> keep;
        for (size_t c = 0; c < p.cols(); ++c)
            if (classify_column(p.column(c)).type != ColumnType::graphic)
                keep.push_back(c);
        return select_columns(p, keep);
    }

    auto dedupe_scalar_multiples(const GFMatrix & p) -> GFMatrix
    {
        vector<size_t> keep;
        for (size_t c = 0; c < p.cols(); ++c) {
            auto v = p.column(c);
            bool repeat = false;
            for (auto k : keep) {
                auto u = p.column(k);
                for (int s = 1; s < p.p() && ! repeat; ++s) {
                    bool same = true;
                    for (size_t r = 0; r < p.rows() && same; ++r)
                        same = v[r] == (s * u[r]) % p.p();
                    repeat = same;
                }
                if (repeat)
                    break;
            }
            if (! repeat)
                keep.push_back(c);
        }
        return select_columns(p, keep);
    }

    auto drop_zero_rows(const GFMatrix & p) -> GFMatrix
    {
        vector<size_t> keep;
        for (size_t r = 0; r < p.rows(); ++r)
            if (! all_zero(p.row(r)))
                keep.push_back(r);
        return select_rows(p, keep);
    }

    auto is_occurrence(const GFMatrix & pattern, const GFMatrix & host, const Occurrence & occ) -> bool
    {
        if (occ.rows.size() != pattern.rows() || occ.cols.size() != pattern.cols() || occ.scalars.size() != pattern.cols())
            return false;
        for (auto r : occ.rows)
            if (r >= host.rows() || std::count(occ.rows.begin(), occ.rows.end(), r) != 1)
                return false;
        for (auto c : occ.cols)
            if (c >= host.cols() || std::count(occ.cols.begin(), occ.cols.end(), c) != 1)
                return false;
        int p = host.p();
        for (auto s : occ.scalars)
            if (s <= 0 || s >= p)
                return false;
        for (size_t i = 0; i < pattern.rows(); ++i)
            for (size_t j = 0; j < pattern.cols(); ++j)
                if (host(occ.rows[i], occ.cols[j]) != (occ.scalars[j] * pattern(i, j)) % p)
                    return false;
        return true;
    }

    namespace
    {
        // Columns are matched first. After each choice every pattern row
        // and every host row has a partial profile, the entries seen so far;
        // rows can only be matched to rows with the same profile, so each
        // profile must be at least as common in the host as in the pattern.
        class OccurrenceScan
        {
        public:
            OccurrenceScan(const GFMatrix & pattern, const GFMatrix & host) :
                _pat(pattern), _host(host),
                _pprof(pattern.rows()), _hprof(host.rows()),
                _cused(host.cols(), false)
            {
            }

            auto run() -> vector<Occurrence>
            {
                if (_pat.rows() > _host.rows() || _pat.cols() > _host.cols() || _pat.field() != _host.field())
                    return {};
                pick_column(0);
                std::sort(_out.begin(), _out.end());
                return std::move(_out);
            }

        private:
            const GFMatrix & _pat, & _host;
            vector<string> _pprof, _hprof;
            vector<bool> _cused;
            vector<size_t> _cols;
            vector<int> _scalars;
            vector<Occurrence> _out;

            auto feasible() const -> bool
            {
                std::map<string, long> balance;
                for (auto & s : _hprof)
                    ++balance[s];
                for (auto & s : _pprof)
                    if (--balance[s] < 0)
                        return false;
                return true;
            }

            auto pick_column(size_t j) -> void
            {
                if (j == _pat.cols()) {
                    emit_rows();
                    return;
                }
                int p = _pat.p();
                auto pcol = _pat.column(j);
                bool zero = all_zero(pcol);
                for (size_t h = 0; h < _host.cols(); ++h) {
                    if (_cused[h])
                        continue;
                    for (int s = 1; s < (zero ? 2 : p); ++s) {
                        for (size_t i = 0; i < _pat.rows(); ++i)
                            _pprof[i].push_back(char((s * pcol[i]) % p));
                        for (size_t r = 0; r < _host.rows(); ++r)
                            _hprof[r].push_back(char(_host(r, h)));
                        if (feasible()) {
                            _cused[h] = true;
                            _cols.push_back(h);
                            _scalars.push_back(s);
                            pick_column(j + 1);
                            _scalars.pop_back();
                            _cols.pop_back();
                            _cused[h] = false;
                        }
                        for (auto & x : _pprof)
                            x.pop_back();
                        for (auto & x : _hprof)
                            x.pop_back();
                    }
                }
            }

            auto emit_rows() -> void
            {
                vector<size_t> rows;
                vector<bool> rused(_host.rows(), false);
                auto rec = [&](auto & self, size_t i) -> void {
                    if (i == _pat.rows()) {
                        _out.push_back(Occurrence{rows, _cols, _scalars});
                        return;
                    }
                    for (size_t r = 0; r < _host.rows(); ++r) {
                        if (rused[r] || _hprof[r] != _pprof[i])
                            continue;
                        rused[r] = true;
                        rows.push_back(r);
                        self(self, i + 1);
                        rows.pop_back();
                        rused[r] = false;
                    }
                };
                rec(rec, 0);
            }
        };
    }

    auto find_occurrences(const GFMatrix & pattern, const GFMatrix & host, bool first_only) -> vector<Occurrence>
    {
        auto all = OccurrenceScan(pattern, host).run();
        if (first_only && all.size() > 1)
            all.resize(1);
        return all;
    }

    auto derive_forbidden(const GFMatrix & base, size_t removed_row) -> GFMatrix
    {
        GFMatrix lifted = has_zero_row_sums(base) ? base : add_zero_sum_row(base);
        return drop_zero_rows(remove_row(lifted, removed_row));
    }

    auto forbidden_patterns() -> const vector<ForbiddenPattern> &
    {
        static const vector<ForbiddenPattern> table = [] {
            vector<ForbiddenPattern> out;
            for (auto & row : table_rows())
                out.push_back(ForbiddenPattern{row.id, row.id, std::nullopt, reduce(row.matrix, gf3)});
            return out;
        }();
        return table;
    }

    auto supplementary_patterns() -> const vector<ForbiddenPattern> &
    {
        // All four 3-subsets of four rows as type-3 columns. Any three of
        // them share a row but the four do not, and no table matrix occurs
        // in it, yet [I4 | D4 | W4] has an AG(2,3)\e minor.
        static const vector<ForbiddenPattern> extra = {
            ForbiddenPattern{"W4", "W4", std::nullopt,
                reduce(gf3, {{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}})}};
        return extra;
    }

    auto extended_forbidden_patterns() -> const vector<ForbiddenPattern> &
    {
        // X+ minus one row keeps the closure of YT(X), so each derived matrix
        // is as forbidden as its base.
        static const vector<ForbiddenPattern> family = [] {
            vector<ForbiddenPattern> out = forbidden_patterns();
            vector<ForbiddenPattern> bases = forbidden_patterns();
            for (auto & w : supplementary_patterns()) {
                out.push_back(w);
                bases.push_back(w);
            }
            for (auto & base : bases) {
                size_t lifted_rows = base.matrix.rows() + (has_zero_row_sums(base.matrix) ? 0 : 1);
                for (size_t i = 0; i < lifted_rows; ++i)
                    out.push_back(ForbiddenPattern{base.id + "+-" + std::to_string(i), base.id, i,
                        derive_forbidden(base.matrix, i)});
            }
            return out;
        }();
        return family;
    }

    auto forbidden_scan(const GFMatrix & p) -> vector<ForbiddenHit>
    {
        require_ternary(p, "forbidden_scan");
        vector<ForbiddenHit> hits;
        for (auto & f : forbidden_patterns())
            for (auto & occ : find_occurrences(f.matrix, p))
                hits.push_back(ForbiddenHit{f.id, occ});
        return hits;
    }

    auto forbidden_base_matrix(const string & base) -> std::optional<GFMatrix>
    {
        for (auto * list : {&forbidden_patterns(), &supplementary_patterns()})
            for (auto & f : *list)
                if (f.id == base)
                    return f.matrix;
        return std::nullopt;
    }

    auto forbidden_witness(const string & base) -> MinorWitness
    {
        static std::mutex lock;
        static std::map<string, MinorWitness> cache;
        {
            std::lock_guard<std::mutex> guard(lock);
            auto it = cache.find(base);
            if (it != cache.end())
                return it->second;
        }
        auto bm = forbidden_base_matrix(base);
        if (! bm)
            throw std::invalid_argument("no forbidden base named " + base);
        std::optional<LabelSet> hint;
        for (auto & row : table_rows())
            if (row.id == base)
                hint = row.contract_hint;
        auto w = has_minor(universal_matroid(*bm, bm->rows()), named("AG23E").matroid(gf3), hint);
        if (! w)
            throw std::logic_error("no AG(2,3)\\e minor found for table row " + base);
        std::lock_guard<std::mutex> guard(lock);
        cache.emplace(base, *w);
        return *w;
    }

    auto is_signed_graphic_form(const GFMatrix & a) -> bool
    {
        for (size_t c = 0; c < a.cols(); ++c)
            if (weight(a.column(c)) > 2)
                return false;
        return true;
    }

    auto signed_graphic_reduce(const GFMatrix & a, size_t s) -> GFMatrix
    {
        if (s >= a.rows())
            throw std::invalid_argument("signed_graphic_reduce: no such row");
        GFMatrix out = a;
        for (size_t r = 0; r < a.rows(); ++r)
            if (r != s)
                out = add_row(out, r, s, -1);
        if (! is_signed_graphic_form(out))
            throw std::invalid_argument("signed_graphic_reduce: row subtraction leaves a column with three nonzero entries");
        return out;
    }

    auto universal_matrix(const GFMatrix & p, size_t r) -> GFMatrix
    {
        if (r < p.rows())
            throw std::invalid_argument("universal_matrix: rank below the number of rows of P");
        GFMatrix padded = vconcat(p, GFMatrix(p.field(), r - p.rows(), p.cols()));
        return hconcat(hconcat(GFMatrix::identity(p.field(), r), build_D(p.field(), r)), padded);
    }

    auto to_string(Verdict v) -> string
    {
        switch (v) {
            case Verdict::signed_graphic: return "SignedGraphic";
            case Verdict::pi: return "Pi";
            case Verdict::sigma: return "Sigma";
            case Verdict::omega: return "Omega";
            case Verdict::contains_ag23e: return "ContainsAG23e";
            case Verdict::unclassified: return "Unclassified";
        }
        return "?";
    }

    auto normalize_y_template(const GFMatrix & p) -> Normalized
    {
        require_ternary(p, "normalize_y_template");
        Normalized n;
        n.input = p;
        n.appended = ! has_zero_row_sums(p);
        n.lifted = n.appended ? add_zero_sum_row(p) : p;
        // zero columns are loops of the universal matroid and carry nothing
        vector<size_t> nonzero;
        for (size_t c = 0; c < n.lifted.cols(); ++c)
            if (! all_zero(n.lifted.column(c)))
                nonzero.push_back(c);
        auto trimmed = select_columns(n.lifted, nonzero);
        n.normal = drop_zero_rows(dedupe_scalar_multiples(strip_graphic_columns(trimmed)));
        for (size_t c = 0; c < n.normal.cols(); ++c)
            n.classes.push_back(classify_column(n.normal.column(c)));
        return n;
    }

    namespace
    {
        auto block_without(const GFMatrix & normal, const optional<size_t> & removed) -> GFMatrix
        {
            return removed ? remove_row(normal, *removed) : normal;
        }

        auto t_matrix(int i) -> GFMatrix
        {
            return named("T" + std::to_string(i)).gf(gf3);
        }

        auto row_choices(size_t rows) -> vector<optional<size_t>>
        {
            vector<optional<size_t>> out{std::nullopt};
            for (size_t r = 0; r < rows; ++r)
                out.push_back(r);
            return out;
        }

        auto try_signed_graphic(const GFMatrix & normal) -> optional<SignedGraphicCertificate>
        {
            for (auto removed : row_choices(normal.rows())) {
                auto block = block_without(normal, removed);
                auto u = universal_matrix(block, block.rows());
                for (auto special : row_choices(block.rows())) {
                    GFMatrix frame;
                    if (! special) {
                        if (! is_signed_graphic_form(u))
                            continue;
                        frame = u;
                    }
                    else {
                        try {
                            frame = signed_graphic_reduce(u, *special);
                        }
                        catch (const std::invalid_argument &) {
                            continue;
                        }
                    }
                    return SignedGraphicCertificate{removed, special, block, u, frame};
                }
            }
            return std::nullopt;
        }

        auto try_embedding(const GFMatrix & normal) -> optional<EmbeddingCertificate>
        {
            for (int i = 1; i <= 3; ++i) {
                auto t = t_matrix(i);
                for (auto removed : row_choices(normal.rows())) {
                    auto block = block_without(normal, removed);
                    auto occ = find_occurrences(block, t, true);
                    if (! occ.empty())
                        return EmbeddingCertificate{i, removed, block, occ.front()};
                }
            }
            return std::nullopt;
        }

        auto try_forbidden(const GFMatrix & normal) -> optional<ForbiddenCertificate>
        {
            for (auto & f : extended_forbidden_patterns()) {
                auto occ = find_occurrences(f.matrix, normal, true);
                if (! occ.empty())
                    return ForbiddenCertificate{f, occ.front(), forbidden_witness(f.base)};
            }
            return std::nullopt;
        }
    }

    auto classify_Y_template(const GFMatrix & p) -> YTemplateClass
    {
        YTemplateClass result;
        result.norm = normalize_y_template(p);
        const auto & normal = result.norm.normal;

        size_t others = 0;
        for (size_t c = 0; c < normal.cols(); ++c)
            if (result.norm.classes[c].type == ColumnType::other) {
                ++others;
                result.diagnostics.push_back("column " + std::to_string(c) + " of the normal form is of no type");
            }

        if (auto f = try_forbidden(normal)) {
            result.verdict = Verdict::contains_ag23e;
            result.diagnostics.push_back("forbidden pattern " + f->pattern.id + " found");
            result.forbidden = std::move(f);
            return result;
        }
        if (others) {
            // every untyped column should contain [1,1,1,1] or [1,1,1,-1]
            result.diagnostics.push_back("untyped column without a forbidden hit");
            return result;
        }

        if (auto s = try_signed_graphic(normal)) {
            result.verdict = Verdict::signed_graphic;
            result.signed_graphic = std::move(s);
            return result;
        }
        result.diagnostics.push_back("no row removal and special row give a frame matrix");

        if (auto e = try_embedding(normal)) {
            static const Verdict by_index[] = {Verdict::pi, Verdict::sigma, Verdict::omega};
            result.verdict = by_index[e->t_index - 1];
            result.embedding = std::move(e);
            return result;
        }
        result.diagnostics.push_back("not a submatrix of T1, T2 or T3 after removing at most one row");
        result.diagnostics.push_back("normal form:\n" + to_string(normal));
        return result;
    }

    namespace
    {
        auto fail(string why) -> CertificateCheck
        {
            return CertificateCheck{false, std::move(why)};
        }

        auto identity_map(const LinearMatroid & m) -> LabelMap
        {
            LabelMap f;
            for (auto l : m.labels())
                f[l] = l;
            return f;
        }

        auto check_signed_graphic(const Normalized & n, const SignedGraphicCertificate & c) -> CertificateCheck
        {
            if (c.removed_row && *c.removed_row >= n.normal.rows())
                return fail("removed row out of range");
            auto block = block_without(n.normal, c.removed_row);
            if (block != c.block)
                return fail("block does not match the normal form");
            for (size_t r : {block.rows(), block.rows() + 1}) {
                auto u = universal_matrix(block, r);
                if (r == block.rows() && u != c.universal)
                    return fail("universal matrix does not match the block");
                if (c.special_row && *c.special_row >= block.rows())
                    return fail("special row out of range");
                GFMatrix frame = u;
                if (c.special_row)
                    for (size_t i = 0; i < u.rows(); ++i)
                        if (i != *c.special_row)
                            frame = add_row(frame, i, *c.special_row, -1);
                if (r == block.rows() && frame != c.frame)
                    return fail("frame matrix is not the stated row subtraction");
                if (! is_signed_graphic_form(frame))
                    return fail("frame matrix has a column of weight three or more at rank " + std::to_string(r));
                auto mu = vector_matroid(u), mf = vector_matroid(frame);
                if (! verify_isomorphism(mu, mf, identity_map(mu)))
                    return fail("row subtraction changed the matroid");
            }
            return CertificateCheck{true, ""};
        }

        auto check_embedding(const Normalized & n, const EmbeddingCertificate & c, Verdict v) -> CertificateCheck
        {
            static const Verdict by_index[] = {Verdict::pi, Verdict::sigma, Verdict::omega};
            if (c.t_index < 1 || c.t_index > 3 || by_index[c.t_index - 1] != v)
                return fail("verdict and T index disagree");
            if (c.removed_row && *c.removed_row >= n.normal.rows())
                return fail("removed row out of range");
            auto block = block_without(n.normal, c.removed_row);
            if (block != c.block)
                return fail("block does not match the normal form");
            auto t = t_matrix(c.t_index);
            if (! is_occurrence(block, t, c.occ))
                return fail("block entries do not match T" + std::to_string(c.t_index));

            // [I | D | block] is a restriction of [I | D | T] once the unit
            // vectors of unused rows are contracted.
            auto host = vector_matroid(universal_matrix(t, t.rows()));
            LabelSet unused;
            for (size_t r = 0; r < t.rows(); ++r)
                if (std::find(c.occ.rows.begin(), c.occ.rows.end(), r) == c.occ.rows.end())
                    unused.push_back(Label(r));
            auto small = simplify(contract(host, unused));
            auto mine = vector_matroid(universal_matrix(block, block.rows()));
            auto emb = is_restriction_of(mine, small);
            if (! emb || ! verify_restriction(mine, small, *emb))
                return fail("universal matroid of the block does not embed");
            return CertificateCheck{true, ""};
        }

        auto check_forbidden(const Normalized & n, const ForbiddenCertificate & c) -> CertificateCheck
        {
            auto base = forbidden_base_matrix(c.pattern.base);
            if (! base)
                return fail("unknown forbidden base " + c.pattern.base);
            const auto & bm = *base;
            auto expected = c.pattern.removed_row ? derive_forbidden(bm, *c.pattern.removed_row) : bm;
            if (expected != c.pattern.matrix)
                return fail("pattern is not derived from its base");
            if (! is_occurrence(c.pattern.matrix, n.normal, c.occ))
                return fail("pattern does not occur at the stated position");
            auto m = universal_matroid(bm, bm.rows());
            if (! verify_minor_witness(m, named("AG23E").matroid(gf3), c.witness))
                return fail("minor witness does not verify");
            return CertificateCheck{true, ""};
        }
    }

    auto verify_certificate(const YTemplateClass & c) -> CertificateCheck
    {
        auto again = normalize_y_template(c.norm.input);
        if (again.lifted != c.norm.lifted || again.normal != c.norm.normal)
            return fail("normal form does not follow from the input");
        switch (c.verdict) {
            case Verdict::signed_graphic:
                if (! c.signed_graphic)
                    return fail("missing frame certificate");
                return check_signed_graphic(c.norm, *c.signed_graphic);
            case Verdict::pi:
            case Verdict::sigma:
            case Verdict::omega:
                if (! c.embedding)
                    return fail("missing embedding certificate");
                return check_embedding(c.norm, *c.embedding, c.verdict);
            case Verdict::contains_ag23e:
                if (! c.forbidden)
                    return fail("missing forbidden-hit certificate");
                return check_forbidden(c.norm, *c.forbidden);
            case Verdict::unclassified:
                return fail("no verdict");
        }
        return fail("unknown verdict");
    }
}
