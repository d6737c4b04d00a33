/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <matroidlab/matroid.hh>

#include <algorithm>
#include <array>

using std::array;
using std::size_t;
using std::vector;

// Backtracking search for isomorphisms and restriction embeddings. Columns of
// both matroids are kept as flat residue arrays, and closure tests are done by
// keeping one incremental echelon basis per side.

namespace matroidlab
{
    namespace
    {
        struct Columns
        {
            const FieldTables * ft;
            size_t dim, n;
            vector<Residue> data;

            explicit Columns(const LinearMatroid & m) :
                ft(&field_tables(m.field())),
                dim(m.rep().rows()),
                n(m.size()),
                data(dim * n)
            {
                for (size_t c = 0; c < n; ++c)
                    for (size_t r = 0; r < dim; ++r)
                        data[c * dim + r] = m.rep()(r, c);
            }

            auto col(size_t c) const -> const Residue *
            {
                return data.data() + c * dim;
            }
        };

        /// Stack of normalised echelon vectors supporting push/pop.
        class Echelon
        {
        public:
            explicit Echelon(const Columns & c) :
                _c(c), _scratch(c.dim)
            {
            }

            /// Reduces v into the scratch buffer; returns pivot index or dim if
            /// v lies in the span.
            auto reduce(const Residue * v) -> size_t
            {
                const auto & ft = *_c.ft;
                size_t d = _c.dim;
                std::copy(v, v + d, _scratch.begin());
                for (size_t k = 0; k < _pivots.size(); ++k) {
                    Residue f = _scratch[_pivots[k]];
                    if (f == 0)
                        continue;
                    const Residue * row = _rows.data() + k * d;
                    for (size_t i = 0; i < d; ++i)
                        if (row[i])
                            _scratch[i] = ft.sub(_scratch[i], ft.mul[f][row[i]]);
                }
                for (size_t i = 0; i < d; ++i)
                    if (_scratch[i])
                        return i;
                return d;
            }

            auto in_span(const Residue * v) -> bool
            {
                return reduce(v) == _c.dim;
            }

            /// Pushes v if independent of the stack.
            auto push(const Residue * v) -> bool
            {
                size_t p = reduce(v);
                if (p == _c.dim)
                    return false;
                const auto & ft = *_c.ft;
                Residue inv = ft.inv[_scratch[p]];
                for (auto & x : _scratch)
                    x = ft.mul[x][inv];
                _rows.insert(_rows.end(), _scratch.begin(), _scratch.end());
                _pivots.push_back(p);
                return true;
            }

            auto pop() -> void
            {
                _pivots.pop_back();
                _rows.resize(_rows.size() - _c.dim);
            }

            auto size() const -> size_t
            {
                return _pivots.size();
            }

        private:
            const Columns & _c;
            vector<Residue> _rows;
            vector<size_t> _pivots;
            vector<Residue> _scratch;
        };

        using Fingerprint = array<size_t, 4>;  // loop flag, circuits of size 2, 3, 4 through e

        struct Analysis
        {
            vector<Fingerprint> fp;
            vector<vector<size_t>> circuits;  // all circuits of size at most 4
        };

        auto rank_of(const Columns & c, const vector<size_t> & s) -> size_t
        {
            Echelon e(c);
            for (auto i : s)
                e.push(c.col(i));
            return e.size();
        }

        auto analyse(const Columns & c) -> Analysis
        {
            Analysis a;
            a.fp.assign(c.n, Fingerprint{0, 0, 0, 0});
            vector<bool> loop(c.n, false);
            for (size_t i = 0; i < c.n; ++i) {
                bool zero = std::all_of(c.col(i), c.col(i) + c.dim, [](Residue x) { return x == 0; });
                if (zero) {
                    loop[i] = true;
                    a.fp[i][0] = 1;
                    a.circuits.push_back({i});
                }
            }

            // A set of size k with no loops is a circuit iff it has rank k - 1
            // and every (k-1)-subset is independent.
            vector<size_t> s;
            auto is_circuit = [&](const vector<size_t> & set) {
                size_t k = set.size();
                if (rank_of(c, set) != k - 1)
                    return false;
                vector<size_t> sub;
                for (size_t skip = 0; skip < k; ++skip) {
                    sub.clear();
                    for (size_t j = 0; j < k; ++j)
                        if (j != skip)
                            sub.push_back(set[j]);
                    if (rank_of(c, sub) != k - 1)
                        return false;
                }
                return true;
            };

            auto rec = [&](auto & self, size_t start) -> void {
                if (s.size() >= 2 && is_circuit(s)) {
                    for (auto i : s)
                        ++a.fp[i][s.size() - 1];
                    a.circuits.push_back(s);
                    return;  // supersets of a circuit are not circuits
                }
                if (s.size() == 4)
                    return;
                if (s.size() >= 2 && rank_of(c, s) != s.size())
                    return;
                for (size_t i = start; i < c.n; ++i) {
                    if (loop[i])
                        continue;
                    s.push_back(i);
                    self(self, i + 1);
                    s.pop_back();
                }
            };
            rec(rec, 0);
            return a;
        }

        class Search
        {
        public:
            Search(const LinearMatroid & src, const LinearMatroid & tgt, bool iso) :
                _src(src), _tgt(tgt), _cs(src), _ct(tgt), _iso(iso)
            {
            }

            auto run(bool identity_only) -> std::optional<LabelMap>
            {
                size_t ns = _src.size(), nt = _tgt.size();
                if (_iso && (ns != nt || _src.rank() != _tgt.rank()))
                    return std::nullopt;
                if (! _iso && ns > nt)
                    return std::nullopt;

                if (! _analysed) {
                    _as = analyse(_cs);
                    _at = analyse(_ct);
                    _analysed = true;
                }

                vector<size_t> tgt_by_label(nt);
                for (size_t i = 0; i < nt; ++i)
                    tgt_by_label[i] = i;
                std::sort(tgt_by_label.begin(), tgt_by_label.end(),
                    [&](size_t a, size_t b) { return _tgt.labels()[a] < _tgt.labels()[b]; });

                _cands.assign(ns, {});
                for (size_t x = 0; x < ns; ++x) {
                    for (auto y : tgt_by_label) {
                        if (identity_only && _tgt.labels()[y] != _src.labels()[x])
                            continue;
                        if (compatible(_as.fp[x], _at.fp[y]))
                            _cands[x].push_back(y);
                    }
                    if (_cands[x].empty())
                        return std::nullopt;
                }

                choose_order();
                _phi.assign(ns, nt);
                _used.assign(nt, false);
                if (! dfs(0))
                    return std::nullopt;

                LabelMap result;
                for (size_t x = 0; x < ns; ++x)
                    result[_src.labels()[x]] = _tgt.labels()[_phi[x]];
                return result;
            }

        private:
            const LinearMatroid & _src, & _tgt;
            Columns _cs, _ct;
            bool _iso;
            bool _analysed = false;
            Analysis _as, _at;
            vector<vector<size_t>> _cands;
            vector<size_t> _order, _phi;
            vector<bool> _used;

            auto compatible(const Fingerprint & a, const Fingerprint & b) const -> bool
            {
                if (a[0] != b[0])
                    return false;
                for (size_t k = 1; k < 4; ++k)
                    if (_iso ? a[k] != b[k] : a[k] > b[k])
                        return false;
                return true;
            }

            // Greedy: repeatedly pick the element closing the most small
            // circuits with what is already placed; ties broken by fewer
            // candidates, then by lower label.
            auto choose_order() -> void
            {
                size_t ns = _src.size();
                vector<bool> placed(ns, false);
                vector<vector<size_t>> through(ns);
                for (size_t k = 0; k < _as.circuits.size(); ++k)
                    for (auto i : _as.circuits[k])
                        through[i].push_back(k);
                vector<size_t> missing(_as.circuits.size());
                for (size_t k = 0; k < _as.circuits.size(); ++k)
                    missing[k] = _as.circuits[k].size();

                _order.clear();
                for (size_t step = 0; step < ns; ++step) {
                    size_t best = ns, best_score = 0;
                    for (size_t x = 0; x < ns; ++x) {
                        if (placed[x])
                            continue;
                        size_t score = 0;
                        for (auto k : through[x])
                            if (missing[k] == 1)
                                ++score;
                        bool better = best == ns || score > best_score
                            || (score == best_score && (_cands[x].size() < _cands[best].size()
                                || (_cands[x].size() == _cands[best].size() && _src.labels()[x] < _src.labels()[best])));
                        if (better) {
                            best = x;
                            best_score = score;
                        }
                    }
                    placed[best] = true;
                    for (auto k : through[best])
                        --missing[k];
                    _order.push_back(best);
                }
            }

            // For every independent I inside the placed prefix, x must lie in
            // cl(I) exactly when phi(x) lies in cl(phi(I)). Sets are visited
            // by increasing size so that cheap contradictions surface first.
            auto consistent(size_t k, size_t y) -> bool
            {
                size_t x = _order[k];
                size_t max_size = std::min(k, _src.rank());
                if (_iso && max_size == _src.rank() && max_size > 0)
                    --max_size;  // bases span everything on both sides
                Echelon es(_cs), et(_ct);
                for (size_t s = 0; s <= max_size; ++s)
                    if (! check_size(es, et, 0, k, s, x, y))
                        return false;
                return true;
            }

            auto check_size(Echelon & es, Echelon & et, size_t start, size_t k, size_t remaining, size_t x, size_t y) -> bool
            {
                if (remaining == 0)
                    return es.in_span(_cs.col(x)) == et.in_span(_ct.col(y));
                for (size_t i = start; i + remaining <= k; ++i) {
                    size_t a = _order[i];
                    if (! es.push(_cs.col(a)))
                        continue;
                    bool ok = et.push(_ct.col(_phi[a]));
                    // The prefix is a partial isomorphism, so independence is
                    // mirrored; guard anyway.
                    if (! ok) {
                        es.pop();
                        return false;
                    }
                    bool good = check_size(es, et, i + 1, k, remaining - 1, x, y);
                    es.pop();
                    et.pop();
                    if (! good)
                        return false;
                }
                return true;
            }

            auto dfs(size_t k) -> bool
            {
                if (k == _order.size())
                    return true;
                size_t x = _order[k];
                for (auto y : _cands[x]) {
                    if (_used[y])
                        continue;
                    if (! consistent(k, y))
                        continue;
                    _phi[x] = y;
                    _used[y] = true;
                    if (dfs(k + 1))
                        return true;
                    _used[y] = false;
                }
                _phi[x] = _tgt.size();
                return false;
            }
        };

        auto search(const LinearMatroid & m, const LinearMatroid & n, bool iso) -> std::optional<LabelMap>
        {
            Search s(m, n, iso);
            bool labels_fit = std::all_of(m.labels().begin(), m.labels().end(), [&](Label l) { return n.contains(l); });
            if (labels_fit)
                if (auto r = s.run(true))
                    return r;
            return s.run(false);
        }
    }

    auto is_isomorphic(const LinearMatroid & m, const LinearMatroid & n) -> std::optional<LabelMap>
    {
        return search(m, n, true);
    }

    auto is_restriction_of(const LinearMatroid & m, const LinearMatroid & n) -> std::optional<LabelMap>
    {
        return search(m, n, false);
    }
}
