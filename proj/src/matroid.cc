/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <matroidlab/matroid.hh>

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

using std::size_t;
using std::string;
using std::vector;

namespace matroidlab
{
    LinearMatroid::LinearMatroid(GFMatrix rep) :
        _rep(std::move(rep))
    {
        _labels.resize(_rep.cols());
        for (size_t i = 0; i < _labels.size(); ++i)
            _labels[i] = Label(i);
        _rank = matroidlab::rank(_rep);
    }

    LinearMatroid::LinearMatroid(GFMatrix rep, LabelSet labels) :
        _rep(std::move(rep)),
        _labels(std::move(labels))
    {
        if (_labels.size() != _rep.cols())
            throw std::invalid_argument("label count does not match column count");
        std::set<Label> seen;
        for (auto l : _labels) {
            if (l < 0)
                throw std::invalid_argument("labels must be non-negative");
            if (! seen.insert(l).second)
                throw std::invalid_argument("duplicate label " + std::to_string(l));
        }
        _rank = matroidlab::rank(_rep);
    }

    auto LinearMatroid::contains(Label l) const -> bool
    {
        return std::find(_labels.begin(), _labels.end(), l) != _labels.end();
    }

    auto LinearMatroid::index_of(Label l) const -> size_t
    {
        auto it = std::find(_labels.begin(), _labels.end(), l);
        if (it == _labels.end())
            throw UnknownLabel(l);
        return size_t(it - _labels.begin());
    }

    auto vector_matroid(const GFMatrix & a) -> LinearMatroid
    {
        return LinearMatroid(a);
    }

    namespace
    {
        auto indices_of(const LinearMatroid & m, const LabelSet & x) -> vector<size_t>
        {
            vector<size_t> result;
            result.reserve(x.size());
            for (auto l : x)
                result.push_back(m.index_of(l));
            return result;
        }

        auto unique_indices(const LinearMatroid & m, const LabelSet & x) -> vector<size_t>
        {
            auto idx = indices_of(m, x);
            std::sort(idx.begin(), idx.end());
            idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
            return idx;
        }

        auto for_each_subset_upto(size_t n, size_t max_size, const std::function<bool(const vector<size_t> &)> & fn) -> bool
        {
            vector<size_t> current;
            std::function<bool(size_t)> rec = [&](size_t start) -> bool {
                if (! fn(current))
                    return false;
                if (current.size() == max_size)
                    return true;
                for (size_t i = start; i < n; ++i) {
                    current.push_back(i);
                    if (! rec(i + 1))
                        return false;
                    current.pop_back();
                }
                return true;
            };
            return rec(0);
        }
    }

    auto subset_rank(const LinearMatroid & m, const LabelSet & x) -> size_t
    {
        return rank(select_columns(m.rep(), unique_indices(m, x)));
    }

    auto is_independent(const LinearMatroid & m, const LabelSet & x) -> bool
    {
        auto idx = unique_indices(m, x);
        return idx.size() == x.size() && rank(select_columns(m.rep(), idx)) == idx.size();
    }

    auto restrict_to(const LinearMatroid & m, const LabelSet & x) -> LinearMatroid
    {
        auto keep_idx = unique_indices(m, x);
        LabelSet labels;
        for (auto i : keep_idx)
            labels.push_back(m.labels()[i]);
        return LinearMatroid(select_columns(m.rep(), keep_idx), labels);
    }

    auto delete_elements(const LinearMatroid & m, const LabelSet & d) -> LinearMatroid
    {
        vector<bool> drop(m.size(), false);
        for (auto i : indices_of(m, d))
            drop[i] = true;
        LabelSet keep;
        for (size_t i = 0; i < m.size(); ++i)
            if (! drop[i])
                keep.push_back(m.labels()[i]);
        return restrict_to(m, keep);
    }

    auto contract(const LinearMatroid & m, const LabelSet & t) -> LinearMatroid
    {
        auto targets = indices_of(m, t);
        const auto & ft = field_tables(m.field());
        const GFMatrix & rep = m.rep();
        size_t nr = rep.rows(), nc = rep.cols();
        vector<Residue> a(rep.entries().begin(), rep.entries().end());
        vector<bool> row_alive(nr, true), col_alive(nc, true);

        for (auto c : targets) {
            if (! col_alive[c])
                continue;
            size_t pr = nr;
            for (size_t r = 0; r < nr; ++r)
                if (row_alive[r] && a[r * nc + c] != 0) {
                    pr = r;
                    break;
                }
            col_alive[c] = false;
            if (pr == nr)
                continue;  // loop: deletion

            Residue inv = ft.inv[a[pr * nc + c]];
            for (size_t k = 0; k < nc; ++k)
                a[pr * nc + k] = ft.mul[a[pr * nc + k]][inv];
            for (size_t r = 0; r < nr; ++r) {
                if (r == pr || ! row_alive[r] || a[r * nc + c] == 0)
                    continue;
                Residue factor = a[r * nc + c];
                for (size_t k = 0; k < nc; ++k)
                    a[r * nc + k] = ft.sub(a[r * nc + k], ft.mul[factor][a[pr * nc + k]]);
            }
            row_alive[pr] = false;
        }

        vector<size_t> rows, cols;
        for (size_t r = 0; r < nr; ++r)
            if (row_alive[r])
                rows.push_back(r);
        LabelSet labels;
        for (size_t c = 0; c < nc; ++c)
            if (col_alive[c]) {
                cols.push_back(c);
                labels.push_back(m.labels()[c]);
            }

        GFMatrix out(m.field(), rows.size(), cols.size());
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < cols.size(); ++j)
                out.set(i, j, a[rows[i] * nc + cols[j]]);
        return LinearMatroid(std::move(out), std::move(labels));
    }

    namespace
    {
        /// Column scaled so that its first nonzero entry is 1.
        auto normalized_column(const GFMatrix & a, size_t c) -> vector<Residue>
        {
            auto v = a.column(c);
            const auto & ft = field_tables(a.field());
            for (auto x : v)
                if (x != 0) {
                    Residue inv = ft.inv[x];
                    for (auto & y : v)
                        y = ft.mul[y][inv];
                    break;
                }
            return v;
        }
    }

    auto simplify(const LinearMatroid & m) -> LinearMatroid
    {
        vector<size_t> by_label(m.size());
        for (size_t i = 0; i < m.size(); ++i)
            by_label[i] = i;
        std::sort(by_label.begin(), by_label.end(), [&](size_t a, size_t b) { return m.labels()[a] < m.labels()[b]; });

        std::set<vector<Residue>> seen;
        vector<bool> keep(m.size(), false);
        for (auto i : by_label) {
            auto v = normalized_column(m.rep(), i);
            if (weight(v) == 0)
                continue;
            if (seen.insert(v).second)
                keep[i] = true;
        }

        LabelSet labels;
        for (size_t i = 0; i < m.size(); ++i)
            if (keep[i])
                labels.push_back(m.labels()[i]);
        return restrict_to(m, labels);
    }

    auto is_simple(const LinearMatroid & m) -> bool
    {
        return simplify(m).size() == m.size();
    }

    auto dual(const LinearMatroid & m) -> LinearMatroid
    {
        auto ech = row_echelon(m.rep());
        size_t n = m.size(), r = ech.pivot_cols.size();
        vector<bool> is_pivot(n, false);
        for (auto c : ech.pivot_cols)
            is_pivot[c] = true;
        vector<size_t> free_cols;
        for (size_t c = 0; c < n; ++c)
            if (! is_pivot[c])
                free_cols.push_back(c);

        const auto & ft = field_tables(m.field());
        GFMatrix out(m.field(), n - r, n);
        for (size_t k = 0; k < free_cols.size(); ++k)
            out.set(k, free_cols[k], 1);
        for (size_t i = 0; i < r; ++i)
            for (size_t k = 0; k < free_cols.size(); ++k)
                out.set(k, ech.pivot_cols[i], ft.neg[ech.reduced(i, free_cols[k])]);
        return LinearMatroid(std::move(out), m.labels());
    }

    namespace
    {
        auto check_injection(const LinearMatroid & m, const LinearMatroid & n, const LabelMap & f,
            vector<size_t> & image) -> bool
        {
            if (f.size() != m.size())
                return false;
            std::set<Label> used;
            image.assign(m.size(), 0);
            for (size_t i = 0; i < m.size(); ++i) {
                auto it = f.find(m.labels()[i]);
                if (it == f.end() || ! n.contains(it->second) || ! used.insert(it->second).second)
                    return false;
                image[i] = n.index_of(it->second);
            }
            return true;
        }

        auto ranks_agree_on_small_subsets(const LinearMatroid & m, const LinearMatroid & n, const vector<size_t> & image) -> bool
        {
            return for_each_subset_upto(m.size(), m.rank() + 1, [&](const vector<size_t> & s) {
                vector<size_t> t;
                t.reserve(s.size());
                for (auto i : s)
                    t.push_back(image[i]);
                return rank(select_columns(m.rep(), s)) == rank(select_columns(n.rep(), t));
            });
        }
    }

    auto verify_isomorphism(const LinearMatroid & m, const LinearMatroid & n, const LabelMap & f) -> bool
    {
        vector<size_t> image;
        if (m.size() != n.size() || m.rank() != n.rank() || ! check_injection(m, n, f, image))
            return false;
        return ranks_agree_on_small_subsets(m, n, image);
    }

    auto verify_restriction(const LinearMatroid & m, const LinearMatroid & n, const LabelMap & f) -> bool
    {
        vector<size_t> image;
        if (m.size() > n.size() || ! check_injection(m, n, f, image))
            return false;
        return ranks_agree_on_small_subsets(m, n, image);
    }

    auto verify_minor_witness(const LinearMatroid & m, const LinearMatroid & n, const MinorWitness & w) -> bool
    {
        for (auto l : w.contract)
            if (! m.contains(l))
                return false;
        for (auto l : w.del)
            if (! m.contains(l))
                return false;
        std::set<Label> t(w.contract.begin(), w.contract.end()), d(w.del.begin(), w.del.end());
        if (t.size() != w.contract.size() || d.size() != w.del.size())
            return false;
        for (auto l : t)
            if (d.count(l))
                return false;
        if (! is_independent(m, w.contract))
            return false;
        auto minor = contract(delete_elements(m, w.del), w.contract);
        return verify_isomorphism(n, minor, w.bijection);
    }

    auto to_string(const LabelSet & s) -> string
    {
        std::ostringstream out;
        out << "{";
        for (size_t i = 0; i < s.size(); ++i)
            out << (i ? "," : "") << s[i];
        out << "}";
        return out.str();
    }

    auto to_string(const LabelMap & f) -> string
    {
        std::ostringstream out;
        bool first = true;
        for (auto & [a, b] : f) {
            out << (first ? "" : ",") << a << "->" << b;
            first = false;
        }
        return out.str();
    }

    auto to_string(const MinorWitness & w) -> string
    {
        return "contract " + to_string(w.contract) + " delete " + to_string(w.del) + " map " + to_string(w.bijection);
    }
}
