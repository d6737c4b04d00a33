/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MATROIDLAB_GUARD_TESTS_ORACLES_HH
#define MATROIDLAB_GUARD_TESTS_ORACLES_HH 1

// Slow, independent reference implementations used to cross-check the
// library. Nothing here calls into the search code: ranks come from a
// separate elimination routine and matchings are enumerated exhaustively.

#include <matroidlab/gfmat.hh>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <tuple>
#include <vector>

namespace oracle
{
    using std::size_t;
    using std::vector;

    /// Rank of a list of column vectors with integer entries mod p.
    inline auto naive_rank(vector<vector<int>> cols, int p) -> size_t
    {
        auto md = [p](long long x) { return int(((x % p) + p) % p); };
        auto inv = [&](int a) {
            for (int b = 1; b < p; ++b)
                if (md(a * b) == 1)
                    return b;
            return 0;
        };
        size_t rank = 0;
        if (cols.empty())
            return 0;
        size_t dim = cols[0].size();
        for (auto & c : cols)
            for (auto & x : c)
                x = md(x);
        // eliminate on rows of the transposed system
        for (size_t row = 0; row < dim && rank < cols.size(); ++row) {
            size_t piv = cols.size();
            for (size_t j = rank; j < cols.size(); ++j)
                if (cols[j][row] != 0) {
                    piv = j;
                    break;
                }
            if (piv == cols.size())
                continue;
            std::swap(cols[rank], cols[piv]);
            int iv = inv(cols[rank][row]);
            for (auto & x : cols[rank])
                x = md(x * iv);
            for (size_t j = 0; j < cols.size(); ++j) {
                if (j == rank || cols[j][row] == 0)
                    continue;
                int f = cols[j][row];
                for (size_t k = 0; k < dim; ++k)
                    cols[j][k] = md(cols[j][k] - f * cols[rank][k]);
            }
            ++rank;
        }
        return rank;
    }

    /// Rank of every subset of the columns, indexed by bitmask.
    inline auto rank_table(const matroidlab::GFMatrix & a) -> vector<int>
    {
        size_t n = a.cols();
        vector<int> table(size_t(1) << n, 0);
        for (size_t mask = 1; mask < table.size(); ++mask) {
            vector<vector<int>> cols;
            for (size_t c = 0; c < n; ++c)
                if (mask >> c & 1) {
                    vector<int> v;
                    for (size_t r = 0; r < a.rows(); ++r)
                        v.push_back(a(r, c));
                    cols.push_back(v);
                }
            table[mask] = int(naive_rank(cols, a.p()));
        }
        return table;
    }

    /// Is there a bijection pi with ra(X) = rb(pi X) for every X? Elements
    /// are assigned one at a time and every subset of the assigned prefix
    /// that contains the newest element is compared.
    inline auto tables_isomorphic(const vector<int> & ra, const vector<int> & rb, size_t k) -> bool
    {
        vector<size_t> pi(k);
        vector<bool> used(k, false);
        std::function<bool(size_t)> rec = [&](size_t i) -> bool {
            if (i == k)
                return true;
            for (size_t y = 0; y < k; ++y) {
                if (used[y])
                    continue;
                pi[i] = y;
                bool ok = true;
                for (size_t sub = 0; sub < (size_t(1) << i) && ok; ++sub) {
                    size_t a = sub | (size_t(1) << i), b = size_t(1) << y;
                    for (size_t j = 0; j < i; ++j)
                        if (sub >> j & 1)
                            b |= size_t(1) << pi[j];
                    ok = ra[a] == rb[b];
                }
                if (! ok)
                    continue;
                used[y] = true;
                if (rec(i + 1))
                    return true;
                used[y] = false;
            }
            return false;
        };
        return rec(0);
    }

    /// Exhaustive minor test: every independent T, every surviving set S of
    /// size |E(N)|, and a full isomorphism check of (M/T)|S against N.
    inline auto naive_has_minor(const matroidlab::GFMatrix & m, const matroidlab::GFMatrix & n) -> bool
    {
        size_t nm = m.cols(), k = n.cols();
        if (k > nm)
            return false;
        auto rm = rank_table(m);
        auto rn = rank_table(n);
        int rank_n = rn.back();
        for (size_t t = 0; t < rm.size(); ++t) {
            int tsize = __builtin_popcountll(t);
            if (rm[t] != tsize)
                continue;
            if (rm.back() - tsize < rank_n)
                continue;
            for (size_t s = 0; s < rm.size(); ++s) {
                if ((s & t) || size_t(__builtin_popcountll(s)) != k)
                    continue;
                vector<size_t> elems;
                for (size_t c = 0; c < nm; ++c)
                    if (s >> c & 1)
                        elems.push_back(c);
                vector<int> rs(size_t(1) << k);
                for (size_t sub = 0; sub < rs.size(); ++sub) {
                    size_t mask = t;
                    for (size_t j = 0; j < k; ++j)
                        if (sub >> j & 1)
                            mask |= size_t(1) << elems[j];
                    rs[sub] = rm[mask] - tsize;
                }
                if (rs.back() != rank_n)
                    continue;
                if (tables_isomorphic(rn, rs, k))
                    return true;
            }
        }
        return false;
    }

    /// Rank of the chosen columns of a.
    inline auto rank_of(const matroidlab::GFMatrix & a, const vector<size_t> & cols) -> size_t
    {
        vector<vector<int>> vs;
        for (auto c : cols) {
            vector<int> v;
            for (size_t r = 0; r < a.rows(); ++r)
                v.push_back(a(r, c));
            vs.push_back(v);
        }
        return naive_rank(vs, a.p());
    }

    /// For every subset X of the columns of a, checks
    /// r_a(X) = r_b(img(X) + base) - r_b(base). With base empty this is an
    /// isomorphism onto a restriction; otherwise it certifies a minor of b.
    /// img must be injective and avoid base.
    inline auto mapped_ranks_agree(const matroidlab::GFMatrix & a, const matroidlab::GFMatrix & b,
        const vector<size_t> & img, const vector<size_t> & base) -> bool
    {
        size_t k = a.cols();
        if (img.size() != k)
            return false;
        vector<bool> seen(b.cols(), false);
        for (auto c : base) {
            if (c >= b.cols() || seen[c])
                return false;
            seen[c] = true;
        }
        for (auto c : img) {
            if (c >= b.cols() || seen[c])
                return false;
            seen[c] = true;
        }
        int rbase = int(rank_of(b, base));
        for (size_t mask = 0; mask < (size_t(1) << k); ++mask) {
            vector<size_t> xa, xb = base;
            for (size_t j = 0; j < k; ++j)
                if (mask >> j & 1) {
                    xa.push_back(j);
                    xb.push_back(img[j]);
                }
            if (int(rank_of(a, xa)) != int(rank_of(b, xb)) - rbase)
                return false;
        }
        return true;
    }

    /// Do the columns of a and b span the same set of projective points,
    /// each exactly once? Columns are compared after scaling the first
    /// nonzero entry to 1.
    inline auto same_point_set(const matroidlab::GFMatrix & a, const matroidlab::GFMatrix & b) -> bool
    {
        if (a.rows() != b.rows() || a.cols() != b.cols() || a.p() != b.p())
            return false;
        int p = a.p();
        auto points = [p](const matroidlab::GFMatrix & m) {
            vector<vector<int>> out;
            for (size_t c = 0; c < m.cols(); ++c) {
                vector<int> v;
                for (size_t r = 0; r < m.rows(); ++r)
                    v.push_back(m(r, c));
                int lead = 0;
                for (auto x : v)
                    if (x) {
                        lead = x;
                        break;
                    }
                if (! lead)
                    return vector<vector<int>>{};
                int inv = 1;
                while (inv * lead % p != 1)
                    ++inv;
                for (auto & x : v)
                    x = x * inv % p;
                out.push_back(v);
            }
            std::sort(out.begin(), out.end());
            return out;
        };
        auto pa = points(a), pb = points(b);
        if (pa.empty() && a.cols() > 0)
            return false;
        return pa == pb && std::adjacent_find(pa.begin(), pa.end()) == pa.end();
    }

    /// One occurrence of a pattern inside a host matrix.
    struct Occurrence
    {
        vector<size_t> rows, cols;
        vector<int> scalars;

        auto operator<=>(const Occurrence &) const = default;
    };

    /// Every row injection and column injection, with each column scaled by
    /// whichever nonzero scalar makes it match. Entries are residues.
    inline auto naive_occurrences(const matroidlab::GFMatrix & pattern, const matroidlab::GFMatrix & host) -> vector<Occurrence>
    {
        vector<Occurrence> out;
        size_t pr = pattern.rows(), pc = pattern.cols();
        if (pr > host.rows() || pc > host.cols())
            return out;
        int p = host.p();

        vector<size_t> rows, cols;
        vector<bool> rused(host.rows(), false), cused(host.cols(), false);

        auto check_cols = [&]() {
            vector<int> scalars;
            for (size_t j = 0; j < pc; ++j) {
                int found = 0;
                for (int s = 1; s < p && ! found; ++s) {
                    bool ok = true;
                    for (size_t i = 0; i < pr && ok; ++i)
                        ok = host(rows[i], cols[j]) == (s * pattern(i, j)) % p;
                    if (ok)
                        found = s;
                }
                if (! found)
                    return;
                scalars.push_back(found);
            }
            out.push_back(Occurrence{rows, cols, scalars});
        };

        std::function<void()> pick_cols = [&]() {
            if (cols.size() == pc) {
                check_cols();
                return;
            }
            for (size_t c = 0; c < host.cols(); ++c) {
                if (cused[c])
                    continue;
                cused[c] = true;
                cols.push_back(c);
                pick_cols();
                cols.pop_back();
                cused[c] = false;
            }
        };

        std::function<void()> pick_rows = [&]() {
            if (rows.size() == pr) {
                pick_cols();
                return;
            }
            for (size_t r = 0; r < host.rows(); ++r) {
                if (rused[r])
                    continue;
                rused[r] = true;
                rows.push_back(r);
                pick_rows();
                rows.pop_back();
                rused[r] = false;
            }
        };
        pick_rows();
        std::sort(out.begin(), out.end());
        return out;
    }
}

#endif
