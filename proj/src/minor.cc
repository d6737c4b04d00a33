/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <matroidlab/matroid.hh>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <set>
#include <thread>

using std::size_t;
using std::vector;

namespace matroidlab
{
    auto default_thread_count() -> unsigned
    {
        unsigned hw = std::max(1u, std::thread::hardware_concurrency());
        if (const char * env = std::getenv("MATROIDLAB_THREADS")) {
            char * end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end != env && *end == '\0' && v > 0)
                return unsigned(v);
        }
        return hw;
    }

    namespace
    {
        /// Independent subsets of the given size, in lexicographic order of
        /// the sorted label list.
        auto independent_subsets(const LinearMatroid & m, size_t size) -> vector<LabelSet>
        {
            LabelSet sorted = m.labels();
            std::sort(sorted.begin(), sorted.end());
            vector<size_t> idx;
            for (auto l : sorted)
                idx.push_back(m.index_of(l));

            vector<LabelSet> result;
            LabelSet current;
            vector<size_t> chosen;
            auto rec = [&](auto & self, size_t start) -> void {
                if (current.size() == size) {
                    result.push_back(current);
                    return;
                }
                for (size_t i = start; i + (size - current.size()) <= sorted.size(); ++i) {
                    chosen.push_back(idx[i]);
                    bool indep = rank(select_columns(m.rep(), chosen)) == chosen.size();
                    if (indep) {
                        current.push_back(sorted[i]);
                        self(self, i + 1);
                        current.pop_back();
                    }
                    chosen.pop_back();
                }
            };
            rec(rec, 0);
            return result;
        }

        /// Maximal independent subset of x, scanning in the given order.
        auto independent_part(const LinearMatroid & m, const LabelSet & x) -> LabelSet
        {
            LabelSet result;
            vector<size_t> chosen;
            for (auto l : x) {
                size_t i = m.index_of(l);
                if (std::find(chosen.begin(), chosen.end(), i) != chosen.end())
                    continue;
                chosen.push_back(i);
                if (rank(select_columns(m.rep(), chosen)) == chosen.size())
                    result.push_back(l);
                else
                    chosen.pop_back();
            }
            return result;
        }
    }

    auto has_minor(const LinearMatroid & m, const LinearMatroid & n,
        const std::optional<LabelSet> & hint, const MinorSearchOptions & options) -> std::optional<MinorWitness>
    {
        if (! is_simple(n))
            throw std::invalid_argument("has_minor: target matroid must be simple");

        LabelSet base;
        if (hint) {
            for (auto l : *hint)
                if (! m.contains(l))
                    throw UnknownLabel(l);
            base = independent_part(m, *hint);
        }

        auto m1 = simplify(contract(m, base));
        if (m1.rank() < n.rank() || m1.size() < n.size())
            return std::nullopt;

        auto candidates = independent_subsets(m1, m1.rank() - n.rank());

        vector<std::optional<MinorWitness>> found(candidates.size());
        std::atomic<size_t> best{candidates.size()};
        std::atomic<size_t> next_block{0};
        size_t block = std::max<size_t>(1, options.block_size);

        auto attempt = [&](size_t i) -> void {
            const auto & t = candidates[i];
            auto m2 = simplify(contract(m1, t));
            if (m2.size() < n.size())
                return;
            auto emb = is_restriction_of(n, m2);
            if (! emb)
                return;

            MinorWitness w;
            w.contract = base;
            w.contract.insert(w.contract.end(), t.begin(), t.end());
            std::set<Label> keep(w.contract.begin(), w.contract.end());
            for (auto & [a, b] : *emb)
                keep.insert(b);
            for (auto l : m.labels())
                if (! keep.count(l))
                    w.del.push_back(l);
            std::sort(w.del.begin(), w.del.end());
            w.bijection = *emb;
            found[i] = std::move(w);

            size_t cur = best.load();
            while (i < cur && ! best.compare_exchange_weak(cur, i))
                ;
        };

        auto worker = [&]() -> void {
            while (true) {
                size_t b = next_block.fetch_add(1);
                size_t lo = b * block;
                if (lo >= candidates.size() || lo >= best.load())
                    return;
                size_t hi = std::min(candidates.size(), lo + block);
                for (size_t i = lo; i < hi && i < best.load(); ++i)
                    attempt(i);
            }
        };

        unsigned nthreads = options.threads ? options.threads : default_thread_count();
        size_t blocks = (candidates.size() + block - 1) / block;
        nthreads = unsigned(std::min<size_t>(nthreads, std::max<size_t>(1, blocks)));
        if (nthreads <= 1)
            worker();
        else {
            vector<std::thread> pool;
            for (unsigned k = 0; k < nthreads; ++k)
                pool.emplace_back(worker);
            for (auto & th : pool)
                th.join();
        }

        if (best.load() == candidates.size())
            return std::nullopt;
        return found[best.load()];
    }

    auto has_u24_minor(const LinearMatroid & m) -> bool
    {
        if (m.rank() < 2)
            return false;
        for (auto & t : independent_subsets(m, m.rank() - 2))
            if (simplify(contract(m, t)).size() >= 4)
                return true;
        return false;
    }
}
