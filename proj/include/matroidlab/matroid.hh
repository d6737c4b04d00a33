/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MATROIDLAB_GUARD_MATROID_HH
#define MATROIDLAB_GUARD_MATROID_HH 1

#include <matroidlab/gfmat.hh>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace matroidlab
{
    using Label = int;
    using LabelSet = std::vector<Label>;

    /// Map from labels of one matroid to labels of another.
    using LabelMap = std::map<Label, Label>;

    class UnknownLabel : public std::out_of_range
    {
    public:
        explicit UnknownLabel(Label l) : std::out_of_range("unknown label " + std::to_string(l)) {}
    };

    /**
     * The vector matroid of a GFMatrix, with one non-negative label per
     * column. Labels default to 0, 1, ..., ncols - 1.
     */
    class LinearMatroid
    {
    public:
        LinearMatroid() = default;
        explicit LinearMatroid(GFMatrix rep);
        LinearMatroid(GFMatrix rep, LabelSet labels);

        auto rep() const -> const GFMatrix &
        {
            return _rep;
        }

        auto labels() const -> const LabelSet &
        {
            return _labels;
        }

        auto field() const -> FieldChar
        {
            return _rep.field();
        }

        auto size() const -> std::size_t
        {
            return _labels.size();
        }

        auto rank() const -> std::size_t
        {
            return _rank;
        }

        auto contains(Label l) const -> bool;

        /// Column index of a label; throws UnknownLabel.
        auto index_of(Label l) const -> std::size_t;

        auto column(Label l) const -> std::vector<Residue>
        {
            return _rep.column(index_of(l));
        }

    private:
        GFMatrix _rep;
        LabelSet _labels;
        std::size_t _rank = 0;
    };

    auto vector_matroid(const GFMatrix & a) -> LinearMatroid;

    auto subset_rank(const LinearMatroid & m, const LabelSet & x) -> std::size_t;
    auto is_independent(const LinearMatroid & m, const LabelSet & x) -> bool;

    auto delete_elements(const LinearMatroid & m, const LabelSet & d) -> LinearMatroid;

    /// Contraction by pivoting: each element with a nonzero column is pivoted
    /// on its first nonzero entry and its row and column removed; loops are
    /// deleted.
    auto contract(const LinearMatroid & m, const LabelSet & t) -> LinearMatroid;

    /// Restriction to a label set, in the order the labels appear in m.
    auto restrict_to(const LinearMatroid & m, const LabelSet & x) -> LinearMatroid;

    /// Removes loops and keeps the lowest label of each parallel class.
    auto simplify(const LinearMatroid & m) -> LinearMatroid;

    auto is_simple(const LinearMatroid & m) -> bool;

    /// Standard-form dual: [I | A] becomes [-A^T | I], labels carried along.
    auto dual(const LinearMatroid & m) -> LinearMatroid;

    /// Checks that f is a bijection E(m) -> E(n) preserving the rank of every
    /// subset with at most rank(m) + 1 elements.
    auto verify_isomorphism(const LinearMatroid & m, const LinearMatroid & n, const LabelMap & f) -> bool;

    /// Checks that f is an injection E(m) -> E(n) with m isomorphic to the
    /// restriction of n to the image.
    auto verify_restriction(const LinearMatroid & m, const LinearMatroid & n, const LabelMap & f) -> bool;

    auto is_isomorphic(const LinearMatroid & m, const LinearMatroid & n) -> std::optional<LabelMap>;

    /// Searches for an injection of E(m) into E(n) under which m is the
    /// restriction of n to the image.
    auto is_restriction_of(const LinearMatroid & m, const LinearMatroid & n) -> std::optional<LabelMap>;

    /// Certificate that n is isomorphic to m / contract \ delete.
    struct MinorWitness
    {
        LabelSet contract;
        LabelSet del;
        LabelMap bijection;  ///< labels of n -> surviving labels of m

        auto operator==(const MinorWitness &) const -> bool = default;
    };

    auto verify_minor_witness(const LinearMatroid & m, const LinearMatroid & n, const MinorWitness & w) -> bool;

    struct MinorSearchOptions
    {
        /// Worker count; 0 means the MATROIDLAB_THREADS cap.
        unsigned threads = 0;
        /// Candidate contraction sets handed out per work unit.
        std::size_t block_size = 64;
    };

    /// Worker cap from MATROIDLAB_THREADS, defaulting to the hardware
    /// concurrency.
    auto default_thread_count() -> unsigned;

    /**
     * Searches for a minor of m isomorphic to n, where n is simple. With a
     * hint, m is first contracted by the hint and simplified. Contraction
     * sets are tried in lexicographic order of sorted labels; the first
     * success in that order is returned irrespective of thread count.
     */
    auto has_minor(const LinearMatroid & m, const LinearMatroid & n,
        const std::optional<LabelSet> & hint = std::nullopt,
        const MinorSearchOptions & options = {}) -> std::optional<MinorWitness>;

    /// True iff contracting some independent set down to rank 2 leaves at
    /// least four points after simplification.
    auto has_u24_minor(const LinearMatroid & m) -> bool;

    auto to_string(const LabelSet & s) -> std::string;
    auto to_string(const LabelMap & f) -> std::string;
    auto to_string(const MinorWitness & w) -> std::string;
}

#endif
