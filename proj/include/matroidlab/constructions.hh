/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MATROIDLAB_GUARD_CONSTRUCTIONS_HH
#define MATROIDLAB_GUARD_CONSTRUCTIONS_HH 1

#include <matroidlab/matroid.hh>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace matroidlab
{
    class UnknownCatalogId : public std::invalid_argument
    {
    public:
        explicit UnknownCatalogId(const std::string & id) : std::invalid_argument("unknown catalog id " + id) {}
    };

    /// r x binom(r,2), columns e_i - e_j for i < j in lexicographic order.
    auto build_D(std::size_t r) -> IntMatrix;
    auto build_D(FieldChar f, std::size_t r) -> GFMatrix;

    auto identity_int(std::size_t n) -> IntMatrix;
    auto hconcat(const IntMatrix & a, const IntMatrix & b) -> IntMatrix;
    auto vconcat(const IntMatrix & a, const IntMatrix & b) -> IntMatrix;
    /// Appends the negated sum of the rows, so the new row sums are zero.
    auto append_zero_sum_row(const IntMatrix & p) -> IntMatrix;

    /// [I_r | D_r | P over a zero block]; throws if r < rows(P).
    auto universal_int(const IntMatrix & p, std::size_t r) -> IntMatrix;
    auto universal_matroid(const GFMatrix & p, std::size_t r) -> LinearMatroid;

    /// M(K_n) as M([I_{n-1} | D_{n-1}]).
    auto clique(std::size_t n, FieldChar f = FieldChar::gf3) -> LinearMatroid;

    /// The rank-r ternary Dowling geometry [I_r | D_r | D'_r], where D' has
    /// columns e_i + e_j.
    auto dowling(std::size_t r, FieldChar f = FieldChar::gf3) -> LinearMatroid;

    /// [I_r | D_r | Q] with Q an all-ones row over I_{r-1}; throws if r < 2.
    auto t_r_1(std::size_t r, FieldChar f = FieldChar::gf3) -> LinearMatroid;

    enum class EntryKind
    {
        matrix,   ///< a block such as P, meant to sit inside [I | D | P]
        matroid   ///< a full representation
    };

    struct NamedEntry
    {
        std::string id;
        IntMatrix matrix;
        EntryKind kind = EntryKind::matroid;
        std::string origin;                 ///< short description of where the object comes from
        LabelSet labels;                     ///< empty means 0, 1, ...
        std::optional<LabelSet> hint;        ///< contraction hint, if any

        auto gf(FieldChar f) const -> GFMatrix;

        /// The matroid of the stored matrix with the stored labels.
        auto matroid(FieldChar f) const -> LinearMatroid;
    };

    struct TableRow
    {
        std::string id;  ///< "A" ... "O"
        IntMatrix matrix;
        LabelSet contract_hint;
    };

    /// The fifteen forbidden submatrices with their contraction hints.
    auto table_rows() -> const std::vector<TableRow> &;

    /// Builtin entry; parametric ids are MK<n>, DOWLING<r>, PI<r>, SIGMA<r>,
    /// OMEGA<r>, T1_<r> and TABLE_<X>. Throws UnknownCatalogId.
    auto named(const std::string & id) -> NamedEntry;

    /// Every fixed id, plus representative parametric ones.
    auto catalog_ids() -> std::vector<std::string>;

    /// Catalog view with optional replacement matrices, used to exercise the
    /// suites against a corrupted catalog.
    class Catalog
    {
    public:
        auto override_entry(const std::string & id, const IntMatrix & m) -> void;
        auto get(const std::string & id) const -> NamedEntry;
        auto matroid(const std::string & id, FieldChar f = FieldChar::gf3) const -> LinearMatroid;
        auto has_overrides() const -> bool
        {
            return ! _overrides.empty();
        }

    private:
        std::map<std::string, IntMatrix> _overrides;
    };
}

#endif
