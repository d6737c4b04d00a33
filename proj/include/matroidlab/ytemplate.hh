/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MATROIDLAB_GUARD_YTEMPLATE_HH
#define MATROIDLAB_GUARD_YTEMPLATE_HH 1

#include <matroidlab/matroid.hh>

#include <compare>
#include <optional>
#include <string>
#include <vector>

// Complete lifted Y-templates YT(P) over GF(3), presented by the block P of
// the universal matrix [I | D | P]. Everything here works on P directly.

namespace matroidlab
{
    enum class ColumnType
    {
        type3,
        type4,
        graphic,
        zero,
        other
    };

    auto to_string(ColumnType t) -> std::string;

    struct ColumnClass
    {
        ColumnType type = ColumnType::zero;
        int scalar = 1;  ///< residue that brings the column to normal form; lowest one wins
    };

    /// Type3: scales to three 1s. Type4: scales to two 1s and two -1s.
    /// Graphic: scales to e_i or e_i - e_j.
    auto classify_column(const std::vector<Residue> & v) -> ColumnClass;

    auto has_zero_row_sums(const GFMatrix & p) -> bool;
    auto add_zero_sum_row(const GFMatrix & p) -> GFMatrix;
    /// Throws std::invalid_argument unless the rows of p sum to zero.
    auto remove_row(const GFMatrix & p, std::size_t i) -> GFMatrix;
    auto strip_graphic_columns(const GFMatrix & p) -> GFMatrix;
    /// Keeps the lowest-index column of each class of nonzero scalar
    /// multiples.
    auto dedupe_scalar_multiples(const GFMatrix & p) -> GFMatrix;
    auto drop_zero_rows(const GFMatrix & p) -> GFMatrix;

    /// Pattern row i sits at host row rows[i], pattern column j at host
    /// column cols[j], with host entries equal to scalars[j] times the
    /// pattern's.
    struct Occurrence
    {
        std::vector<std::size_t> rows, cols;
        std::vector<int> scalars;

        auto operator<=>(const Occurrence &) const = default;
    };

    auto is_occurrence(const GFMatrix & pattern, const GFMatrix & host, const Occurrence & occ) -> bool;

    /// All occurrences in lexicographic order, or just the least one when
    /// first_only is set. Rows are never scaled.
    auto find_occurrences(const GFMatrix & pattern, const GFMatrix & host, bool first_only = false) -> std::vector<Occurrence>;

    struct ForbiddenPattern
    {
        std::string id;                         ///< "E", or "E+-2" for row 2 removed from E+
        std::string base;                       ///< the base matrix it comes from
        std::optional<std::size_t> removed_row;
        GFMatrix matrix;
    };

    /// The fifteen table matrices A ... O, over GF(3).
    auto forbidden_patterns() -> const std::vector<ForbiddenPattern> &;

    /// Builds X+ minus row i (X+ is X itself when its rows already sum to
    /// zero), with zero rows dropped.
    auto derive_forbidden(const GFMatrix & base, std::size_t removed_row) -> GFMatrix;

    /// Forbidden bases beyond the table. W4 has every 3-subset of four
    /// rows as a type-3 column.
    auto supplementary_patterns() -> const std::vector<ForbiddenPattern> &;

    /// Table or supplementary base by id.
    auto forbidden_base_matrix(const std::string & base) -> std::optional<GFMatrix>;

    /// The table, the supplementary bases, then every derived pattern.
    auto extended_forbidden_patterns() -> const std::vector<ForbiddenPattern> &;

    struct ForbiddenHit
    {
        std::string id;
        Occurrence occ;
    };

    /// Every occurrence of a table matrix, in table order and then in
    /// occurrence order.
    auto forbidden_scan(const GFMatrix & p) -> std::vector<ForbiddenHit>;

    /// A contraction witness for AG(2,3)\e inside [I | D | X] for a table or
    /// supplementary id, computed once per id and cached.
    auto forbidden_witness(const std::string & base) -> MinorWitness;

    auto is_signed_graphic_form(const GFMatrix & a) -> bool;

    /// Subtracts every other row from row s. Throws std::invalid_argument if
    /// the result still has a column with three or more nonzero entries.
    auto signed_graphic_reduce(const GFMatrix & a, std::size_t s) -> GFMatrix;

    /// [I_r | D_r | P over a zero block] as a matrix.
    auto universal_matrix(const GFMatrix & p, std::size_t r) -> GFMatrix;

    enum class Verdict
    {
        signed_graphic,
        pi,
        sigma,
        omega,
        contains_ag23e,
        unclassified
    };

    auto to_string(Verdict v) -> std::string;

    struct Normalized
    {
        GFMatrix input;
        bool appended = false;  ///< whether a zero-sum row was added
        GFMatrix lifted;        ///< rows sum to zero
        GFMatrix normal;        ///< lifted minus zero and graphic columns, repeats and zero rows
        std::vector<ColumnClass> classes;
    };

    auto normalize_y_template(const GFMatrix & p) -> Normalized;

    struct SignedGraphicCertificate
    {
        std::optional<std::size_t> removed_row, special_row;
        GFMatrix block;      ///< normal form with removed_row deleted
        GFMatrix universal;  ///< [I | D | block]
        GFMatrix frame;      ///< universal after the row subtraction
    };

    struct EmbeddingCertificate
    {
        int t_index = 0;  ///< 1, 2 or 3
        std::optional<std::size_t> removed_row;
        GFMatrix block;
        Occurrence occ;   ///< block inside T_i
    };

    struct ForbiddenCertificate
    {
        ForbiddenPattern pattern;
        Occurrence occ;        ///< pattern inside the normal form
        MinorWitness witness;  ///< AG(2,3)\e inside [I | D | base]
    };

    struct YTemplateClass
    {
        Verdict verdict = Verdict::unclassified;
        Normalized norm;
        std::optional<SignedGraphicCertificate> signed_graphic;
        std::optional<EmbeddingCertificate> embedding;
        std::optional<ForbiddenCertificate> forbidden;
        std::vector<std::string> diagnostics;
    };

    auto classify_Y_template(const GFMatrix & p) -> YTemplateClass;

    struct CertificateCheck
    {
        bool ok = false;
        std::string reason;

        explicit operator bool() const
        {
            return ok;
        }
    };

    /// Rechecks a certificate from scratch: the normal form, the entries of
    /// any occurrence, and the matroid-level claim.
    auto verify_certificate(const YTemplateClass & c) -> CertificateCheck;
}

#endif
