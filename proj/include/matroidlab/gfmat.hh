/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MATROIDLAB_GUARD_GFMAT_HH
#define MATROIDLAB_GUARD_GFMAT_HH 1

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace matroidlab
{
    /// Characteristic of the prime field a matrix lives over. Only GF(3) and
    /// GF(5) are admitted.
    enum class FieldChar : std::uint8_t
    {
        gf3 = 3,
        gf5 = 5
    };

    /// Throws std::invalid_argument for anything other than 3 or 5.
    auto field_from_int(long long p) -> FieldChar;

    inline auto characteristic(FieldChar f) -> int
    {
        return static_cast<int>(f);
    }

    using Residue = std::uint8_t;

    /// Multiplication, inverse and negation tables for one field.
    struct FieldTables
    {
        int p;
        Residue mul[5][5];
        Residue inv[5];
        Residue neg[5];

        auto add(Residue a, Residue b) const -> Residue
        {
            int s = a + b;
            return static_cast<Residue>(s >= p ? s - p : s);
        }

        auto sub(Residue a, Residue b) const -> Residue
        {
            int s = a - b;
            return static_cast<Residue>(s < 0 ? s + p : s);
        }
    };

    auto field_tables(FieldChar f) -> const FieldTables &;

    /// Least non-negative residue of an arbitrary integer.
    auto residue_of(long long value, FieldChar f) -> Residue;

    /// Representative in {-(p-1)/2, ..., (p-1)/2}.
    auto signed_value(Residue r, FieldChar f) -> int;

    class ParseError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /**
     * Dense row-major matrix over GF(p), entries stored as least
     * non-negative residues. Matrices with zero rows or zero columns are
     * legal.
     */
    class GFMatrix
    {
    public:
        GFMatrix() = default;
        GFMatrix(FieldChar field, std::size_t rows, std::size_t cols);

        static auto identity(FieldChar field, std::size_t n) -> GFMatrix;

        auto field() const -> FieldChar
        {
            return _field;
        }

        auto p() const -> int
        {
            return characteristic(_field);
        }

        auto rows() const -> std::size_t
        {
            return _rows;
        }

        auto cols() const -> std::size_t
        {
            return _cols;
        }

        auto empty() const -> bool
        {
            return _rows == 0 || _cols == 0;
        }

        auto operator()(std::size_t r, std::size_t c) const -> Residue
        {
            return _entries[r * _cols + c];
        }

        /// Bounds-checked access.
        auto at(std::size_t r, std::size_t c) const -> Residue;

        /// Stores value mod p.
        auto set(std::size_t r, std::size_t c, long long value) -> void;

        auto signed_at(std::size_t r, std::size_t c) const -> int;

        auto row(std::size_t r) const -> std::vector<Residue>;
        auto column(std::size_t c) const -> std::vector<Residue>;

        auto entries() const -> std::span<const Residue>
        {
            return _entries;
        }

        auto transpose() const -> GFMatrix;

        /// Entries in signed form, row-major; used to carry a matrix with
        /// entries in {-1, 0, 1} across fields.
        auto to_signed() const -> std::vector<long long>;

        auto operator==(const GFMatrix &) const -> bool = default;

    private:
        FieldChar _field = FieldChar::gf3;
        std::size_t _rows = 0, _cols = 0;
        std::vector<Residue> _entries;
    };

    /// Integer matrix, the field-independent master copy of a construction.
    struct IntMatrix
    {
        std::size_t rows = 0, cols = 0;
        std::vector<long long> entries;

        IntMatrix() = default;
        IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, 0) {}
        IntMatrix(std::initializer_list<std::initializer_list<long long>> init);

        auto operator()(std::size_t r, std::size_t c) const -> long long
        {
            return entries[r * cols + c];
        }

        auto operator()(std::size_t r, std::size_t c) -> long long &
        {
            return entries[r * cols + c];
        }

        auto operator==(const IntMatrix &) const -> bool = default;
    };

    auto reduce(const IntMatrix & m, FieldChar f) -> GFMatrix;
    auto reduce(FieldChar f, std::size_t rows, std::size_t cols, std::span<const long long> entries) -> GFMatrix;
    auto reduce(FieldChar f, std::initializer_list<std::initializer_list<long long>> init) -> GFMatrix;

    /// Signed-form integer copy of a GFMatrix.
    auto to_int_matrix(const GFMatrix & m) -> IntMatrix;

    struct RowEchelon
    {
        GFMatrix reduced;                     ///< reduced row echelon form, zero rows dropped
        std::vector<std::size_t> pivot_cols;  ///< one per nonzero row, increasing
    };

    auto row_echelon(const GFMatrix & a) -> RowEchelon;
    auto rank(const GFMatrix & a) -> std::size_t;

    auto support(std::span<const Residue> v) -> std::vector<std::size_t>;
    auto weight(std::span<const Residue> v) -> std::size_t;

    // Elementary transformations. Each returns a new matrix and throws
    // std::out_of_range for bad indices.
    auto scale_column(const GFMatrix & a, std::size_t c, long long scalar) -> GFMatrix;
    auto permute_rows(const GFMatrix & a, std::span<const std::size_t> perm) -> GFMatrix;
    auto permute_columns(const GFMatrix & a, std::span<const std::size_t> perm) -> GFMatrix;
    auto select_rows(const GFMatrix & a, std::span<const std::size_t> rows) -> GFMatrix;
    auto select_columns(const GFMatrix & a, std::span<const std::size_t> cols) -> GFMatrix;
    auto delete_rows(const GFMatrix & a, std::span<const std::size_t> rows) -> GFMatrix;
    auto delete_columns(const GFMatrix & a, std::span<const std::size_t> cols) -> GFMatrix;
    auto append_row(const GFMatrix & a, std::span<const long long> row) -> GFMatrix;
    auto append_column(const GFMatrix & a, std::span<const long long> col) -> GFMatrix;
    auto hconcat(const GFMatrix & a, const GFMatrix & b) -> GFMatrix;
    auto vconcat(const GFMatrix & a, const GFMatrix & b) -> GFMatrix;
    /// row dst += scalar * row src
    auto add_row(const GFMatrix & a, std::size_t src, std::size_t dst, long long scalar = 1) -> GFMatrix;

    /// Human-readable rendering; signed form prints -1 instead of p-1.
    auto to_string(const GFMatrix & a, bool signed_form = true) -> std::string;

    /// Matrix file format: optional '#' comment lines, then `field <p>`,
    /// `rows <r>`, `cols <c>`, then r lines of c integers reduced mod p.
    auto read_gfmat(std::istream & in) -> GFMatrix;
    auto write_gfmat(std::ostream & out, const GFMatrix & a) -> void;
    auto load_gfmat(const std::string & path) -> GFMatrix;
    auto save_gfmat(const std::string & path, const GFMatrix & a) -> void;
}

#endif
