/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MATROIDLAB_GUARD_FRAME_TEMPLATE_HH
#define MATROIDLAB_GUARD_FRAME_TEMPLATE_HH 1

#include <matroidlab/matroid.hh>

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace matroidlab
{
    /// The multiplicative group of a ternary template: {1} or {1, -1}.
    enum class Gamma
    {
        trivial,
        plus_minus
    };

    /**
     * A ternary frame template. The columns of A1 and of the Delta basis are
     * ordered C, then Y0, then Y1. Delta and Lambda are subspaces given by
     * spanning rows; over GF(3) additive subgroups are subspaces, so closure
     * under Gamma comes for free.
     */
    struct FrameTemplate
    {
        Gamma gamma = Gamma::trivial;
        std::size_t c = 0, x = 0, y0 = 0, y1 = 0;
        GFMatrix a1{FieldChar::gf3, 0, 0};
        GFMatrix delta_basis{FieldChar::gf3, 0, 0};
        GFMatrix lambda_basis{FieldChar::gf3, 0, 0};

        auto cy_count() const -> std::size_t
        {
            return c + y0 + y1;
        }

        /// Throws std::invalid_argument on inconsistent shapes or dependent
        /// basis rows.
        auto validate() const -> void;

        auto operator==(const FrameTemplate &) const -> bool = default;
    };

    /// PHI2, PHI_C, PHI_X, PHI_Y0, PHI_CX, PHI_CX2.
    auto named_template(const std::string & id) -> FrameTemplate;
    auto named_template_ids() -> std::vector<std::string>;

    /// Whether v lies in the row space of basis.
    auto in_row_space(const GFMatrix & basis, const std::vector<Residue> & v) -> bool;

    /// Every column has at most two nonzero entries, a nonzero column
    /// contains a 1, and a second nonzero entry is -gamma for gamma in Gamma.
    auto is_gamma_frame(const GFMatrix & a, Gamma g) -> bool;
    auto is_gamma_frame_column(const std::vector<Residue> & v, Gamma g) -> bool;

    /// Where the template's sets sit inside a presented matrix. The i-th
    /// entry of x_rows is the i-th row of A1; c_cols, y0_cols, y1_cols give
    /// the columns of A1 in order.
    struct Placement
    {
        std::vector<std::size_t> x_rows;
        std::vector<std::size_t> c_cols, y0_cols, y1_cols, z_cols;
    };

    struct RespectResult
    {
        bool ok = false;
        std::string diagnostic;  ///< names the first violated condition

        explicit operator bool() const
        {
            return ok;
        }
    };

    /// Checks the five respecting conditions in order. Throws
    /// std::invalid_argument when the placement itself is malformed.
    auto respects(const GFMatrix & a, const Placement & where, const FrameTemplate & t) -> RespectResult;

    /// Replaces each Z column by its sum with the assigned Y1 column.
    auto conforms_step(const GFMatrix & a, const Placement & where, const std::map<std::size_t, std::size_t> & z_to_y1) -> GFMatrix;

    /// M(A) / C \ Y1, with elements labelled by column index.
    auto conforming_matroid(const GFMatrix & a, const Placement & where) -> LinearMatroid;

    auto read_template(std::istream & in) -> FrameTemplate;
    auto write_template(std::ostream & out, const FrameTemplate & t) -> void;
    auto load_template(const std::string & path) -> FrameTemplate;
    auto save_template(const std::string & path, const FrameTemplate & t) -> void;
}

#endif
