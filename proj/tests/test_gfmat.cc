#include <matroidlab/constructions.hh>
#include <matroidlab/gfmat.hh>

#include "oracles.hh"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace matroidlab;
using std::size_t;
using std::vector;

namespace
{
    auto random_matrix(std::mt19937 & rng, FieldChar f, size_t r, size_t c) -> GFMatrix
    {
        GFMatrix a(f, r, c);
        std::uniform_int_distribution<int> d(0, characteristic(f) - 1);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j)
                a.set(i, j, d(rng));
        return a;
    }

    auto oracle_rank(const GFMatrix & a) -> size_t
    {
        vector<vector<int>> cols;
        for (size_t c = 0; c < a.cols(); ++c) {
            vector<int> v;
            for (size_t r = 0; r < a.rows(); ++r)
                v.push_back(a(r, c));
            cols.push_back(v);
        }
        return oracle::naive_rank(cols, a.p());
    }
}

TEST_CASE("reduce gives least non-negative residues")
{
    CHECK(reduce(FieldChar::gf3, {{-1}})(0, 0) == 2);
    CHECK(reduce(FieldChar::gf5, {{-1}})(0, 0) == 4);
    auto a = reduce(FieldChar::gf3, {{0, 1}, {3, 4}});
    CHECK(a == reduce(FieldChar::gf3, {{0, 1}, {0, 1}}));
    CHECK(reduce(to_int_matrix(a), FieldChar::gf3) == a);
}

TEST_CASE("field characteristic is restricted")
{
    CHECK(field_from_int(3) == FieldChar::gf3);
    CHECK(field_from_int(5) == FieldChar::gf5);
    CHECK_THROWS_AS(field_from_int(2), std::invalid_argument);
    CHECK_THROWS_AS(field_from_int(7), std::invalid_argument);
}

TEST_CASE("rank of small examples")
{
    auto k4 = reduce(hconcat(identity_int(3), build_D(3)), FieldChar::gf3);
    CHECK(rank(k4) == 3);
    CHECK(rank(GFMatrix(FieldChar::gf3, 4, 6)) == 0);
    CHECK(rank(GFMatrix(FieldChar::gf5, 0, 0)) == 0);
    CHECK(rank(GFMatrix(FieldChar::gf5, 3, 0)) == 0);

    auto pre = named("AG23E_PRE").gf(FieldChar::gf3);
    auto ech = row_echelon(pre);
    CHECK(ech.reduced.rows() == 4);
    CHECK(ech.pivot_cols == vector<size_t>{0, 1, 2, 5});
}

TEST_CASE("support and weight")
{
    vector<Residue> v = {1, 0, 2};
    CHECK(support(v) == vector<size_t>{0, 2});
    CHECK(weight(v) == 2);
    vector<Residue> z(4, 0);
    CHECK(weight(z) == 0);
    CHECK(support(z).empty());
    auto col = reduce(FieldChar::gf3, {{-1}, {-1}, {1}, {1}}).column(0);
    CHECK(weight(col) == 4);
}

TEST_CASE("elementary column and row operations")
{
    auto a = reduce(FieldChar::gf3, {{1}, {1}, {-1}});
    CHECK(scale_column(a, 0, -1) == reduce(FieldChar::gf3, {{-1}, {-1}, {1}}));
    CHECK_THROWS_AS(scale_column(a, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(scale_column(a, 1, 1), std::out_of_range);

    auto t2 = named("T2").gf(FieldChar::gf3);
    vector<long long> row = {-1, -1, -1};
    CHECK(append_row(t2, row) == named("T2PLUS").gf(FieldChar::gf3));

    auto b = reduce(FieldChar::gf3, {{1, 0}, {0, 0}, {0, 1}});
    vector<size_t> drop = {1};
    CHECK(rank(delete_rows(b, drop)) == rank(b));

    vector<size_t> perm = {2, 0, 1};
    CHECK(permute_rows(b, perm).row(0) == b.row(2));
    vector<size_t> bad = {0, 0, 1};
    CHECK_THROWS_AS(permute_rows(b, bad), std::out_of_range);
    CHECK(add_row(b, 0, 2, 1).row(2) == vector<Residue>{1, 1});
}

TEST_CASE("random rank properties")
{
    std::mt19937 rng(12345);
    for (auto f : {FieldChar::gf3, FieldChar::gf5})
        for (int iter = 0; iter < 300; ++iter) {
            size_t r = rng() % 6, c = rng() % 8;
            auto a = random_matrix(rng, f, r, c);
            size_t rk = rank(a);
            REQUIRE(rk == oracle_rank(a));
            CHECK(rk == rank(a.transpose()));
            CHECK(rk <= std::min(r, c));

            vector<size_t> rp(r), cp(c);
            std::iota(rp.begin(), rp.end(), 0);
            std::iota(cp.begin(), cp.end(), 0);
            std::shuffle(rp.begin(), rp.end(), rng);
            std::shuffle(cp.begin(), cp.end(), rng);
            auto b = permute_columns(permute_rows(a, rp), cp);
            if (c > 0)
                b = scale_column(b, rng() % c, 1 + rng() % (characteristic(f) - 1));
            CHECK(rank(b) == rk);

            auto s = a.to_signed();
            CHECK(reduce(f, r, c, s) == a);
        }
}

TEST_CASE("matrix file round trip")
{
    std::istringstream in("# comment\n# another\nfield 3\nrows 2\ncols 3\n1 -1 4\n0 5 -2\n");
    auto a = read_gfmat(in);
    CHECK(a == reduce(FieldChar::gf3, {{1, 2, 1}, {0, 2, 1}}));
    std::ostringstream out;
    write_gfmat(out, a);
    CHECK(out.str() == "field 3\nrows 2\ncols 3\n1 2 1\n0 2 1\n");
    std::istringstream again(out.str());
    CHECK(read_gfmat(again) == a);

    std::istringstream empty("field 5\nrows 0\ncols 0\n");
    CHECK(read_gfmat(empty).empty());

    std::istringstream bad_field("field 7\nrows 1\ncols 1\n1\n");
    CHECK_THROWS(read_gfmat(bad_field));
    std::istringstream short_row("field 3\nrows 1\ncols 2\n1\n");
    CHECK_THROWS_AS(read_gfmat(short_row), ParseError);
    std::istringstream junk("field 3\nrows 1\ncols 1\nx\n");
    CHECK_THROWS_AS(read_gfmat(junk), ParseError);
}
