#include <matroidlab/constructions.hh>
#include <matroidlab/frame_template.hh>
#include <matroidlab/ytemplate.hh>

#include "oracles.hh"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace matroidlab;
using std::size_t;
using std::vector;

namespace
{
    const auto gf3 = FieldChar::gf3;

    auto col(std::initializer_list<int> v) -> vector<Residue>
    {
        vector<Residue> out;
        for (int x : v)
            out.push_back(Residue(((x % 3) + 3) % 3));
        return out;
    }

    /// The four-row construction whose conforming matroid, once Z is
    /// contracted, is M([S | P]) with S = [I2 | D2] and P = [1, 1]^T.
    /// Columns: Y0, Y1 (two), Z (two), then the frame block S.
    auto contract_construction() -> std::pair<GFMatrix, FrameTemplate>
    {
        FrameTemplate t;
        t.gamma = Gamma::trivial;
        t.x = 2;
        t.y0 = 1;
        t.y1 = 2;
        t.a1 = reduce(gf3, {{1, 1, 0}, {1, 0, 1}});
        t.delta_basis = GFMatrix(gf3, 0, 3);
        t.lambda_basis = GFMatrix(gf3, 0, 2);
        auto a = reduce(gf3, {
            {1, 1, 0, 0, 0, 0, 0, 0},
            {1, 0, 1, 0, 0, 0, 0, 0},
            {0, 0, 0, 1, 0, 1, 0, 1},
            {0, 0, 0, 0, 1, 0, 1, -1}});
        return {a, t};
    }

    const Placement contract_placement{{0, 1}, {}, {0}, {1, 2}, {3, 4}};

    auto random_matrix(std::mt19937 & rng, size_t r, size_t c) -> GFMatrix
    {
        GFMatrix a(gf3, r, c);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j)
                a.set(i, j, long(rng() % 3));
        return a;
    }

    auto same_occurrences(const vector<Occurrence> & a, const vector<oracle::Occurrence> & b) -> bool
    {
        if (a.size() != b.size())
            return false;
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i].rows != b[i].rows || a[i].cols != b[i].cols || a[i].scalars != b[i].scalars)
                return false;
        return true;
    }
}

TEST_CASE("named templates")
{
    auto phi2 = named_template("PHI2");
    CHECK(phi2.gamma == Gamma::plus_minus);
    CHECK(phi2.c + phi2.x + phi2.y0 + phi2.y1 == 0);
    auto cx = named_template("PHI_CX"), cx2 = named_template("PHI_CX2");
    CHECK(cx.c == 1);
    CHECK(cx.x == 1);
    CHECK(cx.a1 == reduce(gf3, {{1}}));
    CHECK(cx2.a1 == reduce(gf3, {{-1}}));
    for (auto & id : named_template_ids())
        CHECK_NOTHROW(named_template(id).validate());
    CHECK_THROWS_AS(named_template("PHI_Q"), std::invalid_argument);
}

TEST_CASE("gamma frame columns")
{
    CHECK(is_gamma_frame_column(col({1, -1, 0}), Gamma::trivial));
    CHECK(! is_gamma_frame_column(col({1, 1, 0}), Gamma::trivial));
    CHECK(is_gamma_frame_column(col({1, 1, 0}), Gamma::plus_minus));
    CHECK(! is_gamma_frame_column(col({-1, -1}), Gamma::plus_minus));
    CHECK(! is_gamma_frame_column(col({-1, 0}), Gamma::plus_minus));
    CHECK(! is_gamma_frame_column(col({1, 1, 1}), Gamma::plus_minus));
    CHECK(is_gamma_frame(dowling(3).rep(), Gamma::plus_minus));
    CHECK(! is_gamma_frame(dowling(3).rep(), Gamma::trivial));
}

TEST_CASE("respecting placements from the constructions")
{
    auto pre = named("AG23E_PRE").gf(gf3);
    auto r = respects(pre, Placement{{}, {}, {8}, {}, {}}, named_template("PHI_Y0"));
    CHECK_MESSAGE(r.ok, r.diagnostic);

    auto x = named("AG23E_X").gf(gf3);
    r = respects(x, Placement{{0}, {}, {}, {}, {}}, named_template("PHI_X"));
    CHECK_MESSAGE(r.ok, r.diagnostic);

    auto f7 = named("F7MINUS_CONFORMING").gf(gf3);
    r = respects(f7, Placement{{0}, {}, {}, {}, {}}, named_template("PHI_X"));
    CHECK_MESSAGE(r.ok, r.diagnostic);
    r = respects(f7, Placement{{}, {}, {6}, {}, {}}, named_template("PHI_Y0"));
    CHECK_MESSAGE(r.ok, r.diagnostic);

    auto [a, t] = contract_construction();
    r = respects(a, contract_placement, t);
    CHECK_MESSAGE(r.ok, r.diagnostic);
}

TEST_CASE("respects diagnostics")
{
    auto bad = reduce(gf3, {{1, 1}, {0, 1}, {0, 1}});
    auto r = respects(bad, Placement{}, named_template("PHI2"));
    CHECK(! r.ok);
    CHECK(r.diagnostic.find("Γ-frame violated") != std::string::npos);

    // the top row of AG23E_X is not in the zero subspace
    auto x = named("AG23E_X").gf(gf3);
    auto phi_x_trivial = named_template("PHI_X");
    phi_x_trivial.lambda_basis = GFMatrix(gf3, 0, 1);
    r = respects(x, Placement{{0}, {}, {}, {}, {}}, phi_x_trivial);
    CHECK(r.diagnostic.find("Λ membership violated") != std::string::npos);

    auto cxa = reduce(gf3, {{1, 0}, {1, 1}});
    CHECK(respects(cxa, Placement{{0}, {0}, {}, {}, {}}, named_template("PHI_CX")).ok);
    r = respects(cxa, Placement{{0}, {0}, {}, {}, {}}, named_template("PHI_CX2"));
    CHECK(r.diagnostic.find("A1 block mismatch") != std::string::npos);

    auto [a, t] = contract_construction();
    auto dirty = a;
    dirty.set(2, 1, 1);  // a Y1 entry below X, outside Delta = {0}
    r = respects(dirty, contract_placement, t);
    CHECK(r.diagnostic.find("Δ membership violated") != std::string::npos);
    dirty = a;
    dirty.set(0, 3, 1);
    CHECK(respects(dirty, contract_placement, t).diagnostic.find("nonzero on X") != std::string::npos);
    dirty = a;
    dirty.set(3, 3, 1);
    CHECK(respects(dirty, contract_placement, t).diagnostic.find("neither unit nor zero") != std::string::npos);

    CHECK_THROWS_AS(respects(x, Placement{{0, 0}, {}, {}, {}, {}}, phi_x_trivial), std::invalid_argument);
    CHECK_THROWS_AS(respects(x, Placement{{5}, {}, {}, {}, {}}, phi_x_trivial), std::invalid_argument);
    CHECK_THROWS_AS(respects(x, Placement{{}, {}, {}, {}, {}}, phi_x_trivial), std::invalid_argument);
    CHECK_THROWS_AS(respects(a, Placement{{0, 1}, {}, {0}, {1, 0}, {3, 4}}, t), std::invalid_argument);
}

TEST_CASE("conforms step and conforming matroids")
{
    auto pre = named("AG23E_PRE").gf(gf3);
    Placement py0{{}, {}, {8}, {}, {}};
    CHECK(conforms_step(pre, py0, {}) == pre);
    auto m = conforming_matroid(pre, py0);
    CHECK(m.size() == 9);
    CHECK(is_isomorphic(contract(m, {8}), named("AG23E").matroid(gf3)));

    // Phi2 with a frame matrix leaves the matroid alone
    auto d = dowling(3);
    CHECK(conforming_matroid(d.rep(), Placement{}).rep() == d.rep());

    auto [a, t] = contract_construction();
    auto stepped = conforms_step(a, contract_placement, {{3, 1}, {4, 2}});
    CHECK(stepped.column(3) == col({1, 0, 1, 0}));
    CHECK(stepped.column(4) == col({0, 1, 0, 1}));
    for (size_t c : {0, 1, 2, 5, 6, 7})
        CHECK(stepped.column(c) == a.column(c));

    auto conforming = conforming_matroid(stepped, contract_placement);
    CHECK(conforming.labels() == LabelSet{0, 3, 4, 5, 6, 7});
    auto target = vector_matroid(reduce(gf3, {{1, 0, 1, 1}, {0, 1, -1, 1}}));
    CHECK(is_isomorphic(contract(conforming, {3, 4}), target));

    auto single = conforms_step(a, contract_placement, {{3, 2}});
    CHECK(single.column(3) == col({0, 1, 1, 0}));
    CHECK_THROWS_AS(conforms_step(a, contract_placement, {{3, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(conforms_step(a, contract_placement, {{5, 1}}), std::invalid_argument);
}

TEST_CASE("template files")
{
    vector<FrameTemplate> all;
    for (auto & id : named_template_ids())
        all.push_back(named_template(id));
    all.push_back(contract_construction().second);
    for (auto & t : all) {
        std::stringstream ss;
        write_template(ss, t);
        auto back = read_template(ss);
        CHECK(back == t);
    }

    std::stringstream ss;
    write_template(ss, named_template("PHI_CX2"));
    auto text = ss.str();
    CHECK(text.rfind("template\ngamma {1}\nsets C=1 X=1 Y0=0 Y1=0\nA1\n", 0) == 0);

    for (auto broken : {"", "templat\n", "template\ngamma {2}\n", "template\ngamma {1}\nsets C=1 X=0\n",
             "template\ngamma {1}\nsets C=0 X=0 Y0=0 Y1=0\nA1\nfield 3\nrows 1\ncols 1\n1\n"}) {
        std::stringstream in(broken);
        CHECK_THROWS_AS(read_template(in), ParseError);
    }
}

TEST_CASE("complete lift transforms")
{
    auto t2 = named("T2").gf(gf3);
    auto t2p = add_zero_sum_row(t2);
    CHECK(t2p.row(3) == col({-1, -1, -1}));
    CHECK(has_zero_row_sums(t2p));
    CHECK(t2p == named("T2PLUS").gf(gf3));
    CHECK(remove_row(named("T3PLUS").gf(gf3), 5) == named("T3").gf(gf3));
    CHECK_THROWS_AS(remove_row(t2, 0), std::invalid_argument);

    auto mixed = reduce(gf3, {{1, 1}, {0, 1}, {0, 1}});
    CHECK(strip_graphic_columns(mixed) == reduce(gf3, {{1}, {1}, {1}}));
    auto rep = reduce(gf3, {{1, -1, 0, 1}, {1, -1, 0, 0}, {0, 0, 0, 1}});
    CHECK(dedupe_scalar_multiples(rep) == reduce(gf3, {{1, 0, 1}, {1, 0, 0}, {0, 0, 1}}));
    CHECK(drop_zero_rows(reduce(gf3, {{0, 0}, {1, 0}})) == reduce(gf3, {{1, 0}}));
}

TEST_CASE("column classification")
{
    auto c = classify_column(col({-1, -1, -1, 0}));
    CHECK(c.type == ColumnType::type3);
    CHECK(c.scalar == 2);
    c = classify_column(col({1, 1, -1, -1}));
    CHECK(c.type == ColumnType::type4);
    CHECK(c.scalar == 1);
    CHECK(classify_column(col({1, 1, 1, -1})).type == ColumnType::other);
    CHECK(classify_column(col({1, 1, 0})).type == ColumnType::other);
    CHECK(classify_column(col({1, 1, 1, 1, 1})).type == ColumnType::other);
    CHECK(classify_column(col({0, -1, 0})).type == ColumnType::graphic);
    CHECK(classify_column(col({0, -1, 1})).type == ColumnType::graphic);
    CHECK(classify_column(col({0, 0})).type == ColumnType::zero);
}

TEST_CASE("forbidden scanner")
{
    auto c = named("FORBIDDEN_C").gf(gf3);
    auto hits = forbidden_scan(c);
    bool identity = false;
    for (auto & h : hits)
        identity = identity || (h.id == "C" && h.occ.rows == vector<size_t>{0, 1, 2, 3, 4, 5} && h.occ.cols == vector<size_t>{0, 1, 2});
    CHECK(identity);

    auto negated = scale_column(c, 1, -1);
    bool scaled = false;
    for (auto & h : forbidden_scan(negated))
        scaled = scaled || (h.id == "C" && h.occ.cols == vector<size_t>{0, 1, 2} && h.occ.scalars == vector<int>{1, 2, 1});
    CHECK(scaled);

    for (int i = 1; i <= 3; ++i)
        CHECK(forbidden_scan(named("T" + std::to_string(i)).gf(gf3)).empty());

    // a negated row is not an equivalence move
    auto a = reduce(gf3, {{1}, {1}, {1}, {-1}});
    CHECK(forbidden_scan(a).empty());
}

TEST_CASE("forbidden scanner agrees with the naive oracle")
{
    for (auto & f : forbidden_patterns()) {
        auto host = f.matrix;
        for (auto & g : forbidden_patterns())
            CHECK(same_occurrences(find_occurrences(g.matrix, host), oracle::naive_occurrences(g.matrix, host)));
    }
    std::mt19937 rng(2024);
    size_t total = 0;
    for (int iter = 0; iter < 100; ++iter) {
        auto host = random_matrix(rng, 6, 4);
        for (auto & g : forbidden_patterns()) {
            auto fast = find_occurrences(g.matrix, host);
            CHECK(same_occurrences(fast, oracle::naive_occurrences(g.matrix, host)));
            total += fast.size();
        }
    }
    CHECK(total > 0);
}

TEST_CASE("signed-graphic form and reduction")
{
    CHECK(is_signed_graphic_form(dowling(4).rep()));
    CHECK(! is_signed_graphic_form(universal_matrix(named("T2").gf(gf3), 3)));
    CHECK(is_signed_graphic_form(GFMatrix(gf3, 0, 0)));

    // two equal rows of +-1 over a unit block and a two-ones block; the
    // first is removed and the second subtracted against the rest
    auto p = reduce(gf3, {{1, 1, -1}, {1, 1, -1}, {1, 0, 0}, {0, 1, 1}, {0, 0, 1}});
    CHECK(has_zero_row_sums(p));
    auto u = universal_matrix(remove_row(p, 0), 4);
    CHECK(! is_signed_graphic_form(u));
    auto r = signed_graphic_reduce(u, 0);
    CHECK(is_signed_graphic_form(r));
    CHECK(rank(r) == rank(u));
    CHECK(is_isomorphic(vector_matroid(r), vector_matroid(u)));

    auto frame = universal_matrix(GFMatrix(gf3, 3, 0), 3);
    CHECK(rank(signed_graphic_reduce(frame, 0)) == 3);
    CHECK_THROWS_AS(signed_graphic_reduce(universal_matrix(named("T2").gf(gf3), 3), 0), std::invalid_argument);
}

TEST_CASE("classification of the named blocks")
{
    auto expect = [](const GFMatrix & p, Verdict v) {
        auto c = classify_Y_template(p);
        CHECK_MESSAGE(c.verdict == v, to_string(c.verdict) << " for\n" << to_string(p));
        auto ok = verify_certificate(c);
        CHECK_MESSAGE(ok.ok, ok.reason);
        return c;
    };
    expect(named("T1").gf(gf3), Verdict::pi);
    expect(named("T2").gf(gf3), Verdict::sigma);
    expect(named("T3").gf(gf3), Verdict::omega);
    auto s = expect(named("T2PLUS").gf(gf3), Verdict::sigma);
    CHECK(! s.norm.appended);
    expect(named("T3PLUS").gf(gf3), Verdict::omega);
    expect(reduce(gf3, {{1}, {1}, {1}}), Verdict::signed_graphic);
    expect(GFMatrix(gf3, 3, 0), Verdict::signed_graphic);
    expect(reduce(gf3, {{1, 0}, {-1, 1}, {0, -1}}), Verdict::signed_graphic);
    expect(named("F7_PAIR").gf(gf3), Verdict::signed_graphic);
    expect(named("F7_TRIANGLE").gf(gf3), Verdict::signed_graphic);
    for (auto & row : table_rows())
        expect(reduce(row.matrix, gf3), Verdict::contains_ag23e);
    expect(reduce(gf3, {{1}, {1}, {1}, {-1}}), Verdict::contains_ag23e);
}

TEST_CASE("tampered certificates are rejected")
{
    auto c = classify_Y_template(reduce(gf3, {{1}, {1}, {1}}));
    REQUIRE(c.signed_graphic);
    auto bad = c;
    bad.signed_graphic->frame.set(0, 0, 2);
    CHECK(! verify_certificate(bad));
    bad = c;
    bad.norm.input = reduce(gf3, {{1}, {1}, {0}});
    CHECK(! verify_certificate(bad));

    auto pi = classify_Y_template(named("T1").gf(gf3));
    REQUIRE(pi.embedding);
    bad = pi;
    bad.verdict = Verdict::omega;
    CHECK(! verify_certificate(bad));
    bad = pi;
    bad.embedding->occ.scalars[0] = 3 - bad.embedding->occ.scalars[0];
    CHECK(! verify_certificate(bad));

    auto f = classify_Y_template(named("FORBIDDEN_B").gf(gf3));
    REQUIRE(f.forbidden);
    bad = f;
    bad.forbidden->witness.contract.pop_back();
    CHECK(! verify_certificate(bad));
    bad = f;
    bad.verdict = Verdict::unclassified;
    CHECK(! verify_certificate(bad));
}

TEST_CASE("classification of random small blocks")
{
    std::mt19937 rng(31337);
    size_t typed = 0, failures = 0;
    for (int iter = 0; iter < 400; ++iter) {
        size_t r = 1 + rng() % 6, cc = 1 + rng() % 4;
        auto p = random_matrix(rng, r, cc);
        auto c = classify_Y_template(p);
        if (c.verdict != Verdict::unclassified) {
            auto ok = verify_certificate(c);
            CHECK_MESSAGE(ok.ok, ok.reason << " for\n" << to_string(p));
        }
        bool all_typed = std::all_of(c.norm.classes.begin(), c.norm.classes.end(), [](const ColumnClass & k) {
            return k.type == ColumnType::type3 || k.type == ColumnType::type4;
        });
        if (all_typed && forbidden_scan(c.norm.normal).empty()) {
            ++typed;
            if (c.verdict == Verdict::unclassified) {
                ++failures;
                MESSAGE("unclassified block\n" << to_string(p));
            }
        }
    }
    CHECK(typed > 50);
    CHECK(failures == 0);
}

TEST_CASE("four type-3 columns with no common row")
{
    auto w4 = supplementary_patterns().front().matrix;
    for (size_t c = 0; c < 4; ++c)
        CHECK(classify_column(w4.column(c)).type == ColumnType::type3);
    // no table matrix occurs, and no row meets every support
    CHECK(forbidden_scan(w4).empty());
    for (size_t r = 0; r < 4; ++r)
        CHECK(weight(w4.row(r)) == 3);
    // any three columns do share a row
    for (size_t skip = 0; skip < 4; ++skip) {
        vector<size_t> keep;
        for (size_t c = 0; c < 4; ++c)
            if (c != skip)
                keep.push_back(c);
        auto three = select_columns(w4, keep);
        bool common = false;
        for (size_t r = 0; r < 4; ++r)
            common = common || weight(three.row(r)) == 3;
        CHECK(common);
        CHECK(classify_Y_template(three).verdict == Verdict::signed_graphic);
    }
    auto ag = named("AG23E").matroid(gf3);
    CHECK(has_minor(universal_matroid(w4, 4), ag));
    auto c = classify_Y_template(w4);
    CHECK(c.verdict == Verdict::contains_ag23e);
    CHECK(verify_certificate(c));
}

TEST_CASE("verdicts agree with a direct minor search")
{
    std::mt19937 rng(4242);
    auto ag = named("AG23E").matroid(gf3);
    int contains = 0, clean = 0;
    for (int iter = 0; iter < 40; ++iter) {
        size_t r = 2 + rng() % 3, cc = 1 + rng() % 3;
        auto p = random_matrix(rng, r, cc);
        auto c = classify_Y_template(p);
        REQUIRE(c.verdict != Verdict::unclassified);
        auto m = universal_matroid(c.norm.lifted, c.norm.lifted.rows());
        bool found = has_minor(m, ag).has_value();
        CHECK_MESSAGE(found == (c.verdict == Verdict::contains_ag23e), to_string(c.verdict) << " for\n" << to_string(p));
        (found ? contains : clean)++;
    }
    CHECK(contains > 0);
    CHECK(clean > 0);
}
