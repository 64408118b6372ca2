#include "signdet/coredet.hpp"

#include "signdet/bigraph.hpp"
#include "signdet/jacobian.hpp"

#include "doctest.h"
#include "testutil.hpp"

using namespace signdet;

namespace {

MultilinearPoly term(const Rational& coeff, std::vector<VarId> vars) {
    std::sort(vars.begin(), vars.end());
    MultilinearPoly p;
    p.add_term(Monomial{0, std::move(vars)}, coeff);
    return p;
}

VarId u(int col, int species) { return VarId{"U", col, species}; }

}  // namespace

TEST_CASE("column reduction pairs exact reversals") {
    RationalMatrix s = testutil::load_fixture("tail3.csv");
    ReducedSystem r = reduce(s);
    REQUIRE(r.columns.size() == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(r.columns[i].kept_col == i);
        REQUIRE(r.columns[i].reverse_col.has_value());
        CHECK(*r.columns[i].reverse_col == i + 3);
    }
    CHECK(r.irreducible_clean);
    CHECK(r.s_red == s.submatrix({0, 1, 2}, {0, 1, 2}));
    CHECK(r.u_red.rows() == 3);
    CHECK(r.u_red.cols() == 3);
}

TEST_CASE("reduced flux pattern keeps original column identities") {
    ReducedSystem r = reduce(testutil::load_fixture("cf3_a11_2.csv"));
    REQUIRE(r.columns.size() == 3);
    CHECK(r.columns[0].kept_col == 0);
    CHECK(r.columns[0].reverse_col == 1);
    CHECK(r.columns[1].kept_col == 2);
    CHECK(r.columns[1].reverse_col == 3);
    CHECK(r.columns[2].kept_col == 4);
    CHECK(!r.columns[2].reverse_col.has_value());

    struct Expect {
        int i, j, sign, var_col, var_species;
    };
    // Forward consumption keeps the kept column's rate variable; production
    // with a reverse partner flips to the partner's rate, negated.
    std::vector<Expect> expect = {
        {0, 0, -1, 2, 1}, {0, 1, -1, 2, 2}, {0, 3, 1, 1, 4},
        {1, 1, -1, 4, 2}, {1, 2, -1, 4, 3}, {1, 4, 1, 3, 5},
        {2, 0, 1, 5, 1},
    };
    int nonzero = 0;
    for (int i = 0; i < r.u_red.rows(); ++i)
        for (int j = 0; j < r.u_red.cols(); ++j)
            if (r.u_red.sign(i, j) != 0) ++nonzero;
    CHECK(nonzero == static_cast<int>(expect.size()));
    for (const auto& e : expect) {
        CHECK(r.u_red.sign(e.i, e.j) == e.sign);
        CHECK(r.u_red.at(e.i, e.j).var == u(e.var_col, e.var_species));
    }
}

TEST_CASE("reduction flags leftover mutual reversals") {
    RationalMatrix s(2, 3);
    s.at(0, 0) = 1; s.at(1, 0) = 2;
    s.at(0, 1) = -1; s.at(1, 1) = -2;
    s.at(0, 2) = -1; s.at(1, 2) = -2;
    ReducedSystem r = reduce(s);
    CHECK(r.columns.size() == 2);
    CHECK(!r.irreducible_clean);
}

TEST_CASE("zero columns are dropped, not paired") {
    RationalMatrix s(2, 3);
    s.at(0, 1) = 1;
    s.at(1, 1) = -1;
    ReducedSystem r = reduce(s);
    REQUIRE(r.columns.size() == 1);
    CHECK(r.columns[0].kept_col == 1);
    CHECK(r.irreducible_clean);
}

TEST_CASE("genericity levels across the parametrized family") {
    auto level = [](const std::string& f) {
        return genericity_check(reduce(testutil::load_fixture(f))).level;
    };
    CHECK(level("param_a1.csv") == Genericity::Generic);
    CHECK(level("param_a3.csv") == Genericity::Generic);
    CHECK(level("cf3_a11_2.csv") == Genericity::Generic);
    CHECK(level("cf3_a13_2.csv") == Genericity::Generic);
    CHECK(level("ssd_red.csv") == Genericity::Generic);

    GenericityResult weak = genericity_check(reduce(testutil::load_fixture("param_a2.csv")));
    CHECK(weak.level == Genericity::WeaklyGeneric);
    REQUIRE(weak.witness.has_value());
    CHECK(weak.witness->rows == std::vector<int>{0, 1, 2});
    CHECK(weak.witness->cols == std::vector<int>{0, 1, 2});

    GenericityResult weak2 = genericity_check(reduce(testutil::load_fixture("cf3_all1.csv")));
    CHECK(weak2.level == Genericity::WeaklyGeneric);
    REQUIRE(weak2.witness.has_value());
    CHECK(weak2.witness->rows == std::vector<int>{0, 1, 2});
}

TEST_CASE("rank below the component bound is not generic") {
    RationalMatrix s(2, 2);
    s.at(0, 0) = 1; s.at(0, 1) = 1;
    s.at(1, 0) = 1; s.at(1, 1) = 1;
    GenericityResult g = genericity_check(reduce(s));
    CHECK(g.level == Genericity::NotGeneric);
}

TEST_CASE("genericity scan reports when the pair budget is exceeded") {
    GenericityResult g = genericity_check(reduce(testutil::load_fixture("ex84.csv")), 3);
    CHECK(g.level == Genericity::Unverified);
}

TEST_CASE("core determinant of the minimal reversible system") {
    MultilinearPoly cd = core_determinant(testutil::load_fixture("rev2x2.csv"));
    MultilinearPoly want = term(1, {u(1, 1)});
    want += term(2, {u(1, 2)});
    CHECK(cd == want);
}

TEST_CASE("core determinant exact terms with two reversible pairs") {
    MultilinearPoly cd = core_determinant(testutil::load_fixture("cf3_a11_2.csv"));
    MultilinearPoly want = term(1, {u(2, 2), u(4, 3), u(5, 1)});
    want += term(-1, {u(1, 4), u(4, 2), u(5, 1)});
    want += term(-1, {u(2, 2), u(3, 5), u(5, 1)});
    want += term(-1, {u(1, 4), u(4, 3), u(5, 1)});
    want += term(-1, {u(1, 4), u(3, 5), u(5, 1)});
    CHECK(cd == want);
    CHECK(sign_counts(cd) == SignCounts{5, 1, 4});

    MultilinearPoly all1 = core_determinant(testutil::load_fixture("cf3_all1.csv"));
    MultilinearPoly want1 = term(-1, {u(1, 4), u(3, 5), u(5, 1)});
    want1 += term(-1, {u(1, 4), u(4, 2), u(5, 1)});
    want1 += term(-1, {u(1, 4), u(4, 3), u(5, 1)});
    want1 += term(-1, {u(2, 2), u(3, 5), u(5, 1)});
    CHECK(all1 == want1);
}

TEST_CASE("core determinant of a uniformly signed system") {
    MultilinearPoly cd = core_determinant(testutil::load_fixture("ssd_red.csv"));
    MultilinearPoly want = term(-2, {u(1, 1), u(2, 2)});
    want += term(-1, {u(1, 1), u(4, 3)});
    want += term(-2, {u(1, 2), u(4, 1)});
    want += term(-1, {u(1, 2), u(4, 3)});
    CHECK(cd == want);
    CHECK(testutil::anomalous_count(cd, 3) == 0);
}

TEST_CASE("core determinant with every column reversible") {
    MultilinearPoly cd = core_determinant(testutil::load_fixture("exB_rev.csv"));
    CHECK(cd == term(-1, {u(1, 2), u(3, 3), u(5, 1)}));
}

TEST_CASE("core determinant matches characteristic extraction") {
    const char* files[] = {"rev2x2.csv",    "cf3_a11_2.csv", "cf3_a13_2.csv",
                           "cf3_all1.csv",  "ssd_red.csv",   "exB_rev.csv",
                           "param_a1.csv",  "param_a2.csv",  "param_a3.csv",
                           "tail2.csv",     "tail3.csv",     "tail4.csv",
                           "tail5.csv",     "tail6.csv",     "ex84.csv"};
    for (const char* f : files) {
        RationalMatrix s = testutil::load_fixture(f);
        CAPTURE(f);
        CHECK(core_determinant(s) == core_determinant_oracle(s));
    }
}

TEST_CASE("core determinant on random reversible systems") {
    std::mt19937_64 rng(1203);
    for (int it = 0; it < 60; ++it) {
        int d = 2 + static_cast<int>(rng() % 4);
        int base = 2 + static_cast<int>(rng() % 3);
        int rev = static_cast<int>(rng() % (base + 1));
        RationalMatrix s = testutil::random_reversible(rng, d, base, 0.65, rev);
        CAPTURE(it);
        CHECK(core_determinant(s) == core_determinant_oracle(s));
    }
}

TEST_CASE("symbolic product is preserved by the reduction") {
    std::mt19937_64 rng(555777);
    for (int it = 0; it < 40; ++it) {
        int d = 2 + static_cast<int>(rng() % 4);
        int base = 2 + static_cast<int>(rng() % 3);
        int rev = static_cast<int>(rng() % (base + 1));
        RationalMatrix s = testutil::random_reversible(rng, d, base, 0.6, rev);
        ReducedSystem r = reduce(s);
        PolyMatrix full = symbolic_product(s, flux_pattern(s));
        PolyMatrix red = symbolic_product(r.s_red, r.u_red);
        REQUIRE(full.size() == red.size());
        for (std::size_t i = 0; i < full.size(); ++i) {
            REQUIRE(full[i].size() == red[i].size());
            for (std::size_t j = 0; j < full[i].size(); ++j)
                CHECK(full[i][j] == red[i][j]);
        }
    }
}

TEST_CASE("full minor sum determinant on the chain family") {
    struct Row {
        const char* file;
        int d;
        std::int64_t anomalous;
        SignCounts cfd_counts;
    };
    Row rows[] = {
        {"tail2.csv", 2, 1, {7, 6, 1}},
        {"tail3.csv", 3, 2, {17, 2, 15}},
        {"tail4.csv", 4, 5, {44, 39, 5}},
        {"tail5.csv", 5, 13, {115, 13, 102}},
        {"tail6.csv", 6, 34, {301, 267, 34}},
    };
    for (const Row& row : rows) {
        RationalMatrix s = testutil::load_fixture(row.file);
        CAPTURE(row.file);
        MultilinearPoly cd = core_determinant(s);
        CHECK(sign_counts(cd) == SignCounts{2, 1, 1});
        MultilinearPoly cfd = cf_determinant(s);
        CHECK(sign_counts(cfd) == row.cfd_counts);
        CHECK(testutil::anomalous_count(cfd, row.d) == row.anomalous);
    }
}

TEST_CASE("full minor sum determinant exact terms") {
    RationalMatrix s = testutil::load_fixture("exB_rev.csv");
    MultilinearPoly cfd = cf_determinant(s);
    MultilinearPoly want = term(-1, {});
    want += term(-1, {u(1, 2)});
    want += term(-1, {u(2, 2)});
    want += term(-1, {u(3, 1)});
    want += term(-1, {u(3, 3)});
    want += term(-1, {u(5, 1)});
    want += term(-2, {u(6, 2)});
    want += term(-1, {u(1, 2), u(3, 1)});
    want += term(-1, {u(1, 2), u(3, 3)});
    want += term(-1, {u(1, 2), u(5, 1)});
    want += term(1, {u(2, 2), u(3, 1)});
    want += term(-1, {u(2, 2), u(3, 3)});
    want += term(-1, {u(3, 3), u(5, 1)});
    want += term(-1, {u(5, 1), u(6, 2)});
    want += term(-1, {u(1, 2), u(3, 3), u(5, 1)});
    CHECK(cfd == want);
    CHECK(sign_counts(cfd) == SignCounts{15, 1, 14});
}

TEST_CASE("the top slice of the full minor sum is the core determinant") {
    const char* files[] = {"tail3.csv", "cf3_a11_2.csv", "exB_rev.csv",
                           "param_a1.csv", "ssd_red.csv", "ex84.csv"};
    for (const char* f : files) {
        RationalMatrix s = testutil::load_fixture(f);
        CAPTURE(f);
        MultilinearPoly cd = core_determinant(s);
        MultilinearPoly cfd = cf_determinant(s);
        int r = rank(s);
        MultilinearPoly slice;
        for (const auto& [mono, coeff] : cfd.terms()) {
            if (static_cast<int>(mono.vars.size()) == r)
                slice.add_term(mono, coeff);
        }
        CHECK(slice == cd);
    }
}

TEST_CASE("minor pair census on the tied system") {
    std::vector<MinorPairData> census =
        minor_pair_census(testutil::load_fixture("ex84.csv"));
    REQUIRE(census.size() == 9);
    for (const auto& p : census) {
        CHECK(p.s_det == Rational(1));
        CHECK(!p.s_pattern_sd);
        CHECK(!p.u_pattern_sd);
        CHECK(p.u_counts == SignCounts{2, 1, 1});
        CHECK(p.flag == 0);
        REQUIRE(p.rows.size() == 4);
        CHECK(p.rows[0] == 0);
        CHECK(p.rows[1] == 1);
        CHECK(p.cols == std::vector<int>{0, 1, 2, 3});
    }
}

TEST_CASE("anomalous term bounds") {
    AnomalousBounds ex84 = anomalous_bounds(testutil::load_fixture("ex84.csv"));
    CHECK(ex84.lower == 9);
    CHECK(ex84.upper == 9);
    CHECK(ex84.n_lower == 9);
    CHECK(ex84.n_upper == 9);
    CHECK(ex84.n_set_size == 9);
    CHECK(!ex84.advisory);

    AnomalousBounds a1 = anomalous_bounds(testutil::load_fixture("param_a1.csv"));
    CHECK(a1.lower == 1);
    CHECK(a1.upper == 6);
    CHECK(a1.n_lower == 1);
    CHECK(a1.n_upper == 2);
    CHECK(a1.n_set_size == 1);

    AnomalousBounds ssd = anomalous_bounds(testutil::load_fixture("ssd_red.csv"));
    CHECK(ssd.n_lower == 0);
    CHECK(ssd.n_upper == 0);
    CHECK(ssd.n_set_size == 0);

    // The bounds must bracket the true anomalous count on every fixture.
    const char* files[] = {"rev2x2.csv", "cf3_a11_2.csv", "cf3_a13_2.csv",
                           "cf3_all1.csv", "ssd_red.csv", "exB_rev.csv",
                           "param_a1.csv", "param_a3.csv", "tail4.csv",
                           "ex84.csv"};
    for (const char* f : files) {
        RationalMatrix s = testutil::load_fixture(f);
        CAPTURE(f);
        AnomalousBounds b = anomalous_bounds(s);
        std::int64_t truth =
            testutil::anomalous_count(core_determinant(s), s.rows());
        CHECK(b.lower <= truth);
        CHECK(truth <= b.upper);
        CHECK(b.n_lower <= truth);
        CHECK(truth <= b.n_upper);
    }
}

TEST_CASE("square reduced systems reuse the pattern census") {
    RationalMatrix s = testutil::load_fixture("tail3.csv");
    SquareCaseResult r = square_case_counts(s);
    REQUIRE(r.counts.has_value());
    CHECK(*r.counts == sign_counts(core_determinant(s)));

    SquareCaseResult narrow = square_case_counts(testutil::load_fixture("rev2x2.csv"));
    CHECK(!narrow.counts.has_value());
    CHECK(!narrow.not_applicable.empty());

    SquareCaseResult wide = square_case_counts(testutil::load_fixture("ex84.csv"));
    CHECK(!wide.counts.has_value());
}

TEST_CASE("anomalous count verdicts") {
    auto verdict = [](const std::string& f) {
        return zero_one_algorithm(testutil::load_fixture(f)).verdict;
    };
    CHECK(verdict("param_a1.csv") == ZeroOneVerdict::One);
    CHECK(verdict("param_a3.csv") == ZeroOneVerdict::MoreThanOne);
    CHECK(verdict("cf3_a11_2.csv") == ZeroOneVerdict::One);
    CHECK(verdict("cf3_a13_2.csv") == ZeroOneVerdict::Zero);
    CHECK(verdict("cf3_all1.csv") == ZeroOneVerdict::Zero);
    CHECK(verdict("ssd_red.csv") == ZeroOneVerdict::Zero);
    CHECK(verdict("exB_rev.csv") == ZeroOneVerdict::Zero);
    CHECK(verdict("ex84.csv") == ZeroOneVerdict::MoreThanOne);

    RationalMatrix flat(2, 2);
    flat.at(0, 0) = 1; flat.at(0, 1) = 1;
    flat.at(1, 0) = 1; flat.at(1, 1) = 1;
    ZeroOneResult r = zero_one_algorithm(flat);
    CHECK(r.verdict == ZeroOneVerdict::Inapplicable);
}

TEST_CASE("verdicts bucket the true anomalous count") {
    const char* files[] = {"rev2x2.csv", "cf3_a11_2.csv", "cf3_a13_2.csv",
                           "cf3_all1.csv", "ssd_red.csv", "exB_rev.csv",
                           "param_a1.csv", "param_a3.csv", "tail3.csv",
                           "ex84.csv"};
    for (const char* f : files) {
        RationalMatrix s = testutil::load_fixture(f);
        ZeroOneResult r = zero_one_algorithm(s);
        if (r.verdict == ZeroOneVerdict::Inapplicable) continue;
        std::int64_t truth =
            testutil::anomalous_count(core_determinant(s), s.rows());
        CAPTURE(f);
        if (r.verdict == ZeroOneVerdict::Zero) CHECK(truth == 0);
        if (r.verdict == ZeroOneVerdict::One) CHECK(truth == 1);
        if (r.verdict == ZeroOneVerdict::MoreThanOne) CHECK(truth >= 2);
    }
}

TEST_CASE("core report carries the requested sections") {
    CoreDetOptions opts;
    opts.with_cfd = true;
    CoreDetReport r = core_det_report(testutil::load_fixture("tail3.csv"), opts);
    CHECK(r.d == 3);
    CHECK(r.rank_r == 3);
    REQUIRE(r.cfd.has_value());
    REQUIRE(r.cfd_counts.has_value());
    CHECK(r.cfd_counts->t == 17);
    CHECK(r.cfd_anomalous == 2);
    CHECK(r.counts == SignCounts{2, 1, 1});
    CHECK(r.anomalous == 1);

    CoreDetReport plain = core_det_report(testutil::load_fixture("rev2x2.csv"));
    CHECK(!plain.cfd.has_value());
}

TEST_CASE("minority census never shrinks from core to full determinant") {
    const char* files[] = {"rev2x2.csv", "cf3_a11_2.csv", "cf3_a13_2.csv",
                           "cf3_all1.csv", "ssd_red.csv", "exB_rev.csv",
                           "param_a1.csv", "param_a2.csv", "param_a3.csv",
                           "tail2.csv", "tail3.csv", "tail4.csv",
                           "tail5.csv", "tail6.csv", "ex84.csv"};
    for (const char* f : files) {
        RationalMatrix s = testutil::load_fixture(f);
        CAPTURE(f);
        SignCounts cd = sign_counts(core_determinant(s));
        SignCounts cfd = sign_counts(cf_determinant(s));
        CHECK(cd.m() <= cfd.m());
    }
    RationalMatrix t4 = testutil::load_fixture("tail4.csv");
    CHECK(sign_counts(core_determinant(t4)).m() == 1);
    CHECK(sign_counts(cf_determinant(t4)).m() == 5);
}
