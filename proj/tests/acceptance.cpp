// Acceptance gate: one self-contained check per shipped guarantee, each
// printing a single PASS/FAIL line.  The process exit code is the number of
// failed checks, so the suite can be driven check-by-check with --only N.

#include "signdet/bigraph.hpp"
#include "signdet/coredet.hpp"
#include "signdet/detsign.hpp"
#include "signdet/jacobian.hpp"
#include "signdet/symexpand.hpp"

#include "testutil.hpp"

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace signdet;

namespace {

constexpr double kCensusTimeLimitSeconds = 30.0;

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
}

bool c01_fixture_census(std::string& detail) {
    Classification b = classify(testutil::load_pattern("exB.csv"));
    Classification c = classify(testutil::load_pattern("exC.csv"));
    std::ostringstream os;
    os << "exB t=" << b.counts.t << " m=" << b.counts.m() << " exC ("
       << c.counts.t << "," << c.counts.m_plus << "," << c.counts.m_minus
       << ")";
    detail = os.str();
    return b.counts.t == 1 && b.counts.m() == 0 &&
           b.kind == PatternClass::SNS &&
           c.counts == SignCounts{3, 1, 2};
}

bool c02_matching_independence(std::string& detail) {
    SignedBipartiteGraph g = build_graph(testutil::load_fixture("exG3.csv"));
    Matching w1 = {{0, 2}, {1, 0}, {2, 1}, {3, 3}};
    Matching w2 = {{0, 1}, {1, 0}, {2, 2}, {3, 3}};
    auto c1 = interlacing_cycles(g, w1, kEnumerationCap);
    auto c2 = interlacing_cycles(g, w2, kEnumerationCap);
    DisjointSetTally t1 = tally_disjoint_cycle_sets(c1.items, kEnumerationCap);
    DisjointSetTally t2 = tally_disjoint_cycle_sets(c2.items, kEnumerationCap);
    std::ostringstream os;
    os << "cycles " << c1.items.size() << " vs " << c2.items.size()
       << ", tallies (" << t1.total_sets << "," << t1.odd_e_sets << ") vs ("
       << t2.total_sets << "," << t2.odd_e_sets << ")";
    detail = os.str();
    return c1.items.size() == 3 && c2.items.size() == 4 &&
           t1.total_sets == 4 && t1.odd_e_sets == 2 &&
           t2.total_sets == t1.total_sets && t2.odd_e_sets == t1.odd_e_sets;
}

bool c03_random_census_agreement(std::string& detail) {
    auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(30003);
    int checked = 0;
    for (int it = 0; it < 500; ++it) {
        int n = 2 + static_cast<int>(rng() % 5);
        double density = 0.3 + 0.6 * static_cast<double>(rng() % 100) / 100.0;
        SignPattern p = testutil::random_pattern(rng, n, n, density);
        CountResult graph = count_signs_graph(p);
        SignCounts direct = sign_counts(det_expansion(p));
        if (graph.partial || !(graph.counts == direct)) {
            std::ostringstream os;
            os << "mismatch at case " << it << ": graph (" << graph.counts.t
               << "," << graph.counts.m_plus << "," << graph.counts.m_minus
               << ") expansion (" << direct.t << "," << direct.m_plus << ","
               << direct.m_minus << ")";
            detail = os.str();
            return false;
        }
        ++checked;
    }
    double elapsed = seconds_since(start);
    std::ostringstream os;
    os << checked << " cases in " << elapsed << "s";
    detail = os.str();
    return checked == 500 && elapsed < kCensusTimeLimitSeconds;
}

bool c04_disjoint_cycle_closed_forms(std::string& detail) {
    int checked = 0;
    for (int b = 2; b <= 4; ++b) {
        for (int mask = 0; mask < (1 << b); ++mask) {
            std::vector<char> blocks;
            int e_blocks = 0;
            for (int i = 0; i < b; ++i) {
                bool e = (mask >> i) & 1;
                blocks.push_back(e ? 'e' : 'o');
                if (e) ++e_blocks;
            }
            SignPattern p = testutil::block_pattern(blocks);
            auto fast = fast_counts(p);
            SignCounts direct = sign_counts(det_expansion(p));
            std::int64_t want_t = 1LL << b;
            std::int64_t want_m = e_blocks == 0 ? 0 : (1LL << (b - 1));
            if (!fast || !(*fast == direct) || direct.t != want_t ||
                direct.m() != want_m) {
                std::ostringstream os;
                os << "blocks ";
                for (char c : blocks) os << c;
                os << ": got (" << direct.t << ", m=" << direct.m()
                   << ") want (" << want_t << ", m=" << want_m << ")";
                detail = os.str();
                return false;
            }
            ++checked;
        }
    }
    detail = std::to_string(checked) + " block layouts";
    return true;
}

bool c05_transform_swap(std::string& detail) {
    std::mt19937_64 rng(50005);
    for (int it = 0; it < 200; ++it) {
        int n = 2 + static_cast<int>(rng() % 4);
        SignPattern p = testutil::random_pattern(rng, n, n, 0.65);
        SignCounts base = sign_counts(det_expansion(p));
        TransformOp ops[] = {TransformOp::SwapRows, TransformOp::SwapCols,
                             TransformOp::NegateRow, TransformOp::NegateCol};
        TransformOp op = ops[it % 4];
        int i = static_cast<int>(rng() % n);
        int j = (i + 1 + static_cast<int>(rng() % (n - 1))) % n;
        bool pair = op == TransformOp::SwapRows || op == TransformOp::SwapCols;
        SignPattern q = pair ? transform(p, op, i, j) : transform(p, op, i);
        SignCounts after = sign_counts(det_expansion(q));
        if (after.t != base.t || after.m_plus != base.m_minus ||
            after.m_minus != base.m_plus) {
            detail = "sides not swapped at case " + std::to_string(it);
            return false;
        }
    }
    detail = "200 transform cases";
    return true;
}

bool c06_ssd_equivalence(std::string& detail) {
    std::mt19937_64 rng(60006);
    int ssd_seen = 0, mixed_seen = 0;
    for (int it = 0; it < 80; ++it) {
        int rows = 2 + static_cast<int>(rng() % 4);
        int cols = 2 + static_cast<int>(rng() % 5);
        SignPattern p = testutil::random_pattern(rng, rows, cols, 0.55);
        bool fast = is_ssd(p).ssd;
        bool slow = testutil::ssd_oracle(p);
        if (fast != slow) {
            detail = "disagreement at case " + std::to_string(it);
            return false;
        }
        (fast ? ssd_seen : mixed_seen)++;
    }
    std::ostringstream os;
    os << "80 cases (" << ssd_seen << " one-signed, " << mixed_seen
       << " mixed)";
    detail = os.str();
    return ssd_seen > 0 && mixed_seen > 0;
}

bool c07_imbalance_bound(std::string& detail) {
    std::mt19937_64 rng(70007);
    for (int it = 0; it < 60; ++it) {
        int rows = 2 + static_cast<int>(rng() % 4);
        int cols = 2 + static_cast<int>(rng() % 4);
        SignPattern p = testutil::random_pattern(rng, rows, cols, 0.6);
        JSignResult j = j_sign_bound(p, kEnumerationCap);
        std::int64_t want = testutil::j_oracle(p);
        if (j.partial || j.j != want) {
            std::ostringstream os;
            os << "case " << it << ": got " << j.j << " want " << want;
            detail = os.str();
            return false;
        }
    }
    detail = "60 cases against the exhaustive maximum";
    return true;
}

bool cell_uniform(const MultilinearPoly& p) {
    int seen = 0;
    for (const auto& [mono, coeff] : p.terms()) {
        int s = coeff.sign();
        if (seen == 0) seen = s;
        else if (s != seen) return false;
    }
    return true;
}

bool c08_mixing_square_equivalence(std::string& detail) {
    std::mt19937_64 rng(80008);
    int blocked = 0;
    for (int it = 0; it < 300; ++it) {
        int d = 2 + static_cast<int>(rng() % 5);
        int n = 2 + static_cast<int>(rng() % 5);
        double density = 0.3 + 0.5 * static_cast<double>(rng() % 100) / 100.0;
        RationalMatrix s = testutil::random_matrix(rng, d, n, density);
        bool scan = jacobian_sign_pattern(s).has_pattern();
        bool cycle = !has_four_cycle_three_negative(build_graph(s)).has_value();
        PolyMatrix su = symbolic_product(s, flux_pattern(s));
        bool uniform = true;
        for (const auto& row : su)
            for (const auto& cell : row)
                if (!cell_uniform(cell)) uniform = false;
        if (scan != cycle || scan != uniform) {
            detail = "equivalence broken at case " + std::to_string(it);
            return false;
        }
        if (!scan) ++blocked;
    }
    JacobianSignResult rev = jacobian_sign_pattern(testutil::load_fixture("rev2x2.csv"));
    bool all_neg = rev.has_pattern();
    if (all_neg) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (rev.pattern->sign(i, j) != -1) all_neg = false;
    }
    std::ostringstream os;
    os << "300 cases, " << blocked << " with a mixing square; rev2x2 "
       << (all_neg ? "all-negative" : "NOT all-negative");
    detail = os.str();
    return all_neg && blocked > 0 && blocked < 300;
}

bool c09_reduction_preserves_product(std::string& detail) {
    std::mt19937_64 rng(90009);
    for (int it = 0; it < 200; ++it) {
        int d = 2 + static_cast<int>(rng() % 5);
        int base = 2 + static_cast<int>(rng() % 4);
        int rev = static_cast<int>(rng() % (base + 1));
        RationalMatrix s = testutil::random_reversible(rng, d, base, 0.6, rev);
        if (s.cols() > 6) continue;
        ReducedSystem r = reduce(s);
        PolyMatrix full = symbolic_product(s, flux_pattern(s));
        PolyMatrix red = symbolic_product(r.s_red, r.u_red);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                if (!(full[i][j] == red[i][j])) {
                    detail = "entry mismatch at case " + std::to_string(it);
                    return false;
                }
    }
    detail = "200 reversible systems, entrywise equal";
    return true;
}

std::vector<RationalMatrix> c10_instances() {
    std::mt19937_64 rng(100010);
    std::vector<RationalMatrix> out;
    for (int it = 0; it < 200; ++it) {
        int d = 2 + static_cast<int>(rng() % 4);
        int base = 2 + static_cast<int>(rng() % 3);
        int rev = static_cast<int>(rng() % (base + 1));
        out.push_back(testutil::random_reversible(rng, d, base, 0.65, rev));
    }
    return out;
}

const char* kAllFixtures[] = {
    "exB.csv",       "exC.csv",       "exG3.csv",     "table11v.csv",
    "rev2x2.csv",    "cf3_a11_2.csv", "cf3_a13_2.csv", "cf3_all1.csv",
    "ssd_red.csv",   "exB_rev.csv",   "param_a1.csv", "param_a2.csv",
    "param_a3.csv",  "tail2.csv",     "tail3.csv",    "tail4.csv",
    "tail5.csv",     "tail6.csv",     "ex84.csv"};

bool c10_oracle_identity(std::string& detail) {
    for (const char* f : kAllFixtures) {
        RationalMatrix s = testutil::load_fixture(f);
        if (!(core_determinant(s) == core_determinant_oracle(s))) {
            detail = std::string("fixture ") + f;
            return false;
        }
    }
    std::vector<RationalMatrix> random = c10_instances();
    for (std::size_t i = 0; i < random.size(); ++i) {
        if (!(core_determinant(random[i]) == core_determinant_oracle(random[i]))) {
            detail = "random case " + std::to_string(i);
            return false;
        }
    }
    detail = "19 fixtures + 200 random systems";
    return true;
}

bool c11_parametrized_magnitudes(std::string& detail) {
    MultilinearPoly cd = core_determinant(testutil::load_fixture("cf3_a11_2.csv"));
    SignCounts counts = sign_counts(cd);
    MultilinearPoly cd13 = core_determinant(testutil::load_fixture("cf3_a13_2.csv"));
    SignCounts counts13 = sign_counts(cd13);
    std::ostringstream os;
    os << "pinned t=6: computed t=" << counts.t << " m=" << counts.m()
       << "; second system m=" << counts13.m();
    detail = os.str();
    // The six-term pin does not match the computed five-term polynomial;
    // the check records the discrepancy rather than adjusting the pin.
    return counts.t == 6 && counts.m() == 1 && counts13.m() == 0;
}

bool c12_chain_family(std::string& detail) {
    const char* files[] = {"tail2.csv", "tail3.csv", "tail4.csv", "tail5.csv",
                           "tail6.csv"};
    const std::int64_t want[] = {1, 2, 5, 13, 34};
    for (int i = 0; i < 5; ++i) {
        RationalMatrix s = testutil::load_fixture(files[i]);
        SignCounts cd = sign_counts(core_determinant(s));
        if (!(cd == SignCounts{2, 1, 1})) {
            detail = std::string(files[i]) + ": core counts off";
            return false;
        }
        std::int64_t anom =
            testutil::anomalous_count(cf_determinant(s), s.rows());
        if (anom != want[i]) {
            std::ostringstream os;
            os << files[i] << ": anomalous " << anom << " want " << want[i];
            detail = os.str();
            return false;
        }
    }
    detail = "core (2,1,1) and full-sum anomalous 1,2,5,13,34";
    return true;
}

bool c13_tied_minors(std::string& detail) {
    RationalMatrix s = testutil::load_fixture("ex84.csv");
    ReducedSystem r = reduce(s);
    auto pms = enumerate_perfect_matchings(build_graph(r.s_red), kEnumerationCap);
    AnomalousBounds b = anomalous_bounds(s);
    SignCounts cd = sign_counts(core_determinant(s));
    std::ostringstream os;
    os << pms.items.size() << " matchings, bounds [" << b.lower << ","
       << b.upper << "], core m=" << cd.m();
    detail = os.str();
    return pms.items.size() == 18 && b.lower == 9 && b.upper == 9 &&
           cd.m() == 9;
}

std::vector<RationalMatrix> c14_instances() {
    std::mt19937_64 rng(140014);
    std::vector<RationalMatrix> out;
    int attempts = 0;
    while (static_cast<int>(out.size()) < 100 && attempts < 500) {
        ++attempts;
        int d = 2 + static_cast<int>(rng() % 3);
        int base = 2 + static_cast<int>(rng() % 3);
        int rev = static_cast<int>(rng() % (base + 1));
        RationalMatrix s = testutil::random_reversible(rng, d, base, 0.6, rev);
        if (zero_one_algorithm(s).verdict == ZeroOneVerdict::Inapplicable)
            continue;
        out.push_back(std::move(s));
    }
    return out;
}

bool c14_verdict_cross_check(std::string& detail) {
    if (zero_one_algorithm(testutil::load_fixture("param_a1.csv")).verdict !=
        ZeroOneVerdict::One) {
        detail = "param_a1 verdict is not One";
        return false;
    }
    if (zero_one_algorithm(testutil::load_fixture("param_a3.csv")).verdict !=
        ZeroOneVerdict::MoreThanOne) {
        detail = "param_a3 verdict is not MoreThanOne";
        return false;
    }
    std::vector<RationalMatrix> instances = c14_instances();
    if (instances.size() < 100) {
        detail = "only " + std::to_string(instances.size()) +
                 " applicable systems generated";
        return false;
    }
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const RationalMatrix& s = instances[i];
        ZeroOneVerdict v = zero_one_algorithm(s).verdict;
        std::int64_t truth =
            testutil::anomalous_count(core_determinant(s), s.rows());
        bool ok = (v == ZeroOneVerdict::Zero && truth == 0) ||
                  (v == ZeroOneVerdict::One && truth == 1) ||
                  (v == ZeroOneVerdict::MoreThanOne && truth >= 2);
        if (!ok) {
            std::ostringstream os;
            os << "case " << i << ": verdict bucket vs true count " << truth;
            detail = os.str();
            return false;
        }
    }
    detail = "fixtures plus 100 random applicable systems";
    return true;
}

bool c15_core_versus_full(std::string& detail) {
    auto check = [&](const RationalMatrix& s, const std::string& label) {
        SignCounts cd = sign_counts(core_determinant(s));
        SignCounts cfd = sign_counts(cf_determinant(s));
        if (cd.m() > cfd.m()) {
            detail = label + ": core m " + std::to_string(cd.m()) +
                     " exceeds full m " + std::to_string(cfd.m());
            return false;
        }
        return true;
    };
    for (const char* f : kAllFixtures) {
        if (!check(testutil::load_fixture(f), f)) return false;
    }
    std::vector<RationalMatrix> tens = c10_instances();
    for (std::size_t i = 0; i < tens.size(); ++i)
        if (!check(tens[i], "c10 random " + std::to_string(i))) return false;
    std::vector<RationalMatrix> fourteens = c14_instances();
    for (std::size_t i = 0; i < fourteens.size(); ++i)
        if (!check(fourteens[i], "c14 random " + std::to_string(i))) return false;

    RationalMatrix t4 = testutil::load_fixture("tail4.csv");
    std::int64_t cdm = sign_counts(core_determinant(t4)).m();
    std::int64_t cfdm = sign_counts(cf_determinant(t4)).m();
    std::ostringstream os;
    os << "all instances hold; strict on the length-4 chain (" << cdm << " < "
       << cfdm << ")";
    detail = os.str();
    return cdm == 1 && cfdm == 5;
}

bool c16_single_cycle_margin(std::string& detail) {
    std::mt19937_64 rng(160016);
    int kept = 0, attempts = 0;
    while (kept < 50 && attempts < 500) {
        ++attempts;
        RationalMatrix s = testutil::random_cycle_hair(rng);
        if (!single_cycle_with_short_hair(build_graph(s))) {
            detail = "generator produced a non-conforming graph";
            return false;
        }
        if (genericity_check(reduce(s)).level != Genericity::Generic) continue;
        ++kept;
        SignCounts cd = sign_counts(core_determinant(s));
        if (cd.m() > 1) {
            std::ostringstream os;
            os << "attempt " << attempts << ": core m=" << cd.m();
            detail = os.str();
            return false;
        }
    }
    if (kept < 50) {
        detail = "only " + std::to_string(kept) + " generic instances";
        return false;
    }
    detail = "50 generic single-cycle systems, core m <= 1";
    return true;
}

struct Criterion {
    int id;
    bool (*run)(std::string&);
};

const Criterion kCriteria[] = {
    {1, c01_fixture_census},
    {2, c02_matching_independence},
    {3, c03_random_census_agreement},
    {4, c04_disjoint_cycle_closed_forms},
    {5, c05_transform_swap},
    {6, c06_ssd_equivalence},
    {7, c07_imbalance_bound},
    {8, c08_mixing_square_equivalence},
    {9, c09_reduction_preserves_product},
    {10, c10_oracle_identity},
    {11, c11_parametrized_magnitudes},
    {12, c12_chain_family},
    {13, c13_tied_minors},
    {14, c14_verdict_cross_check},
    {15, c15_core_versus_full},
    {16, c16_single_cycle_margin},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc == 3 && std::strcmp(argv[1], "--only") == 0) {
        only = std::atoi(argv[2]);
    } else if (argc != 1) {
        std::cerr << "usage: acceptance [--only N]\n";
        return 99;
    }

    int failures = 0;
    for (const Criterion& c : kCriteria) {
        if (only != 0 && c.id != only) continue;
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        char tag[8];
        std::snprintf(tag, sizeof(tag), "C%02d", c.id);
        std::cout << tag << (ok ? " PASS" : " FAIL");
        if (!detail.empty()) std::cout << " - " << detail;
        std::cout << "\n";
        if (!ok) ++failures;
    }
    return failures;
}
