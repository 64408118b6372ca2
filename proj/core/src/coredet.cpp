#include "signdet/coredet.hpp"

#include "signdet/jacobian.hpp"

#include <algorithm>
#include <functional>

namespace signdet {

namespace {

bool column_is_zero(const RationalMatrix& s, int col) {
    for (int i = 0; i < s.rows(); ++i) {
        if (!s.at(i, col).is_zero()) return false;
    }
    return true;
}

bool columns_negated(const RationalMatrix& s, int a, int b) {
    for (int i = 0; i < s.rows(); ++i) {
        if (s.at(i, a) != -s.at(i, b)) return false;
    }
    return true;
}

void selections_of(int n, int k, const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> pick(static_cast<std::size_t>(k));
    std::function<void(int, int)> rec = [&](int next, int depth) {
        if (depth == k) {
            emit(pick);
            return;
        }
        for (int v = next; v <= n - (k - depth); ++v) {
            pick[static_cast<std::size_t>(depth)] = v;
            rec(v + 1, depth + 1);
        }
    };
    rec(0, 0);
}

/// The matrix/pattern pair the minor sums run over: the reduced system
/// when the reduction is clean, otherwise the original matrix with its
/// full flux pattern (same polynomial, more pairs).
struct MinorBasis {
    RationalMatrix sm;
    SignPattern grid;  // cols(sm) x rows(sm)
};

MinorBasis minor_basis(const RationalMatrix& s, const ReducedSystem& r) {
    if (r.irreducible_clean) return MinorBasis{r.s_red, r.u_red};
    return MinorBasis{s, flux_pattern(s)};
}

/// sum over |a| = |b| = size of det(sm(a|b)) * det(grid(b|a)).
MultilinearPoly rankdet_sum(const MinorBasis& basis, int size) {
    if (size == 0) return MultilinearPoly::constant(Rational(1));
    MultilinearPoly out;
    selections_of(basis.sm.rows(), size, [&](const std::vector<int>& rows) {
        selections_of(basis.sm.cols(), size, [&](const std::vector<int>& cols) {
            Rational ds = determinant(basis.sm.submatrix(rows, cols));
            if (ds.is_zero()) return;
            MultilinearPoly du = det_expansion(basis.grid.submatrix(cols, rows));
            if (du.is_zero()) return;
            out += du.scaled(ds);
        });
    });
    return out;
}

int parity_sign(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

}  // namespace

ReducedSystem reduce(const RationalMatrix& s) {
    int dp = s.cols();
    std::vector<int> partner(dp, -1);
    std::vector<bool> dropped(dp, false);
    for (int j = 0; j < dp; ++j) {
        if (dropped[j] || partner[j] >= 0 || column_is_zero(s, j)) continue;
        for (int j2 = j + 1; j2 < dp; ++j2) {
            if (dropped[j2] || partner[j2] >= 0) continue;
            if (columns_negated(s, j, j2)) {
                partner[j] = j2;
                dropped[j2] = true;
                break;
            }
        }
    }

    std::vector<int> kept;
    for (int j = 0; j < dp; ++j) {
        if (!dropped[j]) kept.push_back(j);
    }

    ReducedSystem out{
        RationalMatrix(s.rows(), static_cast<int>(kept.size())),
        SignPattern(static_cast<int>(kept.size()), s.rows()),
        {},
        true,
    };
    for (std::size_t i = 0; i < kept.size(); ++i) {
        int col = kept[i];
        for (int row = 0; row < s.rows(); ++row) {
            out.s_red.at(row, static_cast<int>(i)) = s.at(row, col);
        }
        std::optional<int> reverse;
        if (partner[col] >= 0) reverse = partner[col];
        out.columns.push_back(ReducedSystem::ColumnOrigin{col, reverse});
        for (int row = 0; row < s.rows(); ++row) {
            int sgn = s.at(row, col).sign();
            if (sgn < 0) {
                out.u_red.at(static_cast<int>(i), row) =
                    PatternEntry{1, make_var("U", col, row)};
            } else if (sgn > 0 && reverse) {
                out.u_red.at(static_cast<int>(i), row) =
                    PatternEntry{-1, make_var("U", *reverse, row)};
            }
        }
    }

    // Repeated columns can leave a kept pair that still negate each other
    // (the greedy pass only pairs each column once); minor sums over the
    // reduced system would then double-count, so flag it.
    for (std::size_t i = 0; i < kept.size() && out.irreducible_clean; ++i) {
        if (column_is_zero(s, kept[i])) continue;
        for (std::size_t j = i + 1; j < kept.size(); ++j) {
            if (columns_negated(s, kept[i], kept[j])) {
                out.irreducible_clean = false;
                break;
            }
        }
    }
    return out;
}

GenericityResult genericity_check(const ReducedSystem& r, std::int64_t cap) {
    GenericityResult out;
    int rk = rank(r.s_red);
    int bound = generic_rank(build_graph(r.s_red));
    if (rk < bound) {
        out.level = Genericity::NotGeneric;
        out.detail = "rank " + std::to_string(rk) +
                     " is below the support bound " + std::to_string(bound);
        return out;
    }

    // Count r x r selections, bailing out once past the cap.
    long double pair_estimate = 1.0L;
    auto choose = [](int n, int k) {
        long double v = 1.0L;
        for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
        return v;
    };
    pair_estimate = choose(r.s_red.rows(), rk) * choose(r.s_red.cols(), rk);
    if (pair_estimate > static_cast<long double>(cap)) {
        out.level = Genericity::Unverified;
        out.detail = "submatrix scan skipped past cap";
        return out;
    }

    bool failed = false;
    selections_of(r.s_red.rows(), rk, [&](const std::vector<int>& rows) {
        if (failed) return;
        selections_of(r.s_red.cols(), rk, [&](const std::vector<int>& cols) {
            if (failed) return;
            RationalMatrix sub = r.s_red.submatrix(rows, cols);
            if (!determinant(sub).is_zero()) return;
            auto matchings = enumerate_perfect_matchings(build_graph(sub), 1);
            if (matchings.items.empty() && !matchings.limit_exceeded) return;
            failed = true;
            out.witness = VertexSelection{rows, cols};
        });
    });
    if (failed) {
        out.level = Genericity::WeaklyGeneric;
        out.detail = "a full-size submatrix is singular despite matched support";
    } else {
        out.level = Genericity::Generic;
    }
    return out;
}

MultilinearPoly core_determinant(const RationalMatrix& s) {
    ReducedSystem r = reduce(s);
    int d = s.rows();
    int rk = rank(r.s_red);
    if (rk == 0) return MultilinearPoly::constant(Rational(parity_sign(d)));
    MinorBasis basis = minor_basis(s, r);
    return rankdet_sum(basis, rk).scaled(Rational(parity_sign(d - rk)));
}

MultilinearPoly core_determinant_oracle(const RationalMatrix& s, int cap) {
    int d = s.rows();
    int rk = rank(s);
    SignPattern u = flux_pattern(s);
    MultilinearPoly charlike = det_poly_matrix(symbolic_product(s, u), true, cap);
    int low = charlike.min_t_degree();
    if (low != d - rk) {
        throw Error("internal check failed: lowest t-power " + std::to_string(low) +
                    " does not match corank " + std::to_string(d - rk));
    }
    return charlike.coefficient_of_t(d - rk);
}

MultilinearPoly cf_determinant(const RationalMatrix& s, const Rational& t_value) {
    ReducedSystem r = reduce(s);
    int d = s.rows();
    int rk = rank(r.s_red);
    MinorBasis basis = minor_basis(s, r);
    MultilinearPoly out;
    for (int size = 0; size <= rk; ++size) {
        Rational factor(1);
        for (int k = 0; k < d - size; ++k) factor *= -t_value;
        out += rankdet_sum(basis, size).scaled(factor);
    }
    return out;
}

std::vector<MinorPairData> minor_pair_census(const RationalMatrix& s) {
    ReducedSystem r = reduce(s);
    int rk = rank(r.s_red);
    MinorBasis basis = minor_basis(s, r);
    std::vector<MinorPairData> out;
    if (rk == 0) return out;
    selections_of(basis.sm.rows(), rk, [&](const std::vector<int>& rows) {
        selections_of(basis.sm.cols(), rk, [&](const std::vector<int>& cols) {
            RationalMatrix ssub = basis.sm.submatrix(rows, cols);
            MultilinearPoly spoly = det_expansion(sign_pattern_of(ssub));
            MultilinearPoly upoly = det_expansion(basis.grid.submatrix(cols, rows));
            SignCounts scounts = sign_counts(spoly);
            SignCounts ucounts = sign_counts(upoly);
            bool s_mixed = scounts.m() > 0;
            if (upoly.is_zero() && !s_mixed) return;

            MinorPairData data;
            data.rows = rows;
            data.cols = cols;
            data.s_det = determinant(ssub);
            data.u_counts = ucounts;
            data.s_pattern_sd = !s_mixed;
            data.u_pattern_sd = ucounts.m() == 0;
            if (data.u_pattern_sd && ucounts.t > 0 && !data.s_det.is_zero()) {
                int common = ucounts.m_plus > 0 ? 1 : -1;
                data.flag = data.s_det.sign() * common;
            }
            out.push_back(std::move(data));
        });
    });
    return out;
}

namespace {

struct Tallies {
    std::int64_t anomalous = 0;
    std::int64_t regular = 0;
};

/// Exact per-term sign tallies of the core determinant, from the census.
/// Every pair's variable sets are disjoint from every other pair's, so
/// terms never merge across pairs and the sums are exact.
Tallies exact_tallies(const std::vector<MinorPairData>& census, int d, int rk) {
    Tallies t;
    int anomalous_sign = parity_sign(d - 1);
    int pair_factor = parity_sign(d - rk);
    for (const auto& p : census) {
        int ds = p.s_det.sign();
        if (ds == 0) continue;
        // Term sign = pair_factor * ds * (flux term sign).
        std::int64_t plus_terms = p.u_counts.m_plus;
        std::int64_t minus_terms = p.u_counts.m_minus;
        std::int64_t plus_final = pair_factor * ds > 0 ? plus_terms : minus_terms;
        std::int64_t minus_final = p.u_counts.t - plus_final;
        if (anomalous_sign > 0) {
            t.anomalous += plus_final;
            t.regular += minus_final;
        } else {
            t.anomalous += minus_final;
            t.regular += plus_final;
        }
    }
    return t;
}

}  // namespace

AnomalousBounds anomalous_bounds(const RationalMatrix& s) {
    ReducedSystem r = reduce(s);
    int rk = rank(r.s_red);
    AnomalousBounds out;
    GenericityResult gen = genericity_check(r);
    out.advisory = gen.level == Genericity::NotGeneric;
    for (const auto& p : minor_pair_census(s)) {
        if (!p.s_pattern_sd) ++out.n_set_size;
        if (p.s_det.is_zero() || p.u_counts.t == 0) continue;
        std::int64_t minority = p.u_counts.m();
        std::int64_t majority = p.u_counts.t - minority;
        out.lower += minority;
        out.upper += majority;
        if (!p.s_pattern_sd) {
            out.n_lower += minority;
            out.n_upper += majority;
        }
    }
    (void)rk;
    return out;
}

SquareCaseResult square_case_counts(const RationalMatrix& s) {
    ReducedSystem r = reduce(s);
    SquareCaseResult out;
    if (r.s_red.rows() != r.s_red.cols()) {
        out.not_applicable = "reduced stoichiometry is not square";
        return out;
    }
    Rational ds = determinant(r.s_red);
    if (ds.is_zero()) {
        out.not_applicable = "reduced stoichiometry is singular";
        return out;
    }
    GenericityResult gen = genericity_check(r);
    if (gen.level != Genericity::Generic) {
        out.not_applicable = gen.level == Genericity::Unverified
                                 ? "genericity unverified past cap"
                                 : "system is not generic";
        return out;
    }
    SignCounts counts = count_signs_graph(r.u_red).counts;
    if (ds.sign() < 0) std::swap(counts.m_plus, counts.m_minus);
    out.counts = counts;
    return out;
}

ZeroOneResult zero_one_algorithm(const RationalMatrix& s) {
    ReducedSystem r = reduce(s);
    ZeroOneResult out;
    GenericityResult gen = genericity_check(r);
    if (gen.level == Genericity::NotGeneric) {
        out.verdict = ZeroOneVerdict::Inapplicable;
        out.reason = "support-generic rank not attained: " + gen.detail;
        return out;
    }

    int d = s.rows();
    int rk = rank(r.s_red);
    auto census = minor_pair_census(s);

    auto bucket = [](std::int64_t n) {
        return n == 0 ? ZeroOneVerdict::Zero
                      : (n == 1 ? ZeroOneVerdict::One : ZeroOneVerdict::MoreThanOne);
    };

    // The case split below assumes anomalous terms are the minority side.
    // Check it against exact tallies first and fall back to the direct
    // count when the orientation is reversed.
    Tallies tallies = exact_tallies(census, d, rk);
    if (tallies.anomalous > tallies.regular) {
        out.verdict = bucket(tallies.anomalous);
        out.reason = "orientation reversed; verdict from direct term count";
        out.advisory = true;
        return out;
    }

    std::vector<const MinorPairData*> active;
    for (const auto& p : census) {
        if (!p.s_pattern_sd && !p.s_det.is_zero() && p.u_counts.t > 0) {
            active.push_back(&p);
        }
    }
    if (active.empty()) {
        out.verdict = ZeroOneVerdict::Zero;
        out.reason = "no sign-mixed invertible minor carries flux terms";
        return out;
    }

    int anomalous_flag = parity_sign(rk - 1);
    std::vector<const MinorPairData*> mixed_flux;
    for (const auto* p : active) {
        if (!p->u_pattern_sd) mixed_flux.push_back(p);
    }

    if (mixed_flux.size() >= 2) {
        out.verdict = ZeroOneVerdict::MoreThanOne;
        out.reason = "two sign-mixed flux determinants each force an anomalous term";
        return out;
    }

    if (mixed_flux.empty()) {
        std::int64_t total = 0;
        for (const auto* p : active) {
            if (p->flag == anomalous_flag) total += p->u_counts.t;
        }
        out.verdict = bucket(total);
        out.reason = "tally over one-signed flux determinants";
        return out;
    }

    const MinorPairData* p0 = mixed_flux.front();
    for (const auto* p : active) {
        if (p == p0 || !p->u_pattern_sd) continue;
        if (p->flag == anomalous_flag) {
            out.verdict = ZeroOneVerdict::MoreThanOne;
            out.reason = "flagged one-signed pair adds to the mixed pair's terms";
            return out;
        }
    }
    std::int64_t m0 = p0->u_counts.m();
    if (m0 > 1) {
        out.verdict = ZeroOneVerdict::MoreThanOne;
        out.reason = "mixed flux determinant has two minority terms";
        return out;
    }
    if (p0->u_counts.t == 2) {
        out.verdict = ZeroOneVerdict::One;
        out.reason = "single mixed pair with one term on each side";
        return out;
    }
    int minority_side = p0->u_counts.m_plus <= p0->u_counts.m_minus ? 1 : -1;
    if (minority_side * p0->s_det.sign() == anomalous_flag) {
        out.verdict = ZeroOneVerdict::One;
        out.reason = "single mixed pair, minority side is the anomalous one";
    } else {
        out.verdict = ZeroOneVerdict::MoreThanOne;
        out.reason = "single mixed pair, majority side is the anomalous one";
    }
    return out;
}

CoreDetReport core_det_report(const RationalMatrix& s, const CoreDetOptions& options) {
    CoreDetReport out;
    ReducedSystem r = reduce(s);
    out.d = s.rows();
    out.rank_r = rank(r.s_red);
    out.cd = core_determinant(s);
    out.counts = sign_counts(out.cd);
    out.anomalous = count_terms_with_sign(out.cd, parity_sign(out.d - 1));
    out.genericity = genericity_check(r);
    out.options = options;
    if (options.with_bounds) out.bounds = anomalous_bounds(s);
    if (options.with_zero_one) out.zero_one = zero_one_algorithm(s);
    if (options.with_cfd) {
        out.cfd = cf_determinant(s);
        out.cfd_counts = sign_counts(*out.cfd);
        out.cfd_anomalous = count_terms_with_sign(*out.cfd, parity_sign(out.d - 1));
    }
    return out;
}

}  // namespace signdet
