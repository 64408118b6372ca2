#include "signdet/jacobian.hpp"

#include "signdet/errors.hpp"

namespace signdet {

SignPattern flux_pattern(const RationalMatrix& s) {
    // Species d x reactions d' in S; the flux derivative pattern is d' x d.
    SignPattern u(s.cols(), s.rows());
    for (int i = 0; i < s.cols(); ++i) {
        for (int j = 0; j < s.rows(); ++j) {
            if (s.at(j, i).sign() < 0) {
                u.at(i, j) = PatternEntry{1, make_var("U", i, j)};
            }
        }
    }
    return u;
}

DependencePattern canonical_dependence(const RationalMatrix& s) {
    DependencePattern d(s.cols(), std::vector<bool>(s.rows(), false));
    for (int i = 0; i < s.cols(); ++i)
        for (int j = 0; j < s.rows(); ++j)
            if (s.at(j, i).sign() < 0) d[i][j] = true;
    return d;
}

ReactionFormResult classify_reaction_form(const RationalMatrix& s,
                                          const DependencePattern& d) {
    if (static_cast<int>(d.size()) != s.cols()) {
        throw ShapeMismatch("dependence pattern needs one row per reaction");
    }
    for (const auto& row : d) {
        if (static_cast<int>(row.size()) != s.rows()) {
            throw ShapeMismatch("dependence pattern needs one column per species");
        }
    }

    ReactionFormResult out;
    for (int i = 0; i < s.cols(); ++i) {
        for (int j = 0; j < s.rows(); ++j) {
            int stoich = s.at(j, i).sign();
            if (stoich > 0 && d[i][j]) {
                out.weak_violations.emplace_back(i + 1, j + 1);
            }
            if ((stoich < 0) != d[i][j]) {
                out.full_violations.emplace_back(i + 1, j + 1);
            }
        }
    }
    out.form = out.weak_violations.empty()
                   ? (out.full_violations.empty() ? ReactionForm::RF
                                                  : ReactionForm::WeakRF)
                   : ReactionForm::Neither;

    // Consistency: the weak form holds exactly when every diagonal cell of
    // the symbolic Jacobian collects only nonpositive contributions.
    bool diagonal_nonpositive = true;
    for (int i = 0; i < s.rows() && diagonal_nonpositive; ++i) {
        for (int k = 0; k < s.cols(); ++k) {
            if (d[k][i] && s.at(i, k).sign() > 0) {
                diagonal_nonpositive = false;
                break;
            }
        }
    }
    if (diagonal_nonpositive != out.weak_violations.empty()) {
        throw Error("internal check failed: diagonal test disagrees with "
                    "weak-form classification");
    }
    return out;
}

JacobianSignResult jacobian_sign_pattern(const RationalMatrix& s) {
    JacobianSignResult out;
    for (int i = 0; i < s.rows(); ++i) {
        for (int j = 0; j < s.rows(); ++j) {
            if (i == j) continue;
            for (int k = 0; k < s.cols(); ++k) {
                for (int l = 0; l < s.cols(); ++l) {
                    if (k == l) continue;
                    if (s.at(i, k).sign() > 0 && s.at(i, l).sign() < 0 &&
                        s.at(j, k).sign() < 0 && s.at(j, l).sign() < 0) {
                        JacobianSignResult::Witness w{i + 1, j + 1, k + 1, l + 1, {}};
                        auto cycle = has_four_cycle_three_negative(build_graph(
                            s.submatrix({std::min(i, j), std::max(i, j)},
                                        {std::min(k, l), std::max(k, l)})));
                        if (cycle) {
                            // Translate the 2x2 witness back to full indices.
                            std::vector<int> rs{std::min(i, j), std::max(i, j)};
                            std::vector<int> cs{std::min(k, l), std::max(k, l)};
                            for (int& r : cycle->rows) r = rs[r];
                            for (int& c : cycle->cols) c = cs[c];
                            w.cycle = *cycle;
                        }
                        out.witness = w;
                        return out;
                    }
                }
            }
        }
    }

    // No ambiguous square: every Jacobian cell collects one sign only.
    SignPattern pattern(s.rows(), s.rows());
    for (int i = 0; i < s.rows(); ++i) {
        for (int j = 0; j < s.rows(); ++j) {
            int cell_sign = 0;
            for (int k = 0; k < s.cols(); ++k) {
                if (s.at(j, k).sign() >= 0) continue;  // no flux variable
                int contribution = s.at(i, k).sign();
                if (contribution == 0) continue;
                if (cell_sign != 0 && cell_sign != contribution) {
                    throw Error("internal check failed: mixed Jacobian cell "
                                "after a clean scan");
                }
                cell_sign = contribution;
            }
            if (cell_sign != 0) {
                pattern.at(i, j) = PatternEntry{cell_sign, make_var("J", i, j)};
            }
        }
    }
    out.pattern = std::move(pattern);
    return out;
}

bool wrf_sign_pattern_sufficient(const RationalMatrix& s) {
    // Weak-form kinetics may hang a flux derivative on any species the
    // reaction does not produce, so the j-row slots only need to be
    // nonpositive for the mixing square to be realizable.
    for (int i = 0; i < s.rows(); ++i) {
        for (int j = 0; j < s.rows(); ++j) {
            if (i == j) continue;
            for (int k = 0; k < s.cols(); ++k) {
                for (int l = 0; l < s.cols(); ++l) {
                    if (k == l) continue;
                    if (s.at(i, k).sign() > 0 && s.at(i, l).sign() < 0 &&
                        s.at(j, k).sign() <= 0 && s.at(j, l).sign() <= 0) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

}  // namespace signdet
