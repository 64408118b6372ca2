#pragma once

#include "signdet/coredet.hpp"
#include "signdet/detsign.hpp"
#include "signdet/jacobian.hpp"

#include <string>

namespace signdet {

/// JSON rendering of the analysis results. Output is deterministic: keys
/// keep insertion order, polynomial terms follow the canonical monomial
/// order, and every rational value is an exact "p/q" string. `pretty`
/// switches from compact one-line output to 2-space indentation.

std::string poly_to_json(const MultilinearPoly& p, bool pretty = false);
std::string counts_to_json(const SignCounts& c, bool pretty = false);

/// {"t","m_plus","m_minus","m","class","partial"}.
std::string detsign_report_json(const Classification& c, bool pretty = false);

/// {"reaction_form","jacobian_has_sign_pattern","witness","su_sign_pattern"}.
std::string jacobian_report_json(const ReactionFormResult& rf,
                                 const JacobianSignResult& js,
                                 bool pretty = false);

std::string coredet_report_json(const CoreDetReport& r, bool pretty = false);

/// Graph summary: sizes, edge signs, components, cycle census, shape flags.
std::string graph_report_json(const SignedBipartiteGraph& g,
                              std::int64_t limit, bool pretty = false);

}  // namespace signdet
