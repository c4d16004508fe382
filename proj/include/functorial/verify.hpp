#pragma once

#include "functorial/relations.hpp"
#include "functorial/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace functorial {

struct RelationStep {
    std::string relation; // catalog tag, e.g. "eq:idem-KLR2"
    std::string params;   // printable subset/label parameters
    ScalarExpr factor;
};

/// One machine-checkable identity: an initial normalization scalar (from the
/// Reidemeister foam scaling) followed by the relation factors of the
/// simplification chain. Verification multiplies everything and compares
/// with 1.
struct IdentityScript {
    std::string move;    // "R2+", "MM8", ...
    std::string variant; // which displayed version
    std::string labels;  // e.g. "a=3 b=2 c=1"
    ScalarExpr initial = ScalarExpr::one();
    std::vector<RelationStep> steps;
};

inline ScalarExpr script_product(const IdentityScript& s) {
    ScalarExpr p = s.initial;
    for (const auto& st : s.steps) p *= st.factor;
    return p;
}

inline bool verify_identity(const IdentityScript& s) { return script_product(s).is_one(); }

struct VerifyCase {
    std::string move, variant, labels;
    bool pass;
    std::string residual; // normal form of the product when it is not 1
};

struct VerifyReport {
    std::vector<VerifyCase> cases;
    int failures = 0;
};

/// Normalization scalar the construction attaches to a Reidemeister foam.
/// R1 (writhe-increasing side): omega_A. R2 (both orientations): the sign
/// eps = (-1)^{min(a,b)|a-b|}. R3: inverse r-factors of the two difference
/// subsets singled out by the strand ordering.
ScalarExpr reidemeister_scalar(const std::string& move, const std::vector<int>& labels, int N,
                               const SignConvention& sc = {});

/// Inverse-pair and movie-move scripts on simple resolutions, for one label
/// tuple. Labels index strand colors; subsets are the favourite coloring.
IdentityScript script_r1_pair(int a, int N, const SignConvention& sc = {});
IdentityScript script_r2p_pair(int a, int b, const SignConvention& sc = {});
IdentityScript script_r2m_pair(int a, int b, const SignConvention& sc = {});
IdentityScript script_r3p_pair(int a, int b, int c, const SignConvention& sc = {});
IdentityScript script_r3m_pair(int a, int b, int c, const SignConvention& sc = {});
IdentityScript script_mm6_v1(int a, int b, int c, const SignConvention& sc = {});
IdentityScript script_mm6_v2(int a, int b, int c, const SignConvention& sc = {});
IdentityScript script_mm7(int a, int N, const SignConvention& sc = {});
IdentityScript script_mm8(int a, int b, int N, const SignConvention& sc = {});
IdentityScript script_mm9(int a, int b, bool parallel, const SignConvention& sc = {});
IdentityScript script_mm10(int a, int b, int c, int d, const SignConvention& sc = {});
IdentityScript script_mm11();
IdentityScript script_mm12(int a, int N, const SignConvention& sc = {});
IdentityScript script_mm13(int a, int N, const SignConvention& sc = {});
IdentityScript script_mm14(int a, int b, const SignConvention& sc = {});
IdentityScript script_mm15(int a, int b, const SignConvention& sc = {});

/// Elementary-scalar identities (antisymmetry, multiplicativity, overlap
/// vanishing, omega sign coherence, relation-inverse cancellation), checked
/// symbolically; part of the verification sweep and of its mutation
/// sensitivity.
VerifyReport verify_scalar_identities(int max_size, int N, const SignConvention& sc = {});

/// Full sweep: scalar identities, all Reidemeister inverse pairs, and all
/// transcribed movie-move scripts for labels up to max_label over an
/// N-element Sigma of indeterminates.
VerifyReport verify_movie_moves(int max_label, int N, const SignConvention& sc = {});

} // namespace functorial
